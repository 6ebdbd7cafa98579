#include "ind4/circular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ind4/catalog.hpp"
#include "ind4/kernels.hpp"

namespace ind4 {

namespace {

// Unions of arcs on [0,1), kept as sorted non-wrapping half-open intervals.
using Arcs = std::vector<std::pair<double, double>>;

void push_arc(Arcs& out, double lo, double hi) {
  if (hi - lo >= 1.0 - 1e-15) {
    out.push_back({0.0, 1.0});
    return;
  }
  if (hi <= lo) return;
  double len = hi - lo;
  lo -= std::floor(lo);
  hi = lo + len;
  if (hi <= 1.0) {
    out.push_back({lo, hi});
  } else {
    out.push_back({lo, 1.0});
    out.push_back({0.0, hi - 1.0});
  }
}

// Region of the unknown endpoint t for pair state s against a fixed point x.
// known_first: the fixed point is the first label of the pair.
Arcs state_region(double x, int s, double alpha, bool known_first) {
  Arcs r;
  bool fwd_from_known = (s == 1) == known_first;  // arc known -> t
  if (s == 0) {
    push_arc(r, x + alpha, x + 1.0 - alpha);
  } else if (fwd_from_known) {
    push_arc(r, x, x + alpha);
  } else {
    push_arc(r, x - alpha, x);
  }
  return r;
}

Arcs intersect(const Arcs& a, const Arcs& b) {
  Arcs r;
  for (const auto& [al, ah] : a)
    for (const auto& [bl, bh] : b) {
      double lo = std::max(al, bl), hi = std::min(ah, bh);
      if (hi > lo) r.push_back({lo, hi});
    }
  std::sort(r.begin(), r.end());
  return r;
}

double measure(const Arcs& a) {
  double m = 0;
  for (const auto& [lo, hi] : a) m += hi - lo;
  return m;
}

struct PatternIntegrand {
  double alpha;
  int s01, s02, s03, s12, s13, s23;

  // measure of the u3 region for fixed (u1, u2)
  double inner(double u1, double u2) const {
    Arcs a3 = state_region(0.0, s03, alpha, true);
    Arcs b3 = state_region(u1, s13, alpha, true);
    Arcs c3 = state_region(u2, s23, alpha, true);
    return measure(intersect(intersect(a3, b3), c3));
  }

  // exact integral over u2 for fixed u1 (the integrand is piecewise affine
  // in u2; pieces split where an endpoint of the moving region C3 meets an
  // endpoint of the fixed region A3 n B3)
  double middle(double u1) const {
    Arcs dom = intersect(state_region(0.0, s02, alpha, true),
                         state_region(u1, s12, alpha, true));
    if (dom.empty()) return 0.0;
    Arcs fixed3 = intersect(state_region(0.0, s03, alpha, true),
                            state_region(u1, s13, alpha, true));
    std::vector<double> cuts;
    double offsets[4] = {0.0, alpha, -alpha, 1.0 - alpha};
    for (const auto& [lo, hi] : fixed3)
      for (double e : {lo, hi})
        for (double c : offsets) {
          double v = e - c;
          v -= std::floor(v);
          cuts.push_back(v);
        }
    std::sort(cuts.begin(), cuts.end());
    double total = 0;
    for (const auto& [dl, dh] : dom) {
      std::vector<double> pts = {dl, dh};
      for (double c : cuts)
        if (c > dl + 1e-14 && c < dh - 1e-14) pts.push_back(c);
      std::sort(pts.begin(), pts.end());
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double l = pts[i], h = pts[i + 1];
        if (h - l < 1e-15) continue;
        total += (h - l) * inner(u1, 0.5 * (l + h));
      }
    }
    return total;
  }
};

// Gauss-Legendre 3-point nodes on [0,1]
constexpr double kGL3x[3] = {0.1127016653792583, 0.5, 0.8872983346207417};
constexpr double kGL3w[3] = {5.0 / 18, 8.0 / 18, 5.0 / 18};

double integrate_pattern(const PatternIntegrand& pi, int resolution) {
  Arcs dom1 = state_region(0.0, pi.s01, pi.alpha, true);
  if (dom1.empty()) return 0.0;
  // u1 breakpoints: small integer combinations of alpha shifted mod 1
  std::vector<double> cuts;
  for (int i = -8; i <= 8; ++i)
    for (int m = -1; m <= 1; ++m) {
      double v = i * pi.alpha + m;
      v -= std::floor(v);
      if (v > 0 && v < 1) cuts.push_back(v);
    }
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  for (const auto& [dl, dh] : dom1) {
    std::vector<double> pts = {dl, dh};
    for (double c : cuts)
      if (c > dl + 1e-14 && c < dh - 1e-14) pts.push_back(c);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      double l = pts[i], h = pts[i + 1];
      if (h - l < 1e-15) continue;
      int sub = std::max(1, int(std::ceil((h - l) * resolution)));
      for (int s = 0; s < sub; ++s) {
        double sl = l + (h - l) * s / sub, sh = l + (h - l) * (s + 1) / sub;
        for (int g = 0; g < 3; ++g)
          total += (sh - sl) * kGL3w[g] * pi.middle(sl + (sh - sl) * kGL3x[g]);
      }
    }
  }
  return total;
}

void pattern_states(int code, int st[6]) {
  for (int p = 0; p < 6; ++p) {
    st[p] = code % 3;
    code /= 3;
  }
}

}  // namespace

double circular_density(int class_id, const Rat& alpha, int resolution) {
  if (class_id < 0 || class_id >= 42) throw std::invalid_argument("class id out of range");
  if (alpha < 0 || alpha > Rat(1, 2))
    throw std::invalid_argument("circular_density: alpha in [0, 1/2] required");
  const auto& cat = Catalog4::get();
  double a = to_double(alpha);
  double total = 0;
  for (int code = 0; code < 729; ++code) {
    if (cat.class_of_code(code) != class_id) continue;
    int st[6];
    pattern_states(code, st);
    PatternIntegrand pi{a, st[0], st[1], st[2], st[3], st[4], st[5]};
    total += integrate_pattern(pi, resolution);
  }
  return total;
}

std::array<double, 42> circular_class_densities(const Rat& alpha, int resolution) {
  std::array<double, 42> out{};
  const auto& cat = Catalog4::get();
  double a = to_double(alpha);
  for (int code = 0; code < 729; ++code) {
    int st[6];
    pattern_states(code, st);
    PatternIntegrand pi{a, st[0], st[1], st[2], st[3], st[4], st[5]};
    out[std::size_t(cat.class_of_code(code))] += integrate_pattern(pi, resolution);
  }
  return out;
}

std::array<double, 42> circular_profile_grid(const Rat& alpha, int resolution) {
  if (resolution < 2) throw std::invalid_argument("grid resolution too small");
  std::vector<double> pos;
  pos.resize(std::size_t(resolution));
  for (int i = 0; i < resolution; ++i) pos[std::size_t(i)] = (i + 0.5) / resolution;
  std::uint64_t counts[42] = {0};
  kern::circle_grid(to_double(alpha), pos.data(), std::uint32_t(resolution),
                    Catalog4::get().lut32(), counts);
  std::array<double, 42> out{};
  double cells = double(resolution) * resolution * resolution;
  for (int c = 0; c < 42; ++c) out[std::size_t(c)] = double(counts[c]) / cells;
  return out;
}

}  // namespace ind4
