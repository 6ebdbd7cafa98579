#include "ind4/realize.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ind4 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t tag, std::uint64_t idx) {
  return splitmix64(splitmix64(seed ^ (tag * 0x9e3779b97f4a7c15ull)) + idx);
}

double rat_poly_eval(const Poly<Rat>& p, double x) {
  double acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x + to_double(p.c[i]);
  return acc;
}

struct Realizer {
  OrientedGraph& g;
  const RealizeOptions& opt;

  void fill_tournament_rotational(std::uint32_t off, std::uint32_t m) {
    // odd m: the rotational regular tournament; even m: near-regular, the
    // distance-m/2 pairs oriented from the lower half
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t d = 1; 2 * d < m; ++d) g.add_arc(off + i, off + (i + d) % m);
    if (m % 2 == 0 && m >= 2)
      for (std::uint32_t i = 0; 2 * i < m; ++i) g.add_arc(off + i, off + i + m / 2);
  }

  void fill_transitive(std::uint32_t off, std::uint32_t m) {
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = i + 1; j < m; ++j) g.add_arc(off + i, off + j);
  }

  void fill_random_tournament(std::uint32_t off, std::uint32_t m, std::uint64_t stream) {
    std::mt19937_64 rng(stream);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = i + 1; j < m; ++j) {
        if (rng() & 1)
          g.add_arc(off + i, off + j);
        else
          g.add_arc(off + j, off + i);
      }
  }

  void fill_circular(std::uint32_t off, std::uint32_t m, const Rat& alpha) {
    if (m <= 1) return;
    Rat am = alpha * m;  // floor via exact division, alpha >= 0
    BigInt fl = numerator(am) / denominator(am);
    std::uint32_t k = fl.convert_to<std::uint32_t>();
    if (2 * k >= m)
      throw std::invalid_argument("circular realization: 2*floor(alpha*m) >= m breaks antisymmetry");
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t d = 1; d <= k; ++d) g.add_arc(off + i, off + (i + d) % m);
  }

  void build(const ConstructionSpec& spec, std::uint32_t off, std::uint32_t n,
             std::uint64_t seed) {
    std::vector<Rat> weights;
    weights.reserve(spec.parts.size());
    for (const auto& p : spec.parts) weights.push_back(p.weight);
    auto sizes = apportion(weights, n);

    std::vector<std::uint32_t> start(spec.parts.size());
    std::uint32_t cur = off;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      start[i] = cur;
      cur += sizes[i];
    }

    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      const Part& p = spec.parts[i];
      std::uint32_t m = sizes[i], o = start[i];
      if (m == 0) continue;
      switch (p.kind) {
        case PartKind::empty: break;
        case PartKind::transitive: fill_transitive(o, m); break;
        case PartKind::random_tournament:
          fill_random_tournament(o, m, derive(seed, 0x52414e44, i));
          break;
        case PartKind::regular_tournament:
          if (m % 2 == 0 && opt.strict_regular)
            throw std::invalid_argument("regular tournament part got an even size in strict mode");
          fill_tournament_rotational(o, m);
          break;
        case PartKind::arbitrary_tournament:
          if (opt.randomize_arbitrary)
            fill_random_tournament(o, m, derive(seed, 0x41524254, i));
          else
            fill_transitive(o, m);
          break;
        case PartKind::iterate:
          if (m >= opt.iterate_floor) build(spec, o, m, derive(seed, 0x49544552, i));
          break;  // tiny budgets stay empty, an O(1/n) effect
        case PartKind::circular: fill_circular(o, m, p.alpha); break;
        case PartKind::sub: build(*p.sub, o, m, derive(seed, 0x53554221, i)); break;
      }
    }

    for (std::size_t r = 0; r < spec.arcs.size(); ++r) {
      const ArcRule& rule = spec.arcs[r];
      std::size_t ia = std::size_t(spec.part_index(rule.from));
      std::size_t ib = std::size_t(spec.part_index(rule.to));
      std::uint32_t ma = sizes[ia], mb = sizes[ib];
      if (ma == 0 || mb == 0) continue;
      bool from_transitive = spec.parts[ia].kind == PartKind::transitive;
      std::mt19937_64 rng(derive(seed, 0x52554c45, r));
      auto unit = [&]() { return double(rng() >> 11) * 0x1.0p-53; };
      for (std::uint32_t a = 0; a < ma; ++a) {
        double xa = double(a + 1) / double(ma + 1);
        for (std::uint32_t b = 0; b < mb; ++b) {
          double prob;
          if (rule.is_poly) {
            double x = from_transitive ? xa : double(b + 1) / double(mb + 1);
            prob = std::clamp(rat_poly_eval(rule.poly, x), 0.0, 1.0);
          } else {
            prob = to_double(rule.prob);
          }
          std::uint32_t u = start[ia] + a, v = start[ib] + b;
          if (rule.mode == ArcMode::directed) {
            bool hit = prob >= 1.0 ? true : (prob <= 0.0 ? false : unit() < prob);
            if (hit) g.add_arc(u, v);
          } else {
            bool fwd = prob >= 1.0 ? true : (prob <= 0.0 ? false : unit() < prob);
            if (fwd)
              g.add_arc(u, v);
            else
              g.add_arc(v, u);
          }
        }
      }
    }
  }
};

}  // namespace

std::vector<std::uint32_t> apportion(const std::vector<Rat>& weights, std::uint32_t n) {
  std::vector<std::uint32_t> sizes(weights.size());
  std::vector<Rat> rem(weights.size());
  std::uint32_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Rat exact = weights[i] * n;
    BigInt fl = numerator(exact) / denominator(exact);
    sizes[i] = fl.convert_to<std::uint32_t>();
    rem[i] = exact - Rat(fl);
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
  for (std::size_t t = 0; assigned < n; ++t) ++sizes[order[t % order.size()]], ++assigned;
  return sizes;
}

OrientedGraph realize(const ConstructionSpec& spec, std::uint32_t n, std::uint64_t seed,
                      const RealizeOptions& opt) {
  require_valid(spec);
  if (n < 1) throw std::invalid_argument("realize: n >= 1 required");
  OrientedGraph g(n);
  Realizer rz{g, opt};
  rz.build(spec, 0, n, seed);
  return g;
}

}  // namespace ind4
