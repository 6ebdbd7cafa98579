#include "ind4/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "ind4/catalog.hpp"
#include "ind4/enumerate.hpp"
#include "ind4/profile.hpp"

namespace ind4 {

namespace {

using Mat = std::vector<std::vector<double>>;

Mat zeros(std::size_t n) { return Mat(n, std::vector<double>(n, 0.0)); }

// cyclic Jacobi eigendecomposition for small symmetric matrices
void jacobi_eigen(Mat a, std::vector<double>& eval, Mat& evec) {
  std::size_t n = a.size();
  evec = zeros(n);
  for (std::size_t i = 0; i < n; ++i) evec[i][i] = 1.0;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-15) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = evec[k][p], vkq = evec[k][q];
          evec[k][p] = c * vkp - s * vkq;
          evec[k][q] = s * vkp + c * vkq;
        }
      }
  }
  eval.resize(n);
  for (std::size_t i = 0; i < n; ++i) eval[i] = a[i][i];
}

// nearest PSD matrix: clamp negative eigenvalues
Mat psd_project(const Mat& a) {
  std::vector<double> ev;
  Mat v;
  jacobi_eigen(a, ev, v);
  std::size_t n = a.size();
  Mat out = zeros(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (ev[k] <= 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += ev[k] * v[i][k] * v[j][k];
  }
  // fix tiny asymmetry from rounding
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out[i][j] = out[j][i] = 0.5 * (out[i][j] + out[j][i]);
  return out;
}

// sparse pair-count table (i, j) -> count, plus the split normalizer
struct HostBlockData {
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> counts;
  std::uint64_t splits = 0;
};

std::vector<std::vector<std::uint32_t>> type_injections(const FlagType& type,
                                                        const OrientedGraph& g) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint32_t n = g.size();
  int s = type.s;
  std::vector<std::uint32_t> sel;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == s) {
      out.push_back(sel);
      return;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i)
        if (g.pair_state(sel[std::size_t(i)], v) !=
            type.graph.pair_state(std::uint32_t(i), std::uint32_t(depth)))
          ok = false;
      if (!ok) continue;
      used[v] = true;
      sel.push_back(v);
      self(self, depth + 1);
      sel.pop_back();
      used[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

HostBlockData host_block_data(const FlagType& type, std::uint32_t m,
                              const std::map<std::vector<std::uint8_t>, int>& id_of,
                              const OrientedGraph& g) {
  HostBlockData out;
  auto thetas = type_injections(type, g);
  if (thetas.empty()) return out;
  std::uint32_t k1 = m - std::uint32_t(type.s);
  std::map<std::pair<int, int>, std::uint64_t> counts;
  for (const auto& theta : thetas) {
    std::vector<std::uint32_t> rest;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (std::find(theta.begin(), theta.end(), v) == theta.end()) rest.push_back(v);
    std::vector<std::uint32_t> idx(k1);
    for (std::uint32_t i = 0; i < k1; ++i) idx[i] = i;
    while (true) {
      std::vector<std::uint32_t> v1 = theta, v2 = theta;
      for (std::uint32_t i = 0, t = 0; i < rest.size(); ++i) {
        if (t < k1 && idx[t] == i) {
          v1.push_back(rest[i]);
          ++t;
        } else {
          v2.push_back(rest[i]);
        }
      }
      ++out.splits;
      auto it1 = id_of.find(label_fixed_canonical(g.induced(v1), type.s));
      auto it2 = id_of.find(label_fixed_canonical(g.induced(v2), type.s));
      if (it1 != id_of.end() && it2 != id_of.end()) ++counts[{it1->second, it2->second}];
      if (k1 == 0) break;
      int p = int(k1) - 1;
      while (p >= 0 && idx[std::size_t(p)] == rest.size() - k1 + std::uint32_t(p)) --p;
      if (p < 0) break;
      ++idx[std::size_t(p)];
      for (std::uint32_t t = std::uint32_t(p) + 1; t < k1; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  out.counts.assign(counts.begin(), counts.end());
  return out;
}

}  // namespace

std::pair<Rat, FlagCertificate> heuristic_sdp_bound(const OrientedGraph& target, int N,
                                                    const std::vector<int>& type_orders,
                                                    std::uint64_t seed, int iterations) {
  if (N != 5) throw std::invalid_argument("heuristic bound generator supports N = 5");
  for (int s : type_orders)
    if (s != 1 && s != 3) throw std::invalid_argument("type orders must lie in {1, 3}");

  FlagCertificate trivial = trivial_certificate(target, N);
  Rat trivial_lambda = trivial.lambda;

  // block setup: one block per isomorphism class of types of each order
  struct Block {
    FlagType type;
    std::vector<OrientedGraph> flags;
    std::map<std::vector<std::uint8_t>, int> id_of;
    std::uint32_t m;
  };
  std::vector<Block> blocks;
  for (int s : type_orders) {
    for (const auto& tg : enumerate_classes(s)) {
      Block b;
      b.type = FlagType{s, tg};
      b.m = std::uint32_t((N + s) / 2);
      for (const auto& f : enumerate_flags(b.type, int(b.m))) {
        b.id_of.emplace(label_fixed_canonical(f.graph, s), int(b.flags.size()));
        b.flags.push_back(f.graph);
      }
      blocks.push_back(std::move(b));
    }
  }

  // per-host data
  const auto& cat = Catalog4::get();
  int cls = cat.class_of(target);
  auto hosts = enumerate_classes(N);
  std::size_t H = hosts.size();
  std::vector<double> dvec(H);
  std::vector<Rat> dvec_exact(H);
  Rat quads(binom(std::uint64_t(N), 4));
  std::vector<std::vector<HostBlockData>> data(H);
  for (std::size_t h = 0; h < H; ++h) {
    dvec_exact[h] =
        Rat(count_induced_naive(cat.classes()[std::size_t(cls)].canon, hosts[h])) / quads;
    dvec[h] = to_double(dvec_exact[h]);
    data[h].reserve(blocks.size());
    for (const auto& b : blocks) data[h].push_back(host_block_data(b.type, b.m, b.id_of, hosts[h]));
  }

  // projected subgradient descent on the block matrices
  std::vector<Mat> Q;
  for (const auto& b : blocks) Q.push_back(zeros(b.flags.size()));
  std::mt19937_64 rng(seed);
  (void)rng;

  auto host_value = [&](std::size_t h) {
    double v = dvec[h];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (data[h][b].splits == 0) continue;
      double acc = 0;
      for (const auto& [ij, c] : data[h][b].counts)
        acc += double(c) * Q[b][std::size_t(ij.first)][std::size_t(ij.second)];
      v += acc / double(data[h][b].splits);
    }
    return v;
  };

  double best_val = 1e300;
  std::vector<Mat> best_Q = Q;
  for (int it = 0; it < iterations; ++it) {
    // current maximum and the active set
    double mx = -1e300;
    std::vector<double> vals(H);
    for (std::size_t h = 0; h < H; ++h) {
      vals[h] = host_value(h);
      mx = std::max(mx, vals[h]);
    }
    if (mx < best_val) {
      best_val = mx;
      best_Q = Q;
    }
    double eps = 0.02 * std::pow(0.995, it);
    std::vector<std::size_t> active;
    for (std::size_t h = 0; h < H; ++h)
      if (vals[h] > mx - eps) active.push_back(h);
    double step = 0.5 / std::pow(double(it) + 10.0, 0.7) / double(active.size());
    for (std::size_t h : active) {
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (data[h][b].splits == 0) continue;
        double f = step / double(data[h][b].splits);
        for (const auto& [ij, c] : data[h][b].counts)
          Q[b][std::size_t(ij.first)][std::size_t(ij.second)] -= f * double(c);
      }
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      // re-symmetrize before projecting
      std::size_t nb = Q[b].size();
      for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j)
          Q[b][i][j] = Q[b][j][i] = 0.5 * (Q[b][i][j] + Q[b][j][i]);
      Q[b] = psd_project(Q[b]);
    }
  }

  // rationalize the best iterate and recompute lambda exactly
  FlagCertificate cert;
  cert.target = format_graph(target);
  cert.N = N;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    CertBlock cb;
    cb.type = blocks[b].type;
    cb.flags = blocks[b].flags;
    std::size_t nb = blocks[b].flags.size();
    cb.Q.assign(nb, std::vector<Rat>(nb, Rat(0)));
    // diagonal-dominance shift guarantees exact PSD after rounding
    std::size_t denom = 1000000;
    Rat shift(nb + 1, denom);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        cb.Q[i][j] = rat_from_double(best_Q[b][i][j], std::int64_t(denom));
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = i + 1; j < nb; ++j) {
        Rat avg = (cb.Q[i][j] + cb.Q[j][i]) / 2;
        cb.Q[i][j] = cb.Q[j][i] = avg;
      }
    for (std::size_t i = 0; i < nb; ++i) cb.Q[i][i] += shift;
    cert.blocks.push_back(std::move(cb));
  }
  // exact lambda: max over hosts of d + <Q, M>, plus a safety margin
  Rat lambda(-1);
  for (std::size_t h = 0; h < H; ++h) {
    Rat v = dvec_exact[h];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (data[h][b].splits == 0) continue;
      Rat acc(0);
      for (const auto& [ij, c] : data[h][b].counts) {
        const Rat& q = cert.blocks[b].Q[std::size_t(ij.first)][std::size_t(ij.second)];
        if (q != 0) acc += q * Rat(c);
      }
      v += acc / Rat(data[h][b].splits);
    }
    lambda = std::max(lambda, v);
  }
  cert.lambda = lambda + Rat(1, 1000000000);

  if (cert.lambda >= trivial_lambda) return {trivial_lambda, trivial};
  return {cert.lambda, cert};
}

}  // namespace ind4
