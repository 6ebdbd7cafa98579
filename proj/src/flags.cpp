#include "ind4/flags.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ind4 {

std::vector<std::uint8_t> label_fixed_canonical(const OrientedGraph& g, int s) {
  std::uint32_t n = g.size();
  if (s < 0 || std::uint32_t(s) > n) throw std::invalid_argument("bad label count");
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::uint8_t> best;
  do {
    std::vector<std::uint8_t> enc;
    enc.reserve(std::size_t(n) * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        enc.push_back(std::uint8_t(g.pair_state(perm[i], perm[j])));
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin() + s, perm.end()));
  return best;
}

std::vector<Flag> enumerate_flags(const FlagType& type, int m) {
  if (type.s < 0 || type.graph.size() != std::uint32_t(type.s))
    throw std::invalid_argument("flag type graph must live on its s labels");
  if (m < type.s || m > 5) throw std::invalid_argument("enumerate_flags: s <= m <= 5 required");
  int s = type.s;
  // pairs to fill: everything outside the type block
  std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (j >= s) free_pairs.push_back({std::uint32_t(i), std::uint32_t(j)});

  std::set<std::vector<std::uint8_t>> seen;
  std::vector<std::uint8_t> fill(free_pairs.size(), 0);
  while (true) {
    OrientedGraph g{std::uint32_t(m)};
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        g.set_pair(std::uint32_t(i), std::uint32_t(j), type.graph.pair_state(std::uint32_t(i), std::uint32_t(j)));
    for (std::size_t t = 0; t < free_pairs.size(); ++t)
      g.set_pair(free_pairs[t].first, free_pairs[t].second, fill[t]);
    seen.insert(label_fixed_canonical(g, s));
    std::size_t pos = 0;
    while (pos < fill.size() && fill[pos] == 2) fill[pos++] = 0;
    if (pos == fill.size()) break;
    ++fill[pos];
  }
  std::vector<Flag> out;
  for (const auto& enc : seen) out.push_back({type, graph_from_encoding(std::uint32_t(m), enc)});
  return out;
}

namespace {

// all ordered injections of 0..s-1 into V(g) that induce the type exactly
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

bool matches_flag(const Flag& f, const OrientedGraph& g,
                  const std::vector<std::uint32_t>& theta,
                  const std::vector<std::uint32_t>& block,
                  const std::vector<std::uint8_t>& flag_key) {
  std::vector<std::uint32_t> verts = theta;
  verts.insert(verts.end(), block.begin(), block.end());
  OrientedGraph sub = g.induced(verts);
  return label_fixed_canonical(sub, f.type.s) == flag_key;
}

}  // namespace

Rat pair_density(const Flag& f1, const Flag& f2, const OrientedGraph& g) {
  if (!(f1.type == f2.type)) throw std::invalid_argument("pair_density: flags must share a type");
  int s = f1.type.s;
  std::uint32_t m1 = f1.graph.size(), m2 = f2.graph.size();
  if (m1 + m2 - std::uint32_t(s) != g.size())
    throw std::invalid_argument("pair_density: |F1| + |F2| - s must equal |G|");
  auto thetas = type_injections(f1.type, g);
  if (thetas.empty()) return Rat(0);
  auto key1 = label_fixed_canonical(f1.graph, s);
  auto key2 = label_fixed_canonical(f2.graph, s);

  std::uint64_t hits = 0, splits = 0;
  std::uint32_t k1 = m1 - std::uint32_t(s);
  for (const auto& theta : thetas) {
    std::vector<std::uint32_t> rest;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (std::find(theta.begin(), theta.end(), v) == theta.end()) rest.push_back(v);
    // all k1-subsets of rest for block 1
    std::vector<std::uint32_t> idx(k1);
    for (std::uint32_t i = 0; i < k1; ++i) idx[i] = i;
    std::uint64_t local_splits = 0;
    while (true) {
      std::vector<std::uint32_t> b1, b2;
      for (std::uint32_t i = 0, t = 0; i < rest.size(); ++i) {
        if (t < k1 && idx[t] == i) {
          b1.push_back(rest[i]);
          ++t;
        } else {
          b2.push_back(rest[i]);
        }
      }
      ++local_splits;
      if (matches_flag(f1, g, theta, b1, key1) && matches_flag(f2, g, theta, b2, key2)) ++hits;
      // next combination
      if (k1 == 0) break;
      int p = int(k1) - 1;
      while (p >= 0 && idx[std::size_t(p)] == rest.size() - k1 + std::uint32_t(p)) --p;
      if (p < 0) break;
      ++idx[std::size_t(p)];
      for (std::uint32_t t = std::uint32_t(p) + 1; t < k1; ++t) idx[t] = idx[t - 1] + 1;
    }
    splits += local_splits;
  }
  return Rat(hits, splits);
}

Rat flag_density(const Flag& f, const OrientedGraph& g) {
  int s = f.type.s;
  std::uint32_t m = f.graph.size();
  if (g.size() < m) return Rat(0);
  auto thetas = type_injections(f.type, g);
  if (thetas.empty()) return Rat(0);
  auto key = label_fixed_canonical(f.graph, s);
  std::uint32_t k = m - std::uint32_t(s);
  std::uint64_t hits = 0, picks = 0;
  for (const auto& theta : thetas) {
    std::vector<std::uint32_t> rest;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (std::find(theta.begin(), theta.end(), v) == theta.end()) rest.push_back(v);
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<std::uint32_t> b;
      for (std::uint32_t t = 0; t < k; ++t) b.push_back(rest[idx[t]]);
      ++picks;
      if (matches_flag(f, g, theta, b, key)) ++hits;
      if (k == 0) break;
      int p = int(k) - 1;
      while (p >= 0 && idx[std::size_t(p)] == rest.size() - k + std::uint32_t(p)) --p;
      if (p < 0) break;
      ++idx[std::size_t(p)];
      for (std::uint32_t t = std::uint32_t(p) + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return Rat(hits, picks);
}

}  // namespace ind4
