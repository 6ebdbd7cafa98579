#include "ind4/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ind4/canonical.hpp"
#include "ind4/catalog.hpp"
#include "ind4/enumerate.hpp"
#include "ind4/profile.hpp"
#include "ind4/rational.hpp"

namespace ind4 {

namespace {

std::uint64_t class_count(const OrientedGraph& g, int class_id) {
  const auto& cat = Catalog4::get();
  std::uint32_t n = g.size();
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t c = b + 1; c < n; ++c)
        for (std::uint32_t d = c + 1; d < n; ++d) {
          int code = g.pair_state(a, b) + 3 * g.pair_state(a, c) + 9 * g.pair_state(a, d) +
                     27 * g.pair_state(b, c) + 81 * g.pair_state(b, d) +
                     243 * g.pair_state(c, d);
          count += cat.class_of_code(code) == class_id;
        }
  return count;
}

void check_range(int n) {
  if (n < 4 || n > 7) throw std::invalid_argument("exhaustive search needs n in 4..7");
}

}  // namespace

SearchReport exhaustive_max(int class_id, int n, bool allow_seven, std::size_t witness_cap) {
  check_range(n);
  if (n == 7 && !allow_seven)
    throw std::invalid_argument("n = 7 exhaustive search is opt-in (expect a long run)");
  SearchReport rep;
  rep.class_id = class_id;
  rep.n = std::uint32_t(n);
  rep.method = "exhaustive";
  enumerate_classes_stream(n, [&](const OrientedGraph& g) {
    std::uint64_t c = class_count(g, class_id);
    if (c > rep.max_count) {
      rep.max_count = c;
      rep.witnesses.clear();
      rep.witnesses_capped = false;
    }
    if (c == rep.max_count && c > 0) {
      if (rep.witnesses.size() < witness_cap)
        rep.witnesses.push_back(g);
      else
        rep.witnesses_capped = true;
    }
  });
  rep.max_density = double(rep.max_count) / double(binom_u64(std::uint64_t(n), 4));
  return rep;
}

std::array<std::uint64_t, 42> exhaustive_max_counts(int n, bool allow_seven) {
  check_range(n);
  if (n == 7 && !allow_seven)
    throw std::invalid_argument("n = 7 exhaustive search is opt-in (expect a long run)");
  std::array<std::uint64_t, 42> best{};
  enumerate_classes_stream(n, [&](const OrientedGraph& g) {
    Profile4 p = profile4_exact(g, 1);
    for (int c = 0; c < 42; ++c)
      best[std::size_t(c)] = std::max(best[std::size_t(c)], p.counts[std::size_t(c)]);
  });
  return best;
}

namespace {

struct Climber {
  int class_id;
  std::uint32_t n;
  std::uint64_t budget_left;
  std::set<std::vector<std::uint8_t>> visited;

  std::uint64_t eval(const OrientedGraph& g) {
    if (budget_left) --budget_left;
    return class_count(g, class_id);
  }

  // twin classes: vertices grouped by their full relation vector
  std::vector<std::vector<std::uint32_t>> twin_classes(const OrientedGraph& g) const {
    std::map<std::vector<int>, std::vector<std::uint32_t>> groups;
    for (std::uint32_t v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (std::uint32_t u = 0; u < n; ++u) {
        if (u == v) continue;
        sig.push_back(g.pair_state(v, u));
      }
      groups[sig].push_back(v);
    }
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& [sig, vs] : groups)
      if (vs.size() >= 2) out.push_back(vs);
    return out;
  }

  bool step(OrientedGraph& g, std::uint64_t& cur) {
    OrientedGraph best_g = g;
    std::uint64_t best_c = cur;
    bool found = false;
    auto consider = [&](const OrientedGraph& cand) {
      if (!budget_left) return;
      std::uint64_t c = eval(cand);
      if (c < cur || c < best_c) return;
      if (c == best_c && found) return;  // first-best tie rule
      auto key = canonical_encoding(cand);
      if (visited.count(key)) return;
      best_g = cand;
      best_c = c;
      found = true;
    };

    // single pair-state changes
    for (std::uint32_t i = 0; i < n && budget_left; ++i)
      for (std::uint32_t j = i + 1; j < n && budget_left; ++j) {
        int s0 = g.pair_state(i, j);
        for (int s = 0; s < 3; ++s) {
          if (s == s0) continue;
          OrientedGraph cand = g;
          cand.set_pair(i, j, s);
          consider(cand);
        }
      }
    // clone-symmetrize: copy w's relations onto v
    for (std::uint32_t v = 0; v < n && budget_left; ++v)
      for (std::uint32_t w = 0; w < n && budget_left; ++w) {
        if (v == w) continue;
        OrientedGraph cand = g;
        for (std::uint32_t u = 0; u < n; ++u) {
          if (u == v || u == w) continue;
          cand.set_pair(v, u, g.pair_state(w, u));
        }
        consider(cand);
      }
    // twin-class reorientation
    auto classes = twin_classes(g);
    for (std::size_t a = 0; a < classes.size() && budget_left; ++a)
      for (std::size_t b = 0; b < classes.size() && budget_left; ++b) {
        if (a == b) continue;
        OrientedGraph cand = g;
        for (std::uint32_t u : classes[a])
          for (std::uint32_t v : classes[b]) cand.set_pair(u, v, 1);
        consider(cand);
      }

    if (!found) return false;
    g = best_g;
    cur = best_c;
    visited.insert(canonical_encoding(g));
    return true;
  }
};

}  // namespace

SearchReport local_search(int class_id, std::uint32_t n, std::uint64_t seed,
                          std::uint64_t budget) {
  if (n < 4) throw std::invalid_argument("local search needs n >= 4");
  if (n > kCanonicalMaxN)
    throw std::invalid_argument("local search bookkeeping is limited to n <= 10");
  SearchReport rep;
  rep.class_id = class_id;
  rep.n = n;
  rep.method = "local(seed=" + std::to_string(seed) + ",budget=" + std::to_string(budget) + ")";
  std::mt19937_64 rng(seed);
  Climber climber{class_id, n, budget, {}};

  OrientedGraph best_g(n);
  std::uint64_t best_c = 0;
  bool have = false;
  while (climber.budget_left) {
    OrientedGraph g(n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) g.set_pair(i, j, int(rng() % 3));
    std::uint64_t cur = climber.eval(g);
    climber.visited.clear();
    climber.visited.insert(canonical_encoding(g));
    while (climber.budget_left && climber.step(g, cur)) {
    }
    if (!have || cur > best_c) {
      best_c = cur;
      best_g = g;
      have = true;
    }
  }
  rep.max_count = best_c;
  rep.max_density = double(best_c) / double(binom_u64(n, 4));
  rep.witnesses.push_back(canonical_form(best_g));
  return rep;
}

namespace {

bool run_checks(const OrientedGraph& g, IneqReport& rep) {
  const auto& cat = Catalog4::get();
  static const int h25 = cat.id_of_string("4:1323344142");
  static const int h29 = cat.id_of_string("4:121323243441");
  std::uint32_t n = g.size();
  ++rep.graphs_checked;

  // (a) 2 N(H25, G) <= sum_v d+ d- d'
  std::uint64_t rhs = 0;
  for (std::uint32_t v = 0; v < n; ++v)
    rhs += std::uint64_t(g.outdeg(v)) * g.indeg(v) * g.nondeg(v);
  if (2 * class_count(g, h25) > rhs) {
    rep.ok = false;
    rep.violation = {"degree bound 2N(H25) <= sum d+d-d'", g};
    return false;
  }

  bool tournament = g.arc_count() == std::uint64_t(n) * (n - 1) / 2;
  if (tournament) {
    ++rep.tournaments_checked;
    // (b) 48 N(H29, G) <= n^2 (n-1)(n-2)
    if (48 * class_count(g, h29) > std::uint64_t(n) * n * (n - 1) * (n - 2)) {
      rep.ok = false;
      rep.violation = {"tournament bound 48N(H29) <= n^2(n-1)(n-2)", g};
      return false;
    }
    // (c) sum d+ d- = 3 Ncyc + Ntrans = 2 Ncyc + C(n,3)
    std::uint64_t paths = 0;
    for (std::uint32_t v = 0; v < n; ++v) paths += std::uint64_t(g.outdeg(v)) * g.indeg(v);
    std::uint64_t ncyc = 0, ntrans = 0;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        for (std::uint32_t c = b + 1; c < n; ++c) {
          std::vector<std::uint32_t> tri = {a, b, c};
          OrientedGraph t = g.induced(tri);
          bool cyc = t.outdeg(0) == 1 && t.outdeg(1) == 1 && t.outdeg(2) == 1;
          ncyc += cyc;
          ntrans += !cyc;
        }
    if (paths != 3 * ncyc + ntrans || paths != 2 * ncyc + binom_u64(n, 3)) {
      rep.ok = false;
      rep.violation = {"tournament triple identity", g};
      return false;
    }
  }
  return true;
}

}  // namespace

IneqReport check_inequalities_exhaustive(int n) {
  if (n < 4 || n > 6) throw std::invalid_argument("exhaustive inequality check needs n in 4..6");
  IneqReport rep;
  enumerate_classes_stream(n, [&](const OrientedGraph& g) {
    if (rep.ok) run_checks(g, rep);
  });
  return rep;
}

IneqReport check_inequalities_sampled(std::uint32_t n, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("inequality check needs n >= 4");
  IneqReport rep;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples && rep.ok; ++s) {
    OrientedGraph g(n);
    bool tournament = (s % 2) == 1;  // alternate random graphs and tournaments
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        g.set_pair(i, j, tournament ? 1 + int(rng() % 2) : int(rng() % 3));
    run_checks(g, rep);
  }
  return rep;
}

}  // namespace ind4
