#include "ind4/limit_density.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ind4/catalog.hpp"

namespace ind4 {

namespace {

template <class T>
T from_rat(const Rat& r) {
  if constexpr (std::is_same_v<T, Rat>)
    return r;
  else
    return to_double(r);
}

inline int pair_index(int i, int j, int k) {
  // i < j, lexicographic order over k points
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

constexpr int pow3(int e) { return e == 0 ? 1 : 3 * pow3(e - 1); }

template <class T>
struct Evaluator {
  // weighted option for one open pair; the factor is a scalar or a
  // polynomial in the position of one endpoint inside a transitive part
  struct Option {
    int state = 0;
    T factor = T(1);
    bool has_poly = false;
    int poly_which = 0;  // 0: lower-labeled point, 1: higher-labeled point
    Poly<T> poly{};
  };

  // per-spec tables resolved once: weights, effective part kinds, and the
  // option list for every ordered part pair (first point in part a, second
  // in part b, a != b)
  struct Prepared {
    int P = 0;
    std::vector<T> weight;
    std::vector<PartKind> kind;  // arbitrary resolved to transitive
    std::vector<const ConstructionSpec*> sub;
    std::vector<std::vector<Option>> pair_opts;  // P*P, empty = forced none
  };

  std::map<const ConstructionSpec*, Prepared> prepared_;
  std::map<std::pair<const ConstructionSpec*, int>, std::vector<T>> memo_;

  const Prepared& prepare(const ConstructionSpec& spec) {
    auto it = prepared_.find(&spec);
    if (it != prepared_.end()) return it->second;
    Prepared p;
    p.P = int(spec.parts.size());
    for (const auto& part : spec.parts) {
      PartKind kind = part.kind;
      if (kind == PartKind::arbitrary_tournament) {
        if (!spec.tournament_invariant)
          throw std::invalid_argument(
              "limit density: arbitrary tournament part in a spec not flagged "
              "tournament_invariant");
        kind = PartKind::transitive;
      }
      if (kind == PartKind::circular)
        throw std::invalid_argument("limit density: circular parts need circular_density");
      p.weight.push_back(from_rat<T>(part.weight));
      p.kind.push_back(kind);
      p.sub.push_back(part.sub.get());
    }
    p.pair_opts.resize(std::size_t(p.P) * std::size_t(p.P));
    for (const auto& rule : spec.arcs) {
      int a = spec.part_index(rule.from), b = spec.part_index(rule.to);
      bool from_is_trans = spec.parts[std::size_t(a)].kind == PartKind::transitive;
      for (int dir = 0; dir < 2; ++dir) {
        // dir 0: lower point in `from`, higher in `to`; dir 1: swapped
        int lo_part = dir == 0 ? a : b;
        int hi_part = dir == 0 ? b : a;
        int fwd_state = dir == 0 ? 1 : 2;
        int bwd_state = dir == 0 ? 2 : 1;
        auto& opts = p.pair_opts[std::size_t(lo_part) * std::size_t(p.P) + std::size_t(hi_part)];
        if (!rule.is_poly) {
          T pr = from_rat<T>(rule.prob);
          if (rule.mode == ArcMode::directed) {
            if (pr != T(0)) opts.push_back(Option{fwd_state, pr, false, 0, {}});
            if (pr != T(1)) opts.push_back(Option{0, T(1) - pr, false, 0, {}});
          } else {
            if (pr != T(0)) opts.push_back(Option{fwd_state, pr, false, 0, {}});
            if (pr != T(1)) opts.push_back(Option{bwd_state, T(1) - pr, false, 0, {}});
          }
        } else {
          int poly_which = (dir == 0) == from_is_trans ? 0 : 1;
          Poly<T> poly;
          for (const auto& c : rule.poly.c) poly.c.push_back(from_rat<T>(c));
          Poly<T> one_minus = Poly<T>::one() - poly;
          opts.push_back(Option{fwd_state, T(1), true, poly_which, poly});
          if (rule.mode == ArcMode::directed)
            opts.push_back(Option{0, T(1), true, poly_which, one_minus});
          else
            opts.push_back(Option{bwd_state, T(1), true, poly_which, one_minus});
        }
      }
    }
    return prepared_.emplace(&spec, std::move(p)).first->second;
  }

  const std::vector<T>& marginal(const ConstructionSpec& spec, int k) {
    auto key = std::make_pair(&spec, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const Prepared& prep = prepare(spec);
    int npairs = k * (k - 1) / 2;
    std::vector<T> M(std::size_t(pow3(npairs)), T(0));
    int P = prep.P;

    // prefetch every inner marginal the assignment loop can touch, so that
    // contribute() never recurses into marginal() while its scratch buffers
    // are live
    for (int p = 0; p < P; ++p) {
      if (prep.kind[std::size_t(p)] == PartKind::iterate)
        for (int j = 2; j < k; ++j) marginal(spec, j);
      if (prep.kind[std::size_t(p)] == PartKind::sub)
        for (int j = 2; j <= k; ++j) marginal(*prep.sub[std::size_t(p)], j);
    }

    T iter_mass(0);
    for (int p = 0; p < P; ++p)
      if (prep.kind[std::size_t(p)] == PartKind::iterate) {
        T wk = prep.weight[std::size_t(p)];
        for (int t = 1; t < k; ++t) wk = wk * prep.weight[std::size_t(p)];
        iter_mass = iter_mass + wk;
      }

    std::vector<int> assign(std::size_t(k), 0);
    while (true) {
      bool all_same_iterate =
          prep.kind[std::size_t(assign[0])] == PartKind::iterate &&
          std::all_of(assign.begin(), assign.end(), [&](int a) { return a == assign[0]; });
      if (!all_same_iterate) contribute(spec, prep, k, assign, M);
      int pos = 0;
      while (pos < k && assign[std::size_t(pos)] == P - 1) {
        assign[std::size_t(pos)] = 0;
        ++pos;
      }
      if (pos == k) break;
      ++assign[std::size_t(pos)];
    }

    T denom = T(1) - iter_mass;
    for (auto& v : M) v = v / denom;
    // prepared_ may hold references into rules of subspecs only while the
    // evaluator lives; marginals themselves are self-contained
    return memo_.emplace(key, std::move(M)).first->second;
  }

  // ---- per-assignment scratch ----
  struct Slot {
    int pair;
    const std::vector<Option>* opts;
    int lo_point, hi_point;
  };
  struct JointSlot {
    int pairs[6];
    int npairs;
    const std::vector<T>* dist;
  };
  struct TransGroup {
    int pts[4];
    int n;
  };
  std::vector<int> states_;
  std::vector<Slot> slots_;
  std::vector<JointSlot> joints_;
  std::vector<TransGroup> trans_;
  std::vector<std::vector<Poly<T>>> point_polys_;

  void contribute(const ConstructionSpec& spec, const Prepared& prep, int k,
                  const std::vector<int>& assign, std::vector<T>& M) {
    T w(1);
    for (int i = 0; i < k; ++i) w = w * prep.weight[std::size_t(assign[std::size_t(i)])];

    // distinct parts and their points
    int dparts[4], npts[4], pts[4][4], nd = 0;
    for (int i = 0; i < k; ++i) {
      int p = assign[std::size_t(i)], g = -1;
      for (int d = 0; d < nd; ++d)
        if (dparts[d] == p) g = d;
      if (g < 0) {
        g = nd++;
        dparts[g] = p;
        npts[g] = 0;
      }
      pts[g][npts[g]++] = i;
    }

    states_.assign(std::size_t(k * (k - 1) / 2), -1);
    slots_.clear();
    joints_.clear();
    trans_.clear();
    point_polys_.assign(std::size_t(k), {});

    static const std::vector<Option> kCoin = {Option{1, T(1) / T(2), false, 0, {}},
                                              Option{2, T(1) / T(2), false, 0, {}}};

    for (int d = 0; d < nd; ++d) {
      int p = dparts[d];
      PartKind kind = prep.kind[std::size_t(p)];
      if (kind == PartKind::transitive) {
        TransGroup g;
        g.n = npts[d];
        for (int t = 0; t < npts[d]; ++t) g.pts[t] = pts[d][t];
        trans_.push_back(g);
        continue;
      }
      if (npts[d] < 2) continue;
      switch (kind) {
        case PartKind::empty:
          for (int a = 0; a < npts[d]; ++a)
            for (int b = a + 1; b < npts[d]; ++b)
              states_[std::size_t(pair_index(pts[d][a], pts[d][b], k))] = 0;
          break;
        case PartKind::random_tournament:
        case PartKind::regular_tournament:
          // regular tournaments share all pair and triple marginals with the
          // random model; the 4-point marginal uses the quasi-random
          // convention (see README)
          for (int a = 0; a < npts[d]; ++a)
            for (int b = a + 1; b < npts[d]; ++b)
              slots_.push_back(
                  {pair_index(pts[d][a], pts[d][b], k), &kCoin, pts[d][a], pts[d][b]});
          break;
        case PartKind::iterate:
        case PartKind::sub: {
          const ConstructionSpec& inner =
              kind == PartKind::iterate ? spec : *prep.sub[std::size_t(p)];
          const auto& dist = marginal(inner, npts[d]);
          JointSlot js;
          js.npairs = 0;
          js.dist = &dist;
          for (int a = 0; a < npts[d]; ++a)
            for (int b = a + 1; b < npts[d]; ++b)
              js.pairs[js.npairs++] = pair_index(pts[d][a], pts[d][b], k);
          joints_.push_back(js);
          break;
        }
        default: break;
      }
    }

    // cross pairs
    bool dead = false;
    for (int i = 0; i < k && !dead; ++i)
      for (int j = i + 1; j < k; ++j) {
        int pi = assign[std::size_t(i)], pj = assign[std::size_t(j)];
        if (pi == pj) continue;
        int pr = pair_index(i, j, k);
        const auto& opts = prep.pair_opts[std::size_t(pi) * std::size_t(prep.P) + std::size_t(pj)];
        if (opts.empty()) {
          states_[std::size_t(pr)] = 0;
        } else if (opts.size() == 1 && !opts[0].has_poly) {
          states_[std::size_t(pr)] = opts[0].state;
          w = w * opts[0].factor;
        } else {
          slots_.push_back({pr, &opts, i, j});
        }
      }
    if (dead) return;

    enumerate_joint(0, w, M, k);
  }

  void enumerate_joint(std::size_t ji, T weight, std::vector<T>& M, int k) {
    if (ji == joints_.size()) {
      enumerate_slots(0, weight, M, k);
      return;
    }
    const auto& js = joints_[ji];
    for (std::size_t code = 0; code < js.dist->size(); ++code) {
      T pw = (*js.dist)[code];
      if (pw == T(0)) continue;
      std::size_t c = code;
      for (int t = 0; t < js.npairs; ++t) {
        states_[std::size_t(js.pairs[t])] = int(c % 3);
        c /= 3;
      }
      enumerate_joint(ji + 1, weight * pw, M, k);
    }
  }

  void enumerate_slots(std::size_t si, T weight, std::vector<T>& M, int k) {
    if (si == slots_.size()) {
      enumerate_orders(0, weight, M, k);
      return;
    }
    const Slot slot = slots_[si];
    for (const auto& opt : *slot.opts) {
      states_[std::size_t(slot.pair)] = opt.state;
      if (opt.has_poly) {
        int pt = opt.poly_which == 0 ? slot.lo_point : slot.hi_point;
        point_polys_[std::size_t(pt)].push_back(opt.poly);
        enumerate_slots(si + 1, weight * opt.factor, M, k);
        point_polys_[std::size_t(pt)].pop_back();
      } else {
        enumerate_slots(si + 1, weight * opt.factor, M, k);
      }
    }
  }

  void enumerate_orders(std::size_t gi, T weight, std::vector<T>& M, int k) {
    if (gi == trans_.size()) {
      std::size_t code = 0, p3 = 1;
      for (std::size_t t = 0; t < states_.size(); ++t) {
        code += std::size_t(states_[t]) * p3;
        p3 *= 3;
      }
      M[code] += weight;
      return;
    }
    const TransGroup g = trans_[gi];
    int order[4];
    for (int t = 0; t < g.n; ++t) order[t] = g.pts[t];
    std::sort(order, order + g.n);
    do {
      for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
          int lo = std::min(order[a], order[b]), hi = std::max(order[a], order[b]);
          states_[std::size_t(pair_index(lo, hi, k))] = (order[a] == lo) ? 1 : 2;
        }
      T integral = order_integral(order, g.n);
      if (integral != T(0)) enumerate_orders(gi + 1, weight * integral, M, k);
    } while (std::next_permutation(order, order + g.n));
  }

  // integral over 0 < x_{order[0]} < ... < x_{order[m-1]} < 1 of the product
  // of the points' attached polynomial factors
  T order_integral(const int* order, int m) {
    bool any = false;
    for (int t = 0; t < m; ++t) any = any || !point_polys_[std::size_t(order[t])].empty();
    if (!any) {
      T fact(1);
      for (int t = 2; t <= m; ++t) fact = fact * T(t);
      return T(1) / fact;
    }
    Poly<T> acc = Poly<T>::one();
    for (int t = 0; t < m; ++t) {
      Poly<T> f = Poly<T>::one();
      for (const auto& q : point_polys_[std::size_t(order[t])]) f = f * q;
      acc = (f * acc).antiderivative();
    }
    return acc.eval(T(1));
  }
};

}  // namespace

template <class T>
std::vector<T> limit_marginal(const ConstructionSpec& spec, int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("limit_marginal: k in 2..4");
  require_valid(spec);
  Evaluator<T> ev;
  return ev.marginal(spec, k);
}

template std::vector<Rat> limit_marginal<Rat>(const ConstructionSpec&, int);
template std::vector<double> limit_marginal<double>(const ConstructionSpec&, int);

namespace {

template <class T>
std::array<T, 42> aggregate(const std::vector<T>& m4) {
  const auto& cat = Catalog4::get();
  std::array<T, 42> out;
  out.fill(T(0));
  for (int code = 0; code < 729; ++code)
    out[std::size_t(cat.class_of_code(code))] += m4[std::size_t(code)];
  return out;
}

}  // namespace

std::array<Rat, 42> limit_class_densities(const ConstructionSpec& spec) {
  return aggregate(limit_marginal<Rat>(spec, 4));
}

std::array<double, 42> limit_class_densities_f(const ConstructionSpec& spec) {
  return aggregate(limit_marginal<double>(spec, 4));
}

Rat limit_density(const ConstructionSpec& spec, int class_id) {
  if (class_id < 0 || class_id >= 42) throw std::invalid_argument("class id out of range");
  if (is_single_circular(spec))
    throw std::invalid_argument("limit_density: single-circular specs go through circular_density");
  return limit_class_densities(spec)[std::size_t(class_id)];
}

bool is_single_circular(const ConstructionSpec& spec) {
  return spec.parts.size() == 1 && spec.parts[0].kind == PartKind::circular;
}

}  // namespace ind4
