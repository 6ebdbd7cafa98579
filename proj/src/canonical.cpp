#include "ind4/canonical.hpp"

#include <array>
#include <stdexcept>

namespace ind4 {

namespace {

// Branch-and-bound over partial relabelings. Positions are filled left to
// right; placing position d determines the new pair states
// (0,d),(1,d),...,(d-1,d), so the comparison runs in this column-extension
// order. The canonical representative is the relabeling minimizing the
// column-ordered state sequence; the returned encoding is converted back to
// the standard lexicographic pair layout at the end.
struct CanonSearch {
  std::uint32_t n;
  std::array<std::array<std::uint8_t, kCanonicalMaxN>, kCanonicalMaxN> st{};
  std::array<std::uint8_t, kCanonicalMaxN> perm{};
  std::array<bool, kCanonicalMaxN> used{};
  std::vector<std::uint8_t> best_cm;
  std::vector<std::uint8_t> cur;

  explicit CanonSearch(const OrientedGraph& g) : n(g.size()) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j) st[i][j] = std::uint8_t(g.pair_state(i, j));
    best_cm = col_major(g.encode());
    cur.reserve(best_cm.size());
  }

  std::size_t pair_index(std::uint32_t i, std::uint32_t j) const {
    // i < j, lexicographic pair order
    return std::size_t(i) * n - std::size_t(i) * (i + 1) / 2 + (j - i - 1);
  }

  std::vector<std::uint8_t> col_major(const std::vector<std::uint8_t>& rm) const {
    std::vector<std::uint8_t> cm;
    cm.reserve(rm.size());
    for (std::uint32_t d = 1; d < n; ++d)
      for (std::uint32_t i = 0; i < d; ++i) cm.push_back(rm[pair_index(i, d)]);
    return cm;
  }

  std::vector<std::uint8_t> row_major(const std::vector<std::uint8_t>& cm) const {
    std::vector<std::uint8_t> rm(cm.size());
    std::size_t p = 0;
    for (std::uint32_t d = 1; d < n; ++d)
      for (std::uint32_t i = 0; i < d; ++i) rm[pair_index(i, d)] = cm[p++];
    return rm;
  }

  // Compares the candidate's column against best_cm. On a strictly smaller
  // entry, best_cm is rewritten as the current prefix padded with the 0xFF
  // sentinel, so deeper levels keep rewriting until a full leaf lands in
  // best_cm. This keeps best_cm consistent when an improvement is found in
  // the middle of the tree.
  void search(std::uint32_t depth, std::size_t enc_len) {
    if (depth == n) return;
    for (std::uint32_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool prune = false;
      bool less = false;
      std::size_t len = enc_len;
      for (std::uint32_t i = 0; i < depth; ++i) {
        std::uint8_t s = st[perm[i]][cand];
        cur.push_back(s);
        if (!less) {
          if (s > best_cm[len]) {
            prune = true;
            break;
          }
          if (s < best_cm[len]) less = true;
        }
        ++len;
      }
      if (!prune) {
        if (less) {
          std::copy(cur.begin(), cur.end(), best_cm.begin());
          std::fill(best_cm.begin() + std::ptrdiff_t(cur.size()), best_cm.end(),
                    std::uint8_t(0xFF));
        }
        used[cand] = true;
        perm[depth] = std::uint8_t(cand);
        search(depth + 1, len);
        used[cand] = false;
      }
      cur.resize(enc_len);
    }
  }

  std::vector<std::uint8_t> run() {
    search(0, 0);
    return row_major(best_cm);
  }
};

}  // namespace

std::vector<std::uint8_t> canonical_encoding(const OrientedGraph& g) {
  if (g.size() > kCanonicalMaxN)
    throw std::invalid_argument("canonical_form: n too large for exhaustive relabeling");
  if (g.size() == 1) return {};
  CanonSearch s(g);
  return s.run();
}

OrientedGraph canonical_form(const OrientedGraph& g) {
  return graph_from_encoding(g.size(), canonical_encoding(g));
}

bool is_isomorphic(const OrientedGraph& g, const OrientedGraph& h) {
  if (g.size() != h.size()) return false;
  return canonical_encoding(g) == canonical_encoding(h);
}

std::uint64_t pack_key(std::uint32_t n, const std::vector<std::uint8_t>& states) {
  if (n > 7) throw std::invalid_argument("pack_key: n <= 7 required");
  std::uint64_t key = std::uint64_t(n) << 58;
  for (std::size_t i = 0; i < states.size(); ++i) key |= std::uint64_t(states[i]) << (2 * i);
  return key;
}

std::uint64_t canonical_key(const OrientedGraph& g) {
  return pack_key(g.size(), canonical_encoding(g));
}

OrientedGraph graph_from_key(std::uint64_t key) {
  std::uint32_t n = std::uint32_t(key >> 58);
  std::vector<std::uint8_t> st(std::size_t(n) * (n - 1) / 2);
  for (std::size_t i = 0; i < st.size(); ++i) st[i] = (key >> (2 * i)) & 3;
  return graph_from_encoding(n, st);
}

}  // namespace ind4
