#include "ind4/graph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ind4 {

OrientedGraph::OrientedGraph(std::uint32_t n) : n_(n) {
  // n = 0 is allowed for the empty flag type
  if (n > (1u << 16)) throw std::invalid_argument("vertex count out of range");
  words_ = (n + 63) / 64;
  out_.assign(std::size_t(n) * words_, 0);
  in_.assign(std::size_t(n) * words_, 0);
}

void OrientedGraph::add_arc(std::uint32_t u, std::uint32_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("loop");
  if (arc(u, v)) throw std::invalid_argument("duplicate arc");
  if (arc(v, u)) throw std::invalid_argument("2-cycle");
  out_[std::size_t(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  in_[std::size_t(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

void OrientedGraph::remove_pair(std::uint32_t u, std::uint32_t v) {
  out_[std::size_t(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
  out_[std::size_t(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
  in_[std::size_t(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
  in_[std::size_t(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
}

void OrientedGraph::set_pair(std::uint32_t u, std::uint32_t v, int state) {
  remove_pair(u, v);
  if (state == 1)
    add_arc(u, v);
  else if (state == 2)
    add_arc(v, u);
  else if (state != 0)
    throw std::invalid_argument("bad pair state");
}

std::uint32_t OrientedGraph::outdeg(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (std::uint32_t w = 0; w < words_; ++w) d += std::popcount(out_[std::size_t(v) * words_ + w]);
  return d;
}

std::uint32_t OrientedGraph::indeg(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (std::uint32_t w = 0; w < words_; ++w) d += std::popcount(in_[std::size_t(v) * words_ + w]);
  return d;
}

std::uint64_t OrientedGraph::arc_count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : out_) c += std::popcount(w);
  return c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> OrientedGraph::arcs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> r;
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t w = 0; w < words_; ++w) {
      std::uint64_t bits = out_[std::size_t(u) * words_ + w];
      while (bits) {
        std::uint32_t b = std::countr_zero(bits);
        bits &= bits - 1;
        r.emplace_back(u, w * 64 + b);
      }
    }
  return r;
}

std::vector<std::uint8_t> OrientedGraph::encode() const {
  std::vector<std::uint8_t> st;
  st.reserve(std::size_t(n_) * (n_ - 1) / 2);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = i + 1; j < n_; ++j) st.push_back(std::uint8_t(pair_state(i, j)));
  return st;
}

OrientedGraph OrientedGraph::induced(const std::vector<std::uint32_t>& verts) const {
  OrientedGraph h(std::uint32_t(verts.size()));
  for (std::uint32_t i = 0; i < verts.size(); ++i)
    for (std::uint32_t j = i + 1; j < verts.size(); ++j)
      h.set_pair(i, j, pair_state(verts[i], verts[j]));
  return h;
}

OrientedGraph graph_from_encoding(std::uint32_t n, const std::vector<std::uint8_t>& states) {
  OrientedGraph g(n);
  std::size_t p = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.set_pair(i, j, states.at(p++));
  return g;
}

OrientedGraph reverse(const OrientedGraph& g) {
  OrientedGraph r(g.size());
  for (auto [u, v] : g.arcs()) r.add_arc(v, u);
  return r;
}

OrientedGraph parse_graph(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("graph string: missing ':'");
  std::string_view head = s.substr(0, colon);
  if (head.size() != 1 || head[0] < '0' || head[0] > '9')
    throw std::invalid_argument("graph string: vertex count must be a single digit 0..9");
  std::uint32_t n = std::uint32_t(head[0] - '0');
  std::string_view body = s.substr(colon + 1);
  if (body.size() % 2 != 0) throw std::invalid_argument("graph string: odd arc digit count");
  OrientedGraph g(n);
  for (std::size_t i = 0; i < body.size(); i += 2) {
    char cu = body[i], cv = body[i + 1];
    if (cu < '1' || cu > '9' || cv < '1' || cv > '9')
      throw std::invalid_argument("graph string: non-digit arc character");
    std::uint32_t u = std::uint32_t(cu - '1'), v = std::uint32_t(cv - '1');
    if (u >= n || v >= n) throw std::out_of_range("graph string: vertex index out of range");
    g.add_arc(u, v);  // throws on loop / 2-cycle / duplicate
  }
  return g;
}

std::string format_graph(const OrientedGraph& g) {
  if (g.size() > 9) throw std::invalid_argument("text format limited to n <= 9");
  std::string s = std::to_string(g.size()) + ":";
  for (auto [u, v] : g.arcs()) {
    s += char('1' + u);
    s += char('1' + v);
  }
  return s;
}

void write_graph_binary(std::ostream& os, const OrientedGraph& g) {
  std::uint32_t n = g.size();
  unsigned char hdr[4] = {static_cast<unsigned char>(n & 0xff),
                          static_cast<unsigned char>((n >> 8) & 0xff),
                          static_cast<unsigned char>((n >> 16) & 0xff),
                          static_cast<unsigned char>((n >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(hdr), 4);
  auto st = g.encode();
  std::vector<unsigned char> bytes((st.size() * 2 + 7) / 8, 0);
  for (std::size_t i = 0; i < st.size(); ++i) bytes[i / 4] |= std::uint8_t(st[i]) << (2 * (i % 4));
  os.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

OrientedGraph read_graph_binary(std::istream& is) {
  unsigned char hdr[4];
  if (!is.read(reinterpret_cast<char*>(hdr), 4)) throw std::runtime_error("binary graph: truncated header");
  std::uint32_t n = hdr[0] | (std::uint32_t(hdr[1]) << 8) | (std::uint32_t(hdr[2]) << 16) |
                    (std::uint32_t(hdr[3]) << 24);
  if (n > (1u << 16)) throw std::runtime_error("binary graph: bad vertex count");
  std::size_t npairs = std::size_t(n) * (n - 1) / 2;
  std::vector<unsigned char> bytes((npairs * 2 + 7) / 8);
  if (!is.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size())))
    throw std::runtime_error("binary graph: truncated body");
  std::vector<std::uint8_t> st(npairs);
  for (std::size_t i = 0; i < npairs; ++i) {
    st[i] = (bytes[i / 4] >> (2 * (i % 4))) & 3;
    if (st[i] == 3) throw std::runtime_error("binary graph: invalid pair state");
  }
  return graph_from_encoding(n, st);
}

}  // namespace ind4
