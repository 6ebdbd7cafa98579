#include "ind4/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

#include "ind4/catalog.hpp"
#include "ind4/enumerate.hpp"
#include "ind4/profile.hpp"

namespace ind4 {

bool psd_check_exact(std::vector<std::vector<Rat>> a) {
  std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] < 0) return false;
    if (a[k][k] == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (a[k][j] != 0) return false;  // zero pivot with nonzero row: indefinite
      continue;
    }
    // symmetric Gaussian elimination; the Schur complement stays symmetric
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

namespace {

// all ordered type-inducing injections
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

struct BlockTable {
  int s = 0;
  std::uint32_t m = 0;
  std::map<std::vector<std::uint8_t>, int> id_of;  // label-fixed key -> index
};

// exact quadratic-form term sum_ij Q_ij p(F_i, F_j; G) for one block
Rat block_term(const CertBlock& block, const BlockTable& table, const OrientedGraph& g) {
  auto thetas = type_injections(block.type, g);
  if (thetas.empty()) return Rat(0);
  std::uint32_t k1 = table.m - std::uint32_t(table.s);
  std::map<std::pair<int, int>, std::uint64_t> counts;
  std::uint64_t splits = 0;
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
      ++splits;
      auto it1 = table.id_of.find(label_fixed_canonical(g.induced(v1), table.s));
      if (it1 != table.id_of.end()) {
        auto it2 = table.id_of.find(label_fixed_canonical(g.induced(v2), table.s));
        if (it2 != table.id_of.end()) ++counts[{it1->second, it2->second}];
      }
      if (k1 == 0) break;
      int p = int(k1) - 1;
      while (p >= 0 && idx[std::size_t(p)] == rest.size() - k1 + std::uint32_t(p)) --p;
      if (p < 0) break;
      ++idx[std::size_t(p)];
      for (std::uint32_t t = std::uint32_t(p) + 1; t < k1; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  Rat acc(0);
  for (const auto& [ij, c] : counts) {
    const Rat& q = block.Q[std::size_t(ij.first)][std::size_t(ij.second)];
    if (q != 0) acc += q * Rat(c);
  }
  return acc / Rat(splits);
}

}  // namespace

VerifyResult verify_certificate(const FlagCertificate& cert) {
  VerifyResult res;
  OrientedGraph target(1);
  try {
    target = parse_graph(cert.target);
  } catch (const std::exception& e) {
    res.reason = std::string("bad target: ") + e.what();
    return res;
  }
  if (target.size() != 4) {
    res.reason = "target must have 4 vertices";
    return res;
  }
  if (cert.N < 4 || cert.N > 6) {
    res.reason = "expansion order N must be in 4..6";
    return res;
  }
  if (cert.lambda < 0) {
    res.reason = "lambda must be nonnegative";
    return res;
  }
  std::vector<BlockTable> tables;
  for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
    const auto& block = cert.blocks[b];
    std::string tag = "block " + std::to_string(b);
    if (block.type.graph.size() != std::uint32_t(block.type.s)) {
      res.reason = tag + ": type graph must live on s vertices";
      return res;
    }
    if (block.flags.empty()) {
      res.reason = tag + ": no flags";
      return res;
    }
    BlockTable table;
    table.s = block.type.s;
    table.m = block.flags[0].size();
    if (2 * table.m - std::uint32_t(table.s) > std::uint32_t(cert.N)) {
      res.reason = tag + ": flag size violates 2m - s <= N";
      return res;
    }
    for (std::size_t i = 0; i < block.flags.size(); ++i) {
      const auto& f = block.flags[i];
      if (f.size() != table.m) {
        res.reason = tag + ": flags must share one vertex count";
        return res;
      }
      for (int x = 0; x < table.s; ++x)
        for (int y = x + 1; y < table.s; ++y)
          if (f.pair_state(std::uint32_t(x), std::uint32_t(y)) !=
              block.type.graph.pair_state(std::uint32_t(x), std::uint32_t(y))) {
            res.reason = tag + ": flag does not induce the type on its labels";
            return res;
          }
      if (!table.id_of.emplace(label_fixed_canonical(f, table.s), int(i)).second) {
        res.reason = tag + ": duplicate flags";
        return res;
      }
    }
    if (block.Q.size() != block.flags.size()) {
      res.reason = tag + ": Q dimension must equal the flag count";
      return res;
    }
    for (std::size_t i = 0; i < block.Q.size(); ++i) {
      if (block.Q[i].size() != block.flags.size()) {
        res.reason = tag + ": Q must be square";
        return res;
      }
      for (std::size_t j = 0; j < i; ++j)
        if (block.Q[i][j] != block.Q[j][i]) {
          res.reason = tag + ": Q must be symmetric";
          return res;
        }
    }
    if (!psd_check_exact(block.Q)) {
      res.reason = tag + ": Q is not positive semidefinite";
      return res;
    }
    tables.push_back(std::move(table));
  }

  const auto& cat = Catalog4::get();
  int target_class = cat.class_of(target);
  Rat quads(binom(std::uint64_t(cert.N), 4));
  for (const auto& g : enumerate_classes(cert.N)) {
    Rat val(count_induced_naive(cat.classes()[std::size_t(target_class)].canon, g));
    val /= quads;
    for (std::size_t b = 0; b < cert.blocks.size(); ++b)
      val += block_term(cert.blocks[b], tables[b], g);
    if (val > cert.lambda) {
      res.reason = "density inequality fails";
      res.witness = g;
      return res;
    }
  }
  res.accepted = true;
  return res;
}

FlagCertificate trivial_certificate(const OrientedGraph& target, int N) {
  if (N < 4 || N > 6) throw std::invalid_argument("trivial certificate: N in 4..6");
  const auto& cat = Catalog4::get();
  int cls = cat.class_of(target);
  std::uint64_t best = 0;
  for (const auto& g : enumerate_classes(N))
    best = std::max(best, count_induced_naive(cat.classes()[std::size_t(cls)].canon, g));
  FlagCertificate cert;
  cert.target = format_graph(target);
  cert.N = N;
  cert.lambda = Rat(best, binom_u64(std::uint64_t(N), 4));
  // one zero block over the single-vertex type
  FlagType t1;
  t1.s = 1;
  t1.graph = OrientedGraph(1);
  int m = (N + 1) / 2;
  CertBlock block;
  block.type = t1;
  for (const auto& f : enumerate_flags(t1, m)) block.flags.push_back(f.graph);
  block.Q.assign(block.flags.size(), std::vector<Rat>(block.flags.size(), Rat(0)));
  cert.blocks.push_back(std::move(block));
  return cert;
}

std::string certificate_to_json(const FlagCertificate& cert) {
  nlohmann::json j;
  j["target"] = cert.target;
  j["N"] = cert.N;
  j["lambda"] = format_rat(cert.lambda);
  j["blocks"] = nlohmann::json::array();
  for (const auto& block : cert.blocks) {
    nlohmann::json jb;
    jb["type"] = {{"s", block.type.s}, {"graph", format_graph(block.type.graph)}};
    jb["flags"] = nlohmann::json::array();
    for (const auto& f : block.flags) jb["flags"].push_back(format_graph(f));
    jb["Q"] = nlohmann::json::array();
    for (const auto& row : block.Q) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& v : row) jr.push_back(format_rat(v));
      jb["Q"].push_back(jr);
    }
    j["blocks"].push_back(jb);
  }
  return j.dump(1);
}

FlagCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FlagCertificate cert;
  cert.target = j.at("target").get<std::string>();
  cert.N = j.at("N").get<int>();
  cert.lambda = parse_rat(j.at("lambda").get<std::string>());
  for (const auto& jb : j.at("blocks")) {
    CertBlock block;
    block.type.s = jb.at("type").at("s").get<int>();
    block.type.graph = parse_graph(jb.at("type").at("graph").get<std::string>());
    for (const auto& f : jb.at("flags")) block.flags.push_back(parse_graph(f.get<std::string>()));
    for (const auto& jr : jb.at("Q")) {
      std::vector<Rat> row;
      for (const auto& v : jr) row.push_back(parse_rat(v.get<std::string>()));
      block.Q.push_back(std::move(row));
    }
    cert.blocks.push_back(std::move(block));
  }
  return cert;
}

}  // namespace ind4
