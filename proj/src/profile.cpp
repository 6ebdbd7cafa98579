#include "ind4/profile.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ind4/canonical.hpp"
#include "ind4/catalog.hpp"
#include "ind4/kernels.hpp"
#include "ind4/rational.hpp"

namespace ind4 {

std::uint64_t count_induced_naive(const OrientedGraph& H, const OrientedGraph& G) {
  if (H.size() != 4) throw std::invalid_argument("count_induced_naive: pattern must have 4 vertices");
  std::uint32_t n = G.size();
  if (n < 4) return 0;
  auto hkey = canonical_key(H);
  std::uint64_t count = 0;
  std::vector<std::uint32_t> v(4);
  for (v[0] = 0; v[0] < n; ++v[0])
    for (v[1] = v[0] + 1; v[1] < n; ++v[1])
      for (v[2] = v[1] + 1; v[2] < n; ++v[2])
        for (v[3] = v[2] + 1; v[3] < n; ++v[3])
          if (canonical_key(G.induced(v)) == hkey) ++count;
  return count;
}

namespace {

// Per-row byte matrix of pair states; st[i*n + l] = state of {i,l} read as
// (i,l) for i < l. Only the upper triangle is used.
std::vector<std::uint8_t> state_matrix(const OrientedGraph& G) {
  std::uint32_t n = G.size();
  std::vector<std::uint8_t> st(std::size_t(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t l = i + 1; l < n; ++l)
      st[std::size_t(i) * n + l] = std::uint8_t(G.pair_state(i, l));
  return st;
}

void count_range(const std::vector<std::uint8_t>& st, std::uint32_t n, std::uint32_t i_begin,
                 std::uint32_t i_end, std::uint64_t* counts) {
  const auto& cat = Catalog4::get();
  const std::int32_t* lut = cat.lut32();
  for (std::uint32_t i = i_begin; i < i_end; ++i) {
    const std::uint8_t* ri = &st[std::size_t(i) * n];
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const std::uint8_t* rj = &st[std::size_t(j) * n];
      std::uint32_t sij = ri[j];
      for (std::uint32_t k = j + 1; k < n; ++k) {
        std::uint32_t base = sij + 3u * ri[k] + 27u * rj[k];
        kern::quad_count(ri, rj, &st[std::size_t(k) * n], k + 1, n, base, lut, counts);
      }
    }
  }
}

}  // namespace

Profile4 profile4_exact(const OrientedGraph& G, int threads, std::uint64_t max_quads) {
  std::uint32_t n = G.size();
  Profile4 p;
  p.n = n;
  if (n < 4) return p;
  BigInt quads = binom(n, 4);
  if (quads > BigInt(max_quads)) throw std::invalid_argument("profile4: C(n,4) exceeds the exact-mode cutoff");
  p.total = quads.convert_to<std::uint64_t>();
  auto st = state_matrix(G);

  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = threads > 0 ? unsigned(threads) : (hw ? hw : 1);
  workers = std::min<unsigned>(workers, std::max<std::uint32_t>(1, n / 8));
  if (workers <= 1 || p.total < 1000000) {
    count_range(st, n, 0, n, p.counts.data());
    return p;
  }
  // Partition the outer index so every worker sees a similar quad volume.
  std::vector<std::array<std::uint64_t, 42>> parts(workers);
  std::vector<std::thread> pool;
  std::vector<std::uint32_t> cuts(workers + 1, 0);
  double total_work = double(p.total);
  std::uint32_t cur = 0;
  for (unsigned w = 1; w < workers; ++w) {
    double want = total_work * w / workers;
    while (cur < n && double(p.total) - double(binom_u64(n - cur, 4)) < want) ++cur;
    cuts[w] = cur;
  }
  cuts[workers] = n;
  for (unsigned w = 0; w < workers; ++w) {
    parts[w].fill(0);
    pool.emplace_back([&, w] { count_range(st, n, cuts[w], cuts[w + 1], parts[w].data()); });
  }
  for (auto& t : pool) t.join();
  for (auto& part : parts)
    for (int c = 0; c < 42; ++c) p.counts[std::size_t(c)] += part[std::size_t(c)];
  return p;
}

Profile4 profile4_sampled(const OrientedGraph& G, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("profile4: sample count must be positive");
  std::uint32_t n = G.size();
  if (n < 4) throw std::invalid_argument("profile4: host must have at least 4 vertices");
  const auto& cat = Catalog4::get();
  Profile4 p;
  p.n = n;
  p.sampled = true;
  p.sample_count = samples;
  p.seed = seed;
  p.total = samples;
  std::mt19937_64 rng(seed);
  std::uint32_t v[4];
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint32_t got = 0;
    while (got < 4) {
      std::uint32_t cand = std::uint32_t(rng() % n);
      bool dup = false;
      for (std::uint32_t t = 0; t < got; ++t) dup |= (v[t] == cand);
      if (!dup) v[got++] = cand;
    }
    std::sort(v, v + 4);
    int code = 0, w = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        code += G.pair_state(v[i], v[j]) * w;
        w *= 3;
      }
    ++p.counts[std::size_t(cat.class_of_code(code))];
  }
  for (int c = 0; c < 42; ++c) {
    double ph = double(p.counts[std::size_t(c)]) / double(samples);
    p.stderr_[std::size_t(c)] = std::sqrt(ph * (1.0 - ph) / double(samples));
  }
  return p;
}

double density_exact(const OrientedGraph& H, const OrientedGraph& G) {
  const auto& cat = Catalog4::get();
  Profile4 p = profile4_exact(G);
  return p.density(cat.class_of(H));
}

std::string profile_to_csv(const Profile4& p) {
  const auto& cat = Catalog4::get();
  std::ostringstream os;
  os << "class_id,graph_string,count,density,stderr\n";
  for (int c = 0; c < 42; ++c) {
    os << c << ',' << format_graph(cat.classes()[std::size_t(c)].canon) << ','
       << p.counts[std::size_t(c)] << ',' << p.density(c) << ','
       << (p.sampled ? p.stderr_[std::size_t(c)] : 0.0) << '\n';
  }
  return os.str();
}

}  // namespace ind4
