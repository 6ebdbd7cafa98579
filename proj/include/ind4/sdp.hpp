#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ind4/certificate.hpp"

namespace ind4 {

/// Numeric search for PSD block matrices lowering the verified bound, then
/// rationalization with an exact recomputation of lambda. The returned
/// certificate always verifies; when no improvement over the trivial bound is
/// found, the trivial certificate is returned. N = 5, type orders in {1, 3}.
std::pair<Rat, FlagCertificate> heuristic_sdp_bound(const OrientedGraph& target, int N,
                                                    const std::vector<int>& type_orders,
                                                    std::uint64_t seed, int iterations = 600);

}  // namespace ind4
