#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ind4/flags.hpp"
#include "ind4/graph.hpp"
#include "ind4/rational.hpp"

namespace ind4 {

struct CertBlock {
  FlagType type;
  std::vector<OrientedGraph> flags;     // all on the same vertex count m
  std::vector<std::vector<Rat>> Q;      // symmetric, dim = flag count
};

/// Upper-bound certificate: accepting verification proves that the limit
/// density of the target class is at most lambda.
struct FlagCertificate {
  std::string target;  // 4-vertex graph string
  int N = 5;           // expansion order
  Rat lambda;
  std::vector<CertBlock> blocks;
};

struct VerifyResult {
  bool accepted = false;
  std::string reason;  // empty when accepted
  std::optional<OrientedGraph> witness;
};

/// Exact rational verification: structural checks, fraction-free PSD test of
/// every block, and the inequality
///   d(H; G) + sum_blocks <Q, M(G)>  <=  lambda
/// for every oriented graph G on N vertices.
VerifyResult verify_certificate(const FlagCertificate& cert);

/// Zero-matrix certificate with lambda = max over |G| = N of d(H; G).
FlagCertificate trivial_certificate(const OrientedGraph& target, int N);

/// Fraction-free symmetric decomposition; true iff the matrix is PSD.
bool psd_check_exact(std::vector<std::vector<Rat>> a);

std::string certificate_to_json(const FlagCertificate& cert);
FlagCertificate certificate_from_json(const std::string& text);

}  // namespace ind4
