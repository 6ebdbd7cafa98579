#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ind4/polynomial.hpp"
#include "ind4/rational.hpp"

namespace ind4 {

enum class PartKind {
  empty,
  transitive,
  random_tournament,
  regular_tournament,
  arbitrary_tournament,
  iterate,
  circular,
  sub,
};

struct ConstructionSpec;

struct Part {
  std::string name;
  Rat weight;
  PartKind kind = PartKind::empty;
  Rat alpha;  // circular only, 0 <= alpha <= 1/2
  std::shared_ptr<ConstructionSpec> sub;
};

enum class ArcMode { directed, choice };

/// Cross-part arc rule. Constant probability, or a polynomial in the
/// normalized transitive position of the endpoint lying in the (unique)
/// transitive part.
struct ArcRule {
  std::string from;
  std::string to;
  bool is_poly = false;
  Rat prob;
  Poly<Rat> poly;
  ArcMode mode = ArcMode::directed;
};

struct ConstructionSpec {
  std::string name;
  std::vector<Part> parts;
  std::vector<ArcRule> arcs;
  /// Marks specs whose target-class count provably does not depend on the
  /// choice of "arbitrary tournament" fills; the limit evaluator then
  /// substitutes transitive tournaments.
  bool tournament_invariant = false;

  int part_index(const std::string& name) const;
};

/// Returns diagnostics; empty means the spec is valid.
std::vector<std::string> validate_spec(const ConstructionSpec& spec);

void require_valid(const ConstructionSpec& spec);

std::string spec_to_json(const ConstructionSpec& spec);
ConstructionSpec spec_from_json(const std::string& json_text);

}  // namespace ind4
