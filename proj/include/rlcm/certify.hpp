#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlcm/ads.hpp"
#include "rlcm/poly.hpp"

namespace rlcm {

enum class MinimalityKind { Minimal, NotMinimal, Inconclusive };
std::string to_string(MinimalityKind k);

struct MinimalityVerdict {
  MinimalityKind kind = MinimalityKind::Inconclusive;
  // NotMinimal: nonzero lattice with M inside theta_a(M) for every generator,
  // re-verified exactly.
  std::optional<Lattice> witness;
  // Minimal: generator whose characteristic polynomial has no integer factor
  // with constant term +-1, plus its certified factor list.
  std::string certificate;
  std::vector<IntPoly> certificate_factors;
  // Inconclusive diagnostics.
  int depth = 0;
  std::optional<Lattice> last_lattice;
};

struct ConditionHVerdict {
  bool pass;
  std::string citation;
};

ConditionHVerdict check_condition_h(const AdsSpec& spec);

constexpr int kDefaultDepthBudget = 6;

MinimalityVerdict check_minimality(const AdsSpec& spec, int depth_budget = kDefaultDepthBudget);
MinimalityVerdict check_effectiveness(const AdsSpec& spec, int depth_budget = kDefaultDepthBudget);

// Images of all monoid elements of degree <= depth, intersected.
Lattice image_intersection(const AdsSpec& spec, int depth);

// Limit of the image intersections: certified when the minimality engine pins
// it down exactly, otherwise the truncation at depth_budget.
struct IntersectionLimit {
  bool certified;
  Lattice lattice;
  int depth;
};
IntersectionLimit intersection_limit(const AdsSpec& spec, int depth_budget = kDefaultDepthBudget);

enum class ThreeValued { Yes, No, Unknown };
std::string to_string(ThreeValued v);

enum class Amenability { Assumed, AssertedByUser, Unknown };
std::string to_string(Amenability a);

struct PureInfinitenessCheck {
  ThreeValued conditional;          // given simplicity
  std::optional<std::pair<SemidirectElement, SemidirectElement>> disjoint_pair;
  std::string reason;
};
PureInfinitenessCheck check_pure_infiniteness(const AdsSpec& spec);

struct SimplicityReport {
  ConditionHVerdict condition_h;
  Amenability amenability;
  MinimalityVerdict effectiveness;
  ThreeValued simple = ThreeValued::Unknown;
  ThreeValued purely_infinite = ThreeValued::Unknown;
  ThreeValued kirchberg = ThreeValued::Unknown;
  std::optional<std::pair<SemidirectElement, SemidirectElement>> pi_witness;
  std::vector<std::string> citations;
};

SimplicityReport kirchberg_report(const AdsSpec& spec, Amenability amenability,
                                  int depth_budget = kDefaultDepthBudget);

}  // namespace rlcm
