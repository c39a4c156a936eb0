#pragma once

#include <optional>
#include <vector>

#include "rlcm/ads.hpp"

namespace rlcm {

// Finite enumeration window of S = Z^d x P used for ground-truth checks.
struct Ball {
  int depth;
  long window;
  std::vector<SemidirectElement> elements;
};

constexpr size_t kDefaultBallCap = 1'000'000;

Ball enumerate_ball(const AdsSpec& spec, int depth, long window, size_t cap = kDefaultBallCap);

struct OracleFoundationResult {
  bool ok;
  std::optional<SemidirectElement> witness;
};

// Every ball element's ideal must meet the ideal of some member of f.
OracleFoundationResult oracle_foundation_check(const AdsSpec& spec, const std::vector<SemidirectElement>& f,
                                               const Ball& ball);

// Ball elements lying in aS, by exact division.
std::vector<SemidirectElement> oracle_ideal_points(const AdsSpec& spec, const SemidirectElement& a,
                                                   const Ball& ball);

}  // namespace rlcm
