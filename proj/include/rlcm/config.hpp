#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlcm/ads.hpp"
#include "rlcm/certify.hpp"

namespace rlcm {

struct Diagnostic {
  int line;
  int col;
  std::string message;
};

struct SystemConfig {
  AdsSpec spec;
  Amenability amenability = Amenability::Assumed;
  int depth = 6;
  std::optional<long> window;
  size_t ball_cap = 1'000'000;
};

struct ParseResult {
  std::optional<SystemConfig> config;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return config.has_value(); }
};

// Line-oriented grammar with [group]/[monoid]/[action]/[flags] sections.
// Unknown keys and malformed values are reported with line/column positions;
// a syntactically valid config is additionally run through validate_ads.
ParseResult parse_config(const std::string& text);

// Element literal "(g1,...,gd ; p)".  The monoid part accepts an exponent
// list for free abelian monoids, a generator name, a word over single-letter
// names, or -- when every generator name is an integer -- a positive integer
// that factors uniquely over the generator values.
SemidirectElement parse_element(const AdsSpec& spec, const std::string& text);

// Bare monoid part, same syntax as the part after ';' in an element literal.
MonoidElement parse_monoid_element(const AdsSpec& spec, const std::string& text);

long default_window(const AdsSpec& spec);

}  // namespace rlcm
