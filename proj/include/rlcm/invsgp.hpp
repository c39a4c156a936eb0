#pragma once

#include <optional>
#include <string>

#include "rlcm/ads.hpp"
#include "rlcm/certify.hpp"

namespace rlcm {

// Element of the inverse semigroup of S: zero or a pair [s,t] standing for
// v_s v_t^*.  Pairs are stored in normal form: the right unit ambiguity
// (units are G x {1}) is removed by reducing t's group part modulo the image
// of theta_{t.p}, so equality is structural.
class InvElement {
 public:
  static InvElement zero();
  static InvElement pair(const AdsSpec& spec, const SemidirectElement& s, const SemidirectElement& t);
  static InvElement one(const AdsSpec& spec);

  bool is_zero() const { return zero_; }
  const SemidirectElement& s() const;
  const SemidirectElement& t() const;

  bool operator==(const InvElement& other) const;
  bool operator!=(const InvElement& other) const { return !(*this == other); }

  std::string to_string(const AdsSpec& spec) const;

 private:
  InvElement() : zero_(true) {}
  bool zero_;
  std::optional<SemidirectElement> s_, t_;
};

InvElement mul_inv(const AdsSpec& spec, const InvElement& a, const InvElement& b);
InvElement star(const AdsSpec& spec, const InvElement& a);

// e_{sS}, with ZERO and ONE split out; E(identity ideal) collapses to ONE.
struct IdealProjection {
  enum class Kind { Zero, One, E };
  Kind kind;
  std::optional<SemidirectElement> s;

  static IdealProjection zero();
  static IdealProjection one();
  static IdealProjection of(const AdsSpec& spec, const SemidirectElement& s);

  InvElement as_inv(const AdsSpec& spec) const;
  bool operator==(const IdealProjection& other) const;
};

IdealProjection mul_proj(const AdsSpec& spec, const IdealProjection& a, const IdealProjection& b);

// Core of S: for these systems it is exactly the unit group G x {1}.
struct CoreDescription {
  std::string description;
};
CoreDescription core_units(const AdsSpec& spec);
bool is_core(const AdsSpec& spec, const SemidirectElement& s);

// Depth-truncated evaluation of the group-part constraint set for a unit
// outer part: theta_q applied to the intersection of all images.  value is
// the certified limit when available, otherwise the truncation; truncation is
// always the depth-computed coset.
struct GphqResult {
  bool certified;
  int depth;
  Coset value;
  Coset truncation;
};
GphqResult compute_gphq(const AdsSpec& spec, const MonoidElement& p, const Vec& h, const MonoidElement& q,
                        int depth);

enum class WeaklyFixedVerdict { No, YesCertified, YesUpToDepth };
std::string to_string(WeaklyFixedVerdict v);

struct WeaklyFixedResult {
  WeaklyFixedVerdict verdict;
  std::optional<SemidirectElement> witness_r;  // concrete r with empty shifted intersection
  std::string detail;
};

// Does a = [s,t] weakly fix e = E(u)?  Requires u in tS (a*a >= e).
WeaklyFixedResult is_weakly_fixed(const AdsSpec& spec, const InvElement& a, const IdealProjection& e,
                                  int depth);

}  // namespace rlcm
