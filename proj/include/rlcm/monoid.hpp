#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlcm/matrix.hpp"

namespace rlcm {

enum class MonoidKind { FreeAbelian, Free };

struct MonoidSpec {
  MonoidKind kind;
  int generator_count;
  std::vector<std::string> names;

  void validate() const;
  int name_index(const std::string& name) const;  // -1 when absent
};

// Element of P: exponent vector for free abelian monoids, word of generator
// indices for free monoids.
class MonoidElement {
 public:
  static MonoidElement identity(const MonoidSpec& spec);
  static MonoidElement from_exponents(std::vector<long> exps);
  static MonoidElement from_word(std::vector<int> word);
  static MonoidElement generator(const MonoidSpec& spec, int index);

  MonoidKind kind() const { return kind_; }
  const std::vector<long>& exponents() const { return exps_; }
  const std::vector<int>& word() const { return word_; }

  bool is_identity() const;
  long degree() const;  // total exponent / word length
  MonoidElement mul(const MonoidElement& other) const;

  bool operator==(const MonoidElement& other) const;
  bool operator!=(const MonoidElement& other) const { return !(*this == other); }
  bool lex_less(const MonoidElement& other) const;

  std::string to_string(const MonoidSpec& spec) const;

 private:
  MonoidKind kind_;
  std::vector<long> exps_;
  std::vector<int> word_;
};

// a <= b in the ideal order, i.e. b in aP.
bool divides(const MonoidElement& a, const MonoidElement& b);
// m with a*m = b; requires divides(a, b).
MonoidElement left_quotient(const MonoidElement& a, const MonoidElement& b);

struct LcmResult {
  MonoidElement lcm;        // r with pP cap qP = rP
  MonoidElement p_comp;     // p * p_comp = r
  MonoidElement q_comp;     // q * q_comp = r
};
// Absent means the principal right ideals are disjoint.
std::optional<LcmResult> lcm_p(const MonoidElement& p, const MonoidElement& q);

struct PFoundationCheck {
  bool is_foundation;
  std::optional<MonoidElement> witness;  // ideal disjoint from all of f when not
};
PFoundationCheck is_p_foundation_set(const MonoidSpec& spec, const std::vector<MonoidElement>& f);

// Accurate refinement inside f; requires f to be a foundation set.
std::vector<MonoidElement> accurate_refine_p(const MonoidSpec& spec, const std::vector<MonoidElement>& f);

struct PfResult {
  std::vector<MonoidElement> elements;
  // indispensability witness per element: p with pP meeting the element's
  // ideal and no other surviving ideal
  std::vector<MonoidElement> witnesses;
};
PfResult construct_pf(const MonoidSpec& spec, const std::vector<MonoidElement>& q_parts);

bool is_directed(const MonoidSpec& spec);

// All monoid elements of degree at most depth, in (degree, lex) order.
std::vector<MonoidElement> monoid_ball(const MonoidSpec& spec, int depth);

std::vector<MonoidElement> sorted_unique(std::vector<MonoidElement> v);

}  // namespace rlcm
