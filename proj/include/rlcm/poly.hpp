#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlcm/matrix.hpp"

namespace rlcm {

// Integer polynomial, ascending coefficients, no trailing zeros.
struct IntPoly {
  std::vector<Int> c;

  static IntPoly from_coeffs(std::vector<Int> coeffs);
  static IntPoly x_minus(const Int& root);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Int& constant() const;
  const Int& leading() const;
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  Int eval(const Int& x) const;
  IntMatrix eval_matrix(const IntMatrix& a) const;

  IntPoly operator*(const IntPoly& other) const;
  bool operator==(const IntPoly& other) const { return c == other.c; }

  std::string to_string() const;
};

// Quotient when divisor divides exactly, otherwise absent.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

struct PolyFactor {
  IntPoly poly;
  int multiplicity;
};

// Factorization of a monic integer polynomial.  complete means every listed
// factor is certified irreducible over Z; the search gives up (complete =
// false) only when divisor enumeration exceeds its budget.
struct Factorization {
  std::vector<PolyFactor> factors;
  bool complete;
};

Factorization factor_monic(const IntPoly& f);

}  // namespace rlcm
