#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlcm/matrix.hpp"

namespace rlcm {

// Subgroup of Z^d in canonical column Hermite normal form: pivot rows are
// strictly increasing, pivots positive, entries left of a pivot lie in
// [0, pivot) and entries right of it are zero.  Lattice equality is
// representation equality.
class Lattice {
 public:
  // Canonicalizes the column span of an arbitrary generating matrix.
  static Lattice from_columns(const IntMatrix& generators);
  static Lattice zero(int ambient);
  static Lattice full(int ambient);

  int ambient_rank() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }

  bool is_zero() const { return rank() == 0; }
  bool is_full_rank() const { return rank() == ambient_; }

  // |det(basis)| when full rank, absent (infinite) otherwise.
  std::optional<Int> index() const;

  bool contains(const Vec& v) const;
  // Canonical coset representative of v modulo this lattice.
  Vec reduce(const Vec& v) const;

  // All index() canonical representatives in lexicographic order.
  std::vector<Vec> transversal() const;

  bool operator==(const Lattice& other) const { return ambient_ == other.ambient_ && basis_ == other.basis_; }
  bool operator!=(const Lattice& other) const { return !(*this == other); }
  bool lex_less(const Lattice& other) const;

  std::string to_string() const;

 private:
  Lattice(int ambient, IntMatrix basis, std::vector<int> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivot_rows_(std::move(pivots)) {}

  int ambient_;
  IntMatrix basis_;
  std::vector<int> pivot_rows_;
};

Lattice intersect(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);

// Left coset offset + lattice with the offset reduced canonically.
struct Coset {
  Vec offset;
  Lattice lattice;

  static Coset make(Vec offset, Lattice lattice);
  bool contains(const Vec& v) const;
  bool operator==(const Coset& other) const { return offset == other.offset && lattice == other.lattice; }
  std::string to_string() const;
};

std::optional<Coset> coset_intersection(const Coset& a, const Coset& b);

// Column HNF together with the unimodular column transform: m * transform = hnf
// padded with zero columns.  rank = number of nonzero columns of the padded form.
struct HnfTransform {
  IntMatrix hnf_padded;
  IntMatrix transform;
  std::vector<int> pivot_rows;
  int rank;
};
HnfTransform hnf_with_transform(const IntMatrix& m);

// Integer solution x of m x = v, if one exists.
std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& v);
// Same, reusing a precomputed transform of m.
std::optional<Vec> solve_with(const HnfTransform& t, const Vec& v);

// Saturated lattice {x : m x = 0} inside Z^{cols(m)}.
Lattice kernel_lattice(const IntMatrix& m);

// Smallest saturated lattice containing l (same rational span).
Lattice saturate(const Lattice& l);

}  // namespace rlcm
