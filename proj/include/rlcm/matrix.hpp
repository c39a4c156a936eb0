#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace rlcm {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Dense integer matrix with arbitrary-precision entries, row-major storage.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Int(0)) {}
  IntMatrix(int rows, int cols, std::vector<Int> entries);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_columns(int ambient, const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Vec column(int j) const;
  IntMatrix transpose() const;
  IntMatrix concat_columns(const IntMatrix& other) const;

  IntMatrix operator*(const IntMatrix& other) const;
  Vec apply(const Vec& v) const;
  IntMatrix pow(unsigned long e) const;

  // Exact determinant by fraction-free (Bareiss) elimination.
  Int det() const;

  // Characteristic polynomial, ascending coefficients, monic of degree n.
  std::vector<Int> charpoly() const;

  bool operator==(const IntMatrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_; }
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  int rows_;
  int cols_;
  std::vector<Int> e_;
};

bool commutes(const IntMatrix& a, const IntMatrix& b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
std::string vec_to_string(const Vec& v);

}  // namespace rlcm
