#include "rlcm/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rlcm {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != static_cast<size_t>(rows) * cols) {
    throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(int ambient, const std::vector<Vec>& cols) {
  IntMatrix m(ambient, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != ambient) throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < ambient; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Vec IntMatrix::column(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::concat_columns(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("concat_columns: row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix m(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        m.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return m;
}

Vec IntMatrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec r(rows_, Int(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
  if (!is_square()) throw std::invalid_argument("pow: square matrix required");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Int IntMatrix::det() const {
  if (!is_square()) throw std::invalid_argument("det: square matrix required");
  int n = rows_;
  if (n == 0) return Int(1);
  IntMatrix a = *this;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) { piv = i; break; }
      }
      if (piv < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  Int d = a.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

std::vector<Int> IntMatrix::charpoly() const {
  // Faddeev-LeVerrier; all divisions are exact over Z.
  if (!is_square()) throw std::invalid_argument("charpoly: square matrix required");
  int n = rows_;
  std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
  c[n] = 1;
  IntMatrix nmat = identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix m = (*this) * nmat;
    Int tr(0);
    for (int i = 0; i < n; ++i) tr += m.at(i, i);
    Int ck;
    mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
    ck = -ck;
    c[n - k] = ck;
    nmat = m;
    for (int i = 0; i < n; ++i) nmat.at(i, i) += ck;
  }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      os << at(i, j).get_str();
      if (j + 1 < cols_) os << ",";
    }
    os << "]";
    if (i + 1 < rows_) os << ",";
  }
  os << "]";
  return os.str();
}

bool commutes(const IntMatrix& a, const IntMatrix& b) { return a * b == b * a; }

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    os << v[i].get_str();
    if (i + 1 < v.size()) os << ",";
  }
  os << ")";
  return os.str();
}

}  // namespace rlcm
