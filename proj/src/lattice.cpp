#include "rlcm/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace rlcm {

namespace {

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_col(IntMatrix& m, int j) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

// col_j -= t * col_r
void axpy_col(IntMatrix& m, int j, int r, const Int& t) {
  if (t == 0) return;
  for (int i = 0; i < m.rows(); ++i) m.at(i, j) -= t * m.at(i, r);
}

}  // namespace

HnfTransform hnf_with_transform(const IntMatrix& m) {
  int d = m.rows();
  int c = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(c);
  std::vector<int> pivots;
  int r = 0;
  for (int i = 0; i < d && r < c; ++i) {
    // gcd-eliminate row i across columns r..c-1
    while (true) {
      int best = -1;
      for (int j = r; j < c; ++j) {
        if (h.at(i, j) == 0) continue;
        if (best < 0 || mpz_cmpabs(h.at(i, j).get_mpz_t(), h.at(i, best).get_mpz_t()) < 0) best = j;
      }
      if (best < 0) break;
      swap_cols(h, r, best);
      swap_cols(u, r, best);
      bool clean = true;
      for (int j = r + 1; j < c; ++j) {
        if (h.at(i, j) == 0) continue;
        Int t;
        mpz_tdiv_q(t.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, r).get_mpz_t());
        axpy_col(h, j, r, t);
        axpy_col(u, j, r, t);
        if (h.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(i, r) == 0) continue;
    if (h.at(i, r) < 0) {
      negate_col(h, r);
      negate_col(u, r);
    }
    // reduce entries left of the pivot into [0, pivot)
    for (int j = 0; j < r; ++j) {
      Int t;
      mpz_fdiv_q(t.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, r).get_mpz_t());
      axpy_col(h, j, r, t);
      axpy_col(u, j, r, t);
    }
    pivots.push_back(i);
    ++r;
  }
  return HnfTransform{std::move(h), std::move(u), std::move(pivots), r};
}

Lattice Lattice::from_columns(const IntMatrix& generators) {
  HnfTransform t = hnf_with_transform(generators);
  IntMatrix basis(generators.rows(), t.rank);
  for (int i = 0; i < generators.rows(); ++i)
    for (int j = 0; j < t.rank; ++j) basis.at(i, j) = t.hnf_padded.at(i, j);
  return Lattice(generators.rows(), std::move(basis), std::move(t.pivot_rows));
}

Lattice Lattice::zero(int ambient) { return Lattice(ambient, IntMatrix(ambient, 0), {}); }

Lattice Lattice::full(int ambient) {
  std::vector<int> pivots(ambient);
  for (int i = 0; i < ambient; ++i) pivots[i] = i;
  return Lattice(ambient, IntMatrix::identity(ambient), std::move(pivots));
}

std::optional<Int> Lattice::index() const {
  if (rank() != ambient_) return std::nullopt;
  Int idx(1);
  for (int k = 0; k < rank(); ++k) idx *= basis_.at(pivot_rows_[k], k);
  return idx;
}

Vec Lattice::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("reduce: dimension mismatch");
  Vec w = v;
  for (int k = 0; k < rank(); ++k) {
    int i = pivot_rows_[k];
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), w[i].get_mpz_t(), basis_.at(i, k).get_mpz_t());
    if (t == 0) continue;
    for (int row = 0; row < ambient_; ++row) w[row] -= t * basis_.at(row, k);
  }
  return w;
}

bool Lattice::contains(const Vec& v) const { return rlcm::is_zero(reduce(v)); }

std::vector<Vec> Lattice::transversal() const {
  auto idx = index();
  if (!idx) throw std::invalid_argument("transversal: lattice has infinite index");
  std::vector<Vec> reps;
  Vec cur(ambient_, Int(0));
  while (true) {
    reps.push_back(cur);
    int k = rank() - 1;
    for (; k >= 0; --k) {
      int i = pivot_rows_[k];
      cur[i] += 1;
      if (cur[i] < basis_.at(i, k)) break;
      cur[i] = 0;
    }
    if (k < 0) break;
  }
  return reps;
}

bool Lattice::lex_less(const Lattice& other) const {
  if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
  if (rank() != other.rank()) return rank() < other.rank();
  for (int i = 0; i < ambient_; ++i)
    for (int j = 0; j < rank(); ++j) {
      int c = cmp(basis_.at(i, j), other.basis_.at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

std::string Lattice::to_string() const {
  std::ostringstream os;
  os << "lattice(ambient=" << ambient_ << ", basis=" << basis_.to_string() << ")";
  return os.str();
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Lattice::zero(a.ambient_rank());
  IntMatrix m = a.basis().concat_columns(b.basis());
  HnfTransform t = hnf_with_transform(m);
  int total = m.cols();
  int kdim = total - t.rank;
  IntMatrix gens(a.ambient_rank(), kdim);
  for (int kcol = 0; kcol < kdim; ++kcol) {
    // kernel column of [A | B]; project to x-part and map through A
    Vec x(a.rank(), Int(0));
    for (int i = 0; i < a.rank(); ++i) x[i] = t.transform.at(i, t.rank + kcol);
    Vec img = a.basis().apply(x);
    for (int i = 0; i < a.ambient_rank(); ++i) gens.at(i, kcol) = img[i];
  }
  return Lattice::from_columns(gens);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("lattice_sum: ambient mismatch");
  return Lattice::from_columns(a.basis().concat_columns(b.basis()));
}

Coset Coset::make(Vec offset, Lattice lattice) {
  Vec reduced = lattice.reduce(offset);
  return Coset{std::move(reduced), std::move(lattice)};
}

bool Coset::contains(const Vec& v) const { return lattice.contains(sub(v, offset)); }

std::string Coset::to_string() const {
  std::ostringstream os;
  os << vec_to_string(offset) << " + " << lattice.to_string();
  return os.str();
}

std::optional<Coset> coset_intersection(const Coset& a, const Coset& b) {
  if (a.lattice.ambient_rank() != b.lattice.ambient_rank())
    throw std::invalid_argument("coset_intersection: ambient mismatch");
  IntMatrix m = a.lattice.basis().concat_columns(b.lattice.basis());
  auto w = solve_integer(m, sub(b.offset, a.offset));
  if (!w) return std::nullopt;
  Vec x(a.lattice.rank());
  for (int i = 0; i < a.lattice.rank(); ++i) x[i] = (*w)[i];
  Vec point = add(a.offset, a.lattice.basis().apply(x));
  return Coset::make(std::move(point), intersect(a.lattice, b.lattice));
}

std::optional<Vec> solve_with(const HnfTransform& t, const Vec& v) {
  if (static_cast<int>(v.size()) != t.hnf_padded.rows())
    throw std::invalid_argument("solve_with: dimension mismatch");
  Vec w(t.hnf_padded.cols(), Int(0));
  Vec resid = v;
  for (int k = 0; k < t.rank; ++k) {
    int i = t.pivot_rows[k];
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), resid[i].get_mpz_t(), t.hnf_padded.at(i, k).get_mpz_t());
    if (r != 0) return std::nullopt;
    w[k] = q;
    if (q != 0) {
      for (int row = 0; row < t.hnf_padded.rows(); ++row) resid[row] -= q * t.hnf_padded.at(row, k);
    }
  }
  if (!rlcm::is_zero(resid)) return std::nullopt;
  return t.transform.apply(w);
}

std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  return solve_with(hnf_with_transform(m), v);
}

Lattice kernel_lattice(const IntMatrix& m) {
  HnfTransform t = hnf_with_transform(m);
  int kdim = m.cols() - t.rank;
  IntMatrix gens(m.cols(), kdim);
  for (int k = 0; k < kdim; ++k)
    for (int i = 0; i < m.cols(); ++i) gens.at(i, k) = t.transform.at(i, t.rank + k);
  return Lattice::from_columns(gens);
}

Lattice saturate(const Lattice& l) {
  if (l.is_zero() || l.is_full_rank()) {
    if (l.is_full_rank()) return Lattice::full(l.ambient_rank());
    return l;
  }
  Lattice ortho = kernel_lattice(l.basis().transpose());
  return kernel_lattice(ortho.basis().transpose());
}

}  // namespace rlcm
