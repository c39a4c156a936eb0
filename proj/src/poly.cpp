#include "rlcm/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rlcm {

namespace {

const Int kZero(0);

// All positive divisors, ascending; absent when n exceeds the trial budget.
std::optional<std::vector<Int>> positive_divisors(const Int& n_in) {
  Int n = abs(n_in);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 44) return std::nullopt;
  std::vector<Int> small, large;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      Int q = n / i;
      if (q != i) large.push_back(q);
    }
    if (small.size() + large.size() > 4096) return std::nullopt;
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

}  // namespace

IntPoly IntPoly::from_coeffs(std::vector<Int> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return IntPoly{std::move(coeffs)};
}

IntPoly IntPoly::x_minus(const Int& root) { return IntPoly{{-root, Int(1)}}; }

const Int& IntPoly::constant() const { return c.empty() ? kZero : c.front(); }

const Int& IntPoly::leading() const {
  if (c.empty()) throw std::invalid_argument("leading of zero polynomial");
  return c.back();
}

Int IntPoly::eval(const Int& x) const {
  Int r(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

IntMatrix IntPoly::eval_matrix(const IntMatrix& a) const {
  if (!a.is_square()) throw std::invalid_argument("eval_matrix: square matrix required");
  int n = a.rows();
  IntMatrix r(n, n);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r = r * a;
    for (int i = 0; i < n; ++i) r.at(i, i) += *it;
  }
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (c.empty() || other.c.empty()) return IntPoly{};
  std::vector<Int> r(c.size() + other.c.size() - 1, Int(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < other.c.size(); ++j) r[i + j] += c[i] * other.c[j];
  return from_coeffs(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& a = c[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Int m = abs(a);
    if (m != 1 || k == 0) os << m.get_str();
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<Int> rem = f.c;
  std::vector<Int> quot(f.degree() - g.degree() + 1, Int(0));
  for (int k = f.degree() - g.degree(); k >= 0; --k) {
    Int num = rem[k + g.degree()];
    if (num == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), g.leading().get_mpz_t());
    if (r != 0) return std::nullopt;
    quot[k] = q;
    for (size_t j = 0; j < g.c.size(); ++j) rem[k + j] -= q * g.c[j];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return IntPoly::from_coeffs(std::move(quot));
}

namespace {

// Monic degree-m interpolant through (points[j], values[j]), if integral.
std::optional<IntPoly> monic_integer_interpolant(const std::vector<Int>& points,
                                                 const std::vector<Int>& values, int m) {
  size_t n = points.size();
  std::vector<mpq_class> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = mpq_class(values[i]);
  // Newton divided differences in place: dd[i] becomes coefficient of level i.
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      mpq_class denom(points[i] - points[i - level]);
      dd[i] = (dd[i] - dd[i - 1]) / denom;
      if (i == level) break;
    }
  }
  // Expand Newton form to monomial coefficients.
  std::vector<mpq_class> coeffs(1, dd[n - 1]);
  for (size_t i = n - 1; i > 0; --i) {
    // coeffs := coeffs * (x - points[i-1]) + dd[i-1]
    std::vector<mpq_class> next(coeffs.size() + 1, mpq_class(0));
    for (size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * mpq_class(points[i - 1]);
    }
    next[0] += dd[i - 1];
    coeffs = std::move(next);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (static_cast<int>(coeffs.size()) != m + 1) return std::nullopt;
  std::vector<Int> ic(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    if (coeffs[i].get_den() != 1) return std::nullopt;
    ic[i] = coeffs[i].get_num();
  }
  if (ic.back() != 1) return std::nullopt;
  return IntPoly::from_coeffs(std::move(ic));
}

// Kronecker search for a monic degree-m factor of monic f (no integer roots).
// Returns the factor, or nullopt{found=false}; sets budget_ok = false when the
// divisor enumeration is too large to finish.
std::optional<IntPoly> kronecker_factor(const IntPoly& f, int m, bool& budget_ok) {
  std::vector<Int> points;
  for (int j = 0; static_cast<int>(points.size()) < m + 1; ++j) {
    if (j == 0) points.push_back(Int(0));
    else {
      points.push_back(Int((j + 1) / 2 * ((j % 2) ? 1 : -1)));
    }
  }
  std::vector<Int> values(points.size());
  std::vector<std::vector<Int>> divs(points.size());
  double combos = 1.0;
  for (size_t j = 0; j < points.size(); ++j) {
    values[j] = f.eval(points[j]);
    if (values[j] == 0) return std::nullopt;  // root handling happens earlier
    auto d = positive_divisors(values[j]);
    if (!d) { budget_ok = false; return std::nullopt; }
    divs[j] = std::move(*d);
    combos *= 2.0 * static_cast<double>(divs[j].size());
    if (combos > 2.0e5) { budget_ok = false; return std::nullopt; }
  }
  size_t n = points.size();
  std::vector<size_t> pick(n, 0);  // index into signed divisor list: 2*i (=+d) / 2*i+1 (=-d)
  std::vector<Int> vals(n);
  while (true) {
    for (size_t j = 0; j < n; ++j) {
      const Int& d = divs[j][pick[j] / 2];
      vals[j] = (pick[j] % 2) ? Int(-d) : d;
    }
    auto g = monic_integer_interpolant(points, vals, m);
    if (g) {
      auto q = divide_exact(f, *g);
      if (q) return g;
    }
    size_t j = 0;
    for (; j < n; ++j) {
      if (++pick[j] < 2 * divs[j].size()) break;
      pick[j] = 0;
    }
    if (j == n) break;
  }
  return std::nullopt;
}

}  // namespace

Factorization factor_monic(const IntPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("factor_monic: monic polynomial required");
  Factorization out{{}, true};
  IntPoly work = f;

  auto divide_out_all = [&](const IntPoly& g) {
    int mult = 0;
    while (true) {
      auto q = divide_exact(work, g);
      if (!q) break;
      work = *q;
      ++mult;
    }
    out.factors.push_back({g, mult});
  };

  // powers of x
  if (!work.is_zero() && work.constant() == 0) divide_out_all(IntPoly{{Int(0), Int(1)}});

  // integer roots: candidates divide the constant term
  while (work.degree() >= 1) {
    auto ds = positive_divisors(work.constant());
    if (!ds) { out.complete = false; break; }
    bool found = false;
    for (const auto& d : *ds) {
      for (int s = 0; s < 2 && !found; ++s) {
        Int r = s == 0 ? d : Int(-d);
        if (work.eval(r) == 0) {
          divide_out_all(IntPoly::x_minus(r));
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }

  // non-linear factors, ascending degree
  int m = 2;
  while (out.complete && work.degree() >= 2 * m) {
    bool budget_ok = true;
    auto g = kronecker_factor(work, m, budget_ok);
    if (!budget_ok) { out.complete = false; break; }
    if (g) divide_out_all(*g);
    else ++m;
  }

  if (work.degree() >= 1) out.factors.push_back({work, 1});
  return out;
}

}  // namespace rlcm
