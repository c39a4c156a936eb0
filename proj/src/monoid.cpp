#include "rlcm/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rlcm {

void MonoidSpec::validate() const {
  if (generator_count < 1) throw std::invalid_argument("monoid needs at least one generator");
  if (static_cast<int>(names.size()) != generator_count)
    throw std::invalid_argument("generator name count mismatch");
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != generator_count)
    throw std::invalid_argument("generator names must be distinct");
  for (const auto& n : names)
    if (n.empty()) throw std::invalid_argument("empty generator name");
}

int MonoidSpec::name_index(const std::string& name) const {
  for (int i = 0; i < generator_count; ++i)
    if (names[i] == name) return i;
  return -1;
}

MonoidElement MonoidElement::identity(const MonoidSpec& spec) {
  MonoidElement e;
  e.kind_ = spec.kind;
  if (spec.kind == MonoidKind::FreeAbelian) e.exps_.assign(spec.generator_count, 0);
  return e;
}

MonoidElement MonoidElement::from_exponents(std::vector<long> exps) {
  for (long x : exps)
    if (x < 0) throw std::invalid_argument("negative exponent");
  MonoidElement e;
  e.kind_ = MonoidKind::FreeAbelian;
  e.exps_ = std::move(exps);
  return e;
}

MonoidElement MonoidElement::from_word(std::vector<int> word) {
  for (int x : word)
    if (x < 0) throw std::invalid_argument("invalid generator index in word");
  MonoidElement e;
  e.kind_ = MonoidKind::Free;
  e.word_ = std::move(word);
  return e;
}

MonoidElement MonoidElement::generator(const MonoidSpec& spec, int index) {
  if (index < 0 || index >= spec.generator_count) throw std::invalid_argument("generator index out of range");
  if (spec.kind == MonoidKind::FreeAbelian) {
    std::vector<long> e(spec.generator_count, 0);
    e[index] = 1;
    return from_exponents(std::move(e));
  }
  return from_word({index});
}

bool MonoidElement::is_identity() const { return degree() == 0; }

long MonoidElement::degree() const {
  if (kind_ == MonoidKind::FreeAbelian) {
    long s = 0;
    for (long x : exps_) s += x;
    return s;
  }
  return static_cast<long>(word_.size());
}

MonoidElement MonoidElement::mul(const MonoidElement& other) const {
  if (kind_ != other.kind_) throw std::invalid_argument("monoid kind mismatch");
  MonoidElement r = *this;
  if (kind_ == MonoidKind::FreeAbelian) {
    if (exps_.size() != other.exps_.size()) throw std::invalid_argument("exponent length mismatch");
    for (size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  } else {
    r.word_.insert(r.word_.end(), other.word_.begin(), other.word_.end());
  }
  return r;
}

bool MonoidElement::operator==(const MonoidElement& other) const {
  return kind_ == other.kind_ && exps_ == other.exps_ && word_ == other.word_;
}

bool MonoidElement::lex_less(const MonoidElement& other) const {
  if (kind_ == MonoidKind::FreeAbelian) return exps_ < other.exps_;
  return word_ < other.word_;
}

std::string MonoidElement::to_string(const MonoidSpec& spec) const {
  std::ostringstream os;
  if (kind_ == MonoidKind::FreeAbelian) {
    // integer generator names print as the product value, which is also the
    // accepted input syntax; other names fall back to the exponent list
    bool numeric = true;
    for (const auto& n : spec.names) {
      for (char c : n) numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
      numeric = numeric && !n.empty() && n != "0" && n != "1";
    }
    if (numeric) {
      Int value(1);
      for (size_t i = 0; i < exps_.size(); ++i) {
        Int base(spec.names[i]);
        for (long e = 0; e < exps_[i]; ++e) value *= base;
      }
      os << value.get_str();
    } else {
      for (size_t i = 0; i < exps_.size(); ++i) {
        os << exps_[i];
        if (i + 1 < exps_.size()) os << ",";
      }
    }
  } else {
    if (word_.empty()) os << "e";
    for (int g : word_) os << spec.names[g];
  }
  return os.str();
}

bool divides(const MonoidElement& a, const MonoidElement& b) {
  if (a.kind() != b.kind()) throw std::invalid_argument("monoid kind mismatch");
  if (a.kind() == MonoidKind::FreeAbelian) {
    for (size_t i = 0; i < a.exponents().size(); ++i)
      if (a.exponents()[i] > b.exponents()[i]) return false;
    return true;
  }
  if (a.word().size() > b.word().size()) return false;
  return std::equal(a.word().begin(), a.word().end(), b.word().begin());
}

MonoidElement left_quotient(const MonoidElement& a, const MonoidElement& b) {
  if (!divides(a, b)) throw std::invalid_argument("left_quotient: not divisible");
  if (a.kind() == MonoidKind::FreeAbelian) {
    std::vector<long> e(b.exponents().size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = b.exponents()[i] - a.exponents()[i];
    return MonoidElement::from_exponents(std::move(e));
  }
  return MonoidElement::from_word(
      std::vector<int>(b.word().begin() + a.word().size(), b.word().end()));
}

std::optional<LcmResult> lcm_p(const MonoidElement& p, const MonoidElement& q) {
  if (p.kind() != q.kind()) throw std::invalid_argument("monoid kind mismatch");
  if (p.kind() == MonoidKind::FreeAbelian) {
    std::vector<long> r(p.exponents().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(p.exponents()[i], q.exponents()[i]);
    MonoidElement m = MonoidElement::from_exponents(std::move(r));
    return LcmResult{m, left_quotient(p, m), left_quotient(q, m)};
  }
  // free monoid: ideals meet exactly when one word is a prefix of the other
  if (divides(p, q)) return LcmResult{q, left_quotient(p, q), left_quotient(q, q)};
  if (divides(q, p)) return LcmResult{p, left_quotient(p, p), left_quotient(q, p)};
  return std::nullopt;
}

namespace {

std::vector<MonoidElement> words_of_length(const MonoidSpec& spec, int len) {
  std::vector<MonoidElement> out;
  std::vector<int> w(len, 0);
  while (true) {
    out.push_back(MonoidElement::from_word(w));
    int i = len - 1;
    for (; i >= 0; --i) {
      if (++w[i] < spec.generator_count) break;
      w[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

PFoundationCheck is_p_foundation_set(const MonoidSpec& spec, const std::vector<MonoidElement>& f) {
  if (f.empty()) return {false, MonoidElement::identity(spec)};
  if (spec.kind == MonoidKind::FreeAbelian) return {true, std::nullopt};
  long lmax = 0;
  for (const auto& e : f) lmax = std::max(lmax, e.degree());
  double count = 1.0;
  for (long i = 0; i < lmax; ++i) {
    count *= spec.generator_count;
    if (count > 1.0e6) throw std::invalid_argument("foundation check: word enumeration too large");
  }
  for (const auto& w : words_of_length(spec, static_cast<int>(lmax))) {
    bool blocked = false;
    for (const auto& e : f) {
      if (divides(e, w)) { blocked = true; break; }
    }
    if (!blocked) return {false, w};
  }
  return {true, std::nullopt};
}

std::vector<MonoidElement> accurate_refine_p(const MonoidSpec& spec, const std::vector<MonoidElement>& f) {
  auto check = is_p_foundation_set(spec, f);
  if (!check.is_foundation) throw std::invalid_argument("accurate_refine_p: not a foundation set");
  std::vector<MonoidElement> u = sorted_unique(f);
  if (spec.kind == MonoidKind::FreeAbelian) return {u.front()};
  // keep the minimal members; every word extending another member is redundant
  std::vector<MonoidElement> out;
  for (const auto& x : u) {
    bool redundant = false;
    for (const auto& y : u) {
      if (!(y == x) && divides(y, x)) { redundant = true; break; }
    }
    if (!redundant) out.push_back(x);
  }
  return out;
}

namespace {

bool ideals_meet(const MonoidElement& a, const MonoidElement& b) { return lcm_p(a, b).has_value(); }

// Indispensability witness for q against exclusion set x: p with pP meeting qP
// and missing every ideal in x.  Bounded candidates q*w suffice for the
// supported monoid classes.
std::optional<MonoidElement> dispensability_witness(const MonoidSpec& spec, const MonoidElement& q,
                                                    const std::vector<MonoidElement>& x, long lmax) {
  if (spec.kind == MonoidKind::FreeAbelian || spec.generator_count == 1) {
    // directed: no disjoint ideals exist at all
    if (x.empty()) return q;
    return std::nullopt;
  }
  for (long len = 0; len <= lmax + 1; ++len) {
    for (const auto& w : words_of_length(spec, static_cast<int>(len))) {
      MonoidElement cand = q.mul(w);
      bool ok = true;
      for (const auto& e : x) {
        if (ideals_meet(cand, e)) { ok = false; break; }
      }
      if (ok) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

PfResult construct_pf(const MonoidSpec& spec, const std::vector<MonoidElement>& q_parts) {
  PfResult out;
  std::vector<MonoidElement> base = sorted_unique(q_parts);
  if (base.empty()) return out;
  if (base.size() > 16) throw std::invalid_argument("construct_pf: too many distinct ideals");

  // representatives of all non-empty subset intersections of the ideals
  std::vector<MonoidElement> f1;
  size_t n = base.size();
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    std::optional<MonoidElement> acc;
    bool empty = false;
    for (size_t i = 0; i < n && !empty; ++i) {
      if (!(mask & (size_t{1} << i))) continue;
      if (!acc) { acc = base[i]; continue; }
      auto l = lcm_p(*acc, base[i]);
      if (!l) empty = true;
      else acc = l->lcm;
    }
    if (!empty) f1.push_back(*acc);
  }
  f1 = sorted_unique(std::move(f1));

  long lmax = 0;
  for (const auto& e : f1) lmax = std::max(lmax, e.degree());

  std::vector<MonoidElement> cur = f1;
  while (!cur.empty()) {
    // lexicographically least among the minimal elements
    std::optional<MonoidElement> pick;
    for (const auto& q : cur) {
      bool minimal = true;
      for (const auto& other : cur) {
        if (!(other == q) && divides(other, q)) { minimal = false; break; }
      }
      if (minimal && (!pick || q.lex_less(*pick))) pick = q;
    }
    MonoidElement q = *pick;
    std::vector<MonoidElement> exclusion;
    for (const auto& other : cur)
      if (!(other == q)) exclusion.push_back(other);
    for (const auto& kept : out.elements)
      if (!divides(kept, q)) exclusion.push_back(kept);
    auto witness = dispensability_witness(spec, q, exclusion, lmax);
    if (witness) {
      out.elements.push_back(q);
      out.witnesses.push_back(*witness);
    }
    cur.erase(std::remove(cur.begin(), cur.end(), q), cur.end());
  }
  return out;
}

bool is_directed(const MonoidSpec& spec) {
  return spec.kind == MonoidKind::FreeAbelian || spec.generator_count == 1;
}

std::vector<MonoidElement> monoid_ball(const MonoidSpec& spec, int depth) {
  std::vector<MonoidElement> out;
  if (spec.kind == MonoidKind::FreeAbelian) {
    std::vector<long> e(spec.generator_count, 0);
    while (true) {
      long total = 0;
      for (long x : e) total += x;
      if (total <= depth) out.push_back(MonoidElement::from_exponents(e));
      int i = spec.generator_count - 1;
      for (; i >= 0; --i) {
        if (++e[i] <= depth) break;
        e[i] = 0;
      }
      if (i < 0) break;
    }
  } else {
    for (int len = 0; len <= depth; ++len) {
      for (auto& w : words_of_length(spec, len)) out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), [](const MonoidElement& a, const MonoidElement& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.lex_less(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonoidElement> sorted_unique(std::vector<MonoidElement> v) {
  std::sort(v.begin(), v.end(), [](const MonoidElement& a, const MonoidElement& b) { return a.lex_less(b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace rlcm
