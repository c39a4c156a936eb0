#include "rlcm/invsgp.hpp"

#include <sstream>
#include <stdexcept>

namespace rlcm {

InvElement InvElement::zero() { return InvElement(); }

InvElement InvElement::pair(const AdsSpec& spec, const SemidirectElement& s, const SemidirectElement& t) {
  // divide out the right unit: reduce t's group part to its canonical coset
  // representative and adjust s by the same unit
  IntMatrix mt = spec.theta_matrix(t.p);
  Lattice img = Lattice::from_columns(mt);
  Vec reduced = img.reduce(t.g);
  auto u = solve_integer(mt, sub(reduced, t.g));
  if (!u) throw std::logic_error("pair normalization: coset solve failed");
  InvElement e;
  e.zero_ = false;
  e.s_ = SemidirectElement{add(s.g, spec.apply_theta(s.p, *u)), s.p};
  e.t_ = SemidirectElement{reduced, t.p};
  return e;
}

InvElement InvElement::one(const AdsSpec& spec) {
  return pair(spec, identity_s(spec), identity_s(spec));
}

const SemidirectElement& InvElement::s() const {
  if (zero_) throw std::logic_error("zero element has no components");
  return *s_;
}

const SemidirectElement& InvElement::t() const {
  if (zero_) throw std::logic_error("zero element has no components");
  return *t_;
}

bool InvElement::operator==(const InvElement& other) const {
  if (zero_ || other.zero_) return zero_ == other.zero_;
  return *s_ == *other.s_ && *t_ == *other.t_;
}

std::string InvElement::to_string(const AdsSpec& spec) const {
  if (zero_) return "0";
  return "[" + s_->to_string(spec) + "," + t_->to_string(spec) + "]";
}

InvElement mul_inv(const AdsSpec& spec, const InvElement& a, const InvElement& b) {
  if (a.is_zero() || b.is_zero()) return InvElement::zero();
  auto meet = intersect_principal_ideals(spec, a.t(), b.s());
  if (!meet) return InvElement::zero();
  auto t_comp = left_quotient_s(spec, a.t(), *meet);
  auto s_comp = left_quotient_s(spec, b.s(), *meet);
  if (!t_comp || !s_comp) throw std::logic_error("mul_inv: quotient by intersection failed");
  return InvElement::pair(spec, multiply_s(spec, a.s(), *t_comp), multiply_s(spec, b.t(), *s_comp));
}

InvElement star(const AdsSpec& spec, const InvElement& a) {
  if (a.is_zero()) return a;
  return InvElement::pair(spec, a.t(), a.s());
}

IdealProjection IdealProjection::zero() { return {Kind::Zero, std::nullopt}; }
IdealProjection IdealProjection::one() { return {Kind::One, std::nullopt}; }

IdealProjection IdealProjection::of(const AdsSpec& spec, const SemidirectElement& s) {
  if (s.p.is_identity()) return one();
  Lattice img = spec.theta_image(s.p);
  return {Kind::E, SemidirectElement{img.reduce(s.g), s.p}};
}

InvElement IdealProjection::as_inv(const AdsSpec& spec) const {
  switch (kind) {
    case Kind::Zero: return InvElement::zero();
    case Kind::One: return InvElement::one(spec);
    case Kind::E: return InvElement::pair(spec, *s, *s);
  }
  throw std::logic_error("bad projection");
}

bool IdealProjection::operator==(const IdealProjection& other) const {
  if (kind != other.kind) return false;
  if (kind == Kind::E) return *s == *other.s;
  return true;
}

IdealProjection mul_proj(const AdsSpec& spec, const IdealProjection& a, const IdealProjection& b) {
  if (a.kind == IdealProjection::Kind::Zero || b.kind == IdealProjection::Kind::Zero)
    return IdealProjection::zero();
  if (a.kind == IdealProjection::Kind::One) return b;
  if (b.kind == IdealProjection::Kind::One) return a;
  auto meet = intersect_principal_ideals(spec, *a.s, *b.s);
  if (!meet) return IdealProjection::zero();
  return IdealProjection::of(spec, *meet);
}

CoreDescription core_units(const AdsSpec& spec) {
  std::ostringstream os;
  os << "core = unit group = Z^" << spec.group_rank
     << " x {identity}: an element (g,p) meets every ideal exactly when theta_p is onto, "
        "and proper endomorphisms never are";
  return {os.str()};
}

bool is_core(const AdsSpec& spec, const SemidirectElement& s) {
  (void)spec;
  return s.p.is_identity();
}

GphqResult compute_gphq(const AdsSpec& spec, const MonoidElement& p, const Vec& h, const MonoidElement& q,
                        int depth) {
  (void)h;  // collapses for abelian coefficients
  if (!p.is_identity()) {
    throw std::invalid_argument("compute_gphq: outer unit must be the identity for the supported monoids");
  }
  IntersectionLimit limit = intersection_limit(spec, depth);
  Lattice trunc = image_intersection(spec, depth);
  IntMatrix mq = spec.theta_matrix(q);
  auto push = [&](const Lattice& l) {
    return Coset::make(Vec(spec.group_rank, Int(0)), Lattice::from_columns(mq * l.basis()));
  };
  GphqResult out{limit.certified, depth, push(limit.certified ? limit.lattice : trunc), push(trunc)};
  return out;
}

std::string to_string(WeaklyFixedVerdict v) {
  switch (v) {
    case WeaklyFixedVerdict::No: return "NO";
    case WeaklyFixedVerdict::YesCertified: return "YES_CERTIFIED";
    case WeaklyFixedVerdict::YesUpToDepth: return "YES_UP_TO_DEPTH";
  }
  return "?";
}

namespace {

// r with s1*(0,r)S disjoint from t1*(0,r)S, searched by ascending degree.
std::optional<SemidirectElement> no_witness(const AdsSpec& spec, const SemidirectElement& s1,
                                            const SemidirectElement& t1, int max_depth) {
  for (int d = 0; d <= max_depth; ++d) {
    for (const auto& rp : monoid_ball(spec.monoid, d)) {
      if (rp.degree() != d) continue;
      SemidirectElement r{Vec(spec.group_rank, Int(0)), rp};
      SemidirectElement x = multiply_s(spec, s1, r);
      SemidirectElement y = multiply_s(spec, t1, r);
      if (!intersect_principal_ideals(spec, x, y)) return r;
    }
  }
  return std::nullopt;
}

}  // namespace

WeaklyFixedResult is_weakly_fixed(const AdsSpec& spec, const InvElement& a, const IdealProjection& e,
                                  int depth) {
  if (a.is_zero()) throw std::invalid_argument("is_weakly_fixed: zero element");
  if (e.kind == IdealProjection::Kind::Zero)
    throw std::invalid_argument("is_weakly_fixed: zero projection");
  SemidirectElement u = e.kind == IdealProjection::Kind::One ? identity_s(spec) : *e.s;
  auto t_comp = left_quotient_s(spec, a.t(), u);
  if (!t_comp) {
    throw std::invalid_argument("is_weakly_fixed: projection is not below a*a");
  }
  SemidirectElement s1 = multiply_s(spec, a.s(), *t_comp);
  const SemidirectElement& t1 = u;

  if (s1 == t1) {
    return {WeaklyFixedVerdict::YesCertified, std::nullopt, "the two translates coincide"};
  }

  if (s1.p == t1.p) {
    Vec delta = sub(s1.g, t1.g);
    GphqResult gr = compute_gphq(spec, MonoidElement::identity(spec.monoid), t1.g, t1.p, depth);
    if (gr.value.contains(delta)) {
      if (gr.certified) {
        return {WeaklyFixedVerdict::YesCertified, std::nullopt,
                "group offset lies in the certified limit constraint set"};
      }
      return {WeaklyFixedVerdict::YesUpToDepth, std::nullopt,
              "group offset lies in the depth-" + std::to_string(depth) + " constraint set"};
    }
    auto w = no_witness(spec, s1, t1, std::max(depth, 48));
    if (w) return {WeaklyFixedVerdict::No, w, "shifted ideals separate at " + w->to_string(spec)};
    return {WeaklyFixedVerdict::No, std::nullopt,
            "offset escapes the constraint set; witness search exhausted its budget"};
  }

  // distinct inner monoid parts
  if (spec.monoid.kind == MonoidKind::Free && spec.monoid.generator_count >= 2) {
    // some right translate makes the word parts incomparable
    auto w = no_witness(spec, s1, t1, std::max(depth, 4));
    if (w) return {WeaklyFixedVerdict::No, w, "word parts separate after translation"};
    throw std::logic_error("incomparable word parts admit a separating translate");
  }

  // directed monoid with distinct inner parts: finite evaluation over the ball
  long window = 2 * std::max(depth, 1);
  for (int d = 0; d <= depth; ++d) {
    for (const auto& rp : monoid_ball(spec.monoid, d)) {
      if (rp.degree() != d) continue;
      Vec k(spec.group_rank, Int(-window));
      while (true) {
        SemidirectElement r{k, rp};
        SemidirectElement x = multiply_s(spec, s1, r);
        SemidirectElement y = multiply_s(spec, t1, r);
        if (!intersect_principal_ideals(spec, x, y)) {
          return {WeaklyFixedVerdict::No, r, "shifted ideals separate at " + r.to_string(spec)};
        }
        int i = spec.group_rank - 1;
        for (; i >= 0; --i) {
          if (++k[i] <= window) break;
          k[i] = -window;
        }
        if (i < 0) break;
      }
    }
  }
  return {WeaklyFixedVerdict::YesUpToDepth, std::nullopt,
          "all translates on the depth-" + std::to_string(depth) + " ball intersect"};
}

}  // namespace rlcm
