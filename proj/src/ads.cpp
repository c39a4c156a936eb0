#include "rlcm/ads.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rlcm {

namespace {

IntMatrix compose_theta(const AdsSpec& spec, const MonoidElement& p) {
  IntMatrix m = IntMatrix::identity(spec.group_rank);
  if (p.kind() == MonoidKind::FreeAbelian) {
    for (size_t i = 0; i < p.exponents().size(); ++i) {
      long e = p.exponents()[i];
      if (e > 0) m = m * spec.theta[i].pow(static_cast<unsigned long>(e));
    }
  } else {
    for (int g : p.word()) m = m * spec.theta[g];
  }
  return m;
}

const std::pair<IntMatrix, Lattice>& cached_theta(const AdsSpec& spec, const MonoidElement& p) {
  if (!spec.cache) spec.cache = std::make_shared<ThetaCache>();
  ThetaCache& c = *spec.cache;
  std::scoped_lock lock(c.mu);
  auto key = std::make_pair(p.exponents(), p.word());
  auto it = c.entries.find(key);
  if (it == c.entries.end()) {
    IntMatrix m = compose_theta(spec, p);
    Lattice l = Lattice::from_columns(m);
    it = c.entries.emplace(std::move(key), std::make_pair(std::move(m), std::move(l))).first;
  }
  return it->second;
}

}  // namespace

const IntMatrix& AdsSpec::theta_matrix(const MonoidElement& p) const { return cached_theta(*this, p).first; }

const Lattice& AdsSpec::theta_image(const MonoidElement& p) const { return cached_theta(*this, p).second; }

Vec AdsSpec::apply_theta(const MonoidElement& p, const Vec& g) const {
  return theta_matrix(p).apply(g);
}

ValidationReport validate_ads(const AdsSpec& spec) {
  ValidationReport rep{true, {}};
  auto fail = [&](std::string check, std::string detail) {
    rep.valid = false;
    rep.issues.push_back({std::move(check), std::move(detail)});
  };
  try {
    spec.monoid.validate();
  } catch (const std::exception& e) {
    fail("monoid", e.what());
    return rep;
  }
  if (spec.group_rank < 1) fail("group", "group rank must be at least 1");
  if (static_cast<int>(spec.theta.size()) != spec.monoid.generator_count) {
    fail("action", "one matrix per generator required");
    return rep;
  }
  for (int i = 0; i < spec.monoid.generator_count; ++i) {
    const IntMatrix& m = spec.theta[i];
    if (m.rows() != spec.group_rank || m.cols() != spec.group_rank) {
      fail("action", "theta." + spec.monoid.names[i] + " is not " + std::to_string(spec.group_rank) +
                         "x" + std::to_string(spec.group_rank));
      continue;
    }
    Int d = m.det();
    if (d == 0) fail("injectivity", "theta." + spec.monoid.names[i] + " has determinant 0 (not injective)");
    else if (d == 1 || d == -1)
      fail("proper endomorphism",
           "theta." + spec.monoid.names[i] + " has determinant +-1 (an automorphism on a unit-free monoid)");
  }
  if (!rep.valid) return rep;
  if (spec.monoid.kind == MonoidKind::FreeAbelian) {
    for (int i = 0; i < spec.monoid.generator_count; ++i) {
      for (int j = i + 1; j < spec.monoid.generator_count; ++j) {
        if (!commutes(spec.theta[i], spec.theta[j])) {
          fail("commutation", "theta." + spec.monoid.names[i] + " and theta." + spec.monoid.names[j] +
                                  " do not commute");
          continue;
        }
        Lattice li = Lattice::from_columns(spec.theta[i]);
        Lattice lj = Lattice::from_columns(spec.theta[j]);
        Lattice meet = intersect(li, lj);
        Lattice joint = Lattice::from_columns(spec.theta[i] * spec.theta[j]);
        if (meet != joint) {
          fail("ideal compatibility", "image(theta." + spec.monoid.names[i] + ") cap image(theta." +
                                          spec.monoid.names[j] + ") differs from the joint image " +
                                          meet.to_string() + " vs " + joint.to_string());
        }
      }
    }
  }
  return rep;
}

bool SemidirectElement::lex_less(const SemidirectElement& other) const {
  if (p != other.p) return p.lex_less(other.p);
  for (size_t i = 0; i < g.size(); ++i) {
    int c = cmp(g[i], other.g[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string SemidirectElement::to_string(const AdsSpec& spec) const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.size(); ++i) {
    os << g[i].get_str();
    if (i + 1 < g.size()) os << ",";
  }
  os << ";" << p.to_string(spec.monoid) << ")";
  return os.str();
}

SemidirectElement identity_s(const AdsSpec& spec) {
  return SemidirectElement{Vec(spec.group_rank, Int(0)), MonoidElement::identity(spec.monoid)};
}

SemidirectElement multiply_s(const AdsSpec& spec, const SemidirectElement& a, const SemidirectElement& b) {
  return SemidirectElement{add(a.g, spec.apply_theta(a.p, b.g)), a.p.mul(b.p)};
}

std::optional<SemidirectElement> intersect_principal_ideals(const AdsSpec& spec, const SemidirectElement& a,
                                                            const SemidirectElement& b) {
  auto l = lcm_p(a.p, b.p);
  if (!l) return std::nullopt;
  Coset ca = Coset::make(a.g, spec.theta_image(a.p));
  Coset cb = Coset::make(b.g, spec.theta_image(b.p));
  auto meet = coset_intersection(ca, cb);
  if (!meet) return std::nullopt;
  return SemidirectElement{meet->offset, l->lcm};
}

std::optional<SemidirectElement> left_quotient_s(const AdsSpec& spec, const SemidirectElement& a,
                                                 const SemidirectElement& x) {
  if (!divides(a.p, x.p)) return std::nullopt;
  auto k = solve_integer(spec.theta_matrix(a.p), sub(x.g, a.g));
  if (!k) return std::nullopt;
  return SemidirectElement{*k, left_quotient(a.p, x.p)};
}

bool ideal_contains(const AdsSpec& spec, const SemidirectElement& a, const SemidirectElement& b) {
  return left_quotient_s(spec, a, b).has_value();
}

std::vector<MonoidElement> q_parts(const std::vector<SemidirectElement>& f) {
  std::vector<MonoidElement> q;
  q.reserve(f.size());
  for (const auto& e : f) q.push_back(e.p);
  return q;
}

namespace {

// Members of f whose p-part divides q, with the refinement lattice of their
// theta images.
struct CoverContext {
  std::vector<size_t> members;
  std::vector<Coset> cosets;
  Lattice refinement;
};

CoverContext cover_context(const AdsSpec& spec, const std::vector<SemidirectElement>& f,
                           const MonoidElement& q) {
  CoverContext ctx{{}, {}, Lattice::full(spec.group_rank)};
  for (size_t i = 0; i < f.size(); ++i) {
    if (!divides(f[i].p, q)) continue;
    ctx.members.push_back(i);
    Lattice img = spec.theta_image(f[i].p);
    ctx.refinement = intersect(ctx.refinement, img);
    ctx.cosets.push_back(Coset::make(f[i].g, std::move(img)));
  }
  return ctx;
}

std::optional<Vec> uncovered_residue(const CoverContext& ctx) {
  if (ctx.members.empty()) return Vec(ctx.refinement.ambient_rank(), Int(0));
  for (const auto& rep : ctx.refinement.transversal()) {
    bool covered = false;
    for (const auto& c : ctx.cosets) {
      if (c.contains(rep)) { covered = true; break; }
    }
    if (!covered) return rep;
  }
  return std::nullopt;
}

// Witness element for a failed cover at q: (g*, q*m) whose ideal misses every
// member of f.  m comes from the indispensability witness of the P_F
// construction; for directed monoids m is the identity.
SemidirectElement build_witness(const AdsSpec& spec, const MonoidElement& q,
                                const MonoidElement& indisp_witness, const Vec& residue) {
  MonoidElement p = indisp_witness;
  // ensure p lies in qP, replacing p by the lcm keeps all avoided ideals avoided
  if (!divides(q, p)) {
    auto l = lcm_p(p, q);
    p = l ? l->lcm : q;
  }
  (void)spec;
  return SemidirectElement{residue, p};
}

bool pairwise_disjoint(const AdsSpec& spec, const std::vector<SemidirectElement>& f) {
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      if (intersect_principal_ideals(spec, f[i], f[j])) return false;
  return true;
}

bool is_elementary_shape(const AdsSpec& spec, const std::vector<SemidirectElement>& f) {
  std::vector<MonoidElement> qs = sorted_unique(q_parts(f));
  auto pcheck = is_p_foundation_set(spec.monoid, qs);
  if (!pcheck.is_foundation) return false;
  for (size_t i = 0; i < qs.size(); ++i)
    for (size_t j = i + 1; j < qs.size(); ++j)
      if (lcm_p(qs[i], qs[j])) return false;  // accurate at the P level
  for (const auto& q : qs) {
    Lattice img = spec.theta_image(q);
    auto idx = img.index();
    if (!idx) return false;
    std::vector<Vec> residues;
    for (const auto& e : f) {
      if (e.p == q) residues.push_back(img.reduce(e.g));
    }
    std::sort(residues.begin(), residues.end(), [](const Vec& a, const Vec& b) {
      for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
      }
      return false;
    });
    if (Int(static_cast<long>(residues.size())) != *idx) return false;
    if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) return false;
  }
  return true;
}

}  // namespace

FoundationReport is_foundation_set_s(const AdsSpec& spec, const std::vector<SemidirectElement>& f) {
  FoundationReport rep;
  if (f.empty()) {
    rep.cls = FoundationClass::NotFoundation;
    rep.witness = identity_s(spec);
    rep.detail = "empty set meets no principal ideal";
    return rep;
  }
  PfResult pf = construct_pf(spec.monoid, q_parts(f));
  rep.p_f = pf.elements;

  auto pcheck = is_p_foundation_set(spec.monoid, pf.elements);
  if (!pcheck.is_foundation) {
    rep.cls = FoundationClass::NotFoundation;
    SemidirectElement w{Vec(spec.group_rank, Int(0)), *pcheck.witness};
    for (const auto& e : f) {
      if (intersect_principal_ideals(spec, w, e)) {
        throw std::logic_error("P-level witness failed verification against " + e.to_string(spec));
      }
    }
    rep.witness = w;
    rep.detail = "P_F is not a foundation set for P";
    return rep;
  }

  // coset cover at every q in P_F; a failure at any q locates a minimal one
  std::optional<size_t> failed;
  std::optional<Vec> residue;
  for (size_t i = 0; i < pf.elements.size(); ++i) {
    CoverContext ctx = cover_context(spec, f, pf.elements[i]);
    auto unc = uncovered_residue(ctx);
    if (unc) {
      if (!failed || divides(pf.elements[i], pf.elements[*failed])) {
        failed = i;
        residue = unc;
      }
    }
  }
  if (failed) {
    rep.cls = FoundationClass::NotFoundation;
    rep.uncovered_residue = residue;
    rep.uncovered_at = pf.elements[*failed];
    SemidirectElement w = build_witness(spec, pf.elements[*failed], pf.witnesses[*failed], *residue);
    for (const auto& e : f) {
      if (intersect_principal_ideals(spec, w, e)) {
        throw std::logic_error("foundation witness failed verification against " + e.to_string(spec));
      }
    }
    rep.witness = w;
    rep.detail = "residue " + vec_to_string(*residue) + " not covered at " +
                 pf.elements[*failed].to_string(spec.monoid);
    return rep;
  }

  rep.cls = FoundationClass::Foundation;
  if (pairwise_disjoint(spec, f)) {
    rep.cls = FoundationClass::Accurate;
    if (is_elementary_shape(spec, f)) rep.cls = FoundationClass::Elementary;
  }
  return rep;
}

RefinementResult elementary_refinement(const AdsSpec& spec, const std::vector<SemidirectElement>& f) {
  FoundationReport base = is_foundation_set_s(spec, f);
  if (!base.is_foundation()) {
    throw std::invalid_argument("elementary_refinement: input is not a foundation set");
  }

  // Candidate accurate P-refinements, tried in order; the fallback built from
  // P_F always passes the containment check for a foundation set.
  std::vector<std::vector<MonoidElement>> candidates;
  std::vector<MonoidElement> qs = sorted_unique(q_parts(f));
  if (spec.monoid.kind == MonoidKind::FreeAbelian) {
    for (const auto& q : qs) candidates.push_back({q});
    std::optional<MonoidElement> acc;
    for (const auto& q : qs) acc = acc ? lcm_p(*acc, q)->lcm : q;
    candidates.push_back({*acc});
  } else {
    candidates.push_back(accurate_refine_p(spec.monoid, qs));
    candidates.push_back(accurate_refine_p(spec.monoid, base.p_f));
  }

  for (const auto& fa : candidates) {
    std::vector<SemidirectElement> fe;
    std::vector<size_t> containment;
    bool ok = true;
    for (const auto& p : fa) {
      Lattice img = spec.theta_image(p);
      for (const auto& g : img.transversal()) {
        SemidirectElement cand{g, p};
        std::optional<size_t> inside;
        for (size_t i = 0; i < f.size() && !inside; ++i) {
          if (ideal_contains(spec, f[i], cand)) inside = i;
        }
        if (!inside) { ok = false; break; }
        fe.push_back(cand);
        containment.push_back(*inside);
      }
      if (!ok) break;
    }
    if (!ok) continue;
    RefinementResult out;
    out.elements = std::move(fe);
    out.containment = std::move(containment);
    out.q_refinement = fa;
    out.report = is_foundation_set_s(spec, out.elements);
    if (out.report.cls != FoundationClass::Elementary) {
      throw std::logic_error("elementary_refinement: output failed to classify as elementary");
    }
    return out;
  }
  throw std::logic_error("elementary_refinement: no candidate refinement verified");
}

PFinPartition partition_by_index(const AdsSpec& spec, const std::vector<SemidirectElement>& f) {
  PFinPartition part;
  for (const auto& e : f) {
    if (spec.theta_image(e.p).index()) part.finite_part.push_back(e);
    else part.infinite_part.push_back(e);
  }
  return part;
}

NeumannResult neumann_check(int ambient, const std::vector<Coset>& cover) {
  NeumannResult out{false, {}, std::nullopt};
  std::vector<Coset> deficient;
  for (const auto& c : cover) {
    if (c.lattice.index()) out.reduced.push_back(c);
    else deficient.push_back(c);
  }

  auto avoid_deficient = [&](const Vec& base, const Lattice& step) -> Vec {
    // some point of base + step misses every deficient coset; scan outward
    std::vector<Vec> dirs;
    for (int j = 0; j < step.rank(); ++j) dirs.push_back(step.basis().column(j));
    for (long radius = 0;; ++radius) {
      std::vector<long> c(dirs.size(), -radius);
      while (true) {
        long linf = 0;
        for (long x : c) linf = std::max(linf, std::abs(x));
        if (linf == radius || dirs.empty()) {
          Vec pt = base;
          for (size_t j = 0; j < dirs.size(); ++j)
            for (size_t i = 0; i < pt.size(); ++i) pt[i] += Int(c[j]) * dirs[j][i];
          bool hit = false;
          for (const auto& dc : deficient) {
            if (dc.contains(pt)) { hit = true; break; }
          }
          if (!hit) return pt;
        }
        size_t j = 0;
        for (; j < c.size(); ++j) {
          if (++c[j] <= radius) break;
          c[j] = -radius;
        }
        if (j == c.size()) break;
      }
      if (dirs.empty()) throw std::logic_error("deficient cosets cover a point class");
    }
  };

  if (out.reduced.empty()) {
    if (ambient == 0) {
      out.covers = !cover.empty();
      if (!out.covers) out.witness = Vec{};
      return out;
    }
    out.covers = false;
    out.witness = avoid_deficient(Vec(ambient, Int(0)), Lattice::full(ambient));
    return out;
  }

  Lattice common = Lattice::full(ambient);
  for (const auto& c : out.reduced) common = intersect(common, c.lattice);
  for (const auto& rep : common.transversal()) {
    bool covered = false;
    for (const auto& c : out.reduced) {
      if (c.contains(rep)) { covered = true; break; }
    }
    if (!covered) {
      out.covers = false;
      out.witness = avoid_deficient(rep, common);
      return out;
    }
  }
  // margin box sanity pass around the origin
  Int margin(2);
  for (const auto& c : out.reduced) {
    auto idx = c.lattice.index();
    if (idx && *idx > margin) margin = *idx;
  }
  Vec probe(ambient, Int(0));
  if (ambient > 0) {
    for (Int x = -margin; x <= margin; ++x) {
      probe[0] = x;
      bool covered = false;
      for (const auto& c : out.reduced) {
        if (c.contains(probe)) { covered = true; break; }
      }
      if (!covered) {
        out.covers = false;
        out.witness = probe;
        return out;
      }
    }
  }
  out.covers = true;
  return out;
}

USemigroupResult u_semigroup_refine(const std::vector<std::pair<Int, Int>>& f) {
  USemigroupResult out{false, Int(1), {}, std::nullopt, {}};
  if (f.empty()) { out.witness_residue = Int(0); return out; }
  for (const auto& [r, x] : f) {
    if (x < 1 || r < 0 || r >= x) throw std::invalid_argument("u_semigroup_refine: need 0 <= r < x, x >= 1");
    Int l;
    mpz_lcm(l.get_mpz_t(), out.modulus.get_mpz_t(), x.get_mpz_t());
    out.modulus = l;
  }
  for (Int t(0); t < out.modulus; ++t) {
    std::optional<size_t> container;
    for (size_t i = 0; i < f.size() && !container; ++i) {
      if ((t - f[i].first) % f[i].second == 0) container = i;
    }
    if (!container) {
      out.witness_residue = t;
      return out;
    }
    out.refined.emplace_back(t, out.modulus);
    out.containment.push_back(*container);
  }
  out.ok = true;
  return out;
}

std::string to_string(FoundationClass c) {
  switch (c) {
    case FoundationClass::NotFoundation: return "NOT_FOUNDATION";
    case FoundationClass::Foundation: return "FOUNDATION";
    case FoundationClass::Accurate: return "ACCURATE";
    case FoundationClass::Elementary: return "ELEMENTARY";
  }
  return "?";
}

}  // namespace rlcm
