#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlcm/lattice.hpp"
#include "rlcm/monoid.hpp"

namespace rlcm {

struct ThetaCache;

// Algebraic dynamical system (Z^d, P, theta) with one injective integer
// matrix per generator of P.  Treat as immutable after construction; the
// composed matrices and their images are memoized behind a lock.
struct AdsSpec {
  int group_rank;
  MonoidSpec monoid;
  std::vector<IntMatrix> theta;
  mutable std::shared_ptr<ThetaCache> cache = nullptr;

  const IntMatrix& generator_matrix(int i) const { return theta[i]; }
  const IntMatrix& theta_matrix(const MonoidElement& p) const;
  const Lattice& theta_image(const MonoidElement& p) const;
  Vec apply_theta(const MonoidElement& p, const Vec& g) const;
};

struct ThetaCache {
  std::mutex mu;
  std::map<std::pair<std::vector<long>, std::vector<int>>, std::pair<IntMatrix, Lattice>> entries;
};

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  bool valid;
  std::vector<ValidationIssue> issues;
};

ValidationReport validate_ads(const AdsSpec& spec);

struct SemidirectElement {
  Vec g;
  MonoidElement p;

  bool operator==(const SemidirectElement& other) const { return g == other.g && p == other.p; }
  bool operator!=(const SemidirectElement& other) const { return !(*this == other); }
  bool lex_less(const SemidirectElement& other) const;
  std::string to_string(const AdsSpec& spec) const;
};

SemidirectElement identity_s(const AdsSpec& spec);
SemidirectElement multiply_s(const AdsSpec& spec, const SemidirectElement& a, const SemidirectElement& b);

// aS cap bS as a principal ideal (w, r)S, or absent when disjoint.
std::optional<SemidirectElement> intersect_principal_ideals(const AdsSpec& spec, const SemidirectElement& a,
                                                            const SemidirectElement& b);

// y with a.y = x, when x lies in aS.
std::optional<SemidirectElement> left_quotient_s(const AdsSpec& spec, const SemidirectElement& a,
                                                 const SemidirectElement& x);

// b in aS, i.e. bS contained in aS.
bool ideal_contains(const AdsSpec& spec, const SemidirectElement& a, const SemidirectElement& b);

enum class FoundationClass { NotFoundation, Foundation, Accurate, Elementary };
std::string to_string(FoundationClass c);

struct FoundationReport {
  FoundationClass cls = FoundationClass::NotFoundation;
  std::vector<MonoidElement> p_f;
  std::optional<SemidirectElement> witness;      // verified counterexample when NotFoundation
  std::optional<Vec> uncovered_residue;
  std::optional<MonoidElement> uncovered_at;
  std::string detail;

  bool is_foundation() const { return cls != FoundationClass::NotFoundation; }
};

FoundationReport is_foundation_set_s(const AdsSpec& spec, const std::vector<SemidirectElement>& f);

struct RefinementResult {
  std::vector<SemidirectElement> elements;
  FoundationReport report;                        // classification of the output
  std::vector<size_t> containment;                // output index -> input index whose ideal contains it
  std::vector<MonoidElement> q_refinement;
};

// Elementary refinement with exact containment verification; throws when the
// input is not a foundation set.
RefinementResult elementary_refinement(const AdsSpec& spec, const std::vector<SemidirectElement>& f);

struct PFinPartition {
  std::vector<SemidirectElement> finite_part;
  std::vector<SemidirectElement> infinite_part;
};
PFinPartition partition_by_index(const AdsSpec& spec, const std::vector<SemidirectElement>& f);

struct NeumannResult {
  bool covers;
  std::vector<Coset> reduced;       // finite-index sub-cover
  std::optional<Vec> witness;       // concrete uncovered point when covers is false
};
NeumannResult neumann_check(int ambient, const std::vector<Coset>& cover);

struct USemigroupResult {
  bool ok;
  Int modulus;
  std::vector<std::pair<Int, Int>> refined;
  std::optional<Int> witness_residue;
  std::vector<size_t> containment;  // refined index -> input index
};
USemigroupResult u_semigroup_refine(const std::vector<std::pair<Int, Int>>& f);

std::vector<MonoidElement> q_parts(const std::vector<SemidirectElement>& f);

}  // namespace rlcm
