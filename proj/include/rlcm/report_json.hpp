#pragma once

#include <json.hpp>

#include "rlcm/ads.hpp"
#include "rlcm/certify.hpp"
#include "rlcm/invsgp.hpp"

namespace rlcm {

// Machine-readable reports; ordered keys keep the output byte-stable.
using Json = nlohmann::ordered_json;

Json vec_json(const Vec& v);
Json lattice_json(const Lattice& l);
Json coset_json(const Coset& c);
Json element_json(const AdsSpec& spec, const SemidirectElement& e);
Json foundation_json(const AdsSpec& spec, const FoundationReport& rep);
Json refinement_json(const AdsSpec& spec, const RefinementResult& res);
Json minimality_json(const MinimalityVerdict& v);
Json simplicity_json(const AdsSpec& spec, const SimplicityReport& rep);
Json neumann_json(const NeumannResult& res);
Json u_refine_json(const USemigroupResult& res);
Json weakly_fixed_json(const AdsSpec& spec, const WeaklyFixedResult& res);
Json gphq_json(const GphqResult& res);
Json validation_json(const ValidationReport& rep);

}  // namespace rlcm
