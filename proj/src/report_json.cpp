#include "rlcm/report_json.hpp"

namespace rlcm {

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json lattice_json(const Lattice& l) {
  Json b = Json::array();
  for (int j = 0; j < l.rank(); ++j) b.push_back(vec_json(l.basis().column(j)));
  Json out;
  out["ambient"] = l.ambient_rank();
  out["rank"] = l.rank();
  out["basis"] = b;
  auto idx = l.index();
  out["index"] = idx ? Json(idx->get_str()) : Json("infinite");
  return out;
}

Json coset_json(const Coset& c) {
  Json out;
  out["offset"] = vec_json(c.offset);
  out["lattice"] = lattice_json(c.lattice);
  return out;
}

Json element_json(const AdsSpec& spec, const SemidirectElement& e) {
  Json out;
  out["text"] = e.to_string(spec);
  out["g"] = vec_json(e.g);
  out["p"] = e.p.to_string(spec.monoid);
  return out;
}

Json foundation_json(const AdsSpec& spec, const FoundationReport& rep) {
  Json out;
  out["verdict"] = to_string(rep.cls);
  Json pf = Json::array();
  for (const auto& q : rep.p_f) pf.push_back(q.to_string(spec.monoid));
  out["p_f"] = pf;
  out["witness"] = rep.witness ? element_json(spec, *rep.witness) : Json(nullptr);
  out["uncovered_residue"] = rep.uncovered_residue ? vec_json(*rep.uncovered_residue) : Json(nullptr);
  out["uncovered_at"] = rep.uncovered_at ? Json(rep.uncovered_at->to_string(spec.monoid)) : Json(nullptr);
  out["detail"] = rep.detail;
  out["citations"] = Json::array({"foundation sets are detected through the coset cover over the refinement "
                                  "lattice of the constructed P_F",
                                  "accuracy = pairwise disjoint principal ideals",
                                  "elementary = accurate monoid part plus exact transversals"});
  return out;
}

Json refinement_json(const AdsSpec& spec, const RefinementResult& res) {
  Json out;
  out["verdict"] = to_string(res.report.cls);
  Json elems = Json::array();
  for (const auto& e : res.elements) elems.push_back(element_json(spec, e));
  out["elements"] = elems;
  Json q = Json::array();
  for (const auto& p : res.q_refinement) q.push_back(p.to_string(spec.monoid));
  out["q_refinement"] = q;
  out["containment"] = res.containment;
  out["citations"] = Json::array({"every member of the refinement is verified to lie inside an input ideal",
                                  "transversals over an accurate monoid refinement give elementary sets"});
  return out;
}

Json minimality_json(const MinimalityVerdict& v) {
  Json out;
  out["verdict"] = to_string(v.kind);
  out["witness"] = v.witness ? lattice_json(*v.witness) : Json(nullptr);
  out["certificate"] = v.certificate;
  Json fs = Json::array();
  for (const auto& f : v.certificate_factors) fs.push_back(f.to_string());
  out["factors"] = fs;
  out["depth"] = v.depth;
  out["last_lattice"] = v.last_lattice ? lattice_json(*v.last_lattice) : Json(nullptr);
  return out;
}

Json simplicity_json(const AdsSpec& spec, const SimplicityReport& rep) {
  Json out;
  out["condition_h"] = Json{{"pass", rep.condition_h.pass}, {"citation", rep.condition_h.citation}};
  out["amenability"] = to_string(rep.amenability);
  out["effectiveness"] = minimality_json(rep.effectiveness);
  out["simple"] = to_string(rep.simple);
  out["purely_infinite"] = to_string(rep.purely_infinite);
  out["kirchberg"] = to_string(rep.kirchberg);
  if (rep.pi_witness) {
    out["pure_infiniteness_witness"] = Json::array(
        {element_json(spec, rep.pi_witness->first), element_json(spec, rep.pi_witness->second)});
  } else {
    out["pure_infiniteness_witness"] = nullptr;
  }
  out["citations"] = rep.citations;
  return out;
}

Json neumann_json(const NeumannResult& res) {
  Json out;
  out["covers"] = res.covers;
  Json red = Json::array();
  for (const auto& c : res.reduced) red.push_back(coset_json(c));
  out["reduced"] = red;
  out["witness"] = res.witness ? vec_json(*res.witness) : Json(nullptr);
  out["citations"] = Json::array({"a finite coset cover restricts to its finite-index members"});
  return out;
}

Json u_refine_json(const USemigroupResult& res) {
  Json out;
  out["ok"] = res.ok;
  out["modulus"] = res.modulus.get_str();
  Json ref = Json::array();
  for (const auto& [r, x] : res.refined) ref.push_back(Json::array({r.get_str(), x.get_str()}));
  out["refined"] = ref;
  out["witness_residue"] = res.witness_residue ? Json(res.witness_residue->get_str()) : Json(nullptr);
  out["containment"] = res.containment;
  return out;
}

Json weakly_fixed_json(const AdsSpec& spec, const WeaklyFixedResult& res) {
  Json out;
  out["verdict"] = to_string(res.verdict);
  out["witness"] = res.witness_r ? element_json(spec, *res.witness_r) : Json(nullptr);
  out["detail"] = res.detail;
  return out;
}

Json gphq_json(const GphqResult& res) {
  Json out;
  out["certified"] = res.certified;
  out["depth"] = res.depth;
  out["value"] = coset_json(res.value);
  out["truncation"] = coset_json(res.truncation);
  return out;
}

Json validation_json(const ValidationReport& rep) {
  Json out;
  out["valid"] = rep.valid;
  Json issues = Json::array();
  for (const auto& i : rep.issues) issues.push_back(Json{{"check", i.check}, {"detail", i.detail}});
  out["issues"] = issues;
  return out;
}

}  // namespace rlcm
