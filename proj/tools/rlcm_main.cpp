#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "rlcm/config.hpp"
#include "rlcm/oracle.hpp"
#include "rlcm/report_json.hpp"

namespace {

using namespace rlcm;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Options {
  std::string config_path;
  bool json = false;
  std::optional<int> depth;
  std::optional<long> window;
  std::optional<std::string> amenable;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Options& opt, const Json& doc, const std::string& human) {
  if (opt.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << human << "\n";
  }
}

Json with_command(const std::string& cmd, const Json& body) {
  Json doc;
  doc["command"] = cmd;
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  return doc;
}

SystemConfig load_config(const Options& opt) {
  ParseResult pr = parse_config(read_file(opt.config_path));
  if (!pr.ok()) {
    std::ostringstream os;
    for (const auto& d : pr.diagnostics) {
      os << opt.config_path << ":" << d.line << ":" << d.col << ": " << d.message << "\n";
    }
    throw std::runtime_error(os.str());
  }
  SystemConfig cfg = *pr.config;
  if (opt.depth) cfg.depth = *opt.depth;
  if (opt.window) cfg.window = *opt.window;
  if (opt.amenable) {
    if (*opt.amenable == "assumed") cfg.amenability = Amenability::Assumed;
    else if (*opt.amenable == "asserted") cfg.amenability = Amenability::AssertedByUser;
    else cfg.amenability = Amenability::Unknown;
  }
  return cfg;
}

int cmd_validate(const Options& opt) {
  ParseResult pr = parse_config(read_file(opt.config_path));
  Json doc;
  doc["command"] = "validate";
  if (pr.ok()) {
    doc["verdict"] = "VALID";
    doc["diagnostics"] = Json::array();
    emit(opt, doc, "VALID");
    return kExitYes;
  }
  Json ds = Json::array();
  std::ostringstream human;
  human << "INVALID";
  for (const auto& d : pr.diagnostics) {
    ds.push_back(Json{{"line", d.line}, {"col", d.col}, {"message", d.message}});
    human << "\n  " << d.line << ":" << d.col << ": " << d.message;
  }
  doc["verdict"] = "INVALID";
  doc["diagnostics"] = ds;
  emit(opt, doc, human.str());
  return kExitNo;
}

int cmd_lcm(const Options& opt, const std::vector<std::string>& args) {
  SystemConfig cfg = load_config(opt);
  SemidirectElement a = parse_element(cfg.spec, args[0]);
  SemidirectElement b = parse_element(cfg.spec, args[1]);
  auto meet = intersect_principal_ideals(cfg.spec, a, b);
  Json doc;
  doc["command"] = "lcm";
  doc["verdict"] = meet ? "NONEMPTY" : "EMPTY";
  doc["witness"] = meet ? element_json(cfg.spec, *meet) : Json(nullptr);
  doc["citations"] =
      Json::array({"principal ideal intersections reduce to a monoid lcm plus a coset intersection"});
  emit(opt, doc, meet ? meet->to_string(cfg.spec) : "EMPTY");
  return meet ? kExitYes : kExitNo;
}

int cmd_foundation_check(const Options& opt, const std::vector<std::string>& args) {
  SystemConfig cfg = load_config(opt);
  std::vector<SemidirectElement> f;
  for (const auto& a : args) f.push_back(parse_element(cfg.spec, a));
  FoundationReport rep = is_foundation_set_s(cfg.spec, f);
  Json doc = with_command("foundation-check", foundation_json(cfg.spec, rep));
  std::ostringstream human;
  human << to_string(rep.cls);
  if (rep.witness) human << "  witness " << rep.witness->to_string(cfg.spec);
  if (!rep.detail.empty()) human << "  (" << rep.detail << ")";
  emit(opt, doc, human.str());
  return rep.is_foundation() ? kExitYes : kExitNo;
}

int cmd_refine(const Options& opt, const std::vector<std::string>& args) {
  SystemConfig cfg = load_config(opt);
  std::vector<SemidirectElement> f;
  for (const auto& a : args) f.push_back(parse_element(cfg.spec, a));
  RefinementResult res = elementary_refinement(cfg.spec, f);
  Json doc = with_command("refine", refinement_json(cfg.spec, res));
  std::ostringstream human;
  human << to_string(res.report.cls) << " {";
  for (size_t i = 0; i < res.elements.size(); ++i) {
    human << res.elements[i].to_string(cfg.spec);
    if (i + 1 < res.elements.size()) human << " ";
  }
  human << "}";
  emit(opt, doc, human.str());
  return kExitYes;
}

int cmd_pf(const Options& opt, const std::vector<std::string>& args) {
  SystemConfig cfg = load_config(opt);
  std::vector<MonoidElement> qs;
  for (const auto& a : args) {
    if (!a.empty() && a.front() == '(') qs.push_back(parse_element(cfg.spec, a).p);
    else qs.push_back(parse_monoid_element(cfg.spec, a));
  }
  PfResult pf = construct_pf(cfg.spec.monoid, qs);
  Json doc;
  doc["command"] = "pf";
  Json elems = Json::array();
  std::ostringstream human;
  human << "{";
  for (size_t i = 0; i < pf.elements.size(); ++i) {
    elems.push_back(pf.elements[i].to_string(cfg.spec.monoid));
    human << pf.elements[i].to_string(cfg.spec.monoid);
    if (i + 1 < pf.elements.size()) human << " ";
  }
  human << "}";
  doc["p_f"] = elems;
  doc["citations"] = Json::array(
      {"representatives of the non-empty subset intersections, indispensable members kept minimal-first"});
  emit(opt, doc, human.str());
  return kExitYes;
}

int cmd_transversal(const Options& opt, const std::vector<std::string>& args) {
  SystemConfig cfg = load_config(opt);
  MonoidElement p = parse_monoid_element(cfg.spec, args[0]);
  Lattice img = cfg.spec.theta_image(p);
  auto reps = img.transversal();
  Json doc;
  doc["command"] = "transversal";
  doc["p"] = p.to_string(cfg.spec.monoid);
  doc["lattice"] = lattice_json(img);
  Json rj = Json::array();
  std::ostringstream human;
  for (size_t i = 0; i < reps.size(); ++i) {
    rj.push_back(vec_json(reps[i]));
    human << vec_to_string(reps[i]);
    if (i + 1 < reps.size()) human << " ";
  }
  doc["representatives"] = rj;
  emit(opt, doc, human.str());
  return kExitYes;
}

int cmd_core(const Options& opt, const std::vector<std::string>& args) {
  SystemConfig cfg = load_config(opt);
  CoreDescription desc = core_units(cfg.spec);
  Json doc;
  doc["command"] = "core";
  doc["description"] = desc.description;
  if (args.empty()) {
    emit(opt, doc, desc.description);
    return kExitYes;
  }
  SemidirectElement s = parse_element(cfg.spec, args[0]);
  bool core = is_core(cfg.spec, s);
  doc["element"] = element_json(cfg.spec, s);
  doc["verdict"] = core ? "CORE" : "NOT_CORE";
  emit(opt, doc, core ? "CORE" : "NOT_CORE");
  return core ? kExitYes : kExitNo;
}

int cmd_weakly_fixed(const Options& opt, const std::vector<std::string>& args) {
  SystemConfig cfg = load_config(opt);
  SemidirectElement s = parse_element(cfg.spec, args[0]);
  SemidirectElement t = parse_element(cfg.spec, args[1]);
  SemidirectElement u = parse_element(cfg.spec, args[2]);
  InvElement a = InvElement::pair(cfg.spec, s, t);
  IdealProjection e = IdealProjection::of(cfg.spec, u);
  WeaklyFixedResult res = is_weakly_fixed(cfg.spec, a, e, cfg.depth);
  Json doc = with_command("weakly-fixed", weakly_fixed_json(cfg.spec, res));
  std::ostringstream human;
  human << to_string(res.verdict);
  if (res.witness_r) human << "  witness " << res.witness_r->to_string(cfg.spec);
  emit(opt, doc, human.str());
  return res.verdict == WeaklyFixedVerdict::No ? kExitNo : kExitYes;
}

int cmd_simplicity(const Options& opt) {
  SystemConfig cfg = load_config(opt);
  SimplicityReport rep = kirchberg_report(cfg.spec, cfg.amenability, cfg.depth);
  Json doc = with_command("simplicity", simplicity_json(cfg.spec, rep));
  std::ostringstream human;
  human << "condition (H): " << (rep.condition_h.pass ? "PASS" : "FAIL")
        << "\namenability: " << to_string(rep.amenability)
        << "\nminimality/effectiveness: " << to_string(rep.effectiveness.kind);
  if (rep.effectiveness.witness) human << "  witness " << rep.effectiveness.witness->to_string();
  if (!rep.effectiveness.certificate.empty()) human << "\n  certificate: " << rep.effectiveness.certificate;
  human << "\nsimple: " << to_string(rep.simple) << "\npurely infinite: " << to_string(rep.purely_infinite)
        << "\nKirchberg (UCT): " << to_string(rep.kirchberg);
  emit(opt, doc, human.str());
  return kExitYes;
}

int cmd_u_refine(const Options& opt, const std::vector<std::string>& args) {
  std::vector<std::pair<Int, Int>> f;
  for (const auto& a : args) {
    std::string t = a;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw std::runtime_error("expected (r,x): " + a);
    t = t.substr(1, t.size() - 2);
    size_t comma = t.find(',');
    if (comma == std::string::npos) throw std::runtime_error("expected (r,x): " + a);
    f.emplace_back(Int(t.substr(0, comma)), Int(t.substr(comma + 1)));
  }
  USemigroupResult res = u_semigroup_refine(f);
  Json doc = with_command("u-refine", u_refine_json(res));
  std::ostringstream human;
  if (res.ok) {
    human << "x=" << res.modulus.get_str() << " {";
    for (size_t i = 0; i < res.refined.size(); ++i) {
      human << "(" << res.refined[i].first.get_str() << "," << res.refined[i].second.get_str() << ")";
      if (i + 1 < res.refined.size()) human << " ";
    }
    human << "}";
  } else {
    human << "NOT_FOUNDATION  witness residue " << res.witness_residue->get_str() << " mod "
          << res.modulus.get_str();
  }
  emit(opt, doc, human.str());
  return res.ok ? kExitYes : kExitNo;
}

int cmd_oracle_compare(const Options& opt) {
  SystemConfig cfg = load_config(opt);
  int depth = opt.depth ? *opt.depth : 3;
  long window = opt.window ? *opt.window : (cfg.window ? *cfg.window : default_window(cfg.spec));
  // shrink the window until the ball fits under the element cap
  std::optional<Ball> ball_opt;
  while (true) {
    try {
      ball_opt = enumerate_ball(cfg.spec, depth, window, cfg.ball_cap);
      break;
    } catch (const std::invalid_argument&) {
      if (window <= 2) throw;
      window /= 2;
    }
  }
  Ball& ball = *ball_opt;
  // foundation sweeps walk the whole ball per candidate set; corroborate on a
  // bounded sub-ball when the configured one is large
  Ball sweep_ball = ball.elements.size() > 50'000
                        ? enumerate_ball(cfg.spec, depth, std::min(window, 6L), cfg.ball_cap)
                        : ball;
  int pair_sweeps = ball.elements.size() > 100'000 ? 10 : 40;

  std::mt19937_64 rng(0x517cc1b7);
  auto random_element = [&]() { return ball.elements[rng() % ball.elements.size()]; };

  int pair_checks = 0, pair_failures = 0;
  for (int i = 0; i < pair_sweeps; ++i) {
    SemidirectElement a = random_element();
    SemidirectElement b = random_element();
    auto pa = oracle_ideal_points(cfg.spec, a, ball);
    auto pb = oracle_ideal_points(cfg.spec, b, ball);
    std::vector<SemidirectElement> both;
    for (const auto& x : pa) {
      for (const auto& y : pb) {
        if (x == y) { both.push_back(x); break; }
      }
    }
    auto meet = intersect_principal_ideals(cfg.spec, a, b);
    std::vector<SemidirectElement> viaproc =
        meet ? oracle_ideal_points(cfg.spec, *meet, ball) : std::vector<SemidirectElement>{};
    ++pair_checks;
    if (both != viaproc) ++pair_failures;
  }

  int set_checks = 0, set_failures = 0;
  for (int i = 0; i < 15; ++i) {
    std::vector<SemidirectElement> f;
    size_t n = 1 + rng() % 4;
    for (size_t j = 0; j < n; ++j) f.push_back(random_element());
    FoundationReport rep = is_foundation_set_s(cfg.spec, f);
    ++set_checks;
    if (rep.is_foundation()) {
      auto oc = oracle_foundation_check(cfg.spec, f, sweep_ball);
      if (!oc.ok) ++set_failures;
    } else if (rep.witness) {
      for (const auto& e : f) {
        if (intersect_principal_ideals(cfg.spec, *rep.witness, e)) { ++set_failures; break; }
      }
    }
  }

  bool ok = pair_failures == 0 && set_failures == 0;
  Json doc;
  doc["command"] = "oracle-compare";
  doc["verdict"] = ok ? "CONSISTENT" : "DISCREPANT";
  doc["depth"] = depth;
  doc["window"] = window;
  doc["ball_size"] = ball.elements.size();
  doc["pair_checks"] = pair_checks;
  doc["pair_failures"] = pair_failures;
  doc["foundation_checks"] = set_checks;
  doc["foundation_failures"] = set_failures;
  std::ostringstream human;
  human << (ok ? "CONSISTENT" : "DISCREPANT") << "  ideal-point pairs " << pair_checks << "/"
        << pair_failures << " failures, foundation sweeps " << set_checks << "/" << set_failures
        << " failures";
  emit(opt, doc, human.str());
  return ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for right LCM semigroups built from integer dynamical systems"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "system definition file");
  app.add_flag("--json", opt.json, "machine-readable output");
  int depth_val = 0;
  long window_val = 0;
  std::string amen_val;
  auto* dopt = app.add_option("--depth", depth_val, "truncation depth");
  auto* wopt = app.add_option("--window", window_val, "group coordinate window");
  auto* aopt = app.add_option("--amenable", amen_val, "amenability flag: assumed|asserted|unknown")
                   ->check(CLI::IsMember({"assumed", "asserted", "unknown"}));

  std::vector<std::string> args;
  auto* validate = app.add_subcommand("validate", "check the configured system");
  auto* lcm = app.add_subcommand("lcm", "intersect two principal ideals");
  lcm->add_option("elements", args, "two elements")->expected(2);
  auto* fc = app.add_subcommand("foundation-check", "classify a candidate foundation set");
  fc->add_option("elements", args, "elements")->expected(-1);
  auto* refine = app.add_subcommand("refine", "elementary refinement of a foundation set");
  refine->add_option("elements", args, "elements")->expected(-1);
  auto* pf = app.add_subcommand("pf", "P_F of the monoid parts");
  pf->add_option("elements", args, "elements or monoid parts")->expected(-1);
  auto* trans = app.add_subcommand("transversal", "coset representatives of a theta image");
  trans->add_option("p", args, "monoid element")->expected(1);
  auto* core = app.add_subcommand("core", "describe the core, optionally test an element");
  core->add_option("element", args, "element")->expected(0, 1);
  auto* wf = app.add_subcommand("weakly-fixed", "weak fixing of a projection by [s,t]");
  wf->add_option("elements", args, "s t u")->expected(3);
  auto* simp = app.add_subcommand("simplicity", "simplicity / pure infiniteness / classification report");
  auto* uref = app.add_subcommand("u-refine", "accurate refinement inside the residue semigroup U");
  uref->add_option("pairs", args, "(r,x) pairs")->expected(-1);
  auto* ocmp = app.add_subcommand("oracle-compare", "consistency sweep against brute-force enumeration");

  CLI11_PARSE(app, argc, argv);

  if (dopt->count()) opt.depth = depth_val;
  if (wopt->count()) opt.window = window_val;
  if (aopt->count()) opt.amenable = amen_val;

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt);
    if (app.got_subcommand(lcm)) return cmd_lcm(opt, args);
    if (app.got_subcommand(fc)) return cmd_foundation_check(opt, args);
    if (app.got_subcommand(refine)) return cmd_refine(opt, args);
    if (app.got_subcommand(pf)) return cmd_pf(opt, args);
    if (app.got_subcommand(trans)) return cmd_transversal(opt, args);
    if (app.got_subcommand(core)) return cmd_core(opt, args);
    if (app.got_subcommand(wf)) return cmd_weakly_fixed(opt, args);
    if (app.got_subcommand(simp)) return cmd_simplicity(opt);
    if (app.got_subcommand(uref)) return cmd_u_refine(opt, args);
    if (app.got_subcommand(ocmp)) return cmd_oracle_compare(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::cerr << "error: no subcommand\n";
  return kExitError;
}
