#include "focalis/job.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "focalis/chow.hpp"
#include "focalis/error.hpp"
#include "focalis/inverse.hpp"
#include "focalis/isotropy.hpp"

namespace focalis {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

const std::set<std::string> kCommands = {
    "evolute",  "rotfocal", "implicitize", "imgdeg",
    "degree",   "inverse",  "isocurve",    "devel",
    "check-t4", "check-t5", "product",     "sphere-fiber"};

const std::map<std::string, std::set<std::string>> kCommandKeys = {
    {"evolute", {"curve", "params"}},
    {"rotfocal", {"profile", "params"}},
    {"implicitize", {"coords", "params"}},
    {"imgdeg", {"coords", "params"}},
    {"degree",
     {"kind", "m", "d", "g", "degrees", "hk", "c1sq", "c2", "chi",
      "sectgenus"}},
    {"inverse", {"mode", "o", "r", "params"}},
    {"isocurve", {"f0", "f1"}},
    {"devel", {"f0", "f1"}},
    {"check-t4", {"surface", "params", "f", "witness"}},
    {"check-t5", {"o", "r", "params"}},
    {"product", {"vars1", "eqs1", "vars2", "eqs2"}},
    {"sphere-fiber", {"f", "vars", "center", "direction", "witness", "params"}},
};

long long to_int(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    long long n = std::stoll(trim(v), &used);
    if (used != trim(v).size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "key '" + key + "': invalid integer '" + v + "'");
  }
}

}  // namespace

bool Job::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const std::string& Job::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  fail(Errc::parse_error, "missing required key '" + key + "'");
}

std::string Job::render() const {
  std::ostringstream os;
  os << "schema: " << schema << "\n";
  os << "command: " << command << "\n";
  for (const auto& [k, v] : entries) os << k << ": " << v << "\n";
  return os.str();
}

Job parse_job(const std::string& text) {
  Job job;
  bool saw_schema = false, saw_command = false;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos)
      fail(Errc::parse_error,
           "line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    std::transform(key.begin(), key.end(), key.begin(), ::tolower);
    if (key == "schema") {
      if (to_int(key, value) != 1)
        fail(Errc::bad_schema, "unsupported schema '" + value + "'");
      saw_schema = true;
      continue;
    }
    if (key == "command") {
      if (!kCommands.count(value))
        fail(Errc::unknown_command, "unknown command '" + value + "'");
      job.command = value;
      saw_command = true;
      continue;
    }
    if (key == "seed") {
      job.seed = to_int(key, value);
      job.entries.emplace_back(key, value);
      continue;
    }
    if (key == "gram") {
      job.gram = parse_gram_matrix(value);
      job.entries.emplace_back(key, value);
      continue;
    }
    job.entries.emplace_back(key, value);
  }
  if (!saw_schema) fail(Errc::bad_schema, "missing 'schema: 1'");
  if (!saw_command) fail(Errc::unknown_command, "missing 'command:'");
  const auto& allowed = kCommandKeys.at(job.command);
  for (const auto& [k, v] : job.entries)
    if (k != "seed" && k != "gram" && !allowed.count(k))
      fail(Errc::unknown_key,
           "key '" + k + "' is not accepted by command '" + job.command + "'");
  return job;
}

namespace {

QuadraticSpace space_for(const Job& job, int m) {
  if (!job.gram) return QuadraticSpace::identity(m);
  if ((int)job.gram->size() != m)
    fail(Errc::dimension_mismatch, "gram matrix dimension vs ambient");
  return QuadraticSpace(*job.gram);
}

ParametricVariety make_variety(const RFVec& coords,
                               const std::vector<std::string>& params,
                               ParametricVariety::Flavor flavor) {
  ParametricVariety v;
  v.flavor = flavor;
  v.params = params;
  v.coords = coords;
  v.ambient = (int)coords.size() -
              (flavor == ParametricVariety::Flavor::homogeneous ? 1 : 0);
  return v;
}

json rf_vec_json(const RFVec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

json poly_list_json(const std::vector<Polynomial>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.str());
  return a;
}

json focal_output_json(const FocalOutput& out,
                       std::vector<SampleSource>* sources) {
  json j;
  j["ramification"] = out.ramification.str();
  j["ramification_content"] = out.ramification.content.str();
  j["ramification_branch"] = out.ramification.branch.str();
  j["ramification_unit"] = out.ramification.unit.str();
  json comps = json::array();
  for (const auto& c : out.components) {
    json cj;
    cj["kind"] =
        c.kind == FocalComponent::Kind::vertical ? "vertical" : "strict";
    if (c.image) {
      cj["parametrization"] = rf_vec_json(c.image->coords);
      cj["parameters"] = c.image->params;
      if (!c.image->params.empty() && sources)
        sources->push_back(
            {std::string("component") + std::to_string(comps.size()),
             *c.image});
    }
    if (!c.implicit_eqs.empty()) cj["implicit"] = poly_list_json(c.implicit_eqs);
    if (c.factor) cj["factor"] = c.factor->str();
    if (c.kind == FocalComponent::Kind::vertical)
      cj["multiplicity"] = c.multiplicity;
    cj["point"] = c.is_point;
    if (!c.note.empty()) cj["note"] = c.note;
    comps.push_back(cj);
  }
  j["components"] = comps;
  j["strict_count"] = out.strict().size();
  j["large_count"] = out.large().size();
  if (!out.note.empty()) j["note"] = out.note;
  return j;
}

json construction_json(const ConstructionResult& r,
                       std::vector<SampleSource>* sources) {
  json j;
  j["ambient_vars"] = r.ambient_vars;
  j["system"] = poly_list_json(r.system);
  j["equations"] = poly_list_json(r.eliminated);
  if (r.eliminant) j["eliminant"] = r.eliminant->str();
  j["fibers_are_affine_spaces"] = r.fibers_are_affine_spaces;
  j["admissible"] = r.admissible;
  if (!r.admissibility_reason.empty())
    j["admissibility_reason"] = r.admissibility_reason;
  json fib;
  fib["point"] = rf_vec_json(r.fiber.point);
  json dirs = json::array();
  for (const auto& d : r.fiber.dirs) dirs.push_back(rf_vec_json(d));
  fib["directions"] = dirs;
  fib["parameters"] = r.fiber.params;
  j["fiber"] = fib;
  if (!r.note.empty()) j["note"] = r.note;
  static_cast<void>(sources);
  return j;
}

std::vector<std::string> required_params(const Job& job, size_t lo, size_t hi) {
  std::vector<std::string> params = parse_name_list(job.get("params"));
  if (params.size() < lo || params.size() > hi)
    fail(Errc::precondition, "params: expected between " + std::to_string(lo) +
                                 " and " + std::to_string(hi) + " names");
  return params;
}

json run_evolute(const Job& job, std::vector<SampleSource>* sources) {
  RFVec coords = parse_tuple(job.get("curve"));
  if (coords.size() != 2) fail(Errc::precondition, "curve must have 2 coordinates");
  auto params = required_params(job, 1, 1);
  ParametricVariety curve =
      make_variety(coords, params, ParametricVariety::Flavor::affine);
  QuadraticSpace q = space_for(job, 2);
  return focal_output_json(evolute(curve, q), sources);
}

json run_rotfocal(const Job& job, std::vector<SampleSource>* sources) {
  RFVec coords = parse_tuple(job.get("profile"));
  if (coords.size() != 2)
    fail(Errc::precondition, "profile must have 2 coordinates");
  auto params = required_params(job, 1, 1);
  ParametricVariety prof =
      make_variety(coords, params, ParametricVariety::Flavor::affine);
  QuadraticSpace q = space_for(job, 2);
  return focal_output_json(rotation_surface_focal(prof, q), sources);
}

json run_implicitize(const Job& job) {
  RFVec coords = parse_tuple(job.get("coords"));
  auto params = required_params(job, 1, 2);
  ParametricVariety v =
      make_variety(coords, params, ParametricVariety::Flavor::affine);
  auto targets = ambient_var_names((int)coords.size());
  Implicitization imp = implicitize_image(v, targets);
  json j;
  j["targets"] = targets;
  j["equations"] = poly_list_json(imp.equations);
  j["image_is_hypersurface"] = imp.image_is_hypersurface;
  j["codimension_above_one"] = !imp.image_is_hypersurface;
  return j;
}

json run_imgdeg(const Job& job) {
  RFVec coords = parse_tuple(job.get("coords"));
  auto params = required_params(job, 1, 2);
  ParametricVariety v =
      make_variety(coords, params, ParametricVariety::Flavor::affine);
  ImageDegree d = image_degree(v, job.seed);
  json j;
  j["raw_intersections"] = d.raw_intersections;
  j["map_degree_note"] = d.map_degree_note;
  j["seed"] = d.seed;
  return j;
}

json run_degree(const Job& job) {
  const std::string kind = job.get("kind");
  json j;
  j["kind"] = kind;
  if (kind == "curve") {
    CurveClassData c;
    c.m = (int)to_int("m", job.get("m"));
    c.d = to_int("d", job.get("d"));
    c.g = to_int("g", job.get("g"));
    j["leray_hirsch_degree"] = leray_hirsch_degree(1, c.m, c);
    j["closed_form"] = curve_focal_degree_closed(c);
    j["endpoint_degree_h2_top"] = h2_top_power_degree(c);
    return j;
  }
  SurfaceClassData s;
  if (kind == "surface-ci") {
    int m = (int)to_int("m", job.get("m"));
    s = ci_tangent_data(m, parse_int_list(job.get("degrees")));
  } else if (kind == "surface-data") {
    s.m = (int)to_int("m", job.get("m"));
    s.d = to_int("d", job.get("d"));
    s.HK = to_int("hk", job.get("hk"));
    s.c1sq = to_int("c1sq", job.get("c1sq"));
    s.c2 = to_int("c2", job.get("c2"));
    s.chi = to_int("chi", job.get("chi"));
    s.sect_genus = to_int("sectgenus", job.get("sectgenus"));
    validate(s);
  } else {
    fail(Errc::precondition,
         "kind must be curve, surface-ci, or surface-data");
  }
  json data;
  data["m"] = s.m;
  data["d"] = s.d;
  data["hk"] = s.HK;
  data["c1sq"] = s.c1sq;
  data["c2"] = s.c2;
  data["chi"] = s.chi;
  data["sectgenus"] = s.sect_genus;
  j["data"] = data;
  j["leray_hirsch_degree"] = leray_hirsch_degree(2, s.m, s);
  SurfaceFocalDegrees f = surface_focal_degree_closed(s);
  j["df"] = f.df;
  j["df1"] = f.df1;
  j["df2"] = f.df2;
  return j;
}

json run_inverse(const Job& job, std::vector<SampleSource>* sources) {
  const std::string mode = job.get("mode");
  RFVec o = parse_tuple(job.get("o"));
  RationalFunction r = parse_expression(job.get("r"));
  std::vector<std::string> params =
      job.has("params") ? parse_name_list(job.get("params"))
                        : std::vector<std::string>{};
  SigmaData sd;
  sd.r = r;
  json j;
  j["mode"] = mode;
  if (mode == "standard") {
    sd.mode = SigmaMode::standard;
    sd.O = make_variety(o, params, ParametricVariety::Flavor::affine);
    QuadraticSpace q = space_for(job, (int)o.size());
    ConstructionResult res = inverse_construction(sd, q);
    j.update(construction_json(res, sources));
    ForwardConsistency fc = forward_consistency(res, sd, q);
    json fj;
    fj["holds"] = fc.holds;
    fj["samples"] = fc.samples;
    fj["note"] = fc.note;
    j["forward_consistency"] = fj;
    return j;
  }
  if (mode != "asymptotic" && mode != "isotropic")
    fail(Errc::precondition, "mode must be standard, asymptotic or isotropic");
  sd.O = make_variety(o, params, ParametricVariety::Flavor::homogeneous);
  QuadraticSpace q = space_for(job, (int)o.size() - 1);
  if (mode == "asymptotic") {
    sd.mode = SigmaMode::asymptotic;
    ConstructionResult res = asymptotic_inverse(sd, q);
    j.update(construction_json(res, sources));
    j["developable"] = developability_check(res, sd);
    if (res.eliminant)
      j["dual_at_infinity"] = dual_at_infinity_check(res, sd, q);
    return j;
  }
  sd.mode = SigmaMode::isotropic_projective;
  ConstructionResult res = isotropic_projective_inverse(sd, q);
  j.update(construction_json(res, sources));
  j["developable"] = developability_check(res, sd);
  return j;
}

json run_isocurve(const Job& job, std::vector<SampleSource>* sources) {
  RationalFunction f0 = parse_expression(job.get("f0"));
  RationalFunction f1 = parse_expression(job.get("f1"));
  if (!f0.is_polynomial() || !f1.is_polynomial())
    fail(Errc::precondition, "f0 and f1 must be polynomials");
  IsotropicCurve c = isotropic_curve(f0.num(), f1.num());
  json j;
  j["parameter"] = c.param;
  j["alpha"] = rf_vec_json(c.alpha.coords);
  RFVec ap = c.alpha.derivative(c.param);
  j["alpha_prime"] = rf_vec_json(ap);
  j["isotropy_identity"] =
      dot(ap, ap, QuadraticSpace::identity(3)).is_zero();
  if (sources) sources->push_back({"alpha", c.alpha});
  return j;
}

json run_devel(const Job& job, std::vector<SampleSource>* sources) {
  RationalFunction f0 = parse_expression(job.get("f0"));
  RationalFunction f1 = parse_expression(job.get("f1"));
  if (!f0.is_polynomial() || !f1.is_polynomial())
    fail(Errc::precondition, "f0 and f1 must be polynomials");
  IsotropicCurve c = isotropic_curve(f0.num(), f1.num());
  Developable d = tangential_developable(c);
  json j;
  j["surface"] = rf_vec_json(d.surface.coords);
  j["parameters"] = d.surface.params;
  j["degenerate"] = d.degenerate;
  if (!d.note.empty()) j["note"] = d.note;
  if (sources) sources->push_back({"developable", d.surface});
  return j;
}

json run_check_t4(const Job& job) {
  json j;
  Theorem4Report rep;
  if (job.has("surface")) {
    RFVec coords = parse_tuple(job.get("surface"));
    auto params = required_params(job, 2, 2);
    ParametricVariety surf =
        make_variety(coords, params, ParametricVariety::Flavor::affine);
    rep = theorem4_check(surf, space_for(job, 3));
  } else {
    RationalFunction f = parse_expression(job.get("f"));
    if (!f.is_polynomial()) fail(Errc::precondition, "f must be a polynomial");
    RFVec coords = parse_tuple(job.get("witness"));
    auto params = required_params(job, 2, 2);
    ParametricVariety wit =
        make_variety(coords, params, ParametricVariety::Flavor::affine);
    ImplicitHypersurface x{ambient_var_names((int)coords.size()), f.num()};
    rep = theorem4_check(x, wit, space_for(job, (int)coords.size()));
  }
  j["holds"] = rep.holds;
  if (!rep.failing.empty()) j["failing"] = rep.failing;
  return j;
}

json run_check_t5(const Job& job) {
  RFVec o = parse_tuple(job.get("o"));
  RationalFunction r = parse_expression(job.get("r"));
  std::vector<std::string> params =
      job.has("params") ? parse_name_list(job.get("params"))
                        : std::vector<std::string>{};
  SigmaData sd{make_variety(o, params, ParametricVariety::Flavor::affine), r,
               SigmaMode::standard};
  QuadraticSpace q = space_for(job, (int)o.size());
  Theorem5Report rep = theorem5_check(sd, q);
  json j;
  j["holds"] = rep.holds;
  if (!rep.failing.empty()) j["failing_condition"] = rep.failing;
  if (rep.holds) {
    ConstructionResult res = inverse_construction(sd, q);
    j["fibers_are_affine_spaces"] = res.fibers_are_affine_spaces;
  }
  return j;
}

json run_product(const Job& job) {
  VarietySystem m, w;
  m.vars = parse_name_list(job.get("vars1"));
  w.vars = parse_name_list(job.get("vars2"));
  auto parse_eqs = [](const std::string& text) {
    std::vector<Polynomial> eqs;
    // list of expressions
    size_t a = text.find('[');
    size_t b = text.rfind(']');
    if (a == std::string::npos || b == std::string::npos)
      fail(Errc::parse_error, "expected a list of equations");
    std::string inner = text.substr(a + 1, b - a - 1);
    int depth = 0;
    std::string cur;
    std::vector<std::string> items;
    for (char c : inner) {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == ',' && depth == 0) {
        items.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) items.push_back(cur);
    for (const auto& item : items) {
      RationalFunction f = parse_expression(item);
      if (!f.is_polynomial())
        fail(Errc::precondition, "equations must be polynomial");
      eqs.push_back(f.num());
    }
    return eqs;
  };
  m.equations = parse_eqs(job.get("eqs1"));
  w.equations = parse_eqs(job.get("eqs2"));
  VarietySystem prod = product_construction(m, w);
  json j;
  j["vars"] = prod.vars;
  j["equations"] = poly_list_json(prod.equations);
  json em = json::array();
  for (const auto& p : endpoint_map_system(prod)) em.push_back(p.str());
  j["endpoint_map"] = em;
  j["lambda_names"] = endpoint_lambda_names(prod.equations.size());
  return j;
}

json run_sphere_fiber(const Job& job) {
  RationalFunction f = parse_expression(job.get("f"));
  if (!f.is_polynomial()) fail(Errc::precondition, "f must be a polynomial");
  RFVec wit_coords = parse_tuple(job.get("witness"));
  auto params = required_params(job, 1, 2);
  int m = (int)wit_coords.size();
  std::vector<std::string> vars = job.has("vars")
                                      ? parse_name_list(job.get("vars"))
                                      : ambient_var_names(m);
  ParametricVariety wit =
      make_variety(wit_coords, params, ParametricVariety::Flavor::affine);
  bool at_infinity = job.has("direction");
  if (at_infinity == job.has("center"))
    fail(Errc::precondition, "provide exactly one of center / direction");
  RFVec ov = parse_tuple(job.get(at_infinity ? "direction" : "center"));
  GQVec o;
  for (const auto& c : ov) {
    if (!c.is_constant())
      fail(Errc::precondition, "centre coordinates must be constants");
    o.push_back(c.constant_value());
  }
  QuadraticSpace q = space_for(job, m);
  bool ok = fiber_sphere_check(ImplicitHypersurface{vars, f.num()}, o,
                               at_infinity, wit, q);
  json j;
  j["holds"] = ok;
  j["at_infinity"] = at_infinity;
  return j;
}

}  // namespace

ResultDocument run_job(const Job& job) {
  ResultDocument out;
  json doc;
  doc["schema"] = 1;
  doc["command"] = job.command;
  json echo = json::object();
  for (const auto& [k, v] : job.entries) echo[k] = v;
  doc["job"] = echo;
  doc["seed"] = job.seed;
  try {
    json payload;
    if (job.command == "evolute")
      payload = run_evolute(job, &out.sample_sources);
    else if (job.command == "rotfocal")
      payload = run_rotfocal(job, &out.sample_sources);
    else if (job.command == "implicitize")
      payload = run_implicitize(job);
    else if (job.command == "imgdeg")
      payload = run_imgdeg(job);
    else if (job.command == "degree")
      payload = run_degree(job);
    else if (job.command == "inverse")
      payload = run_inverse(job, &out.sample_sources);
    else if (job.command == "isocurve")
      payload = run_isocurve(job, &out.sample_sources);
    else if (job.command == "devel")
      payload = run_devel(job, &out.sample_sources);
    else if (job.command == "check-t4")
      payload = run_check_t4(job);
    else if (job.command == "check-t5")
      payload = run_check_t5(job);
    else if (job.command == "product")
      payload = run_product(job);
    else if (job.command == "sphere-fiber")
      payload = run_sphere_fiber(job);
    else
      fail(Errc::unknown_command, "unknown command '" + job.command + "'");
    doc["status"] = "ok";
    doc["payload"] = payload;
    out.exit_code = 0;
  } catch (const Error& e) {
    doc["status"] = "error";
    json err;
    err["code"] = e.name();
    err["message"] = e.what();
    doc["error"] = err;
    out.exit_code = e.exit_code();
  } catch (const std::exception& e) {
    doc["status"] = "error";
    json err;
    err["code"] = errc_name(Errc::internal);
    err["message"] = e.what();
    doc["error"] = err;
    out.exit_code = 4;
  }
  out.doc = std::move(doc);
  return out;
}

namespace {

std::string render_coord(const GaussianRational& c, int precision) {
  std::string out = decimal_string(c.re(), precision);
  if (c.im() != 0) {
    std::string im = decimal_string(c.im(), precision);
    if (!im.empty() && im[0] != '-') out += "+";
    out += im + "i";
  }
  return out;
}

}  // namespace

std::string emit_samples(const ResultDocument& result, int count,
                         const std::string& format, int precision) {
  if (result.sample_sources.empty())
    fail(Errc::no_samples, "result has no parametrized component");
  if (count < 1) fail(Errc::precondition, "count must be positive");
  bool csv = (format == "csv");
  if (!csv && format != "json")
    fail(Errc::precondition, "format must be csv or json");
  json jout;
  jout["display_only"] = true;
  jout["precision"] = precision;
  json jsources = json::array();
  std::ostringstream os;
  if (csv) os << "# display-only decimal rendering, precision " << precision
              << "\n";
  for (const auto& src : result.sample_sources) {
    const ParametricVariety& v = src.variety;
    json jsrc;
    jsrc["label"] = src.label;
    json pts = json::array();
    if (csv) {
      os << "component," << src.label << "\n";
      os << "index";
      for (const auto& p : v.params) os << "," << p;
      for (size_t k = 0; k < v.coords.size(); ++k) os << ",c" << k + 1;
      os << "\n";
    }
    int emitted = 0;
    for (long step = 0; emitted < count && step < count * 8 + 64; ++step) {
      std::map<std::string, GaussianRational> pt;
      if (v.params.size() == 1) {
        pt[v.params[0]] = GaussianRational(step);
      } else if (v.params.size() == 2) {
        pt[v.params[0]] = GaussianRational(step / 4);
        pt[v.params[1]] = GaussianRational(step % 4);
      } else {
        break;
      }
      bool pole = false;
      std::vector<GaussianRational> coords;
      for (const auto& c : v.coords) {
        std::map<std::string, GaussianRational> filtered;
        for (const auto& var : c.num().vars()) filtered[var] = pt[var];
        for (const auto& var : c.den().vars()) filtered[var] = pt[var];
        if (c.den().evaluate(filtered).is_zero()) {
          pole = true;
          break;
        }
        coords.push_back(c.evaluate(filtered));
      }
      if (pole) continue;
      json jp;
      json jparams = json::object();
      for (const auto& p : v.params)
        jparams[p] = pt[p].re().get_str();
      jp["params"] = jparams;
      json jc = json::array();
      for (const auto& c : coords) jc.push_back(render_coord(c, precision));
      jp["coords"] = jc;
      pts.push_back(jp);
      if (csv) {
        os << emitted;
        for (const auto& p : v.params) os << "," << pt[p].re().get_str();
        for (const auto& c : coords) os << "," << render_coord(c, precision);
        os << "\n";
      }
      ++emitted;
    }
    if (emitted == 0 && !v.params.empty())
      fail(Errc::no_samples, "no pole-free sample parameters found");
    if (v.params.empty()) {
      // constant component: a single point
      std::vector<GaussianRational> coords;
      for (const auto& c : v.coords)
        coords.push_back(c.constant_value());
      json jp;
      jp["params"] = json::object();
      json jc = json::array();
      for (const auto& c : coords) jc.push_back(render_coord(c, precision));
      jp["coords"] = jc;
      pts.push_back(jp);
      if (csv) {
        os << 0;
        for (const auto& c : coords) os << "," << render_coord(c, precision);
        os << "\n";
      }
    }
    jsrc["points"] = pts;
    jsources.push_back(jsrc);
  }
  jout["sources"] = jsources;
  return csv ? os.str() : jout.dump(2) + "\n";
}

}  // namespace focalis
