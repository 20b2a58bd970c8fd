#include "focalis/focal.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "focalis/error.hpp"

namespace focalis {

std::string RamificationFactored::str() const {
  if (identically_zero) return "0";
  std::string out = unit.str();
  if (!content.is_constant()) out += " * (" + content.str() + ")";
  if (!branch.is_constant()) out += " * (" + branch.str() + ")";
  return out;
}

std::vector<const FocalComponent*> FocalOutput::strict() const {
  std::vector<const FocalComponent*> v;
  for (const auto& c : components)
    if (c.kind == FocalComponent::Kind::strict_branch) v.push_back(&c);
  return v;
}

std::vector<const FocalComponent*> FocalOutput::large() const {
  std::vector<const FocalComponent*> v;
  for (const auto& c : components) v.push_back(&c);
  return v;
}

PolyVec endpoint_map(const ImplicitHypersurface& x, const QuadraticSpace& q) {
  if ((int)x.vars.size() != q.dim())
    fail(Errc::dimension_mismatch, "endpoint_map: ambient mismatch");
  if (x.F.is_zero()) fail(Errc::zero_polynomial, "zero hypersurface");
  Polynomial l = Polynomial::variable(kLambda);
  PolyVec out;
  bool grad_zero = true;
  for (const auto& v : x.vars) {
    Polynomial g = x.F.derivative(v);
    if (!g.is_zero()) grad_zero = false;
    out.push_back(Polynomial::variable(v) + l * g);
  }
  if (grad_zero) fail(Errc::degenerate_parametrization, "vanishing gradient");
  return out;
}

RFVec endpoint_map(const ParametricVariety& x, const QuadraticSpace& q) {
  PolyVec n = normal_field(x, q);
  RationalFunction l{Polynomial::variable(kLambda)};
  RFVec out;
  for (size_t i = 0; i < x.coords.size(); ++i)
    out.push_back(x.coords[i] + l * RationalFunction(n[i]));
  return out;
}

RamificationFactored ramification_poly(const ParametricVariety& curve,
                                       const QuadraticSpace& q) {
  if (curve.ambient != 2 || curve.params.size() != 1)
    fail(Errc::precondition, "ramification_poly: plane curve expected");
  const std::string& t = curve.params[0];
  RFVec eps = endpoint_map(curve, q);
  RationalFunction j = eps[0].derivative(t) * eps[1].derivative(kLambda) -
                       eps[0].derivative(kLambda) * eps[1].derivative(t);
  RamificationFactored out;
  if (j.is_zero()) {
    out.identically_zero = true;
    out.unit = GaussianRational(0);
    return out;
  }
  Polynomial n = j.num();
  Polynomial content = content_in(n, kLambda);
  Polynomial branch = *divide_exact(n, content);
  auto [uc, pc] = unit_primitive(content);
  auto [ub, pb] = unit_primitive(branch);
  out.unit = uc * ub;
  out.content = pc;
  out.branch = pb;
  return out;
}

namespace {

std::map<std::string, RationalFunction> subst_of(const std::string& var,
                                                 const RationalFunction& v) {
  return {{var, v}};
}

RFVec substitute_vec(const RFVec& v,
                     const std::map<std::string, RationalFunction>& repl) {
  RFVec out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(f.substitute(repl));
  return out;
}

std::optional<GaussianRational> eval_rf_at(
    const RationalFunction& f, const std::string& var,
    const GaussianRational& value) {
  std::map<std::string, GaussianRational> pt{{var, value}};
  if (f.den().evaluate(pt).is_zero()) return std::nullopt;
  return f.evaluate(pt);
}

}  // namespace

FocalOutput evolute(const ParametricVariety& curve, const QuadraticSpace& q) {
  FocalOutput out;
  out.ramification = ramification_poly(curve, q);
  const std::string& t = curve.params[0];
  if (out.ramification.identically_zero) {
    out.note =
        "endpoint map is everywhere singular: the curve is isotropically "
        "focally degenerate";
    return out;
  }
  PolyVec n = normal_field(curve, q);
  const Polynomial& branch = out.ramification.branch;
  if (branch.degree_in(kLambda) == 1) {
    auto cs = branch.coeffs_in(kLambda);
    RationalFunction lam(-cs[0], cs[1]);
    std::map<std::string, RationalFunction> repl{{kLambda, lam}};
    FocalComponent comp;
    comp.kind = FocalComponent::Kind::strict_branch;
    ParametricVariety image;
    image.ambient = 2;
    image.params = {t};
    image.coords = {curve.coords[0] + lam * RationalFunction(n[0]),
                    curve.coords[1] + lam * RationalFunction(n[1])};
    comp.is_point =
        image.coords[0].is_constant() && image.coords[1].is_constant();
    if (comp.is_point) {
      comp.note = "evolute degenerates to a single point (all centres coincide)";
      image.params = {};
    }
    comp.image = std::move(image);
    out.components.push_back(std::move(comp));
  } else {
    out.note =
        "no lambda-solvable branch: ramification is supported on the "
        "isotropic-tangent locus";
  }
  // Vertical components: lambda-free factors of the content.
  const Polynomial& content = out.ramification.content;
  if (!content.is_constant()) {
    SquarefreeData sf = squarefree_and_content(content, t);
    RootSplit rs = gaussian_roots(sf.squarefree, t);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& r : rs.roots) {
      if (!seen.insert({r.re().get_str(), r.im().get_str()}).second) continue;
      FocalComponent comp;
      comp.kind = FocalComponent::Kind::vertical;
      Polynomial tvar = Polynomial::variable(t);
      comp.factor = tvar - Polynomial(r);
      // multiplicity of (t - r) in the content
      long mult = 0;
      Polynomial rem = content;
      while (true) {
        auto d = divide_exact(rem, *comp.factor);
        if (!d) break;
        rem = *d;
        ++mult;
      }
      comp.multiplicity = mult;
      auto p0x = eval_rf_at(curve.coords[0], t, r);
      auto p0y = eval_rf_at(curve.coords[1], t, r);
      if (!p0x || !p0y) {
        comp.note = "factor at a pole of the parametrization; no affine image";
        out.components.push_back(std::move(comp));
        continue;
      }
      std::map<std::string, GaussianRational> pt{{t, r}};
      GaussianRational n0 = n[0].evaluate(pt), n1 = n[1].evaluate(pt);
      if (n0.is_zero() && n1.is_zero()) {
        comp.note = "normal field vanishes at the factor; image degenerate";
        out.components.push_back(std::move(comp));
        continue;
      }
      // image = normal line through (x(r), y(r)) with direction n(r)
      ParametricVariety line;
      line.ambient = 2;
      line.params = {kLambda};
      line.coords = {RationalFunction(Polynomial(*p0x) +
                                      Polynomial::variable(kLambda) * Polynomial(n0)),
                     RationalFunction(Polynomial(*p0y) +
                                      Polynomial::variable(kLambda) * Polynomial(n1))};
      comp.image = std::move(line);
      Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
      Polynomial eq = Polynomial(n1) * (x - Polynomial(*p0x)) -
                      Polynomial(n0) * (y - Polynomial(*p0y));
      comp.implicit_eqs = {unit_primitive(eq).second};
      out.components.push_back(std::move(comp));
    }
    if (!rs.leftover.is_constant()) {
      FocalComponent comp;
      comp.kind = FocalComponent::Kind::vertical;
      comp.factor = rs.leftover;
      comp.note = "factor has no roots reachable in Q(i); image not computed";
      out.components.push_back(std::move(comp));
    }
  }
  return out;
}

FocalOutput rotation_surface_focal(const ParametricVariety& profile,
                                   const QuadraticSpace& q) {
  if (profile.ambient != 2 || profile.params.size() != 1)
    fail(Errc::precondition, "rotation profile must be a plane curve");
  if (!(q.gram() == QuadraticSpace::identity(2).gram()))
    fail(Errc::unsupported,
         "rotation surfaces assume the standard Euclidean form");
  const std::string& s = profile.params[0];
  const RationalFunction& r = profile.coords[0];
  const RationalFunction& z = profile.coords[1];
  if (r.is_zero())
    fail(Errc::precondition, "profile radius is identically zero");
  RationalFunction rp = r.derivative(s), zp = z.derivative(s);
  if (rp.is_zero() && zp.is_zero())
    fail(Errc::degenerate_parametrization, "constant profile");
  FocalOutput out;
  Polynomial X = Polynomial::variable("x"), Y = Polynomial::variable("y"),
             Z = Polynomial::variable("z");
  if (zp.is_zero()) {
    out.note =
        "profile is a horizontal line: the rotation surface is a plane and "
        "its focal locus is degenerate";
    return out;
  }
  // Axis sheet: intersections of the profile normals with the axis.
  RationalFunction w = z + r * rp / zp;
  {
    FocalComponent axis;
    axis.kind = FocalComponent::Kind::strict_branch;
    if (w.is_constant()) {
      axis.is_point = true;
      ParametricVariety pt;
      pt.ambient = 3;
      pt.coords = {RationalFunction(0), RationalFunction(0), w};
      axis.image = std::move(pt);
      axis.implicit_eqs = {X, Y, Z - Polynomial(w.constant_value())};
      axis.note = "axis sheet collapses to a point";
    } else {
      ParametricVariety ax;
      ax.ambient = 3;
      ax.params = {"v"};
      RationalFunction v{Polynomial::variable("v")};
      ax.coords = {RationalFunction(0), RationalFunction(0), v};
      axis.image = std::move(ax);
      axis.implicit_eqs = {X, Y};
      axis.note = "z-axis; axis intercept z = " + w.str();
    }
    out.components.push_back(std::move(axis));
  }
  if (rp.is_zero()) {
    out.note = "vertical-line profile: evolute sheet is empty";
    return out;
  }
  // Second sheet: the profile evolute rotated around the axis.
  FocalOutput prof = evolute(profile, q);
  for (const auto* c : prof.strict()) {
    if (!c->image) continue;
    const RFVec& e = c->image->coords;
    FocalComponent sheet;
    sheet.kind = FocalComponent::Kind::strict_branch;
    if (c->is_point) {
      GaussianRational er = e[0].constant_value(), ez = e[1].constant_value();
      if (er.is_zero()) {
        sheet.is_point = true;
        ParametricVariety pt;
        pt.ambient = 3;
        pt.coords = {RationalFunction(0), RationalFunction(0),
                     RationalFunction(Polynomial(ez))};
        sheet.image = std::move(pt);
        sheet.implicit_eqs = {X, Y, Z - Polynomial(ez)};
        sheet.note = "evolute sheet collapses to a point on the axis";
      } else {
        ParametricVariety circ;
        circ.ambient = 3;
        circ.params = {"u"};
        Polynomial u = Polynomial::variable("u");
        Polynomial den = u * u + Polynomial(1);
        circ.coords = {
            RationalFunction(Polynomial(er) * (Polynomial(1) - u * u), den),
            RationalFunction(Polynomial(er) * Polynomial(2) * u, den),
            RationalFunction(Polynomial(ez))};
        sheet.image = std::move(circ);
        sheet.implicit_eqs = {
            Z - Polynomial(ez),
            unit_primitive(X * X + Y * Y - Polynomial(er * er)).second};
        sheet.note =
            "circle sheet; rational chart misses the point u = infinity";
      }
    } else {
      ParametricVariety surf;
      surf.ambient = 3;
      surf.params = {s, "u"};
      Polynomial u = Polynomial::variable("u");
      RationalFunction den{u * u + Polynomial(1)};
      RationalFunction cu{Polynomial(1) - u * u};
      RationalFunction su{Polynomial(2) * u};
      surf.coords = {e[0] * cu / den, e[0] * su / den, e[1]};
      sheet.image = std::move(surf);
      sheet.note =
          "rotation of the profile evolute; rational chart misses u = infinity";
    }
    out.components.push_back(std::move(sheet));
  }
  return out;
}

std::vector<Polynomial> graph_equations(
    const ParametricVariety& x, const std::vector<std::string>& targets) {
  if (targets.size() != x.coords.size())
    fail(Errc::dimension_mismatch, "graph_equations: target count");
  std::vector<Polynomial> eqs;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    Polynomial v = Polynomial::variable(targets[i]);
    eqs.push_back(v * x.coords[i].den() - x.coords[i].num());
  }
  return eqs;
}

namespace {

Polynomial canonical_eq(const Polynomial& p) {
  return unit_primitive(squarefree_all(p)).second;
}

bool vanishes_on(const Polynomial& eq, const ParametricVariety& x,
                 const std::vector<std::string>& targets) {
  std::map<std::string, RationalFunction> repl;
  for (size_t i = 0; i < targets.size(); ++i) repl[targets[i]] = x.coords[i];
  return substitute_numerator(eq, repl).is_zero();
}

}  // namespace

Implicitization implicitize_image(const ParametricVariety& x,
                                  const std::vector<std::string>& targets) {
  if (x.params.size() < 1 || x.params.size() > 2)
    fail(Errc::precondition, "implicitize_image: 1 or 2 parameters");
  Implicitization out;
  // Constant coordinates split off directly.
  std::vector<Polynomial> fixed;
  bool all_const = true;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i].is_constant()) {
      fixed.push_back(Polynomial::variable(targets[i]) -
                      Polynomial(x.coords[i].constant_value()));
    } else {
      all_const = false;
    }
  }
  if (all_const) {
    out.equations = fixed;
    out.image_is_hypersurface = false;
    return out;
  }
  std::vector<Polynomial> eqs = graph_equations(x, targets);
  // Throw away graph equations of constant coordinates (already in `fixed`).
  std::vector<Polynomial> live;
  for (size_t i = 0; i < x.coords.size(); ++i)
    if (!x.coords[i].is_constant()) live.push_back(eqs[i]);

  std::vector<std::string> params = x.params;
  std::vector<Polynomial> current = live;
  for (auto pit = params.rbegin(); pit != params.rend(); ++pit) {
    const std::string& p = *pit;
    std::vector<Polynomial> free_eqs, pos_eqs;
    for (const auto& e : current)
      (e.degree_in(p) > 0 ? pos_eqs : free_eqs).push_back(e);
    std::vector<Polynomial> next = free_eqs;
    if (pos_eqs.size() == 1) {
      // a single equation with a generically solvable parameter imposes no
      // condition on the closure
    } else {
      for (size_t i = 0; i < pos_eqs.size(); ++i)
        for (size_t j = i + 1; j < pos_eqs.size(); ++j) {
          Polynomial r = resultant(pos_eqs[i], pos_eqs[j], p);
          if (!r.is_zero() && !r.is_constant()) next.push_back(r);
        }
    }
    current = std::move(next);
  }
  // Canonicalize, filter by exact membership, dedupe.
  std::set<std::string> seen;
  for (auto& e : fixed) {
    Polynomial c = unit_primitive(e).second;
    if (seen.insert(c.str()).second) out.equations.push_back(c);
  }
  for (auto& e : current) {
    if (e.is_constant()) continue;
    Polynomial c = canonical_eq(e);
    if (!vanishes_on(c, x, targets)) {
      // keep only honest pieces: split content w.r.t. each variable and
      // retain the factors that vanish on the image
      bool kept = false;
      for (const auto& v : c.vars()) {
        Polynomial cont = content_in(c, v);
        Polynomial prim = primitive_part_in(c, v);
        for (Polynomial part : {cont, prim}) {
          if (part.is_constant()) continue;
          part = unit_primitive(part).second;
          if (vanishes_on(part, x, targets) && seen.insert(part.str()).second) {
            out.equations.push_back(part);
            kept = true;
          }
        }
        if (kept) break;
      }
      continue;
    }
    if (seen.insert(c.str()).second) out.equations.push_back(c);
  }
  if (out.equations.empty())
    fail(Errc::not_hypersurface,
         "elimination produced no equations: image is not a hypersurface "
         "in reach of the resultant engine");
  size_t ambient = targets.size();
  out.image_is_hypersurface = (out.equations.size() == 1) &&
                              (x.params.size() == ambient - 1);
  return out;
}

ImageDegree image_degree(const ParametricVariety& x, long long seed) {
  ImageDegree out;
  out.seed = seed;
  if (x.params.size() == 1 && x.coords.size() == 2) {
    const std::string& t = x.params[0];
    auto count_for = [&](long long s) -> long long {
      std::mt19937_64 rng((uint64_t)s);
      std::uniform_int_distribution<int> d(-19, 19);
      for (int attempt = 0; attempt < 64; ++attempt) {
        long a = d(rng), b = d(rng), c = d(rng);
        if (a == 0 && b == 0) continue;
        RationalFunction f = RationalFunction(Polynomial(a)) * x.coords[0] +
                             RationalFunction(Polynomial(b)) * x.coords[1] +
                             RationalFunction(Polynomial(c));
        if (f.is_zero() || f.num().degree_in(t) < 1) continue;
        return squarefree_and_content(f.num(), t).distinct_root_count;
      }
      fail(Errc::retry_exhausted, "no transversal line found");
    };
    long long c1 = count_for(seed), c2 = count_for(seed + 1),
              c3 = count_for(seed + 2);
    if (c1 != c2 || c2 != c3)
      fail(Errc::retry_exhausted,
           "intersection count unstable across 3 consecutive seeds");
    out.raw_intersections = c1;
    out.map_degree_note =
        "distinct parameter solutions on a random rational line; equals "
        "deg(image) * deg(parametrization onto image)";
    return out;
  }
  // Hypersurface route: implicitize, then meet a random rational line.
  std::vector<std::string> targets;
  const char* names3[] = {"x", "y", "z"};
  for (size_t i = 0; i < x.coords.size(); ++i)
    targets.push_back(x.coords.size() <= 3 ? names3[i]
                                           : "x" + std::to_string(i + 1));
  Implicitization imp = implicitize_image(x, targets);
  if (!imp.image_is_hypersurface)
    fail(Errc::not_hypersurface, "image_degree requires a hypersurface image");
  const Polynomial& g = imp.equations[0];
  auto count_for = [&](long long s) -> long long {
    std::mt19937_64 rng((uint64_t)s);
    std::uniform_int_distribution<int> d(-19, 19);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::map<std::string, Polynomial> repl;
      Polynomial u = Polynomial::variable("u");
      bool nonzero_dir = false;
      for (const auto& v : targets) {
        int p0 = d(rng), q0 = d(rng);
        if (q0 != 0) nonzero_dir = true;
        repl[v] = Polynomial(p0) + Polynomial(q0) * u;
      }
      if (!nonzero_dir) continue;
      Polynomial restricted = g.substitute(repl);
      if (restricted.is_zero() || restricted.degree_in("u") < 1) continue;
      return squarefree_and_content(restricted, "u").distinct_root_count;
    }
    fail(Errc::retry_exhausted, "no transversal line found");
  };
  long long c1 = count_for(seed), c2 = count_for(seed + 1),
            c3 = count_for(seed + 2);
  if (c1 != c2 || c2 != c3)
    fail(Errc::retry_exhausted,
         "intersection count unstable across 3 consecutive seeds");
  out.raw_intersections = c1;
  out.map_degree_note =
      "distinct intersections of the implicitized image with a random line "
      "(set-theoretic degree of the eliminant)";
  return out;
}

bool fiber_sphere_check(const ImplicitHypersurface& x, const GQVec& o,
                        bool o_at_infinity, const ParametricVariety& witness,
                        const QuadraticSpace& q) {
  if ((int)o.size() != q.dim())
    fail(Errc::dimension_mismatch, "fiber_sphere_check: centre dimension");
  if (witness.coords.size() != x.vars.size())
    fail(Errc::dimension_mismatch, "fiber_sphere_check: witness dimension");
  std::map<std::string, RationalFunction> repl;
  for (size_t i = 0; i < x.vars.size(); ++i) repl[x.vars[i]] = witness.coords[i];
  RationalFunction on_x = RationalFunction(x.F).substitute(repl);
  if (!on_x.is_zero())
    fail(Errc::witness_not_in_variety, "witness does not lie in X");
  RFVec grad;
  for (const auto& v : x.vars)
    grad.push_back(RationalFunction(x.F.derivative(v)).substitute(repl));
  if (o_at_infinity) {
    RFVec ovec;
    for (const auto& c : o) ovec.push_back(RationalFunction(Polynomial(c)));
    RationalFunction pairing = dot(ovec, witness.coords, q);
    if (!pairing.is_constant()) return false;
    return proportional_rf(grad, ovec);
  }
  RFVec diff;
  for (size_t i = 0; i < o.size(); ++i)
    diff.push_back(witness.coords[i] - RationalFunction(Polynomial(o[i])));
  RationalFunction radius2 = dot(diff, diff, q);
  if (!radius2.is_constant()) return false;
  return proportional_rf(diff, grad);
}

}  // namespace focalis
