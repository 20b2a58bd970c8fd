#include "focalis/isotropy.hpp"

#include <algorithm>

#include "focalis/error.hpp"
#include "focalis/linalg.hpp"

namespace focalis {

Polynomial integrate(const Polynomial& p, const std::string& x) {
  if (p.is_zero()) return p;
  std::vector<Polynomial> cs = p.coeffs_in(x);
  std::vector<Polynomial> out(cs.size() + 1, Polynomial());
  for (size_t k = 0; k < cs.size(); ++k) {
    mpq_class inv(1, (long)(k + 1));
    inv.canonicalize();
    out[k + 1] = cs[k] * GaussianRational(inv);
  }
  return Polynomial::from_coeffs_in(x, out);
}

IsotropicCurve isotropic_curve(const Polynomial& f0, const Polynomial& f1) {
  if (f0.is_zero() && f1.is_zero())
    fail(Errc::precondition, "isotropic_curve: (f0, f1) must be nonzero");
  std::vector<std::string> vars;
  std::set_union(f0.vars().begin(), f0.vars().end(), f1.vars().begin(),
                 f1.vars().end(), std::back_inserter(vars));
  if (vars.size() > 1)
    fail(Errc::precondition, "isotropic_curve: one parameter expected");
  std::string t = vars.empty() ? "t" : vars[0];
  GaussianRational i = GaussianRational::i();
  Polynomial d1 = f0 * f0 + f1 * f1;
  Polynomial d2 = (f1 * f1 - f0 * f0) * i;
  Polynomial d3 = f0 * f1 * (GaussianRational(-2) * i);
  IsotropicCurve c;
  c.f0 = f0;
  c.f1 = f1;
  c.param = t;
  c.alpha.ambient = 3;
  c.alpha.params = {t};
  c.alpha.coords = {RationalFunction(integrate(d1, t)),
                    RationalFunction(integrate(d2, t)),
                    RationalFunction(integrate(d3, t))};
  return c;
}

bool isotropy_equation_check(const ParametricVariety& curve) {
  if (curve.coords.size() != 4 || curve.params.size() > 1)
    fail(Errc::precondition,
         "isotropy_equation_check: 4 homogeneous coordinates of one parameter");
  if (curve.params.empty()) return true;  // constant curve, degenerate
  const std::string& t = curve.params[0];
  RationalFunction acc;
  const RationalFunction& s0 = curve.coords[0];
  RationalFunction s0p = s0.derivative(t);
  for (int k = 1; k <= 3; ++k) {
    RationalFunction w =
        curve.coords[k].derivative(t) * s0 - s0p * curve.coords[k];
    acc = acc + w * w;
  }
  return acc.is_zero();
}

Developable tangential_developable(const IsotropicCurve& curve) {
  const std::string& t = curve.param;
  RFVec ap = curve.alpha.derivative(t);
  bool apz = true;
  for (const auto& c : ap) apz = apz && c.is_zero();
  if (apz) fail(Errc::precondition, "alpha' vanishes identically");
  Developable out;
  out.surface.ambient = 3;
  out.surface.params = {t, "u"};
  RationalFunction u{Polynomial::variable("u")};
  for (size_t k = 0; k < 3; ++k)
    out.surface.coords.push_back(curve.alpha.coords[k] + u * ap[k]);
  RFVec app;
  for (const auto& c : ap) app.push_back(c.derivative(t));
  if (proportional_rf(app, ap)) {
    out.degenerate = true;
    out.note = "alpha is a line: the developable collapses to its plane";
  }
  return out;
}

namespace {

bool affine_linear_in(const RationalFunction& f, const std::string& u) {
  return !f.den().has_var(u) && f.num().degree_in(u) <= 1;
}

RFVec rf_derivative_vec(const RFVec& v, const std::string& p) {
  RFVec out;
  for (const auto& c : v) out.push_back(c.derivative(p));
  return out;
}

}  // namespace

Theorem4Report theorem4_check(const ParametricVariety& surface,
                              const QuadraticSpace& q) {
  if (surface.ambient != 3 || surface.params.size() != 2)
    fail(Errc::unsupported, "theorem4_check: surface in 3-space expected");
  const std::string& u = surface.params[1];  // ruling parameter
  Theorem4Report rep;
  for (const auto& c : surface.coords)
    if (!affine_linear_in(c, u)) {
      rep.failing = "no ruling: parametrization is not affine-linear in the "
                    "last parameter";
      return rep;
    }
  PolyVec n = normal_field(surface, q);
  if (!dot(n, n, q).is_zero()) {
    rep.failing = "normal field is not isotropic";
    return rep;
  }
  RFVec ruling = surface.derivative(u);
  RFVec nrf;
  for (const auto& c : n) nrf.push_back(RationalFunction(c));
  if (!proportional_rf(ruling, nrf)) {
    rep.failing = "ruling is not along the normal direction";
    return rep;
  }
  RFVec dn = rf_derivative_vec(nrf, u);
  if (!proportional_rf(dn, nrf)) {
    rep.failing = "tangent space varies along the ruling";
    return rep;
  }
  rep.holds = true;
  return rep;
}

Theorem4Report theorem4_check(const ImplicitHypersurface& x,
                              const ParametricVariety& witness_ruling,
                              const QuadraticSpace& q) {
  Theorem4Report rep;
  if (witness_ruling.params.size() != 2)
    fail(Errc::unsupported, "witness ruling needs 2 parameters");
  const std::string& u = witness_ruling.params[1];
  std::map<std::string, RationalFunction> repl;
  if (witness_ruling.coords.size() != x.vars.size())
    fail(Errc::dimension_mismatch, "witness vs hypersurface");
  for (size_t i = 0; i < x.vars.size(); ++i)
    repl[x.vars[i]] = witness_ruling.coords[i];
  if (!substitute_numerator(x.F, repl).is_zero())
    fail(Errc::witness_not_in_variety, "witness ruling does not lie in X");
  for (const auto& c : witness_ruling.coords)
    if (!affine_linear_in(c, u)) {
      rep.failing = "witness is not ruled by the last parameter";
      return rep;
    }
  RFVec g;
  for (const auto& v : x.vars)
    g.push_back(RationalFunction(x.F.derivative(v)).substitute(repl));
  if (!dot(g, g, q).is_zero()) {
    rep.failing = "normal field is not isotropic along the witness";
    return rep;
  }
  RFVec ruling = witness_ruling.derivative(u);
  if (!proportional_rf(ruling, g)) {
    rep.failing = "ruling is not along the normal direction";
    return rep;
  }
  RFVec dg = rf_derivative_vec(g, u);
  if (!proportional_rf(dg, g)) {
    rep.failing = "tangent space varies along the ruling";
    return rep;
  }
  rep.holds = true;
  return rep;
}

Theorem5Report theorem5_check(const SigmaData& s, const QuadraticSpace& q) {
  if (s.mode != SigmaMode::standard)
    fail(Errc::precondition, "theorem5_check: standard mode only");
  Theorem5Report rep;
  size_t m = q.dim();
  if (s.O.coords.size() != m)
    fail(Errc::dimension_mismatch, "Sigma parametrization vs ambient");
  // tangent frame
  std::vector<RFVec> tangent;
  for (const auto& p : s.O.params) tangent.push_back(s.O.derivative(p));
  // condition 1: Ann(T) totally isotropic
  Mat<RationalFunction> rows;
  for (const auto& v : tangent) {
    RFVec gv(m, RationalFunction());
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        const GaussianRational& g = q.gram()[i][j];
        if (!g.is_zero())
          gv[i] = gv[i] + RationalFunction(Polynomial(g)) * v[j];
      }
    rows.push_back(gv);
  }
  std::vector<RFVec> ann;
  if (rows.empty()) {
    for (size_t k = 0; k < m; ++k) {
      RFVec e(m, RationalFunction());
      e[k] = RationalFunction(Polynomial(GaussianRational(1)));
      ann.push_back(e);
    }
  } else {
    ann = nullspace(rows);
  }
  for (size_t i = 0; i < ann.size(); ++i)
    for (size_t j = i; j < ann.size(); ++j)
      if (!dot(ann[i], ann[j], q).is_zero()) {
        rep.failing = "1";
        return rep;
      }
  // condition 2.1: dr in the image of T -> T^dual
  size_t a = tangent.size();
  Mat<RationalFunction> gram_t(a, RFVec(a, RationalFunction()));
  for (size_t i = 0; i < a; ++i)
    for (size_t j = 0; j < a; ++j) gram_t[i][j] = dot(tangent[i], tangent[j], q);
  RFVec dr;
  for (const auto& p : s.O.params) dr.push_back(s.r.derivative(p));
  std::optional<RFVec> coeffs;
  if (a == 0) {
    coeffs = RFVec{};
  } else {
    coeffs = solve_particular(gram_t, dr);
  }
  if (!coeffs) {
    rep.failing = "2.1";
    return rep;
  }
  // condition 2.2: 1/4 <xi, xi> = r for xi with image dr
  RFVec xi(m, RationalFunction());
  for (size_t k = 0; k < a; ++k)
    for (size_t i = 0; i < m; ++i)
      xi[i] = xi[i] + (*coeffs)[k] * tangent[k][i];
  RationalFunction quarter{Polynomial(GaussianRational(mpq_class(1, 4)))};
  if (!(quarter * dot(xi, xi, q) == s.r)) {
    rep.failing = "2.2";
    return rep;
  }
  rep.holds = true;
  return rep;
}

VarietySystem product_construction(const VarietySystem& m,
                                   const VarietySystem& w) {
  VarietySystem out;
  size_t p = m.vars.size(), qn = w.vars.size();
  out.vars = ambient_var_names((int)(p + qn));
  std::map<std::string, Polynomial> left, right;
  for (size_t i = 0; i < p; ++i)
    left[m.vars[i]] = Polynomial::variable(out.vars[i]);
  for (size_t i = 0; i < qn; ++i)
    right[w.vars[i]] = Polynomial::variable(out.vars[p + i]);
  for (const auto& e : m.equations) out.equations.push_back(e.substitute(left));
  for (const auto& e : w.equations)
    out.equations.push_back(e.substitute(right));
  return out;
}

std::vector<std::string> endpoint_lambda_names(size_t count) {
  std::vector<std::string> names;
  for (size_t i = 1; i <= count; ++i)
    names.push_back("l" + std::to_string(i));
  return names;
}

PolyVec endpoint_map_system(const VarietySystem& sys) {
  std::vector<std::string> ls = endpoint_lambda_names(sys.equations.size());
  PolyVec out;
  for (const auto& v : sys.vars) {
    Polynomial acc = Polynomial::variable(v);
    for (size_t k = 0; k < sys.equations.size(); ++k)
      acc = acc + Polynomial::variable(ls[k]) * sys.equations[k].derivative(v);
    out.push_back(acc);
  }
  return out;
}

}  // namespace focalis
