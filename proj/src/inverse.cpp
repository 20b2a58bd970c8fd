#include "focalis/inverse.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "focalis/error.hpp"
#include "focalis/linalg.hpp"

namespace focalis {

namespace {

Polynomial canonical_system_eq(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return p;
  return unit_primitive(squarefree_all(p)).second;
}

// Substitute away a variable solved from a linear equation c*v + rest = 0
// with constant c. Returns true on success.
bool linear_substitution(const Polynomial& eq, const std::string& v,
                         std::map<std::string, Polynomial>* out) {
  if (eq.degree_in(v) != 1) return false;
  auto cs = eq.coeffs_in(v);
  if (!cs[1].is_constant()) return false;
  GaussianRational c = cs[1].constant_value();
  (*out)[v] = cs[0] * (-c.inverse());
  return true;
}

RFVec gram_apply(const QuadraticSpace& q, const RFVec& v) {
  size_t m = q.dim();
  RFVec out(m, RationalFunction());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      const GaussianRational& g = q.gram()[i][j];
      if (!g.is_zero()) out[i] = out[i] + RationalFunction(Polynomial(g)) * v[j];
    }
  return out;
}

RFVec full_basis_vec(size_t m, size_t k) {
  RFVec v(m, RationalFunction());
  v[k] = RationalFunction(Polynomial(GaussianRational(1)));
  return v;
}

// Fiber of the linear part: rows (already over the rational-function field)
// and right-hand side. Returns x0 and the nullspace basis.
FiberData solve_fiber(const Mat<RationalFunction>& rows, const RFVec& rhs,
                      size_t m) {
  FiberData f;
  if (rows.empty()) {
    f.point = RFVec(m, RationalFunction());
    for (size_t k = 0; k < m; ++k) f.dirs.push_back(full_basis_vec(m, k));
  } else {
    auto x0 = solve_particular(rows, rhs);
    if (!x0)
      fail(Errc::not_immersed,
           "linear fiber system is inconsistent over the function field");
    f.point = *x0;
    f.dirs = nullspace(rows);
  }
  for (size_t k = 0; k < f.dirs.size(); ++k)
    f.params.push_back("t" + std::to_string(k + 1));
  return f;
}

RFVec fiber_point_at(const FiberData& f,
                     const std::map<std::string, RationalFunction>& tvals) {
  RFVec x = f.point;
  for (size_t k = 0; k < f.dirs.size(); ++k) {
    auto it = tvals.find(f.params[k]);
    if (it == tvals.end()) continue;
    for (size_t i = 0; i < x.size(); ++i)
      x[i] = x[i] + it->second * f.dirs[k][i];
  }
  return x;
}

// Generic fiber parametrization x0 + sum t_k w_k as rational functions.
RFVec fiber_parametrization(const FiberData& f) {
  std::map<std::string, RationalFunction> tvals;
  for (const auto& tp : f.params)
    tvals[tp] = RationalFunction(Polynomial::variable(tp));
  return fiber_point_at(f, tvals);
}

}  // namespace

namespace {

// Split into multiplicative pieces reachable through variable contents.
void content_atoms(const Polynomial& p, std::vector<Polynomial>* out) {
  for (const auto& v : p.vars()) {
    Polynomial c = content_in(p, v);
    if (!c.is_constant()) {
      content_atoms(c, out);
      content_atoms(primitive_part_in(p, v), out);
      return;
    }
  }
  out->push_back(p);
}

}  // namespace

std::vector<Polynomial> eliminate_params(std::vector<Polynomial> eqs,
                                         const std::vector<std::string>& params,
                                         const std::vector<std::string>& vars,
                                         const RFVec* membership) {
  std::vector<Polynomial> current = std::move(eqs);
  for (auto pit = params.rbegin(); pit != params.rend(); ++pit) {
    const std::string& p = *pit;
    std::vector<Polynomial> free_eqs, pos_eqs;
    for (auto& e : current) {
      if (e.is_zero()) continue;
      (e.degree_in(p) > 0 ? pos_eqs : free_eqs).push_back(e);
    }
    // Reduce parameter-carrying equations modulo linear parameter-free ones;
    // this catches fibers that degenerate on the constraint locus.
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::string, Polynomial> subst;
      for (const auto& fe : free_eqs)
        for (const auto& v : vars)
          if (fe.has_var(v) && linear_substitution(fe, v, &subst)) break;
      if (subst.empty()) break;
      std::vector<Polynomial> still_pos;
      for (auto& e : pos_eqs) {
        Polynomial red = e.substitute(subst);
        if (red.is_zero()) {
          changed = true;
          continue;
        }
        if (red.degree_in(p) == 0) {
          if (!red.is_constant()) free_eqs.push_back(red);
          changed = true;
        } else {
          still_pos.push_back(e);
        }
      }
      pos_eqs = std::move(still_pos);
      if (!changed) break;
    }
    std::vector<Polynomial> next = free_eqs;
    if (pos_eqs.size() >= 2) {
      for (size_t i = 0; i < pos_eqs.size(); ++i)
        for (size_t j = i + 1; j < pos_eqs.size(); ++j) {
          Polynomial r = resultant(pos_eqs[i], pos_eqs[j], p);
          if (!r.is_zero() && !r.is_constant()) next.push_back(r);
        }
    }
    // a single parameter-positive equation imposes no condition on the
    // closure of the projection
    current = std::move(next);
  }
  // Canonicalize and prune duplicates / multiples.
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (auto& e : current) {
    if (e.is_zero() || e.is_constant()) continue;
    Polynomial c = canonical_system_eq(e);
    if (membership) {
      // keep only the factors that vanish on the parametrized image
      std::map<std::string, RationalFunction> repl;
      for (size_t i = 0; i < vars.size(); ++i) repl[vars[i]] = (*membership)[i];
      std::vector<Polynomial> atoms;
      content_atoms(c, &atoms);
      Polynomial kept(GaussianRational(1));
      for (const auto& atom : atoms) {
        if (atom.is_constant()) continue;
        if (substitute_numerator(atom, repl).is_zero()) kept = kept * atom;
      }
      if (kept.is_constant()) continue;
      c = unit_primitive(kept).second;
    }
    if (seen.insert(c.str()).second) out.push_back(c);
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < out.size() && !redundant; ++j) {
      if (i == j) continue;
      if (out[j].total_degree() < out[i].total_degree() ||
          (out[j].total_degree() == out[i].total_degree() && j < i)) {
        auto d = divide_exact(out[i], out[j]);
        if (d) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(out[i]);
  }
  return minimal;
}

namespace {

struct StandardParts {
  RFVec xv;                 // ambient coordinates as rational functions
  RationalFunction sphere;  // <x-O, x-O> - r
  std::vector<RationalFunction> linear;  // dr/ds_j + 2 <x-O, dO/ds_j>
  Mat<RationalFunction> rows;
  RFVec rhs;
};

StandardParts standard_parts(const SigmaData& s, const QuadraticSpace& q,
                             const std::vector<std::string>& vars) {
  StandardParts out;
  size_t m = q.dim();
  if (s.O.coords.size() != m)
    fail(Errc::dimension_mismatch, "Sigma parametrization vs ambient");
  for (const auto& v : vars)
    out.xv.push_back(RationalFunction(Polynomial::variable(v)));
  RFVec diff;
  for (size_t i = 0; i < m; ++i) diff.push_back(out.xv[i] - s.O.coords[i]);
  out.sphere = dot(diff, diff, q) - s.r;
  for (const auto& p : s.O.params) {
    RFVec dO = s.O.derivative(p);
    bool all_zero = true;
    for (const auto& c : dO) all_zero = all_zero && c.is_zero();
    if (all_zero)
      fail(Errc::precondition,
           "O is constant in parameter '" + p +
               "': Sigma is not of the declared dimension");
    RationalFunction two{Polynomial(2L)};
    out.linear.push_back(s.r.derivative(p) + two * dot(diff, dO, q));
    // rows: 2 (G dO)^T x = 2 <O, dO> - dr/ds
    RFVec gd = gram_apply(q, dO);
    std::vector<RationalFunction> row;
    for (size_t i = 0; i < m; ++i) row.push_back(two * gd[i]);
    out.rows.push_back(std::move(row));
    out.rhs.push_back(two * dot(s.O.coords, dO, q) - s.r.derivative(p));
  }
  return out;
}

bool rf_vec_all_zero(const RFVec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

AdmissibilityReport admissibility_check(const SigmaData& s,
                                        const QuadraticSpace& q) {
  if (s.mode != SigmaMode::standard)
    fail(Errc::precondition, "admissibility_check: standard mode only");
  std::vector<std::string> vars = ambient_var_names(q.dim());
  StandardParts parts = standard_parts(s, q, vars);
  FiberData fiber = solve_fiber(parts.rows, parts.rhs, q.dim());
  AdmissibilityReport rep;
  for (size_t i = 0; i < fiber.dirs.size(); ++i)
    for (size_t j = i; j < fiber.dirs.size(); ++j)
      if (!dot(fiber.dirs[i], fiber.dirs[j], q).is_zero()) {
        rep.admissible = true;
        rep.reason = "fiber direction is not totally isotropic";
        return rep;
      }
  // Totally isotropic direction: Lemma-3 configuration when the fiber lies in
  // O + W-perp; then the quadratic function is the constant R(s).
  RFVec x0mO;
  for (size_t i = 0; i < fiber.point.size(); ++i)
    x0mO.push_back(fiber.point[i] - s.O.coords[i]);
  for (const auto& w : fiber.dirs)
    if (!dot(x0mO, w, q).is_zero()) {
      rep.admissible = true;
      rep.reason =
          "fiber is not contained in O + W-perp: quadratic not constant";
      return rep;
    }
  RationalFunction big_r = dot(x0mO, x0mO, q);
  if (big_r == s.r) {
    rep.admissible = true;
    rep.reason = "Lemma-3 configuration with R(s) = r(s)";
  } else {
    rep.admissible = false;
    rep.reason = "Lemma-3 configuration with forced constant R(s) = " +
                 big_r.str() + " different from r(s)";
  }
  return rep;
}

ConstructionResult inverse_construction(const SigmaData& s,
                                        const QuadraticSpace& q) {
  if (s.mode != SigmaMode::standard)
    fail(Errc::precondition, "inverse_construction: standard mode only");
  if (s.O.params.size() > 2)
    fail(Errc::unsupported, "Sigma of dimension > 2 is not supported");
  ConstructionResult out;
  out.ambient_vars = ambient_var_names(q.dim());
  StandardParts parts = standard_parts(s, q, out.ambient_vars);
  out.system.push_back(unit_primitive(parts.sphere.num()).second);
  for (const auto& l : parts.linear)
    out.system.push_back(unit_primitive(l.num()).second);
  out.fiber = solve_fiber(parts.rows, parts.rhs, q.dim());
  // Affine-fiber test: the sphere equation restricted to the generic fiber.
  {
    RFVec xst = fiber_parametrization(out.fiber);
    std::map<std::string, RationalFunction> repl;
    for (size_t i = 0; i < out.ambient_vars.size(); ++i)
      repl[out.ambient_vars[i]] = xst[i];
    Polynomial restricted =
        substitute_numerator(parts.sphere.num(), repl);
    out.fibers_are_affine_spaces = restricted.is_zero();
  }
  AdmissibilityReport rep = admissibility_check(s, q);
  out.admissible = rep.admissible;
  out.admissibility_reason = rep.reason;
  out.eliminated = eliminate_params(out.system, s.O.params, out.ambient_vars);
  if (out.eliminated.size() == 1) out.eliminant = out.eliminated[0];
  if (out.eliminated.empty())
    out.note =
        "elimination returned no equations: X' is reachable only through its "
        "fiber parametrization";
  return out;
}

namespace {

// Lift access for asymptotic / isotropic modes: V'-part of the homogeneous
// parametrization, with the chart coordinate checked to vanish.
RFVec lift_vpart(const SigmaData& s, size_t m) {
  if (s.O.flavor != ParametricVariety::Flavor::homogeneous ||
      s.O.coords.size() != m + 1)
    fail(Errc::precondition,
         "Sigma at infinity requires a homogeneous lift with m+1 coordinates");
  if (!s.O.coords[0].is_zero())
    fail(Errc::precondition,
         "homogeneous lift must have vanishing affine-chart coordinate");
  return RFVec(s.O.coords.begin() + 1, s.O.coords.end());
}

}  // namespace

ConstructionResult asymptotic_inverse(const SigmaData& s,
                                      const QuadraticSpace& q) {
  if (s.mode != SigmaMode::asymptotic)
    fail(Errc::precondition, "asymptotic_inverse: asymptotic mode only");
  size_t m = q.dim();
  RFVec ov = lift_vpart(s, m);
  if (rf_vec_all_zero(ov))
    fail(Errc::precondition, "zero homogeneous lift");
  ConstructionResult out;
  out.ambient_vars = ambient_var_names(m);
  RFVec xv;
  for (const auto& v : out.ambient_vars)
    xv.push_back(RationalFunction(Polynomial::variable(v)));
  Mat<RationalFunction> rows;
  RFVec rhs;
  RFVec ga = gram_apply(q, ov);
  rows.push_back(ga);
  rhs.push_back(s.r);
  out.system.push_back(
      unit_primitive((dot(xv, ov, q) - s.r).num()).second);
  for (const auto& p : s.O.params) {
    RFVec dov;
    for (const auto& c : ov) dov.push_back(c.derivative(p));
    if (rf_vec_all_zero(dov))
      fail(Errc::not_immersed, "O'(s) vanishes identically");
    Mat<RationalFunction> indep = {ov, dov};
    if (rank_of(indep) < 2)
      fail(Errc::not_immersed,
           "O(s) and O'(s) are generically dependent: Sigma is not immersed");
    rows.push_back(gram_apply(q, dov));
    rhs.push_back(s.r.derivative(p));
    out.system.push_back(
        unit_primitive((dot(xv, dov, q) - s.r.derivative(p)).num()).second);
  }
  out.fiber = solve_fiber(rows, rhs, m);
  out.fibers_are_affine_spaces = true;  // fibers are affine spaces by design
  RFVec span = fiber_parametrization(out.fiber);
  out.eliminated =
      eliminate_params(out.system, s.O.params, out.ambient_vars, &span);
  if (out.eliminated.size() == 1) out.eliminant = out.eliminated[0];
  return out;
}

ConstructionResult isotropic_projective_inverse(const SigmaData& s,
                                                const QuadraticSpace& q) {
  if (s.mode != SigmaMode::isotropic_projective)
    fail(Errc::precondition,
         "isotropic_projective_inverse: isotropic mode only");
  size_t m = q.dim();
  RFVec ov = lift_vpart(s, m);
  ConstructionResult out;
  out.ambient_vars = ambient_var_names(m);
  RFVec xv;
  for (const auto& v : out.ambient_vars)
    xv.push_back(RationalFunction(Polynomial::variable(v)));
  Mat<RationalFunction> rows;
  RFVec rhs;
  rows.push_back(gram_apply(q, ov));
  rhs.push_back(s.r);
  out.system.push_back(unit_primitive((dot(xv, ov, q) - s.r).num()).second);
  RationalFunction half{Polynomial(GaussianRational(mpq_class(1, 2)))};
  for (const auto& p : s.O.params) {
    RFVec dov;
    for (const auto& c : ov) dov.push_back(c.derivative(p));
    rows.push_back(gram_apply(q, dov));
    rhs.push_back(half * s.r.derivative(p));
    out.system.push_back(
        unit_primitive((dot(xv, dov, q) - half * s.r.derivative(p)).num())
            .second);
  }
  // Precondition: the annihilator of the projective tangent span is totally
  // isotropic at generic s.
  Mat<RationalFunction> homo = rows;
  std::vector<RFVec> ann = nullspace(homo);
  for (size_t i = 0; i < ann.size(); ++i)
    for (size_t j = i; j < ann.size(); ++j) {
      RationalFunction pairing = dot(ann[i], ann[j], q);
      if (!pairing.is_zero()) {
        std::ostringstream os;
        os << "annihilator of the tangent span is not totally isotropic: "
           << "<w" << i + 1 << ", w" << j + 1 << "> = " << pairing.str();
        fail(Errc::annihilator_not_isotropic, os.str());
      }
    }
  out.fiber = solve_fiber(rows, rhs, m);
  out.fibers_are_affine_spaces = true;
  // Admissibility: <x, x> must be the constant r(s) on the fibers.
  RFVec xst = fiber_parametrization(out.fiber);
  RationalFunction rveval = dot(xst, xst, q);
  bool t_dependent = false;
  for (const auto& tp : out.fiber.params)
    if (rveval.num().has_var(tp) || rveval.den().has_var(tp))
      t_dependent = true;
  if (t_dependent) {
    out.admissible = false;
    out.admissibility_reason =
        "constancy of <x, x> fails on the fiber: R depends on the fiber "
        "coordinates";
  } else if (!(rveval == s.r)) {
    out.admissible = false;
    out.admissibility_reason = "forced constant R(s) = " + rveval.str() +
                               " differs from r(s) = " + s.r.str();
  } else {
    out.admissible = true;
    out.admissibility_reason = "R(s) = r(s) on the fibers";
  }
  out.eliminated =
      eliminate_params(out.system, s.O.params, out.ambient_vars, &xst);
  if (out.eliminated.size() == 1) out.eliminant = out.eliminated[0];
  return out;
}

bool developability_check(const ConstructionResult& result,
                          const SigmaData& s) {
  // The tangent space at x0 + sum t_i w_i is span{W, x0' + sum t_i w_i'}
  // (one derivative vector per base parameter). It is independent of the
  // fiber coordinates iff the span of W together with all base derivatives
  // of x0 and of the w_i has rank at most dim W + dim Sigma.
  if (s.O.params.empty()) return true;
  const FiberData& f = result.fiber;
  if (f.dirs.empty()) return true;
  Mat<RationalFunction> all;
  for (const auto& w : f.dirs) all.push_back(w);
  size_t k = f.dirs.size(), a = s.O.params.size();
  for (const auto& p : s.O.params) {
    RFVec x0p;
    for (const auto& c : f.point) x0p.push_back(c.derivative(p));
    all.push_back(std::move(x0p));
    for (const auto& w : f.dirs) {
      RFVec wp;
      for (const auto& c : w) wp.push_back(c.derivative(p));
      all.push_back(std::move(wp));
    }
  }
  return rank_of(all) <= (int)(k + a);
}

bool dual_at_infinity_check(const ConstructionResult& result,
                            const SigmaData& s, const QuadraticSpace& q) {
  if (!result.eliminant)
    fail(Errc::precondition, "dual_at_infinity_check needs an eliminant");
  size_t m = q.dim();
  RFVec ov = lift_vpart(s, m);
  const std::vector<std::string>& vars = result.ambient_vars;
  // X_infinity: top-degree homogeneous part of the eliminant (the chart
  // coordinate of the homogenization set to zero).
  const Polynomial& f = *result.eliminant;
  long top = f.total_degree();
  Polynomial top_form;
  for (const auto& [e, c] : f.terms()) {
    long d = 0;
    for (auto k : e) d += k;
    if (d == top) top_form = top_form + Polynomial::monomial(f.vars(), e, c);
  }
  Polynomial xinf = unit_primitive(squarefree_all(top_form)).second;
  // Ruling directions are points of X_infinity and must pair to zero with
  // O(s) and every dO/ds as exact identities.
  for (const auto& w : result.fiber.dirs) {
    std::map<std::string, RationalFunction> repl;
    for (size_t i = 0; i < vars.size(); ++i) repl[vars[i]] = w[i];
    if (!substitute_numerator(xinf, repl).is_zero()) return false;
    if (!dot(w, ov, q).is_zero()) return false;
    for (const auto& p : s.O.params) {
      RFVec dov;
      for (const auto& c : ov) dov.push_back(c.derivative(p));
      if (!dot(w, dov, q).is_zero()) return false;
    }
  }
  // Dual variety of Sigma under the Q-identification: eliminate s from the
  // pairings with O(s) and dO/ds.
  RFVec pv;
  for (const auto& v : vars)
    pv.push_back(RationalFunction(Polynomial::variable(v)));
  std::vector<Polynomial> pairings;
  Mat<RationalFunction> prows;
  pairings.push_back(unit_primitive(dot(pv, ov, q).num()).second);
  prows.push_back(gram_apply(q, ov));
  for (const auto& p : s.O.params) {
    RFVec dov;
    for (const auto& c : ov) dov.push_back(c.derivative(p));
    pairings.push_back(unit_primitive(dot(pv, dov, q).num()).second);
    prows.push_back(gram_apply(q, dov));
  }
  // membership parametrization: the solution span of the homogeneous pairings
  std::vector<RFVec> ns = nullspace(prows);
  RFVec span(m, RationalFunction());
  for (size_t k = 0; k < ns.size(); ++k) {
    RationalFunction tk{Polynomial::variable("t" + std::to_string(k + 1))};
    for (size_t i = 0; i < m; ++i) span[i] = span[i] + tk * ns[k][i];
  }
  std::vector<Polynomial> dual =
      eliminate_params(pairings, s.O.params, vars, ns.empty() ? nullptr : &span);
  if (dual.size() == 1) {
    // non-degenerate dual: X_infinity equals the dual hypersurface
    return xinf == dual[0];
  }
  // degenerate dual (codimension >= 2): the dual variety is contained in
  // X_infinity; verified by substituting the solved linear system.
  std::map<std::string, Polynomial> subst;
  for (const auto& eq : dual) {
    bool solved = false;
    for (const auto& v : vars)
      if (eq.has_var(v) && linear_substitution(eq, v, &subst)) {
        solved = true;
        break;
      }
    if (!solved) return false;
  }
  Polynomial restricted = xinf.substitute(subst);
  // iterate in case substitutions chain
  for (int k = 0; k < (int)vars.size() && !restricted.is_zero(); ++k)
    restricted = restricted.substitute(subst);
  return restricted.is_zero();
}

namespace {

std::vector<GaussianRational> sample_grid() {
  return {GaussianRational(0),          GaussianRational(1),
          GaussianRational(-1),         GaussianRational(2),
          GaussianRational::of(1, 2),   GaussianRational(3),
          GaussianRational::i(),        GaussianRational(1) + GaussianRational::i(),
          GaussianRational(-2),         GaussianRational::of(-1, 2)};
}

std::optional<GQVec> eval_vec_at(const RFVec& v,
                                 const std::map<std::string, GaussianRational>& pt) {
  GQVec out;
  for (const auto& c : v) {
    std::map<std::string, GaussianRational> filtered;
    for (const auto& var : c.num().vars()) {
      auto it = pt.find(var);
      if (it == pt.end()) return std::nullopt;
      filtered[var] = it->second;
    }
    for (const auto& var : c.den().vars()) {
      auto it = pt.find(var);
      if (it == pt.end()) return std::nullopt;
      filtered[var] = it->second;
    }
    if (c.den().evaluate(filtered).is_zero()) return std::nullopt;
    out.push_back(c.evaluate(filtered));
  }
  return out;
}

}  // namespace

ForwardConsistency forward_consistency(const ConstructionResult& result,
                                       const SigmaData& s,
                                       const QuadraticSpace& q) {
  ForwardConsistency out;
  if (s.mode != SigmaMode::standard)
    fail(Errc::precondition, "forward_consistency: standard mode only");
  if (result.eliminated.empty())
    fail(Errc::precondition, "forward_consistency needs eliminated equations");
  size_t m = q.dim();
  const std::vector<std::string>& vars = result.ambient_vars;
  // sphere equation restricted to the generic fiber, as a polynomial in the
  // fiber coordinates over the parameter field
  RFVec xst = fiber_parametrization(result.fiber);
  std::map<std::string, RationalFunction> repl;
  for (size_t i = 0; i < vars.size(); ++i) repl[vars[i]] = xst[i];
  Polynomial sphere_restricted =
      substitute_numerator(result.system[0], repl);
  int found = 0, checked = 0;
  for (const auto& sval : sample_grid()) {
    if (found >= 4) break;
    std::map<std::string, GaussianRational> pt;
    for (const auto& p : s.O.params) pt[p] = sval;
    // choose fiber coordinates: free ones from the grid, the first solved
    // from the restricted sphere equation
    const auto& tparams = result.fiber.params;
    std::vector<std::map<std::string, GaussianRational>> assignments;
    if (sphere_restricted.is_zero()) {
      std::map<std::string, GaussianRational> a;
      for (size_t k = 0; k < tparams.size(); ++k)
        a[tparams[k]] = GaussianRational((long)k + 1);
      assignments.push_back(a);
    } else {
      for (const auto& tval : sample_grid()) {
        std::map<std::string, GaussianRational> a = pt;
        for (size_t k = 1; k < tparams.size(); ++k)
          a[tparams[k]] = tval + GaussianRational((long)k);
        // restrict to univariate in tparams[0]
        std::map<std::string, Polynomial> spoly;
        for (const auto& [k, v] : a) spoly[k] = Polynomial(v);
        Polynomial uni = sphere_restricted.substitute(spoly);
        if (uni.is_zero()) {
          a[tparams.empty() ? "t1" : tparams[0]] = GaussianRational(1);
          assignments.push_back(a);
          break;
        }
        if (tparams.empty()) break;
        long deg = uni.degree_in(tparams[0]);
        if (deg < 1 || deg > 2) continue;
        RootSplit roots = gaussian_roots(uni, tparams[0]);
        if (roots.roots.empty()) continue;
        a[tparams[0]] = roots.roots[0];
        assignments.push_back(a);
        break;
      }
    }
    for (const auto& a : assignments) {
      std::map<std::string, GaussianRational> full = pt;
      for (const auto& [k, v] : a) full[k] = v;
      auto xs = eval_vec_at(xst, full);
      auto os = eval_vec_at(s.O.coords, full);
      if (!xs || !os) continue;
      // verify the sample satisfies every eliminated equation
      std::map<std::string, GaussianRational> amb;
      for (size_t i = 0; i < vars.size(); ++i) amb[vars[i]] = (*xs)[i];
      bool on_variety = true;
      for (const auto& eq : result.eliminated) {
        std::map<std::string, GaussianRational> needed;
        for (const auto& v : eq.vars()) needed[v] = amb[v];
        if (!eq.evaluate(needed).is_zero()) on_variety = false;
      }
      if (!on_variety) {
        out.holds = false;
        out.note = "sampled fiber point violates the eliminated system";
        return out;
      }
      // normality: x - O(s) lies in the span of the gradients
      Mat<GaussianRational> rows;
      for (const auto& eq : result.eliminated) {
        std::vector<GaussianRational> grad;
        for (size_t i = 0; i < vars.size(); ++i) {
          Polynomial d = eq.derivative(vars[i]);
          std::map<std::string, GaussianRational> needed;
          for (const auto& v : d.vars()) needed[v] = amb[v];
          grad.push_back(d.is_zero() ? GaussianRational(0)
                                     : d.evaluate(needed));
        }
        rows.push_back(std::move(grad));
      }
      int r0 = rank_of(rows);
      std::vector<GaussianRational> diff;
      for (size_t i = 0; i < m; ++i) diff.push_back((*xs)[i] - (*os)[i]);
      bool diff_zero = true;
      for (const auto& c : diff) diff_zero = diff_zero && c.is_zero();
      Mat<GaussianRational> ext = rows;
      ext.push_back(diff);
      ++checked;
      if (!diff_zero && rank_of(ext) != r0) {
        out.holds = false;
        out.note = "x - O(s) is not normal to X' at a sampled point";
        return out;
      }
      ++found;
    }
  }
  if (found == 0) {
    out.holds = false;
    out.note =
        "sample generation failed on degenerate fibers (reported, not fatal)";
    out.samples = 0;
    return out;
  }
  out.holds = true;
  out.samples = found;
  out.note = "verified at " + std::to_string(found) + " sampled fiber points";
  return out;
}

}  // namespace focalis
