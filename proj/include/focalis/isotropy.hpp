#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focalis/focal.hpp"
#include "focalis/inverse.hpp"

namespace focalis {

// Rational space curve with identically isotropic tangent, generated from a
// parametrization (f0, f1) of the conic at infinity.
struct IsotropicCurve {
  ParametricVariety alpha;  // curve in C^3
  Polynomial f0, f1;        // provenance
  std::string param;
};

// alpha' = (f0^2 + f1^2, i f1^2 - i f0^2, -2 i f0 f1), integrated termwise
// with integration constant 0.
IsotropicCurve isotropic_curve(const Polynomial& f0, const Polynomial& f1);

// Antiderivative with zero constant term.
Polynomial integrate(const Polynomial& p, const std::string& x);

// Equation (sum over i of (s_i' s_0 - s_0' s_i)^2 == 0) for a homogeneous
// 4-tuple of coordinate functions of one parameter.
bool isotropy_equation_check(const ParametricVariety& curve);

struct Developable {
  ParametricVariety surface;  // x(s, u) = alpha(s) + u alpha'(s); u = ruling
  bool degenerate = false;    // alpha is a line: the surface is its plane
  std::string note;
};
Developable tangential_developable(const IsotropicCurve& curve);

// Isotropic developability of a parametrized ruled surface in 3-space
// (ruling = last parameter): isotropic normal, ruling along the normal
// direction, tangent space constant along rulings.
struct Theorem4Report {
  bool holds = false;
  std::string failing;
};
Theorem4Report theorem4_check(const ParametricVariety& surface,
                              const QuadraticSpace& q);
Theorem4Report theorem4_check(const ImplicitHypersurface& x,
                              const ParametricVariety& witness_ruling,
                              const QuadraticSpace& q);

// Conditions 1, 2.1, 2.2 for isotropic focal degeneracy of the inverse
// construction output.
struct Theorem5Report {
  bool holds = false;
  std::string failing;  // "1", "2.1", "2.2" when !holds
};
Theorem5Report theorem5_check(const SigmaData& s, const QuadraticSpace& q);

// Equation system in an orthogonal direct sum of ambient spaces.
struct VarietySystem {
  std::vector<std::string> vars;
  std::vector<Polynomial> equations;
};
VarietySystem product_construction(const VarietySystem& m,
                                   const VarietySystem& w);

// Endpoint map of a system of equations: x + sum_i l_i grad F_i(x).
PolyVec endpoint_map_system(const VarietySystem& sys);
std::vector<std::string> endpoint_lambda_names(size_t count);

}  // namespace focalis
