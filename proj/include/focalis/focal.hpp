#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focalis/euclid.hpp"

namespace focalis {

struct ImplicitHypersurface {
  std::vector<std::string> vars;  // affine ambient coordinates
  Polynomial F;
};

// The lambda coordinate of the normal-bundle chart is spelled "l".
inline const char* kLambda = "l";

// Ramification polynomial split as unit * content * branch, where content is
// the lambda-free part and branch the primitive lambda part; both factors are
// integer-primitive with sign-normalized leading coefficients.
struct RamificationFactored {
  GaussianRational unit = GaussianRational(1);
  Polynomial content = Polynomial(1L);
  Polynomial branch = Polynomial(1L);
  bool identically_zero = false;
  Polynomial full() const { return content * branch * unit; }
  std::string str() const;
};

struct FocalComponent {
  enum class Kind { strict_branch, vertical };
  Kind kind = Kind::strict_branch;
  std::optional<ParametricVariety> image;  // parametrization when available
  std::vector<Polynomial> implicit_eqs;    // implicit description of the image
  std::optional<Polynomial> factor;        // ramification factor (vertical)
  long multiplicity = 1;                   // multiplicity of the factor
  bool is_point = false;
  std::string note;
};

struct FocalOutput {
  RamificationFactored ramification;
  std::vector<FocalComponent> components;
  std::string note;

  std::vector<const FocalComponent*> strict() const;
  std::vector<const FocalComponent*> large() const;  // strict + vertical
};

// x + l * grad F, as polynomials in vars + l.
PolyVec endpoint_map(const ImplicitHypersurface& x, const QuadraticSpace& q);
// x(params) + l * n(params) with n the content-free normal field.
RFVec endpoint_map(const ParametricVariety& x, const QuadraticSpace& q);

// Jacobian determinant of the endpoint map of a plane curve.
RamificationFactored ramification_poly(const ParametricVariety& curve,
                                       const QuadraticSpace& q);

FocalOutput evolute(const ParametricVariety& curve, const QuadraticSpace& q);

// Focal sheets of the rotation surface with the given profile (r(s), z(s)):
// the z-axis sheet and the rotated evolute of the profile.
FocalOutput rotation_surface_focal(const ParametricVariety& profile,
                                   const QuadraticSpace& q);

struct Implicitization {
  std::vector<Polynomial> equations;  // squarefree, canonical, verified
  bool image_is_hypersurface = false;
};
Implicitization implicitize_image(const ParametricVariety& x,
                                  const std::vector<std::string>& targets);

struct ImageDegree {
  long long raw_intersections = 0;
  std::string map_degree_note;
  long long seed = 0;
};
ImageDegree image_degree(const ParametricVariety& x, long long seed);

// Proposition-2 style fiber check: the witness lies in X, is contained in a
// sphere about O (or a hyperplane with normal direction O when O is at
// infinity), and X is tangent to it along the witness.
bool fiber_sphere_check(const ImplicitHypersurface& x, const GQVec& o,
                        bool o_at_infinity, const ParametricVariety& witness,
                        const QuadraticSpace& q);

// Shared elimination helper: clears coordinates of x into polynomials
// target_i * den_i - num_i over target variables + parameters.
std::vector<Polynomial> graph_equations(const ParametricVariety& x,
                                        const std::vector<std::string>& targets);

}  // namespace focalis
