#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focalis/euclid.hpp"
#include "focalis/focal.hpp"

namespace focalis {

enum class SigmaMode { standard, asymptotic, isotropic_projective };

// Focal-candidate datum: a parametrized Sigma together with the radius-squared
// function r. In the asymptotic and isotropic modes O is a homogeneous lift
// with vanishing affine-chart coordinate (coords[0] == 0) and r is read
// relative to that lift.
struct SigmaData {
  ParametricVariety O;
  RationalFunction r;
  SigmaMode mode = SigmaMode::standard;
};

struct FiberData {
  RFVec point;               // particular solution x0(s)
  std::vector<RFVec> dirs;   // direction basis w_i(s)
  std::vector<std::string> params;  // fiber coordinates t1, t2, ...
};

struct ConstructionResult {
  std::vector<std::string> ambient_vars;
  std::vector<Polynomial> system;      // equations of Z' (ambient + params)
  std::vector<Polynomial> eliminated;  // parameter-free equations of X'
  std::optional<Polynomial> eliminant; // set when X' is a hypersurface
  bool fibers_are_affine_spaces = false;
  bool admissible = true;
  std::string admissibility_reason;
  FiberData fiber;
  std::string note;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::string reason;
};

ConstructionResult inverse_construction(const SigmaData& s,
                                        const QuadraticSpace& q);
AdmissibilityReport admissibility_check(const SigmaData& s,
                                        const QuadraticSpace& q);
ConstructionResult asymptotic_inverse(const SigmaData& s,
                                      const QuadraticSpace& q);
ConstructionResult isotropic_projective_inverse(const SigmaData& s,
                                                const QuadraticSpace& q);

// X_infinity of the asymptotic output equals the dual variety of Sigma under
// the Q-identification of the hyperplane at infinity with its dual.
bool dual_at_infinity_check(const ConstructionResult& result,
                            const SigmaData& s, const QuadraticSpace& q);

struct ForwardConsistency {
  bool holds = false;
  int samples = 0;
  std::string note;
};
// At sampled solutions (x, s) of the system, x - O(s) lies in the normal
// space of the eliminated equations at x.
ForwardConsistency forward_consistency(const ConstructionResult& result,
                                       const SigmaData& s,
                                       const QuadraticSpace& q);

// Tangent space of the fiber union is constant along each fiber.
bool developability_check(const ConstructionResult& result,
                          const SigmaData& s);

// Shared elimination of parameters from an equation system by iterated
// resultants with linear-substitution reduction. When `membership` is given
// (a parametrization of the image in ambient order), candidate factors are
// filtered by exact substitution.
std::vector<Polynomial> eliminate_params(std::vector<Polynomial> eqs,
                                         const std::vector<std::string>& params,
                                         const std::vector<std::string>& vars,
                                         const RFVec* membership = nullptr);

}  // namespace focalis
