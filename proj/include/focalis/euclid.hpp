#pragma once

#include <string>
#include <vector>

#include "focalis/linalg.hpp"
#include "focalis/ratfunc.hpp"

namespace focalis {

using GQVec = std::vector<GaussianRational>;
using PolyVec = std::vector<Polynomial>;
using RFVec = std::vector<RationalFunction>;

// Non-degenerate symmetric bilinear form on C^m; the orthogonality structure
// at infinity. Defaults to the identity Gram matrix.
class QuadraticSpace {
 public:
  explicit QuadraticSpace(Mat<GaussianRational> gram);
  static QuadraticSpace identity(int m);

  int dim() const { return (int)gram_.size(); }
  const Mat<GaussianRational>& gram() const { return gram_; }

 private:
  Mat<GaussianRational> gram_;
};

GaussianRational dot(const GQVec& u, const GQVec& v, const QuadraticSpace& q);
Polynomial dot(const PolyVec& u, const PolyVec& v, const QuadraticSpace& q);
RationalFunction dot(const RFVec& u, const RFVec& v, const QuadraticSpace& q);

bool is_isotropic(const GQVec& v, const QuadraticSpace& q);

// Subspace of the ambient quadratic space, spanned by independent vectors.
class LinearSubspace {
 public:
  LinearSubspace(QuadraticSpace ambient, Mat<GaussianRational> basis);

  const QuadraticSpace& ambient() const { return ambient_; }
  const Mat<GaussianRational>& basis() const { return basis_; }
  int dim() const { return (int)basis_.size(); }

  // RREF rows; equality of subspaces is equality of canonical bases.
  Mat<GaussianRational> canonical_basis() const;
  bool operator==(const LinearSubspace& o) const;

 private:
  QuadraticSpace ambient_;
  Mat<GaussianRational> basis_;
};

bool is_totally_isotropic(const LinearSubspace& l);
LinearSubspace orthogonal_complement(const LinearSubspace& l);

// Rational parametrization of a curve or surface.
struct ParametricVariety {
  enum class Flavor { affine, homogeneous };
  int ambient = 0;                  // m; homogeneous carries m+1 coordinates
  std::vector<std::string> params;  // 1 or 2 parameter names
  RFVec coords;
  Flavor flavor = Flavor::affine;

  RFVec derivative(const std::string& p) const;
};

// Content-free polynomial normal vector of a codimension-1 parametrization
// (plane curve, or surface in 3-space); orthogonal to every tangent vector
// as an exact identity, unique up to a unit.
PolyVec normal_field(const ParametricVariety& x, const QuadraticSpace& q);

// Helpers shared by the geometric modules.
PolyVec clear_denominators(const RFVec& v);      // scales by a common factor
PolyVec remove_vector_content(const PolyVec& v);  // divides by gcd of entries
bool proportional(const PolyVec& a, const PolyVec& b);  // all 2x2 minors vanish
bool proportional_rf(const RFVec& a, const RFVec& b);

// x, y, z for m <= 3; x1..xm above.
std::vector<std::string> ambient_var_names(int m);

}  // namespace focalis
