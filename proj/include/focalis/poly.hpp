#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focalis/gaussian.hpp"

namespace focalis {

// Sparse multivariate polynomial over Q(i).
//
// Canonical form: the variable list is sorted, contains exactly the variables
// that occur with positive exponent, and terms are keyed by exponent vectors
// under graded-lex order. Equality is structural.
class Polynomial {
 public:
  using Expo = std::vector<uint32_t>;

  struct GradedLex {
    bool operator()(const Expo& a, const Expo& b) const {
      uint64_t da = 0, db = 0;
      for (auto e : a) da += e;
      for (auto e : b) db += e;
      if (da != db) return da < db;
      return a < b;
    }
  };
  using TermMap = std::map<Expo, GaussianRational, GradedLex>;

  Polynomial() = default;
  Polynomial(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long n) : Polynomial(GaussianRational(n)) {}  // NOLINT
  static Polynomial variable(const std::string& name);
  static Polynomial constant(const GaussianRational& c) { return Polynomial(c); }
  static Polynomial monomial(const std::vector<std::string>& vars,
                             const Expo& e, const GaussianRational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || vars_.empty(); }
  GaussianRational constant_value() const;
  bool has_var(const std::string& v) const;
  size_t term_count() const { return terms_.size(); }

  // Degree of the zero polynomial is the sentinel -1.
  long total_degree() const;
  long degree_in(const std::string& v) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const GaussianRational& c) const;
  Polynomial pow(unsigned long k) const;
  bool operator==(const Polynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(const std::string& v) const;

  // Total evaluation; every variable of the polynomial must be assigned.
  GaussianRational evaluate(
      const std::map<std::string, GaussianRational>& point) const;
  // Partial substitution of variables by polynomials.
  Polynomial substitute(const std::map<std::string, Polynomial>& repl) const;

  // Coefficients of powers of v (index = exponent); coefficient polynomials
  // do not involve v. The zero polynomial yields an empty list.
  std::vector<Polynomial> coeffs_in(const std::string& v) const;
  static Polynomial from_coeffs_in(const std::string& v,
                                   const std::vector<Polynomial>& coeffs);

  // Leading data under graded-lex.
  GaussianRational leading_coefficient() const;
  // Leading coefficient as a polynomial in the remaining variables when the
  // polynomial is viewed in the single variable v.
  Polynomial leading_coefficient_in(const std::string& v) const;

  // Scalar multiple making the graded-lex leading coefficient 1.
  Polynomial monic() const;

  std::string str() const;

 private:
  void prune();  // drop zero terms, then unused variables

  std::vector<std::string> vars_;
  TermMap terms_;

  friend Polynomial aligned_binary(const Polynomial& a, const Polynomial& b,
                                   int sign);
  friend std::pair<Polynomial, Polynomial> align_pair(const Polynomial& a,
                                                      const Polynomial& b);
};

inline Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
  return p * c;
}

// Exact division in Q(i)[vars]; nullopt when q does not divide p.
std::optional<Polynomial> divide_exact(const Polynomial& p,
                                       const Polynomial& q);

// Monic gcd (1 for coprime inputs, including constants).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

// Pseudo-remainder of u by v in the variable x.
Polynomial pseudo_rem(const Polynomial& u, const Polynomial& v,
                      const std::string& x);

// gcd of the coefficients of p viewed in x (monic); 0 for the zero input.
Polynomial content_in(const Polynomial& p, const std::string& x);
Polynomial primitive_part_in(const Polynomial& p, const std::string& x);

// Sylvester resultant eliminating x, computed by fraction-free elimination.
// Convention: det of the Sylvester matrix of (p, q); multiplicative in each
// argument. Degenerate degrees follow Res(p, q) = q^deg(p) when deg_x q = 0.
Polynomial resultant(const Polynomial& p, const Polynomial& q,
                     const std::string& x);

struct SquarefreeData {
  Polynomial content;     // content of p w.r.t. x (monic)
  Polynomial squarefree;  // squarefree part of the primitive part
  long distinct_root_count;  // deg_x of the squarefree part
};
SquarefreeData squarefree_and_content(const Polynomial& p,
                                      const std::string& x);

// Squarefree part over the full polynomial ring (recursing on contents).
Polynomial squarefree_all(const Polynomial& p);

// p = unit * primitive where primitive has coprime Gaussian-integer
// coefficients and a sign-normalized leading coefficient.
std::pair<GaussianRational, Polynomial> unit_primitive(const Polynomial& p);

// Roots of a univariate polynomial that are reachable inside Q(i)
// (linear factors, powers of x, and quadratics whose discriminant is a
// square in Q(i)); `leftover` collects the unsplit factor.
struct RootSplit {
  std::vector<GaussianRational> roots;
  Polynomial leftover;
};
RootSplit gaussian_roots(const Polynomial& p, const std::string& x);

// Determinant of a square polynomial matrix (Bareiss, exact divisions).
Polynomial poly_det(std::vector<std::vector<Polynomial>> m);

}  // namespace focalis
