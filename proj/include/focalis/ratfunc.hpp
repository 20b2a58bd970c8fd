#pragma once

#include <map>
#include <string>

#include "focalis/poly.hpp"

namespace focalis {

// Reduced fraction of polynomials over Q(i). Canonical form: gcd(num, den)
// is a unit and the denominator is monic under graded-lex, so equality is
// structural. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(GaussianRational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(GaussianRational(1)) {}  // NOLINT
  RationalFunction(const GaussianRational& c) : num_(c), den_(GaussianRational(1)) {}  // NOLINT
  RationalFunction(long n) : num_(GaussianRational(n)), den_(GaussianRational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussianRational constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(unsigned long k) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction derivative(const std::string& v) const;

  GaussianRational evaluate(
      const std::map<std::string, GaussianRational>& point) const;
  RationalFunction substitute(
      const std::map<std::string, RationalFunction>& repl) const;

  std::string str() const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced);
  void reduce();
  Polynomial num_, den_;
};

// Numerator of F(coords) for a polynomial F; avoids fraction reduction, so
// the result is exact up to the (nonzero) product of denominator powers.
// Intended for identity checks F(coords) == 0.
Polynomial substitute_numerator(
    const Polynomial& f, const std::map<std::string, RationalFunction>& repl);

}  // namespace focalis
