#include "focalis/ratfunc.hpp"

#include "focalis/error.hpp"

namespace focalis {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    fail(Errc::division_by_zero, "rational function with zero denominator");
  reduce();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  GaussianRational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  GaussianRational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // a/b + c/d with g = gcd(b, d): the final gcd divides g.
  Polynomial g = poly_gcd(den_, o.den_);
  if (g.is_constant()) {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_,
                            Reduced{});
  }
  Polynomial b1 = *divide_exact(den_, g);
  Polynomial d1 = *divide_exact(o.den_, g);
  Polynomial num = num_ * d1 + o.num_ * b1;
  Polynomial den = den_ * d1;
  Polynomial g2 = poly_gcd(num, g);
  if (!g2.is_constant()) {
    num = *divide_exact(num, g2);
    den = *divide_exact(den, g2);
  }
  return RationalFunction(std::move(num), std::move(den), Reduced{});
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  Polynomial g1 = poly_gcd(num_, o.den_);
  Polynomial g2 = poly_gcd(o.num_, den_);
  Polynomial n1 = g1.is_constant() ? num_ : *divide_exact(num_, g1);
  Polynomial d2 = g1.is_constant() ? o.den_ : *divide_exact(o.den_, g1);
  Polynomial n2 = g2.is_constant() ? o.num_ : *divide_exact(o.num_, g2);
  Polynomial d1 = g2.is_constant() ? den_ : *divide_exact(den_, g2);
  return RationalFunction(n1 * n2, d1 * d2, Reduced{});
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero function");
  RationalFunction inv(o.den_, o.num_, Reduced{});
  return *this * inv;
}

RationalFunction RationalFunction::pow(unsigned long k) const {
  if (k == 0) return RationalFunction(Polynomial(GaussianRational(1)));
  // reduced fractions stay reduced under powers
  return RationalFunction(num_.pow(k), den_.pow(k), Reduced{});
}

RationalFunction RationalFunction::derivative(const std::string& v) const {
  return RationalFunction(
      num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

GaussianRational RationalFunction::evaluate(
    const std::map<std::string, GaussianRational>& point) const {
  GaussianRational d = den_.evaluate(point);
  if (d.is_zero()) fail(Errc::division_by_zero, "evaluation at a pole");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::substitute(
    const std::map<std::string, RationalFunction>& repl) const {
  auto subst_poly = [&repl](const Polynomial& p) {
    RationalFunction acc;
    for (const auto& [e, c] : p.terms()) {
      RationalFunction t = RationalFunction(Polynomial(c));
      for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        auto it = repl.find(p.vars()[j]);
        RationalFunction base =
            (it != repl.end())
                ? it->second
                : RationalFunction(Polynomial::variable(p.vars()[j]));
        t = t * base.pow(e[j]);
      }
      acc = acc + t;
    }
    return acc;
  };
  return subst_poly(num_) / subst_poly(den_);
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  bool npar = num_.term_count() > 1;
  bool dpar = den_.term_count() > 1;
  std::string out;
  out += npar ? "(" + n + ")" : n;
  out += "/";
  out += dpar ? "(" + d + ")" : d;
  return out;
}

Polynomial substitute_numerator(
    const Polynomial& f, const std::map<std::string, RationalFunction>& repl) {
  if (f.is_zero()) return f;
  // degree of f in each replaced variable
  std::map<std::string, long> degs;
  for (const auto& [v, rf] : repl) degs[v] = f.degree_in(v);
  // precompute power tables for numerators and denominators
  std::map<std::string, std::vector<Polynomial>> numpow, denpow;
  for (const auto& [v, rf] : repl) {
    long d = degs[v];
    std::vector<Polynomial> np{Polynomial(GaussianRational(1))};
    std::vector<Polynomial> dp{Polynomial(GaussianRational(1))};
    for (long k = 1; k <= d; ++k) {
      np.push_back(np.back() * rf.num());
      dp.push_back(dp.back() * rf.den());
    }
    numpow[v] = std::move(np);
    denpow[v] = std::move(dp);
  }
  Polynomial acc;
  for (const auto& [e, c] : f.terms()) {
    Polynomial t(c);
    for (size_t j = 0; j < e.size(); ++j) {
      const std::string& v = f.vars()[j];
      auto it = repl.find(v);
      if (it == repl.end()) {
        if (e[j] > 0) t = t * Polynomial::variable(v).pow(e[j]);
      } else {
        t = t * numpow[v][e[j]] * denpow[v][degs[v] - e[j]];
      }
    }
    acc = acc + t;
  }
  return acc;
}

}  // namespace focalis
