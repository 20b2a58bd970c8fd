#include "focalis/gaussian.hpp"

#include <sstream>

namespace focalis {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn) / mpq_class(rd);
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
  // (a+bi)^2 = u+vi  =>  a^2-b^2 = u, 2ab = v.
  const mpq_class& u = re_;
  const mpq_class& v = im_;
  if (v == 0) {
    if (u >= 0) {
      auto a = rational_sqrt(u);
      if (!a) return std::nullopt;
      return GaussianRational(*a, mpq_class(0));
    }
    auto b = rational_sqrt(-u);
    if (!b) return std::nullopt;
    return GaussianRational(mpq_class(0), *b);
  }
  auto n = rational_sqrt(norm());
  if (!n) return std::nullopt;
  mpq_class a2 = (u + *n) / 2;
  auto a = rational_sqrt(a2);
  if (!a || *a == 0) return std::nullopt;
  mpq_class b = v / (2 * (*a));
  GaussianRational root(*a, b);
  if (root * root == *this) return root;
  return std::nullopt;
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  auto rat = [](const mpq_class& q) { return q.get_str(); };
  if (im_ == 0) {
    os << rat(re_);
  } else if (re_ == 0) {
    if (im_ == 1)
      os << "i";
    else if (im_ == -1)
      os << "-i";
    else
      os << rat(im_) << "*i";
  } else {
    os << "(" << rat(re_);
    if (im_ == 1)
      os << "+i";
    else if (im_ == -1)
      os << "-i";
    else if (im_ > 0)
      os << "+" << rat(im_) << "*i";
    else
      os << rat(im_) << "*i";
    os << ")";
  }
  return os.str();
}

std::string decimal_string(const mpq_class& q, int digits) {
  if (digits < 0) digits = 0;
  mpz_class num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class ipart = num / den;
  mpz_class rem = num % den;
  std::string out = (neg && (ipart != 0 || rem != 0)) ? "-" : "";
  out += ipart.get_str();
  if (digits == 0) return out;
  out += ".";
  for (int k = 0; k < digits; ++k) {
    rem *= 10;
    mpz_class d = rem / den;
    rem %= den;
    out += d.get_str();
  }
  return out;
}

}  // namespace focalis
