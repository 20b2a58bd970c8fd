#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "focalis/error.hpp"

namespace focalis {

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
// mpq_class keeps both parts in lowest terms, so equality is structural.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}
  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational of(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_integerlike() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
  }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational inverse() const {
    if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    return *this * o.inverse();
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  // Deterministic total order (re first, then im); used only for canonical
  // tie-breaking, it has no algebraic meaning over C.
  bool operator<(const GaussianRational& o) const {
    int c = cmp(re_, o.re_);
    if (c != 0) return c < 0;
    return cmp(im_, o.im_) < 0;
  }

  // Exact square root in Q(i) when it exists.
  std::optional<GaussianRational> sqrt() const;

  std::string str() const;

 private:
  mpq_class re_, im_;
};

// Rational square root when the argument is a perfect square in Q.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

// Render an exact rational as a decimal string with the given number of
// fractional digits (display only; rounding toward zero).
std::string decimal_string(const mpq_class& q, int digits);

}  // namespace focalis
