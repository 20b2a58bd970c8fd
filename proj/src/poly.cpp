#include "focalis/poly.hpp"

#include <algorithm>
#include <sstream>

#include "focalis/error.hpp"

namespace focalis {

Polynomial::Polynomial(const GaussianRational& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_[{1u}] = GaussianRational(1);
  return p;
}

GaussianRational Polynomial::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!vars_.empty()) fail(Errc::internal, "constant_value of non-constant");
  return terms_.begin()->second;
}

bool Polynomial::has_var(const std::string& v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const Expo& e = terms_.rbegin()->first;
  long d = 0;
  for (auto x : e) d += x;
  return d;
}

long Polynomial::degree_in(const std::string& v) const {
  if (terms_.empty()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t idx = it - vars_.begin();
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, (long)e[idx]);
  return d;
}

void Polynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) used[j] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  std::vector<size_t> keep;
  for (size_t j = 0; j < vars_.size(); ++j)
    if (used[j]) {
      keep.push_back(j);
      nv.push_back(vars_[j]);
    }
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Expo ne(keep.size());
    for (size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
    nt[ne] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

// Remap both polynomials onto the union of their variable lists.
std::pair<Polynomial, Polynomial> align_pair(const Polynomial& a,
                                             const Polynomial& b) {
  if (a.vars_ == b.vars_) return {a, b};
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                 b.vars_.end(), std::back_inserter(u));
  auto remap = [&u](const Polynomial& p) {
    Polynomial q;
    q.vars_ = u;
    std::vector<size_t> pos(p.vars_.size());
    for (size_t j = 0; j < p.vars_.size(); ++j)
      pos[j] = std::lower_bound(u.begin(), u.end(), p.vars_[j]) - u.begin();
    for (const auto& [e, c] : p.terms_) {
      Polynomial::Expo ne(u.size(), 0);
      for (size_t j = 0; j < e.size(); ++j) ne[pos[j]] = e[j];
      q.terms_[ne] = c;
    }
    return q;
  };
  return {remap(a), remap(b)};
}

Polynomial aligned_binary(const Polynomial& a, const Polynomial& b, int sign) {
  auto [x, y] = align_pair(a, b);
  for (const auto& [e, c] : y.terms_) {
    auto it = x.terms_.find(e);
    if (it == x.terms_.end()) {
      x.terms_[e] = (sign > 0) ? c : -c;
    } else {
      if (sign > 0)
        it->second += c;
      else
        it->second -= c;
    }
  }
  x.prune();
  return x;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return aligned_binary(*this, o, +1);
}
Polynomial Polynomial::operator-(const Polynomial& o) const {
  return aligned_binary(*this, o, -1);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  auto [x, y] = align_pair(*this, o);
  Polynomial r;
  r.vars_ = x.vars_;
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      Expo e(ea.size());
      for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      GaussianRational prod = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end())
        r.terms_[e] = prod;
      else
        it->second += prod;
    }
  }
  r.prune();
  return r;
}

Polynomial Polynomial::operator*(const GaussianRational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial r(GaussianRational(1));
  Polynomial b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Polynomial Polynomial::derivative(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return Polynomial();
  size_t idx = it - vars_.begin();
  Polynomial r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Expo ne = e;
    ne[idx] -= 1;
    r.terms_[ne] = c * GaussianRational((long)e[idx]);
  }
  r.prune();
  return r;
}

GaussianRational Polynomial::evaluate(
    const std::map<std::string, GaussianRational>& point) const {
  for (const auto& v : vars_)
    if (!point.count(v))
      fail(Errc::variable_mismatch, "evaluate: missing value for '" + v + "'");
  GaussianRational acc(0);
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (size_t j = 0; j < e.size(); ++j) {
      const GaussianRational& x = point.at(vars_[j]);
      for (uint32_t k = 0; k < e[j]; ++k) t *= x;
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& repl) const {
  Polynomial acc;
  for (const auto& [e, c] : terms_) {
    Polynomial t(c);
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      auto it = repl.find(vars_[j]);
      Polynomial base =
          (it != repl.end()) ? it->second : Polynomial::variable(vars_[j]);
      t = t * base.pow(e[j]);
    }
    acc = acc + t;
  }
  return acc;
}

std::vector<Polynomial> Polynomial::coeffs_in(const std::string& v) const {
  std::vector<Polynomial> out;
  if (is_zero()) return out;
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) {
    out.push_back(*this);
    return out;
  }
  size_t idx = it - vars_.begin();
  long d = degree_in(v);
  out.assign(d + 1, Polynomial());
  for (const auto& [e, c] : terms_) {
    uint32_t k = e[idx];
    Polynomial t;
    t.vars_ = vars_;
    Expo ne = e;
    ne[idx] = 0;
    t.terms_[ne] = c;
    t.prune();
    out[k] = out[k] + t;
  }
  return out;
}

Polynomial Polynomial::from_coeffs_in(const std::string& v,
                                      const std::vector<Polynomial>& coeffs) {
  Polynomial acc;
  Polynomial x = Polynomial::variable(v);
  for (size_t k = 0; k < coeffs.size(); ++k)
    acc = acc + coeffs[k] * x.pow(k);
  return acc;
}

GaussianRational Polynomial::leading_coefficient() const {
  if (terms_.empty()) return GaussianRational(0);
  return terms_.rbegin()->second;
}

Polynomial Polynomial::leading_coefficient_in(const std::string& v) const {
  auto cs = coeffs_in(v);
  if (cs.empty()) return Polynomial();
  return cs.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Expo& e = it->first;
    GaussianRational c = it->second;
    bool neg = (c.re() < 0) || (c.re() == 0 && c.im() < 0);
    if (first) {
      if (neg) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (neg ? " - " : " + ");
      if (neg) c = -c;
    }
    std::string mono;
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[j];
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      os << c.str();
    } else if (c.is_one()) {
      os << mono;
    } else {
      os << c.str() << "*" << mono;
    }
  }
  return os.str();
}

Polynomial Polynomial::monomial(const std::vector<std::string>& vars,
                                const Expo& e, const GaussianRational& c) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.vars_ = vars;
  p.terms_[e] = c;
  p.prune();
  return p;
}

std::optional<Polynomial> divide_exact(const Polynomial& p,
                                       const Polynomial& q) {
  if (q.is_zero()) fail(Errc::division_by_zero, "division by zero polynomial");
  if (p.is_zero()) return Polynomial();
  if (q.is_constant()) return p * q.constant_value().inverse();
  Polynomial quot;
  Polynomial rem = p;
  while (!rem.is_zero()) {
    auto [ra, rb] = align_pair(rem, q);
    const Polynomial::Expo& lr = ra.terms().rbegin()->first;
    const Polynomial::Expo& lb = rb.terms().rbegin()->first;
    Polynomial::Expo diff(lr.size());
    bool divisible = true;
    for (size_t j = 0; j < lr.size(); ++j) {
      if (lr[j] < lb[j]) {
        divisible = false;
        break;
      }
      diff[j] = lr[j] - lb[j];
    }
    if (!divisible) return std::nullopt;
    Polynomial t = Polynomial::monomial(
        ra.vars(), diff,
        ra.terms().rbegin()->second / rb.terms().rbegin()->second);
    quot = quot + t;
    rem = ra - t * rb;
  }
  return quot;
}

}  // namespace focalis
