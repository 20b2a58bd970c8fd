#include <algorithm>

#include "focalis/error.hpp"
#include "focalis/poly.hpp"

namespace focalis {

namespace {

std::vector<std::string> union_vars(const Polynomial& a, const Polynomial& b) {
  std::vector<std::string> u;
  std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(),
                 b.vars().end(), std::back_inserter(u));
  return u;
}

// Monic Euclidean remainder in x for polynomials univariate in x.
Polynomial euclid_rem(const Polynomial& u, const Polynomial& v,
                      const std::string& x) {
  std::vector<Polynomial> uc = u.coeffs_in(x), vc = v.coeffs_in(x);
  std::vector<GaussianRational> a, b;
  for (const auto& c : uc) a.push_back(c.constant_value());
  for (const auto& c : vc) b.push_back(c.constant_value());
  GaussianRational lead = b.back().inverse();
  while (a.size() >= b.size()) {
    GaussianRational f = a.back() * lead;
    size_t off = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (a.empty()) break;
  }
  std::vector<Polynomial> rc;
  for (const auto& c : a) rc.emplace_back(c);
  return Polynomial::from_coeffs_in(x, rc);
}

Polynomial gcd_univariate(Polynomial u, Polynomial v, const std::string& x) {
  if (u.degree_in(x) < v.degree_in(x)) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = euclid_rem(u, v, x);
    u = v;
    v = std::move(r);
  }
  return u.monic();
}

// Primitive PRS gcd of two polynomials with positive degree in x, viewed in
// Q(i)[rest][x]. Inputs are made primitive by the caller.
Polynomial prs_gcd(Polynomial u, Polynomial v, const std::string& x) {
  if (u.vars().size() == 1 && v.vars().size() == 1)
    return gcd_univariate(std::move(u), std::move(v), x);
  if (u.degree_in(x) < v.degree_in(x)) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = pseudo_rem(u, v, x);
    u = v;
    v = r.is_zero() ? r : primitive_part_in(r, x);
  }
  return u;
}

// Coprimality certificate by specialization: if the inputs stay coprime after
// substituting random rational values for every variable but x, they are
// coprime. Only the "coprime" answer is trusted.
bool coprime_by_specialization(const Polynomial& a, const Polynomial& b,
                               const std::string& x) {
  long da = a.degree_in(x), db = b.degree_in(x);
  if (da <= 0 || db <= 0) return false;
  for (long attempt = 0; attempt < 6; ++attempt) {
    std::map<std::string, Polynomial> repl;
    long base = 2 + attempt;
    long k = 0;
    for (const auto& v : a.vars())
      if (v != x) repl[v] = Polynomial(GaussianRational::of(base + 3 * (++k), 1 + attempt));
    for (const auto& v : b.vars())
      if (v != x && !repl.count(v))
        repl[v] = Polynomial(GaussianRational::of(base + 3 * (++k) + 1, 1 + attempt));
    Polynomial sa = a.substitute(repl), sb = b.substitute(repl);
    if (sa.degree_in(x) != da || sb.degree_in(x) != db) continue;
    if (gcd_univariate(sa, sb, x).degree_in(x) == 0) return true;
  }
  return false;
}

}  // namespace

Polynomial pseudo_rem(const Polynomial& u, const Polynomial& v,
                      const std::string& x) {
  if (v.is_zero()) fail(Errc::division_by_zero, "pseudo_rem by zero");
  long dv = v.degree_in(x);
  if (dv == 0) return Polynomial();
  Polynomial r = u;
  Polynomial lv = v.leading_coefficient_in(x);
  Polynomial xv = Polynomial::variable(x);
  while (!r.is_zero() && r.degree_in(x) >= dv) {
    long dr = r.degree_in(x);
    Polynomial lr = r.leading_coefficient_in(x);
    r = lv * r - lr * xv.pow(dr - dv) * v;
  }
  return r;
}

Polynomial content_in(const Polynomial& p, const std::string& x) {
  if (p.is_zero()) return Polynomial();
  Polynomial g;
  for (const auto& c : p.coeffs_in(x)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.monic();
}

Polynomial primitive_part_in(const Polynomial& p, const std::string& x) {
  if (p.is_zero()) return p;
  Polynomial c = content_in(p, x);
  auto q = divide_exact(p, c);
  if (!q) fail(Errc::internal, "content does not divide polynomial");
  return *q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return Polynomial(GaussianRational(1));
  std::vector<std::string> u = union_vars(a, b);
  const std::string& x = u.back();
  long da = a.degree_in(x), db = b.degree_in(x);
  if (da == 0) {
    // x occurs only in b: common divisors are free of x.
    return poly_gcd(a, content_in(b, x));
  }
  if (db == 0) return poly_gcd(content_in(a, x), b);
  Polynomial ca = content_in(a, x), cb = content_in(b, x);
  Polynomial cg = poly_gcd(ca, cb);
  Polynomial pa = primitive_part_in(a, x), pb = primitive_part_in(b, x);
  if (u.size() > 1 && coprime_by_specialization(pa, pb, x)) return cg.monic();
  Polynomial g = prs_gcd(std::move(pa), std::move(pb), x);
  if (g.degree_in(x) > 0) g = primitive_part_in(g, x);
  if (g.is_constant()) g = Polynomial(GaussianRational(1));
  return (cg * g).monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  auto q = divide_exact(a * b, poly_gcd(a, b));
  if (!q) fail(Errc::internal, "lcm division failed");
  return q->monic();
}

Polynomial poly_det(std::vector<std::vector<Polynomial>> m) {
  size_t n = m.size();
  if (n == 0) return Polynomial(GaussianRational(1));
  Polynomial prev(GaussianRational(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return Polynomial();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) fail(Errc::internal, "bareiss exact division failed");
        m[i][j] = *q;
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q,
                     const std::string& x) {
  if (p.is_zero() || q.is_zero())
    fail(Errc::zero_polynomial, "resultant of zero polynomial");
  long dp = p.degree_in(x), dq = q.degree_in(x);
  if (dp == 0 && dq == 0) return Polynomial(GaussianRational(1));
  if (dp == 0) return p.pow(dq);
  if (dq == 0) return q.pow(dp);
  std::vector<Polynomial> pc = p.coeffs_in(x), qc = q.coeffs_in(x);
  size_t n = dp + dq;
  std::vector<std::vector<Polynomial>> syl(n,
                                           std::vector<Polynomial>(n));
  for (long i = 0; i < dq; ++i)
    for (long j = 0; j <= dp; ++j) syl[i][i + j] = pc[dp - j];
  for (long i = 0; i < dp; ++i)
    for (long j = 0; j <= dq; ++j) syl[dq + i][i + j] = qc[dq - j];
  return poly_det(std::move(syl));
}

SquarefreeData squarefree_and_content(const Polynomial& p,
                                      const std::string& x) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "squarefree of zero");
  SquarefreeData out;
  out.content = content_in(p, x);
  Polynomial pp = primitive_part_in(p, x);
  if (pp.degree_in(x) <= 0) {
    out.squarefree = Polynomial(GaussianRational(1));
    out.distinct_root_count = 0;
    return out;
  }
  Polynomial g = poly_gcd(pp, pp.derivative(x));
  auto sf = divide_exact(pp, g);
  if (!sf) fail(Errc::internal, "squarefree division failed");
  out.squarefree = sf->monic();
  out.distinct_root_count = out.squarefree.degree_in(x);
  return out;
}

namespace {

// gcd in Z[i] by Euclidean division with rounded quotients.
GaussianRational gaussian_int_gcd(GaussianRational a, GaussianRational b) {
  auto round_div = [](const GaussianRational& u, const GaussianRational& v) {
    GaussianRational q = u / v;
    auto nearest = [](const mpq_class& r) {
      mpq_class shifted = r + mpq_class(1, 2);
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(),
                 shifted.get_den().get_mpz_t());
      return mpq_class(fl);
    };
    return GaussianRational(nearest(q.re()), nearest(q.im()));
  };
  while (!b.is_zero()) {
    GaussianRational q = round_div(a, b);
    GaussianRational r = a - q * b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Polynomial squarefree_all(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return Polynomial(GaussianRational(1));
  auto sd = squarefree_and_content(p, p.vars().back());
  return squarefree_all(sd.content) * sd.squarefree;
}

RootSplit gaussian_roots(const Polynomial& p, const std::string& x) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "roots of zero polynomial");
  for (const auto& v : p.vars())
    if (v != x) fail(Errc::precondition, "gaussian_roots: univariate input");
  RootSplit out;
  std::vector<Polynomial> c = p.coeffs_in(x);
  auto degree = [&c]() { return (long)c.size() - 1; };
  auto coef = [&c](long k) { return c[k].constant_value(); };
  while (degree() >= 1) {
    if (coef(0).is_zero()) {
      out.roots.emplace_back(0);
      c.erase(c.begin());
      continue;
    }
    if (degree() == 1) {
      out.roots.push_back(-coef(0) / coef(1));
      c = {c[1]};
      continue;
    }
    if (degree() == 2) {
      GaussianRational a = coef(2), b = coef(1), cc = coef(0);
      auto s = (b * b - GaussianRational(4) * a * cc).sqrt();
      if (!s) break;
      GaussianRational twoa = GaussianRational(2) * a;
      out.roots.push_back((-b + *s) / twoa);
      out.roots.push_back((-b - *s) / twoa);
      c = {c[2]};
      continue;
    }
    break;
  }
  out.leftover = Polynomial::from_coeffs_in(x, c);
  return out;
}

std::pair<GaussianRational, Polynomial> unit_primitive(const Polynomial& p) {
  if (p.is_zero()) return {GaussianRational(1), p};
  // Clear denominators.
  mpz_class den(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.re().get_den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), l.get_mpz_t(), c.im().get_den().get_mpz_t());
  }
  Polynomial q = p * GaussianRational(mpq_class(den));
  // Divide by the Z[i] gcd of the coefficients.
  GaussianRational g(0);
  for (const auto& [e, c] : q.terms()) {
    g = g.is_zero() ? c : gaussian_int_gcd(g, c);
    if (g.norm() == 1) break;
  }
  q = q * g.inverse();
  // Unit-normalize so the leading coefficient has re > 0, or re == 0, im > 0.
  GaussianRational lead = q.leading_coefficient();
  GaussianRational u(1);
  if (lead.re() < 0 || (lead.re() == 0 && lead.im() < 0)) u = GaussianRational(-1);
  if (lead.re() == 0) {
    // rotate pure-imaginary leads onto the real axis
    u = (lead.im() > 0) ? GaussianRational(mpq_class(0), mpq_class(-1))
                        : GaussianRational::i();
  }
  q = q * u;
  // p = unit * q
  GaussianRational unit =
      GaussianRational(mpq_class(1, 1) / mpq_class(den)) * g * u.inverse();
  return {unit, q};
}

}  // namespace focalis
