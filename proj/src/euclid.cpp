#include "focalis/euclid.hpp"

#include "focalis/error.hpp"

namespace focalis {

QuadraticSpace::QuadraticSpace(Mat<GaussianRational> gram)
    : gram_(std::move(gram)) {
  size_t m = gram_.size();
  if (m == 0) fail(Errc::dimension_mismatch, "empty gram matrix");
  for (const auto& row : gram_)
    if (row.size() != m)
      fail(Errc::dimension_mismatch, "gram matrix not square");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (gram_[i][j] != gram_[j][i])
        fail(Errc::gram_not_symmetric, "gram matrix not symmetric");
  if (det(gram_).is_zero())
    fail(Errc::gram_singular, "gram matrix is degenerate");
}

QuadraticSpace QuadraticSpace::identity(int m) {
  Mat<GaussianRational> g(m, std::vector<GaussianRational>(m, GaussianRational(0)));
  for (int i = 0; i < m; ++i) g[i][i] = GaussianRational(1);
  return QuadraticSpace(std::move(g));
}

namespace {

template <class T>
T dot_impl(const std::vector<T>& u, const std::vector<T>& v,
           const QuadraticSpace& q) {
  size_t m = q.dim();
  if (u.size() != m || v.size() != m)
    fail(Errc::dimension_mismatch, "dot: vector length != ambient dimension");
  T acc = T(0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      const GaussianRational& g = q.gram()[i][j];
      if (g.is_zero()) continue;
      acc = acc + u[i] * T(g) * v[j];
    }
  }
  return acc;
}

}  // namespace

GaussianRational dot(const GQVec& u, const GQVec& v, const QuadraticSpace& q) {
  return dot_impl<GaussianRational>(u, v, q);
}
Polynomial dot(const PolyVec& u, const PolyVec& v, const QuadraticSpace& q) {
  return dot_impl<Polynomial>(u, v, q);
}
RationalFunction dot(const RFVec& u, const RFVec& v, const QuadraticSpace& q) {
  return dot_impl<RationalFunction>(u, v, q);
}

bool is_isotropic(const GQVec& v, const QuadraticSpace& q) {
  return dot(v, v, q).is_zero();
}

LinearSubspace::LinearSubspace(QuadraticSpace ambient,
                               Mat<GaussianRational> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if ((int)b.size() != ambient_.dim())
      fail(Errc::dimension_mismatch, "basis vector length");
  if (rank_of(basis_) != (int)basis_.size())
    fail(Errc::precondition, "basis vectors are dependent");
}

Mat<GaussianRational> LinearSubspace::canonical_basis() const {
  Mat<GaussianRational> m = basis_;
  rref(m);
  return m;
}

bool LinearSubspace::operator==(const LinearSubspace& o) const {
  return dim() == o.dim() && canonical_basis() == o.canonical_basis();
}

bool is_totally_isotropic(const LinearSubspace& l) {
  for (const auto& u : l.basis())
    for (const auto& v : l.basis())
      if (!dot(u, v, l.ambient()).is_zero()) return false;
  return true;
}

LinearSubspace orthogonal_complement(const LinearSubspace& l) {
  // rows b_i^T G; Ann(L) is the nullspace
  size_t m = l.ambient().dim();
  Mat<GaussianRational> rows;
  for (const auto& b : l.basis()) {
    std::vector<GaussianRational> r(m, GaussianRational(0));
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k)
        r[j] += b[k] * l.ambient().gram()[k][j];
    rows.push_back(std::move(r));
  }
  if (rows.empty()) {
    Mat<GaussianRational> full;
    for (size_t j = 0; j < m; ++j) {
      std::vector<GaussianRational> e(m, GaussianRational(0));
      e[j] = GaussianRational(1);
      full.push_back(std::move(e));
    }
    return LinearSubspace(l.ambient(), full);
  }
  return LinearSubspace(l.ambient(), nullspace(std::move(rows)));
}

RFVec ParametricVariety::derivative(const std::string& p) const {
  RFVec out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(c.derivative(p));
  return out;
}

PolyVec clear_denominators(const RFVec& v) {
  Polynomial common(GaussianRational(1));
  for (const auto& f : v)
    if (!f.is_zero()) common = poly_lcm(common, f.den());
  PolyVec out;
  out.reserve(v.size());
  for (const auto& f : v) {
    if (f.is_zero()) {
      out.push_back(Polynomial());
    } else {
      auto q = divide_exact(common, f.den());
      out.push_back(f.num() * *q);
    }
  }
  return out;
}

PolyVec remove_vector_content(const PolyVec& v) {
  Polynomial g;
  for (const auto& p : v)
    if (!p.is_zero()) g = g.is_zero() ? p : poly_gcd(g, p);
  if (g.is_zero() || g.is_constant()) return v;
  PolyVec out;
  out.reserve(v.size());
  for (const auto& p : v)
    out.push_back(p.is_zero() ? p : *divide_exact(p, g));
  return out;
}

bool proportional(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "proportional");
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

bool proportional_rf(const RFVec& a, const RFVec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "proportional");
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

std::vector<std::string> ambient_var_names(int m) {
  std::vector<std::string> v;
  if (m <= 3) {
    const char* n3[] = {"x", "y", "z"};
    for (int i = 0; i < m; ++i) v.push_back(n3[i]);
  } else {
    for (int i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  }
  return v;
}

PolyVec normal_field(const ParametricVariety& x, const QuadraticSpace& q) {
  if (x.flavor != ParametricVariety::Flavor::affine)
    fail(Errc::unsupported, "normal_field: affine parametrizations only");
  size_t m = x.coords.size();
  if ((int)m != q.dim())
    fail(Errc::dimension_mismatch, "normal_field: ambient mismatch");
  auto apply_gram = [&q, m](const RFVec& t) {
    RFVec u(m, RationalFunction());
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        const GaussianRational& g = q.gram()[i][j];
        if (!g.is_zero()) u[i] = u[i] + RationalFunction(Polynomial(g)) * t[j];
      }
    return u;
  };
  RFVec n_rf;
  if (m == 2 && x.params.size() == 1) {
    RFVec t = x.derivative(x.params[0]);
    if (t[0].is_zero() && t[1].is_zero())
      fail(Errc::degenerate_parametrization, "constant parametrization");
    RFVec u = apply_gram(t);
    n_rf = {-u[1], u[0]};
  } else if (m == 3 && x.params.size() == 2) {
    RFVec u1 = apply_gram(x.derivative(x.params[0]));
    RFVec u2 = apply_gram(x.derivative(x.params[1]));
    n_rf = {u1[1] * u2[2] - u1[2] * u2[1], u1[2] * u2[0] - u1[0] * u2[2],
            u1[0] * u2[1] - u1[1] * u2[0]};
    bool all_zero = true;
    for (const auto& c : n_rf) all_zero = all_zero && c.is_zero();
    if (all_zero)
      fail(Errc::degenerate_parametrization,
           "jacobian is generically rank-deficient");
  } else {
    fail(Errc::unsupported,
         "normal_field: requires a plane curve or a surface in 3-space");
  }
  return remove_vector_content(clear_denominators(n_rf));
}

}  // namespace focalis
