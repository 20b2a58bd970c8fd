#include "focalis/chow.hpp"

#include <map>
#include <string>

#include "focalis/error.hpp"

namespace focalis {

void validate(const CurveClassData& c) {
  if (c.d < 1) fail(Errc::invariant_violation, "curve degree must be >= 1");
  if (c.g < 0) fail(Errc::invariant_violation, "genus must be >= 0");
  if (c.m < 2) fail(Errc::invariant_violation, "ambient dimension must be >= 2");
}

void validate(const SurfaceClassData& s) {
  if (s.m < 3) fail(Errc::invariant_violation, "ambient dimension must be >= 3");
  if (s.d < 1) fail(Errc::invariant_violation, "surface degree must be >= 1");
  if (12 * s.chi != s.c1sq + s.c2)
    fail(Errc::invariant_violation,
         "Noether relation 12*chi = c1^2 + c2 violated");
  if (2 * s.sect_genus - 2 != s.d + s.HK)
    fail(Errc::invariant_violation,
         "sectional-genus relation 2*pi - 2 = d + H.K violated");
}

ChernVector normal_chern_ci(const std::vector<long long>& degrees) {
  for (auto d : degrees)
    if (d < 1) fail(Errc::precondition, "degrees must be >= 1");
  ChernVector v;
  v.coeff = {1};
  for (auto d : degrees) {
    // multiply by (1 - (d-2) H)
    std::vector<long long> next(v.coeff.size() + 1, 0);
    for (size_t k = 0; k < v.coeff.size(); ++k) {
      next[k] += v.coeff[k];
      next[k + 1] -= (d - 2) * v.coeff[k];
    }
    if (next.back() == 0) next.pop_back();
    v.coeff = std::move(next);
  }
  return v;
}

SurfaceClassData ci_tangent_data(int m, const std::vector<long long>& degrees) {
  if ((int)degrees.size() != m - 2)
    fail(Errc::precondition,
         "surface complete intersection in P^m needs m-2 degrees");
  for (auto d : degrees)
    if (d < 1) fail(Errc::precondition, "degrees must be >= 1");
  // c(T_S) = (1+H)^{m+1} / prod(1 + d_i H) truncated to degree 2.
  long long c1 = m + 1, c2 = (long long)m * (m + 1) / 2;
  for (auto d : degrees) {
    // divide by (1 + dH): inverse is 1 - dH + d^2 H^2 - ...
    long long nc1 = c1 - d;
    long long nc2 = c2 - d * c1 + d * d;
    c1 = nc1;
    c2 = nc2;
  }
  long long deg = 1;
  for (auto d : degrees) deg *= d;
  SurfaceClassData s;
  s.m = m;
  s.d = deg;
  s.HK = -c1 * deg;          // K = -c1(S), c1(S) = c1 * H
  s.c1sq = c1 * c1 * deg;
  s.c2 = c2 * deg;
  if ((s.c1sq + s.c2) % 12 != 0)
    fail(Errc::internal, "Noether relation gives non-integer chi");
  s.chi = (s.c1sq + s.c2) / 12;
  if ((s.d + s.HK) % 2 != 0)
    fail(Errc::internal, "sectional genus is not an integer");
  s.sect_genus = (s.d + s.HK + 2) / 2;
  validate(s);
  return s;
}

namespace {

// --- Reduction engine for curves -------------------------------------------
//
// Classes on a curve are tracked as (fundamental coefficient, degree of the
// point part). An element of the Chow ring of P(N) is a map
// H2-exponent -> class; the Leray-Hirsch relation at H2^m is
//   H2^m = -c1(N(-1)) H2^{m-1},  c1(N(-1)) = c1(L) + c1(N*(1)) = -3H - K.
struct CurveTerm {
  long long fund = 0;
  long long pts = 0;
};

long long reduce_curve(std::map<int, CurveTerm> elem, const CurveClassData& c) {
  long long deg_minus_c1E = 3 * c.d + (2 * c.g - 2);  // deg(3H + K)
  int rank = c.m;  // rank of the Euclidean normal bundle of a curve in P^m
  while (true) {
    auto it = elem.rbegin();
    while (it != elem.rend() && it->second.fund == 0 && it->second.pts == 0)
      ++it;
    if (it == elem.rend()) return 0;
    int a = it->first;
    if (a < rank) break;
    CurveTerm t = it->second;
    elem.erase(a);
    // H2^a beta = H2^{a-1} (3H + K) beta;  (3H+K) kills the point part.
    elem[a - 1].pts += t.fund * deg_minus_c1E;
  }
  // Only H2^{rank-1} * (point class) is a 0-cycle of the right dimension.
  long long total = 0;
  for (const auto& [a, t] : elem)
    if (a == rank - 1) total += t.pts;
  return total;
}

// --- Reduction engine for surfaces ------------------------------------------
//
// Classes: fund, a degree-1 part x H + y K, and a point part. Products use
// the intersection numbers of the data. Relation at H2^{m-1}:
//   H2^{m-1} = -c1(E) H2^{m-2} - c2(E) H2^{m-3},
//   c1(E) = -4H - K,   c2(E) = 9H^2 + 5 HK + K^2 - c2   (E = N(-1)).
struct SurfTerm {
  long long fund = 0;
  long long h = 0, k = 0;
  long long pts = 0;
};

long long reduce_surface(std::map<int, SurfTerm> elem,
                         const SurfaceClassData& s) {
  const long long c2E = 9 * s.d + 5 * s.HK + s.c1sq - s.c2;
  auto mul_deg1 = [&s](long long xh, long long xk, long long yh, long long yk) {
    return xh * yh * s.d + (xh * yk + xk * yh) * s.HK + xk * yk * s.c1sq;
  };
  int rank = s.m - 1;
  while (true) {
    auto it = elem.rbegin();
    bool live = false;
    for (; it != elem.rend(); ++it) {
      const SurfTerm& t = it->second;
      if (t.fund || t.h || t.k || t.pts) {
        live = true;
        break;
      }
    }
    if (!live) return 0;
    int a = it->first;
    if (a < rank) break;
    SurfTerm t = it->second;
    elem.erase(a);
    // -c1(E) = 4H + K
    SurfTerm& down1 = elem[a - 1];
    down1.h += 4 * t.fund;
    down1.k += t.fund;
    down1.pts += mul_deg1(4, 1, t.h, t.k);
    // -c2(E)
    SurfTerm& down2 = elem[a - 2];
    down2.pts += -c2E * t.fund;
  }
  long long total = 0;
  for (const auto& [a, t] : elem)
    if (a == rank - 1) total += t.pts;
  return total;
}

}  // namespace

long long leray_hirsch_degree(int n, int m, const CurveClassData& data) {
  if (n != 1) fail(Errc::unsupported, "curve data requires n = 1");
  if (m < 2) fail(Errc::precondition, "n = 1 requires m >= 2");
  CurveClassData c = data;
  c.m = m;
  validate(c);
  // H2^{m-1} (2 Pi*K + n H2 + (n+2) H1)
  std::map<int, CurveTerm> elem;
  elem[m - 1].pts += 2 * (2 * c.g - 2) + 3 * c.d;
  elem[m].fund += 1;
  long long deg = reduce_curve(std::move(elem), c);
  if (deg < 0)
    fail(Errc::internal, "negative focal degree from the reduction engine");
  return deg;
}

long long leray_hirsch_degree(int n, int m, const SurfaceClassData& data) {
  if (n != 2) fail(Errc::unsupported, "surface data requires n = 2");
  if (m < 3) fail(Errc::precondition, "n = 2 requires m >= 3");
  SurfaceClassData s = data;
  s.m = m;
  validate(s);
  std::map<int, SurfTerm> elem;
  SurfTerm& t1 = elem[m - 1];  // 2K + 4H
  t1.h = 4;
  t1.k = 2;
  elem[m].fund = 2;
  long long deg = reduce_surface(std::move(elem), s);
  if (deg < 0)
    fail(Errc::internal, "negative focal degree from the reduction engine");
  return deg;
}

long long h2_top_power_degree(const CurveClassData& data) {
  validate(data);
  std::map<int, CurveTerm> elem;
  elem[data.m].fund = 1;
  return reduce_curve(std::move(elem), data);
}

long long h2_top_power_degree(int m, const SurfaceClassData& data) {
  SurfaceClassData s = data;
  s.m = m;
  validate(s);
  std::map<int, SurfTerm> elem;
  elem[m].fund = 1;
  return reduce_surface(std::move(elem), s);
}

long long curve_focal_degree_closed(const CurveClassData& data) {
  validate(data);
  return 6 * (data.d + data.g - 1);
}

SurfaceFocalDegrees surface_focal_degree_closed(const SurfaceClassData& s) {
  validate(s);
  SurfaceFocalDegrees out;
  out.df = 2 * (15 * s.d + s.c1sq + s.c2 + 9 * s.HK);
  out.df1 = 2 * (15 * s.d + 12 * s.chi + 9 * s.HK);
  out.df2 = 2 * (18 * (s.sect_genus - 1) + 6 * s.d + 12 * s.chi);
  return out;
}

}  // namespace focalis
