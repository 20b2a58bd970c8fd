#pragma once

#include <cstdint>
#include <vector>

namespace focalis {

// Numeric Chow-ring data of the base variety. Only intersection numbers
// enter the degree formulas, so classes are stored as integers.

struct CurveClassData {
  int m = 2;        // ambient projective dimension
  long long d = 1;  // degree
  long long g = 0;  // genus
};
void validate(const CurveClassData& c);

struct SurfaceClassData {
  int m = 3;
  long long d = 0;      // H^2
  long long HK = 0;     // H.K_S  (= -H.c1)
  long long c1sq = 0;   // c1(S)^2 = K_S^2
  long long c2 = 0;     // c2(S)
  long long chi = 0;    // chi(O_S); Noether: 12 chi = c1sq + c2
  long long sect_genus = 0;  // 2 pi - 2 = d + HK
};
void validate(const SurfaceClassData& s);

// Truncated total Chern class as coefficients of powers of H; coeff[0] = 1.
struct ChernVector {
  std::vector<long long> coeff;
};

// c(N_X) = prod_i (1 - (d_i - 2) H) for a complete intersection of the
// given degrees.
ChernVector normal_chern_ci(const std::vector<long long>& degrees);

// Intersection data of a smooth surface complete intersection in P^m cut by
// m-2 hypersurfaces of the given degrees.
SurfaceClassData ci_tangent_data(int m, const std::vector<long long>& degrees);

// Degree with multiplicity deg(Sigma_X) * deg(p|Y) of the focal divisor,
// by reduction modulo the Leray-Hirsch relation of the projectivized
// Euclidean normal bundle. n = dim X in {1, 2}.
long long leray_hirsch_degree(int n, int m, const CurveClassData& data);
long long leray_hirsch_degree(int n, int m, const SurfaceClassData& data);

// Degree of H2^m under the same reduction (endpoint-map degree; equals d^2
// for plane curves).
long long h2_top_power_degree(const CurveClassData& data);
long long h2_top_power_degree(int m, const SurfaceClassData& data);

// Closed form 6(d + g - 1); always equal to leray_hirsch_degree(1, m, .).
long long curve_focal_degree_closed(const CurveClassData& data);

struct SurfaceFocalDegrees {
  long long df;    // 2(15d + c1^2 + c2 - 9 H.c1)
  long long df1;   // 2(15d + 12 chi - 9 H.c1)
  long long df2;   // 2(18(pi - 1) + 6d + 12 chi)
};
SurfaceFocalDegrees surface_focal_degree_closed(const SurfaceClassData& data);

}  // namespace focalis
