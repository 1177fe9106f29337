#pragma once

#include <complex>

#include "mjue/chebyshev.hpp"
#include "mjue/orthopoly.hpp"

namespace mjue {

using Complex = std::complex<double>;

/// Szego data of a modified Jacobi weight: exponents, the Chebyshev series of
/// log h and D_infty = lim D(z) as z -> infinity.
struct SzegoData {
  double alpha = 0.0;
  double beta = 0.0;
  ChebSeries logh;
  double d_infty = 1.0;

  static SzegoData from_weight(const ModifiedJacobiWeight& w);
};

/// Half-width of the endpoint regions; the bulk formula applies on
/// [-1+delta, 1-delta], the edge formula on (1-delta, 1).
inline constexpr double kRegionDelta = 0.1;

/// phi(z) = z + (z^2-1)^{1/2}, mapping C \ [-1,1] onto |phi| > 1.
Complex phi_map(Complex z);

/// exp(i arccos x), the boundary value of phi from the upper half plane.
Complex phi_boundary(double x);

/// psi(x) = (alpha (arccos x - pi) + beta arccos x)/2 plus the finite Hilbert
/// transform of log h, evaluated from its Chebyshev coefficients through
/// PV int T_k(t) / ((t-x) sqrt(1-t^2)) dt = pi U_{k-1}(x).
double psi_phase(const SzegoData& data, double x);

/// D(z) = D_jacobi(z) D_h(z) off the cut, with the closed form
/// (z-1)^{alpha/2} (z+1)^{beta/2} phi(z)^{-(alpha+beta)/2} and
/// D_h(z) = exp(c_0/2 + sum_{k>=1} c_k phi(z)^{-k} / 2).
Complex szego_exterior(const SzegoData& data, Complex z);

enum class Side { above, below };

/// D_+(x) = sqrt(w(x)) e^{-i psi(x)} and D_-(x) = conj(D_+(x)).
Complex szego_boundary(const SzegoData& data, double x, Side side);

/// xi(x) = 1 / (pi sqrt(1-x^2)).
double arcsine_density(double x);

/// Leading-order 2^n pi_n(x) in the bulk:
/// sqrt(2) D_infty w^{-1/2} (1-x^2)^{-1/4} cos((n+1/2) arccos x + psi(x) - pi/4).
double bulk_pi_asymptotic_scaled(const SzegoData& data, int n, double x,
                                 double delta = kRegionDelta);
/// Same formula times 2^{-n}.
double bulk_pi_asymptotic(const SzegoData& data, int n, double x, double delta = kRegionDelta);

/// Leading-order 2^n pi_n(x) near +1:
/// sqrt(pi) D_infty w^{-1/2} (n theta)^{1/2} (1-x^2)^{-1/4}
///   [cos zeta_1 J_alpha(n theta) + sin zeta_1 J'_alpha(n theta)],
/// theta = arccos x, zeta_1 = theta/2 + psi(x) + alpha pi/2.
double edge_pi_asymptotic_scaled(const SzegoData& data, int n, double x,
                                 double delta = kRegionDelta);
double edge_pi_asymptotic(const SzegoData& data, int n, double x, double delta = kRegionDelta);

}  // namespace mjue
