#pragma once

#include <functional>
#include <span>
#include <variant>

#include "mjue/kernels.hpp"
#include "mjue/linalg.hpp"
#include "mjue/orthopoly.hpp"

namespace mjue {

/// Builds the matrix H(u_i, u_j) of a kernel K(u,v) = (uv)^{alpha/2} H(u,v)
/// with H continuous on [0,s]^2.
using ReducedKernel = std::function<Matrix(std::span<const double> nodes)>;

struct LimitingMode {};
struct FiniteMode {
  int n = 0;
  ModifiedJacobiWeight weight;
};

/// Gap on (0, s) in the edge variable: det(I - K) on L^2(0, s).
struct GapSpec {
  double alpha = 0.0;
  double s = 1.0;
  std::variant<LimitingMode, FiniteMode> mode = LimitingMode{};
  int quadrature_size = 64;

  /// Throws DomainError unless s > 0, m >= 4 and, in finite mode, s < 4n^2.
  void validate() const;
};

inline constexpr double kNystromTolerance = 1e-8;
inline constexpr int kNystromMaxSize = 512;

/// det(delta_ij - sqrt(w_i w_j) H(u_i,u_j)) over the m-point Gauss rule for
/// u^alpha on (0,s). Checks that H is finite and the result lies in (0,1].
double nystrom_matrix_determinant(const ReducedKernel& kernel, double alpha, double s, int m);

struct NystromResult {
  double determinant = 1.0;
  int quadrature_size = 0;  // size of the finer rule of the accepted pair
  double change = 0.0;      // |det(m) - det(m/2)|
};

/// Doubles m from spec.quadrature_size until consecutive determinants agree to
/// kNystromTolerance; NumericalError if that does not happen by m = 512.
NystromResult nystrom_determinant(const ReducedKernel& kernel, const GapSpec& spec);

/// det(I - J_{alpha,s}) for the Bessel kernel restricted to (0,s).
double bessel_gap_probability(double alpha, double s, int m = 64);

/// det(I - D_{n,s}) = P_n(1 - s/(2n^2), 1) for the exact finite-n kernel.
double finite_gap_probability(const KernelContext& ctx, double s, int m = 64);

/// Dispatches on spec.mode.
double gap_probability(const GapSpec& spec);

struct SeriesOracleResult {
  double value = 1.0;
  double last_term = 0.0;
  /// False when the last included term exceeds 1e-8 in magnitude.
  bool converged = true;
};

/// Truncated Fredholm series sum_{j<=terms} (-1)^j/j! int det[K(u_i,u_k)],
/// with the j-fold integrals written through traces tr(K^k) by Newton's
/// identities and the traces taken with an m-point u^alpha rule.
SeriesOracleResult fredholm_series_oracle(const ReducedKernel& kernel, double alpha, double s,
                                          int terms, int m = 64);

ReducedKernel bessel_reduced_kernel(double alpha);
ReducedKernel finite_reduced_kernel(const KernelContext& ctx);

}  // namespace mjue
