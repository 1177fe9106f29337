#include "mjue/fredholm.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mjue/errors.hpp"
#include "mjue/quadrature.hpp"

namespace mjue {
namespace {

// sqrt(w_i w_j) H(u_i,u_j) on the u^alpha rule.
Matrix weighted_operator(const ReducedKernel& kernel, const QuadratureRule& rule) {
  Matrix h = kernel(rule.nodes);
  const std::size_t m = rule.size();
  if (h.rows() != m || h.cols() != m) throw DomainError("reduced kernel returned wrong shape");
  std::vector<double> sw(m);
  for (std::size_t i = 0; i < m; ++i) sw[i] = std::sqrt(rule.weights[i]);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!std::isfinite(h(i, j))) {
        char where[96];
        std::snprintf(where, sizeof where, "H(%.6g, %.6g)", rule.nodes[i], rule.nodes[j]);
        throw NumericalError(std::string("kernel does not factor as (uv)^{alpha/2} H with H finite: ") +
                             where + " is not finite");
      }
      h(i, j) *= sw[i] * sw[j];
    }
  }
  return h;
}

}  // namespace

void GapSpec::validate() const {
  if (!(alpha > -1.0)) throw DomainError("gap: alpha must exceed -1");
  if (!(s > 0.0)) throw DomainError("gap: s must be positive");
  if (quadrature_size < 4) throw DomainError("gap: quadrature size must be >= 4");
  if (const auto* f = std::get_if<FiniteMode>(&mode)) {
    if (f->n < 1) throw DomainError("gap: n must be >= 1");
    if (!(s < 4.0 * f->n * f->n)) throw DomainError("gap: s must stay below 4 n^2");
  }
}

double nystrom_matrix_determinant(const ReducedKernel& kernel, double alpha, double s, int m) {
  const QuadratureRule rule = gauss_jacobi_shifted_rule(m, alpha, s);
  Matrix a = weighted_operator(kernel, rule);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = (i == j ? 1.0 : 0.0) - a(i, j);
  }
  double det = determinant(std::move(a));
  // I - K with 0 <= K < I: anything outside (0,1] beyond rounding is a failure.
  if (!(det > 0.0) || det > 1.0 + 1e-12) {
    throw NumericalError("Fredholm determinant " + std::to_string(det) + " outside (0,1]");
  }
  return std::min(det, 1.0);
}

NystromResult nystrom_determinant(const ReducedKernel& kernel, const GapSpec& spec) {
  spec.validate();
  int m = spec.quadrature_size;
  double prev = nystrom_matrix_determinant(kernel, spec.alpha, spec.s, m);
  while (2 * m <= kNystromMaxSize) {
    m *= 2;
    const double next = nystrom_matrix_determinant(kernel, spec.alpha, spec.s, m);
    const double change = std::abs(next - prev);
    if (change < kNystromTolerance) return {next, m, change};
    prev = next;
  }
  throw NumericalError("Fredholm determinant did not stabilize by m = " +
                       std::to_string(kNystromMaxSize));
}

ReducedKernel bessel_reduced_kernel(double alpha) {
  return [alpha](std::span<const double> nodes) {
    return bessel_kernel_reduced_matrix(alpha, nodes);
  };
}

ReducedKernel finite_reduced_kernel(const KernelContext& ctx) {
  return [&ctx](std::span<const double> nodes) { return scaled_edge_reduced_matrix(ctx, nodes); };
}

double bessel_gap_probability(double alpha, double s, int m) {
  GapSpec spec{alpha, s, LimitingMode{}, m};
  return nystrom_determinant(bessel_reduced_kernel(alpha), spec).determinant;
}

double finite_gap_probability(const KernelContext& ctx, double s, int m) {
  GapSpec spec{ctx.weight().alpha(), s, FiniteMode{ctx.n(), ctx.weight()}, m};
  return nystrom_determinant(finite_reduced_kernel(ctx), spec).determinant;
}

double gap_probability(const GapSpec& spec) {
  spec.validate();
  if (const auto* f = std::get_if<FiniteMode>(&spec.mode)) {
    const KernelContext ctx(f->weight, f->n);
    return nystrom_determinant(finite_reduced_kernel(ctx), spec).determinant;
  }
  return nystrom_determinant(bessel_reduced_kernel(spec.alpha), spec).determinant;
}

SeriesOracleResult fredholm_series_oracle(const ReducedKernel& kernel, double alpha, double s,
                                          int terms, int m) {
  if (terms < 0 || terms > 6) throw DomainError("fredholm_series_oracle: terms must be in [0,6]");
  SeriesOracleResult out;
  if (terms == 0) return out;

  const QuadratureRule rule = gauss_jacobi_shifted_rule(m, alpha, s);
  const Matrix k = weighted_operator(kernel, rule);
  std::vector<double> power_traces(terms + 1, 0.0);
  Matrix power = k;
  power_traces[1] = trace(power);
  for (int j = 2; j <= terms; ++j) {
    power = power * k;
    power_traces[j] = trace(power);
  }
  // Newton: e_j = (1/j) sum_{i=1..j} (-1)^{i-1} e_{j-i} p_i, and
  // (1/j!) int det[K(u_a,u_b)]_{j x j} = e_j.
  std::vector<double> e(terms + 1, 0.0);
  e[0] = 1.0;
  double value = 1.0;
  for (int j = 1; j <= terms; ++j) {
    double acc = 0.0;
    for (int i = 1; i <= j; ++i) acc += ((i % 2 == 1) ? 1.0 : -1.0) * e[j - i] * power_traces[i];
    e[j] = acc / j;
    const double term = (j % 2 == 1 ? -1.0 : 1.0) * e[j];
    value += term;
    out.last_term = term;
  }
  out.value = value;
  out.converged = std::abs(out.last_term) <= 1e-8;
  return out;
}

}  // namespace mjue
