#include "mjue/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "mjue/errors.hpp"
#include "mjue/special_functions.hpp"

namespace mjue {
namespace {

void require_open_interval(double x, const char* what) {
  if (!(std::abs(x) < 1.0)) throw DomainError(std::string(what) + ": x must lie in (-1,1)");
}

// Jacobi part of the weight times exp(log h), consistent with the Szego data.
double weight_from_data(const SzegoData& data, double x) {
  return std::pow(1.0 - x, data.alpha) * std::pow(1.0 + x, data.beta) * std::exp(data.logh(x));
}

}  // namespace

SzegoData SzegoData::from_weight(const ModifiedJacobiWeight& w) {
  SzegoData data;
  data.alpha = w.alpha();
  data.beta = w.beta();
  const ChebSeries& h = w.h();
  data.logh = cheb_fit([&h](double x) { return std::log(h(x)); });
  data.d_infty = std::exp2(-0.5 * (data.alpha + data.beta)) * std::exp(0.5 * data.logh[0]);
  return data;
}

Complex phi_map(Complex z) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    throw DomainError("phi_map: z lies on the cut [-1,1]; use phi_boundary");
  }
  // The product of principal roots selects the branch with |phi| > 1.
  return z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
}

Complex phi_boundary(double x) {
  if (!(std::abs(x) <= 1.0)) throw DomainError("phi_boundary: x must lie in [-1,1]");
  return std::polar(1.0, std::acos(x));
}

double psi_phase(const SzegoData& data, double x) {
  require_open_interval(x, "psi_phase");
  const double theta = std::acos(x);
  const double jacobi = 0.5 * (data.alpha * (theta - std::numbers::pi) + data.beta * theta);

  // sum_{k>=1} c_k U_{k-1}(x) by Clenshaw in the U basis.
  const auto c = data.logh.coefficients();
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return jacobi + 0.5 * std::sqrt((1.0 - x) * (1.0 + x)) * b1;
}

Complex szego_exterior(const SzegoData& data, Complex z) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    throw DomainError("szego_exterior: z lies on the cut [-1,1]; use szego_boundary");
  }
  const Complex phi = phi_map(z);
  const Complex log_jacobi = 0.5 * data.alpha * std::log(z - 1.0) +
                             0.5 * data.beta * std::log(z + 1.0) -
                             0.5 * (data.alpha + data.beta) * std::log(phi);
  const auto c = data.logh.coefficients();
  const Complex t = 1.0 / phi;
  Complex tail = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) tail = (tail + c[k]) * t;
  return std::exp(log_jacobi + 0.5 * c[0] + 0.5 * tail);
}

Complex szego_boundary(const SzegoData& data, double x, Side side) {
  require_open_interval(x, "szego_boundary");
  const double modulus = std::sqrt(weight_from_data(data, x));
  const double psi = psi_phase(data, x);
  return std::polar(modulus, side == Side::above ? -psi : psi);
}

double arcsine_density(double x) {
  require_open_interval(x, "arcsine_density");
  return 1.0 / (std::numbers::pi * std::sqrt((1.0 - x) * (1.0 + x)));
}

double bulk_pi_asymptotic_scaled(const SzegoData& data, int n, double x, double delta) {
  if (n < 0) throw DomainError("bulk_pi_asymptotic: n must be >= 0");
  if (!(std::abs(x) <= 1.0 - delta)) {
    throw DomainError("bulk_pi_asymptotic: x must lie in [-1+delta, 1-delta]");
  }
  const double theta = std::acos(x);
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  const double phase = (n + 0.5) * theta + psi_phase(data, x) - 0.25 * std::numbers::pi;
  return std::numbers::sqrt2 * data.d_infty / std::sqrt(weight_from_data(data, x)) /
         std::pow(one_minus_x2, 0.25) * std::cos(phase);
}

double bulk_pi_asymptotic(const SzegoData& data, int n, double x, double delta) {
  return std::ldexp(bulk_pi_asymptotic_scaled(data, n, x, delta), -n);
}

double edge_pi_asymptotic_scaled(const SzegoData& data, int n, double x, double delta) {
  if (n < 1) throw DomainError("edge_pi_asymptotic: n must be >= 1");
  if (!(x > 1.0 - delta && x < 1.0)) {
    throw DomainError("edge_pi_asymptotic: x must lie in (1-delta, 1)");
  }
  const double theta = std::acos(x);
  const double arg = n * theta;
  const double zeta = 0.5 * theta + psi_phase(data, x) + 0.5 * data.alpha * std::numbers::pi;
  const BesselEval j = bessel_eval(data.alpha, arg);
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  return std::sqrt(std::numbers::pi) * data.d_infty / std::sqrt(weight_from_data(data, x)) *
         std::sqrt(arg) / std::pow(one_minus_x2, 0.25) *
         (std::cos(zeta) * j.value + std::sin(zeta) * j.derivative);
}

double edge_pi_asymptotic(const SzegoData& data, int n, double x, double delta) {
  return std::ldexp(edge_pi_asymptotic_scaled(data, n, x, delta), -n);
}

}  // namespace mjue
