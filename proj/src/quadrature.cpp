#include "mjue/quadrature.hpp"

#include <cmath>

#include "mjue/linalg.hpp"

namespace mjue {
namespace {

void check_exponents(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi exponents must exceed -1");
  }
}

QuadratureRule golub_welsch(const JacobiCoefficients& rec, int m) {
  std::vector<double> off(m - 1);
  for (int k = 1; k < m; ++k) off[k - 1] = std::sqrt(rec.b[k]);
  const TridiagonalEigen eig = symmetric_tridiagonal_eigen(rec.a, off);
  QuadratureRule rule;
  rule.nodes = eig.values;
  rule.weights.resize(m);
  for (int k = 0; k < m; ++k) {
    rule.weights[k] = rec.b[0] * eig.first_components[k] * eig.first_components[k];
  }
  return rule;
}

}  // namespace

double QuadratureRule::mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double jacobi_mass(double alpha, double beta) {
  check_exponents(alpha, beta);
  return std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                  std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

JacobiCoefficients jacobi_recurrence(double alpha, double beta, int count) {
  check_exponents(alpha, beta);
  if (count < 1) throw DomainError("jacobi_recurrence: count must be >= 1");
  JacobiCoefficients rec;
  rec.a.resize(count);
  rec.b.resize(count);
  const double ab = alpha + beta;
  rec.b[0] = jacobi_mass(alpha, beta);
  rec.a[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < count; ++k) {
    const double s = 2.0 * k + ab;
    rec.a[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    if (k == 1) {
      rec.b[1] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      rec.b[k] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return rec;
}

QuadratureRule gauss_legendre_rule(int m, double lo, double hi) {
  if (m < 1) throw DomainError("gauss_legendre_rule: m must be >= 1");
  if (!(lo < hi)) throw DomainError("gauss_legendre_rule: invalid interval, need lo < hi");
  QuadratureRule rule = golub_welsch(jacobi_recurrence(0.0, 0.0, m), m);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (int k = 0; k < m; ++k) {
    rule.nodes[k] = mid + half * rule.nodes[k];
    rule.weights[k] *= half;
  }
  rule.domain = {lo, hi};
  rule.weight_tag = UnitWeight{};
  return rule;
}

QuadratureRule gauss_jacobi_rule(int m, double alpha, double beta) {
  if (m < 1) throw DomainError("gauss_jacobi_rule: m must be >= 1");
  check_exponents(alpha, beta);
  QuadratureRule rule = golub_welsch(jacobi_recurrence(alpha, beta, m), m);
  rule.domain = {-1.0, 1.0};
  rule.weight_tag = JacobiWeight{alpha, beta};
  return rule;
}

QuadratureRule gauss_jacobi_shifted_rule(int m, double alpha, double length) {
  if (!(length > 0.0)) throw DomainError("gauss_jacobi_shifted_rule: length must be positive");
  // u = length (1+x)/2 turns u^alpha into (length/2)^alpha (1+x)^alpha.
  QuadratureRule rule = gauss_jacobi_rule(m, 0.0, alpha);
  const double half = 0.5 * length;
  const double scale = std::pow(half, alpha + 1.0);
  for (int k = 0; k < m; ++k) {
    rule.nodes[k] = half * (1.0 + rule.nodes[k]);
    rule.weights[k] *= scale;
  }
  rule.domain = {0.0, length};
  rule.weight_tag = ShiftedJacobiWeight{alpha, length};
  return rule;
}

}  // namespace mjue
