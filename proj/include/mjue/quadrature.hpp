#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "mjue/errors.hpp"

namespace mjue {

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

/// Implicit weight functions carried by a quadrature rule.
struct UnitWeight {};
/// (1-x)^alpha (1+x)^beta on (-1,1).
struct JacobiWeight {
  double alpha = 0.0;
  double beta = 0.0;
};
/// u^alpha on (0, length).
struct ShiftedJacobiWeight {
  double alpha = 0.0;
  double length = 1.0;
};
using WeightTag = std::variant<UnitWeight, JacobiWeight, ShiftedJacobiWeight>;

/// Nodes strictly increasing inside the open domain; all weights positive.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Interval domain;
  WeightTag weight_tag;

  std::size_t size() const { return nodes.size(); }
  double mass() const;
};

/// Monic three-term recurrence of the classical Jacobi weight
/// (1-x)^alpha (1+x)^beta: a[k] for k < count, b[0] = total mass and
/// b[k] for 1 <= k < count.
struct JacobiCoefficients {
  std::vector<double> a;
  std::vector<double> b;
};
JacobiCoefficients jacobi_recurrence(double alpha, double beta, int count);

/// Total mass 2^(alpha+beta+1) B(alpha+1, beta+1) of the Jacobi weight.
double jacobi_mass(double alpha, double beta);

QuadratureRule gauss_legendre_rule(int m, double lo = -1.0, double hi = 1.0);

/// Gauss rule for (1-x)^alpha (1+x)^beta on (-1,1), exact to degree 2m-1.
QuadratureRule gauss_jacobi_rule(int m, double alpha, double beta);

/// Gauss rule for u^alpha on (0, length).
QuadratureRule gauss_jacobi_shifted_rule(int m, double alpha, double length);

/// Sum of weights times f at the nodes. Throws NumericalError when f is not
/// finite at a node.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fx = f(rule.nodes[i]);
    if (!std::isfinite(fx)) {
      throw NumericalError("integrate: integrand not finite at node " +
                           std::to_string(rule.nodes[i]));
    }
    sum += rule.weights[i] * fx;
  }
  return sum;
}

}  // namespace mjue
