#pragma once

namespace mjue {

/// Bessel function of the first kind together with the entire part G of
/// J_alpha(z) = z^alpha G(z). All four fields are filled by bessel_eval().
struct BesselEval {
  double order = 0.0;
  double argument = 0.0;
  double value = 0.0;                   // J_alpha(z)
  double derivative = 0.0;              // J'_alpha(z)
  double entire_part = 0.0;             // G(z)
  double entire_part_derivative = 0.0;  // G'(z)
};

/// Arguments at or below this value use the power series of G; larger
/// arguments use Steed's continued-fraction method.
inline constexpr double kBesselSeriesLimit = 8.0;

/// Gamma function for real x. Throws DomainError at 0, -1, -2, ...
double gamma_real(double x);

/// J_alpha, J'_alpha, G and G' for order > -1 and argument >= 0.
///
/// At argument 0 the value is 1 for order 0, 0 for positive order and +inf
/// for negative order; the derivative follows the same limits.
BesselEval bessel_eval(double order, double argument);

}  // namespace mjue
