#include "mjue/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mjue/errors.hpp"

namespace mjue {
namespace {

constexpr int kSeriesTermCap = 60;
constexpr double kSeriesRelativeStop = 1e-17;

struct SeriesParts {
  double g = 0.0;       // G_alpha(z)
  double g_next = 0.0;  // G_{alpha+1}(z); G'_alpha(z) = -z G_{alpha+1}(z)
};

// Both sums share the factor (-z^2/4)^k and run in one loop so that
// J = z^alpha G and J' = alpha z^(alpha-1) G + z^alpha G' hold algebraically.
SeriesParts entire_series(double order, double z) {
  const double q = -0.25 * z * z;
  double term = 1.0 / (std::exp2(order) * std::tgamma(order + 1.0));
  double term_next = term / (2.0 * (order + 1.0));
  SeriesParts out{term, term_next};
  double scale = std::abs(term);
  double scale_next = std::abs(term_next);
  for (int k = 1; k < kSeriesTermCap; ++k) {
    term *= q / (k * (k + order));
    term_next *= q / (k * (k + order + 1.0));
    out.g += term;
    out.g_next += term_next;
    scale += std::abs(term);
    scale_next += std::abs(term_next);
    if (std::abs(term) < kSeriesRelativeStop * scale &&
        std::abs(term_next) < kSeriesRelativeStop * scale_next) {
      break;
    }
  }
  return out;
}

struct JY {
  double j, y, jp, yp;
};

// Steed's method: CF1 gives J'_nu/J_nu, downward recurrence reduces the
// order to mu, CF2 gives (J'_mu + iY'_mu)/(J_mu + iY_mu), and the Wronskian
// fixes the normalization. Valid for nu >= 0 and x >= 2.
JY steed_jy(double nu, double x) {
  constexpr double eps = 1e-16;
  constexpr double tiny = 1e-300;
  constexpr int max_iter = 100000;

  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double wronskian = xi2 / std::numbers::pi;

  // CF1
  int isign = 1;
  double h = std::max(nu * xi, tiny);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i <= max_iter; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < tiny) d = tiny;
    c = b - 1.0 / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < eps) break;
  }
  if (i > max_iter) throw NumericalError("bessel: CF1 did not converge");

  double jl = isign * 1e-30;
  double jpl = h * jl;
  const double jl_top = jl;
  const double jpl_top = jpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double tmp = fact * jl + jpl;
    fact -= xi;
    jpl = fact * tmp - jl;
    jl = tmp;
  }
  if (jl == 0.0) jl = eps;
  const double f = jpl / jl;

  // CF2
  double a = 0.25 - mu * mu;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double tmp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = tmp;
  for (i = 2; i <= max_iter; ++i) {
    a += 2 * (i - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < tiny) dr = tiny;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < tiny) cr = tiny;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    tmp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = tmp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < eps) break;
  }
  if (i > max_iter) throw NumericalError("bessel: CF2 did not converge");

  const double gam = (p - f) / q;
  double j_mu = std::sqrt(wronskian / ((p - f) * gam + q));
  j_mu = std::copysign(j_mu, jl);
  double y_mu = j_mu * gam;
  const double yp_mu = y_mu * (p + q / gam);
  double y_next = mu * xi * y_mu - yp_mu;

  const double scale = j_mu / jl;
  JY out{};
  out.j = jl_top * scale;
  out.jp = jpl_top * scale;
  for (int k = 1; k <= nl; ++k) {
    const double y_tmp = (mu + k) * xi2 * y_next - y_mu;
    y_mu = y_next;
    y_next = y_tmp;
  }
  out.y = y_mu;
  out.yp = nu * xi * y_mu - y_next;
  return out;
}

}  // namespace

double gamma_real(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError("gamma_real: pole at nonpositive integer " + std::to_string(x));
  }
  return std::tgamma(x);
}

BesselEval bessel_eval(double order, double argument) {
  if (!(order > -1.0)) throw DomainError("bessel_eval: order must exceed -1");
  if (!(argument >= 0.0)) throw DomainError("bessel_eval: argument must be >= 0");

  BesselEval out;
  out.order = order;
  out.argument = argument;
  const double z = argument;

  if (z <= kBesselSeriesLimit) {
    const SeriesParts s = entire_series(order, z);
    out.entire_part = s.g;
    out.entire_part_derivative = -z * s.g_next;
    if (z == 0.0) {
      constexpr double inf = std::numeric_limits<double>::infinity();
      if (order == 0.0) {
        out.value = s.g;
        out.derivative = 0.0;
      } else if (order > 0.0) {
        out.value = 0.0;
        out.derivative = order == 1.0 ? s.g : (order > 1.0 ? 0.0 : inf);
      } else {
        out.value = inf;
        out.derivative = -inf;
      }
      return out;
    }
    const double za = std::pow(z, order);
    out.value = za * s.g;
    out.derivative = order * (za / z) * s.g + za * out.entire_part_derivative;
    return out;
  }

  double j = 0.0;
  double jp = 0.0;
  if (order >= 0.0) {
    const JY r = steed_jy(order, z);
    j = r.j;
    jp = r.jp;
  } else {
    // J_{-nu} = cos(nu pi) J_nu - sin(nu pi) Y_nu, 0 < nu < 1.
    const double nu = -order;
    const JY r = steed_jy(nu, z);
    const double cs = std::cos(nu * std::numbers::pi);
    const double sn = std::sin(nu * std::numbers::pi);
    j = cs * r.j - sn * r.y;
    jp = cs * r.jp - sn * r.yp;
  }
  const double za = std::pow(z, order);
  out.value = j;
  out.derivative = jp;
  out.entire_part = j / za;
  out.entire_part_derivative = (jp - order / z * j) / za;
  return out;
}

}  // namespace mjue
