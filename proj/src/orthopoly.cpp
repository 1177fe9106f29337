#include "mjue/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mjue/errors.hpp"
#include "mjue/quadrature.hpp"

namespace mjue {

ModifiedJacobiWeight::ModifiedJacobiWeight(double alpha, double beta, ChebSeries h, double floor)
    : alpha_(alpha), beta_(beta), h_(std::move(h)) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("modified Jacobi weight: alpha and beta must exceed -1");
  }
  constexpr int grid = 1001;
  for (int j = 0; j < grid; ++j) {
    const double x = std::cos(std::numbers::pi * j / (grid - 1));
    const double hx = h_(x);
    if (!(hx >= floor)) {
      throw DomainError("modified Jacobi weight: h(" + std::to_string(x) + ") = " +
                        std::to_string(hx) + " is below the positivity floor");
    }
  }
}

double ModifiedJacobiWeight::evaluate_split(double x, double one_minus_x,
                                            double one_plus_x) const {
  return std::pow(one_minus_x, alpha_) * std::pow(one_plus_x, beta_) * h_(x);
}

double weight_eval(const ModifiedJacobiWeight& w, double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("weight_eval: x must lie in (-1,1)");
  return w.evaluate_split(x, 1.0 - x, 1.0 + x);
}

ChebSeries builtin_h(std::string_view name) {
  if (name == "one") return ChebSeries({1.0});
  if (name == "exp") {
    return cheb_fit([](double x) { return std::exp(x); });
  }
  if (name == "runge") return ChebSeries({1.125, 0.0, 0.125});  // 1 + (T_0 + T_2)/8
  throw ConfigError("unknown h preset '" + std::string(name) + "' (expected one, exp, runge)");
}

double RecurrenceTable::log_leading_coefficient(int n) const {
  if (n < 0 || n >= N) throw DomainError("log_leading_coefficient: index out of range");
  double s = std::log(b[0]);
  for (int k = 1; k <= n; ++k) s += std::log(b[k]);
  return -0.5 * s;
}

namespace {

bool stieltjes(const QuadratureRule& rule, const ChebSeries& h, int N, RecurrenceTable& out) {
  const std::size_t m = rule.size();
  std::vector<double> lambda(m);
  for (std::size_t i = 0; i < m; ++i) lambda[i] = rule.weights[i] * h(rule.nodes[i]);

  double mass = 0.0;
  for (double l : lambda) mass += l;
  out.N = N;
  out.a.assign(N, 0.0);
  out.b.assign(N, 0.0);
  out.b[0] = mass;

  std::vector<double> q_prev(m, 0.0);
  std::vector<double> q(m, 1.0 / std::sqrt(mass));
  std::vector<double> r(m);
  for (int k = 0; k < N; ++k) {
    double a = 0.0;
    for (std::size_t i = 0; i < m; ++i) a += lambda[i] * rule.nodes[i] * q[i] * q[i];
    out.a[k] = a;
    if (k + 1 == N) break;
    const double sb = k == 0 ? 0.0 : std::sqrt(out.b[k]);
    double b = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = (rule.nodes[i] - a) * q[i] - sb * q_prev[i];
      b += lambda[i] * r[i] * r[i];
    }
    if (!(b > 0.0)) return false;
    out.b[k + 1] = b;
    const double inv = 1.0 / std::sqrt(b);
    for (std::size_t i = 0; i < m; ++i) {
      q_prev[i] = q[i];
      q[i] = r[i] * inv;
    }
  }
  return true;
}

}  // namespace

RecurrenceTable recurrence_table(const ModifiedJacobiWeight& w, int N) {
  if (N < 1) throw DomainError("recurrence_table: N must be >= 1");
  const int base = std::max(2 * N + 64, 200);
  RecurrenceTable table;
  for (int size = base; size <= 4 * base; size *= 2) {
    const QuadratureRule rule = gauss_jacobi_rule(size, w.alpha(), w.beta());
    if (stieltjes(rule, w.h(), N, table)) {
      return table;
    }
  }
  throw NumericalError("recurrence_table: nonpositive b_k even with a " +
                       std::to_string(4 * base) + "-point rule");
}

OrthonormalValues eval_orthonormal(const RecurrenceTable& table, int n, double x) {
  if (n < 0 || n >= table.N) throw DomainError("eval_orthonormal: degree out of table range");
  OrthonormalValues out;
  out.values.resize(n + 1);
  out.derivatives.resize(n + 1);
  out.values[0] = 1.0 / std::sqrt(table.mass());
  out.derivatives[0] = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sb_next = std::sqrt(table.b[k + 1]);
    const double sb = k == 0 ? 0.0 : std::sqrt(table.b[k]);
    const double p_prev = k == 0 ? 0.0 : out.values[k - 1];
    const double dp_prev = k == 0 ? 0.0 : out.derivatives[k - 1];
    out.values[k + 1] = ((x - table.a[k]) * out.values[k] - sb * p_prev) / sb_next;
    out.derivatives[k + 1] =
        (out.values[k] + (x - table.a[k]) * out.derivatives[k] - sb * dp_prev) / sb_next;
  }
  return out;
}

namespace {

// x - a_k is formed as (shift - a_k) - t so that points near x = shift keep
// their exact separation in t.
OrthonormalPair pair_at(const RecurrenceTable& table, int n, double shift, double t) {
  if (n < 1 || n >= table.N) throw DomainError("orthonormal_pair: degree out of table range");
  double p_prev = 0.0;
  double dp_prev = 0.0;
  double p = 1.0 / std::sqrt(table.mass());
  double dp = 0.0;
  double sb = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sb_next = std::sqrt(table.b[k + 1]);
    const double d = (shift - table.a[k]) - t;
    const double p_next = (d * p - sb * p_prev) / sb_next;
    const double dp_next = (p + d * dp - sb * dp_prev) / sb_next;
    p_prev = p;
    dp_prev = dp;
    p = p_next;
    dp = dp_next;
    sb = sb_next;
  }
  return {p_prev, p, dp_prev, dp};
}

}  // namespace

OrthonormalPair orthonormal_pair(const RecurrenceTable& table, int n, double x) {
  return pair_at(table, n, x, 0.0);
}

OrthonormalPair orthonormal_pair_near_one(const RecurrenceTable& table, int n, double t) {
  return pair_at(table, n, 1.0, t);
}

double scaled_monic_value(const RecurrenceTable& table, int n, double x) {
  const double p = n == 0 ? 1.0 / std::sqrt(table.mass()) : orthonormal_pair(table, n, x).p;
  return p * std::exp(n * std::numbers::ln2 - table.log_leading_coefficient(n));
}

}  // namespace mjue
