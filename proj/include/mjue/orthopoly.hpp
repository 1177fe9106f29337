#pragma once

#include <string_view>
#include <vector>

#include "mjue/chebyshev.hpp"

namespace mjue {

inline constexpr double kWeightPositivityFloor = 1e-8;

/// w(x) = (1-x)^alpha (1+x)^beta h(x) on (-1,1) with h given as a Chebyshev
/// series. Construction rejects alpha or beta <= -1 and any h that drops
/// below `floor` on a 1001-point Chebyshev grid.
class ModifiedJacobiWeight {
 public:
  ModifiedJacobiWeight(double alpha, double beta, ChebSeries h,
                       double floor = kWeightPositivityFloor);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const ChebSeries& h() const { return h_; }

  /// True when alpha == beta and h is even, so the weight is symmetric.
  bool is_symmetric() const { return alpha_ == beta_ && h_.is_even(); }

  /// Weight from explicitly supplied 1-x and 1+x, for points so close to an
  /// endpoint that forming 1-x from x would lose digits.
  double evaluate_split(double x, double one_minus_x, double one_plus_x) const;

 private:
  double alpha_;
  double beta_;
  ChebSeries h_;
};

/// (1-x)^alpha (1+x)^beta h(x). Throws DomainError for |x| >= 1.
double weight_eval(const ModifiedJacobiWeight& w, double x);

/// Builtin analytic factors: "one" (h = 1), "exp" (h = e^x), "runge" (h = 1 + x^2/4).
ChebSeries builtin_h(std::string_view name);

/// Three-term recurrence x p_k = sqrt(b[k+1]) p_{k+1} + a[k] p_k + sqrt(b[k]) p_{k-1}
/// of the orthonormal family, with b[0] the total mass of the weight.
struct RecurrenceTable {
  int N = 0;
  std::vector<double> a;  // a[0..N-1]
  std::vector<double> b;  // b[0] = mass, b[1..N-1] > 0

  double mass() const { return b.front(); }
  /// log of the leading coefficient gamma_n = (mass b_1 ... b_n)^(-1/2).
  double log_leading_coefficient(int n) const;
};

/// Discretized Stieltjes procedure over a Gauss-Jacobi rule of size
/// max(2N+64, 200) carrying h at the nodes. The rule is doubled (up to 4x)
/// when a computed b_k is not positive; NumericalError after that.
RecurrenceTable recurrence_table(const ModifiedJacobiWeight& w, int N);

struct OrthonormalValues {
  std::vector<double> values;       // p_0(x) .. p_n(x)
  std::vector<double> derivatives;  // p'_0(x) .. p'_n(x)
};

/// p_k and p'_k for k <= n by the orthonormal recurrence run in lockstep with
/// its derivative. Requires n < table.N.
OrthonormalValues eval_orthonormal(const RecurrenceTable& table, int n, double x);

/// p_{n-1}, p_n and their derivatives without storing the lower degrees.
struct OrthonormalPair {
  double p_prev = 0.0;
  double p = 0.0;
  double dp_prev = 0.0;
  double dp = 0.0;
};
OrthonormalPair orthonormal_pair(const RecurrenceTable& table, int n, double x);
/// Same at x = 1 - t; differences in t are not lost to rounding of x.
OrthonormalPair orthonormal_pair_near_one(const RecurrenceTable& table, int n, double t);

/// 2^n pi_n(x) for the monic polynomial pi_n = p_n / gamma_n.
double scaled_monic_value(const RecurrenceTable& table, int n, double x);

}  // namespace mjue
