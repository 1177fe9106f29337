#pragma once

#include <span>

#include "mjue/linalg.hpp"
#include "mjue/orthopoly.hpp"

namespace mjue {

/// A weight, its recurrence table and the kernel size n. The table always
/// holds N = n + 1 entries so that p_n is available for the
/// Christoffel-Darboux form.
class KernelContext {
 public:
  KernelContext(ModifiedJacobiWeight weight, int n);
  KernelContext(ModifiedJacobiWeight weight, RecurrenceTable table, int n);

  const ModifiedJacobiWeight& weight() const { return weight_; }
  const RecurrenceTable& table() const { return table_; }
  int n() const { return n_; }

 private:
  ModifiedJacobiWeight weight_;
  RecurrenceTable table_;
  int n_;
};

/// Relative gap |u-v| < kDiagonalSplit (u+v) below which the Bessel and edge
/// kernels switch to their divided-difference diagonal forms.
inline constexpr double kDiagonalSplit = 1e-4;

/// K_n(x,y) = sqrt(w(x) w(y)) sum_{j<n} p_j(x) p_j(y).
double kernel_sum(const KernelContext& ctx, double x, double y);

/// K_n(x,y) through the Christoffel-Darboux quotient; points with
/// |x-y| < 1e-8 (1+|x|) use the confluent form at their midpoint.
double kernel_cd(const KernelContext& ctx, double x, double y);

/// (1/(n xi(x))) K_n(x + u/(n xi(x)), x + v/(n xi(x))). Shifted arguments
/// outside (-1,1) raise DomainError.
double scaled_bulk(const KernelContext& ctx, double x, double u, double v);

/// D_n(u,v) = (1/(2n^2)) K_n(1 - u/(2n^2), 1 - v/(2n^2)) for u, v in (0, 4n^2).
double scaled_edge(const KernelContext& ctx, double u, double v);

/// D_n(u,v) / (u v)^{alpha/2}, finite as u or v tends to 0.
double scaled_edge_reduced(const KernelContext& ctx, double u, double v);

/// Matrix of scaled_edge_reduced over all node pairs; the polynomials are
/// evaluated once per node.
Matrix scaled_edge_reduced_matrix(const KernelContext& ctx, std::span<const double> nodes);

/// sin(pi(u-v)) / (pi(u-v)).
double sine_kernel(double u, double v);

/// Bessel kernel J_alpha(u,v). Off the diagonal band the direct quotient is
/// used, inside it the divided difference of the entire functions
/// u^{-alpha/2} J_alpha(sqrt u) and u^{-alpha/2} sqrt(u) J'_alpha(sqrt u).
double bessel_kernel(double alpha, double u, double v);

/// J_alpha(u,v) / (u v)^{alpha/2}; defined for u, v >= 0.
double bessel_kernel_reduced(double alpha, double u, double v);

Matrix bessel_kernel_reduced_matrix(double alpha, std::span<const double> nodes);

}  // namespace mjue
