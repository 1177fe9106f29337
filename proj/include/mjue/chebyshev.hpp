#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mjue {

/// Finite Chebyshev-T series sum_k c_k T_k(x) on [-1,1].
class ChebSeries {
 public:
  ChebSeries() : coeffs_{0.0} {}
  explicit ChebSeries(std::vector<double> coefficients);

  double operator()(double x) const;

  std::span<const double> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  /// True when every odd coefficient vanishes (an even function).
  bool is_even() const;

  friend bool operator==(const ChebSeries&, const ChebSeries&) = default;

 private:
  std::vector<double> coeffs_;
};

inline constexpr double kChebFitTolerance = 1e-14;
inline constexpr std::size_t kChebFitMaxDegree = 4096;

/// Chebyshev interpolant of f with the degree doubled until the trailing
/// block of coefficients falls below tol * max|c|. Throws NumericalError
/// past max_degree.
ChebSeries cheb_fit(const std::function<double(double)>& f, double tol = kChebFitTolerance,
                    std::size_t max_degree = kChebFitMaxDegree);

/// JSON array of coefficients, c_0 first.
ChebSeries read_cheb_series(const std::string& path);
void write_cheb_series(const ChebSeries& series, const std::string& path);
ChebSeries parse_cheb_series(const std::string& json_text);
std::string format_cheb_series(const ChebSeries& series);

}  // namespace mjue
