#include "mjue/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "mjue/errors.hpp"

namespace mjue {

ChebSeries::ChebSeries(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double ChebSeries::operator()(double x) const {
  // Clenshaw
  double b1 = 0.0;
  double b2 = 0.0;
  const double two_x = 2.0 * x;
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    const double b0 = coeffs_[k] + two_x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + x * b1 - b2;
}

bool ChebSeries::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (coeffs_[k] != 0.0) return false;
  }
  return true;
}

ChebSeries cheb_fit(const std::function<double(double)>& f, double tol, std::size_t max_degree) {
  for (std::size_t n = 16; n <= max_degree; n *= 2) {
    // Values at the first-kind points x_j = cos(pi (j + 1/2) / n).
    std::vector<double> values(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = std::cos(std::numbers::pi * (j + 0.5) / static_cast<double>(n));
      values[j] = f(x);
      if (!std::isfinite(values[j])) {
        throw NumericalError("cheb_fit: function not finite at x = " + std::to_string(x));
      }
    }
    // Discrete cosine transform through a table of cos(pi m / (2n)).
    std::vector<double> table(4 * n);
    for (std::size_t m = 0; m < 4 * n; ++m) {
      table[m] = std::cos(std::numbers::pi * static_cast<double>(m) / (2.0 * n));
    }
    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += values[j] * table[(k * (2 * j + 1)) % (4 * n)];
      c[k] = (k == 0 ? 1.0 : 2.0) * s / static_cast<double>(n);
    }
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0) return ChebSeries({0.0, 0.0});

    const std::size_t tail = std::max<std::size_t>(4, n / 8);
    bool converged = true;
    for (std::size_t k = n - tail; k < n; ++k) {
      if (std::abs(c[k]) >= tol * cmax) {
        converged = false;
        break;
      }
    }
    if (!converged) continue;

    // Keep through the last significant coefficient plus one negligible one.
    std::size_t last = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(c[k]) >= tol * cmax) last = k;
    }
    c.resize(std::min(n, last + 2));
    for (double& v : c) {
      if (std::abs(v) < 1e-3 * tol * cmax) v = 0.0;
    }
    return ChebSeries(std::move(c));
  }
  throw NumericalError("cheb_fit: no convergence below degree " + std::to_string(max_degree) +
                       "; function is not smooth enough");
}

ChebSeries parse_cheb_series(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("Chebyshev series: invalid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) {
    throw ConfigError("Chebyshev series: expected a non-empty JSON array of numbers");
  }
  std::vector<double> c;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError("Chebyshev series: non-numeric coefficient");
    c.push_back(v.get<double>());
  }
  return ChebSeries(std::move(c));
}

std::string format_cheb_series(const ChebSeries& series) {
  nlohmann::json j = nlohmann::json::array();
  for (double v : series.coefficients()) j.push_back(v);
  return j.dump();
}

ChebSeries read_cheb_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open Chebyshev series file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cheb_series(ss.str());
}

void write_cheb_series(const ChebSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write Chebyshev series file '" + path + "'");
  out << format_cheb_series(series) << '\n';
}

}  // namespace mjue
