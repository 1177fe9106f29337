#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "mjue/errors.hpp"
#include "mjue/linalg.hpp"
#include "mjue/quadrature.hpp"

using namespace mjue;

TEST_SUITE("quadrature") {
  TEST_CASE("small Legendre rules") {
    const QuadratureRule r1 = gauss_legendre_rule(1);
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1.nodes[0]) <= 1e-16);
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const QuadratureRule r2 = gauss_legendre_rule(2);
    CHECK(std::abs(r2.nodes[0] + 0.5773502691896258) <= 1e-15);
    CHECK(std::abs(r2.nodes[1] - 0.5773502691896258) <= 1e-15);
    CHECK(std::abs(r2.weights[0] - 1.0) <= 1e-15);
    CHECK(std::abs(r2.weights[1] - 1.0) <= 1e-15);
    CHECK(integrate(r2, [](double x) { return x * x; }) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }

  TEST_CASE("Legendre exactness up to degree 2m-1") {
    for (int m : {1, 3, 8, 20, 64}) {
      const QuadratureRule r = gauss_legendre_rule(m, 0.5, 3.0);
      for (int d = 0; d <= 2 * m - 1; ++d) {
        const double exact = (std::pow(3.0, d + 1) - std::pow(0.5, d + 1)) / (d + 1);
        const double got = integrate(r, [d](double x) { return std::pow(x, d); });
        CAPTURE(m);
        CAPTURE(d);
        CHECK(std::abs(got - exact) <= 1e-13 * exact);
      }
    }
    const QuadratureRule r8 = gauss_legendre_rule(8);
    CHECK(std::abs(integrate(r8, [](double x) { return std::pow(x, 15); })) <= 1e-14);
    CHECK(integrate(gauss_legendre_rule(1, 0.0, 2.0), [](double) { return 1.0; }) ==
          doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("Jacobi masses") {
    CHECK(gauss_jacobi_rule(1, 0.0, 0.0).nodes[0] == doctest::Approx(0.0));
    for (int m : {1, 4, 17}) {
      CHECK(gauss_jacobi_rule(m, 0.5, 0.5).mass() ==
            doctest::Approx(std::numbers::pi / 2).epsilon(1e-13));
      CHECK(gauss_jacobi_rule(m, -0.5, -0.5).mass() ==
            doctest::Approx(std::numbers::pi).epsilon(1e-13));
    }
    CHECK(integrate(gauss_jacobi_rule(3, -0.5, -0.5), [](double) { return 1.0; }) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-14));
  }

  TEST_CASE("Jacobi exactness against Beta integrals") {
    // int (1-x)^a (1+x)^b x^2 dx through the moments of (1-x) and (1+x)
    for (auto [a, b] : {std::pair{0.3, -0.4}, {-0.5, 2.0}, {1.0, 1.0}, {-0.9, -0.9}}) {
      const QuadratureRule r = gauss_jacobi_rule(6, a, b);
      auto beta_int = [](double p, double q) {
        return std::pow(2.0, p + q + 1) * std::tgamma(p + 1) * std::tgamma(q + 1) /
               std::tgamma(p + q + 2);
      };
      // (1+x)^2 = x^2 + 2x + 1 and (1-x)(1+x) = 1 - x^2 give x^2 moments
      const double m_x2 = beta_int(a, b) - beta_int(a + 1, b + 1);
      const double got = integrate(r, [](double x) { return x * x; });
      CAPTURE(a);
      CAPTURE(b);
      CHECK(std::abs(got - m_x2) <= 1e-13 * std::abs(m_x2));
      CHECK(std::abs(r.mass() - beta_int(a, b)) <= 1e-13 * beta_int(a, b));
      CHECK(std::abs(jacobi_mass(a, b) - beta_int(a, b)) <= 1e-14 * beta_int(a, b));
    }
  }

  TEST_CASE("nodes are increasing, interior, weights positive") {
    for (auto [a, b] : {std::pair{0.0, 0.0}, {-0.5, -0.5}, {0.3, -0.4}, {2.0, -0.9}}) {
      const QuadratureRule r = gauss_jacobi_rule(300, a, b);
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        CHECK(r.nodes[i] > -1.0);
        CHECK(r.nodes[i] < 1.0);
        if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
      }
    }
  }

  TEST_CASE("symmetric Jacobi nodes are symmetric") {
    const QuadratureRule r = gauss_jacobi_rule(101, 0.7, 0.7);
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(std::abs(r.nodes[i] + r.nodes[r.size() - 1 - i]) <= 1e-13);
    }
  }

  TEST_CASE("doubling converges geometrically for smooth integrands") {
    auto f = [](double x) { return std::exp(x) * std::cos(3 * x); };
    std::vector<double> d;
    double prev = integrate(gauss_jacobi_rule(4, 0.3, -0.4), f);
    for (int m : {8, 16, 32}) {
      const double cur = integrate(gauss_jacobi_rule(m, 0.3, -0.4), f);
      d.push_back(std::abs(cur - prev));
      prev = cur;
    }
    CHECK(d[1] < 1e-3 * d[0]);
    CHECK(d[2] <= 1e-13);
  }

  TEST_CASE("shifted Jacobi rule on (0,s)") {
    const double s = 3.0;
    for (double a : {-0.5, 0.0, 0.3, 2.0}) {
      const QuadratureRule r = gauss_jacobi_shifted_rule(20, a, s);
      CHECK(r.mass() == doctest::Approx(std::pow(s, a + 1) / (a + 1)).epsilon(1e-13));
      const double m3 = integrate(r, [](double u) { return u * u * u; });
      CHECK(m3 == doctest::Approx(std::pow(s, a + 4) / (a + 4)).epsilon(1e-13));
      CHECK(r.nodes.front() > 0.0);
      CHECK(r.nodes.back() < s);
    }
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(gauss_legendre_rule(3, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(gauss_legendre_rule(0), DomainError);
    CHECK_THROWS_AS(gauss_jacobi_rule(3, -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate(gauss_legendre_rule(3), [](double) { return NAN; }), NumericalError);
  }

  TEST_CASE("Jacobi recurrence closed form") {
    const JacobiCoefficients c = jacobi_recurrence(0.0, 0.0, 5);
    CHECK(c.b[0] == doctest::Approx(2.0));
    for (int k = 1; k < 5; ++k) {
      CHECK(std::abs(c.a[k]) <= 1e-16);
      CHECK(c.b[k] == doctest::Approx(double(k * k) / (4.0 * k * k - 1.0)).epsilon(1e-15));
    }
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("determinant of small matrices") {
    Matrix a(3, 3);
    const double v[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = v[i][j];
    CHECK(determinant(a) == doctest::Approx(4.0).epsilon(1e-15));
    Matrix p(2, 2);
    p(0, 1) = 1.0;
    p(1, 0) = 1.0;
    CHECK(determinant(p) == doctest::Approx(-1.0));
    CHECK(determinant(Matrix(2, 2)) == 0.0);
    CHECK(determinant(Matrix::identity(7)) == 1.0);
  }

  TEST_CASE("Hilbert matrix determinant") {
    // det H_5 = 1 / 266716800000
    Matrix h(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) h(i, j) = 1.0 / (i + j + 1);
    CHECK(determinant(h) == doctest::Approx(1.0 / 266716800000.0).epsilon(1e-9));
  }

  TEST_CASE("tridiagonal eigenvalues of the second difference matrix") {
    const int n = 50;
    std::vector<double> d(n, 2.0);
    std::vector<double> e(n - 1, -1.0);
    const TridiagonalEigen eig = symmetric_tridiagonal_eigen(d, e);
    double norm = 0.0;
    for (int k = 0; k < n; ++k) {
      const double exact = 2.0 - 2.0 * std::cos((k + 1) * std::numbers::pi / (n + 1));
      CHECK(std::abs(eig.values[k] - exact) <= 1e-13);
      norm += eig.first_components[k] * eig.first_components[k];
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("product and trace") {
    Matrix a(2, 3, 1.0);
    Matrix b(3, 2, 2.0);
    const Matrix c = a * b;
    CHECK(c.rows() == 2);
    CHECK(c(1, 1) == 6.0);
    CHECK(trace(c) == 12.0);
  }
}
