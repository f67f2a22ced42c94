#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "brannan/coeffs.hpp"
#include "test_util.hpp"

using namespace brannan;
using namespace brannan::coeffs;

TEST_CASE("a_n: closed forms") {
  // alpha = 0 leaves (1-z)^(-beta) alone: A_n = (beta)_n / n!.
  for (double beta : {0.0, 0.3, 1.0}) {
    const cplx got = a_n(0.0, beta, cplx(0.4, 0.2), 7);
    const double want = specfun::pochhammer(beta, 7) / 5040.0;
    CHECK(std::abs(got - want) < 1e-14);
  }
  // First-order coefficient by hand: A_1 = beta + alpha omega.
  const cplx w = std::polar(1.0, 1.1);
  CHECK(std::abs(a_n(0.37, 0.81, w, 1) - (0.81 + 0.37 * w)) < 1e-15);
  // At beta = 0 only the k = n term survives.
  const cplx g0 = a_n(0.6, 0.0, w, 5);
  CHECK(std::abs(g0 - specfun::binom_alpha(0.6, 5) * std::pow(w, 5)) < 1e-15);
}

TEST_CASE("a_n at omega = -1 matches the gamma-ratio closed form") {
  // A_n(alpha, beta, -1) = Gamma(n - alpha + beta) / (Gamma(beta - alpha) n!).
  TestRng rng;
  for (int i = 0; i < 50; ++i) {
    const double alpha = rng.uniform(0.02, 0.98);
    const double beta = std::min(0.99, alpha + rng.uniform(0.01, 0.5));
    const int n = 1 + static_cast<int>(rng.uniform(0.0, 12.0));
    const cplx got = a_n(alpha, beta, cplx(-1.0, 0.0), n);
    double nfact = 1.0;
    for (int k = 2; k <= n; ++k) nfact *= k;
    const double want = specfun::gamma(n - alpha + beta) / (specfun::gamma(beta - alpha) * nfact);
    CHECK(std::abs(got - want) < 1e-11 * std::max(1.0, std::fabs(want)));
    CHECK(std::fabs(got.imag()) < 1e-14);
  }
  // alpha > beta exercises the reflection branch of gamma on (-1, 0).
  const cplx g = a_n(0.8, 0.3, cplx(-1.0, 0.0), 6);
  const double want = specfun::gamma(6.0 - 0.8 + 0.3) / (specfun::gamma(-0.5) * 720.0);
  CHECK(rel_err(g.real(), want) < 1e-11);
}

TEST_CASE("a_n and a_n_via_2f1 agree on random samples") {
  TestRng rng;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double alpha = rng.uniform(0.01, 1.0);
    const double beta = rng.uniform(0.01, 1.0);
    const double theta = rng.uniform(0.0, kPi);
    const int n = 1 + static_cast<int>(rng.uniform(0.0, 21.0));
    const cplx omega = std::polar(1.0, theta);
    const cplx v1 = a_n(alpha, beta, omega, n);
    const cplx v2 = a_n_via_2f1(alpha, beta, omega, n);
    worst = std::max(worst, std::abs(v1 - v2) / std::max(1e-30, std::abs(v1)));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("a_n_via_2f1: degenerate arguments") {
  CHECK(std::abs(a_n_via_2f1(0.4, 0.6, cplx(0.0, 0.0), 9) -
                 specfun::pochhammer(0.6, 9) / 362880.0) < 1e-15);
  CHECK_THROWS_AS(a_n_via_2f1(0.4, 0.0, cplx(1.0, 0.0), 3), domain_error);
  const cplx v = a_n_via_2f1(0.5, 0.5, cplx(1.0, 0.0), 3);
  CHECK(v.real() > 0.0);
  CHECK(std::fabs(v.imag()) < 1e-15);
}

TEST_CASE("w_n limits at alpha = 0 and alpha = 1 are continuous") {
  const cplx x = std::polar(1.0, 2.2);
  for (double beta : {0.2, 0.7, 1.0}) {
    for (int n : {2, 5, 9}) {
      const cplx lim0 = w_n(0.0, beta, x, n);
      const cplx near0 = w_n(1e-7, beta, x, n);
      CHECK(std::abs(lim0 - near0) < 1e-5 * std::max(1.0, std::abs(lim0)));
      const cplx lim1 = w_n(1.0, beta, x, n);
      const cplx near1 = w_n(1.0 - 1e-7, beta, x, n);
      CHECK(std::abs(lim1 - near1) < 1e-5 * std::max(1.0, std::abs(lim1)));
    }
  }
}

TEST_CASE("representation identity: A_n from w_n") {
  TestRng rng;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double alpha = rng.uniform(0.02, 0.98);
    const double beta = rng.uniform(0.02, 0.98);
    const double theta = rng.uniform(0.0, kPi - 0.05);
    const int n = 1 + static_cast<int>(rng.uniform(0.0, 15.0));
    const cplx omega = std::polar(1.0, theta);
    const cplx lhs = a_n(alpha, beta, omega, n);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    const cplx rhs = sign / kPi * std::pow(omega, n) * w_n(alpha, beta, -1.0 / omega, n);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-30, std::abs(lhs)));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("w_n_laplace matches the terminating sum") {
  // Interior point, complex x on the unit circle.
  {
    const cplx x = std::polar(1.0, 2.0);
    const cplx direct = w_n(0.3, 0.7, x, 5);
    const cplx lap = w_n_laplace(0.3, 0.7, x, 5);
    CHECK(std::abs(lap - direct) <= 1e-9 * std::abs(direct));
  }
  // beta = 1 goes through the exact limit of the first term.
  {
    const cplx direct = w_n(0.5, 1.0, cplx(-1.0, 0.0), 5);
    const cplx lap = w_n_laplace(0.5, 1.0, cplx(-1.0, 0.0), 5);
    CHECK(std::abs(lap - direct) <= 1e-8 * std::abs(direct));
  }
  // n = 1 closed form: w_1(alpha, 1, x) = pi (alpha - x).
  {
    const cplx lap = w_n_laplace(0.5, 1.0, cplx(-1.0, 0.0), 1);
    CHECK(std::abs(lap - cplx(1.5 * kPi, 0.0)) < 1e-8);
  }
  // alpha = 0 edge against the (1-z)^(-beta) closed form.
  {
    const cplx want = -kPi * specfun::pochhammer(0.5, 3) / 6.0 * std::pow(cplx(-1.0, 0.0), 3);
    const cplx lap = w_n_laplace(0.0, 0.5, cplx(-1.0, 0.0), 3);
    CHECK(std::abs(lap - want) < 1e-9 * std::abs(want));
  }
  CHECK_THROWS_AS(w_n_laplace(0.3, 0.4, cplx(0.5, 0.0), 5), domain_error);
}

TEST_CASE("conjugate symmetry of a_n") {
  TestRng rng;
  for (int i = 0; i < 60; ++i) {
    const double alpha = rng.uniform(0.0, 1.0);
    const double beta = rng.uniform(0.0, 1.0);
    const double theta = rng.uniform(0.0, kPi);
    const int n = 1 + static_cast<int>(rng.uniform(0.0, 14.0));
    const cplx w = std::polar(1.0, theta);
    const cplx direct = a_n(alpha, beta, std::conj(w), n);
    const cplx reflected = std::conj(a_n(alpha, beta, w, n));
    CHECK(std::abs(direct - reflected) <= 1e-14 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("positivity of A_n at omega = 1 for odd n") {
  for (int n = 3; n <= 21; n += 2) {
    for (double alpha : {0.05, 0.4, 0.95}) {
      for (double beta : {0.05, 0.5, 1.0}) {
        const cplx v = a_n(alpha, beta, cplx(1.0, 0.0), n);
        CHECK(v.imag() == 0.0);
        CHECK(v.real() > 0.0);
      }
    }
  }
}

TEST_CASE("brannan margin basics") {
  CHECK(std::fabs(brannan_margin(0.4, 0.7, 0.0, 5)) < 1e-14);
  CHECK(brannan_margin(0.5, 0.5, 2.0, 3) >= 0.0);
  // theta = pi with alpha <= beta: margin equals twice the odd-k coefficient sum.
  for (double alpha : {0.2, 0.5}) {
    for (double beta : {0.5, 0.9}) {
      if (alpha > beta) continue;
      for (int n : {4, 7}) {
        const double m = brannan_margin(alpha, beta, kPi, n);
        double sum = 0.0;
        for (int k = 1; k <= n; k += 2) {
          sum += specfun::binom_alpha(alpha, k) * specfun::pochhammer(beta, n - k) /
                 specfun::gamma(n - k + 1.0);
        }
        CHECK(rel_err(m, 2.0 * sum) < 1e-12);
        CHECK(m > 0.0);
      }
    }
  }
}

TEST_CASE("omega point reduction") {
  OmegaPoint p{0.75};
  CHECK(p.phi() == Catch::Approx(kPi - 0.75).epsilon(1e-15));
  OmegaPoint m{-0.75};
  CHECK(m.phi() == Catch::Approx(kPi - 0.75).epsilon(1e-15));
  OmegaPoint z{0.0};
  CHECK(z.phi() == Catch::Approx(kPi).epsilon(1e-15));
  CHECK(std::abs(p.omega() - std::polar(1.0, 0.75)) < 1e-16);
}
