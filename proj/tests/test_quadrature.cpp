#include "test_util.hpp"

using namespace cylrep;

TEST(Integrate, Constant) {
  const auto q = integrate([](double) { return cplx(1.0, 0.0); }, 0.0, kPi);
  EXPECT_TRUE(q.converged);
  EXPECT_CLOSE(q.value, kPi, 1e-14);
}

TEST(Integrate, OnePlusCosine) {
  const auto q = integrate([](double t) { return cplx(1.0 + std::cos(t), 0.0); }, 0.0, kPi);
  EXPECT_CLOSE(q.value, kPi, 1e-14);
  EXPECT_CLOSE(closed_form_cosine_integral(1.0, 0.0), kPi, 1e-14);
}

// (cos t)^<Re mu> (1 + cos t)^{mu} cos(mu t) on [0, pi] integrates to pi / 2^mu.
TEST(Integrate, CMuExample) {
  const double mu = 1.3;
  const auto q = integrate_graded(
      [&](double s) {
        const double t = kPi - s;
        return cplx(std::cos(t) * std::pow(2.0 * std::sin(0.5 * s) * std::sin(0.5 * s), 0.3) * std::cos(mu * t), 0.0);
      },
      kPi, 0.6);
  EXPECT_TRUE(q.converged);
  EXPECT_CLOSE(q.value, kPi / std::pow(2.0, mu), 1e-10);
}

TEST(Integrate, NonFiniteSampleReportsAbscissa) {
  try {
    integrate([](double t) { return cplx(1.0 / (t - 1.0), 0.0); }, 0.0, 2.0);
    FAIL() << "expected QuadratureSampleError";
  } catch (const QuadratureSampleError& e) {
    EXPECT_EQ(e.abscissa(), 1.0);
  }
}

TEST(ClosedFormCosine, Examples) {
  EXPECT_CLOSE(closed_form_cosine_integral(0.0, 0.0), kPi, 1e-15);
  EXPECT_CLOSE(closed_form_cosine_integral(1.0, 1.0), kPi / 2.0, 1e-15);
  const cplx expect(-0.33824821624882538, 0.0);
  EXPECT_CLOSE(closed_form_cosine_integral(0.25, 1.6), expect, 1e-13);
  const auto q = integrate([](double t) { return cplx(std::pow(1.0 + std::cos(t), 0.25) * std::cos(1.6 * t), 0.0); },
                           0.0, kPi);
  EXPECT_CLOSE(q.value, closed_form_cosine_integral(0.25, 1.6), 1e-10);
  EXPECT_THROW(closed_form_cosine_integral(-0.5, 0.0), DomainError);
}

// int_0^pi cos(mu t) / (1 + cos t)^frac dt, integrated in s = pi - t.
static QuadratureResult negative_power_quadrature(cplx mu, cplx frac, Tolerances tol = {}) {
  return integrate_power(
      [&](double s) { return std::cos(mu * (kPi - s)) * std::exp(-frac * std::log(one_minus_cos_over_square(s))); },
      kPi, -2.0 * frac, tol);
}

TEST(ClosedFormNegativePower, Examples) {
  EXPECT_CLOSE(closed_form_negative_power_integral(0.0, 0.0), kPi, 1e-15);
  EXPECT_CLOSE(negative_power_quadrature(0.3, 0.3).value, closed_form_negative_power_integral(0.3, 0.3), 1e-9);
  const cplx mu(1.0, 1.0);
  const cplx exact = closed_form_negative_power_integral(mu, 0.49);
  EXPECT_TRUE(is_finite(exact));
  EXPECT_CLOSE(negative_power_quadrature(mu, 0.49).value, exact, 1e-6);
  EXPECT_THROW(closed_form_negative_power_integral(0.0, 0.5), DomainError);
}

TEST(LogKernel, Examples) {
  EXPECT_NEAR(std::abs(log_kernel_integral(cplx(0.0, 2.0))), 0.0, 1e-15);
  EXPECT_CLOSE(log_kernel_integral(2.0), cplx(0.0, -kPi * kPi / 2.0), 1e-15);
  const cplx z(1.0, 1.0);
  const auto q = integrate_graded(
      [&](double s) {
        const double one_plus_cos = 2.0 * std::sin(0.5 * s) * std::sin(0.5 * s);
        return std::log(-kI * z * one_plus_cos);
      },
      kPi, 0.0);
  EXPECT_CLOSE(q.value, log_kernel_integral(z), 1e-10);
  EXPECT_THROW(log_kernel_integral(-1.0), DomainError);
}

TEST(PowerKernel, MatchesQuadrature) {
  for (int k = 0; k <= 6; ++k) {
    const auto q = integrate([&](double t) { return cplx(std::pow(1.0 + std::cos(t), k), 0.0); }, 0.0, kPi);
    EXPECT_CLOSE(q.value, power_kernel_integral(k), 1e-12);
  }
}

TEST(QuadratureProperty, HaltsWithinNodeBudget) {
  Tolerances tol;
  tol.max_nodes = 120;
  tol.abs_tol = 1e-15;
  tol.rel_tol = 0.0;
  const auto q = integrate([](double t) { return cplx(std::sin(200.0 * t) * std::exp(t), 0.0); }, 0.0, kPi, tol);
  EXPECT_LE(q.nodes_used, tol.max_nodes);
  EXPECT_FALSE(q.converged);
  EXPECT_TRUE(is_finite(q.value));
}

TEST(QuadratureProperty, ConvergedMeansWithinTolerance) {
  for (int i = 0; i < 200; ++i) {
    const double a = test::uniform(0.0, 8.0), b = test::uniform(-3.0, 3.0);
    const auto q = integrate([&](double t) { return std::exp(cplx(b, a) * std::cos(t)) * std::cos(a * t); }, 0.0, kPi);
    if (q.converged) {
      EXPECT_LE(q.error_estimate, std::max(1e-12, 1e-10 * std::abs(q.value)));
    } else {
      EXPECT_TRUE(q.roundoff_limited);
    }
  }
}

TEST(QuadratureProperty, Linearity) {
  for (int i = 0; i < 100; ++i) {
    const double a = test::uniform(0.1, 6.0), b = test::uniform(0.1, 6.0);
    auto f = [&](double t) { return std::exp(kI * a * std::cos(t)); };
    auto g = [&](double t) { return cplx(std::cos(b * t) / (1.5 + std::sin(t)), 0.0); };
    const auto qf = integrate(f, 0.0, kPi), qg = integrate(g, 0.0, kPi);
    const auto qs = integrate([&](double t) { return f(t) + g(t); }, 0.0, kPi);
    const double slack = 2.0 * (qf.error_estimate + qg.error_estimate + qs.error_estimate) + 1e-14;
    EXPECT_LE(std::abs(qs.value - qf.value - qg.value), slack);
  }
}

TEST(QuadratureProperty, ClosedFormsOnRandomDraws) {
  for (int i = 0; i < 100; ++i) {
    const cplx a(test::uniform(-0.2, 3.0), test::uniform(-1.0, 1.0));
    const cplx b(test::uniform(-3.0, 3.0), test::uniform(-1.0, 1.0));
    const auto q = integrate_graded(
        [&](double s) {
          const double one_plus_cos = 2.0 * std::sin(0.5 * s) * std::sin(0.5 * s);
          return std::exp(a * std::log(one_plus_cos)) * std::cos(b * (kPi - s));
        },
        kPi, 2.0 * a.real());
    EXPECT_CLOSE(q.value, closed_form_cosine_integral(a, b), 1e-9) << "a=" << a << " b=" << b;
  }
  for (int i = 0; i < 100; ++i) {
    const cplx frac(test::uniform(-0.4, 0.4), test::uniform(-0.5, 0.5));
    const cplx mu(test::uniform(-3.0, 3.0), test::uniform(-1.0, 1.0));
    EXPECT_CLOSE(negative_power_quadrature(mu, frac).value, closed_form_negative_power_integral(mu, frac), 1e-9)
        << "mu=" << mu << " frac=" << frac;
  }
}

TEST(QuadratureProperty, GradingPowerKeepsIntegrandBounded) {
  for (double alpha : {-0.98, -0.6, -0.2, 0.0, 0.4, 0.99, 1.0, 3.0}) {
    const int p = grading_power(alpha);
    const double exponent = p * (alpha + 1.0) - 1.0;
    EXPECT_GE(exponent, 0.0);
    if (2.0 / (1.0 + alpha) <= 64.0) {
      EXPECT_GE(exponent, std::min(alpha, 1.0) - 1e-12);
    }
  }
}

TEST(IntegratePower, MatchesClosedFormNearMinusOne) {
  // int_0^1 t^alpha e^t dt against its series sum_k 1 / (k! (alpha + k + 1)).
  for (cplx alpha : {cplx(-0.999, 0.0), cplx(-0.98, 0.3), cplx(-0.5, 0.0), cplx(0.0, 6.0), cplx(0.3, -2.0),
                     cplx(2.5, 0.0)}) {
    cplx expect{};
    double fact = 1.0;
    for (int k = 0; k < 40; ++k) {
      if (k > 0) fact *= k;
      expect += 1.0 / (fact * (alpha + static_cast<double>(k) + 1.0));
    }
    const auto q = integrate_power([](double t) { return cplx(std::exp(t), 0.0); }, 1.0, alpha);
    EXPECT_TRUE(q.converged || q.roundoff_limited) << alpha;
    EXPECT_CLOSE(q.value, expect, 1e-10) << alpha;
  }
}

TEST(IntegratePower, RejectsNonIntegrablePower) {
  EXPECT_THROW(integrate_power([](double) { return cplx(1.0, 0.0); }, 1.0, -1.0), DomainError);
}

TEST(OneMinusCos, UnderflowFreeForms) {
  for (double t : {1e-300, 1e-160, 1e-8, 0.5, 3.0}) {
    EXPECT_NEAR(log_one_minus_cos(t), 2.0 * std::log(t) + std::log(one_minus_cos_over_square(t)), 1e-12 * std::abs(std::log(t)) + 1e-15)
        << t;
  }
  EXPECT_EQ(one_minus_cos_over_square(0.0), 0.5);
  EXPECT_TRUE(std::isfinite(log_one_minus_cos(1e-300)));
}
