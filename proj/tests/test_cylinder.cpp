#include "test_util.hpp"

using namespace cylrep;
using cylrep::test::uniform;

namespace {

const cplx kDiag = std::polar(2.0, kPi / 4.0);

}  // namespace

TEST(BesselJ, RealOrdersAgainstReference) {
  EXPECT_CLOSE(bessel_j(0.7, 2.0).value, cplx(0.56280626436771116, 0.0), 1e-9);
  EXPECT_CLOSE(bessel_j(-1.3, 2.0).value, cplx(-0.54965214124572751, 0.0), 1e-9);
  EXPECT_CLOSE(bessel_j(-2.5, 1.0).value, cplx(2.8763878574621614, 0.0), 1e-9);
}

TEST(BesselJ, ComplexOrdersAgainstReference) {
  EXPECT_CLOSE(bessel_j(cplx(3.0, 3.0), kDiag).value, cplx(-0.013455924118468575, -0.042436689326262758), 1e-9);
  EXPECT_CLOSE(bessel_j(cplx(-2.5, 0.4), std::polar(1.5, -0.4 * kPi)).value,
               cplx(-1.458808261271142, 0.92859489888276626), 1e-9);
}

TEST(BesselJ, HalfIntegerClosedForm) {
  const auto r = bessel_j(0.5, kPi / 2.0);
  EXPECT_NEAR(r.value.real(), 2.0 / kPi, 1e-12);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-14);
  const auto m = bessel_j(-1.5, 1.7);
  EXPECT_EQ(m.trace.rfind("corrective.3", 0), 0u) << m.trace;
  EXPECT_CLOSE(m.value, cplx(-0.5604686157363842, 0.0), 1e-12);
}

TEST(BesselJ, NearHalfIntegerKeepsAccuracy) {
  const std::pair<double, double> cases[] = {{-1.5 + 1e-8, -0.56046862466602524},
                                             {-1.5 - 1e-8, -0.56046860680674279},
                                             {-0.5 + 1e-9, -0.078846325742977806},
                                             {0.5 + 1e-8, 0.6068488094324815}};
  for (const auto& [mu, ref] : cases) {
    const auto r = bessel_j(mu, 1.7);
    EXPECT_CLOSE(r.value, cplx(ref, 0.0), 1e-11) << "mu = " << mu;
    EXPECT_EQ(r.trace, "rep2.0/near-half-integer");
  }
}

TEST(BesselJ, IntegerOrdersUseClassicalPath) {
  EXPECT_EQ(bessel_j(2.0, 1.0).trace, "JI/integer");
  EXPECT_EQ(bessel_j(2.0 + 1e-8, 1.0).trace, "rep2.0/near-integer");
  EXPECT_CLOSE(bessel_j(2.0, 1.0).value, bessel_j(2.0 + 1e-12, 1.0).value, 1e-10);
}

TEST(BesselJ, NegativeIntegerReflection) {
  for (int m = 1; m <= 5; ++m) {
    const cplx z(1.3, -0.4);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    EXPECT_CLOSE(bessel_j(-m, z).value, sign * bessel_j(m, z).value, 1e-12) << "m = " << m;
  }
}

TEST(BesselJ, IntegralPlusCorrectiveIsJ) {
  for (cplx mu : {cplx(-1.3, 0.0), cplx(-2.7, 0.5), cplx(0.4, -1.0), cplx(1.8, 0.2)}) {
    const cplx z(1.1, 0.6);
    const cplx sum = b_integral(mu, z).value + corrective_chi(mu, z).value;
    EXPECT_CLOSE(sum, bessel_j(mu, z).value, 1e-12) << mu;
  }
}

TEST(CorrectiveChi, VanishesForNonNegativeOrders) {
  for (cplx mu : {cplx(0.0, 0.0), cplx(0.3, 0.0), cplx(2.0, 0.0), cplx(1.5, 2.0)})
    EXPECT_EQ(corrective_chi(mu, cplx(1.0, 0.5)).value, cplx(0.0, 0.0)) << mu;
}

TEST(CorrectiveChi, HalfIntegerLimitFromBelow) {
  const cplx at = corrective_chi(-1.5, 1.7).value;
  const cplx below = corrective_chi(-1.5 - 1e-7, 1.7).value;
  EXPECT_LT(std::abs(below - at), 1e-6);
}

TEST(BesselJ, ZeroArgument) {
  EXPECT_EQ(bessel_j(0.0, 0.0).value, cplx(1.0, 0.0));
  EXPECT_EQ(bessel_j(2.0, 0.0).value, cplx(0.0, 0.0));
  EXPECT_EQ(bessel_j(0.5, 0.0).value, cplx(0.0, 0.0));
  EXPECT_THROW(bessel_j(-0.5, 0.0), DomainError);
}

TEST(BesselJ, RejectsCutAndCap) {
  EXPECT_THROW(bessel_j(0.3, -1.0), DomainError);
  EXPECT_THROW(bessel_j(0.3, 40.0), DomainError);
  EXPECT_NO_THROW(bessel_j(2.0, -1.0));
  EvalConfig cfg;
  cfg.max_abs_z = 50.0;
  EXPECT_NO_THROW(bessel_j(0.3, 40.0, cfg));
}

TEST(BesselJ, RandomOrdersMatchSeries) {
  for (int i = 0; i < 40; ++i) {
    const cplx mu(uniform(-4.0, 4.0), uniform(-1.5, 1.5));
    const cplx z = std::polar(uniform(0.2, 4.0), uniform(-2.8, 2.8));
    EXPECT_CLOSE(bessel_j(mu, z).value, oracle::series_j(mu, z).value, 1e-8) << mu << " " << z;
  }
}

TEST(BesselJ, RandomNearHalfIntegerOrdersMatchSeries) {
  for (int i = 0; i < 20; ++i) {
    const double half = std::floor(uniform(-4.0, 3.0)) + 0.5;
    const double delta = std::pow(10.0, uniform(-10.0, -6.5)) * (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const cplx z = std::polar(uniform(0.3, 3.0), uniform(-2.0, 2.0));
    const auto r = bessel_j(half + delta, z);
    EXPECT_CLOSE(r.value, oracle::series_j(half + delta, z).value, 1e-9) << half + delta << " " << z;
  }
}

TEST(BesselI, AgainstReference) {
  EXPECT_CLOSE(bessel_i(-1.7, 0.9).value, cplx(-0.55280048542414617, 0.0), 1e-9);
  EXPECT_CLOSE(bessel_i(cplx(0.4, 0.3), cplx(1.0, -2.0)).value, cplx(0.34499592490962358, -0.82840316788112987),
               1e-9);
  EXPECT_EQ(bessel_i(0.0, 0.0).value, cplx(1.0, 0.0));
}

TEST(BesselY, AgainstReference) {
  EXPECT_CLOSE(bessel_y(0.3, 1.5).value, cplx(0.12573091853294629, 0.0), 1e-8);
  EXPECT_CLOSE(bessel_y(-1.7, 2.2).value, cplx(-0.61034593072399725, 0.0), 1e-8);
  EXPECT_CLOSE(bessel_y(0.0, 1.0).value, cplx(0.088256964215676958, 0.0), 1e-8);
  const cplx y3(-1.2532242050340913, 3.7871279355752493);
  EXPECT_CLOSE(bessel_y(3.0, cplx(1.0, 0.5)).value, y3, 1e-8);
  EXPECT_CLOSE(bessel_y(-3.0, cplx(1.0, 0.5)).value, -y3, 1e-8);
}

TEST(BesselY, IntegerTraceOnlyForIntegerBands) {
  EXPECT_EQ(bessel_y(2.0, 1.0).trace, "Yint.10/integer");
  EXPECT_EQ(bessel_y(2.0 + 1e-8, 1.0).trace, "Yint.10/near-integer");
  EXPECT_EQ(bessel_y(0.3, 1.0).trace.find("Yint"), std::string::npos);
  EXPECT_CLOSE(bessel_y(2.0 + 1e-8, 1.0).value, bessel_y(2.0, 1.0).value, 1e-6);
}

TEST(BesselY, DivergesAtZero) { EXPECT_THROW(bessel_y(0.0, 0.0), DivergenceError); }

TEST(Hankel, AgainstReference) {
  EXPECT_CLOSE(hankel1(0.3, 2.0).value, cplx(0.42569406198141372, 0.36348280782609224), 1e-8);
  EXPECT_CLOSE(hankel1(1.0, 1.0).value, cplx(0.44005058574493352, -0.78121282130028872), 1e-8);
  EXPECT_CLOSE(hankel2(-0.4, 3.0).value, cplx(-0.43731371343886818, -0.14153318924631208), 1e-8);
  EXPECT_CLOSE(hankel2(0.0, 1.5).value, cplx(0.51182767173591813, -0.38244892379775884), 1e-8);
}

TEST(Hankel, SumAndDifferenceIdentities) {
  for (cplx mu : {cplx(0.3, 0.0), cplx(-1.7, 0.2), cplx(2.0, 0.0), cplx(1.2, -0.8)}) {
    const cplx z(1.4, 0.3);
    const cplx h1 = hankel1(mu, z).value, h2 = hankel2(mu, z).value;
    EXPECT_CLOSE(0.5 * (h1 + h2), bessel_j(mu, z).value, 1e-9) << mu;
    EXPECT_CLOSE((h1 - h2) / (2.0 * kI), bessel_y(mu, z).value, 1e-8) << mu;
  }
}

TEST(BesselK, AgainstReference) {
  EXPECT_CLOSE(bessel_k(0.3, 1.2).value, cplx(0.32769323123536506, 0.0), 1e-8);
  EXPECT_CLOSE(bessel_k(0.5, 1.0).value, cplx(0.46106850444789456, 0.0), 1e-8);
  EXPECT_CLOSE(bessel_k(cplx(1.5, 0.5), cplx(2.0, -1.0)).value, cplx(-0.0064679895630183189, 0.13863072428519741),
               1e-8);
  EXPECT_CLOSE(bessel_k(2.0, cplx(-1.0, 0.5)).value, cplx(0.1459875253975488, 0.9258850283258939), 1e-8);
}

TEST(BesselK, BranchesAgreeWhereBothApply) {
  const cplx a = bessel_k(0.3, 1.2, {}, KBranch::ViaHankel1).value;
  const cplx b = bessel_k(0.3, 1.2, {}, KBranch::ViaHankel2).value;
  EXPECT_CLOSE(a, b, 1e-9);
  EXPECT_THROW(bessel_k(0.3, cplx(-1.0, 1.0), {}, KBranch::ViaHankel1), DomainError);
}

TEST(Derivative, OrderZeroIsFunction) {
  const cplx mu(-1.3, 0.2), z(1.5, 0.4);
  EXPECT_CLOSE(bessel_j_derivative(mu, z, 0).value, bessel_j(mu, z).value, 1e-12);
}

TEST(Derivative, AgainstReference) {
  EXPECT_CLOSE(bessel_j_derivative(-0.8, 2.0, 2).value, cplx(0.49169351732053026, 0.0), 1e-8);
  EXPECT_CLOSE(bessel_j_derivative(0.0, 1.5, 1).value, cplx(-0.55793650791009964, 0.0), 1e-8);
  EXPECT_CLOSE(bessel_j_derivative(-2.3, cplx(2.0, 0.5), 3).value, cplx(-0.45325080406790075, 1.1135168692435308),
               1e-8);
}

TEST(Derivative, FiniteDifferenceConvergence) {
  const double mu = -0.8, z = 2.0;
  const cplx exact = bessel_j_derivative(mu, z, 2).value;
  double previous = std::numeric_limits<double>::infinity();
  for (double h : {1e-2, 1e-3}) {
    const cplx fd = (bessel_j(mu, z + h).value - 2.0 * bessel_j(mu, z).value + bessel_j(mu, z - h).value) / (h * h);
    const double err = std::abs(fd - exact);
    EXPECT_LT(err, previous);
    previous = err;
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(Derivative, CentralDifferenceWithinRoundoffBound) {
  const double mu = -0.8, z = 2.0;
  const cplx exact = bessel_j_derivative(mu, z, 2).value;
  for (double h : {1e-4, 1e-5, 1e-6}) {
    const auto p = bessel_j(mu, z + h), c = bessel_j(mu, z), m = bessel_j(mu, z - h);
    const cplx fd = (p.value - 2.0 * c.value + m.value) / (h * h);
    const double noise = p.error_estimate + 2.0 * c.error_estimate + m.error_estimate +
                         4.0 * kEps * (std::abs(p.value) + 2.0 * std::abs(c.value) + std::abs(m.value));
    EXPECT_LT(std::abs(fd - exact), noise / (h * h) + h * h) << "h = " << h;
  }
}

TEST(Derivative, ZeroArgumentNeedsIntegerOrder) {
  EXPECT_THROW(bessel_j_derivative(-0.8, 0.0, 1), DomainError);
  EXPECT_NEAR(bessel_j_derivative(1.0, 0.0, 1).value.real(), 0.5, 1e-12);
}

TEST(SigmaSum, AgainstReference) {
  EXPECT_CLOSE(sigma_sum(2, cplx(1.0, 0.5)), cplx(-1.5223220866919633, 0.86214408013755267), 1e-12);
}

TEST(CMuIntegral, EqualsPiOverPowerOfTwo) {
  for (cplx mu : {cplx(0.3, 0.0), cplx(1.7, 0.5), cplx(-0.2, -0.4), cplx(3.0, 0.0)}) {
    const auto q = c_mu_integral(mu);
    EXPECT_TRUE(q.converged) << mu;
    EXPECT_CLOSE(q.value, kPi * std::exp(-mu * std::log(2.0)), 1e-10) << mu;
  }
  EXPECT_THROW(c_mu_integral(-1.3), DomainError);
}
