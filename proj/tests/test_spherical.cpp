#include "test_util.hpp"

using namespace cylrep;
using cylrep::test::uniform;

TEST(Dawson, AgainstReference) {
  EXPECT_CLOSE(dawson(1.0), cplx(0.53807950691276842, 0.0), 1e-13);
  EXPECT_CLOSE(dawson(2.0), cplx(0.30134038892379197, 0.0), 1e-13);
  EXPECT_CLOSE(dawson(cplx(1.0, 0.5)), cplx(0.65612206343909364, -0.088338741190341334), 1e-13);
  EXPECT_CLOSE(dawson(cplx(0.3, 3.0)), cplx(6391.4700993003418, -1491.3065967461076), 1e-12);
  EXPECT_EQ(dawson(0.0), cplx(0.0, 0.0));
}

TEST(Dawson, IsOdd) {
  for (cplx w : {cplx(0.7, 0.2), cplx(3.0, -1.0), cplx(8.0, 0.5)}) EXPECT_CLOSE(dawson(-w), -dawson(w), 1e-14) << w;
}

TEST(Dawson, MatchesQuadratureOracle) {
  for (int i = 0; i < 10; ++i) {
    const cplx w(uniform(-3.0, 3.0), uniform(-1.0, 1.0));
    EXPECT_CLOSE(dawson(w), oracle::dawson_quadrature(w).value, 1e-11) << w;
  }
}

TEST(SphericalJ, AgainstReference) {
  EXPECT_CLOSE(spherical_j(-2, 1.4).value, cplx(-0.79061059432861498, 0.0), 1e-10);
  EXPECT_CLOSE(spherical_j(4, cplx(3.0, -1.0)).value, cplx(0.03973009623197519, -0.061570361660238499), 1e-9);
  EXPECT_EQ(spherical_j(-2, 1.4).trace, "J12.1/spherical");
}

TEST(SphericalY, AgainstReference) {
  EXPECT_CLOSE(spherical_y(2, cplx(1.0, 1.0)).value, cplx(0.33694108567754842, 0.91999674620317183), 1e-10);
  EXPECT_EQ(spherical_y(2, cplx(1.0, 1.0)).trace, "HY.3bis/spherical");
  EXPECT_THROW(spherical_y(1, 0.0), DivergenceError);
}

TEST(SphericalJ, MatchesHalfIntegerBesselJ) {
  for (long m = -4; m <= 4; ++m)
    for (cplx z : {cplx(0.6, 0.0), cplx(2.0, 1.0), cplx(1.5, -2.0)}) {
      const cplx expect = std::sqrt(kPi / (2.0 * z)) * bessel_j(m + 0.5, z).value;
      EXPECT_CLOSE(spherical_j(m, z).value, expect, 1e-8) << m << " " << z;
    }
}

TEST(SphericalJ, MatchesClosedFormForNonNegativeOrders) {
  for (long m = 0; m <= 6; ++m) {
    const cplx z(1.7, 0.4);
    EXPECT_CLOSE(spherical_j(m, z).value, spherical_j_closed(m, z), 1e-10) << m;
  }
}

TEST(SphericalJ, RejectsLargeOrder) { EXPECT_THROW(spherical_j(31, 1.0), DomainError); }

TEST(ErfSeries, AgainstReference) {
  EXPECT_CLOSE(erf_series(1.2, 0.0), cplx(0.91031397822963537, 0.0), 1e-11);
  EXPECT_CLOSE(erf_series(-1.7, 0.0), -erf_series(1.7, 0.0), 1e-15);
}

TEST(ErfSeries, MatchesMaclaurinAcrossAngles) {
  for (double theta : {0.0, 0.8, 2.0, 3.0})
    for (cplx w : {cplx(0.5, 0.0), cplx(1.5, 0.7), cplx(-1.1, 0.4)}) {
      const cplx arg = w * std::cos(0.5 * theta);
      EXPECT_CLOSE(erf_series(w, theta), oracle::erf_maclaurin(arg).value, 1e-10) << w << " " << theta;
    }
}

TEST(ErfSeries, CoversEveryDirection) {
  for (double angle = -3.1; angle <= 3.15; angle += 0.2)
    for (double r : {0.5, 2.0, 4.0}) {
      const cplx w = std::polar(r, angle);
      EXPECT_CLOSE(erf_series(w, 0.0), oracle::erf_maclaurin(w).value, 1e-8) << w;
    }
}

TEST(DawsonSeries, MatchesDirectEvaluation) {
  for (double theta : {0.0, 0.5, 1.3, 2.9})
    for (cplx w : {cplx(0.4, 0.0), cplx(1.0, 0.5), cplx(-1.5, 0.2)})
      EXPECT_CLOSE(dawson_series(w, theta), dawson(w * std::cos(theta)), 1e-10) << w << " " << theta;
}

TEST(DawsonDuplication, EqualsDawsonAtDoubleArgument) {
  for (cplx w : {cplx(0.25, 0.0), cplx(0.5, 0.0), cplx(1.0, 0.0), cplx(0.5, 0.3)})
    EXPECT_CLOSE(dawson_duplication(w), dawson(2.0 * w), 1e-9) << w;
}

TEST(DawsonCosineCoefficient, MatchesQuadrature) {
  for (long m = 0; m <= 6; ++m)
    for (cplx w : {cplx(0.5, 0.0), cplx(2.0, 0.0), cplx(1.0, 1.0), cplx(-1.2, 0.8)}) {
      const auto q = integrate([&](double t) { return dawson(w * std::cos(0.5 * t)) * std::cos((m + 0.5) * t); },
                               0.0, kPi, Tolerances{1e-14, 1e-13, 1 << 16});
      EXPECT_CLOSE(dawson_cosine_coefficient(m, w), q.value / kPi, 1e-9) << m << " " << w;
    }
}

TEST(SeriesTruncation, Validation) {
  EXPECT_THROW((SeriesTruncation{0, 1e-12}.validate()), DomainError);
  EXPECT_THROW((SeriesTruncation{10, 0.0}.validate()), DomainError);
  EXPECT_THROW(erf_series(1.0, 0.0, SeriesTruncation{-1, 1e-12}), DomainError);
  EXPECT_THROW(dawson_series(3.0, 0.0, SeriesTruncation{2, 1e-15}), AccuracyError);
}
