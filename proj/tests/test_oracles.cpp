#include "test_util.hpp"

using namespace cylrep;
using cylrep::test::uniform;

TEST(SeriesJ, AgainstReference) {
  const auto r = oracle::series_j(-1.3, 2.0);
  EXPECT_FALSE(r.flagged);
  EXPECT_CLOSE(r.value, cplx(-0.54965214124572751, 0.0), 1e-14);
  EXPECT_CLOSE(oracle::series_j(cplx(3.0, 3.0), std::polar(2.0, kPi / 4.0)).value,
               cplx(-0.013455924118468575, -0.042436689326262758), 1e-13);
}

TEST(SeriesJ, ZeroArgument) {
  EXPECT_EQ(oracle::series_j(0.0, 0.0).value, cplx(1.0, 0.0));
  EXPECT_EQ(oracle::series_j(-2.0, 0.0).value, cplx(0.0, 0.0));
  EXPECT_THROW(oracle::series_j(-0.5, 0.0), DivergenceError);
  EXPECT_THROW(oracle::series_j(0.5, -1.0), DomainError);
}

TEST(SeriesJ, FlagsTruncation) { EXPECT_TRUE(oracle::series_j(0.3, 20.0, {5}).flagged); }

TEST(SeriesI, AgainstReference) {
  EXPECT_CLOSE(oracle::series_i(-1.7, 0.9).value, cplx(-0.55280048542414617, 0.0), 1e-14);
}

TEST(Schlafli, AgreesWithSeriesInRightHalfPlane) {
  for (int i = 0; i < 20; ++i) {
    const cplx mu(uniform(-3.0, 3.0), uniform(-1.0, 1.0));
    const cplx z(uniform(0.3, 4.0), uniform(-3.0, 3.0));
    EXPECT_CLOSE(oracle::schlafli_j(mu, z).value, oracle::series_j(mu, z).value, 1e-10) << mu << " " << z;
  }
  EXPECT_THROW(oracle::schlafli_j(0.3, cplx(-1.0, 1.0)), DomainError);
}

TEST(OracleY, NonIntegerAndIntegerOrders) {
  const auto g = oracle::oracle_y(0.3, 1.5);
  EXPECT_FALSE(g.flagged);
  EXPECT_CLOSE(g.value, cplx(0.12573091853294629, 0.0), 1e-13);
  const auto m = oracle::oracle_y(0.0, 1.0);
  EXPECT_FALSE(m.flagged);
  EXPECT_CLOSE(m.value, cplx(0.088256964215676958, 0.0), 1e-8);
  EXPECT_THROW(oracle::oracle_y(1.0, 0.0), DivergenceError);
}

TEST(OracleH, AgainstReference) {
  EXPECT_CLOSE(oracle::oracle_h(1, 0.3, 2.0).value, cplx(0.42569406198141372, 0.36348280782609224), 1e-12);
  EXPECT_CLOSE(oracle::oracle_h(2, -0.4, 3.0).value, cplx(-0.43731371343886818, -0.14153318924631208), 1e-12);
  EXPECT_CLOSE(oracle::oracle_h(1, 1.0, 1.0).value, cplx(0.44005058574493352, -0.78121282130028872), 1e-8);
  EXPECT_THROW(oracle::oracle_h(3, 0.3, 1.0), DomainError);
}

TEST(OracleK, AgainstReference) {
  EXPECT_CLOSE(oracle::oracle_k(0.3, 1.2).value, cplx(0.32769323123536506, 0.0), 1e-12);
  EXPECT_CLOSE(oracle::oracle_k(cplx(1.5, 0.5), cplx(2.0, -1.0)).value,
               cplx(-0.0064679895630183189, 0.13863072428519741), 1e-11);
  EXPECT_CLOSE(oracle::oracle_k(2.0, cplx(-1.0, 0.5)).value, cplx(0.1459875253975488, 0.9258850283258939), 1e-7);
}

TEST(SeriesJDerivative, AgainstReference) {
  EXPECT_CLOSE(oracle::series_j_derivative(-0.8, 2.0, 2).value, cplx(0.49169351732053026, 0.0), 1e-13);
  EXPECT_CLOSE(oracle::series_j_derivative(0.0, 1.5, 1).value, cplx(-0.55793650791009964, 0.0), 1e-13);
  EXPECT_CLOSE(oracle::series_j_derivative(-2.3, cplx(2.0, 0.5), 3).value,
               cplx(-0.45325080406790075, 1.1135168692435308), 1e-12);
  EXPECT_THROW(oracle::series_j_derivative(0.0, 1.0, -1), DomainError);
}

TEST(ErfMaclaurin, AgainstReference) {
  EXPECT_CLOSE(oracle::erf_maclaurin(1.2).value, cplx(0.91031397822963537, 0.0), 1e-14);
}

TEST(DawsonQuadrature, AgainstReference) {
  EXPECT_CLOSE(oracle::dawson_quadrature(1.0).value, cplx(0.53807950691276842, 0.0), 1e-13);
  EXPECT_CLOSE(oracle::dawson_quadrature(cplx(1.0, 0.5)).value, cplx(0.65612206343909364, -0.088338741190341334),
               1e-13);
}

TEST(ClassicalIntegral, MatchesSeriesForIntegerOrders) {
  for (long m = -3; m <= 3; ++m) {
    const cplx z(1.3, -0.7);
    EXPECT_CLOSE(oracle::classical_integral_j(m, z).value, oracle::series_j(double(m), z).value, 1e-12) << m;
  }
}
