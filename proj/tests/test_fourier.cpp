#include "test_util.hpp"

using namespace cylrep;

TEST(FourierCoefficient, EqualsScaledBesselJ) {
  for (cplx nu : {cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.5, 0.0), cplx(0.3, 0.0), cplx(-0.3, 0.4), cplx(1.2, -0.5)})
    for (long ell : {0L, 1L, 3L}) {
      const cplx z(1.2, 0.4);
      const auto q = fourier_coefficient(nu, ell, z);
      const cplx expect = i_pow(ell) * bessel_j(nu + double(ell), z).value;
      EXPECT_CLOSE(q.value, expect, 1e-9) << "nu " << nu << " l " << ell;
    }
}

TEST(FourierCoefficient, NearHalfOrderStaysFinite) {
  const auto q = fourier_coefficient(-0.49, 0, 1.0);
  EXPECT_TRUE(std::isfinite(q.value.real()) && std::isfinite(q.value.imag()));
  EXPECT_CLOSE(q.value, bessel_j(-0.49, 1.0).value, 1e-8);
}

TEST(FourierCoefficient, IntegerIndexSymmetry) {
  for (long n = 0; n <= 2; ++n)
    for (long ell = -3; ell <= 3; ++ell) {
      const cplx z(2.0, 1.0);
      const cplx a = fourier_coefficient(double(n), ell, z).value;
      const cplx b = fourier_coefficient(double(n), -ell - 2 * n, z).value;
      EXPECT_LT(std::abs(a - b), 1e-9) << n << " " << ell;
    }
}

TEST(FourierCoefficient, HalfIntegerIndexAntisymmetry) {
  for (long n = 0; n <= 2; ++n)
    for (long ell = -3; ell <= 3; ++ell) {
      const cplx a = fourier_coefficient(n + 0.5, ell, 1.0).value;
      const cplx b = fourier_coefficient(n + 0.5, -ell - 2 * n - 1, 1.0).value;
      EXPECT_LT(std::abs(a + b), 1e-9) << n << " " << ell;
    }
}

TEST(FourierCoefficient, RejectsOrdersAtOrBelowMinusHalf) {
  EXPECT_THROW(fourier_coefficient(-0.5, 0, 1.0), DomainError);
  EXPECT_THROW(fourier_coefficient(cplx(-0.7, 0.2), 1, 1.0), DomainError);
  EXPECT_THROW(fourier_coefficient(0.3, 0, -1.0), DomainError);
}
