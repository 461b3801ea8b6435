// Evaluates a few functions and prints value, error estimate and formula path.

#include <cstdio>

#include "cylrep.hpp"

int main() {
  using namespace cylrep;
  const EvalConfig cfg;

  const EvalResult j = bessel_j(cplx{-1.3, 0.0}, cplx{2.0, 0.0}, cfg);
  std::printf("J_{-1.3}(2)      = %.15g %+.15gi  err %.2g  [%s]\n", j.value.real(), j.value.imag(), j.error_estimate,
              j.trace.c_str());

  const EvalResult y = bessel_y(cplx{2.0, 0.0}, cplx{1.0, 1.0}, cfg);
  std::printf("Y_2(1+i)         = %.15g %+.15gi  err %.2g  [%s]\n", y.value.real(), y.value.imag(), y.error_estimate,
              y.trace.c_str());

  const EvalResult h = hankel1(cplx{0.5, 0.25}, cplx{3.0, -0.5}, cfg);
  std::printf("H1_{0.5+0.25i}   = %.15g %+.15gi  err %.2g  [%s]\n", h.value.real(), h.value.imag(), h.error_estimate,
              h.trace.c_str());

  const EvalResult s = spherical_j(2, cplx{1.5, 0.0}, cfg);
  std::printf("j_2(1.5)         = %.15g %+.15gi  [%s]\n", s.value.real(), s.value.imag(), s.trace.c_str());

  const cplx f = dawson(cplx{1.0, 0.5});
  std::printf("F(1+0.5i)        = %.15g %+.15gi\n", f.real(), f.imag());

  // Compare against the independent power-series oracle.
  const oracle::OracleResult ref = oracle::series_j(cplx{-1.3, 0.0}, cplx{2.0, 0.0});
  const double err = rel_err(j.value, ref.value);
  std::printf("rel_err vs series oracle = %.2g\n", err);
  return err <= 1e-8 ? 0 : 1;
}
