#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dwell/basis.hpp"
#include "dwell/dense.hpp"
#include "dwell/errors.hpp"
#include "dwell/fdm.hpp"
#include "dwell/spectral.hpp"

using namespace dwell;

TEST_CASE("assemble") {
  const SpectralMatrix zero = assemble(2, 0.0, 8);
  const double expected[] = {6, 12, 20, 30, 42, 56, 72, 90};
  for (int n = 0; n < 8; ++n) CHECK(zero.H(n, n) == expected[n]);

  const SpectralMatrix one = assemble(2, 1.0, 8);
  CHECK(std::abs(one.H(0, 0) - (6.0 - 1.0 / 7.0)) <= 1e-15);
  CHECK(std::abs(one.H(0, 2) + std::sqrt(4.0 / 147.0)) <= 1e-15);
  CHECK(one.H(0, 1) == 0.0);
  CHECK(one.H.is_symmetric(0.0));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (std::abs(i - j) != 0 && std::abs(i - j) != 2) CHECK(one.H(i, j) == 0.0);
    }
  }
  CHECK(assemble(3, -2.5, 16).H(3, 4) == 0.0);
  CHECK_THROWS_AS(assemble(2, 1.0, 4), std::invalid_argument);
}

TEST_CASE("parity blocks") {
  const ParityBlocks b = parity_blocks(assemble(2, 0.0, 8));
  REQUIRE(b.even.size() == 4);
  REQUIRE(b.odd.size() == 4);
  const double even[] = {6, 20, 42, 72};
  const double odd[] = {12, 30, 56, 90};
  for (int i = 0; i < 4; ++i) {
    CHECK(b.even(i, i) == even[i]);
    CHECK(b.odd(i, i) == odd[i]);
  }
  const ParityBlocks nine = parity_blocks(assemble(2, 1.0, 9));
  CHECK(nine.even.size() == 5);
  CHECK(nine.odd.size() == 4);
  // Each block is tridiagonal in its own indexing.
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (std::abs(i - j) > 1) CHECK(nine.even(i, j) == 0.0);
    }
  }
}

TEST_CASE("parity block spectra reproduce the full spectrum") {
  const SpectralMatrix h = assemble(2, 5.0, 64);
  const auto full = eigen_sym(h.H);
  const ParityBlocks b = parity_blocks(h);
  const auto even = eigen_sym(b.even);
  const auto odd = eigen_sym(b.odd);
  std::vector<double> merged(even);
  merged.insert(merged.end(), odd.begin(), odd.end());
  std::sort(merged.begin(), merged.end());
  for (int k = 0; k < 10; ++k) CHECK(std::abs(full[k] - merged[k]) <= 1e-10);
  CHECK(std::abs(even[0] - full[0]) <= 1e-12);
  CHECK(std::abs(odd[0] - full[1]) <= 1e-12);
}

TEST_CASE("eigen_sym small cases") {
  const auto id = eigen_sym(DenseMatrix::identity(3));
  CHECK(id == std::vector<double>{1, 1, 1});
  CHECK(eigen_sym(DenseMatrix::diagonal({3, 1, 2})) == std::vector<double>{1, 2, 3});
  DenseMatrix two(2);
  two(0, 0) = 2;
  two(1, 1) = 2;
  two(0, 1) = 1;
  two(1, 0) = 1;
  const auto e = eigen_sym(two);
  CHECK(std::abs(e[0] - 1.0) <= 1e-14);
  CHECK(std::abs(e[1] - 3.0) <= 1e-14);
  two(0, 1) = 1.5;
  CHECK_THROWS_AS(eigen_sym(two), std::invalid_argument);
  CHECK(eigen_sym(DenseMatrix(4)) == std::vector<double>(4, 0.0));
}

TEST_CASE("eigen_sym agrees with Sturm bisection on random tridiagonal matrices") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial;
    Tridiagonal t;
    DenseMatrix a(n);
    for (int i = 0; i < n; ++i) {
      t.diag.push_back(u(rng));
      a(i, i) = t.diag.back();
    }
    for (int i = 0; i + 1 < n; ++i) {
      t.off.push_back(u(rng));
      a(i, i + 1) = a(i + 1, i) = t.off.back();
    }
    const auto jacobi = eigen_sym(a);
    const auto sturm = eigen_tridiag_smallest(t, n);
    for (int k = 0; k < n; ++k) CHECK(std::abs(jacobi[k] - sturm[k]) <= 1e-11);
  }
}

TEST_CASE("eigen_sym on a dense random matrix preserves trace and Frobenius norm") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = 30;
  DenseMatrix a(n);
  double trace = 0.0, fro = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
  }
  for (int i = 0; i < n; ++i) {
    trace += a(i, i);
    for (int j = 0; j < n; ++j) fro += a(i, j) * a(i, j);
  }
  const auto e = eigen_sym(a);
  double sum = 0.0, sq = 0.0;
  for (double v : e) sum += v, sq += v * v;
  CHECK(std::abs(sum - trace) <= 1e-12);
  CHECK(std::abs(sq - fro) <= 1e-11);
  CHECK(std::is_sorted(e.begin(), e.end()));
}

TEST_CASE("alpha = 0 exactness") {
  for (int m : {0, 1, 2, 3}) {
    const Spectrum s = spectrum_spectral(m, 0.0, 64, 11);
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(s.energies[n] - unperturbed_energy(n, m)) <= 1e-10);
    CHECK(s.converged);
  }
}

TEST_CASE("truncation convergence") {
  for (double alpha : {-20.0, -5.0, 0.5, 5.0, 20.0}) {
    for (int m : {0, 2}) {
      const auto a = eigen_sym(assemble(m, alpha, 64).H);
      const auto b = eigen_sym(assemble(m, alpha, 128).H);
      for (int k = 0; k <= 5; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-10);
    }
  }
  const Spectrum s = spectrum_spectral(2, 20.0, 64, 6);
  CHECK(s.converged);
  CHECK(s.est_error >= 0.0);
  CHECK(s.est_error <= 1e-10);
  CHECK(std::is_sorted(s.energies.begin(), s.energies.end()));
  CHECK(s.method == Method::Spectral);
}

TEST_CASE("monotone response in alpha") {
  double prev = eigen_sym(assemble(2, 0.0, 64).H)[0];
  for (int i = 1; i <= 100; ++i) {
    const double e = eigen_sym(assemble(2, 0.1 * i, 64).H)[0];
    CHECK(e <= prev);
    prev = e;
  }
}

TEST_CASE("splitting_numeric") {
  const Splitting zero = splitting_numeric(2, 0.0, 32);
  CHECK(std::abs(zero.t - 6.0) <= 1e-10);
  CHECK(zero.converged);

  const Splitting small = splitting_numeric(2, 0.1, 64);
  CHECK(std::abs(small.t - 5.9809494) <= 1e-3);
  CHECK(std::abs(small.t - (6.0 - 0.1 * 4.0 / 21.0 - 0.01 * 0.00030103431463975682)) <= 1e-7);

  const Splitting five = splitting_numeric(2, 5.0, 64);
  CHECK(five.converged);
  const Splitting fdm = splitting_fdm(SymWellParams{5.0, 2}, 4000, true);
  CHECK(std::abs(five.t - fdm.t) <= 1e-6 * five.t);

  CHECK_THROWS_AS(splitting_numeric(2, 1.0, 8), std::invalid_argument);
}

TEST_CASE("the splitting shrinks as the barrier grows") {
  double prev = splitting_numeric(2, 4.0, 64).t;
  for (double alpha : {6.0, 10.0, 20.0, 40.0}) {
    const double t = splitting_numeric(2, alpha, 64).t;
    CHECK(t < prev);
    prev = t;
  }
}
