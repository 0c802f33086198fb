#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "curvkit/kernels.hpp"
#include "curvkit/rng.hpp"

using namespace curvkit;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal();
  return v;
}

// Reference results written with plain loops, independent of the tables.
double naive_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  const auto& t = kernels::scalar_table();
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 81u, 1296u}) {
    auto a = random_vec(n, 11 + n);
    auto b = random_vec(n, 17 + n);
    CHECK(t.dot(a.data(), b.data(), n) == doctest::Approx(naive_dot(a, b)).epsilon(1e-14));
    CHECK(t.sumsq(a.data(), n) == doctest::Approx(naive_dot(a, a)).epsilon(1e-14));
    double mx = 0;
    for (double v : a) mx = std::max(mx, std::fabs(v));
    CHECK(t.max_abs(a.data(), n) == mx);
  }
}

TEST_CASE("lane equivalence on all kernels") {
  const kernels::Table* avx2 = kernels::avx2_table_or_null();
  if (!avx2) {
    MESSAGE("avx2 lane unavailable; skipping equivalence checks");
    return;
  }
  const auto& sc = kernels::scalar_table();

  for (std::size_t n : {1u, 2u, 5u, 8u, 13u, 256u, 1297u, 7776u}) {
    auto a = random_vec(n, 100 + n);
    auto b = random_vec(n, 200 + n);
    const double scale = std::sqrt(sc.sumsq(a.data(), n) * sc.sumsq(b.data(), n)) + 1.0;
    CHECK(std::fabs(sc.dot(a.data(), b.data(), n) - avx2->dot(a.data(), b.data(), n)) <=
          1e-13 * scale);
    CHECK(std::fabs(sc.sumsq(a.data(), n) - avx2->sumsq(a.data(), n)) <=
          1e-13 * (sc.sumsq(a.data(), n) + 1.0));
    CHECK(sc.max_abs(a.data(), n) == avx2->max_abs(a.data(), n));

    auto y1 = b, y2 = b;
    sc.axpy(0.37, a.data(), y1.data(), n);
    avx2->axpy(0.37, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-15));

    auto s1 = a, s2 = a;
    sc.scale(-1.75, s1.data(), n);
    avx2->scale(-1.75, s2.data(), n);
    CHECK(s1 == s2);

    std::vector<double> d1(n), d2(n);
    sc.sub(a.data(), b.data(), d1.data(), n);
    avx2->sub(a.data(), b.data(), d2.data(), n);
    CHECK(d1 == d2);
  }

  for (int m : {2, 3, 4, 5, 6, 7}) {
    auto psi = random_vec(static_cast<std::size_t>(m) * m, 300 + m);
    auto dir = random_vec(static_cast<std::size_t>(m) * m, 400 + m);
    auto psi1 = random_vec(static_cast<std::size_t>(m) * m * m, 500 + m);
    // symmetrize inputs the way the callers do
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j) {
        psi[i * m + j] = psi[j * m + i];
        dir[i * m + j] = dir[j * m + i];
      }

    const std::size_t n4 = static_cast<std::size_t>(m) * m * m * m;
    std::vector<double> o1(n4), o2(n4);
    sc.gram_curv(psi.data(), m, o1.data());
    avx2->gram_curv(psi.data(), m, o2.data());
    for (std::size_t i = 0; i < n4; ++i)
      CHECK(std::fabs(o1[i] - o2[i]) <= 1e-13 * (std::fabs(o1[i]) + 1.0));

    sc.gram_curv_dir(psi.data(), dir.data(), m, o1.data());
    avx2->gram_curv_dir(psi.data(), dir.data(), m, o2.data());
    for (std::size_t i = 0; i < n4; ++i)
      CHECK(std::fabs(o1[i] - o2[i]) <= 1e-13 * (std::fabs(o1[i]) + 1.0));

    std::vector<double> p1(n4 * m), p2(n4 * m);
    sc.gram_covderiv(psi.data(), psi1.data(), m, p1.data());
    avx2->gram_covderiv(psi.data(), psi1.data(), m, p2.data());
    for (std::size_t i = 0; i < p1.size(); ++i)
      CHECK(std::fabs(p1[i] - p2[i]) <= 1e-13 * (std::fabs(p1[i]) + 1.0));
  }
}

TEST_CASE("gram_curv matches the four-factor formula") {
  const int m = 4;
  auto raw = random_vec(static_cast<std::size_t>(m) * m, 42);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) raw[i * m + j] = raw[j * m + i];

  std::vector<double> out(static_cast<std::size_t>(m) * m * m * m);
  kernels::active().gram_curv(raw.data(), m, out.data());
  auto psi = [&](int a, int b) { return raw[a * m + b]; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double want = psi(i, l) * psi(j, k) - psi(i, k) * psi(j, l);
          CHECK(out[((i * m + j) * m + k) * m + l] == doctest::Approx(want).epsilon(1e-15));
        }
}

TEST_CASE("dispatch override") {
  CHECK(kernels::set_active("scalar"));
  CHECK(std::string(kernels::active().name) == "scalar");
  if (kernels::avx2_table_or_null()) {
    CHECK(kernels::set_active("avx2"));
    CHECK(std::string(kernels::active().name) == "avx2");
  } else {
    CHECK_FALSE(kernels::set_active("avx2"));
  }
  CHECK_FALSE(kernels::set_active("sse9"));
  kernels::reset_active();
}
