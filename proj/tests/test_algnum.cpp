#include <cmath>
#include <random>

#include "coxalt/algnum.hpp"
#include "doctest.h"

using namespace coxalt;

namespace {

// Independent oracle for the minimal polynomial of 2cos(pi/m): the monic
// product over the Galois conjugates 2cos(pi j/m), gcd(j, 2m) = 1, built
// numerically and rounded back to integers.
std::vector<long> numeric_min_poly(int m) {
  std::vector<double> coeffs{1.0};
  for (int j = 1; j < m; ++j) {
    if (std::gcd(j, 2 * m) != 1) continue;
    double root = 2.0 * std::cos(M_PI * j / m);
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= root * coeffs[i];
    }
    coeffs = std::move(next);
  }
  std::vector<long> out;
  for (double c : coeffs) out.push_back(std::lround(c));
  return out;
}

}  // namespace

TEST_CASE("minimal polynomials of 2cos(pi/m) match the numeric conjugate product") {
  for (int m = 2; m <= 12; ++m) {
    CAPTURE(m);
    std::vector<Int> got = cos2_minimal_poly(m);
    std::vector<long> expected = numeric_min_poly(m);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
  }
}

TEST_CASE("known small minimal polynomials") {
  CHECK(cos2_minimal_poly(2) == std::vector<Int>{0, 1});        // x
  CHECK(cos2_minimal_poly(3) == std::vector<Int>{-1, 1});       // x - 1
  CHECK(cos2_minimal_poly(4) == std::vector<Int>{-2, 0, 1});    // x^2 - 2
  CHECK(cos2_minimal_poly(5) == std::vector<Int>{-1, -1, 1});   // x^2 - x - 1
  CHECK(cos2_minimal_poly(6) == std::vector<Int>{-3, 0, 1});    // x^2 - 3
  CHECK(cos2_minimal_poly(7) == std::vector<Int>{1, -2, -1, 1});
}

TEST_CASE("ring identities hold on random elements") {
  AlgebraicContext ctx({4, 5, 7});
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<int> coin(0, 4);

  auto random_elem = [&]() {
    AlgNum x = AlgNum::integer(&ctx, coin(rng) - 2);
    for (int m : {4, 5, 7}) {
      AlgNum g = AlgNum::two_cos(&ctx, m);
      for (int rep = coin(rng) % 3; rep > 0; --rep) x = x * g + AlgNum::integer(&ctx, coin(rng) - 2);
    }
    return x;
  };

  for (int trial = 0; trial < 50; ++trial) {
    AlgNum a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("reduction is canonical and matches numeric values") {
  AlgebraicContext ctx({5});
  AlgNum phi = AlgNum::two_cos(&ctx, 5);  // golden ratio
  AlgNum lhs = phi * phi;
  AlgNum rhs = phi + AlgNum::integer(&ctx, 1);
  CHECK(lhs == rhs);
  CHECK(std::abs(lhs.approx() - rhs.approx()) < 1e-12);

  AlgebraicContext ctx4({4});
  AlgNum sqrt2 = AlgNum::two_cos(&ctx4, 4);
  CHECK(sqrt2 * sqrt2 == AlgNum::integer(&ctx4, 2));
  CHECK((sqrt2 * sqrt2 * sqrt2 * sqrt2 - AlgNum::integer(&ctx4, 4)).is_zero());
}
