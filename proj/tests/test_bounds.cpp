#include "doctest.h"

#include <cmath>

#include "asc/bounds.hpp"
#include "asc/errors.hpp"

using namespace asc;

TEST_CASE("barg bounds") {
  CHECK(barg_lower(3, 1.0, 2) == 0.0);
  CHECK(barg_lower(1, std::exp(-2.0), 2) == doctest::Approx(2.0));
  CHECK(barg_lower(2, 0.5, 1) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(barg_lower(1, 0.0, 1), DomainError);
  CHECK_THROWS_AS(barg_lower(1, 1.5, 1), DomainError);

  CHECK(barg_upper(1, 2.0, 2) == doctest::Approx(0.0));
  CHECK(barg_upper(1, 1.0, 2) == doctest::Approx(-2.0 * std::log(std::sqrt(1.0 - std::sqrt(0.5)))));
  CHECK(barg_upper(1, 1.0, 2) == doctest::Approx(1.2279).epsilon(1e-4));
  CHECK_THROWS_AS(barg_upper(1, 2.5, 2), DomainError);
  CHECK_THROWS_AS(barg_upper(1, 0.0, 2), DomainError);

  for (int m = 1; m <= 4; ++m)
    for (int b = 1; b <= 2; ++b)
      for (int i = 1; i < 1000; ++i) {
        const double d = i / 1000.0;
        REQUIRE(barg_lower(m, d, b) < barg_upper(m, d, b));
      }
}

TEST_CASE("shannon and random coding") {
  CHECK(shannon_lower(1.0) == 0.0);
  CHECK(shannon_lower(0.25) == doctest::Approx(std::log(2.0)));
  CHECK(random_coding_rate(1, 1.0, 2, 0.3) == doctest::Approx(-0.3));
  CHECK(random_coding_rate(1, std::exp(-2.0), 2, 0.1) == doctest::Approx(0.9));
  CHECK_THROWS_AS(random_coding_rate(1, 0.5, 2, 0.0), DomainError);
  for (int i = 1; i <= 100; ++i) {
    const double d = i / 100.0;
    CHECK(shannon_lower(d) == barg_lower(1, d, 1));
    for (int m = 1; m <= 3; ++m)
      CHECK(random_coding_rate(m, d, 2, 0.05) + 0.05 == doctest::Approx(barg_lower(m, d, 2) / 2.0));
  }
}

TEST_CASE("gilbert-varshamov") {
  CHECK(gv_binary_delta(1.0) == 0.0);
  CHECK(gv_binary_delta(0.0) == 0.5);
  CHECK(std::abs(gv_binary_delta(1.0 - binary_entropy(0.11)) - 0.11) < 1e-9);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK_THROWS_AS(gv_binary_delta(1.5), DomainError);
}

TEST_CASE("zyablov") {
  CHECK(zyablov_delta(1.0 - 1e-9) < 1e-6);
  // Approaches 1/2 as R -> 0, slowly (the gap shrinks roughly like R^(1/3)).
  CHECK(zyablov_delta(1e-3) < zyablov_delta(1e-6));
  CHECK(zyablov_delta(1e-6) < zyablov_delta(1e-9));
  CHECK(zyablov_delta(1e-9) > 0.49);
  CHECK_THROWS_AS(zyablov_delta(0.0), DomainError);
  for (double r : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9}) {
    double best = 0.0;
    const int steps = 100'000;
    for (int i = 0; i <= steps; ++i) {
      const double x = r + (1.0 - r) * i / steps;
      best = std::max(best, gv_binary_delta(x) * (1.0 - r / x));
    }
    CHECK(std::abs(zyablov_delta(r) - best) < 1e-6);
    CHECK(zyablov_delta(r) <= gv_binary_delta(r));
    CHECK(zyablov_rate(zyablov_delta(r)) == doctest::Approx(r).epsilon(1e-6));
  }
  CHECK(zyablov_rate(0.5) == 0.0);
}

TEST_CASE("blokh-zyablov") {
  CHECK(blokh_zyablov_rate(1e-9) > 0.999);
  CHECK_THROWS_AS(blokh_zyablov_rate(0.5), DomainError);
  CHECK_THROWS_AS(blokh_zyablov_rate(0.0), DomainError);
  double prev = 1.0;
  for (int i = 1; i < 50; ++i) {
    const double d = i / 100.0;
    const double r = blokh_zyablov_rate(d);
    CHECK(r >= 0.0);
    CHECK(r < prev);
    CHECK(r >= zyablov_rate(d) - 1e-6);
    CHECK(r <= 1.0 - binary_entropy(d));
    prev = r;
  }
}
