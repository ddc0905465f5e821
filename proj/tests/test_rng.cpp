#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "mceif/rng.hpp"

using namespace mceif;

TEST_CASE("identical seeds give identical streams") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.normal() == b.normal());
  Rng c(42), d(42);
  for (int i = 0; i < 1000; ++i) CHECK(c.uniform() == d.uniform());
}

TEST_CASE("different seeds give different streams") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 100; ++i)
    if (a.normal() == b.normal()) ++equal;
  CHECK(equal < 5);
}

TEST_CASE("split streams are deterministic and distinct") {
  Rng root(7);
  Rng s0 = root.split(0);
  Rng s0_again = root.split(0);
  Rng s1 = root.split(1);
  CHECK(s0.seed() == s0_again.seed());
  CHECK(s0.seed() != s1.seed());
  // Nearby root seeds must not map to the same split stream.
  CHECK(Rng(7).split(0).seed() != Rng(8).split(0).seed());
  CHECK(s0.normal() == s0_again.normal());
}

TEST_CASE("uniform lies in [0, 1)") {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal moments match N(0, 1)") {
  Rng rng(11);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.05);
}

TEST_CASE("bernoulli frequency tracks its probability") {
  Rng rng(5);
  const int n = 50000;
  int hits = 0;
  for (int i = 0; i < n; ++i)
    if (rng.bernoulli(0.3)) ++hits;
  const double freq = static_cast<double>(hits) / n;
  CHECK(std::abs(freq - 0.3) < 4.0 * std::sqrt(0.3 * 0.7 / n));
}

TEST_CASE("beta draws stay in (0, 1) with the right mean") {
  Rng rng(9);
  const int n = 20000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double b = rng.beta(2.0, 3.0);
    CHECK(b > 0.0);
    CHECK(b < 1.0);
    sum += b;
  }
  CHECK(std::abs(sum / n - 0.4) < 0.01);  // mean a/(a+b)
}

TEST_CASE("gamma draws are positive with the right mean") {
  Rng rng(13);
  const int n = 20000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gamma(2.5);
    CHECK(g > 0.0);
    sum += g;
  }
  CHECK(std::abs(sum / n - 2.5) < 0.05);
}
