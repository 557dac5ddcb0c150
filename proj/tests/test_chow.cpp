#include <doctest.h>

#include <random>

#include "chow_obstruct/chow.hpp"
#include "chow_obstruct/errors.hpp"

using namespace chowob;

namespace {

const AmbientSpace kP1P3({1, 3});
const AmbientSpace kP4({4});

ChowClass random_class(std::mt19937_64& rng, const AmbientSpace& amb, int degree) {
  std::uniform_int_distribution<long> coef(-6, 6);
  ChowClass c(amb, degree);
  for (const auto& m : monomial_basis(amb, degree)) c.add_term(m, coef(rng));
  return c;
}

}  // namespace

TEST_CASE("monomial_basis") {
  CHECK(monomial_basis(kP1P3, 2) == std::vector<Monomial>{{1, 1}, {0, 2}});
  CHECK(monomial_basis(kP1P3, 0) == std::vector<Monomial>{{0, 0}});
  CHECK(monomial_basis(kP4, 3) == std::vector<Monomial>{{3}});
  CHECK(monomial_basis(kP1P3, 5).empty());
  CHECK(monomial_basis(kP1P3, 1) == std::vector<Monomial>{{1, 0}, {0, 1}});
  CHECK(monomial_basis(AmbientSpace({2, 2}), 2).size() == 3);
}

TEST_CASE("ambient validation") {
  CHECK_THROWS_AS(AmbientSpace({}), InvalidArgument);
  CHECK_THROWS_AS(AmbientSpace({0, 3}), InvalidArgument);
  CHECK(kP1P3.dimension() == 4);
  CHECK(kP1P3.to_string() == "1,3");
}

TEST_CASE("cup examples") {
  auto xi = ChowClass::hyperplane(kP1P3, 0);
  auto tau = ChowClass::hyperplane(kP1P3, 1);
  CHECK(cup(xi, tau) == ChowClass::monomial(kP1P3, {1, 1}));
  CHECK(cup(xi, cup(xi, tau)).is_zero());
  auto z = Integer(3) * xi + Integer(4) * tau;
  CHECK(cup(z, tau).to_string() == "3*x1*x2 + 4*x2^2");
  CHECK_THROWS_AS(cup(xi, ChowClass::hyperplane(kP4, 0)), AmbientMismatch);
}

TEST_CASE("divisor_multiplication_matrix") {
  auto z = parse_class(kP1P3, "3*x1 + 4*x2");
  CHECK(divisor_multiplication_matrix(kP1P3, z, 2) == IntegerMatrix{{4, 3}, {0, 4}});
  CHECK(divisor_multiplication_matrix(kP1P3, z, 1) == IntegerMatrix{{3}, {4}});
  CHECK(divisor_multiplication_matrix(kP1P3, ChowClass(kP1P3, 1), 3).is_zero());
  CHECK_THROWS_AS(divisor_multiplication_matrix(kP4, z, 2), AmbientMismatch);
}

TEST_CASE("ring axioms on random classes") {
  std::mt19937_64 rng(42);
  for (const auto& amb : {kP1P3, kP4, AmbientSpace({2, 2}), AmbientSpace({1, 1, 2})}) {
    const int n = amb.dimension();
    std::uniform_int_distribution<int> deg(0, n);
    for (int t = 0; t < 60; ++t) {
      const int da = deg(rng), db = deg(rng), dc = deg(rng);
      auto a = random_class(rng, amb, da);
      auto b = random_class(rng, amb, db);
      auto b2 = random_class(rng, amb, db);
      auto c = random_class(rng, amb, dc);
      CHECK(cup(a, b) == cup(b, a));
      CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
      CHECK(cup(a, b + b2) == cup(a, b) + cup(a, b2));
      CHECK(cup(Integer(3) * a, b) == Integer(3) * cup(a, b));
      CHECK(cup(ChowClass::monomial(amb, Monomial(amb.num_factors(), 0)), a) == a);
      if (da + db > n) CHECK(cup(a, b).is_zero());
    }
  }
}

TEST_CASE("divisor matrix applied to coordinates equals cup") {
  std::mt19937_64 rng(8);
  for (const auto& amb : {kP1P3, kP4, AmbientSpace({2, 2})}) {
    for (int t = 0; t < 30; ++t) {
      auto z = random_class(rng, amb, 1);
      for (int j = 1; j <= amb.dimension(); ++j) {
        auto alpha = random_class(rng, amb, j - 1);
        auto m = divisor_multiplication_matrix(amb, z, j);
        auto coords = alpha.coords();
        IntegerVector image(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) image[r] += m(r, c) * coords[c];
        CHECK(image == cup(z, alpha).coords());
      }
    }
  }
}

TEST_CASE("parse_class") {
  CHECK(parse_class(kP1P3, "x1*x2^2") == ChowClass::monomial(kP1P3, {1, 2}));
  CHECK(parse_class(kP1P3, "xi*tau") == ChowClass::monomial(kP1P3, {1, 1}));
  CHECK(parse_class(kP1P3, "ξτ") == ChowClass::monomial(kP1P3, {1, 1}));
  CHECK(parse_class(kP1P3, " 3*x1 +4*x2 ").to_string() == "3*x1 + 4*x2");
  CHECK(parse_class(kP1P3, "-2*x2^2 + x1*x2").to_string() == "x1*x2 - 2*x2^2");
  CHECK(parse_class(kP1P3, "x2 - x2", 1).is_zero());
  CHECK(parse_class(kP4, "0", 2).degree() == 2);
  CHECK(parse_class(kP4, "x^2") == ChowClass::monomial(kP4, {2}));
  CHECK(parse_class(kP1P3, "x1^2*x2").is_zero());
  CHECK_THROWS_AS(parse_class(kP1P3, "0"), ParseError);
  CHECK_THROWS_AS(parse_class(kP1P3, "x1 + x2^2"), ParseError);
  CHECK_THROWS_AS(parse_class(kP1P3, "x3"), ParseError);
  CHECK_THROWS_AS(parse_class(kP1P3, "x1 +"), ParseError);
  CHECK_THROWS_AS(parse_class(kP1P3, "x1", 2), ParseError);
  CHECK(parse_int_list("1,3") == std::vector<int>{1, 3});
  CHECK_THROWS_AS(parse_int_list("1,,3"), ParseError);
}

TEST_CASE("to_string round trips through the parser") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto c = random_class(rng, kP1P3, 2);
    if (c.is_zero()) continue;
    CHECK(parse_class(kP1P3, c.to_string()) == c);
  }
}

TEST_CASE("juxtaposition multiplies") {
  CHECK(parse_class(kP1P3, "3x1 + 4x2") == parse_class(kP1P3, "3*x1 + 4*x2"));
  CHECK(parse_class(kP1P3, "2ξτ^2") == parse_class(kP1P3, "2*x1*x2^2"));
  CHECK(parse_class(kP1P3, "x1x2") == parse_class(kP1P3, "x1*x2"));
  CHECK_THROWS_AS(parse_class(kP1P3, "3 4"), ParseError);
}
