#include <doctest.h>

#include <random>

#include "chow_obstruct/errors.hpp"
#include "chow_obstruct/obstruction.hpp"

using namespace chowob;

namespace {

const AmbientSpace kP1P3({1, 3});
const AmbientSpace kP4({4});

ChowClass random_class(std::mt19937_64& rng, const AmbientSpace& amb, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  ChowClass c(amb, degree);
  for (const auto& m : monomial_basis(amb, degree)) c.add_term(m, coef(rng));
  return c;
}

ChernPair pair_of(const AmbientSpace& amb, std::string_view c1, std::string_view c2) {
  return {parse_class(amb, c1, 1), parse_class(amb, c2, 2)};
}

}  // namespace

TEST_CASE("theta examples") {
  CHECK(theta(pair_of(kP1P3, "0", "x1*x2")).to_string() == "x1*x2^2");
  for (long m = -3; m <= 3; ++m)
    for (long a = -3; a <= 3; ++a) {
      auto t = theta({Integer(m) * parse_class(kP4, "x"), Integer(a) * parse_class(kP4, "x^2")});
      CHECK(t == reduce_mod2(Integer(a * m) * parse_class(kP4, "x^3")));
    }
  CHECK(theta(pair_of(kP1P3, "3*x1 + x2", "0")).is_zero());
  CHECK_THROWS_AS(theta({parse_class(kP4, "x"), parse_class(kP1P3, "x2^2")}), AmbientMismatch);
}

TEST_CASE("decide on the bidegree (3,4) model") {
  auto model = ComplementModel::from_multidegree(kP1P3, {3, 4});
  const auto even = PushforwardAssumption::even_degree();

  auto trivial = decide(model, pair_of(kP1P3, "0", "0"), even);
  CHECK(trivial.verdict == Verdict::Algebraizable);
  CHECK(trivial.justification.decided_by == DecidedBy::LowerBoundQuotient);

  auto r = decide(model, pair_of(kP1P3, "0", "x1*x2"), even);
  CHECK(r.theta_on_y.to_string() == "x1*x2^2");
  // x1*x2^2 = [Z]*x2^2 - 4*x2^3 vanishes already in the naive quotient mod 2
  CHECK(is_zero(r.theta_lower_image));
  CHECK(r.verdict == Verdict::Algebraizable);
  REQUIRE(r.theta_containing_image);
  CHECK_FALSE(is_zero(*r.theta_containing_image));
  CHECK_FALSE(r.justification.assumption_consistent);
  CHECK(r.justification.lifts_unique);

  // theta = x2^3 survives the naive quotient mod 2; the inconsistent subgroup cannot certify
  auto s = decide(model, pair_of(kP1P3, "x2", "x2^2"), even);
  CHECK_FALSE(is_zero(s.theta_lower_image));
  CHECK(s.verdict == Verdict::Undetermined);
}

TEST_CASE("decide on P^4 examples") {
  auto totaro = load_preset("totaro48");
  auto even_m = decide(totaro.model, {Integer(2) * parse_class(kP4, "x"), parse_class(kP4, "x^2")},
                       PushforwardAssumption::naive());
  CHECK(even_m.verdict == Verdict::Algebraizable);

  auto odd = decide(totaro.model, pair_of(kP4, "x", "3*x^2"), totaro.assumption);
  CHECK(odd.verdict == Verdict::NotAlgebraizable);
  CHECK(odd.justification.decided_by == DecidedBy::ContainingQuotient);
  CHECK_FALSE(is_zero(odd.theta_image));

  auto odd_naive = decide(totaro.model, pair_of(kP4, "x", "3*x^2"), PushforwardAssumption::naive());
  CHECK(odd_naive.verdict == Verdict::Undetermined);

  auto trento = load_preset("trento");
  CHECK(trento.model.multidegree() == IntegerVector{125});
  CHECK(decide(trento.model, pair_of(kP4, "x", "x^2"), trento.assumption).verdict == Verdict::Algebraizable);
  auto even_trento = ComplementModel::from_multidegree(kP4, {250});
  CHECK(decide(even_trento, pair_of(kP4, "x", "x^2"), PushforwardAssumption::naive()).verdict ==
        Verdict::Undetermined);
}

TEST_CASE("decide refuses other dimensions and inapplicable assumptions") {
  auto model = ComplementModel::from_multidegree(AmbientSpace({1, 2}), {2, 2});
  CHECK_THROWS_AS(decide(model, pair_of(AmbientSpace({1, 2}), "x1", "x2^2"), PushforwardAssumption::naive()),
                  DimensionUnsupported);
  auto p4 = ComplementModel::from_multidegree(kP4, {6});
  auto degree2 = PushforwardAssumption::custom({parse_class(kP4, "x^2")}, Containment::ContainsImage, 2);
  CHECK_THROWS_AS(decide(p4, pair_of(kP4, "x", "x^2"), degree2), InapplicableAssumption);
  CHECK_THROWS_AS(decide(p4, pair_of(kP1P3, "x1", "x2^2"), PushforwardAssumption::naive()), AmbientMismatch);
}

TEST_CASE("soundness order of verdicts") {
  std::mt19937_64 rng(17);
  std::vector<std::pair<ComplementModel, PushforwardAssumption>> cases{
      {ComplementModel::from_multidegree(kP1P3, {3, 4}), PushforwardAssumption::naive()},
      {ComplementModel::from_multidegree(kP1P3, {3, 4}), PushforwardAssumption::even_degree()},
      {ComplementModel::from_multidegree(kP1P3, {2, 6}), PushforwardAssumption::nori()},
      {ComplementModel::from_multidegree(kP4, {48}), PushforwardAssumption::even_degree()},
      {ComplementModel::from_multidegree(kP4, {10}), PushforwardAssumption::naive()},
  };
  for (const auto& [model, assumption] : cases)
    for (int t = 0; t < 40; ++t) {
      const auto& amb = model.ambient();
      auto r = decide(model, {random_class(rng, amb, 1, 5), random_class(rng, amb, 2, 5)}, assumption);
      const auto& j = r.justification;
      if (r.verdict == Verdict::NotAlgebraizable) {
        CHECK(j.decided_by == DecidedBy::ContainingQuotient);
        CHECK(assumption.containment() != Containment::ContainedInImage);
        CHECK(j.assumption_consistent);
        CHECK_FALSE(is_zero(r.theta_image));
      }
      if (r.verdict == Verdict::Algebraizable) {
        CHECK(j.decided_by == DecidedBy::LowerBoundQuotient);
        CHECK(is_zero(r.theta_lower_image));
      }
      if (assumption.kind == AssumptionKind::NaiveDivisor) CHECK(r.verdict != Verdict::NotAlgebraizable);
      CHECK_FALSE(j.hypotheses.empty());
      CHECK(j.sq1.find("H^{3,1}") != std::string::npos);
    }
}

TEST_CASE("decide is independent of the chosen lifts") {
  std::mt19937_64 rng(200);
  std::vector<std::pair<ComplementModel, PushforwardAssumption>> cases{
      {ComplementModel::from_multidegree(kP1P3, {3, 4}), PushforwardAssumption::even_degree()},
      {ComplementModel::from_multidegree(kP1P3, {2, 2}), PushforwardAssumption::naive()},
      {ComplementModel::from_multidegree(kP4, {48}), PushforwardAssumption::even_degree()},
      {ComplementModel::from_multidegree(kP4, {250}), PushforwardAssumption::naive()},
  };
  std::uniform_int_distribution<long> k(-7, 7);
  for (int t = 0; t < 200; ++t) {
    const auto& [model, assumption] = cases[t % cases.size()];
    const auto& amb = model.ambient();
    auto c1 = random_class(rng, amb, 1, 9);
    auto c2 = random_class(rng, amb, 2, 9);
    auto c1b = c1 + Integer(k(rng)) * model.z_class();
    auto c2b = c2 + cup(model.z_class(), random_class(rng, amb, 1, 9));
    auto r = decide(model, {c1, c2}, assumption);
    auto rb = decide(model, {c1b, c2b}, assumption);
    CHECK(r.verdict == rb.verdict);
    CHECK(r.theta_image == rb.theta_image);
    CHECK(r.theta_image.coords == rb.theta_image.coords);
  }
}

TEST_CASE("theta is affine in c1") {
  std::mt19937_64 rng(9);
  for (const auto& amb : {kP1P3, kP4}) {
    for (int t = 0; t < 100; ++t) {
      auto a = random_class(rng, amb, 1, 9), b = random_class(rng, amb, 1, 9);
      auto c2 = random_class(rng, amb, 2, 9);
      CHECK(theta({a + b, c2}) + theta({ChowClass(amb, 1), c2}) == theta({a, c2}) + theta({b, c2}));
    }
  }
}

TEST_CASE("classify_all on P^4 degree 48") {
  auto preset = load_preset("totaro48");
  auto rows = classify_all(preset.model, preset.assumption);
  CHECK(rows.size() == 48 * 48);
  for (const auto& row : rows) {
    const Integer m = row.c1.coords[0], a = row.c2.coords[0];
    const bool odd = (m % 2 != 0) && (a % 2 != 0);
    CHECK(row.verdict == (odd ? Verdict::NotAlgebraizable : Verdict::Algebraizable));
  }
  auto parallel = classify_all(preset.model, preset.assumption, std::nullopt, 4);
  REQUIRE(parallel.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parallel[i].c1_index == rows[i].c1_index);
    CHECK(parallel[i].c2_index == rows[i].c2_index);
    CHECK(parallel[i].c1.coords == rows[i].c1.coords);
    CHECK(parallel[i].c2.coords == rows[i].c2.coords);
    CHECK(parallel[i].verdict == rows[i].verdict);
  }
}

TEST_CASE("classify_all row counts and errors") {
  auto model = ComplementModel::from_multidegree(kP4, {6});
  CHECK(classify_all(model, PushforwardAssumption::naive()).size() == 36);
  auto bideg = ComplementModel::from_multidegree(kP1P3, {3, 4});
  CHECK_THROWS_AS(classify_all(bideg, PushforwardAssumption::even_degree()), InfiniteGroup);
  auto fixed = classify_all(bideg, PushforwardAssumption::even_degree(), ChowClass(kP1P3, 1));
  CHECK(fixed.size() == 16);
  CHECK(fixed.front().verdict == Verdict::Algebraizable);
  for (const auto& row : fixed) CHECK(row.verdict != Verdict::NotAlgebraizable);
  CHECK_THROWS_AS(classify_all(bideg, PushforwardAssumption::naive(), parse_class(kP1P3, "x2^2")),
                  InvalidArgument);
}

TEST_CASE("presets") {
  CHECK(load_preset("trento:7").model.multidegree() == IntegerVector{343});
  CHECK_THROWS_AS(load_preset("trento:9"), InvalidArgument);
  CHECK_THROWS_AS(load_preset("trento:x"), ParseError);
  CHECK(load_preset("bidegree34").model.multidegree() == IntegerVector{3, 4});
  CHECK(load_preset("nori:12").assumption.kind == AssumptionKind::NoriExact);
  CHECK_THROWS_AS(load_preset("nori"), ParseError);
  CHECK_THROWS_AS(load_preset("unknown"), ParseError);
}
