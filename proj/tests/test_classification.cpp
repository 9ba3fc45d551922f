#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octa/classification.hpp"
#include "support/generators.hpp"

using namespace octa;

namespace {

RepSpec spec_with(int n, int k, std::vector<int> l0, std::vector<int> l1,
                  const ThomaSpec& thoma) {
  RepSpec s;
  s.n = n;
  s.k = k;
  s.bp = {Partition(std::move(l0)), Partition(std::move(l1))};
  s.thoma = thoma;
  return validate_rep_spec(std::move(s));
}

ThomaSpec gammas(const Rational& g0, const Rational& g1) {
  ThomaSpec t;
  Rational rest = Rational(1) - g0 - g1;
  if (rest > 0) t.alpha = {{rest, 0}};
  t.gamma0 = g0;
  t.gamma1 = g1;
  return validate_spec(t);
}

ThomaSpec flat_alpha(int sigma = 0) {
  ThomaSpec t;
  t.alpha = {{Rational(1), sigma}};
  return validate_spec(t);
}

ThomaSpec halves_zero_gamma() {
  ThomaSpec t;
  t.alpha = {{Rational(1, 2), 0}, {Rational(1, 2), 0}};
  return validate_spec(t);
}

}  // namespace

TEST_CASE("central depth follows the gamma pattern") {
  ThomaSpec both = gammas(Rational(1, 4), Rational(1, 4));
  CHECK(central_depth(spec_with(3, 1, {1}, {2}, both)) == 0);
  CHECK(central_depth(spec_with(2, 2, {1, 1}, {}, both)) == 0);

  ThomaSpec g0zero = gammas(0, Rational(1, 2));
  CHECK(central_depth(spec_with(3, 2, {2}, {1}, g0zero)) == 2);

  ThomaSpec g1zero = gammas(Rational(1, 2), 0);
  CHECK(central_depth(spec_with(3, 2, {2}, {1}, g1zero)) == 1);

  CHECK(central_depth(spec_with(3, 1, {1}, {1, 1}, halves_zero_gamma())) == 3);
}

TEST_CASE("factor types cover the decision table") {
  ThomaSpec both = gammas(Rational(1, 4), Rational(1, 4));
  CHECK(factor_type(spec_with(3, 1, {1}, {2}, both)) == FactorType::II_1);

  ThomaSpec g0zero = gammas(0, Rational(1, 2));
  CHECK(factor_type(spec_with(2, 0, {}, {2}, g0zero)) == FactorType::II_1);
  CHECK(factor_type(spec_with(2, 1, {1}, {1}, g0zero)) == FactorType::II_inf);

  ThomaSpec g1zero = gammas(Rational(1, 2), 0);
  CHECK(factor_type(spec_with(2, 2, {2}, {}, g1zero)) == FactorType::II_1);
  CHECK(factor_type(spec_with(2, 1, {1}, {1}, g1zero)) == FactorType::II_inf);

  CHECK(factor_type(spec_with(1, 0, {}, {1}, halves_zero_gamma())) == FactorType::II_inf);
  CHECK(factor_type(spec_with(2, 1, {1}, {1}, flat_alpha())) == FactorType::I_inf);
  CHECK(factor_type(spec_with(0, 0, {}, {}, flat_alpha())) == FactorType::I_1);
  CHECK(factor_type(spec_with(0, 0, {}, {}, halves_zero_gamma())) == FactorType::II_1);

  ThomaSpec flat_beta;
  flat_beta.beta = {{Rational(1), 1}};
  flat_beta = validate_spec(flat_beta);
  CHECK(factor_type(spec_with(1, 0, {}, {1}, flat_beta)) == FactorType::I_inf);
}

TEST_CASE("quasi-equivalence on the stated examples") {
  ThomaSpec both = gammas(Rational(1, 4), Rational(1, 4));
  RepSpec a = spec_with(3, 1, {1}, {2}, both);
  CHECK(quasi_equivalent(a, a).equivalent);

  // gamma = (0,0): the bipartition separates
  RepSpec p = spec_with(2, 2, {2}, {}, halves_zero_gamma());
  RepSpec q = spec_with(2, 2, {1, 1}, {}, halves_zero_gamma());
  CHECK(!quasi_equivalent(p, q).equivalent);

  // II1: only the character matters
  RepSpec b = spec_with(2, 0, {}, {2}, both);
  CHECK(quasi_equivalent(a, b).equivalent);
}

TEST_CASE("quasi-equivalence branch invariants") {
  ThomaSpec g0zero = gammas(0, Rational(1, 2));
  RepSpec a = spec_with(3, 1, {1}, {2}, g0zero);
  RepSpec same_head = spec_with(2, 1, {1}, {1}, g0zero);
  RepSpec other_head = spec_with(3, 1, {1}, {1, 1}, g0zero);
  CHECK(quasi_equivalent(a, same_head).equivalent);
  CHECK(quasi_equivalent(a, other_head).equivalent);
  RepSpec head2 = spec_with(3, 2, {2}, {1}, g0zero);
  CHECK(!quasi_equivalent(a, head2).equivalent);
  RepSpec head_sign = spec_with(3, 1, {1}, {2}, gammas(0, Rational(1, 3)));
  CHECK(!quasi_equivalent(a, head_sign).equivalent);

  ThomaSpec g1zero = gammas(Rational(1, 2), 0);
  RepSpec m = spec_with(3, 1, {1}, {2}, g1zero);
  RepSpec same_tail = spec_with(4, 2, {2}, {2}, g1zero);
  CHECK(quasi_equivalent(m, same_tail).equivalent);
  RepSpec other_tail = spec_with(3, 1, {1}, {1, 1}, g1zero);
  CHECK(!quasi_equivalent(m, other_tail).equivalent);

  RepSpec z1 = spec_with(2, 1, {1}, {1}, halves_zero_gamma());
  RepSpec z2 = spec_with(3, 1, {1}, {2}, halves_zero_gamma());
  CHECK(!quasi_equivalent(z1, z2).equivalent);
}

TEST_CASE("equivalence relation and invariance of type and depth") {
  testgen::Rng rng(808);
  std::vector<RepSpec> family;
  std::vector<ThomaSpec> thomas;
  for (int i = 0; i < 6; ++i) thomas.push_back(testgen::random_thoma(rng));
  for (const auto& t : thomas)
    for (int j = 0; j < 4; ++j) family.push_back(testgen::random_rep_spec(rng, t));

  auto eq = [&](const RepSpec& x, const RepSpec& y) { return quasi_equivalent(x, y).equivalent; };
  for (const auto& x : family) CHECK(eq(x, x));
  for (const auto& x : family)
    for (const auto& y : family) {
      CHECK(eq(x, y) == eq(y, x));
      if (eq(x, y)) {
        CHECK(factor_type(x) == factor_type(y));
        CHECK(central_depth(x) == central_depth(y));
      }
      for (const auto& z : family)
        if (eq(x, y) && eq(y, z)) CHECK(eq(x, z));
    }
}

TEST_CASE("zero depth exactly for finite types") {
  testgen::Rng rng(809);
  for (int trial = 0; trial < 100; ++trial) {
    RepSpec spec = testgen::random_rep_spec(rng);
    bool zero_depth = central_depth(spec) == 0;
    FactorType t = factor_type(spec);
    bool finite = t == FactorType::II_1 || t == FactorType::I_1;
    CHECK(zero_depth == finite);
  }
}

TEST_CASE("classification JSON") {
  ThomaSpec both = gammas(Rational(1, 4), Rational(1, 4));
  RepSpec a = spec_with(3, 1, {1}, {2}, both);
  RepSpec b = spec_with(2, 0, {}, {2}, both);
  auto doc = classification_json(a, b);
  CHECK(doc["quasi_equivalent"] == true);
  CHECK(doc["central_depth"] == nlohmann::json({0, 0}));
  CHECK(doc["factor_type"] == nlohmann::json({"II_1", "II_1"}));
}
