// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails. OCTA_SLOW_TESTS=1 extends the
// orthogonality check to ranks 5 and 6.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "octa/bn.hpp"
#include "octa/classification.hpp"
#include "octa/gram.hpp"
#include "octa/induced.hpp"
#include "octa/lab.hpp"
#include "octa/thoma.hpp"
#include "support/generators.hpp"
#include "support/pair_group.hpp"

using namespace octa;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

GroupElement from_pair(const pair_group::Elem& p) {
  std::map<int, int> m;
  for (std::size_t i = 0; i < p.s.size(); ++i) m[static_cast<int>(i) + 1] = p.s[i];
  std::set<int> flips;
  for (std::size_t i = 0; i < p.s.size(); ++i)
    if (p.z & (1u << i)) flips.insert(static_cast<int>(i) + 1);
  return GroupElement{Permutation::from_mapping(m), SignVector(std::move(flips))};
}

bool slow_tests_enabled() {
  const char* v = std::getenv("OCTA_SLOW_TESTS");
  return v != nullptr && std::string(v) == "1";
}

// ---- criteria ----

void criterion_tables_match_oracle() {
  auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 4; ++n) {
    auto bps = enumerate_bipartitions(n);
    for (const auto& cls : bn_classes(n)) {
      GroupElement g = bn_class_representative(cls.type);
      for (const auto& bp : bps)
        require(oracle_trace(n, bp, g) == Rational(bn_induced_character(n, bp, cls)),
                "oracle mismatch at n=" + std::to_string(n) + " bp=" + bp.to_string() +
                    " class=" + cls.type.to_string());
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs <= 60.0, "runtime budget exceeded: " + std::to_string(secs) + "s");
}

void criterion_orthogonality_and_dims() {
  int max_orth = slow_tests_enabled() ? 6 : 4;
  for (int n = 1; n <= max_orth; ++n) {
    CharacterTable t = bn_character_table(n);
    Integer order = t.group_order();
    for (std::size_t a = 0; a < t.bipartitions.size(); ++a)
      for (std::size_t b = a; b < t.bipartitions.size(); ++b) {
        Integer total = 0;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          total += t.classes[c].size * t.values[a][c] * t.values[b][c];
        require(total == (a == b ? order : Integer(0)),
                "orthogonality fails at n=" + std::to_string(n));
      }
  }
  for (int n = 1; n <= 6; ++n) {
    CharacterTable t = bn_character_table(n);
    require(t.dims_squared_sum() == t.group_order(),
            "dimension squares at n=" + std::to_string(n));
  }
}

void criterion_class_sizes() {
  for (int n = 1; n <= 4; ++n) {
    auto key = [](const std::vector<BnClass>& cs) {
      std::map<std::string, Integer> m;
      for (const auto& c : cs) m[c.type.to_string()] = c.size;
      return m;
    };
    require(key(bn_classes(n)) == key(bn_classes_brute_force(n)),
            "class sizes disagree with enumeration at n=" + std::to_string(n));
  }
}

void criterion_character_properties() {
  testgen::Rng rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    ThomaSpec spec = testgen::random_thoma(rng);
    GroupElement g = testgen::random_element(rng, 8);
    GroupElement h = testgen::random_element(rng, 8);
    require(character_value(spec, conjugate(g, h)) == character_value(spec, g),
            "class-function property failed");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    ThomaSpec spec = testgen::random_thoma(rng);
    GroupElement g = testgen::random_element(rng, 5);
    GroupElement h = shift_conjugate(testgen::random_element(rng, 5), 5);
    require(character_value(spec, multiply(g, h)) ==
                character_value(spec, g) * character_value(spec, h),
            "multiplicativity failed");
  }
  for (int trial = 0; trial < 200; ++trial) {
    ThomaSpec spec = testgen::random_thoma(rng);
    int k = rng.uniform(2, 8);
    std::vector<int> orbit(k);
    std::iota(orbit.begin(), orbit.end(), 1);
    Rational expected = 0;
    for (const auto& e : spec.alpha) expected += pow_rational(e.value, k);
    Rational betas = 0;
    for (const auto& e : spec.beta) betas += pow_rational(e.value, k);
    if (k % 2 == 1)
      expected += betas;
    else
      expected -= betas;
    require(character_value(spec, GroupElement{Permutation::from_cycles({orbit}), {}}) ==
                expected,
            "Thoma restriction failed");
  }
  for (int trial = 0; trial < 200; ++trial) {
    ThomaSpec spec = testgen::random_thoma(rng);
    GroupElement g = testgen::random_element(rng, 8);
    Rational expected = character_value(spec, g);
    if (g.signs.count() % 2 == 1) expected = -expected;
    require(character_value(sign_twist(spec), g) == expected, "sign-twist symmetry failed");
  }
}

void criterion_positive_definiteness() {
  testgen::Rng rng(1002);
  for (int trial = 0; trial < 20; ++trial) {
    ThomaSpec spec = testgen::random_thoma(rng);
    StateFunction phi = [&](const GroupElement& g) { return character_value(spec, g); };
    std::vector<GroupElement> elems{GroupElement{}};
    int count = rng.uniform(3, 9);
    for (int i = 0; i < count; ++i) elems.push_back(testgen::random_element(rng, 6));
    GramCheck check = gram_psd_check(phi, elems);
    require(check.psd && check.exact, "character gram not psd");
  }
  for (int trial = 0; trial < 20; ++trial) {
    RepSpec spec = testgen::random_rep_spec(rng);
    StateFunction phi = [&](const GroupElement& g) { return induced_state(spec, g); };
    std::vector<GroupElement> elems{GroupElement{}};
    int count = rng.uniform(3, 9);
    for (int i = 0; i < count; ++i) elems.push_back(testgen::random_element(rng, 6));
    GramCheck check = gram_psd_check(phi, elems);
    require(check.psd && check.exact, "induced-state gram not psd");
  }
}

void criterion_example3() {
  struct Case {
    Rational p;
    Rational expected;
  };
  std::vector<Case> cases = {{Rational(1, 2), Rational(-1)},
                             {Rational(3, 4), Rational(-3, 4)},
                             {Rational(9, 10), Rational(-9, 25)}};
  for (const auto& c : cases) {
    BernoulliParam p(c.p);
    for (int n = 1; n <= 4; ++n) {  // truncations n+1 <= 5, stability check at 6
      Rational defect = example3_defect(p, n);
      require(defect == c.expected, "defect mismatch at p=" + format_rational(c.p));
      Rational closed = (c.p - p.q()) * (c.p - p.q()) - 1;
      require(defect == closed, "closed form disagrees");
    }
  }
}

void criterion_example1() {
  for (int j : {1, 2, 7, 33}) {
    for (int m = j; m <= 64; ++m) {
      Rational defect = example1_pairing(m, j) - 1;
      if (defect < 0) defect = -defect;
      require(defect == 2, "non-tameness defect lost at m=" + std::to_string(m));
    }
  }
}

void criterion_asymptotic_character() {
  testgen::Rng rng(1003);
  for (int trial = 0; trial < 100; ++trial) {
    RepSpec spec = testgen::random_rep_spec(rng);
    GroupElement g = testgen::random_element(rng, 6);
    Rational estimate;
    try {
      estimate = asymptotic_character_estimate(spec, g);
    } catch (const std::logic_error& e) {
      require(false, std::string("three-shift constancy broke: ") + e.what());
    }
    require(estimate == character_value(spec.thoma, g),
            "asymptotic estimate differs from the character");
  }
}

void criterion_classification() {
  testgen::Rng rng(1004);
  std::vector<RepSpec> family;
  for (auto mode : {testgen::GammaMode::both_positive, testgen::GammaMode::gamma0_zero,
                    testgen::GammaMode::gamma1_zero, testgen::GammaMode::both_zero}) {
    for (int t = 0; t < 4; ++t) {
      ThomaSpec thoma = testgen::random_thoma(rng, mode);
      for (int s = 0; s < 4; ++s) family.push_back(testgen::random_rep_spec(rng, thoma));
    }
  }
  require(family.size() >= 50, "family too small");

  const int n = static_cast<int>(family.size());
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) eq[i][j] = quasi_equivalent(family[i], family[j]).equivalent;

  int nontrivial_pairs = 0, distinct_pairs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) (eq[i][j] ? nontrivial_pairs : distinct_pairs)++;
  require(nontrivial_pairs > 0 && distinct_pairs > 0, "family gives a vacuous relation");

  for (int i = 0; i < n; ++i) require(eq[i][i], "not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) require(eq[i][j] == eq[j][i], "not symmetric");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!eq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (eq[j][k]) require(eq[i][k], "not transitive");
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!eq[i][j]) continue;
      require(factor_type(family[i]) == factor_type(family[j]),
              "equivalent specs with different factor types");
      require(central_depth(family[i]) == central_depth(family[j]),
              "equivalent specs with different central depths");
      for (int t = 0; t < 10; ++t) {
        GroupElement g = testgen::random_element(rng, 6);
        require(asymptotic_character_estimate(family[i], g) ==
                    asymptotic_character_estimate(family[j], g),
                "equivalent specs with different asymptotic characters");
      }
    }
}

void criterion_coset_algorithm() {
  testgen::Rng rng(1005);
  for (int trial = 0; trial < 1000; ++trial) {
    Permutation s = testgen::random_permutation(rng, 10);
    int k = rng.uniform(0, 10);
    CosetInvolution inv = canonical_coset_involution(s, k);
    Permutation shat = inv.as_permutation();
    require((shat * shat).is_identity(), "not an involution");
    require((shat.inverse() * s).preserves_prefix(k), "membership postcondition failed");

    Permutation head = testgen::random_permutation(rng, k);
    Permutation tail = shift_conjugate(
        GroupElement{testgen::random_permutation(rng, 6), SignVector{}}, k + 7).perm;
    require(canonical_coset_involution(shat * (head * tail), k) == inv,
            "round-trip through the coset failed");
  }
}

void criterion_group_law_lock() {
  for (int n : {2, 3}) {
    auto elems = pair_group::all_elements(n);
    require(elems.size() == (n == 2 ? 8u : 48u), "pair group has the wrong order");
    for (const auto& a : elems)
      for (const auto& b : elems)
        require(multiply(from_pair(a), from_pair(b)) == from_pair(pair_group::mul(a, b)),
                "multiplication tables disagree at rank " + std::to_string(n));
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string label;
    std::function<void()> body;
  };
  std::vector<Criterion> criteria = {
      {"rank 1..4 character tables match the matrix oracle on every pair",
       criterion_tables_match_oracle},
      {"first orthogonality and dimension squares", criterion_orthogonality_and_dims},
      {"class sizes match exhaustive enumeration up to rank 4", criterion_class_sizes},
      {"character property suite (class function, multiplicativity, restriction, twist)",
       criterion_character_properties},
      {"gram matrices of characters and induced states are psd", criterion_positive_definiteness},
      {"product-measure stability defect equals (p-q)^2 - 1", criterion_example3},
      {"sign-block non-tameness defect stays at 2 up to m = 64", criterion_example1},
      {"asymptotic character estimate equals the character on 100 random pairs",
       criterion_asymptotic_character},
      {"quasi-equivalence is an equivalence with matching invariants",
       criterion_classification},
      {"canonical coset involution round-trip on 1000 random cosets",
       criterion_coset_algorithm},
      {"group law locked against the hand-coded pair-convention tables",
       criterion_group_law_lock},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].body();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s (%.2fs)%s%s\n", verdict.c_str(), i + 1, criteria[i].label.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
