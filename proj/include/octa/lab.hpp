#pragma once

#include <vector>

#include "octa/group_element.hpp"
#include "octa/rational.hpp"

namespace octa {

/// Bernoulli parameter of the product measure on {0,1}^N: nu(0) = p,
/// nu(1) = q = 1 - p, both strictly positive.
struct BernoulliParam {
  Rational p;

  explicit BernoulliParam(Rational p_in);
  Rational q() const { return Rational(1) - p; }
};

/// Matrix coefficient <T(1^{[1,m]}) e_j, e_j> of the sign-flip block on
/// l^2(N): -1 once the block covers index j, +1 before. The defect
/// |value - 1| stays at 2 for every m >= j while the conjugating block
/// tends to the identity automorphism; that is the non-tameness witness.
Rational example1_pairing(int m, int f_index);

/// <Pi(g) 1, 1> on L^2({0,1}^m, nu^m) by literal summation over all 2^m
/// configurations with exact weights. Computed at truncations m and m+1;
/// the two sums must agree once m covers the support. Guards:
/// m >= max support of g, m <= 20.
Rational example3_state(const BernoulliParam& p, const GroupElement& g, int m);

/// The sum at a single truncation (no stability recheck); parallel over
/// the configuration space when OpenMP is available.
Rational example3_state_at(const BernoulliParam& p, const GroupElement& g, int m);

/// Serial reference for the configuration-sum kernel.
Rational example3_state_at_serial(const BernoulliParam& p, const GroupElement& g, int m);

/// The stability defect <Pi(1^(n)) Pi((n n+1)) Pi(1^(n)) 1, 1> -
/// <Pi((n n+1)) 1, 1>, assembled from example3_state values at truncation
/// n+1. Equals (p-q)^2 - 1; the closed form is reserved for acceptance
/// checks.
Rational example3_defect(const BernoulliParam& p, int n);

/// (m, value) series for convergence inspection.
std::vector<std::pair<int, Rational>> example1_series(int f_index, int max_m);
std::vector<std::pair<int, Rational>> example3_defect_series(const BernoulliParam& p, int n,
                                                             int max_m);

}  // namespace octa
