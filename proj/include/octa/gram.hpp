#pragma once

#include <functional>
#include <vector>

#include "octa/group_element.hpp"
#include "octa/rational.hpp"

namespace octa {

using StateFunction = std::function<Rational(const GroupElement&)>;

/// Outcome of a positive-semidefiniteness check. When the verdict is
/// not_psd, a violating principal minor is reported: the element indices
/// of the submatrix and its (negative) determinant.
struct GramCheck {
  bool psd = true;
  bool exact = true;  // false when the floating-point path decided
  std::vector<int> witness_indices;
  Rational witness_minor = 0;
};

/// Gram matrix G_ij = phi(g_i^{-1} g_j); entries filled in parallel when
/// OpenMP is available. phi must be symmetric in the sense
/// phi(g^{-1}) = phi(g), which is asserted.
std::vector<std::vector<Rational>> build_gram(const StateFunction& phi,
                                              const std::vector<GroupElement>& elems);

/// Serial reference for the Gram assembly kernel.
std::vector<std::vector<Rational>> build_gram_serial(const StateFunction& phi,
                                                     const std::vector<GroupElement>& elems);

/// Exact check by symmetric elimination with the nonnegative-pivot
/// criterion: a negative pivot yields a negative leading minor; a zero
/// pivot whose row does not vanish yields a negative principal minor.
/// Guarded at size <= 16.
GramCheck gram_psd_check_exact(const std::vector<std::vector<Rational>>& gram);

/// Dispatches on size: exact elimination up to 16 elements, floating
/// eigenvalues (tolerance -1e-9, labeled approximate) beyond.
GramCheck gram_psd_check(const StateFunction& phi, const std::vector<GroupElement>& elems);

}  // namespace octa
