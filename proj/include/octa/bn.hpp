#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "octa/group_element.hpp"
#include "octa/partitions.hpp"
#include "octa/rational.hpp"
#include "octa/seminormal.hpp"

namespace octa {

/// Value of the multiplicative character Omega_{kn} on a sign vector
/// supported in {1..n}: +1 on the first k coordinates, -1 on the rest,
/// i.e. (-1)^{#flips above k}.
int omega_value(int k, int n, const SignVector& z);

/// A conjugacy class of the rank-n signed-permutation group. The type is
/// padded with length-1 plus entries so its lengths always sum to n.
struct BnClass {
  SignedCycleType type;
  Integer size = 0;

  friend bool operator==(const BnClass& a, const BnClass& b) = default;
};

/// Class of an element with support in {1..n}.
BnClass bn_class_of(const GroupElement& g, int n);

/// Canonical class representative: cycles laid out on consecutive points,
/// plus cycles first; each minus cycle carries one sign bit on its first
/// point.
GroupElement bn_class_representative(const SignedCycleType& type);

/// All conjugacy classes with sizes from the centralizer-order formula.
/// Guarded at n <= 8. Sizes are asserted to sum to 2^n n!.
std::vector<BnClass> bn_classes(int n);

/// Classes recomputed by exhaustive conjugation over all 2^n n! elements;
/// the verification oracle for bn_classes. Guarded at n <= 5.
std::vector<BnClass> bn_classes_brute_force(int n);

/// Minimal-length representatives of the cosets of the Young subgroup
/// S_k x S_{k..n} in S_n, one per k-subset of {1..n} (subsets in
/// lexicographic order; the representative maps {1..k} onto the subset
/// order-preservingly).
std::vector<Permutation> young_coset_representatives(int n, int k);

/// Character of the induced irreducible representation indexed by the
/// bipartition, evaluated on a class: the coset-representative sum of
/// Omega-twisted products of symmetric-group characters.
Integer bn_induced_character(int n, const Bipartition& bp, const BnClass& cls);

struct CharacterTable {
  int n = 0;
  std::vector<Bipartition> bipartitions;       // row order
  std::vector<BnClass> classes;                // column order
  std::vector<Integer> dims;                   // row dimensions
  std::vector<std::vector<Integer>> values;    // values[row][col]

  Integer group_order() const;
  Integer dims_squared_sum() const;
};

/// Full character table; rows are computed independently and in parallel
/// when OpenMP is available. Guarded at n <= 6.
CharacterTable bn_character_table(int n);

/// Serial reference for the table kernel; must agree with
/// bn_character_table entry for entry.
CharacterTable bn_character_table_serial(int n);

/// Induced character at the class of g divided by the dimension; 1 at the
/// identity. Support of g must lie in {1..n}.
Rational bn_normalized_character(int n, const Bipartition& bp, const GroupElement& g);

/// Independent representation oracle: the actual induced matrix of g,
/// assembled from Young seminormal matrices, the Omega twist and
/// block-monomial coset bookkeeping. Guards: n <= 5 and dimension <= 64.
RationalMatrix oracle_matrix(int n, const Bipartition& bp, const GroupElement& g);

/// Trace of oracle_matrix; equals bn_induced_character on the class of g.
Rational oracle_trace(int n, const Bipartition& bp, const GroupElement& g);

std::string table_to_csv(const CharacterTable& t);
nlohmann::json table_to_json(const CharacterTable& t);

/// All 2^n n! elements of the rank-n group (enumeration order fixed).
std::vector<GroupElement> enumerate_bn_elements(int n);

}  // namespace octa
