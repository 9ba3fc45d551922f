#pragma once

#include <vector>

#include "octa/partitions.hpp"
#include "octa/rational.hpp"

namespace octa {

class Permutation;

/// Dense rational matrix, just big enough for the representation oracle.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational trace() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix kronecker(const RationalMatrix& other) const;
  void scale(const Rational& c);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// A standard Young tableau of shape lambda |- n, stored as the (row, col)
/// position of each entry 1..n (0-based coordinates).
struct StandardTableau {
  std::vector<std::pair<int, int>> cell;  // cell[m] = position of m+1

  int row_of(int entry) const { return cell[entry - 1].first; }
  int col_of(int entry) const { return cell[entry - 1].second; }
};

std::vector<StandardTableau> standard_tableaux(const Partition& lam);

/// Young's seminormal representation of S_n for the shape lambda: exact
/// rational matrices, no square roots. Basis order is the enumeration
/// order of standard_tableaux.
class SeminormalRep {
public:
  explicit SeminormalRep(Partition lam);

  std::size_t dimension() const { return tableaux_.size(); }
  int degree() const { return n_; }

  /// Matrix of the adjacent transposition (i, i+1), 1 <= i < n.
  const RationalMatrix& generator(int i) const;

  /// Matrix of an arbitrary permutation supported on {1..n}, built as a
  /// product of generator matrices.
  RationalMatrix matrix(const Permutation& s) const;

private:
  Partition lam_;
  int n_;
  std::vector<StandardTableau> tableaux_;
  std::vector<RationalMatrix> gens_;  // gens_[i-1] = matrix of (i, i+1)
};

}  // namespace octa
