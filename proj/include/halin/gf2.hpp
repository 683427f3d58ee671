/*
 * Symmetric bit matrices over GF(2) with fast rank computation.
 *
 * Rank is the inner loop of overlap-matrix enumeration: by Mohar's theorem
 * the GF(2) rank of an overlap matrix equals the Euler genus of the
 * corresponding embedding, so a histogram of ranks over all bit assignments
 * is a genus distribution.  Dimensions here never exceed a machine word.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace halin {

class Gf2Matrix {
public:
  explicit Gf2Matrix(int dim) : dim_(dim), rows_(dim, 0) {}

  int dim() const { return dim_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool v) {
    if (v)
      rows_[r] |= (std::uint64_t{1} << c);
    else
      rows_[r] &= ~(std::uint64_t{1} << c);
  }
  // Set both (r,c) and (c,r); overlap matrices are symmetric.
  void set_sym(int r, int c, bool v) {
    set(r, c, v);
    set(c, r, v);
  }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  std::uint64_t& row(int r) { return rows_[r]; }
  bool is_symmetric() const;

  // Rank over GF(2) by row reduction (XOR elimination).
  int rank() const;

private:
  int dim_;
  std::vector<std::uint64_t> rows_;
};

// Incremental rank over a family of matrices indexed by assignment bits.
//
// Each assignment bit toggles a fixed set of matrix cells (given as
// row/XOR-mask pairs).  Enumerating assignments in Gray-code order flips one
// bit per step; forward elimination processes rows top to bottom and its
// pivot list is append-only, so flipping a bit whose lowest touched row is r
// only invalidates the elimination of rows >= r.  The pivot prefix for rows
// < r is reused, which makes a full sweep far cheaper than re-eliminating
// every matrix from scratch.  Differentially tested against Gf2Matrix::rank.
class RankContext {
public:
  // effects[b] lists (row, mask) pairs XORed into the matrix when bit b
  // flips; a symmetric cell pair contributes to both of its rows.
  RankContext(int dim, std::vector<std::vector<std::pair<int, std::uint64_t>>> effects);

  // Install a full assignment (branch start of a Gray-code subrange).
  void set_assignment(std::uint64_t bits);
  // Toggle one assignment bit.
  void flip(int bit);
  // Rank of the current matrix; re-eliminates only invalidated rows.
  int rank();

  std::uint64_t assignment() const { return bits_; }
  int num_bits() const { return static_cast<int>(effects_.size()); }
  // Lowest matrix row touched by an assignment bit (used to order bits so
  // that frequently flipped ones touch the bottom of the matrix).
  int min_row(int bit) const { return minrow_[bit]; }

private:
  int dim_;
  std::vector<std::vector<std::pair<int, std::uint64_t>>> effects_;
  std::vector<int> minrow_;
  std::vector<std::uint64_t> m_;        // current matrix rows
  std::vector<std::uint64_t> piv_;      // reduced pivot rows, append-only
  std::vector<int> pivcol_;             // pivot column per pivot row
  std::vector<int> cnt_at_;             // #pivots before processing row i
  int dirty_ = 0;                       // lowest row needing re-elimination
  std::uint64_t bits_ = 0;
};

}  // namespace halin
