/*
 * Overlap-matrix families for cubic caterpillar-Halin graphs and their
 * brute-force rank-distribution enumeration.
 *
 * Four symmetric GF(2) families are built from bit assignments:
 *   - tridiagonal m x m (diagonal a, off-diagonal b), distribution L_m;
 *   - the (m+1) x (m+1) Ringel-ladder family (first row/col x_0, z_1..z_m;
 *     trailing tridiagonal block), whose histogram over its 3m free bits is
 *     phi_{m+1};
 *   - the full family Delta_{m_1..m_k} of dimension beta = k + sum(m_i),
 *     whose histogram doubled is the Euler-genus polynomial E_{m_1..m_k};
 *   - Lambda_{m_1..m_k} = Delta with row/column k forced to zero.
 *
 * Enumeration walks the assignment space in Gray-code order with an
 * incremental rank engine and is deterministically parallel: the result is
 * bit-identical for any worker count.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "halin/gf2.hpp"
#include "halin/params.hpp"
#include "halin/polynomial.hpp"

namespace halin {

// Bit assignment for the Delta/Lambda construction, addressable by the
// natural two-index scheme:
//   x0[i-1]      = x_i,      i = 1..k        (diagonal of the e_i corner)
//   y0[i-1]      = y_i,      i = 1..k-1      (e_i ~ e_{i+1} coupling)
//   xi[i-1][l-1] = x_{i,l},  l = 1..m_i      (diagonal of block i)
//   yi[i-1][l-1] = y_{i,l},  l = 1..m_i-1    (within-block coupling)
//   z(i, l)      = z_{i,l}:  z_1 has l = 1..m_1+1; z_i (1 < i < k) has
//                  l = 0..m_i+1; z_k has l = 0..m_k.
// The flat serialization order is x0, y0, x1..xk, y1..yk, z1..zk, each field
// little-endian in its index; this order is the enumeration/partition
// contract that makes parallel runs reproducible.
struct OverlapAssignment {
  explicit OverlapAssignment(const ParamTuple& params);

  ParamTuple params;
  std::vector<std::uint8_t> x0;
  std::vector<std::uint8_t> y0;
  std::vector<std::vector<std::uint8_t>> xi;
  std::vector<std::vector<std::uint8_t>> yi;
  std::vector<std::vector<std::uint8_t>> zi;  // zi[0] starts at l=1, others at l=0

  std::uint8_t& z(int i, int l);               // by the two-index scheme above
  std::uint8_t z(int i, int l) const;
  int num_bits() const;                        // = 3*sum(m) + 3k - 3
  void set_flat(std::uint64_t bits);           // install a flat assignment
  std::uint64_t flat() const;
};

// m x m symmetric tridiagonal matrix: diagonal a (length m), off-diagonal b
// (length m-1).  Throws std::invalid_argument on length mismatch or m < 1.
Gf2Matrix build_tridiag(const std::vector<std::uint8_t>& a,
                        const std::vector<std::uint8_t>& b);

// (m+1) x (m+1) Ringel-ladder family member: first row/column
// (x[0], z[0..m-1]); trailing m x m block tridiagonal with diagonal x[1..m]
// and off-diagonal y.  Requires m >= 1, |x| = m+1, |y| = m-1, |z| = m.
Gf2Matrix build_phi(int m, const std::vector<std::uint8_t>& x,
                    const std::vector<std::uint8_t>& y,
                    const std::vector<std::uint8_t>& z);

// Full overlap matrix of H_{m_1..m_k}, dimension beta = k + sum(m_i), rows
// ordered e_1..e_k then e_{1,1}..e_{1,m_1}, ..., e_{k,1}..e_{k,m_k}:
//   (a) M[i][i] = x_i; M[i][i+1] = y_i
//   (b) block i: diagonal x_{i,l}; e_{i,l} ~ e_{i,l+1} = y_{i,l}
//   (c) e_i ~ e_{i,l} = z_{i,l} for l = 1..m_i
//   (d) e_i ~ e_{i-1,m_{i-1}} = z_{i,0} for i >= 2
//   (e) e_i ~ e_{i+1,1} = z_{i,m_i+1} for i <= k-1
//   (f) everything else 0.
// Requires a strict tuple with k >= 2.
Gf2Matrix build_delta(const ParamTuple& params, const OverlapAssignment& asg);

// Delta with row k and column k forced to zero (x_k, y_{k-1} and the whole
// z_k vector become inert).  Same preconditions as build_delta.
Gf2Matrix build_lambda_matrix(const ParamTuple& params, const OverlapAssignment& asg);

enum class MatrixKind {
  kTridiag,  // params = (m): 2m-1 bits, histogram L_m
  kPhi,      // params = (m): 3m bits, histogram phi_{m+1}
  kDelta,    // strict tuple, k >= 2: 3*sum(m)+3k-3 bits, histogram delta
  kLambda,   // strict tuple, k >= 2: 3*sum(m)-m_k+3k-6 free bits, histogram lambda
};

struct EnumerateOptions {
  int budget_bits = 26;  // refuse jobs with more free bits than this
  int threads = 1;       // worker count; result is identical for any value
};

// Histogram of GF(2) ranks over all assignments of the family's free bits.
// Throws BudgetError when the free bit count exceeds options.budget_bits and
// std::invalid_argument for tuples outside the builder's domain.
GenusPoly enumerate_distribution(MatrixKind kind, const ParamTuple& params,
                                 const EnumerateOptions& options = {});

// Free (enumerated) bit count for the kind/tuple, as used by the budget check.
int enumeration_bit_count(MatrixKind kind, const ParamTuple& params);

// Euler-genus polynomial via the matrix engine: 2 x delta histogram for
// k >= 2, 2 x the Ringel-ladder histogram for k = 1.  Strict tuples only.
GenusPoly matrix_engine_distribution(const ParamTuple& params,
                                     const EnumerateOptions& options = {});

}  // namespace halin
