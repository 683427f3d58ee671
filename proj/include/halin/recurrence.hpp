/*
 * The fast engine: Euler-genus polynomials of cubic caterpillar-Halin
 * graphs via three-term recurrences, together with the low-genus closed
 * forms and parameter-tuple canonicalization.
 *
 * Building blocks:
 *   L_m      (tridiagonal family distribution)
 *   phi_m    (Ringel-ladder distribution; R_{m-1} has 2*phi_m embeddings
 *             split by Euler genus as 2*phi_m's coefficients)
 *   lambda_{m_1..m_k}   (k >= 2; last overlap row/column deleted)
 *   E_{m_1..m_k}        (the Euler-genus polynomial itself)
 *
 * Single-entry tuples follow the Ringel-ladder identification
 * E_(m) = 2*phi_{m+1}, consistent with the trailing-entry rewrites
 * E(..., 0) = E(..., +1) and E(..., 1) = E(..., +2) in both directions.
 *
 * All results are memoized on the exact (non-canonicalized) tuple; the memo
 * tables are mutex-guarded and safe for concurrent use.
 */
#pragma once

#include "halin/params.hpp"
#include "halin/polynomial.hpp"

namespace halin {

// L_m(z); m >= 1.  L_1 = 1+z, L_2 = 1+3z+4z^2,
// L_m = (1+2z) L_{m-1} + 4z^2 L_{m-2}.
GenusPoly L_poly(int m);

// phi_m(z); m >= 2.  phi_2 = 1+3z+4z^2, phi_3 = 1+7z+28z^2+28z^3,
// phi_{m+1} = (1+4z) phi_m + 16z^2 phi_{m-1} + 2^m z^2 L_{m-1}.
GenusPoly phi_poly(int m);

// lambda_{m_1..m_k}(z); k >= 2, m_i >= 1 for i < k, m_k >= 0.
// Reduction in m_k: lambda(..., m) = (1+2z) lambda(..., m-1) + 4z^2 lambda(..., m-2);
// k = 2 floors: lambda_{m_1,0} = phi_{m_1+1},
//               lambda_{m_1,1} = (1+2z) phi_{m_1+1} + 2^{m_1+1} z^2 L_{m_1};
// k >= 3 floors: lambda_{...,0} = E_{head}/2 (exact halving, asserted),
//               lambda_{...,1} = (1+2z)/2 E_{head} + 2^{m_{k-1}+3} z^2 lambda_{head}.
GenusPoly lambda_poly(const ParamTuple& params);

// E_{m_1..m_k}(z) for any valid extended tuple.
// k = 1: E_(m) = 2 phi_{m+1};
// k = 2 floors: E_{m_1,0} = 2 phi_{m_1+2}, E_{m_1,1} = 2 phi_{m_1+3};
// k >= 3 floors rewrite the tuple: E(..., m_{k-1}, 0) = E(..., m_{k-1}+1),
//   E(..., m_{k-1}, 1) = E(..., m_{k-1}+2);
// otherwise E(..., m) = (1+4z) E(..., m-1) + 16z^2 E(..., m-2)
//   + 2^{m+3} z^2 lambda(..., m-1).
GenusPoly euler_genus_poly(const ParamTuple& params);

// Canonical representative of the isomorphism class: rewrite a trailing 0
// by dropping it and adding 1 to the new last entry, a trailing 1 by
// dropping it and adding 2, until k = 1 or m_k >= 2; then return the
// lexicographically smaller of the tuple and its reversal.
ParamTuple canonicalize(const ParamTuple& params);

// Closed form for the count of embeddings with Euler genus `genus`:
//   genus 0 -> 2 (every graph here has exactly two planar T-rotation systems)
//   genus 1 -> 8(sum m_i + k) - 10
//   genus 2 -> the quadratic/exponential closed form; k >= 2, strict tuples
//              only (k = 1 throws UnsupportedError, non-strict throws
//              std::invalid_argument).
BigInt closed_form_eps(const ParamTuple& params, int genus);

}  // namespace halin
