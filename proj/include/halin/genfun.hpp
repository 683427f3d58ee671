/*
 * Generating-function engine: exact truncated Laurent series in t_1..t_k
 * and z with big-integer coefficients.
 *
 * Rational closed forms are realized as numerator * invert(denominator).
 * The engine produces the one-variable series L*(t,z) (coefficient of t^m
 * is 2^m L_m) and phi(t,z) (coefficient of t^m is phi_m), the k = 2 bundle
 * (lambda^1, lambda^2, E^1, E^2), and the 4x4 transfer step appending one
 * spine block.  The coefficient of t_1^{m_1}..t_k^{m_k} in E^1 is the
 * Euler-genus polynomial E_{m_1..m_k}; lambda^1/lambda^2 carry a 2^{m_k}
 * weight on their coefficients.
 *
 * Negative t-exponents go down to -3 (the deepest power appearing in the
 * closed forms); every level is computed with a uniform internal guard of
 * +6 on each t-window so that the negative powers and the t_{k-1}^{-1}
 * factors of the transfer entries never eat into requested coefficients.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "halin/params.hpp"
#include "halin/polynomial.hpp"

namespace halin {

class LaurentSeries {
public:
  // Exponent key: the k t-exponents.  Each key maps to a dense row of
  // z-coefficients (index = z-exponent, trailing zeros trimmed, no empty
  // rows stored); folding z into the rows keeps products cheap.
  using Key = std::vector<std::int16_t>;
  using Row = std::vector<BigInt>;
  using TermMap = std::map<Key, Row>;

  LaurentSeries(int k, std::vector<int> hi, int zmax);

  int k() const { return k_; }
  const std::vector<int>& trunc() const { return hi_; }
  int zmax() const { return zmax_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Add c * t^texp z^zexp, silently dropping exponents above the window.
  // t-exponents below -3 are an internal error (logic_error); z < 0 too.
  LaurentSeries& add_term(const std::vector<int>& texp, int zexp, const BigInt& c);

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  // Multiply by the monomial c * t^texp z^zexp.
  LaurentSeries scale_term(const std::vector<int>& texp, int zexp, const BigInt& c) const;

  // 1/this, truncated.  Requires constant term +-1 and every other term
  // with total t-degree >= 1 (throws std::invalid_argument otherwise).
  LaurentSeries invert() const;

  // z-polynomial coefficient at t^texp (signed; empty when absent).
  std::vector<BigInt> coeff(const std::vector<int>& texp) const;

  // Re-embed into `k` variables with windows `hi`, placing this series'
  // variables at positions at..at+k()-1; truncates into the new windows.
  static LaurentSeries lift(const LaurentSeries& s, int k, std::vector<int> hi, int zmax,
                            int at);

  // Smallest t-exponent over all variables and terms (0 for the empty series).
  int min_t_exponent() const;

private:
  int k_;
  std::vector<int> hi_;
  int zmax_;
  TermMap terms_;
};

// Sum over m >= 1 of 2^m L_m(z) t^m, truncated at t^hi, z^zmax.
LaurentSeries Lstar_series(int hi, int zmax);

// Sum over m >= 2 of phi_m(z) t^m, truncated at t^hi, z^zmax.
LaurentSeries phi_series(int hi, int zmax);

struct SeriesBundle {
  LaurentSeries lam1, lam2, E1, E2;
  // Base (requested) windows; stored series carry base + kGuard.
  std::vector<int> base_hi;
  int zmax;
};

// Extra t-window per variable carried by every bundle level.
inline constexpr int kSeriesGuard = 6;

// The k = 2 bundle over windows hi (size 2), z up to zmax.
SeriesBundle k2_bundle(const std::vector<int>& hi, int zmax);

// Append one spine block: bundle in k-1 variables -> bundle in k variables,
// with requested windows hi (size k, prefix must not exceed the input
// bundle's base windows; violating that throws std::invalid_argument naming
// the variable).
SeriesBundle transfer_apply(const SeriesBundle& bundle, const std::vector<int>& hi, int zmax);

// Euler-genus polynomial of a strict tuple with k >= 2 read off from E^1.
// `trunc` overrides the per-variable windows (default m_i + 1); windows
// below m_i throw std::invalid_argument.  k = 1 throws UnsupportedError.
GenusPoly extract_E(const ParamTuple& params, const std::vector<int>& trunc = {});

// The full bundle for a tuple (k >= 2), windows as in extract_E; exposed
// for the CLI series dump and for tests.
SeriesBundle bundle_for(const ParamTuple& params, const std::vector<int>& trunc = {});

}  // namespace halin
