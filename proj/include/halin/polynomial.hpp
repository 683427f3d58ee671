/*
 * Exact dense univariate polynomials in the genus marker z over
 * arbitrary-precision integers.  A GenusPoly is the value type for every
 * distribution computed here: coefficient i counts embeddings (or overlap
 * matrices) of Euler genus i.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace halin {

using BigInt = boost::multiprecision::cpp_int;

class GenusPoly {
public:
  GenusPoly() = default;
  explicit GenusPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  // Convenience for literals in tests and initial conditions.
  GenusPoly(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static GenusPoly zero() { return GenusPoly{}; }
  static GenusPoly one() { return GenusPoly{1}; }
  // c * z^k
  static GenusPoly monomial(BigInt coeff, std::size_t k);

  // Coefficient of z^i (0 beyond the stored degree).
  const BigInt& at(std::size_t i) const;
  // degree(); the zero polynomial reports -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  // p(1): total count across all genera.
  BigInt coefficient_sum() const;

  GenusPoly& operator+=(const GenusPoly& o);
  friend GenusPoly operator+(GenusPoly a, const GenusPoly& b) {
    a += b;
    return a;
  }
  friend GenusPoly operator*(const GenusPoly& a, const GenusPoly& b);
  friend GenusPoly operator*(const BigInt& s, const GenusPoly& p);
  friend bool operator==(const GenusPoly& a, const GenusPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const GenusPoly& a, const GenusPoly& b) {
    return !(a == b);
  }

  // Every coefficient halved; throws std::logic_error on an odd coefficient.
  GenusPoly halved() const;

  // Little-endian list of decimal strings, e.g. {"2","22","160"}.  Decimal
  // strings keep downstream consumers free of 64-bit overflow concerns.
  std::vector<std::string> to_decimal_strings() const;
  static GenusPoly from_decimal_strings(const std::vector<std::string>& v);

  // "2 + 22*z + 160*z^2" style, for text output.
  std::string to_text() const;

private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

}  // namespace halin
