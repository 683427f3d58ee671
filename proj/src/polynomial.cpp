#include "halin/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace halin {

GenusPoly GenusPoly::monomial(BigInt coeff, std::size_t k) {
  if (coeff == 0) return GenusPoly{};
  std::vector<BigInt> c(k + 1);
  c[k] = std::move(coeff);
  return GenusPoly{std::move(c)};
}

const BigInt& GenusPoly::at(std::size_t i) const {
  static const BigInt kZero{0};
  return i < c_.size() ? c_[i] : kZero;
}

BigInt GenusPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

GenusPoly& GenusPoly::operator+=(const GenusPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

GenusPoly operator*(const GenusPoly& a, const GenusPoly& b) {
  if (a.is_zero() || b.is_zero()) return GenusPoly{};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return GenusPoly{std::move(r)};
}

GenusPoly operator*(const BigInt& s, const GenusPoly& p) {
  if (s == 0) return GenusPoly{};
  std::vector<BigInt> r = p.c_;
  for (auto& v : r) v *= s;
  return GenusPoly{std::move(r)};
}

GenusPoly GenusPoly::halved() const {
  std::vector<BigInt> r = c_;
  for (auto& v : r) {
    if (v % 2 != 0)
      throw std::logic_error("halved(): odd coefficient; exact division by 2 expected");
    v /= 2;
  }
  return GenusPoly{std::move(r)};
}

std::vector<std::string> GenusPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.str());
  return out;
}

GenusPoly GenusPoly::from_decimal_strings(const std::vector<std::string>& v) {
  std::vector<BigInt> c;
  c.reserve(v.size());
  for (const auto& s : v) c.emplace_back(s);
  return GenusPoly{std::move(c)};
}

std::string GenusPoly::to_text() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i].str();
    } else {
      if (c_[i] != 1) os << c_[i].str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace halin
