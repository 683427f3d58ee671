/*
 * Parameter tuples (m_1, ..., m_k) naming cubic caterpillar-Halin graphs,
 * plus the error types shared by all engines.
 *
 * Validity: k >= 1; m_i >= 1 for i < k; the last entry may be 0 (the
 * "extended" form, rewritable by the trailing-entry isomorphisms) except
 * when k = 1, where m >= 1 is required.  "Strict" means every m_i >= 1,
 * which the matrix/embedding/genfun engines need.
 */
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace halin {

// Enumeration workload exceeds the configured budget (CLI exit 3).
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Request is outside the supported domain (CLI exit 4).
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ParamTuple {
  std::vector<int> m;

  ParamTuple() = default;
  explicit ParamTuple(std::vector<int> mm) : m(std::move(mm)) {}
  ParamTuple(std::initializer_list<int> mm) : m(mm) {}

  int k() const { return static_cast<int>(m.size()); }
  long long sum() const { return std::accumulate(m.begin(), m.end(), 0LL); }

  bool is_valid() const {
    if (m.empty()) return false;
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
      if (m[i] < 1) return false;
    return m.back() >= (m.size() == 1 ? 1 : 0);
  }
  bool is_strict() const {
    if (m.empty()) return false;
    for (int v : m)
      if (v < 1) return false;
    return true;
  }
  void require_valid() const {
    if (!is_valid())
      throw std::invalid_argument("invalid parameter tuple " + to_string() +
                                  ": need k >= 1, m_i >= 1 before the last entry, last entry >= " +
                                  std::string(m.size() == 1 ? "1" : "0"));
  }
  void require_strict() const {
    require_valid();
    if (!is_strict())
      throw std::invalid_argument("parameter tuple " + to_string() +
                                  " is not in strict form (every m_i >= 1); "
                                  "rewrite the trailing 0 first (see canon)");
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(m[i]);
    }
    return s;
  }

  // Parse "2,2,3" (throws std::invalid_argument on malformed input).
  static ParamTuple parse(const std::string& text);

  bool operator==(const ParamTuple& o) const { return m == o.m; }
  bool operator<(const ParamTuple& o) const { return m < o.m; }
};

}  // namespace halin
