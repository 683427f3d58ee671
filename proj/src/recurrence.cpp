#include "halin/recurrence.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace halin {

namespace {

// Memo tables: lookup and insertion are serialized; recursive computation
// happens outside the lock (duplicate work under contention is possible but
// results are identical, so determinism is preserved).
template <typename Key>
class Memo {
public:
  bool find(const Key& key, GenusPoly& out) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const Key& key, const GenusPoly& value) {
    std::lock_guard<std::mutex> lk(mu_);
    table_.emplace(key, value);
  }

private:
  std::mutex mu_;
  std::map<Key, GenusPoly> table_;
};

const GenusPoly kOnePlus2z{1, 2};    // 1 + 2z
const GenusPoly kOnePlus4z{1, 4};    // 1 + 4z
const GenusPoly kFourZ2{0, 0, 4};    // 4z^2
const GenusPoly kSixteenZ2{0, 0, 16};

GenusPoly z2_times(const BigInt& c) { return GenusPoly::monomial(c, 2); }

BigInt pow2(long long e) { return BigInt(1) << e; }

}  // namespace

GenusPoly L_poly(int m) {
  if (m < 1) throw std::invalid_argument("L_poly: need m >= 1");
  static Memo<int> memo;
  GenusPoly out;
  if (memo.find(m, out)) return out;
  if (m == 1)
    out = GenusPoly{1, 1};
  else if (m == 2)
    out = GenusPoly{1, 3, 4};
  else
    out = kOnePlus2z * L_poly(m - 1) + kFourZ2 * L_poly(m - 2);
  memo.store(m, out);
  return out;
}

GenusPoly phi_poly(int m) {
  if (m < 2) throw std::invalid_argument("phi_poly: need m >= 2");
  static Memo<int> memo;
  GenusPoly out;
  if (memo.find(m, out)) return out;
  if (m == 2)
    out = GenusPoly{1, 3, 4};
  else if (m == 3)
    out = GenusPoly{1, 7, 28, 28};
  else {
    const int n = m - 1;  // phi_{n+1} = (1+4z) phi_n + 16z^2 phi_{n-1} + 2^n z^2 L_{n-1}
    out = kOnePlus4z * phi_poly(n) + kSixteenZ2 * phi_poly(n - 1) +
          z2_times(pow2(n)) * L_poly(n - 1);
  }
  memo.store(m, out);
  return out;
}

GenusPoly lambda_poly(const ParamTuple& params) {
  const int k = params.k();
  if (k < 2 || !params.is_valid())
    throw std::invalid_argument("lambda_poly: need k >= 2, m_i >= 1 before the last entry, m_k >= 0");
  static Memo<std::vector<int>> memo;
  GenusPoly out;
  if (memo.find(params.m, out)) return out;

  const int mk = params.m.back();
  if (k == 2) {
    const int m1 = params.m[0];
    if (mk == 0)
      out = phi_poly(m1 + 1);
    else if (mk == 1)
      out = kOnePlus2z * phi_poly(m1 + 1) + z2_times(pow2(m1 + 1)) * L_poly(m1);
  } else if (mk <= 1) {
    ParamTuple head(std::vector<int>(params.m.begin(), params.m.end() - 1));
    if (mk == 0) {
      out = euler_genus_poly(head).halved();
    } else {
      out = (kOnePlus2z * euler_genus_poly(head)).halved() +
            z2_times(pow2(params.m[k - 2] + 3)) * lambda_poly(head);
    }
  }
  if (mk >= 2) {
    ParamTuple down1 = params, down2 = params;
    down1.m.back() = mk - 1;
    down2.m.back() = mk - 2;
    out = kOnePlus2z * lambda_poly(down1) + kFourZ2 * lambda_poly(down2);
  }
  memo.store(params.m, out);
  return out;
}

GenusPoly euler_genus_poly(const ParamTuple& params) {
  params.require_valid();
  static Memo<std::vector<int>> memo;
  GenusPoly out;
  if (memo.find(params.m, out)) return out;

  const int k = params.k();
  const int mk = params.m.back();
  if (k == 1) {
    out = BigInt(2) * phi_poly(params.m[0] + 1);
  } else if (k == 2 && mk == 0) {
    out = BigInt(2) * phi_poly(params.m[0] + 2);
  } else if (k == 2 && mk == 1) {
    out = BigInt(2) * phi_poly(params.m[0] + 3);
  } else if (mk <= 1) {
    // Trailing-entry rewrite onto the shorter tuple.
    ParamTuple shorter(std::vector<int>(params.m.begin(), params.m.end() - 1));
    shorter.m.back() += 1 + mk;
    out = euler_genus_poly(shorter);
  } else {
    ParamTuple down1 = params, down2 = params;
    down1.m.back() = mk - 1;
    down2.m.back() = mk - 2;
    out = kOnePlus4z * euler_genus_poly(down1) + kSixteenZ2 * euler_genus_poly(down2) +
          z2_times(pow2(mk + 3)) * lambda_poly(down1);
  }
  memo.store(params.m, out);
  return out;
}

ParamTuple canonicalize(const ParamTuple& params) {
  params.require_valid();
  std::vector<int> m = params.m;
  while (m.size() >= 2 && m.back() <= 1) {
    int last = m.back();
    m.pop_back();
    m.back() += 1 + last;
  }
  std::vector<int> rev(m.rbegin(), m.rend());
  return ParamTuple(rev < m ? rev : m);
}

BigInt closed_form_eps(const ParamTuple& params, int genus) {
  params.require_valid();
  const int k = params.k();
  switch (genus) {
    case 0:
      return 2;
    case 1:
      // 8(sum + k) - 10; sum + k is invariant under the trailing-entry
      // rewrites, so this covers extended tuples and k = 1 uniformly.
      return 8 * (BigInt(params.sum()) + k) - 10;
    case 2: {
      if (k == 1)
        throw UnsupportedError("closed form for genus 2 is only available for k >= 2");
      params.require_strict();
      const auto& m = params.m;
      BigInt s1 = 0, s2 = 0, s3 = 0;
      for (int i = 1; i <= k; ++i)
        s1 += -9 + 4 * i + (-3 + 4 * i) * BigInt(m[i - 1]) + 2 * BigInt(m[i - 1]) * m[i - 1];
      for (int i = 2; i <= k; ++i)
        s2 += pow2(m[i - 1] + 3) + 3 * pow2(m[i - 2] + 3);
      for (int i = 2; i <= k; ++i)
        for (int j = 1; j < i; ++j)
          s3 += BigInt(m[j - 1]) * m[i - 1] + m[j - 1];
      return 8 * s1 + 2 * s2 - pow2(m[0] + 5) + 32 * s3;
    }
    default:
      throw UnsupportedError("closed forms exist for genus 0, 1, 2 only");
  }
}

}  // namespace halin
