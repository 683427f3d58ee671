#include "halin/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace halin {

namespace {

constexpr int kMinTExp = -3;

}  // namespace

LaurentSeries::LaurentSeries(int k, std::vector<int> hi, int zmax)
    : k_(k), hi_(std::move(hi)), zmax_(zmax) {
  if (k < 1 || static_cast<int>(hi_.size()) != k)
    throw std::invalid_argument("LaurentSeries: window list must have one entry per variable");
}

namespace {

void trim_row(LaurentSeries::Row& row) {
  while (!row.empty() && row.back() == 0) row.pop_back();
}

}  // namespace

LaurentSeries& LaurentSeries::add_term(const std::vector<int>& texp, int zexp, const BigInt& c) {
  if (static_cast<int>(texp.size()) != k_)
    throw std::invalid_argument("LaurentSeries::add_term: exponent arity mismatch");
  if (zexp < 0) throw std::logic_error("LaurentSeries: negative z-exponent");
  if (c == 0) return *this;
  bool keep = zexp <= zmax_;
  Key key(k_);
  for (int i = 0; i < k_; ++i) {
    if (texp[i] < kMinTExp)
      throw std::logic_error("LaurentSeries: t-exponent below the -3 floor");
    if (texp[i] > hi_[i]) keep = false;
    key[i] = static_cast<std::int16_t>(texp[i]);
  }
  if (!keep) return *this;
  Row& row = terms_[key];
  if (static_cast<int>(row.size()) <= zexp) row.resize(zexp + 1);
  row[zexp] += c;
  trim_row(row);
  if (row.empty()) terms_.erase(key);
  return *this;
}

namespace {

void require_same_shape(const LaurentSeries& a, const LaurentSeries& b, const char* op) {
  if (a.k() != b.k() || a.trunc() != b.trunc() || a.zmax() != b.zmax())
    throw std::logic_error(std::string("LaurentSeries::") + op +
                           ": operands have different truncation windows");
}

}  // namespace

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  require_same_shape(*this, o, "add");
  LaurentSeries r = *this;
  for (const auto& [key, row] : o.terms_) {
    Row& slot = r.terms_[key];
    if (slot.size() < row.size()) slot.resize(row.size());
    for (std::size_t z = 0; z < row.size(); ++z) slot[z] += row[z];
    trim_row(slot);
    if (slot.empty()) r.terms_.erase(key);
  }
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r(k_, hi_, zmax_);
  for (const auto& [key, row] : terms_) {
    Row neg(row.size());
    for (std::size_t z = 0; z < row.size(); ++z) neg[z] = -row[z];
    r.terms_.emplace(key, std::move(neg));
  }
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  require_same_shape(*this, o, "mul");
  LaurentSeries r(k_, hi_, zmax_);
  Key key(k_);
  for (const auto& [ka, ra] : terms_) {
    for (const auto& [kb, rb] : o.terms_) {
      bool keep = true;
      for (int i = 0; i < k_; ++i) {
        const int e = ka[i] + kb[i];
        if (e > hi_[i]) {
          keep = false;
          break;
        }
        if (e < kMinTExp) throw std::logic_error("LaurentSeries: t-exponent below the -3 floor");
        key[i] = static_cast<std::int16_t>(e);
      }
      if (!keep) continue;
      // Dense z-convolution of the two rows, capped at the z-window.
      const int za_hi = static_cast<int>(ra.size()) - 1;
      const int zb_hi = static_cast<int>(rb.size()) - 1;
      const int z_top = std::min(za_hi + zb_hi, zmax_);
      if (z_top < 0) continue;
      Row& out = r.terms_[key];
      if (static_cast<int>(out.size()) <= z_top) out.resize(z_top + 1);
      for (int za = 0; za <= za_hi; ++za) {
        if (ra[za] == 0) continue;
        const int zb_top = std::min(zb_hi, zmax_ - za);
        for (int zb = 0; zb <= zb_top; ++zb) {
          if (rb[zb] == 0) continue;
          out[za + zb] += ra[za] * rb[zb];
        }
      }
    }
  }
  // Cancellation can leave all-zero rows behind; drop them.
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    trim_row(it->second);
    it = it->second.empty() ? r.terms_.erase(it) : std::next(it);
  }
  return r;
}

LaurentSeries LaurentSeries::scale_term(const std::vector<int>& texp, int zexp,
                                        const BigInt& c) const {
  if (static_cast<int>(texp.size()) != k_)
    throw std::invalid_argument("LaurentSeries::scale_term: exponent arity mismatch");
  LaurentSeries r(k_, hi_, zmax_);
  std::vector<int> e(k_);
  for (const auto& [key, row] : terms_) {
    for (int i = 0; i < k_; ++i) e[i] = key[i] + texp[i];
    for (std::size_t z = 0; z < row.size(); ++z)
      if (row[z] != 0) r.add_term(e, static_cast<int>(z) + zexp, row[z] * c);
  }
  return r;
}

LaurentSeries LaurentSeries::invert() const {
  const Key one_key(k_, 0);
  auto it = terms_.find(one_key);
  const BigInt c0 = (it == terms_.end() || it->second.empty()) ? BigInt(0) : it->second[0];
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument("series inversion needs constant term +1 or -1");
  if (c0 == -1) return -((-*this).invert());

  // u = 1 - self; valid geometric inversion needs every u term to carry
  // positive total t-degree so that powers of u eventually truncate away.
  LaurentSeries u(k_, hi_, zmax_);
  for (const auto& [key, row] : terms_) {
    int total = 0;
    for (int i = 0; i < k_; ++i) total += key[i];
    Row neg(row.size());
    for (std::size_t z = 0; z < row.size(); ++z) neg[z] = -row[z];
    if (key == one_key) {
      neg[0] += 1;  // remove the constant
      trim_row(neg);
      if (neg.empty()) continue;
    }
    if (total < 1)
      throw std::invalid_argument(
          "series inversion needs every non-constant term to have positive total t-degree");
    u.terms_.emplace(key, std::move(neg));
  }
  LaurentSeries res(k_, hi_, zmax_);
  res.terms_.emplace(one_key, Row{1});
  LaurentSeries p = res;
  const int rounds = std::accumulate(hi_.begin(), hi_.end(), 0) + 4 * k_ + 4;
  for (int j = 0; j < rounds; ++j) {
    p = p * u;
    if (p.empty()) break;
    res = res + p;
  }
  return res;
}

std::vector<BigInt> LaurentSeries::coeff(const std::vector<int>& texp) const {
  if (static_cast<int>(texp.size()) != k_)
    throw std::invalid_argument("LaurentSeries::coeff: exponent arity mismatch");
  Key key(k_);
  for (int i = 0; i < k_; ++i) key[i] = static_cast<std::int16_t>(texp[i]);
  auto it = terms_.find(key);
  return it == terms_.end() ? std::vector<BigInt>{} : it->second;
}

LaurentSeries LaurentSeries::lift(const LaurentSeries& s, int k, std::vector<int> hi, int zmax,
                                  int at) {
  if (at < 0 || at + s.k_ > k)
    throw std::invalid_argument("LaurentSeries::lift: variable placement out of range");
  LaurentSeries r(k, std::move(hi), zmax);
  std::vector<int> e(k, 0);
  for (const auto& [key, row] : s.terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < s.k_; ++i) e[at + i] = key[i];
    for (std::size_t z = 0; z < row.size(); ++z)
      if (row[z] != 0) r.add_term(e, static_cast<int>(z), row[z]);
  }
  return r;
}

int LaurentSeries::min_t_exponent() const {
  int lo = 0;
  bool first = true;
  for (const auto& [key, row] : terms_) {
    (void)row;
    for (int i = 0; i < k_; ++i) {
      if (first || key[i] < lo) lo = key[i];
      first = false;
    }
  }
  return lo;
}

namespace {

// Convenience: build a 1- or k-variable series from (texp, zexp, coeff) rows.
LaurentSeries make_series(int k, const std::vector<int>& hi, int zmax,
                          const std::vector<std::pair<std::vector<int>, std::pair<int, long long>>>& rows) {
  LaurentSeries s(k, hi, zmax);
  for (const auto& [texp, zc] : rows) s.add_term(texp, zc.first, BigInt(zc.second));
  return s;
}

}  // namespace

LaurentSeries Lstar_series(int hi, int zmax) {
  const std::vector<int> H{hi};
  LaurentSeries num = make_series(1, H, zmax,
                                  {{{1}, {0, 2}}, {{1}, {1, 2}}, {{2}, {2, 8}}});
  LaurentSeries den = make_series(1, H, zmax,
                                  {{{0}, {0, 1}}, {{1}, {0, -2}}, {{1}, {1, -4}}, {{2}, {2, -16}}});
  return num * den.invert();
}

LaurentSeries phi_series(int hi, int zmax) {
  const std::vector<int> H{hi};
  LaurentSeries num(1, H, zmax);
  num.add_term({2}, 0, 1).add_term({2}, 1, 3).add_term({2}, 2, 4);
  num.add_term({3}, 0, -2).add_term({3}, 1, -10).add_term({3}, 2, -8).add_term({3}, 3, -4);
  num.add_term({4}, 2, -32).add_term({4}, 3, -96).add_term({4}, 4, -80);
  num.add_term({5}, 4, -128).add_term({5}, 5, -128);
  LaurentSeries d1 = make_series(1, H, zmax,
                                 {{{0}, {0, 1}}, {{1}, {0, -2}}, {{1}, {1, -4}}, {{2}, {2, -16}}});
  LaurentSeries d2 = make_series(1, H, zmax,
                                 {{{0}, {0, 1}}, {{1}, {0, -1}}, {{1}, {1, -4}}, {{2}, {2, -16}}});
  return num * d1.invert() * d2.invert();
}

namespace {

void check_bundle_support(const SeriesBundle& b, const char* where) {
  for (const LaurentSeries* s : {&b.lam1, &b.lam2, &b.E1, &b.E2})
    if (!s->empty() && s->min_t_exponent() < 1)
      throw std::logic_error(std::string(where) +
                             ": residual term with t-exponent below 1 after cancellation");
}

}  // namespace

SeriesBundle k2_bundle(const std::vector<int>& hi, int zmax) {
  if (hi.size() != 2) throw std::invalid_argument("k2_bundle: need exactly two windows");
  const std::vector<int> H{hi[0] + kSeriesGuard, hi[1] + kSeriesGuard};
  const LaurentSeries ph1 = LaurentSeries::lift(phi_series(H[0], zmax), 2, H, zmax, 0);
  const LaurentSeries Ls1 = LaurentSeries::lift(Lstar_series(H[0], zmax), 2, H, zmax, 0);

  LaurentSeries D2 = make_series(2, H, zmax,
                                 {{{0, 0}, {0, 1}}, {{0, 1}, {0, -2}}, {{0, 1}, {1, -4}}, {{0, 2}, {2, -16}}});
  LaurentSeries D1 = make_series(2, H, zmax,
                                 {{{0, 0}, {0, 1}}, {{0, 1}, {0, -1}}, {{0, 1}, {1, -4}}, {{0, 2}, {2, -16}}});
  const LaurentSeries iD2 = D2.invert();
  const LaurentSeries iD1 = D1.invert();

  LaurentSeries co = make_series(2, H, zmax,
                                 {{{0, 1}, {0, 2}}, {{0, 1}, {1, 4}}, {{0, 2}, {2, 16}}});
  LaurentSeries lam1 = (co * ph1.scale_term({-1, 0}, 0, 1) + Ls1.scale_term({0, 1}, 2, 4)) * iD2;
  LaurentSeries lam2 = lam1 + (ph1.scale_term({-1, 1}, 0, -2) + ph1.scale_term({-1, 1}, 1, -4)) +
                       Ls1.scale_term({0, 1}, 2, -4);

  LaurentSeries phc = ph1.scale_term({-2, 2}, 2, 32) + ph1.scale_term({-3, 1}, 0, 2);
  LaurentSeries corr(2, H, zmax);
  corr.add_term({-1, 1}, 0, -2).add_term({-1, 1}, 1, -6).add_term({-1, 1}, 2, -8);
  corr.add_term({0, 1}, 0, -2).add_term({0, 1}, 1, -14).add_term({0, 1}, 2, -56).add_term({0, 1}, 3, -56);
  corr.add_term({0, 2}, 2, -32).add_term({0, 2}, 3, -96).add_term({0, 2}, 4, -128);
  LaurentSeries E1 = (phc + lam1.scale_term({0, 1}, 2, 16) + corr) * iD1;

  // E2 = E1 minus the m2 = 1 slice: 2 t1^{-3} t2 (phi - phi_2 t^2 - phi_3 t^3).
  LaurentSeries tail = ph1;
  tail.add_term({2, 0}, 0, -1).add_term({2, 0}, 1, -3).add_term({2, 0}, 2, -4);
  tail.add_term({3, 0}, 0, -1).add_term({3, 0}, 1, -7).add_term({3, 0}, 2, -28).add_term({3, 0}, 3, -28);
  LaurentSeries E2 = E1 + (-tail.scale_term({-3, 1}, 0, 2));

  SeriesBundle out{std::move(lam1), std::move(lam2), std::move(E1), std::move(E2), hi, zmax};
  check_bundle_support(out, "k2_bundle");
  return out;
}

SeriesBundle transfer_apply(const SeriesBundle& bundle, const std::vector<int>& hi, int zmax) {
  const int km1 = bundle.lam1.k();
  const int k = km1 + 1;
  if (static_cast<int>(hi.size()) != k)
    throw std::invalid_argument("transfer_apply: need one window per variable of the new level");
  for (int i = 0; i < km1; ++i)
    if (bundle.base_hi[i] < hi[i])
      throw std::invalid_argument(
          "transfer_apply: insufficient guard degree in t" + std::to_string(i + 1) +
          " (bundle was built for window " + std::to_string(bundle.base_hi[i]) +
          ", requested " + std::to_string(hi[i]) + ")");
  if (zmax > bundle.zmax)
    throw std::invalid_argument("transfer_apply: z-window exceeds the input bundle's");

  std::vector<int> H(k);
  for (int i = 0; i < km1; ++i) H[i] = hi[i] + kSeriesGuard;
  H[k - 1] = hi[k - 1] + kSeriesGuard;
  auto up = [&](const LaurentSeries& s) { return LaurentSeries::lift(s, k, H, zmax, 0); };
  const LaurentSeries lam1 = up(bundle.lam1), lam2 = up(bundle.lam2);
  const LaurentSeries E1 = up(bundle.E1), E2 = up(bundle.E2);

  auto S = [&]() { return LaurentSeries(k, H, zmax); };
  std::vector<int> tk(k, 0), tk2(k, 0), pk1(k, 0), pk2(k, 0);
  tk[k - 1] = 1;
  tk2[k - 1] = 2;
  pk1[k - 2] = -1;  // t_{k-1}^{-1} t_k
  pk1[k - 1] = 1;
  pk2[k - 2] = -1;  // t_{k-1}^{-1} t_k^2
  pk2[k - 1] = 2;

  LaurentSeries D2 = S().add_term(std::vector<int>(k, 0), 0, 1)
                        .add_term(tk, 0, -2).add_term(tk, 1, -4).add_term(tk2, 2, -16);
  LaurentSeries D1 = S().add_term(std::vector<int>(k, 0), 0, 1)
                        .add_term(tk, 0, -1).add_term(tk, 1, -4).add_term(tk2, 2, -16);
  const LaurentSeries iD2 = D2.invert();
  const LaurentSeries iD1 = D1.invert();

  const LaurentSeries A11 = S().add_term(tk, 2, 16) * iD2;
  const LaurentSeries A13 = (S().add_term(tk, 0, 1).add_term(tk, 1, 2).add_term(tk2, 2, 8)) * iD2;
  const LaurentSeries A21 = A11 + S().add_term(tk, 2, -16);
  const LaurentSeries A23 = A13 + S().add_term(tk, 0, -1).add_term(tk, 1, -2);
  const LaurentSeries A31 = S().add_term(tk, 2, 16) * A11 * iD1;
  const LaurentSeries A32 = S().add_term(pk1, 2, 16) * iD1;
  const LaurentSeries A33 = (S().add_term(tk, 2, 16) + S().add_term(tk, 2, 16) * A13) * iD1;
  const LaurentSeries A34 =
      (S().add_term(pk1, 0, 1).add_term(pk1, 1, 4).add_term(pk2, 2, 16)) * iD1;
  const LaurentSeries A41 = A31;
  const LaurentSeries A42 = A32 + S().add_term(pk1, 2, -16);
  const LaurentSeries A43 = A33 + S().add_term(tk, 2, -16);
  const LaurentSeries A44 = A34 + S().add_term(pk1, 0, -1).add_term(pk1, 1, -4);

  SeriesBundle out{
      A11 * lam1 + A13 * E1,
      A21 * lam1 + A23 * E1,
      A31 * lam1 + A32 * lam2 + A33 * E1 + A34 * E2,
      A41 * lam1 + A42 * lam2 + A43 * E1 + A44 * E2,
      hi, zmax};
  check_bundle_support(out, "transfer_apply");
  return out;
}

SeriesBundle bundle_for(const ParamTuple& params, const std::vector<int>& trunc) {
  params.require_strict();
  const int k = params.k();
  if (k < 2)
    throw UnsupportedError("the generating-function engine handles k >= 2 tuples only");
  std::vector<int> w(k);
  if (!trunc.empty()) {
    if (static_cast<int>(trunc.size()) != k)
      throw std::invalid_argument("truncation override must list one window per variable");
    for (int i = 0; i < k; ++i) {
      if (trunc[i] < params.m[i])
        throw std::invalid_argument("truncation too small for t" + std::to_string(i + 1) +
                                    ": need at least " + std::to_string(params.m[i]));
      w[i] = trunc[i];
    }
  } else {
    for (int i = 0; i < k; ++i) w[i] = params.m[i] + 1;
  }
  const int zmax = k + static_cast<int>(params.sum());
  SeriesBundle bundle = k2_bundle({w[0], w[1]}, zmax);
  for (int j = 3; j <= k; ++j)
    bundle = transfer_apply(bundle, std::vector<int>(w.begin(), w.begin() + j), zmax);
  return bundle;
}

GenusPoly extract_E(const ParamTuple& params, const std::vector<int>& trunc) {
  const SeriesBundle bundle = bundle_for(params, trunc);
  const std::vector<BigInt> signed_coeffs = bundle.E1.coeff(params.m);
  for (const BigInt& c : signed_coeffs)
    if (c < 0)
      throw std::logic_error("extract_E: negative coefficient survived cancellation");
  return GenusPoly(signed_coeffs);
}

}  // namespace halin
