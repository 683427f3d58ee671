#include "halin/overlap.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace halin {

ParamTuple ParamTuple::parse(const std::string& text) {
  ParamTuple out;
  std::string token;
  std::istringstream in(text);
  if (text.empty()) throw std::invalid_argument("empty parameter tuple");
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed tuple entry '" + token + "'");
    }
    if (pos != token.size())
      throw std::invalid_argument("malformed tuple entry '" + token + "'");
    out.m.push_back(v);
  }
  if (out.m.empty() || text.back() == ',')
    throw std::invalid_argument("malformed parameter tuple '" + text + "'");
  return out;
}

OverlapAssignment::OverlapAssignment(const ParamTuple& p) : params(p) {
  p.require_strict();
  const int k = p.k();
  x0.assign(k, 0);
  y0.assign(k > 0 ? k - 1 : 0, 0);
  for (int mi : p.m) {
    xi.emplace_back(mi, 0);
    yi.emplace_back(mi - 1, 0);
  }
  for (int i = 1; i <= k; ++i) {
    int mi = p.m[i - 1];
    if (k == 1)
      zi.emplace_back(mi, 0);  // placeholder; k = 1 uses the phi family instead
    else if (i == 1 || i == k)
      zi.emplace_back(mi + 1, 0);
    else
      zi.emplace_back(mi + 2, 0);
  }
}

std::uint8_t& OverlapAssignment::z(int i, int l) {
  // z_1 is indexed l = 1..m_1+1 and stored from slot 0; the others start at l = 0.
  return i == 1 ? zi[0][l - 1] : zi[i - 1][l];
}

std::uint8_t OverlapAssignment::z(int i, int l) const {
  return i == 1 ? zi[0][l - 1] : zi[i - 1][l];
}

namespace {

template <typename Fn>
void for_each_field(OverlapAssignment& a, Fn&& fn) {
  fn(a.x0);
  fn(a.y0);
  for (auto& v : a.xi) fn(v);
  for (auto& v : a.yi) fn(v);
  for (auto& v : a.zi) fn(v);
}

}  // namespace

int OverlapAssignment::num_bits() const {
  auto& self = const_cast<OverlapAssignment&>(*this);
  int n = 0;
  for_each_field(self, [&](std::vector<std::uint8_t>& v) { n += static_cast<int>(v.size()); });
  return n;
}

void OverlapAssignment::set_flat(std::uint64_t bits) {
  int pos = 0;
  for_each_field(*this, [&](std::vector<std::uint8_t>& v) {
    for (auto& b : v) b = static_cast<std::uint8_t>((bits >> pos++) & 1u);
  });
}

std::uint64_t OverlapAssignment::flat() const {
  auto& self = const_cast<OverlapAssignment&>(*this);
  std::uint64_t bits = 0;
  int pos = 0;
  for_each_field(self, [&](std::vector<std::uint8_t>& v) {
    for (auto b : v) bits |= static_cast<std::uint64_t>(b & 1u) << pos++;
  });
  return bits;
}

Gf2Matrix build_tridiag(const std::vector<std::uint8_t>& a,
                        const std::vector<std::uint8_t>& b) {
  const int m = static_cast<int>(a.size());
  if (m < 1) throw std::invalid_argument("build_tridiag: need m >= 1");
  if (static_cast<int>(b.size()) != m - 1)
    throw std::invalid_argument("build_tridiag: off-diagonal must have length m-1");
  Gf2Matrix mat(m);
  for (int i = 0; i < m; ++i) {
    if (a[i]) mat.set(i, i, true);
    if (i + 1 < m && b[i]) mat.set_sym(i, i + 1, true);
  }
  return mat;
}

Gf2Matrix build_phi(int m, const std::vector<std::uint8_t>& x,
                    const std::vector<std::uint8_t>& y,
                    const std::vector<std::uint8_t>& z) {
  if (m < 1) throw std::invalid_argument("build_phi: need m >= 1");
  if (static_cast<int>(x.size()) != m + 1 || static_cast<int>(y.size()) != m - 1 ||
      static_cast<int>(z.size()) != m)
    throw std::invalid_argument("build_phi: need |x| = m+1, |y| = m-1, |z| = m");
  Gf2Matrix mat(m + 1);
  if (x[0]) mat.set(0, 0, true);
  for (int l = 1; l <= m; ++l) {
    if (z[l - 1]) mat.set_sym(0, l, true);
    if (x[l]) mat.set(l, l, true);
  }
  for (int l = 1; l < m; ++l)
    if (y[l - 1]) mat.set_sym(l, l + 1, true);
  return mat;
}

namespace {

// Row index of e_{i,l} (i, l are 1-based) in the Delta ordering.
int block_row(const ParamTuple& p, int i, int l) {
  int off = 0;
  for (int j = 1; j < i; ++j) off += p.m[j - 1];
  return p.k() + off + (l - 1);
}

}  // namespace

Gf2Matrix build_delta(const ParamTuple& params, const OverlapAssignment& asg) {
  params.require_strict();
  const int k = params.k();
  if (k < 2)
    throw std::invalid_argument("build_delta: defined for k >= 2 (k = 1 uses the Ringel-ladder family)");
  const int beta = k + static_cast<int>(params.sum());
  Gf2Matrix mat(beta);
  for (int i = 1; i <= k; ++i) {
    const int mi = params.m[i - 1];
    if (asg.x0[i - 1]) mat.set(i - 1, i - 1, true);                       // (a) diag
    if (i < k && asg.y0[i - 1]) mat.set_sym(i - 1, i, true);              // (a) off-diag
    for (int l = 1; l <= mi; ++l) {                                       // (b)
      if (asg.xi[i - 1][l - 1]) mat.set(block_row(params, i, l), block_row(params, i, l), true);
      if (l < mi && asg.yi[i - 1][l - 1])
        mat.set_sym(block_row(params, i, l), block_row(params, i, l + 1), true);
    }
    for (int l = 1; l <= mi; ++l)                                         // (c)
      if (asg.z(i, l)) mat.set_sym(i - 1, block_row(params, i, l), true);
    if (i >= 2 && asg.z(i, 0))                                            // (d)
      mat.set_sym(i - 1, block_row(params, i - 1, params.m[i - 2]), true);
    if (i <= k - 1 && asg.z(i, mi + 1))                                   // (e)
      mat.set_sym(i - 1, block_row(params, i + 1, 1), true);
  }
  return mat;
}

Gf2Matrix build_lambda_matrix(const ParamTuple& params, const OverlapAssignment& asg) {
  Gf2Matrix mat = build_delta(params, asg);
  const int k = params.k();
  const std::uint64_t mask = ~(std::uint64_t{1} << (k - 1));
  for (int r = 0; r < mat.dim(); ++r) mat.row(r) &= mask;
  mat.row(k - 1) = 0;
  return mat;
}

int enumeration_bit_count(MatrixKind kind, const ParamTuple& params) {
  const long long s = params.sum();
  const int k = params.k();
  switch (kind) {
    case MatrixKind::kTridiag:
      return static_cast<int>(2 * s - 1);
    case MatrixKind::kPhi:
      return static_cast<int>(3 * s);
    case MatrixKind::kDelta:
      return static_cast<int>(3 * s + 3 * k - 3);
    case MatrixKind::kLambda:
      return static_cast<int>(3 * s - params.m.back() + 3 * k - 6);
  }
  throw std::logic_error("unreachable MatrixKind");
}

namespace {

struct Family {
  int dim;
  int nbits;
  std::function<Gf2Matrix(std::uint64_t)> build;
};

Family make_family(MatrixKind kind, const ParamTuple& params) {
  switch (kind) {
    case MatrixKind::kTridiag: {
      if (params.k() != 1 || params.m[0] < 1)
        throw std::invalid_argument("tridiagonal family takes a single parameter m >= 1");
      const int m = params.m[0];
      return {m, 2 * m - 1, [m](std::uint64_t bits) {
                std::vector<std::uint8_t> a(m), b(m - 1);
                for (int j = 0; j < m; ++j) a[j] = (bits >> j) & 1u;
                for (int j = 0; j < m - 1; ++j) b[j] = (bits >> (m + j)) & 1u;
                return build_tridiag(a, b);
              }};
    }
    case MatrixKind::kPhi: {
      if (params.k() != 1 || params.m[0] < 1)
        throw std::invalid_argument("Ringel-ladder family takes a single parameter m >= 1");
      const int m = params.m[0];
      return {m + 1, 3 * m, [m](std::uint64_t bits) {
                std::vector<std::uint8_t> x(m + 1), y(m - 1), z(m);
                for (int j = 0; j <= m; ++j) x[j] = (bits >> j) & 1u;
                for (int j = 0; j < m - 1; ++j) y[j] = (bits >> (m + 1 + j)) & 1u;
                for (int j = 0; j < m; ++j) z[j] = (bits >> (2 * m + j)) & 1u;
                return build_phi(m, x, y, z);
              }};
    }
    case MatrixKind::kDelta:
    case MatrixKind::kLambda: {
      params.require_strict();
      if (params.k() < 2)
        throw std::invalid_argument("Delta/Lambda families need k >= 2");
      OverlapAssignment proto(params);
      const int n = proto.num_bits();
      const bool lam = kind == MatrixKind::kLambda;
      const int dim = params.k() + static_cast<int>(params.sum());
      return {dim, n, [params, lam](std::uint64_t bits) {
                OverlapAssignment a(params);
                a.set_flat(bits);
                return lam ? build_lambda_matrix(params, a) : build_delta(params, a);
              }};
    }
  }
  throw std::logic_error("unreachable MatrixKind");
}

}  // namespace

GenusPoly enumerate_distribution(MatrixKind kind, const ParamTuple& params,
                                 const EnumerateOptions& options) {
  Family fam = make_family(kind, params);

  // Per-bit toggles: every matrix entry is a single assignment bit, so the
  // bit -> matrix map is linear over GF(2) and single-bit builds give the
  // complete toggle lists.  Bits with no effect (Lambda's masked row/column)
  // are excluded from enumeration.
  std::vector<std::vector<std::pair<int, std::uint64_t>>> effects;
  std::vector<int> live;
  for (int b = 0; b < fam.nbits; ++b) {
    Gf2Matrix mat = fam.build(std::uint64_t{1} << b);
    std::vector<std::pair<int, std::uint64_t>> eff;
    for (int r = 0; r < fam.dim; ++r)
      if (mat.rows()[r]) eff.emplace_back(r, mat.rows()[r]);
    if (!eff.empty()) {
      live.push_back(b);
      effects.push_back(std::move(eff));
    }
  }
  const int nfree = static_cast<int>(live.size());
  if (nfree != enumeration_bit_count(kind, params))
    throw std::logic_error("free-bit count mismatch against the closed-form dimension count");
  if (nfree > options.budget_bits)
    throw BudgetError("rank enumeration for tuple (" + params.to_string() + ") needs " +
                      std::to_string(nfree) + " free bits; budget is " +
                      std::to_string(options.budget_bits) + " bits");

  // Enumeration order: bits whose lowest touched row is deepest flip most
  // often in the Gray walk, so sort by that row descending; the incremental
  // eliminator then usually redoes only the bottom of the matrix.
  std::vector<int> order(nfree);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    int ru = fam.dim, rv = fam.dim;
    for (auto& [row, mask] : effects[u]) ru = std::min(ru, row);
    for (auto& [row, mask] : effects[v]) rv = std::min(rv, row);
    return ru > rv;
  });
  std::vector<std::vector<std::pair<int, std::uint64_t>>> eff_enum(nfree);
  for (int j = 0; j < nfree; ++j) eff_enum[j] = effects[order[j]];

  const std::uint64_t total = std::uint64_t{1} << nfree;
  const int workers = std::max(1, options.threads);
  std::vector<std::vector<std::uint64_t>> hists(
      workers, std::vector<std::uint64_t>(fam.dim + 1, 0));

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hist) {
    if (lo >= hi) return;
    RankContext ctx(fam.dim, eff_enum);
    ctx.set_assignment(lo ^ (lo >> 1));  // Gray code of the range start
    hist[ctx.rank()]++;
    for (std::uint64_t c = lo + 1; c < hi; ++c) {
      ctx.flip(std::countr_zero(c));     // gray(c-1) -> gray(c) flips bit ctz(c)
      hist[ctx.rank()]++;
    }
  };

  if (workers == 1) {
    run_range(0, total, hists[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      // Contiguous counter ranges; histogram addition is exact and
      // order-independent, so any partition yields the identical result.
      std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      std::uint64_t hi = lo + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
      pool.emplace_back(run_range, lo, hi, std::ref(hists[w]));
    }
    for (auto& t : pool) t.join();
  }

  std::vector<BigInt> coeffs(fam.dim + 1);
  for (int w = 0; w < workers; ++w)
    for (int r = 0; r <= fam.dim; ++r) coeffs[r] += hists[w][r];
  return GenusPoly(std::move(coeffs));
}

GenusPoly matrix_engine_distribution(const ParamTuple& params,
                                     const EnumerateOptions& options) {
  params.require_strict();
  GenusPoly half = params.k() == 1
                       ? enumerate_distribution(MatrixKind::kPhi, params, options)
                       : enumerate_distribution(MatrixKind::kDelta, params, options);
  return BigInt(2) * half;
}

}  // namespace halin
