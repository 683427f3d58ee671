#include "halin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace {

int checked_dim(int dim) {
  if (dim < 0 || dim > 63) throw std::invalid_argument("RankContext: dim must be in [0, 63]");
  return dim;
}

}  // namespace

namespace halin {

bool Gf2Matrix::is_symmetric() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r + 1; c < dim_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

int Gf2Matrix::rank() const {
  std::uint64_t piv[64];
  int pivcol[64];
  int cnt = 0;
  for (int i = 0; i < dim_; ++i) {
    std::uint64_t v = rows_[i];
    for (int p = 0; p < cnt; ++p)
      if ((v >> pivcol[p]) & 1u) v ^= piv[p];
    if (v) {
      piv[cnt] = v;
      pivcol[cnt] = std::countr_zero(v);
      ++cnt;
    }
  }
  return cnt;
}

RankContext::RankContext(int dim,
                         std::vector<std::vector<std::pair<int, std::uint64_t>>> effects)
    : dim_(checked_dim(dim)),
      effects_(std::move(effects)),
      m_(dim, 0),
      piv_(dim, 0),
      pivcol_(dim, 0),
      cnt_at_(dim + 1, 0) {
  minrow_.reserve(effects_.size());
  for (const auto& eff : effects_) {
    int mr = dim;  // a bit with no effect never invalidates anything
    for (const auto& [row, mask] : eff) {
      if (row < 0 || row >= dim) throw std::invalid_argument("RankContext: effect row out of range");
      if (mask != 0 && row < mr) mr = row;
    }
    minrow_.push_back(mr);
  }
}

void RankContext::set_assignment(std::uint64_t bits) {
  std::fill(m_.begin(), m_.end(), 0);
  for (std::size_t b = 0; b < effects_.size(); ++b)
    if ((bits >> b) & 1u)
      for (const auto& [row, mask] : effects_[b]) m_[row] ^= mask;
  bits_ = bits;
  dirty_ = 0;
}

void RankContext::flip(int bit) {
  for (const auto& [row, mask] : effects_[bit]) m_[row] ^= mask;
  bits_ ^= (std::uint64_t{1} << bit);
  if (minrow_[bit] < dirty_) dirty_ = minrow_[bit];
}

int RankContext::rank() {
  // Rows < dirty_ were eliminated against an unchanged prefix; their pivots
  // piv_[0 .. cnt_at_[dirty_]) are still valid.  Resume from there.
  int cnt = cnt_at_[dirty_];
  for (int i = dirty_; i < dim_; ++i) {
    std::uint64_t v = m_[i];
    for (int p = 0; p < cnt; ++p)
      if ((v >> pivcol_[p]) & 1u) v ^= piv_[p];
    if (v) {
      piv_[cnt] = v;
      pivcol_[cnt] = std::countr_zero(v);
      ++cnt;
    }
    cnt_at_[i + 1] = cnt;
  }
  dirty_ = dim_;
  return cnt;
}

}  // namespace halin
