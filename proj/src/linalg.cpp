#include "gperm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gperm {

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

int rank(RatMatrix m) { return (int)rref(m).size(); }

std::vector<RatRow> kernel(const RatMatrix& m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  RatMatrix e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[(std::size_t)c] = true;
  std::vector<RatRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatRow v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[(std::size_t)pivots[i]] = -e[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

uint64_t residue(const Rational& x, uint64_t p) {
  long long n = x.num() % (long long)p;
  if (n < 0) n += (long long)p;
  uint64_t d = (uint64_t)(x.den() % (long long)p);
  if (d == 0) throw std::domain_error("rank_mod_p: denominator divisible by p");
  return (uint64_t)n * pow_mod(d, p - 2, p) % p;
}

}  // namespace

int rank_mod_p(const RatMatrix& m, uint32_t p) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = residue(m[i][j], p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    uint64_t inv = pow_mod(a[r][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      uint64_t f = p - a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + f * a[r][j]) % p;
    }
    ++r;
  }
  return (int)r;
}

int RowSpace::reduce(RatRow& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = (std::size_t)pivots_[i];
    if (v[c].is_zero()) continue;
    Rational f = v[c];
    const RatRow& row = rows_[i];
    for (std::size_t j = c; j < cols_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  for (std::size_t j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) return (int)j;
  return -1;
}

bool RowSpace::insert(RatRow v) {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace: bad vector length");
  int lead = reduce(v);
  if (lead < 0) return false;
  Rational inv = Rational(1) / v[(std::size_t)lead];
  for (std::size_t j = (std::size_t)lead; j < cols_; ++j) v[j] *= inv;
  // keep the existing rows reduced against the newcomer
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = rows_[i][(std::size_t)lead];
    if (f.is_zero()) continue;
    for (std::size_t j = (std::size_t)lead; j < cols_; ++j)
      if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
  }
  auto at = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t idx = (std::size_t)(at - pivots_.begin());
  pivots_.insert(at, lead);
  rows_.insert(rows_.begin() + (std::ptrdiff_t)idx, std::move(v));
  return true;
}

bool RowSpace::contains(RatRow v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace: bad vector length");
  return reduce(v) < 0;
}

}  // namespace gperm
