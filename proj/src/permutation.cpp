#include "gperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gperm {

Perm perm_identity(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

bool is_perm(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (int v : w) {
    if (v < 1 || v > (int)w.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("perm_compose: size mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

Perm perm_inverse(const Perm& w) {
  Perm r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = (int)i + 1;
  return r;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

Perm simple_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple_transposition: need 1 <= i <= n-1");
  Perm w = perm_identity(n);
  std::swap(w[i - 1], w[i]);
  return w;
}

std::string perm_str(const Perm& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w[i]);
  }
  return s;
}

Perm standardize(const std::vector<int>& word) {
  size_t n = word.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return word[a] < word[b]; });
  Perm r(n);
  for (size_t rank = 0; rank < n; ++rank) r[idx[rank]] = (int)rank + 1;
  return r;
}

Perm direct_sum(const std::vector<Perm>& blocks) {
  Perm r;
  int offset = 0;
  for (const Perm& b : blocks) {
    for (int v : b) r.push_back(v + offset);
    offset += (int)b.size();
  }
  return r;
}

static void check_composition(const Composition& c) {
  for (int p : c)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

Perm longest_element(const Composition& c) {
  check_composition(c);
  Perm r;
  int offset = 0;
  for (int p : c) {
    for (int v = p; v >= 1; --v) r.push_back(v + offset);
    offset += p;
  }
  return r;
}

bool is_coset_rep(const Perm& w, const Composition& c) {
  check_composition(c);
  int pos = 0;
  for (int p : c) {
    for (int k = 1; k < p; ++k)
      if (w[pos + k - 1] > w[pos + k]) return false;
    pos += p;
  }
  if (pos != (int)w.size()) throw std::invalid_argument("is_coset_rep: composition weight mismatch");
  return true;
}

// Recursive generation: pick the sorted value set of each block in turn.
static void coset_reps_rec(const Composition& c, size_t bi, std::vector<int>& remaining, Perm& acc,
                           std::vector<Perm>& out) {
  if (bi == c.size()) {
    out.push_back(acc);
    return;
  }
  int p = c[bi];
  int m = (int)remaining.size();
  std::vector<int> choose(p);
  // iterate p-subsets of remaining (indices increasing) in lexicographic order
  std::vector<int> pick(p);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> rest;
    for (int t = 0, q = 0; t < m; ++t) {
      if (q < p && pick[q] == t) {
        choose[q] = remaining[t];
        ++q;
      } else
        rest.push_back(remaining[t]);
    }
    size_t base = acc.size();
    acc.insert(acc.end(), choose.begin(), choose.end());
    coset_reps_rec(c, bi + 1, rest, acc, out);
    acc.resize(base);
    int j = p - 1;
    while (j >= 0 && pick[j] == m - p + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < p; ++t) pick[t] = pick[t - 1] + 1;
  }
}

std::vector<Perm> coset_reps(const Composition& c) {
  check_composition(c);
  int n = 0;
  for (int p : c) n += p;
  check_sn_guard(n);
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::vector<Perm> out;
  Perm acc;
  coset_reps_rec(c, 0, values, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

CComponents c_components(const Perm& w, const Composition& c) {
  std::vector<Perm> blocks;
  int pos = 0;
  for (int p : c) {
    std::vector<int> sub(w.begin() + pos, w.begin() + pos + p);
    blocks.push_back(standardize(sub));
    pos += p;
  }
  if (pos != (int)w.size()) throw std::invalid_argument("c_components: composition weight mismatch");
  CComponents r;
  r.v = direct_sum(blocks);
  r.u = perm_compose(w, perm_inverse(r.v));
  return r;
}

DeodharCase deodhar_case(const Perm& x, int i, const Composition& c) {
  if (!is_coset_rep(x, c)) throw std::invalid_argument("deodhar_case: x not in X_c");
  Perm sx = perm_compose(simple_transposition((int)x.size(), i), x);
  if (is_coset_rep(sx, c)) return DeodharInCosets{};
  Perm xi = perm_inverse(x);
  int j = xi[i - 1];
  // here x(j) = i and x(j+1) = i+1 with j, j+1 in one block of c
  if (j + 1 > (int)x.size() || x[j] != i + 1)
    throw std::logic_error("deodhar_case: dichotomy violated");
  return DeodharConjugate{j};
}

std::vector<Perm> enumerate_sn(int n) {
  check_sn_guard(n);
  std::vector<Perm> all;
  all.reserve((size_t)factorial(n));
  Perm w = perm_identity(n);
  do {
    all.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return all;
}

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= (uint64_t)k;
  return f;
}

uint64_t perm_rank(const Perm& w) {
  int n = (int)w.size();
  uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (w[j] < w[i]) ++smaller;
    r = r * (uint64_t)(n - i) + (uint64_t)smaller;
  }
  return r;
}

Perm perm_unrank(int n, uint64_t r) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<uint64_t> digits(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = r % (uint64_t)(n - i);
    r /= (uint64_t)(n - i);
  }
  Perm w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = avail[digits[i]];
    avail.erase(avail.begin() + (long)digits[i]);
  }
  return w;
}

void check_sn_guard(int n, bool force) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (!force && n > 7)
    throw std::length_error("S_n enumeration guard: n > 7 (use force to override)");
}

}  // namespace gperm
