#include "gperm/coloured.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gperm {

CPerm cp_identity(const ColourGroup& G, int n) {
  return CPerm{perm_identity(n), std::vector<Colour>((size_t)n, G.identity())};
}

CPerm cp_plain(const ColourGroup& G, const Perm& w) {
  return CPerm{w, std::vector<Colour>(w.size(), G.identity())};
}

void cp_check(const ColourGroup& G, const CPerm& a) {
  if (!is_perm(a.window)) throw std::invalid_argument("CPerm: window is not a permutation");
  if (a.colours.size() != a.window.size())
    throw std::invalid_argument("CPerm: one colour per letter required");
  for (const Colour& c : a.colours) G.check(c);
}

CPerm cp_multiply(const ColourGroup& G, const CPerm& a, const CPerm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("cp_multiply: degree mismatch");
  int n = a.degree();
  CPerm r;
  r.window.resize(n);
  r.colours.resize(n);
  for (int i = 0; i < n; ++i) {
    int bi = b.window[i];
    r.window[i] = a.window[bi - 1];
    r.colours[i] = G.op(a.colours[bi - 1], b.colours[i]);
  }
  return r;
}

CPerm cp_inverse(const ColourGroup& G, const CPerm& a) {
  int n = a.degree();
  CPerm r;
  r.window = perm_inverse(a.window);
  r.colours.resize(n);
  for (int i = 0; i < n; ++i) r.colours[i] = G.inv(a.colours[r.window[i] - 1]);
  return r;
}

CPerm cp_direct_sum(const CPerm& a, const CPerm& b) {
  CPerm r;
  r.window = a.window;
  for (int v : b.window) r.window.push_back(v + a.degree());
  r.colours = a.colours;
  r.colours.insert(r.colours.end(), b.colours.begin(), b.colours.end());
  return r;
}

std::string cp_str(const CPerm& a) {
  if (a.degree() == 0) return "()";
  std::string s;
  for (int i = 0; i < a.degree(); ++i) {
    if (i) s += " ";
    s += std::to_string(a.window[i]) + "^" + colour_str(a.colours[i]);
  }
  return s;
}

CPerm cp_parse(const ColourGroup& G, const std::string& s) {
  CPerm a;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "()") continue;
    size_t hat = tok.find('^');
    std::string head = tok.substr(0, hat);
    size_t used = 0;
    int v = std::stoi(head, &used);
    if (used != head.size() || v <= 0) throw std::invalid_argument("cp_parse: bad letter '" + tok + "'");
    a.window.push_back(v);
    a.colours.push_back(hat == std::string::npos ? G.identity() : colour_parse(tok.substr(hat + 1)));
  }
  cp_check(G, a);
  return a;
}

CPerm word_component(const CPerm& a, int lo, int hi) {
  std::vector<int> letters;
  std::vector<Colour> cols;
  for (int i = 0; i < a.degree(); ++i)
    if (a.window[i] >= lo && a.window[i] <= hi) {
      letters.push_back(a.window[i]);
      cols.push_back(a.colours[i]);
    }
  return CPerm{standardize(letters), std::move(cols)};
}

ColouredCComponents coloured_c_components(const ColourGroup& G, const CPerm& a, const Composition& c) {
  cp_check(G, a);
  CComponents parts = c_components(a.window, c);
  return ColouredCComponents{parts.u, CPerm{parts.v, a.colours}};
}

uint64_t gn_order(const ColourGroup& G, int n) {
  uint64_t count = factorial(n);
  for (int i = 0; i < n; ++i) count *= (uint64_t)G.order();
  return count;
}

void check_gn_guard(const ColourGroup& G, int n, bool force) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (force) return;
  if (n > 12 || gn_order(G, n) > 1000000ull)
    throw std::length_error("G_n enumeration guard: |G|^n n! > 1e6 (use force to override)");
}

std::vector<CPerm> enumerate_gn(const ColourGroup& G, int n) {
  check_gn_guard(G, n);
  std::vector<CPerm> all;
  all.reserve((size_t)gn_order(G, n));
  std::vector<Colour> palette = G.enumerate();
  Perm w = perm_identity(n);
  do {
    std::vector<size_t> keys((size_t)n, 0);
    while (true) {
      CPerm a;
      a.window = w;
      a.colours.reserve((size_t)n);
      for (int i = 0; i < n; ++i) a.colours.push_back(palette[keys[(size_t)i]]);
      all.push_back(std::move(a));
      int pos = n - 1;
      while (pos >= 0 && keys[(size_t)pos] + 1 == palette.size()) keys[(size_t)pos--] = 0;
      if (pos < 0) break;
      ++keys[(size_t)pos];
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return all;
}

GnTable::GnTable(const ColourGroup& G, int n, bool force) : G_(&G), n_(n) {
  check_gn_guard(G, n, force);
  gord_ = (int)G.order();
  if (gord_ > 127) throw std::length_error("GnTable: group order above table limit");
  gpow_ = 1;
  for (int i = 0; i < n; ++i) gpow_ *= (uint64_t)gord_;
  nperm_ = factorial(n);
  count_ = nperm_ * gpow_;

  std::vector<Perm> perms = enumerate_sn(n);
  win_.resize(nperm_ * (size_t)n);
  for (uint64_t p = 0; p < nperm_; ++p)
    for (int i = 0; i < n; ++i) win_[p * (size_t)n + (size_t)i] = (int8_t)perms[p][(size_t)i];

  pmul_.resize(nperm_ * nperm_);
  pinv_.resize(nperm_);
  for (uint64_t a = 0; a < nperm_; ++a) {
    pinv_[a] = (uint32_t)perm_rank(perm_inverse(perms[a]));
    for (uint64_t b = 0; b < nperm_; ++b)
      pmul_[a * nperm_ + b] = (uint32_t)perm_rank(perm_compose(perms[a], perms[b]));
  }

  opt_.resize((size_t)gord_ * (size_t)gord_);
  invt_.resize((size_t)gord_);
  std::vector<Colour> palette = G.enumerate();
  for (int x = 0; x < gord_; ++x) {
    invt_[(size_t)x] = (int8_t)G.order_key(G.inv(palette[(size_t)x]));
    for (int y = 0; y < gord_; ++y)
      opt_[(size_t)x * (size_t)gord_ + (size_t)y] = (int8_t)G.order_key(G.op(palette[(size_t)x], palette[(size_t)y]));
  }
}

uint64_t GnTable::rank(const CPerm& a) const {
  uint64_t ckey = 0;
  for (int i = 0; i < n_; ++i) ckey = ckey * (uint64_t)gord_ + (uint64_t)G_->order_key(a.colours[(size_t)i]);
  return perm_rank(a.window) * gpow_ + ckey;
}

CPerm GnTable::unrank(uint64_t r) const {
  uint64_t p = r / gpow_;
  uint64_t ckey = r % gpow_;
  CPerm a;
  a.window.resize((size_t)n_);
  const int8_t* w = &win_[p * (size_t)n_];
  for (int i = 0; i < n_; ++i) a.window[(size_t)i] = w[i];
  a.colours.resize((size_t)n_);
  for (int i = n_ - 1; i >= 0; --i) {
    a.colours[(size_t)i] = G_->colour_of_key((long long)(ckey % (uint64_t)gord_));
    ckey /= (uint64_t)gord_;
  }
  return a;
}

uint64_t GnTable::mul(uint64_t a, uint64_t b) const {
  uint64_t pa = a / gpow_, pb = b / gpow_;
  uint64_t ca = a % gpow_, cb = b % gpow_;
  const int8_t* wb = &win_[pb * (size_t)n_];
  // colour digits of a, most significant first
  int8_t da[16];
  for (int i = n_ - 1; i >= 0; --i) {
    da[i] = (int8_t)(ca % (uint64_t)gord_);
    ca /= (uint64_t)gord_;
  }
  int8_t db[16];
  for (int i = n_ - 1; i >= 0; --i) {
    db[i] = (int8_t)(cb % (uint64_t)gord_);
    cb /= (uint64_t)gord_;
  }
  uint64_t ckey = 0;
  for (int i = 0; i < n_; ++i)
    ckey = ckey * (uint64_t)gord_ + (uint64_t)opt_[(size_t)da[wb[i] - 1] * (size_t)gord_ + (size_t)db[i]];
  return (uint64_t)pmul_[pa * nperm_ + pb] * gpow_ + ckey;
}

uint64_t GnTable::inv(uint64_t a) const {
  uint64_t pa = a / gpow_;
  uint64_t ca = a % gpow_;
  int8_t da[16];
  for (int i = n_ - 1; i >= 0; --i) {
    da[i] = (int8_t)(ca % (uint64_t)gord_);
    ca /= (uint64_t)gord_;
  }
  uint64_t pi = pinv_[pa];
  const int8_t* wi = &win_[pi * (size_t)n_];
  uint64_t ckey = 0;
  for (int i = 0; i < n_; ++i) ckey = ckey * (uint64_t)gord_ + (uint64_t)invt_[(size_t)da[wi[i] - 1]];
  return pi * gpow_ + ckey;
}

}  // namespace gperm
