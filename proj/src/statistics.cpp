#include "gperm/statistics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gperm {

StatKind stat_kind_parse(const std::string& name) {
  if (name == "D") return StatKind::Descent;
  if (name == "IP") return StatKind::InteriorPeak;
  if (name == "EP") return StatKind::ExteriorPeak;
  if (name == "T") return StatKind::Tree;
  if (name == "DESB") return StatKind::DescentB;
  throw std::invalid_argument("unknown statistic kind: " + name);
}

std::string stat_kind_str(StatKind k) {
  switch (k) {
    case StatKind::Descent: return "D";
    case StatKind::InteriorPeak: return "IP";
    case StatKind::ExteriorPeak: return "EP";
    case StatKind::Tree: return "T";
    case StatKind::DescentB: return "DESB";
  }
  return "?";
}

std::vector<int> descent_set(const Perm& w) {
  std::vector<int> d;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back((int)i + 1);
  return d;
}

Composition descent_comp(const Perm& w) {
  return composition_of_subset((int)w.size(), descent_set(w));
}

std::vector<int> interior_peak_set(const Perm& w) {
  std::vector<int> p;
  for (size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) p.push_back((int)i + 1);
  return p;
}

Composition interior_peak_comp(const Perm& w) {
  return composition_of_subset((int)w.size(), interior_peak_set(w));
}

std::vector<int> exterior_peak_set(const Perm& w) {
  std::vector<int> p;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if ((i == 0 || w[i - 1] < w[i]) && w[i] > w[i + 1]) p.push_back((int)i + 1);
  return p;
}

Composition exterior_peak_comp(const Perm& w) {
  return composition_of_subset((int)w.size(), exterior_peak_set(w));
}

static void tree_rec(const std::vector<int>& word, int lo, int hi, TreeCode& out) {
  if (lo > hi) {
    out.push_back(0);
    return;
  }
  int m = lo;
  for (int i = lo + 1; i <= hi; ++i)
    if (word[(size_t)i] < word[(size_t)m]) m = i;
  out.push_back(1);
  tree_rec(word, lo, m - 1, out);
  tree_rec(word, m + 1, hi, out);
}

TreeCode tree_of(const std::vector<int>& word) {
  TreeCode t;
  tree_rec(word, 0, (int)word.size() - 1, t);
  return t;
}

StatValue stat_value(StatKind kind, const Perm& w) {
  switch (kind) {
    case StatKind::Descent: return descent_comp(w);
    case StatKind::InteriorPeak: return interior_peak_comp(w);
    case StatKind::ExteriorPeak: return exterior_peak_comp(w);
    case StatKind::Tree: return tree_of(w);
    case StatKind::DescentB: break;
  }
  throw std::invalid_argument("stat_value: DescentB needs a coloured argument");
}

static std::string tree_paren(const TreeCode& t, size_t& pos) {
  if (t[pos] == 0) {
    ++pos;
    return ".";
  }
  ++pos;
  std::string left = tree_paren(t, pos);
  std::string right = tree_paren(t, pos);
  return "(" + left + right + ")";
}

std::string stat_value_str(const StatValue& v) {
  if (std::holds_alternative<Composition>(v)) return comp_str(std::get<Composition>(v));
  if (std::holds_alternative<TreeCode>(v)) {
    size_t pos = 0;
    return tree_paren(std::get<TreeCode>(v), pos);
  }
  const BSet& b = std::get<BSet>(v);
  std::string s = "{";
  for (size_t i = 0; i < b.elems.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.elems[i]);
  }
  return s + "}";
}

static std::string tree_json_rec(const TreeCode& t, size_t& pos) {
  if (t[pos] == 0) {
    ++pos;
    return "null";
  }
  ++pos;
  std::string left = tree_json_rec(t, pos);
  std::string right = tree_json_rec(t, pos);
  return "[" + left + "," + right + "]";
}

std::string tree_json(const TreeCode& t) {
  size_t pos = 0;
  return tree_json_rec(t, pos);
}

std::vector<RainbowBlock> rainbow_blocks(const CPerm& a) {
  std::vector<RainbowBlock> blocks;
  for (int i = 0; i < a.degree(); ++i) {
    if (blocks.empty() || blocks.back().colour != a.colours[(size_t)i])
      blocks.push_back(RainbowBlock{{}, a.colours[(size_t)i]});
    blocks.back().letters.push_back(a.window[(size_t)i]);
  }
  return blocks;
}

GStatValue g_stat_value(StatKind kind, const ColourGroup& G, const CPerm& a) {
  if (kind == StatKind::DescentB) return GStatValue{{des_b_set(G, a), G.identity()}};
  GStatValue v;
  for (const RainbowBlock& b : rainbow_blocks(a))
    v.emplace_back(stat_value(kind, standardize(b.letters)), b.colour);
  return v;
}

std::string g_stat_value_str(const GStatValue& v) {
  if (v.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ";";
    s += stat_value_str(v[i].first) + "^" + colour_str(v[i].second);
  }
  return s;
}

std::string g_stat_key(const ColourGroup& G, const GStatValue& v) {
  std::string key;
  for (const auto& [val, col] : v) {
    if (std::holds_alternative<Composition>(val)) {
      key += 'C';
      for (int p : std::get<Composition>(val)) key += std::to_string(p) + ",";
    } else if (std::holds_alternative<TreeCode>(val)) {
      key += 'T';
      for (uint8_t b : std::get<TreeCode>(val)) key += (char)('0' + b);
    } else {
      key += 'B';
      for (int x : std::get<BSet>(val).elems) key += std::to_string(x) + ",";
    }
    key += '^';
    key += std::to_string(G.order_key(col));
    key += '|';
  }
  return key;
}

GComposition gcomp_of_gstat(const GStatValue& v) {
  GComposition c;
  for (const auto& [val, col] : v) {
    if (!std::holds_alternative<Composition>(val))
      throw std::invalid_argument("gcomp_of_gstat: blocks must be compositions");
    for (int p : std::get<Composition>(val)) c.emplace_back(p, col);
  }
  return c;
}

GStatValue gstat_of_gcomp(const GComposition& c) {
  GStatValue v;
  for (const auto& [block, colour] : gcomp_rainbow(c)) v.emplace_back(block, colour);
  return v;
}

BSet des_b_set(const ColourGroup& G, const CPerm& a) {
  if (G.moduli() != std::vector<int>{2})
    throw std::invalid_argument("des_b_set: type B statistics require G = Z2");
  int n = a.degree();
  auto value = [&](int i) {
    if (i == 0) return 0;
    int v = a.window[(size_t)i - 1];
    return a.colours[(size_t)i - 1][0] == 1 ? -v : v;
  };
  BSet d;
  for (int i = 0; i < n; ++i)
    if (value(i) > value(i + 1)) d.elems.push_back(i);
  return d;
}

std::vector<int> lengths_b(const GnTable& table) {
  const ColourGroup& G = table.group();
  if (G.moduli() != std::vector<int>{2})
    throw std::invalid_argument("lengths_b: type B length requires G = Z2");
  int n = table.degree();
  std::vector<uint64_t> gens;
  CPerm s0 = cp_identity(G, n);
  if (n > 0) {
    s0.colours[0] = Colour{1};
    gens.push_back(table.rank(s0));
  }
  for (int i = 1; i < n; ++i) gens.push_back(table.rank(cp_plain(G, simple_transposition(n, i))));

  std::vector<int> dist(table.size(), -1);
  std::deque<uint64_t> queue;
  uint64_t e = table.rank(cp_identity(G, n));
  dist[e] = 0;
  queue.push_back(e);
  while (!queue.empty()) {
    uint64_t x = queue.front();
    queue.pop_front();
    for (uint64_t g : gens) {
      uint64_t y = table.mul(x, g);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace gperm
