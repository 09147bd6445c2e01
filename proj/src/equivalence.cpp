#include "gperm/equivalence.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gperm {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

std::vector<int> ids_by_first_appearance(UnionFind& uf) {
  std::vector<int> ids(uf.parent.size(), -1);
  int next = 0;
  for (std::size_t r = 0; r < uf.parent.size(); ++r) {
    int root = uf.find((int)r);
    if (ids[(std::size_t)root] < 0) ids[(std::size_t)root] = next++;
    ids[r] = ids[(std::size_t)root];
  }
  return ids;
}

int position_of(const Perm& w, int value) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] == value) return (int)k + 1;
  throw std::logic_error("value not present in window");
}

// swap the letters i and i+1, i.e. left multiplication by s_i
Perm left_swap(const Perm& w, int i) {
  Perm out = w;
  for (int& x : out) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return out;
}

// closure classes of a base relation on S_n, indexed by perm_rank
const std::vector<int>& base_class_table(RelationKind kind, int n, bool force) {
  static std::map<std::pair<int, int>, std::vector<int>> cache;
  auto key = std::make_pair((int)kind, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  check_sn_guard(n, force);
  std::vector<Perm> all = enumerate_sn(n);
  UnionFind uf(all.size());
  for (std::size_t r = 0; r < all.size(); ++r)
    for (int i = 1; i < n; ++i)
      if (elementary_base(kind, all[r], i))
        uf.unite((int)r, (int)perm_rank(left_swap(all[r], i)));
  return cache.emplace(key, ids_by_first_appearance(uf)).first->second;
}

// index of the rainbow block whose position range contains the letter v
int block_of_letter(const std::vector<RainbowBlock>& blocks, const Perm& w, int v) {
  int pos = position_of(w, v);
  int upto = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    upto += (int)blocks[b].letters.size();
    if (pos <= upto) return (int)b;
  }
  throw std::logic_error("position outside rainbow blocks");
}

bool lifted_related(RelationKind kind, LiftMode lift, const ColourGroup& G, const CPerm& a,
                    int i) {
  (void)G;
  auto blocks = rainbow_blocks(a);
  int bi = block_of_letter(blocks, a.window, i);
  int bj = block_of_letter(blocks, a.window, i + 1);
  if (bi != bj) return true;
  if (lift == LiftMode::Cong) {
    const auto& table = base_class_table(kind, a.degree(), false);
    return table[perm_rank(a.window)] == table[perm_rank(left_swap(a.window, i))];
  }
  const std::vector<int>& sub = blocks[(std::size_t)bi].letters;
  const auto& table = base_class_table(kind, (int)sub.size(), false);
  return table[perm_rank(standardize(sub))] ==
         table[perm_rank(standardize(left_swap(sub, i)))];
}

std::string stat_key_of(StatKind stat, const ColourGroup& G, const CPerm& a) {
  return g_stat_key(G, g_stat_value(stat, G, a));
}

bool is_z2(const ColourGroup& G) { return G.moduli() == std::vector<int>{2}; }

}  // namespace

RelationSpec RelationSpec::parse(const std::string& text) {
  std::string base = text;
  RelationSpec spec;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    base = text.substr(0, colon);
    std::string mode = text.substr(colon + 1);
    if (mode == "cong")
      spec.lift = LiftMode::Cong;
    else if (mode == "block")
      spec.lift = LiftMode::Block;
    else
      throw std::invalid_argument("unknown lift mode: " + mode);
  }
  if (base == "D")
    spec.kind = RelationKind::Descent;
  else if (base == "IP")
    spec.kind = RelationKind::InteriorPeak;
  else if (base == "EP")
    spec.kind = RelationKind::ExteriorPeak;
  else if (base == "SYLV")
    spec.kind = RelationKind::Sylvester;
  else if (base == "TOY12")
    spec.kind = RelationKind::FirstTwo;
  else if (base == "DESB")
    spec.kind = RelationKind::DescentB;
  else
    throw std::invalid_argument("unknown relation: " + base);
  if (spec.kind == RelationKind::DescentB && spec.lift != LiftMode::None)
    throw std::invalid_argument("DESB has no lifted form");
  return spec;
}

std::string RelationSpec::str() const {
  std::string base;
  switch (kind) {
    case RelationKind::Descent: base = "D"; break;
    case RelationKind::InteriorPeak: base = "IP"; break;
    case RelationKind::ExteriorPeak: base = "EP"; break;
    case RelationKind::Sylvester: base = "SYLV"; break;
    case RelationKind::FirstTwo: base = "TOY12"; break;
    case RelationKind::DescentB: base = "DESB"; break;
  }
  if (lift == LiftMode::Cong) base += ":cong";
  if (lift == LiftMode::Block) base += ":block";
  return base;
}

StatKind relation_stat(RelationKind kind) {
  switch (kind) {
    case RelationKind::Descent: return StatKind::Descent;
    case RelationKind::InteriorPeak: return StatKind::InteriorPeak;
    case RelationKind::ExteriorPeak: return StatKind::ExteriorPeak;
    case RelationKind::Sylvester: return StatKind::Tree;
    case RelationKind::DescentB: return StatKind::DescentB;
    case RelationKind::FirstTwo: break;
  }
  throw std::invalid_argument("relation has no companion statistic");
}

bool elementary_base(RelationKind kind, const Perm& w, int i) {
  int n = (int)w.size();
  if (i < 1 || i >= n) throw std::out_of_range("reflection index out of range");
  int p = position_of(w, i);
  int q = position_of(w, i + 1);
  bool detached = std::abs(p - q) > 1;
  switch (kind) {
    case RelationKind::Descent:
      return detached;
    case RelationKind::InteriorPeak:
      return detached || i == 1;
    case RelationKind::ExteriorPeak:
      return detached || (i == 1 && !(w[0] + w[1] == 3));
    case RelationKind::Sylvester: {
      // the letters i, i+1 stay in one subtree iff a smaller letter splits them
      for (int k = std::min(p, q) + 1; k < std::max(p, q); ++k)
        if (w[(std::size_t)k - 1] < i) return true;
      return false;
    }
    case RelationKind::FirstTwo:
      return std::min(p, q) == 1 && std::max(p, q) == 2;
    case RelationKind::DescentB:
      break;
  }
  throw std::invalid_argument("DESB needs coloured input");
}

bool elementary_related(const RelationSpec& rel, const ColourGroup& G, const CPerm& a, int i) {
  int n = a.degree();
  if (rel.kind == RelationKind::DescentB) {
    if (!is_z2(G)) throw std::invalid_argument("DESB requires G = Z2");
    if (i == 0) return n > 0 && a.window[0] != 1;
    if (i < 1 || i >= n) throw std::out_of_range("reflection index out of range");
    return lifted_related(RelationKind::Descent, LiftMode::Cong, G, a, i);
  }
  if (i < 1 || i >= n) throw std::out_of_range("reflection index out of range");
  if (rel.lift == LiftMode::None) {
    if (!G.is_trivial())
      throw std::invalid_argument("base relation " + rel.str() + " acts on uncoloured input");
    return elementary_base(rel.kind, a.window, i);
  }
  return lifted_related(rel.kind, rel.lift, G, a, i);
}

std::vector<int> class_ids(const RelationSpec& rel, const ColourGroup& G, int n, bool force) {
  check_gn_guard(G, n, force);
  if (rel.kind == RelationKind::DescentB && !is_z2(G))
    throw std::invalid_argument("DESB requires G = Z2");
  if (rel.lift != LiftMode::None || rel.kind == RelationKind::DescentB)
    base_class_table(rel.kind == RelationKind::DescentB ? RelationKind::Descent : rel.kind, n,
                     force);
  GnTable table(G, n, force);
  UnionFind uf(table.size());
  int first = rel.kind == RelationKind::DescentB ? 0 : 1;
  std::vector<uint64_t> gen((std::size_t)std::max(n, 1), 0);
  if (rel.kind == RelationKind::DescentB && n > 0) {
    CPerm s0 = cp_identity(G, n);
    s0.colours[0] = Colour{1};
    gen[0] = table.rank(s0);
  }
  for (int i = 1; i < n; ++i)
    gen[(std::size_t)i] = table.rank(cp_plain(G, simple_transposition(n, i)));
  for (uint64_t r = 0; r < table.size(); ++r) {
    CPerm a = table.unrank(r);
    for (int i = first; i < n; ++i)
      if (elementary_related(rel, G, a, i))
        uf.unite((int)r, (int)table.mul(gen[(std::size_t)i], r));
  }
  return ids_by_first_appearance(uf);
}

std::vector<int> fiber_ids(StatKind kind, const ColourGroup& G, int n, bool force) {
  check_gn_guard(G, n, force);
  GnTable table(G, n, force);
  std::vector<int> ids(table.size(), -1);
  std::map<std::string, int> seen;
  for (uint64_t r = 0; r < table.size(); ++r) {
    std::string key = stat_key_of(kind, G, table.unrank(r));
    auto [it, fresh] = seen.emplace(std::move(key), (int)seen.size());
    (void)fresh;
    ids[r] = it->second;
  }
  return ids;
}

namespace {

Partition materialize(const ColourGroup& G, int n, const std::vector<int>& ids, bool force) {
  GnTable table(G, n, force);
  int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  Partition part{G, n, std::vector<std::vector<CPerm>>((std::size_t)count)};
  for (uint64_t r = 0; r < table.size(); ++r)
    part.blocks[(std::size_t)ids[r]].push_back(table.unrank(r));
  return part;
}

}  // namespace

Partition classes(const RelationSpec& rel, const ColourGroup& G, int n, bool force) {
  return materialize(G, n, class_ids(rel, G, n, force), force);
}

Partition fibers(StatKind kind, const ColourGroup& G, int n, bool force) {
  return materialize(G, n, fiber_ids(kind, G, n, force), force);
}

PropertyReport check_connected(const RelationSpec& rel, StatKind stat, const ColourGroup& G,
                               int n, bool force) {
  std::vector<int> cls = class_ids(rel, G, n, force);
  std::vector<int> fib = fiber_ids(stat, G, n, force);
  if (cls == fib) return {"CONNECTED", true, ""};
  GnTable table(G, n, force);
  std::map<int, uint64_t> first_class, first_fiber;
  for (uint64_t r = 0; r < table.size(); ++r) {
    auto [cit, cnew] = first_class.emplace(cls[r], r);
    auto [fit, fnew] = first_fiber.emplace(fib[r], r);
    std::ostringstream out;
    if (!fnew && cls[fit->second] != cls[r]) {
      uint64_t s = fit->second;
      out << "equal statistic, no relation path: " << cp_str(table.unrank(s)) << " and "
          << cp_str(table.unrank(r)) << " share value "
          << g_stat_value_str(g_stat_value(stat, G, table.unrank(r)));
      return {"CONNECTED", false, out.str()};
    }
    if (!cnew && fib[cit->second] != fib[r]) {
      uint64_t s = cit->second;
      out << "related elements with distinct statistic: " << cp_str(table.unrank(s)) << " ("
          << g_stat_value_str(g_stat_value(stat, G, table.unrank(s))) << ") and "
          << cp_str(table.unrank(r)) << " ("
          << g_stat_value_str(g_stat_value(stat, G, table.unrank(r))) << ")";
      return {"CONNECTED", false, out.str()};
    }
  }
  return {"CONNECTED", false, "partitions differ"};
}

MapProperty parse_property(const std::string& text) {
  if (text == "IP") return MapProperty::Induction;
  if (text == "RP") return MapProperty::Restriction;
  if (text == "FP") return MapProperty::Freeness;
  throw std::invalid_argument("unknown property: " + text);
}

std::string property_str(MapProperty p) {
  switch (p) {
    case MapProperty::Induction: return "IP";
    case MapProperty::Restriction: return "RP";
    case MapProperty::Freeness: return "FP";
  }
  return "";
}

namespace {

struct FiberedList {
  std::vector<CPerm> elements;
  std::vector<int> fiber;                 // per element
  std::vector<std::vector<int>> members;  // per fiber id
  std::map<CPerm, int> index;

  int fiber_of(const CPerm& a) const { return fiber[(std::size_t)index.at(a)]; }
};

FiberedList fibered_list(StatKind stat, const ColourGroup& G, int n) {
  FiberedList out;
  out.elements = enumerate_gn(G, n);
  std::map<std::string, int> seen;
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    std::string key = stat_key_of(stat, G, out.elements[k]);
    auto [it, fresh] = seen.emplace(std::move(key), (int)seen.size());
    if (fresh) out.members.emplace_back();
    out.fiber.push_back(it->second);
    out.members[(std::size_t)it->second].push_back((int)k);
    out.index.emplace(out.elements[k], (int)k);
  }
  return out;
}

PropertyReport check_induction(StatKind stat, const ColourGroup& G, int n, int m) {
  FiberedList left = fibered_list(stat, G, n);
  FiberedList right = fibered_list(stat, G, m);
  FiberedList full = fibered_list(stat, G, n + m);
  std::vector<Perm> reps = coset_reps(Composition{n, m});

  std::vector<int> mark(full.elements.size(), -1);
  int epoch = 0;
  for (std::size_t fa = 0; fa < left.members.size(); ++fa)
    for (std::size_t fb = 0; fb < right.members.size(); ++fb) {
      ++epoch;
      std::vector<int> touched;
      for (int ia : left.members[fa])
        for (int ib : right.members[fb]) {
          CPerm sum = cp_direct_sum(left.elements[(std::size_t)ia],
                                    right.elements[(std::size_t)ib]);
          for (const Perm& x : reps) {
            int w = full.index.at(cp_multiply(G, cp_plain(G, x), sum));
            if (mark[(std::size_t)w] != epoch) {
              mark[(std::size_t)w] = epoch;
              touched.push_back(w);
            }
          }
        }
      std::set<int> fibers_hit;
      for (int w : touched) fibers_hit.insert(full.fiber[(std::size_t)w]);
      for (int f : fibers_hit)
        for (int w : full.members[(std::size_t)f])
          if (mark[(std::size_t)w] != epoch) {
            int inside = -1;
            for (int t : touched)
              if (full.fiber[(std::size_t)t] == f) {
                inside = t;
                break;
              }
            std::ostringstream out;
            out << "X(" << n << "," << m << ") * (fiber of "
                << cp_str(left.elements[(std::size_t)left.members[fa][0]]) << " x fiber of "
                << cp_str(right.elements[(std::size_t)right.members[fb][0]]) << ") contains "
                << cp_str(full.elements[(std::size_t)inside]) << " but not "
                << cp_str(full.elements[(std::size_t)w]) << " of equal statistic";
            return {"IP", false, out.str()};
          }
    }
  return {"IP", true, ""};
}

PropertyReport check_restriction(StatKind stat, const ColourGroup& G, int n, int m) {
  FiberedList left = fibered_list(stat, G, n);
  FiberedList right = fibered_list(stat, G, m);
  std::vector<Perm> reps = coset_reps(Composition{n, m});
  for (const Perm& u : reps) {
    CPerm uinv = cp_plain(G, perm_inverse(u));
    std::map<std::pair<int, int>, std::pair<std::string, std::pair<int, int>>> cell;
    for (std::size_t ia = 0; ia < left.elements.size(); ++ia)
      for (std::size_t ib = 0; ib < right.elements.size(); ++ib) {
        CPerm w = cp_multiply(G, cp_direct_sum(left.elements[ia], right.elements[ib]), uinv);
        std::string key = stat_key_of(stat, G, w);
        auto cellkey = std::make_pair(left.fiber[ia], right.fiber[ib]);
        auto [it, fresh] = cell.emplace(
            cellkey, std::make_pair(key, std::make_pair((int)ia, (int)ib)));
        if (!fresh && it->second.first != key) {
          std::ostringstream out;
          out << "u=" << perm_str(u) << ": ("
              << cp_str(left.elements[(std::size_t)it->second.second.first]) << " x "
              << cp_str(right.elements[(std::size_t)it->second.second.second]) << ")u^-1 and ("
              << cp_str(left.elements[ia]) << " x " << cp_str(right.elements[ib])
              << ")u^-1 split a fiber pair";
          return {"RP", false, out.str()};
        }
      }
  }
  return {"RP", true, ""};
}

PropertyReport check_freeness(StatKind stat, const ColourGroup& G, int n, int m) {
  FiberedList left = fibered_list(stat, G, n);
  FiberedList right = fibered_list(stat, G, m);
  std::vector<Perm> reps = coset_reps(Composition{n, m});
  for (const Perm& u : reps)
    for (int j = 1; j < n + m; ++j) {
      if (j == n) continue;
      if (u[(std::size_t)j] != u[(std::size_t)j - 1] + 1) continue;  // u s_j u^-1 not simple
      for (std::size_t ia = 0; ia < left.elements.size(); ++ia)
        for (std::size_t ib = 0; ib < right.elements.size(); ++ib) {
          CPerm swapped;  // s_j v, with the affected factor staying in its fiber
          if (j < n) {
            CPerm a2 = cp_multiply(G, cp_plain(G, simple_transposition(n, j)),
                                   left.elements[ia]);
            if (left.fiber_of(a2) != left.fiber[ia]) continue;
            swapped = cp_direct_sum(a2, right.elements[ib]);
          } else {
            CPerm b2 = cp_multiply(G, cp_plain(G, simple_transposition(m, j - n)),
                                   right.elements[ib]);
            if (right.fiber_of(b2) != right.fiber[ib]) continue;
            swapped = cp_direct_sum(left.elements[ia], b2);
          }
          CPerm v = cp_direct_sum(left.elements[ia], right.elements[ib]);
          std::string before = stat_key_of(stat, G, cp_multiply(G, cp_plain(G, u), v));
          std::string after = stat_key_of(stat, G, cp_multiply(G, cp_plain(G, u), swapped));
          if (before != after) {
            std::ostringstream out;
            out << "u=" << perm_str(u) << ", j=" << j << ", v="
                << cp_str(left.elements[ia]) << " x " << cp_str(right.elements[ib])
                << ": statistic of u s_j v differs from u v";
            return {"FP", false, out.str()};
          }
        }
    }
  return {"FP", true, ""};
}

}  // namespace

PropertyReport check_property(StatKind stat, const ColourGroup& G, MapProperty prop, int n,
                              int m, bool force) {
  check_gn_guard(G, n + m, force);
  switch (prop) {
    case MapProperty::Induction: return check_induction(stat, G, n, m);
    case MapProperty::Restriction: return check_restriction(stat, G, n, m);
    case MapProperty::Freeness: return check_freeness(stat, G, n, m);
  }
  throw std::logic_error("unreachable");
}

PropertyReport check_coincidence(RelationKind base, const ColourGroup& G, int n, bool force) {
  std::vector<int> cong = class_ids(RelationSpec{base, LiftMode::Cong}, G, n, force);
  std::vector<int> block = class_ids(RelationSpec{base, LiftMode::Block}, G, n, force);
  if (cong == block) return {"COINCIDE", true, ""};
  GnTable table(G, n, force);
  std::map<int, uint64_t> first_cong, first_block;
  for (uint64_t r = 0; r < table.size(); ++r) {
    auto [cit, cnew] = first_cong.emplace(cong[r], r);
    auto [bit, bnew] = first_block.emplace(block[r], r);
    std::ostringstream out;
    if (!cnew && block[cit->second] != block[r]) {
      out << cp_str(table.unrank(cit->second)) << " ~ " << cp_str(table.unrank(r))
          << " under the cong lift only";
      return {"COINCIDE", false, out.str()};
    }
    if (!bnew && cong[bit->second] != cong[r]) {
      out << cp_str(table.unrank(bit->second)) << " ~ " << cp_str(table.unrank(r))
          << " under the block lift only";
      return {"COINCIDE", false, out.str()};
    }
  }
  return {"COINCIDE", false, "partitions differ"};
}

PermPair psi(RelationKind kind, int i, const PermPair& p) {
  const Perm& u = p.first;
  const Perm& v = p.second;
  int n = (int)u.size();
  auto descent_branch = [&]() -> PermPair {
    if (elementary_base(RelationKind::Descent, u, i)) return {left_swap(u, i), v};
    Perm t = perm_compose(perm_inverse(u), perm_compose(simple_transposition(n, i), u));
    return {u, perm_compose(t, v)};
  };
  switch (kind) {
    case RelationKind::Descent:
      return descent_branch();
    case RelationKind::InteriorPeak:
      if (i == 1) return {left_swap(u, 1), v};
      return descent_branch();
    case RelationKind::ExteriorPeak: {
      if (elementary_base(RelationKind::Descent, u, i)) return {left_swap(u, i), v};
      if (i == 1) {
        bool commutes = u[0] + u[1] == 3;  // letters 1,2 occupy positions 1,2
        if (commutes) return {u, left_swap(v, 1)};
        return {left_swap(u, 1), v};
      }
      return descent_branch();
    }
    default:
      throw std::invalid_argument("psi defined for D, IP, EP");
  }
}

CPermPair psi_coloured(const ColourGroup& G, int i, const CPermPair& p) {
  const CPerm& a = p.first;
  const CPerm& b = p.second;
  int n = a.degree();
  if (lifted_related(RelationKind::InteriorPeak, LiftMode::Block, G, a, i))
    return {cp_multiply(G, cp_plain(G, simple_transposition(n, i)), a), b};
  Perm t = perm_compose(perm_inverse(a.window),
                        perm_compose(simple_transposition(n, i), a.window));
  return {a, cp_multiply(G, cp_plain(G, t), b)};
}

PropertyReport verify_psi(RelationKind kind, const Perm& w, int i) {
  int n = (int)w.size();
  if (!elementary_base(kind, w, i)) return {"PSI", true, ""};
  StatKind stat = relation_stat(kind);
  Perm target = left_swap(w, i);
  std::set<PermPair> image;
  for (const Perm& u : enumerate_sn(n)) {
    Perm v = perm_compose(perm_inverse(u), w);
    PermPair out = psi(kind, i, {u, v});
    std::ostringstream err;
    if (perm_compose(out.first, out.second) != target)
      err << "product not preserved at u=" << perm_str(u);
    else if (stat_value(stat, out.first) != stat_value(stat, u))
      err << "left statistic changes at u=" << perm_str(u);
    else if (stat_value(stat, out.second) != stat_value(stat, v))
      err << "right statistic changes at u=" << perm_str(u);
    else if (!image.insert(out).second)
      err << "not injective at u=" << perm_str(u);
    if (auto s = err.str(); !s.empty()) return {"PSI", false, s + ", w=" + perm_str(w)};
  }
  return {"PSI", true, ""};
}

PropertyReport verify_psi_coloured(const ColourGroup& G, const CPerm& a, int i) {
  int n = a.degree();
  auto blocks = rainbow_blocks(a);
  bool hypothesis =
      block_of_letter(blocks, a.window, i) != block_of_letter(blocks, a.window, i + 1) ||
      interior_peak_comp(left_swap(a.window, i)) == interior_peak_comp(a.window);
  if (!hypothesis) return {"PSI", true, ""};
  CPerm target = cp_multiply(G, cp_plain(G, simple_transposition(n, i)), a);
  std::set<CPermPair> image;
  for (const CPerm& u : enumerate_gn(G, n)) {
    CPerm v = cp_multiply(G, cp_inverse(G, u), a);
    CPermPair out = psi_coloured(G, i, {u, v});
    std::ostringstream err;
    if (cp_multiply(G, out.first, out.second) != target)
      err << "product not preserved at u=" << cp_str(u);
    else if (stat_key_of(StatKind::InteriorPeak, G, out.first) !=
             stat_key_of(StatKind::InteriorPeak, G, u))
      err << "left statistic changes at u=" << cp_str(u);
    else if (stat_key_of(StatKind::InteriorPeak, G, out.second) !=
             stat_key_of(StatKind::InteriorPeak, G, v))
      err << "right statistic changes at u=" << cp_str(u);
    else if (!image.insert(out).second)
      err << "not injective at u=" << cp_str(u);
    if (auto s = err.str(); !s.empty()) return {"PSI", false, s + ", a=" + cp_str(a)};
  }
  return {"PSI", true, ""};
}

}  // namespace gperm
