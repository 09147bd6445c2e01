#include "gperm/hopf.hpp"

#include <json.hpp>
#include <functional>
#include <sstream>
#include <tuple>

#include "gperm/linalg.hpp"

namespace gperm {

void HopfElement::add(const CPerm& a, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms.find(a);
  if (it == terms.end()) {
    terms.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [a, c] : o.terms) add(a, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  for (const auto& [a, c] : o.terms) add(a, -c);
  return *this;
}

HopfElement he_scale(const HopfElement& x, const Rational& c) {
  HopfElement r;
  if (c.is_zero()) return r;
  for (const auto& [a, k] : x.terms) r.terms.emplace(a, k * c);
  return r;
}

HopfElement he_unit(const ColourGroup& G) { return he_basis(cp_identity(G, 0)); }

HopfElement he_basis(const CPerm& a) {
  HopfElement r;
  r.terms.emplace(a, Rational(1));
  return r;
}

int he_degree(const HopfElement& x) {
  int deg = -1;
  for (const auto& [a, c] : x.terms) {
    if (deg == -1)
      deg = a.degree();
    else if (deg != a.degree())
      throw std::invalid_argument("element mixes degrees " + std::to_string(deg) + " and " +
                                  std::to_string(a.degree()));
  }
  return deg;
}

bool he_homogeneous(const HopfElement& x) {
  int deg = -1;
  for (const auto& [a, c] : x.terms) {
    if (deg == -1)
      deg = a.degree();
    else if (deg != a.degree())
      return false;
  }
  return true;
}

std::string he_str(const HopfElement& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : x.terms) {
    if (!first) out << " + ";
    first = false;
    if (c != Rational(1)) out << c.str() << "*";
    out << (a.degree() == 0 ? "()" : cp_str(a));
  }
  return out.str();
}

std::string he_json(const HopfElement& x) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [a, c] : x.terms) {
    nlohmann::ordered_json t;
    t["window"] = a.window;
    t["colours"] = a.colours;
    t["coeff"] = c.str();
    arr.push_back(std::move(t));
  }
  return arr.dump();
}

HopfElement external_product(const ColourGroup& G, const HopfElement& x, const HopfElement& y) {
  HopfElement r;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      Rational c = ca * cb;
      int n = a.degree(), m = b.degree();
      if (n == 0 || m == 0) {
        r.add(n == 0 ? b : a, c);
        continue;
      }
      CPerm ab = cp_direct_sum(a, b);
      for (const Perm& u : coset_reps(Composition{n, m}))
        r.add(cp_multiply(G, cp_plain(G, u), ab), c);
    }
  return r;
}

TensorElement coproduct(const ColourGroup& G, const HopfElement& x) {
  (void)G;
  TensorElement r;
  for (const auto& [a, c] : x.terms)
    for (int i = 0; i <= a.degree(); ++i) {
      auto key = std::make_pair(word_component(a, 1, i), word_component(a, i + 1, a.degree()));
      auto it = r.find(key);
      if (it == r.end())
        r.emplace(std::move(key), c);
      else {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

TensorElement tensor_scale(const TensorElement& t, const Rational& c) {
  TensorElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t) r.emplace(k, v * c);
  return r;
}

TensorElement tensor_product(const ColourGroup& G, const TensorElement& s,
                             const TensorElement& t) {
  TensorElement r;
  for (const auto& [ks, cs] : s)
    for (const auto& [kt, ct] : t) {
      HopfElement left = external_product(G, he_basis(ks.first), he_basis(kt.first));
      HopfElement right = external_product(G, he_basis(ks.second), he_basis(kt.second));
      Rational c = cs * ct;
      for (const auto& [la, lc] : left.terms)
        for (const auto& [ra, rc] : right.terms) {
          auto key = std::make_pair(la, ra);
          auto it = r.find(key);
          if (it == r.end())
            r.emplace(std::move(key), c * lc * rc);
          else {
            it->second += c * lc * rc;
            if (it->second.is_zero()) r.erase(it);
          }
        }
    }
  return r;
}

namespace {

const HopfElement& antipode_basis(const ColourGroup& G, const CPerm& a) {
  static std::map<std::string, HopfElement> memo;
  std::string key = G.str() + "|" + cp_str(a);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  HopfElement s;
  int n = a.degree();
  if (n == 0) {
    s = he_basis(a);
  } else {
    for (int i = 0; i < n; ++i) {
      const HopfElement& sl = antipode_basis(G, word_component(a, 1, i));
      HopfElement piece =
          external_product(G, sl, he_basis(word_component(a, i + 1, n)));
      s -= piece;
    }
  }
  return memo.emplace(std::move(key), std::move(s)).first->second;
}

}  // namespace

HopfElement antipode(const ColourGroup& G, const HopfElement& x) {
  HopfElement r;
  for (const auto& [a, c] : x.terms) r += he_scale(antipode_basis(G, a), c);
  return r;
}

HopfElement internal_product(const ColourGroup& G, const HopfElement& x, const HopfElement& y) {
  if (x.is_zero() || y.is_zero()) return HopfElement{};
  int n = he_degree(x), m = he_degree(y);
  if (n != m)
    throw std::invalid_argument("internal product needs equal degrees, got " +
                                std::to_string(n) + " and " + std::to_string(m));
  HopfElement r;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) r.add(cp_multiply(G, a, b), ca * cb);
  return r;
}

ClassBasis class_basis(const ColourGroup& G, StatKind kind, int n, bool force) {
  Partition part = fibers(kind, G, n, force);
  ClassBasis basis;
  basis.kind = kind;
  basis.degree = n;
  for (const auto& block : part.blocks) {
    GStatValue v = g_stat_value(kind, G, block[0]);
    basis.labels.push_back(g_stat_value_str(v));
    basis.values.push_back(std::move(v));
    HopfElement sum;
    for (const CPerm& a : block) sum.terms.emplace(a, Rational(1));
    basis.sums.push_back(std::move(sum));
  }
  return basis;
}

HopfElement class_sum(const ColourGroup& G, StatKind kind, const GStatValue& value, int n,
                      bool force) {
  check_gn_guard(G, n, force);
  std::string key = g_stat_key(G, value);
  HopfElement sum;
  for (const CPerm& a : enumerate_gn(G, n))
    if (g_stat_key(G, g_stat_value(kind, G, a)) == key) sum.terms.emplace(a, Rational(1));
  return sum;
}

HopfElement d_basis(const ColourGroup& G, const GComposition& c) {
  return class_sum(G, StatKind::Descent, gstat_of_gcomp(c), gcomp_weight(c));
}

HopfElement p_basis(const ColourGroup& G, const GComposition& c) {
  return class_sum(G, StatKind::InteriorPeak, gstat_of_gcomp(c), gcomp_weight(c));
}

std::map<std::string, Rational> express(const ColourGroup& G, StatKind kind,
                                        const HopfElement& x, bool force) {
  std::map<std::string, Rational> coeffs;
  if (x.is_zero()) return coeffs;
  int n = he_degree(x);
  Partition part = fibers(kind, G, n, force);
  std::map<std::string, std::size_t> fiber_size;
  std::map<std::string, std::string> fiber_label;
  for (const auto& block : part.blocks) {
    GStatValue v = g_stat_value(kind, G, block[0]);
    fiber_size[g_stat_key(G, v)] = block.size();
    fiber_label[g_stat_key(G, v)] = g_stat_value_str(v);
  }
  std::map<std::string, std::pair<Rational, std::size_t>> seen;  // coeff, count
  for (const auto& [a, c] : x.terms) {
    std::string key = g_stat_key(G, g_stat_value(kind, G, a));
    auto [it, fresh] = seen.emplace(key, std::make_pair(c, (std::size_t)1));
    if (!fresh) {
      if (it->second.first != c)
        throw NotInSpan("coefficient of " + cp_str(a) + " breaks the fiber " +
                        fiber_label.at(key));
      ++it->second.second;
    }
  }
  for (const auto& [key, info] : seen) {
    if (info.second != fiber_size.at(key))
      throw NotInSpan("fiber " + fiber_label.at(key) + " appears incompletely (" +
                      std::to_string(info.second) + " of " +
                      std::to_string(fiber_size.at(key)) + " terms)");
    coeffs.emplace(fiber_label.at(key), info.first);
  }
  return coeffs;
}

ClosureMode closure_mode_parse(const std::string& text) {
  if (text == "internal") return ClosureMode::Internal;
  if (text == "external") return ClosureMode::External;
  if (text == "coproduct") return ClosureMode::Coproduct;
  throw std::invalid_argument("unknown closure mode: " + text);
}

std::string closure_mode_str(ClosureMode m) {
  switch (m) {
    case ClosureMode::Internal: return "internal";
    case ClosureMode::External: return "external";
    case ClosureMode::Coproduct: return "coproduct";
  }
  return "";
}

std::string StructureTable::csv() const {
  std::ostringstream out;
  out << "left,right,out,count\n";
  for (const auto& [key, count] : entries) {
    auto [l, r, o] = key;
    out << labels[(std::size_t)l] << "," << labels[(std::size_t)r] << ","
        << labels[(std::size_t)o] << "," << count << "\n";
  }
  return out.str();
}

namespace {

std::string deg_label(int degree, const std::string& label) {
  return std::to_string(degree) + ":" + label;
}

}  // namespace

namespace {

// rank-indexed view of one degree: element list, fiber id per element,
// fiber sizes and labels, plus a rank lookup
struct FiberedDegree {
  std::vector<CPerm> elems;
  std::map<CPerm, int> rank_of;
  std::vector<int> fiber;
  std::vector<std::size_t> fiber_size;
  std::vector<std::string> labels;
  std::vector<GStatValue> values;
};

FiberedDegree fibered_degree(const ColourGroup& G, StatKind kind, int d, bool force) {
  FiberedDegree out;
  check_gn_guard(G, d, force);
  out.elems = enumerate_gn(G, d);
  int r = 0;
  for (const CPerm& a : out.elems) out.rank_of.emplace(a, r++);
  out.fiber.assign(out.elems.size(), -1);
  std::map<std::string, int> id_of;
  for (std::size_t i = 0; i < out.elems.size(); ++i) {
    GStatValue v = g_stat_value(kind, G, out.elems[i]);
    auto [it, fresh] = id_of.emplace(g_stat_key(G, v), (int)out.labels.size());
    if (fresh) {
      out.labels.push_back(g_stat_value_str(v));
      out.fiber_size.push_back(0);
      out.values.push_back(std::move(v));
    }
    out.fiber[i] = it->second;
    ++out.fiber_size[(std::size_t)it->second];
  }
  return out;
}

// Distributes accumulated integer coordinates (rank -> count) over the
// fibers of `deg`; every touched fiber must be uniformly and completely
// covered.  Appends (left, right, fiber) entries to the table.
void express_counts(const FiberedDegree& deg, const std::vector<long long>& acc,
                    const std::vector<int>& touched, const std::string& where,
                    const std::function<void(int fiber_id, long long coeff)>& emit) {
  std::map<int, std::pair<long long, std::size_t>> seen;  // fiber -> coeff, count
  for (int r : touched) {
    if (acc[(std::size_t)r] == 0) continue;
    int f = deg.fiber[(std::size_t)r];
    auto [it, fresh] = seen.emplace(f, std::make_pair(acc[(std::size_t)r], (std::size_t)1));
    if (!fresh) {
      if (it->second.first != acc[(std::size_t)r])
        throw NotInSpan("coefficient of " + cp_str(deg.elems[(std::size_t)r]) +
                        " breaks the fiber " + deg.labels[(std::size_t)f] + " in " + where);
      ++it->second.second;
    }
  }
  for (const auto& [f, info] : seen) {
    if (info.second != deg.fiber_size[(std::size_t)f])
      throw NotInSpan("fiber " + deg.labels[(std::size_t)f] + " appears incompletely (" +
                      std::to_string(info.second) + " of " +
                      std::to_string(deg.fiber_size[(std::size_t)f]) + " terms) in " + where);
    emit(f, info.first);
  }
}

}  // namespace

TensorExpansion express_tensor(const ColourGroup& G, StatKind kind, const TensorElement& t,
                               bool force) {
  TensorExpansion out;
  std::map<int, FiberedDegree> by_degree;
  auto degree_view = [&](int d) -> const FiberedDegree& {
    auto it = by_degree.find(d);
    if (it == by_degree.end()) it = by_degree.emplace(d, fibered_degree(G, kind, d, force)).first;
    return it->second;
  };
  // cell (left degree, right degree, left fiber, right fiber) -> coeff, pairs
  std::map<std::tuple<int, int, int, int>, std::pair<Rational, std::size_t>> cells;
  for (const auto& [pr, c] : t) {
    if (c.is_zero()) continue;
    const FiberedDegree& dl = degree_view(pr.first.degree());
    const FiberedDegree& dr = degree_view(pr.second.degree());
    int fl = dl.fiber[(std::size_t)dl.rank_of.at(pr.first)];
    int fr = dr.fiber[(std::size_t)dr.rank_of.at(pr.second)];
    auto key = std::make_tuple(pr.first.degree(), pr.second.degree(), fl, fr);
    auto [it, fresh] = cells.emplace(key, std::make_pair(c, (std::size_t)1));
    if (!fresh) {
      if (it->second.first != c)
        throw NotInSpan("tensor cell " + dl.labels[(std::size_t)fl] + " (x) " +
                        dr.labels[(std::size_t)fr] + " is not fiber-constant");
      ++it->second.second;
    }
  }
  for (const auto& [key, info] : cells) {
    auto [ld, rd, fl, fr] = key;
    const FiberedDegree& dl = by_degree.at(ld);
    const FiberedDegree& dr = by_degree.at(rd);
    std::size_t want = dl.fiber_size[(std::size_t)fl] * dr.fiber_size[(std::size_t)fr];
    if (info.second != want)
      throw NotInSpan("tensor cell " + dl.labels[(std::size_t)fl] + " (x) " +
                      dr.labels[(std::size_t)fr] + " holds " + std::to_string(info.second) +
                      " of " + std::to_string(want) + " pairs");
    out.terms.emplace_back(dl.values[(std::size_t)fl], dr.values[(std::size_t)fr], info.first);
  }
  return out;
}

ClosureReport verify_closure(const ColourGroup& G, StatKind kind, ClosureMode mode, int n,
                             bool force) {
  ClosureReport out;
  out.table.kind = kind;
  out.table.mode = mode;
  out.table.degree = n;
  out.report.property = stat_kind_str(kind) + " " + closure_mode_str(mode) + " closure, n=" +
                        std::to_string(n);
  out.report.pass = true;

  std::map<int, FiberedDegree> degs;
  std::map<std::string, int> index;
  auto degree_at = [&](int d) -> const FiberedDegree& {
    auto it = degs.find(d);
    if (it != degs.end()) return it->second;
    FiberedDegree fd = fibered_degree(G, kind, d, force);
    for (const std::string& lbl : fd.labels) {
      auto [pos, fresh] = index.emplace(deg_label(d, lbl), (int)out.table.labels.size());
      if (fresh) out.table.labels.push_back(deg_label(d, lbl));
      (void)pos;
    }
    return degs.emplace(d, std::move(fd)).first->second;
  };
  auto table_index = [&](int d, const FiberedDegree& fd, int fiber_id) {
    return index.at(deg_label(d, fd.labels[(std::size_t)fiber_id]));
  };
  // members of each fiber, by id, for one degree
  auto members = [](const FiberedDegree& fd) {
    std::vector<std::vector<int>> m(fd.labels.size());
    for (std::size_t r = 0; r < fd.fiber.size(); ++r)
      m[(std::size_t)fd.fiber[r]].push_back((int)r);
    return m;
  };

  try {
    if (mode == ClosureMode::Internal) {
      const FiberedDegree& deg = degree_at(n);
      std::vector<std::vector<int>> fib = members(deg);
      std::vector<long long> acc(deg.elems.size(), 0);
      for (std::size_t i = 0; i < fib.size(); ++i)
        for (std::size_t j = 0; j < fib.size(); ++j) {
          std::vector<int> touched;
          for (int ra : fib[i])
            for (int rb : fib[j]) {
              int rc = deg.rank_of.at(cp_multiply(G, deg.elems[(std::size_t)ra],
                                                  deg.elems[(std::size_t)rb]));
              if (acc[(std::size_t)rc]++ == 0) touched.push_back(rc);
            }
          std::string where = deg.labels[i] + " . " + deg.labels[j];
          express_counts(deg, acc, touched, where, [&](int f, long long c) {
            out.table.entries[{table_index(n, deg, (int)i), table_index(n, deg, (int)j),
                               table_index(n, deg, f)}] = c;
          });
          for (int r : touched) acc[(std::size_t)r] = 0;
        }
    } else if (mode == ClosureMode::External) {
      const FiberedDegree& target = degree_at(n);
      std::vector<long long> acc(target.elems.size(), 0);
      for (int k = 1; k < n; ++k) {
        const FiberedDegree& left = degree_at(k);
        const FiberedDegree& right = degree_at(n - k);
        std::vector<std::vector<int>> fl = members(left), fr = members(right);
        std::vector<Perm> reps = coset_reps(Composition{k, n - k});
        for (std::size_t i = 0; i < fl.size(); ++i)
          for (std::size_t j = 0; j < fr.size(); ++j) {
            std::vector<int> touched;
            for (int ra : fl[i])
              for (int rb : fr[j]) {
                CPerm ab = cp_direct_sum(left.elems[(std::size_t)ra],
                                         right.elems[(std::size_t)rb]);
                for (const Perm& u : reps) {
                  int rc = target.rank_of.at(cp_multiply(G, cp_plain(G, u), ab));
                  if (acc[(std::size_t)rc]++ == 0) touched.push_back(rc);
                }
              }
            std::string where = left.labels[i] + " * " + right.labels[j];
            express_counts(target, acc, touched, where, [&](int f, long long c) {
              out.table.entries[{table_index(k, left, (int)i),
                                 table_index(n - k, right, (int)j),
                                 table_index(n, target, f)}] = c;
            });
            for (int r : touched) acc[(std::size_t)r] = 0;
          }
      }
    } else {
      const FiberedDegree& source = degree_at(n);
      for (int d = 0; d <= n; ++d) degree_at(d);
      std::vector<std::vector<int>> fs = members(source);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        // (left degree, left fiber, right fiber) -> pair term multiplicities
        std::map<std::tuple<int, int, int>, std::map<std::pair<int, int>, long long>> cells;
        for (int r : fs[k]) {
          const CPerm& a = source.elems[(std::size_t)r];
          for (int i = 0; i <= n; ++i) {
            CPerm l = word_component(a, 1, i), rgt = word_component(a, i + 1, n);
            const FiberedDegree& dl = degs.at(i);
            const FiberedDegree& dr = degs.at(n - i);
            int rl = dl.rank_of.at(l), rr = dr.rank_of.at(rgt);
            ++cells[{i, dl.fiber[(std::size_t)rl], dr.fiber[(std::size_t)rr]}][{rl, rr}];
          }
        }
        for (const auto& [cell, pairs] : cells) {
          auto [i, fl, fr] = cell;
          const FiberedDegree& dl = degs.at(i);
          const FiberedDegree& dr = degs.at(n - i);
          std::string where = "Delta " + source.labels[k] + " at " +
                              dl.labels[(std::size_t)fl] + " (x) " + dr.labels[(std::size_t)fr];
          std::size_t want = dl.fiber_size[(std::size_t)fl] * dr.fiber_size[(std::size_t)fr];
          long long coeff = pairs.begin()->second;
          for (const auto& [pr, c] : pairs)
            if (c != coeff)
              throw NotInSpan("tensor cell of " + where + " is not fiber-constant at " +
                              cp_str(dl.elems[(std::size_t)pr.first]) + " (x) " +
                              cp_str(dr.elems[(std::size_t)pr.second]));
          if (pairs.size() != want)
            throw NotInSpan("tensor cell of " + where + " holds " +
                            std::to_string(pairs.size()) + " of " + std::to_string(want) +
                            " pairs");
          out.table.entries[{table_index(i, dl, fl), table_index(n - i, dr, fr),
                             table_index(n, source, (int)k)}] = coeff;
        }
      }
    }
  } catch (const NotInSpan& e) {
    out.report.pass = false;
    out.report.witness = e.what();
    out.table.entries.clear();
  }
  return out;
}

HopfElement forgetful(const ColourGroup& G, const HopfElement& x) {
  (void)G;
  ColourGroup triv;
  HopfElement r;
  for (const auto& [a, c] : x.terms) r.add(cp_plain(triv, a.window), c);
  return r;
}

HopfElement mu_g(const ColourGroup& G, const HopfElement& x, const Colour& g) {
  G.check(g);
  HopfElement r;
  for (const auto& [a, c] : x.terms) {
    if (!a.colours.empty() && !a.colours[0].empty())
      throw std::invalid_argument("mu_g paints uncoloured elements");
    r.add(CPerm{a.window, std::vector<Colour>((std::size_t)a.degree(), g)}, c);
  }
  return r;
}

HopfElement pushforward(const GroupHom& f, const HopfElement& x) {
  HopfElement r;
  for (const auto& [a, c] : x.terms) {
    CPerm b = a;
    for (Colour& g : b.colours) g = f.apply(g);
    r.add(b, c);
  }
  return r;
}

FreeGenReport free_generation_report(const ColourGroup& G,
                                     const std::vector<HopfElement>& generators, int nmax,
                                     bool force) {
  check_gn_guard(G, nmax, force);
  FreeGenReport rep;
  std::vector<int> degs;
  for (const HopfElement& g : generators) {
    int d = he_degree(g);
    if (d < 1) throw std::invalid_argument("generators must be homogeneous of degree >= 1");
    degs.push_back(d);
  }
  rep.free_dims.assign((std::size_t)nmax, 0);
  std::vector<long long> a((std::size_t)nmax + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    for (int d : degs)
      if (d <= n) a[(std::size_t)n] += a[(std::size_t)(n - d)];
    rep.free_dims[(std::size_t)n - 1] = a[(std::size_t)n];
  }

  std::vector<std::map<CPerm, std::size_t>> col((std::size_t)nmax + 1);
  std::vector<RowSpace> span;
  for (int n = 0; n <= nmax; ++n) {
    if (n >= 1) {
      std::size_t i = 0;
      for (const CPerm& w : enumerate_gn(G, n)) col[(std::size_t)n].emplace(w, i++);
    }
    span.emplace_back(n >= 1 ? col[(std::size_t)n].size() : 1);
  }
  auto insert = [&](const HopfElement& x, int n) {
    RatRow v(col[(std::size_t)n].size());
    for (const auto& [w, c] : x.terms) v[col[(std::size_t)n].at(w)] = c;
    span[(std::size_t)n].insert(std::move(v));
  };
  // depth-first walk over all generator words of total degree <= nmax
  auto walk = [&](auto&& self, const HopfElement& prefix, int degree) -> void {
    for (std::size_t t = 0; t < generators.size(); ++t) {
      int d = degree + degs[t];
      if (d > nmax) continue;
      HopfElement next = external_product(G, prefix, generators[t]);
      insert(next, d);
      self(self, next, d);
    }
  };
  walk(walk, he_unit(G), 0);

  rep.pass = true;
  for (int n = 1; n <= nmax; ++n) {
    long long dim = span[(std::size_t)n].rank();
    rep.span_dims.push_back(dim);
    if (dim != rep.free_dims[(std::size_t)n - 1]) {
      rep.pass = false;
      if (rep.witness.empty())
        rep.witness = "degree " + std::to_string(n) + ": span dimension " +
                      std::to_string(dim) + " differs from the free series value " +
                      std::to_string(rep.free_dims[(std::size_t)n - 1]);
    }
  }
  return rep;
}

PropertyReport verify_hopf_axioms(const ColourGroup& G, int nmax, bool force) {
  check_gn_guard(G, nmax, force);
  PropertyReport rep;
  rep.property = "hopf axioms, n<=" + std::to_string(nmax);
  rep.pass = true;
  auto fail = [&](const std::string& w) {
    if (rep.pass) {
      rep.pass = false;
      rep.witness = w;
    }
  };

  std::vector<std::vector<CPerm>> all((std::size_t)nmax + 1);
  for (int n = 0; n <= nmax; ++n) all[(std::size_t)n] = enumerate_gn(G, n);

  using Triple = std::map<std::tuple<CPerm, CPerm, CPerm>, Rational>;
  for (int n = 0; n <= nmax && rep.pass; ++n)
    for (const CPerm& w : all[(std::size_t)n]) {
      HopfElement x = he_basis(w);
      TensorElement dx = coproduct(G, x);
      // counit laws
      HopfElement left_strip, right_strip;
      for (const auto& [pair, c] : dx) {
        if (pair.first.degree() == 0) left_strip.add(pair.second, c);
        if (pair.second.degree() == 0) right_strip.add(pair.first, c);
      }
      if (left_strip != x || right_strip != x) {
        fail("counit law fails at " + cp_str(w));
        break;
      }
      // coassociativity
      Triple lhs, rhs;
      for (const auto& [pair, c] : dx) {
        for (const auto& [pp, cc] : coproduct(G, he_basis(pair.first))) {
          auto key = std::make_tuple(pp.first, pp.second, pair.second);
          lhs[key] += c * cc;
          if (lhs[key].is_zero()) lhs.erase(key);
        }
        for (const auto& [pp, cc] : coproduct(G, he_basis(pair.second))) {
          auto key = std::make_tuple(pair.first, pp.first, pp.second);
          rhs[key] += c * cc;
          if (rhs[key].is_zero()) rhs.erase(key);
        }
      }
      if (lhs != rhs) {
        fail("coassociativity fails at " + cp_str(w));
        break;
      }
      // antipode convolution identity on both sides
      HopfElement conv_l, conv_r;
      for (const auto& [pair, c] : dx) {
        conv_l += he_scale(external_product(G, antipode(G, he_basis(pair.first)),
                                            he_basis(pair.second)),
                           c);
        conv_r += he_scale(external_product(G, he_basis(pair.first),
                                            antipode(G, he_basis(pair.second))),
                           c);
      }
      HopfElement want = n == 0 ? he_unit(G) : HopfElement{};
      if (conv_l != want || conv_r != want) {
        fail("antipode identity fails at " + cp_str(w));
        break;
      }
    }

  // the coproduct is an algebra map for the external product
  for (int n = 1; n <= nmax - 1 && rep.pass; ++n)
    for (int m = 1; n + m <= nmax && rep.pass; ++m)
      for (const CPerm& a : all[(std::size_t)n]) {
        if (!rep.pass) break;
        for (const CPerm& b : all[(std::size_t)m]) {
          HopfElement prod = external_product(G, he_basis(a), he_basis(b));
          TensorElement lhs = coproduct(G, prod);
          TensorElement rhs =
              tensor_product(G, coproduct(G, he_basis(a)), coproduct(G, he_basis(b)));
          if (lhs != rhs) {
            fail("coproduct of " + cp_str(a) + " * " + cp_str(b) + " is not multiplicative");
            break;
          }
        }
      }
  return rep;
}

}  // namespace gperm
