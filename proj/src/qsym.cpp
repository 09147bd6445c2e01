#include "gperm/qsym.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gperm/linalg.hpp"
#include "gperm/statistics.hpp"

namespace gperm {

std::string qmono_str(const QMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << " ";
    out << "a" << m[i].first << "^" << colour_str(m[i].second);
  }
  return out.str();
}

std::string qpoly_str(const QPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (!first) out << " + ";
    first = false;
    if (c != Rational(1)) out << c.str() << "*";
    out << qmono_str(m);
  }
  return out.str();
}

QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      QMonomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      auto [it, fresh] = r.emplace(std::move(m), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

QPolynomial f_expand(const ColourGroup& G, const GComposition& c, int qvars) {
  int n = gcomp_weight(c);
  // colour of each position and the boundaries that force a strict step
  std::vector<Colour> h;
  std::vector<bool> strict((std::size_t)std::max(n - 1, 0), false);
  {
    int t = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (int j = 0; j < c[i].first; ++j) h.push_back(c[i].second);
      t += c[i].first;
      if (i + 1 < c.size() && G.order_key(c[i].second) >= G.order_key(c[i + 1].second))
        strict[(std::size_t)(t - 1)] = true;
    }
  }
  QPolynomial out;
  std::vector<int> a((std::size_t)n, 0);
  std::function<void(int, int)> walk = [&](int pos, int low) {
    if (pos == n) {
      QMonomial m;
      m.reserve((std::size_t)n);
      for (int i = 0; i < n; ++i) m.emplace_back(a[(std::size_t)i], h[(std::size_t)i]);
      std::sort(m.begin(), m.end());
      auto [it, fresh] = out.emplace(std::move(m), Rational(1));
      if (!fresh) it->second += Rational(1);
      return;
    }
    for (int v = low; v <= qvars; ++v) {
      a[(std::size_t)pos] = v;
      walk(pos + 1, pos + 1 < n && strict[(std::size_t)pos] ? v + 1 : v);
    }
  };
  if (n == 0)
    out.emplace(QMonomial{}, Rational(1));
  else
    walk(0, 1);
  return out;
}

namespace {

// descent classes of one degree with coloured-composition lookup
struct Degree {
  std::vector<GComposition> comps;
  std::map<GComposition, std::size_t> index;
  std::vector<HopfElement> sums;
  std::map<std::string, GComposition> by_label;
};

const Degree& degree(const ColourGroup& G, int n, bool force) {
  static std::map<std::string, Degree> cache;
  std::string key = G.str() + "|" + std::to_string(n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Degree d;
    ClassBasis basis = class_basis(G, StatKind::Descent, n, force);
    for (std::size_t i = 0; i < basis.values.size(); ++i) {
      GComposition c = gcomp_of_gstat(basis.values[i]);
      d.index.emplace(c, i);
      d.by_label.emplace(basis.labels[i], c);
      d.comps.push_back(std::move(c));
      d.sums.push_back(std::move(basis.sums[i]));
    }
    it = cache.emplace(key, std::move(d)).first;
  }
  return it->second;
}

// structure constants of one weight, dualized.  delta holds, per composition
// e, the cells (c, d, coeff) with d_e appearing in the external product
// d_c d_d: transposed, that is the coproduct of the dual.  mult holds, per e,
// the cells of the coproduct of the descent class of e: transposed, the
// product of the dual.  antipode_rows transposes the antipode.
struct DualDegree {
  using Cells = std::vector<std::tuple<GComposition, GComposition, Rational>>;
  std::map<GComposition, Cells> delta;
  std::map<GComposition, Cells> mult;
  std::map<GComposition, std::map<GComposition, Rational>> antipode_rows;
};

const DualDegree& dual_degree(const ColourGroup& G, int n, bool force) {
  static std::map<std::string, DualDegree> cache;
  std::string key = G.str() + "|" + std::to_string(n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DualDegree d;
  if (n == 0) {
    GComposition empty;
    d.delta[empty] = {{empty, empty, Rational(1)}};
    d.mult[empty] = {{empty, empty, Rational(1)}};
    d.antipode_rows[empty] = {{empty, Rational(1)}};
    return cache.emplace(key, std::move(d)).first->second;
  }
  const Degree& top = degree(G, n, force);
  for (const GComposition& e : top.comps) {
    d.delta[e].emplace_back(GComposition{}, e, Rational(1));
    d.delta[e].emplace_back(e, GComposition{}, Rational(1));
    d.mult[e].emplace_back(GComposition{}, e, Rational(1));
    d.mult[e].emplace_back(e, GComposition{}, Rational(1));
  }
  for (int i = 1; i <= n - 1; ++i) {
    const Degree& left = degree(G, i, force);
    const Degree& right = degree(G, n - i, force);
    for (const GComposition& c : left.comps)
      for (const GComposition& dd : right.comps) {
        HopfElement prod = external_product(G, left.sums[left.index.at(c)],
                                            right.sums[right.index.at(dd)]);
        for (const auto& [label, coeff] : express(G, StatKind::Descent, prod, force))
          d.delta[top.by_label.at(label)].emplace_back(c, dd, coeff);
      }
  }
  for (const GComposition& e : top.comps) {
    // keep the nontrivial splits only; the unit cells were added above
    TensorElement middle;
    for (auto& [pair, coeff] : coproduct(G, top.sums[top.index.at(e)]))
      if (pair.first.degree() > 0 && pair.second.degree() > 0) middle.emplace(pair, coeff);
    for (const auto& [lv, rv, coeff] : express_tensor(G, StatKind::Descent, middle, force).terms)
      d.mult[e].emplace_back(gcomp_of_gstat(lv), gcomp_of_gstat(rv), coeff);
  }
  for (const GComposition& c : top.comps) {
    HopfElement img = antipode(G, top.sums[top.index.at(c)]);
    std::map<GComposition, Rational> row;
    for (const auto& [label, coeff] : express(G, StatKind::Descent, img, force))
      row.emplace(top.by_label.at(label), coeff);
    d.antipode_rows.emplace(c, std::move(row));
  }
  return cache.emplace(key, std::move(d)).first->second;
}

void ga_add(GroupAlgebra& x, const Colour& g, const Rational& c) {
  if (c.is_zero()) return;
  auto it = x.find(g);
  if (it == x.end()) {
    x.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

}  // namespace

GroupAlgebra ga_unit(const ColourGroup& G) { return GroupAlgebra{{G.identity(), Rational(1)}}; }

GroupAlgebra ga_mul(const ColourGroup& G, const GroupAlgebra& x, const GroupAlgebra& y) {
  GroupAlgebra r;
  for (const auto& [g, cg] : x)
    for (const auto& [h, ch] : y) ga_add(r, G.op(g, h), cg * ch);
  return r;
}

std::string ga_str(const ColourGroup& G, const GroupAlgebra& x) {
  (void)G;
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : x) {
    if (!first) out << " + ";
    first = false;
    if (c != Rational(1)) out << c.str() << "*";
    out << "[" << colour_str(g) << "]";
  }
  return out.str();
}

GroupAlgebra zeta_q(const ColourGroup& G, const QSymF& x) {
  GroupAlgebra r;
  for (const auto& [c, coeff] : x) {
    // evaluate at a_1^g = g, all other variables zero: only the monomial
    // using the first variable throughout survives, and it exists exactly
    // when every part boundary allows a weak step
    bool weak = true;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      weak = weak && G.order_key(c[i].second) < G.order_key(c[i + 1].second);
    if (!weak) continue;
    Colour g = G.identity();
    for (const auto& [part, h] : c)
      for (int j = 0; j < part; ++j) g = G.op(g, h);
    ga_add(r, g, coeff);
  }
  return r;
}

GroupAlgebra zeta_single(const ColourGroup& G, const QSymF& x) {
  GroupAlgebra r;
  for (const auto& [c, coeff] : x) {
    if (c.empty())
      ga_add(r, G.identity(), coeff);
    else if (c.size() == 1)
      ga_add(r, c[0].second, coeff);
  }
  return r;
}

std::map<std::pair<GComposition, GComposition>, Rational> qsym_coproduct(const ColourGroup& G,
                                                                         const QSymF& x,
                                                                         bool force) {
  std::map<std::pair<GComposition, GComposition>, Rational> r;
  for (const auto& [e, coeff] : x) {
    const DualDegree& d = dual_degree(G, gcomp_weight(e), force);
    for (const auto& [c, dd, k] : d.delta.at(e)) {
      auto key = std::make_pair(c, dd);
      auto it = r.find(key);
      if (it == r.end())
        r.emplace(key, coeff * k);
      else {
        it->second += coeff * k;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

QSymF qsym_antipode(const ColourGroup& G, const QSymF& x, bool force) {
  QSymF r;
  for (const auto& [e, coeff] : x) {
    const DualDegree& d = dual_degree(G, gcomp_weight(e), force);
    for (const auto& [c, row] : d.antipode_rows) {
      auto hit = row.find(e);
      if (hit == row.end()) continue;
      auto it = r.find(c);
      if (it == r.end())
        r.emplace(c, coeff * hit->second);
      else {
        it->second += coeff * hit->second;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

QSymF theta_dual(const GComposition& c, long long base) {
  std::vector<std::pair<Composition, Colour>> blocks = gcomp_rainbow(c);
  int expo = 0;
  std::vector<std::vector<Composition>> choices;
  for (const auto& [comp, g] : blocks) {
    expo += (int)lambda_map(comp).size();
    choices.push_back(phi_star_set(comp));
  }
  Rational coeff(1);
  for (int i = 0; i < expo; ++i) coeff *= Rational(base);
  QSymF out;
  GComposition acc;
  std::function<void(std::size_t)> walk = [&](std::size_t at) {
    if (at == blocks.size()) {
      auto [it, fresh] = out.emplace(acc, coeff);
      if (!fresh) it->second += coeff;
      return;
    }
    const Colour& g = blocks[at].second;
    for (const Composition& e : choices[at]) {
      std::size_t keep = acc.size();
      for (int part : e) acc.emplace_back(part, g);
      walk(at + 1);
      acc.resize(keep);
    }
  };
  walk(0);
  return out;
}

PropertyReport verify_qsym_duality(const ColourGroup& G, int wmax, bool force) {
  PropertyReport rep;
  rep.property = "fundamental products match the dual coproduct constants";
  rep.pass = true;
  for (int n = 1; n <= wmax && rep.pass; ++n) {
    int q = n;
    // expansions of every coloured composition of weight <= n in q variables
    std::map<GComposition, QPolynomial> poly;
    for (int m = 0; m <= n; ++m)
      for (const GComposition& c : enumerate_gcompositions(m, G)) poly.emplace(c, f_expand(G, c, q));
    const DualDegree& dual = dual_degree(G, n, force);
    // collect the constants per (c, d) cell
    std::map<std::pair<GComposition, GComposition>, QPolynomial> rhs;
    for (const auto& [e, cells] : dual.mult)
      for (const auto& [c, d, coeff] : cells) {
        QPolynomial& acc = rhs[{c, d}];
        for (const auto& [mono, k] : poly.at(e)) {
          auto [it, fresh] = acc.emplace(mono, coeff * k);
          if (!fresh) it->second += coeff * k;
        }
      }
    for (int i = 0; i <= n && rep.pass; ++i)
      for (const GComposition& c : enumerate_gcompositions(i, G)) {
        for (const GComposition& d : enumerate_gcompositions(n - i, G)) {
          QPolynomial lhs = qpoly_mul(poly.at(c), poly.at(d));
          auto it = rhs.find({c, d});
          QPolynomial want = it == rhs.end() ? QPolynomial{} : it->second;
          for (auto prune = want.begin(); prune != want.end();)
            prune = prune->second.is_zero() ? want.erase(prune) : std::next(prune);
          if (!(lhs == want)) {
            rep.pass = false;
            rep.witness = "weight " + std::to_string(n) + ": the product of " + gcomp_str(c) +
                          " and " + gcomp_str(d) + " disagrees with the coproduct constants";
            break;
          }
        }
        if (!rep.pass) break;
      }
  }
  return rep;
}

PropertyReport verify_qsym_stability(const ColourGroup& G, int wmax) {
  PropertyReport rep;
  rep.property = "fundamental expansions are quasi-symmetric and truncation-stable";
  rep.pass = true;
  for (int n = 1; n <= wmax && rep.pass; ++n) {
    int q = n;
    for (const GComposition& c : enumerate_gcompositions(n, G)) {
      QPolynomial small = f_expand(G, c, q);
      QPolynomial big = f_expand(G, c, q + 1);
      QPolynomial cut;
      for (const auto& [m, k] : big) {
        bool inside = true;
        for (const auto& [var, g] : m) inside = inside && var <= q;
        if (inside) cut.emplace(m, k);
        if (k != Rational(1)) {
          rep.pass = false;
          rep.witness = "weight " + std::to_string(n) + ": a coefficient of " + gcomp_str(c) +
                        " is not one";
          break;
        }
        // packing: renumber the support order-preservingly and compare
        std::vector<int> support;
        for (const auto& [var, g] : m)
          if (support.empty() || support.back() != var) support.push_back(var);
        QMonomial packed;
        for (const auto& [var, g] : m) {
          int at = (int)(std::lower_bound(support.begin(), support.end(), var) - support.begin());
          packed.emplace_back(at + 1, g);
        }
        std::sort(packed.begin(), packed.end());
        auto hit = big.find(packed);
        if (hit == big.end() || hit->second != k) {
          rep.pass = false;
          rep.witness = "weight " + std::to_string(n) + ": " + gcomp_str(c) +
                        " is not quasi-symmetric at " + qmono_str(m);
          break;
        }
      }
      if (rep.pass && !(small == cut)) {
        rep.pass = false;
        rep.witness = "weight " + std::to_string(n) + ": truncating " + gcomp_str(c) +
                      " from " + std::to_string(q + 1) + " to " + std::to_string(q) +
                      " variables does not match";
      }
      if (!rep.pass) break;
    }
  }
  return rep;
}

PropertyReport verify_character_inverse(const ColourGroup& G, int wmax, bool force) {
  PropertyReport rep;
  rep.property = "the antipode composition inverts the canonical character";
  rep.pass = true;
  for (int n = 0; n <= wmax && rep.pass; ++n) {
    for (const GComposition& e : enumerate_gcompositions(n, G)) {
      const DualDegree& dual = dual_degree(G, n, force);
      GroupAlgebra left, right;
      for (const auto& [c, d, coeff] : dual.delta.at(e)) {
        QSymF fc{{c, Rational(1)}}, fd{{d, Rational(1)}};
        GroupAlgebra zc = zeta_q(G, fc);
        GroupAlgebra zd = zeta_q(G, fd);
        GroupAlgebra zsc = zeta_q(G, qsym_antipode(G, fc, force));
        GroupAlgebra zsd = zeta_q(G, qsym_antipode(G, fd, force));
        for (const auto& [g, k] : ga_mul(G, zc, zsd)) ga_add(left, g, coeff * k);
        for (const auto& [g, k] : ga_mul(G, zsc, zd)) ga_add(right, g, coeff * k);
      }
      GroupAlgebra want = n == 0 ? ga_unit(G) : GroupAlgebra{};
      if (!(left == want) || !(right == want)) {
        rep.pass = false;
        rep.witness = "weight " + std::to_string(n) + ": the convolution against " +
                      gcomp_str(e) + " misses the counit";
        break;
      }
    }
  }
  return rep;
}

namespace {

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  RatMatrix r(rows, RatRow(cols, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

RatMatrix transpose(const RatMatrix& a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  RatMatrix r(cols, RatRow(rows, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[j][i] = a[i][j];
  return r;
}

}  // namespace

OddReport odd_subalgebra_report(const ColourGroup& G, int nmax, CharacterKind kind, bool force) {
  OddReport rep;
  rep.pass = true;
  rep.dual_peak_match = true;
  auto character = kind == CharacterKind::Evaluation ? zeta_q : zeta_single;
  std::vector<std::vector<GComposition>> comps(nmax + 1);
  std::vector<std::map<GComposition, std::size_t>> index(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    comps[n] = enumerate_gcompositions(n, G);
    for (std::size_t i = 0; i < comps[n].size(); ++i) index[n].emplace(comps[n][i], i);
  }
  std::vector<Colour> palette = G.enumerate();
  std::map<Colour, std::size_t> colour_index;
  for (std::size_t i = 0; i < palette.size(); ++i) colour_index.emplace(palette[i], i);

  // start from the kernel of (alternated character - convolution inverse)
  std::vector<RatMatrix> span(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    std::size_t dim = comps[n].size();
    RatMatrix cond(palette.size(), RatRow(dim, Rational(0)));
    for (std::size_t e = 0; e < dim; ++e) {
      QSymF fe{{comps[n][e], Rational(1)}};
      GroupAlgebra bar = character(G, fe);
      GroupAlgebra inv = character(G, qsym_antipode(G, fe, force));
      Rational sign(n % 2 == 0 ? 1 : -1);
      for (const auto& [g, c] : bar) cond[colour_index.at(g)][e] += sign * c;
      for (const auto& [g, c] : inv) cond[colour_index.at(g)][e] -= c;
    }
    for (const RatRow& v : kernel(cond)) span[n].push_back(v);
  }

  // shrink to the largest subcoalgebra: every middle coproduct component of
  // a member must land in span (x) span
  bool changed = true;
  while (changed) {
    changed = false;
    for (int n = 1; n <= nmax; ++n) {
      if (span[n].empty()) continue;
      std::vector<RatMatrix> ann(n);
      for (int i = 1; i < n; ++i) {
        RatMatrix rows = span[i];
        if (rows.empty()) rows.assign(1, RatRow(comps[i].size(), Rational(0)));
        ann[i] = RatMatrix();
        for (const RatRow& f : kernel(rows)) ann[i].push_back(f);
      }
      const DualDegree& dual = dual_degree(G, n, force);
      RatMatrix constraints;
      auto push = [&](RatRow row) {
        bool zero = true;
        for (const Rational& v : row) zero = zero && v.is_zero();
        if (!zero) constraints.push_back(std::move(row));
      };
      for (int i = 1; i < n; ++i) {
        int j = n - i;
        // (f (x) delta_d)(Delta h) = 0 and (delta_c (x) g)(Delta h) = 0 for
        // every annihilating functional f of span[i], g of span[j]
        for (const RatRow& f : ann[i])
          for (std::size_t dd = 0; dd < comps[j].size(); ++dd) {
            RatRow row(comps[n].size(), Rational(0));
            for (std::size_t e = 0; e < comps[n].size(); ++e)
              for (const auto& [c, d, coeff] : dual.delta.at(comps[n][e])) {
                if (gcomp_weight(c) != i || !(d == comps[j][dd])) continue;
                Rational fc = f[index[i].at(c)];
                if (!fc.is_zero()) row[e] += coeff * fc;
              }
            push(std::move(row));
          }
        for (const RatRow& g : ann[j])
          for (std::size_t cc = 0; cc < comps[i].size(); ++cc) {
            RatRow row(comps[n].size(), Rational(0));
            for (std::size_t e = 0; e < comps[n].size(); ++e)
              for (const auto& [c, d, coeff] : dual.delta.at(comps[n][e])) {
                if (gcomp_weight(c) != i || !(c == comps[i][cc])) continue;
                Rational gd = g[index[j].at(d)];
                if (!gd.is_zero()) row[e] += coeff * gd;
              }
            push(std::move(row));
          }
      }
      if (constraints.empty()) continue;
      RatMatrix coeffs = mat_mul(constraints, transpose(span[n]));
      std::vector<RatRow> ys = kernel(coeffs);
      if ((int)ys.size() == (int)span[n].size()) continue;
      RatMatrix next;
      for (const RatRow& y : ys) {
        RatRow v(comps[n].size(), Rational(0));
        for (std::size_t r = 0; r < span[n].size(); ++r) {
          if (y[r].is_zero()) continue;
          for (std::size_t e = 0; e < v.size(); ++e) v[e] += y[r] * span[n][r][e];
        }
        next.push_back(std::move(v));
      }
      span[n] = std::move(next);
      changed = true;
    }
  }

  for (int n = 1; n <= nmax; ++n) {
    rep.dims.push_back(rank(span[n]));
    rep.expected.push_back(
        (long long)class_basis(G, StatKind::InteriorPeak, n, force).labels.size());
    if (rep.pass && rep.dims.back() != rep.expected.back()) {
      rep.pass = false;
      rep.witness = "degree " + std::to_string(n) + ": fixpoint dimension " +
                    std::to_string(rep.dims.back()) + " differs from the peak class count " +
                    std::to_string(rep.expected.back());
    }
    // compare the fixpoint with the span of the dualized peak images
    if (rep.dual_peak_match) {
      RowSpace fix(comps[n].size());
      for (const RatRow& v : span[n]) fix.insert(v);
      RowSpace dual_peaks(comps[n].size());
      for (const GComposition& c : comps[n]) {
        RatRow v(comps[n].size(), Rational(0));
        for (const auto& [e, coeff] : theta_dual(c)) v[index[n].at(e)] += coeff;
        dual_peaks.insert(v);
        if (!fix.contains(v)) {
          rep.dual_peak_match = false;
          rep.dual_peak_witness = "degree " + std::to_string(n) + ": the dual peak image of " +
                                  gcomp_str(c) + " leaves the fixpoint";
          break;
        }
      }
      if (rep.dual_peak_match && dual_peaks.rank() != fix.rank()) {
        rep.dual_peak_match = false;
        rep.dual_peak_witness = "degree " + std::to_string(n) + ": the dual peak span is smaller";
      }
    }
  }
  return rep;
}

}  // namespace gperm
