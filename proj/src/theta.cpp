#include "gperm/theta.hpp"

#include <algorithm>
#include <functional>

#include "gperm/linalg.hpp"
#include "gperm/statistics.hpp"

namespace gperm {

std::map<GComposition, Rational> theta_formal(const GComposition& c, long long base) {
  std::vector<std::pair<Composition, Colour>> blocks = gcomp_rainbow(c);
  // per block: the compatible compositions with their peak-block counts
  std::vector<std::vector<std::pair<Composition, int>>> choices;
  choices.reserve(blocks.size());
  for (const auto& [comp, g] : blocks) {
    std::vector<std::pair<Composition, int>> ch;
    for (const Composition& e : phi_set(comp)) ch.emplace_back(e, (int)lambda_map(e).size());
    choices.push_back(std::move(ch));
  }
  std::map<GComposition, Rational> out;
  GComposition acc;
  std::function<void(std::size_t, int)> walk = [&](std::size_t at, int expo) {
    if (at == blocks.size()) {
      Rational coeff(1);
      for (int i = 0; i < expo; ++i) coeff *= Rational(base);
      auto [it, fresh] = out.emplace(acc, coeff);
      if (!fresh) it->second += coeff;
      return;
    }
    const Colour& g = blocks[at].second;
    for (const auto& [e, peaks] : choices[at]) {
      std::size_t keep = acc.size();
      for (int part : e) acc.emplace_back(part, g);
      walk(at + 1, expo + peaks);
      acc.resize(keep);
    }
  };
  walk(0, 0);
  return out;
}

namespace {

// descent classes of one degree with a value-key lookup, cached
struct DescentCtx {
  ClassBasis basis;
  std::map<std::string, std::size_t> index;
};

const DescentCtx& descent_ctx(const ColourGroup& G, int n, bool force) {
  static std::map<std::string, DescentCtx> cache;
  std::string key = G.str() + "|" + std::to_string(n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    DescentCtx ctx;
    ctx.basis = class_basis(G, StatKind::Descent, n, force);
    for (std::size_t i = 0; i < ctx.basis.values.size(); ++i)
      ctx.index.emplace(g_stat_key(G, ctx.basis.values[i]), i);
    it = cache.emplace(key, std::move(ctx)).first;
  }
  return it->second;
}

// coefficients of a homogeneous element against a cached descent context
std::vector<Rational> descent_coords(const ColourGroup& G, const DescentCtx& ctx,
                                     const HopfElement& x) {
  std::vector<Rational> coords(ctx.basis.sums.size(), Rational(0));
  std::vector<std::size_t> seen(ctx.basis.sums.size(), 0);
  for (const auto& [a, c] : x.terms) {
    std::size_t i = ctx.index.at(g_stat_key(G, g_stat_value(StatKind::Descent, G, a)));
    if (seen[i] == 0)
      coords[i] = c;
    else if (coords[i] != c)
      throw NotInSpan("coefficient of " + cp_str(a) + " breaks the fiber " +
                      ctx.basis.labels[i]);
    ++seen[i];
  }
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (seen[i] != 0 && seen[i] != ctx.basis.sums[i].terms.size())
      throw NotInSpan("fiber " + ctx.basis.labels[i] + " appears incompletely (" +
                      std::to_string(seen[i]) + " of " +
                      std::to_string(ctx.basis.sums[i].terms.size()) + " terms)");
  return coords;
}

// theta of one descent class, through the cached basis of its degree
HopfElement theta_class(const ColourGroup& G, const DescentCtx& ctx, const GComposition& c,
                        long long base) {
  HopfElement out;
  for (const auto& [e, coeff] : theta_formal(c, base)) {
    std::size_t i = ctx.index.at(g_stat_key(G, gstat_of_gcomp(e)));
    out += he_scale(ctx.basis.sums[i], coeff);
  }
  return out;
}

HopfElement identity_block(int n, const Colour& g) {
  return he_basis(CPerm{perm_identity(n), std::vector<Colour>((std::size_t)n, g)});
}

}  // namespace

HopfElement theta(const ColourGroup& G, const HopfElement& x, long long base, bool force) {
  std::map<int, HopfElement> parts;
  for (const auto& [a, c] : x.terms) parts[a.degree()].add(a, c);
  HopfElement out;
  for (const auto& [n, part] : parts) {
    if (n == 0) {
      out += part;
      continue;
    }
    const DescentCtx& ctx = descent_ctx(G, n, force);
    std::vector<Rational> coords = descent_coords(G, ctx, part);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      out += he_scale(theta_class(G, ctx, gcomp_of_gstat(ctx.basis.values[i]), base), coords[i]);
    }
  }
  return out;
}

PropertyReport verify_theta_extension(const ColourGroup& G, int nmax, long long base,
                                      bool force) {
  PropertyReport rep;
  rep.property = "theta extends its generator values multiplicatively";
  rep.pass = true;
  for (int n = 1; n <= nmax && rep.pass; ++n) {
    const DescentCtx& ctx = descent_ctx(G, n, force);
    // single parts: the image is base times the peak class sum
    for (const Colour& g : G.enumerate()) {
      HopfElement img = theta_class(G, ctx, GComposition{{n, g}}, base);
      HopfElement peak = he_scale(p_basis(G, GComposition{{n, g}}), Rational(base));
      if (!(img == peak)) {
        rep.pass = false;
        rep.witness = "weight " + std::to_string(n) + ": theta of the class " +
                      gcomp_str(GComposition{{n, g}}) + " is not " + std::to_string(base) +
                      " times the peak class sum";
        break;
      }
    }
    if (!rep.pass) break;
    for (const GComposition& c : enumerate_gcompositions(n, G)) {
      if (c.size() < 2) continue;  // single parts settled above
      HopfElement monomial = he_unit(G);
      HopfElement image_product = he_unit(G);
      for (const auto& [part, g] : c) {
        HopfElement piece = identity_block(part, g);
        monomial = external_product(G, monomial, piece);
        image_product = external_product(G, image_product, theta(G, piece, base, force));
      }
      if (!(theta(G, monomial, base, force) == image_product)) {
        rep.pass = false;
        rep.witness = "weight " + std::to_string(n) +
                      ": theta of the generator monomial of " + gcomp_str(c) +
                      " differs from the product of the generator images";
        break;
      }
    }
  }
  return rep;
}

PropertyReport verify_theta_coalgebra(const ColourGroup& G, int nmax, long long base,
                                      bool force) {
  PropertyReport rep;
  rep.property = "theta commutes with the coproduct";
  rep.pass = true;
  for (int n = 1; n <= nmax && rep.pass; ++n) {
    const DescentCtx& ctx = descent_ctx(G, n, force);
    for (std::size_t i = 0; i < ctx.basis.sums.size(); ++i) {
      GComposition c = gcomp_of_gstat(ctx.basis.values[i]);
      TensorElement lhs = coproduct(G, theta_class(G, ctx, c, base));
      TensorElement rhs;
      TensorExpansion split =
          express_tensor(G, StatKind::Descent, coproduct(G, ctx.basis.sums[i]), force);
      for (const auto& [lv, rv, coeff] : split.terms) {
        const DescentCtx& lctx = descent_ctx(G, gcomp_weight(gcomp_of_gstat(lv)), force);
        const DescentCtx& rctx = descent_ctx(G, gcomp_weight(gcomp_of_gstat(rv)), force);
        HopfElement tl = theta_class(G, lctx, gcomp_of_gstat(lv), base);
        HopfElement tr = theta_class(G, rctx, gcomp_of_gstat(rv), base);
        for (const auto& [a, ca] : tl.terms)
          for (const auto& [b, cb] : tr.terms) {
            auto key = std::make_pair(a, b);
            auto it = rhs.find(key);
            if (it == rhs.end())
              rhs.emplace(key, coeff * ca * cb);
            else {
              it->second += coeff * ca * cb;
              if (it->second.is_zero()) rhs.erase(it);
            }
          }
      }
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.witness = "weight " + std::to_string(n) +
                      ": coproduct and theta disagree on the class " + ctx.basis.labels[i];
        break;
      }
    }
  }
  return rep;
}

ImageReport theta_image_report(const ColourGroup& G, int nmax, long long base, bool force) {
  ImageReport rep;
  rep.pass = true;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<CPerm> order = enumerate_gn(G, n);
    std::sort(order.begin(), order.end());
    std::map<CPerm, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
    auto row_of = [&](const HopfElement& x) {
      RatRow row(order.size(), Rational(0));
      for (const auto& [a, c] : x.terms) row[rank.at(a)] = c;
      return row;
    };
    const DescentCtx& ctx = descent_ctx(G, n, force);
    std::vector<HopfElement> images;
    RowSpace image_span(order.size());
    for (std::size_t i = 0; i < ctx.basis.sums.size(); ++i) {
      images.push_back(theta_class(G, ctx, gcomp_of_gstat(ctx.basis.values[i]), base));
      image_span.insert(row_of(images.back()));
    }
    ClassBasis peaks = class_basis(G, StatKind::InteriorPeak, n, force);
    RowSpace peak_span(order.size());
    for (const HopfElement& s : peaks.sums) peak_span.insert(row_of(s));
    rep.image_dims.push_back(image_span.rank());
    rep.target_dims.push_back(peak_span.rank());
    if (rep.pass) {
      for (const HopfElement& img : images)
        if (!peak_span.contains(row_of(img))) {
          rep.pass = false;
          rep.witness = "degree " + std::to_string(n) + ": an image leaves the peak span";
        }
      for (const HopfElement& s : peaks.sums)
        if (rep.pass && !image_span.contains(row_of(s))) {
          rep.pass = false;
          rep.witness = "degree " + std::to_string(n) + ": a peak class sum is not attained";
        }
    }
  }
  return rep;
}

}  // namespace gperm
