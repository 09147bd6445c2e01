#include "gperm/composition.hpp"

#include <stdexcept>

namespace gperm {

int comp_weight(const Composition& c) {
  int n = 0;
  for (int p : c) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    n += p;
  }
  return n;
}

std::string comp_str(const Composition& c) {
  if (c.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s;
}

std::vector<int> subset_of_composition(const Composition& c) {
  std::vector<int> subset;
  int acc = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    subset.push_back(acc);
  }
  return subset;
}

Composition composition_of_subset(int n, const std::vector<int>& subset) {
  Composition c;
  int prev = 0;
  for (int s : subset) {
    if (s <= prev || s >= n) throw std::invalid_argument("composition_of_subset: bad subset");
    c.push_back(s - prev);
    prev = s;
  }
  if (n > 0) c.push_back(n - prev);
  return c;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n == 0) return {Composition{}};
  std::vector<Composition> all;
  all.reserve(1ull << (n - 1));
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> subset;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) subset.push_back(i);
    all.push_back(composition_of_subset(n, subset));
  }
  return all;
}

bool is_interior_peak_comp(const Composition& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] <= 1) return false;
  return true;
}

bool is_exterior_peak_comp(const Composition& c) {
  for (size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] <= 1) return false;
  return true;
}

Composition lambda_map(const Composition& c) {
  Composition lam;
  int acc = 0;
  for (int p : c) {
    if (p == 1)
      acc += 1;
    else {
      lam.push_back(acc + p);
      acc = 0;
    }
  }
  if (acc > 0) lam.push_back(acc);
  return lam;
}

static bool phi_condition(const std::vector<bool>& in_lam_e, const std::vector<bool>& in_c, int n) {
  // every i marked in the first set must meet {i-1, i} in the second exactly once
  for (int i = 1; i < n; ++i) {
    if (!in_lam_e[(size_t)i]) continue;
    int hits = (i - 1 >= 1 && in_c[(size_t)(i - 1)] ? 1 : 0) + (in_c[(size_t)i] ? 1 : 0);
    if (hits != 1) return false;
  }
  return true;
}

static std::vector<bool> subset_flags(const Composition& c, int n) {
  std::vector<bool> f((size_t)std::max(n, 1), false);
  for (int s : subset_of_composition(c)) f[(size_t)s] = true;
  return f;
}

std::vector<Composition> phi_set(const Composition& c) {
  int n = comp_weight(c);
  std::vector<bool> in_c = subset_flags(c, n);
  std::vector<Composition> out;
  for (const Composition& e : enumerate_compositions(n))
    if (phi_condition(subset_flags(lambda_map(e), n), in_c, n)) out.push_back(e);
  return out;
}

std::vector<Composition> phi_star_set(const Composition& c) {
  int n = comp_weight(c);
  std::vector<bool> in_lam_c = subset_flags(lambda_map(c), n);
  std::vector<Composition> out;
  for (const Composition& e : enumerate_compositions(n))
    if (phi_condition(in_lam_c, subset_flags(e, n), n)) out.push_back(e);
  return out;
}

int gcomp_weight(const GComposition& c) {
  int n = 0;
  for (const auto& [p, g] : c) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    n += p;
  }
  return n;
}

std::string gcomp_str(const GComposition& c) {
  if (c.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i].first) + "^" + colour_str(c[i].second);
  }
  return s;
}

GComposition gcomp_paint(const Composition& c, const Colour& g) {
  GComposition out;
  for (int p : c) out.emplace_back(p, g);
  return out;
}

std::vector<std::pair<Composition, Colour>> gcomp_rainbow(const GComposition& c) {
  std::vector<std::pair<Composition, Colour>> runs;
  for (const auto& [p, g] : c) {
    if (runs.empty() || runs.back().second != g) runs.push_back({{}, g});
    runs.back().first.push_back(p);
  }
  return runs;
}

std::vector<GComposition> enumerate_gcompositions(int n, const ColourGroup& G) {
  std::vector<GComposition> all;
  std::vector<Colour> palette = G.enumerate();
  for (const Composition& c : enumerate_compositions(n)) {
    size_t k = c.size();
    std::vector<size_t> keys(k, 0);
    while (true) {
      GComposition gc;
      for (size_t i = 0; i < k; ++i) gc.emplace_back(c[i], palette[keys[i]]);
      all.push_back(std::move(gc));
      size_t pos = k;
      while (pos > 0 && keys[pos - 1] + 1 == palette.size()) keys[--pos] = 0;
      if (pos == 0) break;
      ++keys[pos - 1];
    }
  }
  return all;
}

long long count_lifted_classes(const std::vector<long long>& base_counts, long long group_order, int n) {
  if (n == 0) return 1;
  if ((int)base_counts.size() < n)
    throw std::invalid_argument("count_lifted_classes: need base counts up to n");
  long long total = 0;
  for (const Composition& c : enumerate_compositions(n)) {
    long long term = 1;
    for (size_t i = 1; i < c.size(); ++i) term *= (group_order - 1);
    for (int p : c) term *= base_counts[(size_t)p - 1];
    total += term;
  }
  return group_order * total;
}

}  // namespace gperm
