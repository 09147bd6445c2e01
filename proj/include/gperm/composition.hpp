#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gperm/colour_group.hpp"
#include "gperm/permutation.hpp"

namespace gperm {

int comp_weight(const Composition& c);
std::string comp_str(const Composition& c);

/// Descent-set bijection: I_c = {c1, c1+c2, ...} inside [1, n-1].
std::vector<int> subset_of_composition(const Composition& c);
Composition composition_of_subset(int n, const std::vector<int>& subset);

/// All compositions of n, ordered by ascending descent-subset bitmask
/// (bit i-1 represents i in I_c).  2^(n-1) entries; n=0 gives {()}.
std::vector<Composition> enumerate_compositions(int n);

/// Interior peak compositions: every part except possibly the last is > 1.
bool is_interior_peak_comp(const Composition& c);
/// Exterior peak compositions: every part except the first and last is > 1.
bool is_exterior_peak_comp(const Composition& c);

/// Weights of the unique factorization of c into blocks (1,...,1,m) with
/// m > 1 plus a final all-ones block, dropping the final weight when zero.
Composition lambda_map(const Composition& c);

/// phi(c): compositions e of |c| such that every i in I_{Lambda(e)} has
/// exactly one of i-1, i in I_c.
std::vector<Composition> phi_set(const Composition& c);
/// phi*(c): compositions e of |c| such that every i in I_{Lambda(c)} has
/// exactly one of i-1, i in I_e.
std::vector<Composition> phi_star_set(const Composition& c);

/// Coloured composition: parts with attached colours.  Adjacent parts may
/// share a colour; the rainbow decomposition groups maximal constant-colour
/// runs.
using GComposition = std::vector<std::pair<int, Colour>>;

int gcomp_weight(const GComposition& c);
std::string gcomp_str(const GComposition& c);
GComposition gcomp_paint(const Composition& c, const Colour& g);

/// Maximal constant-colour runs of parts, in order; adjacent run colours
/// differ.
std::vector<std::pair<Composition, Colour>> gcomp_rainbow(const GComposition& c);

/// All coloured compositions of n over G, ordered by the underlying
/// composition's enumeration order, then colour keys lexicographically.
std::vector<GComposition> enumerate_gcompositions(int n, const ColourGroup& G);

/// Number of classes of the induced coloured equivalence from base class
/// counts |E_1|, ..., |E_n|:
///   |G| * sum over compositions (c1..ck) of n of (|G|-1)^(k-1) prod |E_ci|.
long long count_lifted_classes(const std::vector<long long>& base_counts, long long group_order, int n);

}  // namespace gperm
