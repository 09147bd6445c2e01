#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gperm/coloured.hpp"
#include "gperm/composition.hpp"
#include "gperm/permutation.hpp"

namespace gperm {

/// Planar binary tree, encoded canonically in preorder: '1' = internal node
/// followed by left and right subtree codes, '0' = leaf.
using TreeCode = std::vector<uint8_t>;

/// Word statistics.  Descent and peak statistics take values in
/// compositions, the tree statistic in planar binary trees, the type B
/// descent statistic in subsets of [0, n-1].
enum class StatKind { Descent, InteriorPeak, ExteriorPeak, Tree, DescentB };

StatKind stat_kind_parse(const std::string& name);
std::string stat_kind_str(StatKind k);

struct BSet {
  std::vector<int> elems;
  friend bool operator==(const BSet&, const BSet&) = default;
  friend auto operator<=>(const BSet&, const BSet&) = default;
};
using StatValue = std::variant<Composition, TreeCode, BSet>;

std::vector<int> descent_set(const Perm& w);
Composition descent_comp(const Perm& w);
/// Positions 1 < i < n with w(i-1) < w(i) > w(i+1).
std::vector<int> interior_peak_set(const Perm& w);
Composition interior_peak_comp(const Perm& w);
/// Positions 1 <= i < n with w(i-1) < w(i) > w(i+1) under w(0) = 0.
std::vector<int> exterior_peak_set(const Perm& w);
Composition exterior_peak_comp(const Perm& w);
/// Recursive min-splitting tree of a word with distinct letters.
TreeCode tree_of(const std::vector<int>& word);

/// Evaluates an uncoloured statistic (DescentB is not available here).
StatValue stat_value(StatKind kind, const Perm& w);

std::string stat_value_str(const StatValue& v);
std::string tree_json(const TreeCode& t);

/// Maximal constant-colour factors of the word form, with their colours.
struct RainbowBlock {
  std::vector<int> letters;
  Colour colour;
};
std::vector<RainbowBlock> rainbow_blocks(const CPerm& a);

/// Coloured statistic value: base values on the rainbow blocks paired with
/// the block colours (adjacent colours differ).  DescentB values are stored
/// as a single block carrying the identity colour.
using GStatValue = std::vector<std::pair<StatValue, Colour>>;

/// Blockwise lift of a base statistic; DescentB is evaluated directly and
/// requires G = Z2.
GStatValue g_stat_value(StatKind kind, const ColourGroup& G, const CPerm& a);

std::string g_stat_value_str(const GStatValue& v);
/// Canonical key usable as a map index.
std::string g_stat_key(const ColourGroup& G, const GStatValue& v);

/// Flattens a blockwise descent value into a coloured composition and back.
GComposition gcomp_of_gstat(const GStatValue& v);
GStatValue gstat_of_gcomp(const GComposition& c);

/// Signed window values: negative where the colour is the nontrivial Z2
/// element.  des_b = {i in [0,n-1] : v(i) > v(i+1)} with v(0) = 0.
BSet des_b_set(const ColourGroup& G, const CPerm& a);

/// Coxeter length over the generators {s_0, s_1, ..., s_{n-1}} of the
/// hyperoctahedral group, for every element of G_n (indexed by rank).
/// Computed by breadth-first search; requires G = Z2.
std::vector<int> lengths_b(const GnTable& table);

}  // namespace gperm
