#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gperm/statistics.hpp"

namespace gperm {

// One-step relations x ~ s_i x on the (coloured) symmetric group, their
// transitive closures, and the property checkers used to decide when the
// span of class sums is closed under the algebra operations.
//
// A RelationSpec names a base relation together with an optional lift to
// coloured permutations:
//   - Cong lifts by comparing closure classes of the full underlying
//     permutation whenever the letters i, i+1 share a rainbow block;
//   - Block lifts by comparing classes of the standardized block subword.
// Both lifts relate unconditionally across distinct blocks.
enum class RelationKind { Descent, InteriorPeak, ExteriorPeak, Sylvester, FirstTwo, DescentB };
enum class LiftMode { None, Cong, Block };

struct RelationSpec {
  RelationKind kind{RelationKind::Descent};
  LiftMode lift{LiftMode::None};

  bool operator==(const RelationSpec&) const = default;

  // "D", "IP", "EP", "SYLV", "TOY12", "DESB", optionally ":cong" / ":block"
  static RelationSpec parse(const std::string& text);
  std::string str() const;
};

// Statistic whose fibers the relation is expected to generate.
StatKind relation_stat(RelationKind kind);

// x ~ s_i x for plain permutations, i in [1, n-1].
bool elementary_base(RelationKind kind, const Perm& w, int i);

// x ~ s_i x for coloured permutations.  Base kinds require the trivial
// group; DescentB requires Z2 and additionally accepts i = 0 (the sign
// flip of the letter 1).
bool elementary_related(const RelationSpec& rel, const ColourGroup& G, const CPerm& a, int i);

// Class / fiber labels indexed by GnTable rank, numbered by first
// appearance; two labellings describe the same set partition iff the
// vectors are equal.
std::vector<int> class_ids(const RelationSpec& rel, const ColourGroup& G, int n,
                           bool force = false);
std::vector<int> fiber_ids(StatKind kind, const ColourGroup& G, int n, bool force = false);

struct Partition {
  ColourGroup group;
  int degree = 0;
  std::vector<std::vector<CPerm>> blocks;
};

Partition classes(const RelationSpec& rel, const ColourGroup& G, int n, bool force = false);
Partition fibers(StatKind kind, const ColourGroup& G, int n, bool force = false);

struct PropertyReport {
  std::string property;
  bool pass = false;
  std::string witness;  // counterexample data, empty on pass
};

// PASS iff the closure classes of rel equal the fibers of stat.
PropertyReport check_connected(const RelationSpec& rel, StatKind stat, const ColourGroup& G,
                               int n, bool force = false);

// (IP)  every X_(n,m) * (fiber x fiber) is a union of fibers;
// (RP)  the fiber of (a x b) u^{-1} depends only on the fibers of a, b;
// (FP)  for u in X_(n,m) and s_j with u s_j u^{-1} simple, swapping j, j+1
//       inside a factor without changing its fiber leaves the fiber of the
//       product unchanged.
enum class MapProperty { Induction, Restriction, Freeness };

MapProperty parse_property(const std::string& text);
std::string property_str(MapProperty p);

PropertyReport check_property(StatKind stat, const ColourGroup& G, MapProperty prop, int n,
                              int m, bool force = false);

// PASS iff the Cong and Block lifts of base generate the same partition.
PropertyReport check_coincidence(RelationKind base, const ColourGroup& G, int n,
                                 bool force = false);

// Involutions on pairs (u, v) sending fibres of uv = w onto fibres of
// uv = s_i w, statistic-preserving in both coordinates.
using PermPair = std::pair<Perm, Perm>;
using CPermPair = std::pair<CPerm, CPerm>;

PermPair psi(RelationKind kind, int i, const PermPair& p);  // Descent, InteriorPeak, ExteriorPeak
CPermPair psi_coloured(const ColourGroup& G, int i, const CPermPair& p);  // coloured interior peak

// Whenever w ~ s_i w one-step, psi must send {(u,v) : uv = w} to
// {(u,v) : uv = s_i w} preserving the statistic of both coordinates; the
// check sweeps all pairs, covering every (c, d) at once.
PropertyReport verify_psi(RelationKind kind, const Perm& w, int i);
PropertyReport verify_psi_coloured(const ColourGroup& G, const CPerm& a, int i);

}  // namespace gperm
