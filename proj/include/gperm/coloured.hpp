#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gperm/colour_group.hpp"
#include "gperm/permutation.hpp"

namespace gperm {

/// Element of the G-coloured symmetric group G_n = G^n x| S_n, stored as the
/// pair (window, colour vector): the word form assigns colours[i] to the
/// letter window[i].  Multiplication follows the semidirect-product rule
/// obtained from moving colour vectors across permutations: the product of
/// (sigma, g) and (tau, h) has window sigma o tau and colour g_{tau(i)} h_i
/// at position i.
struct CPerm {
  Perm window;
  std::vector<Colour> colours;

  int degree() const { return (int)window.size(); }
  friend bool operator==(const CPerm& a, const CPerm& b) = default;
  friend auto operator<=>(const CPerm& a, const CPerm& b) = default;
};

CPerm cp_identity(const ColourGroup& G, int n);
/// Embeds an uncoloured permutation with all colours trivial.
CPerm cp_plain(const ColourGroup& G, const Perm& w);
CPerm cp_multiply(const ColourGroup& G, const CPerm& a, const CPerm& b);
CPerm cp_inverse(const ColourGroup& G, const CPerm& a);
/// Block concatenation a x b in G_{n+m}.
CPerm cp_direct_sum(const CPerm& a, const CPerm& b);
std::string cp_str(const CPerm& a);
/// Inverse of cp_str.  Tokens are "v" or "v^colour", whitespace separated;
/// a missing colour means the identity, and "()" is the empty word.
CPerm cp_parse(const ColourGroup& G, const std::string& s);
void cp_check(const ColourGroup& G, const CPerm& a);

/// Standardized subword of the letters with values in [lo,hi]; each letter
/// keeps its colour.  Used by the coproduct and by blockwise statistics.
CPerm word_component(const CPerm& a, int lo, int hi);

/// Coloured c-components: alpha = u . v where u in X_c is uncoloured and v
/// is block diagonal carrying alpha's colour vector.
struct ColouredCComponents {
  Perm u;
  CPerm v;
};
ColouredCComponents coloured_c_components(const ColourGroup& G, const CPerm& a, const Composition& c);

/// Enumeration guard: |G|^n * n! must stay within limit unless forced.
void check_gn_guard(const ColourGroup& G, int n, bool force = false);
uint64_t gn_order(const ColourGroup& G, int n);

/// All of G_n ordered by rank: lexicographic window, then mixed-radix colour
/// keys with position 1 most significant.
std::vector<CPerm> enumerate_gn(const ColourGroup& G, int n);

/// Dense rank/unrank codec for G_n plus table-driven multiplication on
/// ranks.  Backs the exhaustive closure and equivalence engines.
class GnTable {
public:
  GnTable(const ColourGroup& G, int n, bool force = false);

  const ColourGroup& group() const { return *G_; }
  int degree() const { return n_; }
  uint64_t size() const { return count_; }

  uint64_t rank(const CPerm& a) const;
  CPerm unrank(uint64_t r) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;

private:
  const ColourGroup* G_;
  int n_;
  int gord_;
  uint64_t gpow_;   // |G|^n
  uint64_t count_;  // n! |G|^n
  uint64_t nperm_;
  std::vector<int8_t> win_;    // nperm * n window letters
  std::vector<uint32_t> pmul_; // nperm * nperm composed-permutation ranks
  std::vector<uint32_t> pinv_;
  std::vector<int8_t> opt_;    // gord * gord colour op table
  std::vector<int8_t> invt_;   // colour inverse table
};

}  // namespace gperm
