#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gperm/composition.hpp"
#include "gperm/hopf.hpp"

namespace gperm {

/// Monomial in the coloured variables a_i^g: the multiset of letters as a
/// sorted (index, colour) list.  Polynomials map monomials to coefficients.
using QMonomial = std::vector<std::pair<int, Colour>>;
using QPolynomial = std::map<QMonomial, Rational>;

std::string qmono_str(const QMonomial& m);
std::string qpoly_str(const QPolynomial& p);
QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b);

/// Fundamental quasi-symmetric polynomial of a coloured composition,
/// truncated to the variables a_1, ..., a_q: sums monomials with weakly
/// increasing indices, each letter coloured by its part, where the index
/// must strictly increase at a part boundary unless the colour strictly
/// increases there.
QPolynomial f_expand(const ColourGroup& G, const GComposition& c, int qvars);

/// Duality with the descent side: the polynomial product F_c F_d equals the
/// sum of F_e weighted by the coefficient of the (c, d) cell in the
/// coproduct of the descent class of e.  All pairs with |c|+|d| <= wmax,
/// truncation q = total weight.
PropertyReport verify_qsym_duality(const ColourGroup& G, int wmax, bool force = false);

/// Truncation stability: the q-variable expansion equals the part of the
/// (q+1)-variable expansion avoiding the last variable, every coefficient
/// equals that of its packed monomial, and all coefficients are one.
PropertyReport verify_qsym_stability(const ColourGroup& G, int wmax);

/// Elements of the graded dual in the fundamental basis.
using QSymF = std::map<GComposition, Rational>;

/// The group algebra k[G] and the canonical character: evaluation of the
/// polynomial at a_1^g = g with every other variable set to zero.  A
/// fundamental element survives exactly when its colour keys strictly
/// increase across part boundaries, and then maps to the product of its
/// part colours with part-size multiplicities.
using GroupAlgebra = std::map<Colour, Rational>;
GroupAlgebra ga_unit(const ColourGroup& G);
GroupAlgebra ga_mul(const ColourGroup& G, const GroupAlgebra& x, const GroupAlgebra& y);
std::string ga_str(const ColourGroup& G, const GroupAlgebra& x);
GroupAlgebra zeta_q(const ColourGroup& G, const QSymF& x);

/// Non-multiplicative variant that reads only single-part terms, assigning
/// the bare part colour.  It agrees with zeta_q on one colour but differs as
/// soon as the group is nontrivial, where it stops being an algebra
/// morphism: kept because the subspace-level comparison of the odd
/// subalgebra with the dual peak span holds for this variant only.
GroupAlgebra zeta_single(const ColourGroup& G, const QSymF& x);

/// Structure maps of the dual, dualized from the descent side: the
/// coproduct transposes the external product, the antipode transposes the
/// antipode.
std::map<std::pair<GComposition, GComposition>, Rational> qsym_coproduct(const ColourGroup& G,
                                                                         const QSymF& x,
                                                                         bool force = false);
QSymF qsym_antipode(const ColourGroup& G, const QSymF& x, bool force = false);

/// Dual of the peak projection in the fundamental basis (closed formula).
QSymF theta_dual(const GComposition& c, long long base = 2);

/// zeta composed with the antipode is the convolution inverse of zeta: both
/// convolutions equal counit times the group-algebra unit on every
/// fundamental basis element of weight <= wmax.
PropertyReport verify_character_inverse(const ColourGroup& G, int wmax, bool force = false);

/// Largest graded subcoalgebra on which the degree-alternated character
/// agrees with the character composed with the antipode (the convolution
/// inverse whenever the character is an algebra morphism).
enum class CharacterKind { Evaluation, SingleTerm };

/// Reports the fixpoint dimensions against the interior-peak class counts
/// (pass), and separately whether the subspace equals the span of the
/// dualized peak projection images degree by degree.
struct OddReport {
  bool pass = false;
  std::vector<long long> dims;      // degree 1..nmax
  std::vector<long long> expected;  // interior-peak class counts
  std::string witness;
  bool dual_peak_match = false;
  std::string dual_peak_witness;
};
OddReport odd_subalgebra_report(const ColourGroup& G, int nmax,
                                CharacterKind kind = CharacterKind::Evaluation,
                                bool force = false);

}  // namespace gperm
