#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gperm/coloured.hpp"
#include "gperm/equivalence.hpp"
#include "gperm/rational.hpp"
#include "gperm/statistics.hpp"

namespace gperm {

/// Finitely supported rational combination of coloured permutations over one
/// colour group.  Mixed degrees are allowed; zero coefficients are never
/// stored.
struct HopfElement {
  std::map<CPerm, Rational> terms;

  void add(const CPerm& a, const Rational& c);
  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const HopfElement&, const HopfElement&) = default;
};

HopfElement he_scale(const HopfElement& x, const Rational& c);
/// The unit: the empty permutation with coefficient one.
HopfElement he_unit(const ColourGroup& G);
HopfElement he_basis(const CPerm& a);
/// -1 for zero, the common degree otherwise; throws on mixed degrees.
int he_degree(const HopfElement& x);
bool he_homogeneous(const HopfElement& x);
/// Terms in increasing basis order, "c1*w1 + c2*w2 + ...".
std::string he_str(const HopfElement& x);
/// [{"window":[...],"colours":[[...]],"coeff":"p/q"}, ...]
std::string he_json(const HopfElement& x);

/// Shifted shuffle: bilinear extension of a*b = sum over u in X_(n,m) of
/// u . (a x b).  Degree additive; he_unit is a two-sided unit.
HopfElement external_product(const ColourGroup& G, const HopfElement& x, const HopfElement& y);

using TensorElement = std::map<std::pair<CPerm, CPerm>, Rational>;

/// Deconcatenation by values: a |-> sum over i of a_(i) (x) a_(n-i), where
/// a_(i) keeps the letters with values up to i, standardized with their
/// colours, and a_(n-i) the rest.
TensorElement coproduct(const ColourGroup& G, const HopfElement& x);
TensorElement tensor_scale(const TensorElement& t, const Rational& c);
/// Componentwise product of tensors: (a (x) b)(c (x) d) = a*c (x) b*d.
TensorElement tensor_product(const ColourGroup& G, const TensorElement& s, const TensorElement& t);

/// Convolution inverse of the identity, computed by the graded recursion
/// S(a) = -sum_{i<n} S(a_(i)) * a_(n-i); S(unit) = unit.
HopfElement antipode(const ColourGroup& G, const HopfElement& x);

/// Group-algebra product per degree: bilinear extension of cp_multiply.
/// Requires both sides homogeneous of equal degree.
HopfElement internal_product(const ColourGroup& G, const HopfElement& x, const HopfElement& y);

/// All statistic fibers of degree n as elements, in fiber enumeration order.
struct ClassBasis {
  StatKind kind;
  int degree = 0;
  std::vector<GStatValue> values;
  std::vector<std::string> labels;  // printed statistic values
  std::vector<HopfElement> sums;
};
ClassBasis class_basis(const ColourGroup& G, StatKind kind, int n, bool force = false);

/// Sum of the fiber of the given value, coefficient one each; zero element
/// when the value is not attained.
HopfElement class_sum(const ColourGroup& G, StatKind kind, const GStatValue& value, int n,
                      bool force = false);

/// Descent class sum d^G_c and interior-peak class sum of a coloured
/// composition (the latter requires blockwise interior-peak parts).
HopfElement d_basis(const ColourGroup& G, const GComposition& c);
HopfElement p_basis(const ColourGroup& G, const GComposition& c);

struct NotInSpan : std::runtime_error {
  explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficients of a homogeneous x in the class-sum basis of the statistic:
/// terms are grouped by value and must be constant across each full fiber.
/// Throws NotInSpan with the offending fiber otherwise.
std::map<std::string, Rational> express(const ColourGroup& G, StatKind kind,
                                        const HopfElement& x, bool force = false);

/// Expansion of a tensor in the class (x) class basis: terms are grouped by
/// (value of the left factor, value of the right factor) and every touched
/// cell must be a complete fiber pair with one constant coefficient.
struct TensorExpansion {
  std::vector<std::tuple<GStatValue, GStatValue, Rational>> terms;
};
TensorExpansion express_tensor(const ColourGroup& G, StatKind kind, const TensorElement& t,
                               bool force = false);

enum class ClosureMode { Internal, External, Coproduct };
ClosureMode closure_mode_parse(const std::string& text);
std::string closure_mode_str(ClosureMode m);

/// Integer structure constants over class-sum bases.  Internal:
/// b_i . b_j = sum_k count b_k at one degree.  External: b_i * b_j = sum_k
/// count b_k over all degree splits i + j = n.  Coproduct: Delta b_k =
/// sum_{i,j} count b_i (x) b_j.  Labels carry the degree.
struct StructureTable {
  StatKind kind;
  ClosureMode mode;
  int degree = 0;
  std::vector<std::string> labels;
  std::map<std::tuple<int, int, int>, long long> entries;  // (left,right,out)
  std::string csv() const;
};

/// PASS iff every product (or coproduct) of basis elements re-expresses in
/// the class-sum basis; the table is complete exactly when pass holds.
struct ClosureReport {
  PropertyReport report;
  StructureTable table;
};
ClosureReport verify_closure(const ColourGroup& G, StatKind kind, ClosureMode mode, int n,
                             bool force = false);

/// Colour-forgetting linear map onto the trivial group.
HopfElement forgetful(const ColourGroup& G, const HopfElement& x);
/// Paints every letter of an uncoloured element with the colour g.
HopfElement mu_g(const ColourGroup& G, const HopfElement& x, const Colour& g);
/// Applies a colour-group homomorphism letterwise.
HopfElement pushforward(const GroupHom& f, const HopfElement& x);

/// Compares the graded dimensions of the span of all products of the given
/// homogeneous generators against the free-algebra series of their degree
/// multiset; PASS iff they agree up to nmax.
struct FreeGenReport {
  bool pass = false;
  std::vector<long long> span_dims;  // index n-1 holds degree n
  std::vector<long long> free_dims;
  std::string witness;
};
FreeGenReport free_generation_report(const ColourGroup& G,
                                     const std::vector<HopfElement>& generators, int nmax,
                                     bool force = false);

/// Coassociativity, counit laws, multiplicativity of the coproduct, and the
/// antipode convolution identity, exhaustively on basis elements of degree
/// <= nmax (pairs bounded by total degree for the product check).
PropertyReport verify_hopf_axioms(const ColourGroup& G, int nmax, bool force = false);

}  // namespace gperm
