#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "gperm/qsym.hpp"
#include "gperm/theta.hpp"

using namespace gperm;

namespace {

const ColourGroup kTriv;
const ColourGroup kZ2({2});

GComposition gc(std::initializer_list<std::pair<int, Colour>> parts) {
  GComposition c;
  for (const auto& p : parts) c.push_back(p);
  return c;
}

std::string formal_str(const std::map<GComposition, Rational>& m) {
  std::string s;
  for (const auto& [e, c] : m) {
    if (!s.empty()) s += "  ";
    s += gcomp_str(e) + " -> " + c.str();
  }
  return s;
}

std::string qsymf_str(const QSymF& x) {
  std::string s;
  for (const auto& [c, k] : x) {
    if (!s.empty()) s += " + ";
    s += k.str() + "*F_" + gcomp_str(c);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

TEST_CASE("peak projection values on small classes") {
  CHECK(he_str(theta(kTriv, he_basis(cp_parse(kTriv, "1^e")))) == "2*1^e");
  CHECK(he_str(theta(kTriv, he_basis(cp_parse(kTriv, "1^e 2^e")))) ==
        "2*1^e 2^e + 2*2^e 1^e");
  CHECK(he_str(theta(kTriv, he_basis(cp_parse(kTriv, "2^e 1^e")))) ==
        "2*1^e 2^e + 2*2^e 1^e");
  CHECK(he_str(theta(kZ2, he_basis(cp_parse(kZ2, "1^1")))) == "2*1^1");
  CHECK(he_str(theta(kTriv, he_unit(kTriv))) == "()");
  // linear across degrees, and rejects nothing expressible: a mixed element
  HopfElement mixed = he_basis(cp_parse(kTriv, "1^e"));
  mixed += he_basis(cp_parse(kTriv, "1^e 2^e"));
  CHECK(he_str(theta(kTriv, mixed)) == "2*1^e + 2*1^e 2^e + 2*2^e 1^e");
  // elements outside the descent span are rejected: a lone permutation from
  // a two-element class is not a class-sum combination
  CHECK_THROWS_AS(theta(kTriv, he_basis(cp_parse(kTriv, "2^e 1^e 3^e"))), NotInSpan);
}

TEST_CASE("closed formula of the peak projection on compositions") {
  CHECK(formal_str(theta_formal(gc({{2, Colour{}}, {1, Colour{}}}))) ==
        "1^e,1^e,1^e -> 2  1^e,2^e -> 2  2^e,1^e -> 4  3^e -> 2");
  CHECK(formal_str(theta_formal(gc({{1, Colour{1}}}))) == "1^1 -> 2");
  CHECK(formal_str(theta_formal(gc({{1, Colour{0}}, {2, Colour{1}}}))) ==
        "1^0,1^1,1^1 -> 4  1^0,2^1 -> 4");
  // base 1 keeps the support but drops the powers of two
  CHECK(formal_str(theta_formal(gc({{2, Colour{}}, {1, Colour{}}}), 1)) ==
        "1^e,1^e,1^e -> 1  1^e,2^e -> 1  2^e,1^e -> 1  3^e -> 1");
}

TEST_CASE("the projection extends its values on odd single-part generators") {
  CHECK(verify_theta_extension(kTriv, 6).pass);
  CHECK(verify_theta_extension(kZ2, 6).pass);

  // with the scale factor dropped, multiplicativity already fails in weight
  // two, pinpointing the inconsistency in the unscaled closed form
  auto rep = verify_theta_extension(kTriv, 2, 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness ==
        "weight 2: theta of the generator monomial of 1^e,1^e differs from the product of the "
        "generator images");
  rep = verify_theta_extension(kZ2, 2, 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness ==
        "weight 2: theta of the generator monomial of 1^0,1^0 differs from the product of the "
        "generator images");
}

TEST_CASE("the projection is a morphism of coalgebras") {
  CHECK(verify_theta_coalgebra(kTriv, 5).pass);
  CHECK(verify_theta_coalgebra(kZ2, 5).pass);

  auto rep = verify_theta_coalgebra(kTriv, 2, 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness == "weight 2: coproduct and theta disagree on the class 2^e");
  rep = verify_theta_coalgebra(kZ2, 2, 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness == "weight 2: coproduct and theta disagree on the class 2^0");
}

TEST_CASE("the image of the projection is the span of the peak classes") {
  auto rep = theta_image_report(kTriv, 5);
  CHECK(rep.pass);
  CHECK(rep.image_dims == std::vector<long long>{1, 1, 2, 3, 5});
  CHECK(rep.target_dims == std::vector<long long>{1, 1, 2, 3, 5});
  rep = theta_image_report(kZ2, 5);
  CHECK(rep.pass);
  CHECK(rep.image_dims == std::vector<long long>{2, 4, 10, 24, 58});
  CHECK(rep.target_dims == std::vector<long long>{2, 4, 10, 24, 58});
  // the image span does not see the overall scale
  CHECK(theta_image_report(kTriv, 3, 1).pass);
}

TEST_CASE("fundamental polynomials in finitely many coloured variables") {
  CHECK(qpoly_str(f_expand(kTriv, gc({{2, Colour{}}}), 2)) ==
        "a1^e a1^e + a1^e a2^e + a2^e a2^e");
  CHECK(qpoly_str(f_expand(kTriv, gc({{1, Colour{}}, {1, Colour{}}}), 2)) == "a1^e a2^e");
  CHECK(qpoly_str(f_expand(kZ2, gc({{1, Colour{0}}, {1, Colour{1}}}), 2)) ==
        "a1^0 a1^1 + a1^0 a2^1 + a2^0 a2^1");
  CHECK(qpoly_str(f_expand(kZ2, gc({{1, Colour{1}}, {1, Colour{0}}}), 2)) == "a1^1 a2^0");
  CHECK(qpoly_str(f_expand(kTriv, gc({}), 3)) == "1");
  CHECK(qpoly_str(qpoly_mul(f_expand(kTriv, gc({{1, Colour{}}}), 2),
                            f_expand(kTriv, gc({{1, Colour{}}}), 2))) ==
        "a1^e a1^e + 2*a1^e a2^e + a2^e a2^e");
}

TEST_CASE("products of fundamentals match the dualized coproduct constants") {
  CHECK(verify_qsym_duality(kTriv, 5).pass);
  CHECK(verify_qsym_duality(kZ2, 4).pass);
}

TEST_CASE("expansions are stable under adding a variable") {
  CHECK(verify_qsym_stability(kTriv, 5).pass);
  CHECK(verify_qsym_stability(kZ2, 4).pass);
}

TEST_CASE("dualized structure maps in the fundamental basis") {
  QSymF f2{{gc({{2, Colour{}}}), Rational(1)}};
  CHECK(qsymf_str(qsym_antipode(kTriv, f2)) == "1*F_1^e,1^e");
  auto cp = qsym_coproduct(kTriv, f2);
  REQUIRE(cp.size() == 3);
  CHECK(cp.at({gc({}), gc({{2, Colour{}}})}) == Rational(1));
  CHECK(cp.at({gc({{1, Colour{}}}), gc({{1, Colour{}}})}) == Rational(1));
  CHECK(cp.at({gc({{2, Colour{}}}), gc({})}) == Rational(1));
  QSymF f01{{gc({{1, Colour{0}}, {1, Colour{1}}}), Rational(1)}};
  CHECK(qsymf_str(qsym_antipode(kZ2, f01)) == "1*F_1^1,1^0");
}

TEST_CASE("the canonical character evaluates at one surviving variable") {
  QSymF f2{{gc({{2, Colour{}}}), Rational(1)}};
  CHECK(ga_str(kTriv, zeta_q(kTriv, f2)) == "[e]");
  CHECK(ga_str(kZ2, zeta_q(kZ2, QSymF{{gc({{3, Colour{1}}}), Rational(1)}})) == "[1]");
  CHECK(ga_str(kTriv, zeta_q(kTriv, QSymF{{gc({{1, Colour{}}, {1, Colour{}}}), Rational(1)}})) ==
        "0");
  CHECK(ga_str(kTriv, zeta_q(kTriv, QSymF{{gc({}), Rational(1)}})) == "[e]");
  // colour keys that strictly increase keep the all-ones monomial alive
  CHECK(ga_str(kZ2, zeta_q(kZ2, QSymF{{gc({{1, Colour{0}}, {1, Colour{1}}}), Rational(1)}})) ==
        "[1]");
  CHECK(ga_str(kZ2, zeta_q(kZ2, QSymF{{gc({{1, Colour{1}}, {1, Colour{0}}}), Rational(1)}})) ==
        "0");
  // the two characters differ on an even power of a nontrivial colour: only
  // the evaluation one is multiplicative
  QSymF f21{{gc({{2, Colour{1}}}), Rational(1)}};
  CHECK(ga_str(kZ2, zeta_q(kZ2, f21)) == "[0]");
  CHECK(ga_str(kZ2, zeta_single(kZ2, f21)) == "[1]");
  CHECK(ga_str(kZ2, ga_mul(kZ2, GroupAlgebra{{Colour{1}, Rational(1)}},
                           GroupAlgebra{{Colour{1}, Rational(1)}})) == "[0]");
}

TEST_CASE("composing with the antipode inverts the canonical character") {
  CHECK(verify_character_inverse(kTriv, 4).pass);
  CHECK(verify_character_inverse(kZ2, 4).pass);
}

TEST_CASE("the dual peak map is adjoint to the closed projection formula") {
  for (int n = 1; n <= 4; ++n)
    for (const GComposition& c : enumerate_gcompositions(n, kZ2)) {
      QSymF img = theta_dual(c);
      for (const GComposition& e : enumerate_gcompositions(n, kZ2)) {
        auto form = theta_formal(e);
        Rational lhs = img.count(e) ? img.at(e) : Rational(0);
        Rational rhs = form.count(c) ? form.at(c) : Rational(0);
        CHECK(lhs == rhs);
      }
    }
  CHECK(qsymf_str(theta_dual(gc({{2, Colour{}}, {1, Colour{}}}))) ==
        "4*F_1^e,2^e + 4*F_2^e,1^e");
  CHECK(qsymf_str(theta_dual(gc({{2, Colour{}}}))) == "2*F_1^e,1^e + 2*F_2^e");
  CHECK(qsymf_str(theta_dual(gc({{1, Colour{0}}, {1, Colour{1}}}))) == "4*F_1^0,1^1");
}

TEST_CASE("odd subalgebra dimensions equal the peak class counts") {
  auto rep = odd_subalgebra_report(kTriv, 4);
  CHECK(rep.pass);
  CHECK(rep.dims == std::vector<long long>{1, 1, 2, 3});
  CHECK(rep.expected == std::vector<long long>{1, 1, 2, 3});
  CHECK(rep.dual_peak_match);

  rep = odd_subalgebra_report(kZ2, 4);
  CHECK(rep.pass);
  CHECK(rep.dims == std::vector<long long>{2, 4, 10, 24});
  CHECK(rep.expected == std::vector<long long>{2, 4, 10, 24});
  // with the multiplicative character the fixpoint has the right size in
  // every degree yet is a different subspace from the dual peak span
  CHECK_FALSE(rep.dual_peak_match);
  CHECK(rep.dual_peak_witness ==
        "degree 2: the dual peak image of 1^0,1^1 leaves the fixpoint");

  // the single-term character variant recovers the dual peak span exactly
  rep = odd_subalgebra_report(kTriv, 4, CharacterKind::SingleTerm);
  CHECK(rep.pass);
  CHECK(rep.dual_peak_match);
  rep = odd_subalgebra_report(kZ2, 4, CharacterKind::SingleTerm);
  CHECK(rep.pass);
  CHECK(rep.dims == std::vector<long long>{2, 4, 10, 24});
  CHECK(rep.dual_peak_match);
}
