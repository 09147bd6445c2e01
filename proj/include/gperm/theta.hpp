#pragma once

#include <map>
#include <vector>

#include "gperm/composition.hpp"
#include "gperm/hopf.hpp"

namespace gperm {

/// Peak projection of one descent class, written again in descent classes:
/// for each maximal constant-colour run of c, sum over the compositions
/// whose peak pattern is compatible with the run, weighting each choice by
/// base^(number of peak blocks).  base = 2 is the convention under which
/// the projection extends the generator values multiplicatively.
std::map<GComposition, Rational> theta_formal(const GComposition& c, long long base = 2);

/// Linear extension of theta_formal to the descent-class span; splits the
/// input by degree and throws NotInSpan when a component is outside.
HopfElement theta(const ColourGroup& G, const HopfElement& x, long long base = 2,
                  bool force = false);

/// The closed formula agrees with the multiplicative extension of the
/// generator values: theta applied to any product of single-part descent
/// classes with total weight <= nmax equals the product of the images, and
/// on single parts the image is base times the matching peak class sum.
PropertyReport verify_theta_extension(const ColourGroup& G, int nmax, long long base = 2,
                                      bool force = false);

/// Coproduct compatibility Delta(theta(x)) = (theta (x) theta)(Delta(x)) on
/// every descent class of weight <= nmax.
PropertyReport verify_theta_coalgebra(const ColourGroup& G, int nmax, long long base = 2,
                                      bool force = false);

/// Per-degree comparison of the image span of theta with the interior-peak
/// class span: equal subspaces, with both dimension lists reported.
struct ImageReport {
  bool pass = false;
  std::vector<long long> image_dims;   // index n-1 holds degree n
  std::vector<long long> target_dims;
  std::string witness;
};
ImageReport theta_image_report(const ColourGroup& G, int nmax, long long base = 2,
                               bool force = false);

}  // namespace gperm
