#pragma once

#include <string>
#include <vector>

namespace gperm {

/// A colour is a residue vector, one entry per cyclic factor of the group.
/// The trivial group's unique colour is the empty vector.
using Colour = std::vector<int>;

/// Finite abelian group Z_{m1} x ... x Z_{mk} written additively on residue
/// vectors.  Colours are totally ordered by their mixed-radix key (first
/// factor most significant), which coincides with lexicographic order on the
/// residue vectors.
class ColourGroup {
public:
  ColourGroup() = default;  // trivial group
  explicit ColourGroup(std::vector<int> moduli);

  /// Accepts "triv" or products of cyclic factors such as "Z2" or "Z2xZ3".
  static ColourGroup parse(const std::string& text);
  std::string str() const;

  const std::vector<int>& moduli() const { return moduli_; }
  long long order() const { return order_; }
  bool is_trivial() const { return moduli_.empty(); }

  Colour identity() const { return Colour(moduli_.size(), 0); }
  bool is_identity(const Colour& c) const;
  Colour op(const Colour& a, const Colour& b) const;
  Colour inv(const Colour& a) const;

  long long order_key(const Colour& c) const;
  Colour colour_of_key(long long key) const;
  std::vector<Colour> enumerate() const;

  void check(const Colour& c) const;

private:
  std::vector<int> moduli_;
  long long order_ = 1;
};

std::string colour_str(const Colour& c);
/// Inverse of colour_str ("e" or dot-separated residues); the caller is
/// responsible for range checking against a group.
Colour colour_parse(const std::string& s);

/// Group homomorphism determined by the images of the cyclic generators.
/// Construction rejects images whose order does not divide the corresponding
/// factor's order.
class GroupHom {
public:
  GroupHom(const ColourGroup& from, const ColourGroup& to, std::vector<Colour> generator_images);

  const ColourGroup& from() const { return *from_; }
  const ColourGroup& to() const { return *to_; }
  Colour apply(const Colour& c) const;

private:
  const ColourGroup* from_;
  const ColourGroup* to_;
  std::vector<Colour> images_;
};

}  // namespace gperm
