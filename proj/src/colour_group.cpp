#include "gperm/colour_group.hpp"

#include <stdexcept>

namespace gperm {

ColourGroup::ColourGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (int m : moduli_) {
    if (m < 2) throw std::invalid_argument("ColourGroup: cyclic factor order must be >= 2");
    order_ *= m;
  }
}

ColourGroup ColourGroup::parse(const std::string& text) {
  if (text == "triv") return ColourGroup();
  if (text.empty()) throw std::invalid_argument("ColourGroup: empty group spec");
  std::vector<int> moduli;
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'Z') throw std::invalid_argument("ColourGroup: expected 'Z' in \"" + text + "\"");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
    if (start == pos) throw std::invalid_argument("ColourGroup: missing factor order in \"" + text + "\"");
    moduli.push_back(std::stoi(text.substr(start, pos - start)));
    if (pos < text.size()) {
      if (text[pos] != 'x') throw std::invalid_argument("ColourGroup: expected 'x' in \"" + text + "\"");
      ++pos;
      if (pos == text.size()) throw std::invalid_argument("ColourGroup: trailing 'x' in \"" + text + "\"");
    }
  }
  return ColourGroup(std::move(moduli));
}

std::string ColourGroup::str() const {
  if (moduli_.empty()) return "triv";
  std::string s;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(moduli_[i]);
  }
  return s;
}

bool ColourGroup::is_identity(const Colour& c) const {
  check(c);
  for (int r : c)
    if (r != 0) return false;
  return true;
}

Colour ColourGroup::op(const Colour& a, const Colour& b) const {
  check(a);
  check(b);
  Colour r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
  return r;
}

Colour ColourGroup::inv(const Colour& a) const {
  check(a);
  Colour r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (moduli_[i] - a[i]) % moduli_[i];
  return r;
}

long long ColourGroup::order_key(const Colour& c) const {
  check(c);
  long long key = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) key = key * moduli_[i] + c[i];
  return key;
}

Colour ColourGroup::colour_of_key(long long key) const {
  if (key < 0 || key >= order_) throw std::out_of_range("ColourGroup: key out of range");
  Colour c(moduli_.size());
  for (size_t i = moduli_.size(); i-- > 0;) {
    c[i] = (int)(key % moduli_[i]);
    key /= moduli_[i];
  }
  return c;
}

std::vector<Colour> ColourGroup::enumerate() const {
  std::vector<Colour> all;
  all.reserve((size_t)order_);
  for (long long k = 0; k < order_; ++k) all.push_back(colour_of_key(k));
  return all;
}

void ColourGroup::check(const Colour& c) const {
  if (c.size() != moduli_.size()) throw std::invalid_argument("Colour: wrong number of residues");
  for (size_t i = 0; i < moduli_.size(); ++i)
    if (c[i] < 0 || c[i] >= moduli_[i]) throw std::invalid_argument("Colour: residue out of range");
}

Colour colour_parse(const std::string& s) {
  if (s == "e") return Colour{};
  Colour c;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t dot = s.find('.', pos);
    std::string part = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    size_t used = 0;
    int v = part.empty() ? -1 : std::stoi(part, &used);
    if (part.empty() || used != part.size() || v < 0)
      throw std::invalid_argument("colour_parse: bad colour '" + s + "'");
    c.push_back(v);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return c;
}

std::string colour_str(const Colour& c) {
  if (c.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(c[i]);
  }
  return s;
}

GroupHom::GroupHom(const ColourGroup& from, const ColourGroup& to, std::vector<Colour> generator_images)
    : from_(&from), to_(&to), images_(std::move(generator_images)) {
  if (images_.size() != from.moduli().size())
    throw std::invalid_argument("GroupHom: need one generator image per cyclic factor");
  for (size_t i = 0; i < images_.size(); ++i) {
    to.check(images_[i]);
    // m_i copies of the image must vanish, else no homomorphism exists.
    Colour acc = to.identity();
    for (int k = 0; k < from.moduli()[i]; ++k) acc = to.op(acc, images_[i]);
    if (!to.is_identity(acc))
      throw std::invalid_argument("GroupHom: generator image order does not divide factor order");
  }
}

Colour GroupHom::apply(const Colour& c) const {
  from_->check(c);
  Colour r = to_->identity();
  for (size_t i = 0; i < images_.size(); ++i)
    for (int k = 0; k < c[i]; ++k) r = to_->op(r, images_[i]);
  return r;
}

}  // namespace gperm
