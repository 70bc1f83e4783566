#include "metabel/number_field.hpp"

#include "metabel/squarefree.hpp"

namespace metabel {

NumberField::NumberField(Poly modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("number field modulus must have degree >= 1");
  if (modulus.leading() != 1) throw std::invalid_argument("number field modulus must be monic");
  if (!is_squarefree(modulus)) throw std::invalid_argument("number field modulus must be squarefree");
  modulus_ = std::make_shared<const Poly>(std::move(modulus));
}

NFElement NumberField::zero() const { return NFElement(*this, Poly()); }
NFElement NumberField::one() const { return NFElement(*this, Poly::constant(1)); }
NFElement NumberField::generator() const { return NFElement(*this, Poly::variable()); }
NFElement NumberField::element(const Poly& rep) const { return NFElement(*this, rep); }
NFElement NumberField::element(const Rational& c) const { return NFElement(*this, Poly::constant(c)); }

NFElement::NFElement(NumberField field, const Poly& rep)
    : field_(std::move(field)),
      rep_(rep.degree() >= field_.degree() ? rep % field_.modulus() : rep) {}

void NFElement::require_same_field(const NFElement& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("number field elements have mixed moduli");
}

NFElement& NFElement::operator+=(const NFElement& rhs) {
  require_same_field(rhs);
  rep_ += rhs.rep_;
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& rhs) {
  require_same_field(rhs);
  rep_ -= rhs.rep_;
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& rhs) {
  require_same_field(rhs);
  if (rep_.is_zero()) return *this;
  if (rhs.rep_.is_zero()) {
    rep_ = Poly();
    return *this;
  }
  rep_ = (rep_ * rhs.rep_) % field_.modulus();
  return *this;
}

NFElement& NFElement::operator*=(const Rational& c) {
  rep_ *= c;
  return *this;
}

NFElement operator-(NFElement a) {
  a.rep_ = -a.rep_;
  return a;
}

NFElement NFElement::reduced_to(const NumberField& branch) const {
  if (!divides(branch.modulus(), field_.modulus()))
    throw std::invalid_argument("reduced_to: branch modulus does not divide the field modulus");
  return NFElement(branch, rep_);
}

InverseOrSplit nf_invert(const NFElement& a) {
  if (a.is_zero()) throw std::domain_error("inversion of zero in number field");
  const Poly& f = a.field().modulus();
  Bezout b = extended_gcd(a.rep(), f);
  if (b.gcd.is_one()) return a.field().element(b.s);
  return SplitEvent{f, b.gcd, exact_quotient(f, b.gcd)};
}

NFElement invert_or_split(const NFElement& a) {
  InverseOrSplit r = nf_invert(a);
  if (auto* split = std::get_if<SplitEvent>(&r)) throw SplitRequired(std::move(*split));
  return std::get<NFElement>(std::move(r));
}

NFElement pow(const NFElement& a, long k) {
  NFElement base = k < 0 ? invert_or_split(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  NFElement result = a.field().one();
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1UL;
    if (e != 0) base *= base;
  }
  return result;
}

std::string to_string(const NFElement& a) { return to_string(a.rep(), "a"); }

}  // namespace metabel
