#pragma once

// Arithmetic in Q[x]/(f) for squarefree, possibly reducible f.
//
// When f is reducible the quotient is a product of fields and some nonzero
// elements are zero divisors. Inverting one exposes a factorization of f
// (a SplitEvent); callers redo their computation in each factor, in the
// style of dynamic evaluation (D5).

#include "metabel/poly.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

namespace metabel {

class NFElement;

class NumberField {
 public:
  /// Throws std::invalid_argument unless modulus is monic, squarefree and
  /// of degree >= 1.
  explicit NumberField(Poly modulus);

  const Poly& modulus() const { return *modulus_; }
  int degree() const { return modulus_->degree(); }

  NFElement zero() const;
  NFElement one() const;
  /// Residue class of x.
  NFElement generator() const;
  NFElement element(const Poly& rep) const;
  NFElement element(const Rational& c) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
  }

 private:
  std::shared_ptr<const Poly> modulus_;
};

class NFElement {
 public:
  NFElement(NumberField field, const Poly& rep);

  const NumberField& field() const { return field_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }

  NFElement& operator+=(const NFElement& rhs);
  NFElement& operator-=(const NFElement& rhs);
  NFElement& operator*=(const NFElement& rhs);
  NFElement& operator*=(const Rational& c);

  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator*(NFElement a, const Rational& c) { return a *= c; }
  friend NFElement operator*(const Rational& c, NFElement a) { return a *= c; }
  friend NFElement operator-(NFElement a);
  friend bool operator==(const NFElement& a, const NFElement& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }

  /// Same residue taken modulo a factor of this element's modulus.
  NFElement reduced_to(const NumberField& branch) const;

 private:
  void require_same_field(const NFElement& other) const;

  NumberField field_;
  Poly rep_;
};

inline bool is_zero(const NFElement& a) { return a.is_zero(); }

/// The modulus factored as first * second, both monic, coprime, nonconstant.
struct SplitEvent {
  Poly parent;
  Poly first;
  Poly second;
};

using InverseOrSplit = std::variant<NFElement, SplitEvent>;

/// Inverse when rep is coprime to the modulus, otherwise the split of the
/// modulus by gcd(rep, modulus). Throws std::domain_error on zero.
InverseOrSplit nf_invert(const NFElement& a);

/// Raised inside D5-aware computations when a zero divisor is hit.
class SplitRequired : public std::runtime_error {
 public:
  explicit SplitRequired(SplitEvent event)
      : std::runtime_error("modulus splits"), event_(std::move(event)) {}
  const SplitEvent& event() const { return event_; }

 private:
  SplitEvent event_;
};

/// nf_invert, throwing SplitRequired instead of returning a SplitEvent.
NFElement invert_or_split(const NFElement& a);

/// a^k for any integer k; negative k requires a to be a unit.
NFElement pow(const NFElement& a, long k);

/// Polynomial string in the variable `a`, lowest degree first.
std::string to_string(const NFElement& a);

}  // namespace metabel
