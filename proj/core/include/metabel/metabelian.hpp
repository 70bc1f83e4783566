#pragma once

// Metabelian representations on the quotient (Alexander module) x| T.
//
// A level-n solution Phi of the obstruction system defines
//
//     rho(y, k) = [ alpha^k   Phi(y) J^k ]
//                 [ 0         J^k        ]
//
// where Phi is extended Lambda-linearly by Phi(p(t) e_i) = Phi(e_i) p(alpha J^{-1}),
// and J = J_{n-1}. Elements (y, k) multiply as (y1 + t^k1 y2, k1 + k2).

#include "metabel/linalg.hpp"
#include "metabel/number_field.hpp"
#include "metabel/seifert.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace metabel {

/// t^shift * body, with body(0) != 0 unless the polynomial is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Poly body, int shift = 0);

  const Poly& body() const { return body_; }
  int shift() const { return shift_; }
  bool is_zero() const { return body_.is_zero(); }

  LaurentPoly times_t_power(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.body_ == b.body_;
  }

 private:
  Poly body_;
  int shift_ = 0;
};

std::string to_string(const LaurentPoly& p);

using LaurentRow = std::vector<LaurentPoly>;

/// An element y t^k: y a row in Lambda^{2g} standing for its class in the
/// Alexander module, k the meridian exponent.
struct MetabelianElement {
  LaurentRow y;
  long k = 0;
};

std::string to_string(const MetabelianElement& g);

/// (y1 + t^k1 y2, k1 + k2). Throws std::invalid_argument on size mismatch.
MetabelianElement semidirect_mul(const MetabelianElement& a, const MetabelianElement& b);

/// sum_i coeffs[i] * (row i of A(t)), an element representing zero.
LaurentRow row_span_element(const SeifertData& s, const LaurentRow& coeffs);

class RepBuilder {
 public:
  /// Throws std::invalid_argument unless phi is 2g x (level-1) over `field`
  /// and satisfies S^T Phi J = alpha S Phi.
  RepBuilder(const SeifertData& s, NumberField field, int level, Matrix<NFElement> phi);

  /// Skips the obstruction check; for negative controls.
  static RepBuilder unchecked(const SeifertData& s, NumberField field, int level, Matrix<NFElement> phi);

  const NumberField& field() const { return field_; }
  int level() const { return level_; }
  std::size_t width() const { return static_cast<std::size_t>(level_ - 1); }
  const Matrix<NFElement>& phi() const { return phi_; }
  const SeifertData& seifert() const { return seifert_; }

  bool satisfies_obstruction() const;

  /// Phi(y) as a row of length n-1.
  Vector<NFElement> phi_extend(const LaurentRow& y) const;

  /// The n x n matrix rho(g).
  Matrix<NFElement> build_rep(const MetabelianElement& g) const;

 private:
  RepBuilder(const SeifertData& s, NumberField field, int level, Matrix<NFElement> phi, bool check);

  // v * p(alpha J^{-1}).
  Vector<NFElement> apply(const Vector<NFElement>& v, const LaurentPoly& p) const;

  SeifertData seifert_;
  NumberField field_;
  int level_;
  Matrix<NFElement> phi_;
  Matrix<NFElement> step_;          // alpha J^{-1}
  Matrix<NFElement> step_inverse_;  // alpha^{-1} J
};

struct HomomorphismCheck {
  bool passed = true;
  std::size_t trials = 0;
  /// First failing case, human readable.
  std::optional<std::string> witness;
};

/// Bounds for random elements: meridian exponents in [-max_k, max_k];
/// Laurent entries with shifts in [-2, 2], degree <= 2, coefficients in [-3, 3].
struct ElementSampler {
  long max_k = 5;
  int max_shift = 2;
  int max_degree = 2;
  long max_coeff = 3;

  LaurentPoly laurent(std::mt19937_64& rng) const;
  MetabelianElement element(std::size_t size, std::mt19937_64& rng) const;
};

/// rho(g1 g2) = rho(g1) rho(g2) for `trials` random pairs, plus
/// rho(y + r, k) = rho(y, k) for random row-span elements r.
HomomorphismCheck verify_homomorphism(const RepBuilder& b, std::size_t trials, std::uint64_t seed);

}  // namespace metabel
