#pragma once

// Seifert matrices and the Alexander polynomial they determine.

#include "metabel/matrix.hpp"
#include "metabel/poly.hpp"
#include "metabel/squarefree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace metabel {

using IntMatrix = Matrix<std::int64_t>;

/// A validated Seifert matrix: square, even size 2g, det(S - S^T) = 1.
class SeifertData {
 public:
  const std::string& name() const { return name_; }
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.rows(); }
  std::size_t genus() const { return matrix_.rows() / 2; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

 private:
  friend SeifertData validate_seifert(std::string name, const std::vector<std::vector<std::int64_t>>& raw);
  SeifertData(std::string name, IntMatrix m) : name_(std::move(name)), matrix_(std::move(m)) {}

  std::string name_;
  IntMatrix matrix_;
};

/// Throws ValidationError (not_square, odd_size, not_unimodular).
SeifertData validate_seifert(std::string name, const std::vector<std::vector<std::int64_t>>& raw);

/// det(S - S^T) over Z.
Integer intersection_determinant(const IntMatrix& s);

/// A(t) = S^T - t S, entry (i, j) = S[j][i] - t S[i][j].
struct AlexanderPresentation {
  Matrix<Poly> matrix;
};

AlexanderPresentation alexander_matrix(const SeifertData& s);

/// det A(t) = sign * t^t_power * delta, delta(0) != 0 and leading coefficient > 0.
struct NormalizedAlexanderPoly {
  Poly delta;
  int sign = 1;
  int t_power = 0;
};

/// Fraction-free determinant of A(t), normalized. Throws ValidationError
/// (degenerate_alexander) when the determinant vanishes or delta(1) != +-1
/// or the symmetry t^deg delta(1/t) = +-delta(t) fails.
NormalizedAlexanderPoly alexander_polynomial(const AlexanderPresentation& a);

/// Splits det = sign * t^k * delta per the normalization convention.
NormalizedAlexanderPoly normalize_alexander(const Poly& det);

/// t^deg(p) p(1/t).
Poly reciprocal(const Poly& p);

struct RootClass {
  Poly factor;  // monic squarefree, coprime to t and t - 1
  int multiplicity;
};

using RootClassSet = std::vector<RootClass>;

/// Squarefree factors of delta with multiplicities.
RootClassSet root_classes(const NormalizedAlexanderPoly& d);

}  // namespace metabel
