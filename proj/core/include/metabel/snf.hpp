#pragma once

// Smith normal form of the Alexander presentation over Q[t]: the
// independent ground truth for the module decomposition.

#include "metabel/decomposition.hpp"
#include "metabel/matrix.hpp"
#include "metabel/seifert.hpp"

#include <optional>
#include <vector>

namespace metabel {

/// Monic diagonal d_1 | d_2 | ... | d_r of the Smith form.
struct InvariantFactors {
  std::vector<Poly> factors;
  /// Set when the form was computed with transforms and U*A*W = D held.
  bool verified = false;
};

struct SmithForm {
  InvariantFactors invariants;
  /// Unimodular transforms with left * A * right = diag(invariants), kept
  /// only when requested.
  std::optional<Matrix<Poly>> left;
  std::optional<Matrix<Poly>> right;
};

/// Row and column operations over Q[t]. With verify = true the transforms
/// are tracked and U*A*W = D is checked exactly (InternalError on failure).
SmithForm smith_normal_form(const Matrix<Poly>& a, bool verify = false);
InvariantFactors smith_normal_form(const AlexanderPresentation& a, bool verify = false);

/// For each d_i the largest e with f^e | d_i; zeros dropped, ascending.
std::vector<int> local_exponents(const InvariantFactors& inv, const Poly& f);

/// Splits a squarefree f into pieces on which every d_i has a uniform
/// multiplicity at all roots. Pieces are monic, pairwise coprime, and
/// multiply to f.
std::vector<Poly> refine_by_invariants(const InvariantFactors& inv, const Poly& f);

/// Decomposition read directly from the invariant factors.
Decomposition oracle_decomposition(const InvariantFactors& inv, const RootClassSet& classes);

}  // namespace metabel
