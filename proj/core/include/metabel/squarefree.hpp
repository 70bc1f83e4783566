#pragma once

#include "metabel/poly.hpp"

#include <vector>

namespace metabel {

struct SquarefreeFactor {
  Poly factor;       // monic, squarefree, nonconstant
  int multiplicity;  // >= 1
};

/// p = content * prod factor^multiplicity, factors pairwise coprime with
/// distinct, strictly increasing multiplicities.
struct SquarefreeDecomposition {
  Rational content;
  std::vector<SquarefreeFactor> factors;
};

/// Yun's algorithm over Q. Throws std::domain_error for p = 0.
SquarefreeDecomposition yun_squarefree(const Poly& p);

/// gcd(p, p') == 1 and p nonconstant.
bool is_squarefree(const Poly& p);

}  // namespace metabel
