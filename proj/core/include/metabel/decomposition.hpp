#pragma once

// Alexander module decomposition: for each root class f, the exponents q_i
// of its cyclic summands Lambda/(t - alpha)^{q_i}, for every root alpha of f.

#include "metabel/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace metabel {

struct ExponentClass {
  Poly factor;                 // monic squarefree
  std::vector<int> exponents;  // ascending, all >= 1
};

enum class Provenance { filtration, oracle };

const char* to_string(Provenance p);

struct Decomposition {
  Provenance provenance = Provenance::filtration;
  std::vector<ExponentClass> classes;

  /// Every root with a given exponent multiset, collected into one factor.
  /// Independent of how the root classes happen to be split, so two correct
  /// decompositions have equal canonical forms.
  std::map<std::vector<int>, Poly> canonical() const;
};

/// Same exponent multiset at every root.
bool equivalent(const Decomposition& a, const Decomposition& b);

/// "{2, 2}".
std::string format_exponents(const std::vector<int>& exponents);

/// Summands over C, one per root of the factor and exponent, e.g.
/// "Lambda/(t - a)^2". Reciprocal quadratic factors label their roots a and
/// a^-1; other factors label roots a_1, ..., a_d.
std::vector<std::string> complex_summands(const ExponentClass& c);

}  // namespace metabel
