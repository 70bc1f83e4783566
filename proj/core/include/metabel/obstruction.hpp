#pragma once

// Metabelian obstruction filtration.
//
// For a root class f of the Alexander polynomial and K = Q[x]/(f) with
// alpha the class of x, a level-n solution is a 2g x (n-1) matrix Phi over K
// (row i holds the values phi_1..phi_{n-1} on the generator e_i of the
// Alexander module) with
//
//     S^T Phi J_{n-1} = alpha S Phi,
//
// the homomorphism condition on Lambda^{2g} / Lambda^{2g} A(t) multiplied on
// the right by the Jordan block J_{n-1}. The rank cbar_n of the phi_1
// columns of all solutions counts the summands Lambda/(t - alpha)^q with
// q >= n - 1, so successive differences of cbar recover the exponents.

#include "metabel/decomposition.hpp"
#include "metabel/linalg.hpp"
#include "metabel/number_field.hpp"
#include "metabel/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace metabel {

/// Generalized binomial k(k-1)...(k-p+1)/p! for any integer k, p >= 0.
Integer binomial(long k, long p);

/// J_m^k: entry (i, i+p) = binomial(k, p), zero below the diagonal.
Matrix<Rational> jordan_power(std::size_t m, long k);

/// Rational matrix embedded entrywise into K.
Matrix<NFElement> to_field(const Matrix<Rational>& m, const NumberField& field);

struct ObstructionSystem {
  NumberField field;
  int level;                  // n >= 2
  std::size_t seifert_size;   // 2g
  Matrix<NFElement> coefficients;

  std::size_t width() const { return static_cast<std::size_t>(level - 1); }
  std::size_t unknowns() const { return seifert_size * width(); }
  /// Position of phi_{j+1}(e_{i+1}) in the unknown vector.
  std::size_t index(std::size_t i, std::size_t j) const { return i * width() + j; }
};

/// Vectorized S^T Phi J_{n-1} - alpha S Phi = 0. Throws ValidationError
/// (not_a_root_class) unless the field modulus divides delta.
ObstructionSystem build_obstruction_system(const SeifertData& s, const Poly& delta, const NumberField& field, int n);
ObstructionSystem build_obstruction_system(const SeifertData& s, const NumberField& field, int n);

/// Kernel basis of the system; throws SplitRequired on a zero divisor.
std::vector<Vector<NFElement>> solution_basis(const ObstructionSystem& sys);

/// d_n per branch of the splitting of the field modulus.
std::vector<Branch<std::size_t>> solution_dim(const ObstructionSystem& sys);

/// Solution reshaped to the 2g x (n-1) matrix Phi.
Matrix<NFElement> solution_matrix(const ObstructionSystem& sys, const Vector<NFElement>& solution);

/// Rank of the phi_1 columns of a solution basis; throws SplitRequired.
std::size_t phi1_projection_dim(const ObstructionSystem& sys, const std::vector<Vector<NFElement>>& basis);

struct LevelRecord {
  int level;
  std::size_t solution_dim;    // d_n
  std::size_t projection_dim;  // cbar_n
  /// dim C_n; the coboundaries contribute the 1.
  std::size_t cocycle_dim() const { return 1 + projection_dim; }
};

struct BranchFiltration {
  Poly modulus;
  std::vector<LevelRecord> levels;
  std::vector<int> exponents;
};

struct ClassFiltration {
  Poly factor;
  int multiplicity = 0;
  std::vector<BranchFiltration> branches;
  std::vector<SplitEvent> splits;
};

struct FiltrationReport {
  std::vector<ClassFiltration> classes;
};

struct FiltrationOptions {
  /// Replaces the default cap n <= multiplicity + 2.
  std::optional<int> max_level;
};

/// Exponents from cbar_2, cbar_3, ...: the number of q_i equal to e is
/// cbar_{e+1} - cbar_{e+2}. Throws InternalError unless the sequence ends in
/// 0, is weakly decreasing, and the exponents sum to the multiplicity.
std::vector<int> decompose_from_filtration(const std::vector<std::size_t>& projection_dims, int multiplicity);

/// Levels n = 2, 3, ... for one root class until cbar_n = 0.
ClassFiltration filtrate_root_class(const SeifertData& s, const Poly& delta, const RootClass& rc,
                                    const FiltrationOptions& options = {});

struct FiltrationResult {
  NormalizedAlexanderPoly alexander;
  RootClassSet root_classes;
  FiltrationReport report;
  Decomposition decomposition;
};

FiltrationResult run_filtration(const SeifertData& s, const FiltrationOptions& options = {});

// --- single cyclic module Lambda/(t - alpha)^q --------------------------------

/// Equivariance Phi(t e_j) = alpha Phi(e_j) J_{n-1}^{-1} on the basis
/// e_j = [(t - alpha)^j], j < q, with unknowns Phi(e_0), ..., Phi(e_{q-1}).
/// Unknown (j, c) sits at index j*(n-1) + c.
Matrix<NFElement> cyclic_equivariance_system(const NumberField& field, int q, int n);

/// Phi(e_0) = (1, 0, ..., 0), Phi(e_j) = alpha^j Phi(e_0) (J^{-1} - I)^j.
/// Well defined only for 2 <= n <= q + 1, where (J^{-1} - I)^q = 0;
/// std::invalid_argument otherwise.
std::vector<Vector<NFElement>> cyclic_phi(const NumberField& field, int q, int n);

/// Rank of the phi_1 entries (index j*(n-1)) of a cyclic-system kernel basis.
std::size_t cyclic_phi1_rank(const NumberField& field, const std::vector<Vector<NFElement>>& basis, int q, int n);

}  // namespace metabel
