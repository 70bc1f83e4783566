#pragma once

// Exact rank, nullspace and determinant over Q, Q[t] and Q[x]/(f).

#include "metabel/matrix.hpp"
#include "metabel/number_field.hpp"
#include "metabel/poly.hpp"

#include <vector>

namespace metabel {

template <class T>
using Vector = std::vector<T>;

/// Reduced row echelon form in place. Pivots are the lowest-index nonzero
/// entry of each column; `invert` supplies multiplicative inverses and may
/// throw (SplitRequired for number fields). Returns the pivot columns.
template <class T, class Invert>
std::vector<std::size_t> rref_in_place(Matrix<T>& m, Invert&& invert) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const T inv = invert(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const T factor = m(i, col);
      if (is_zero(factor)) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Kernel basis read off an RREF: one vector per free column, with a 1 in
/// that column.
template <class T>
std::vector<Vector<T>> kernel_from_rref(const Matrix<T>& r, const std::vector<std::size_t>& pivots,
                                        const T& zero, const T& one) {
  std::vector<bool> is_pivot(r.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t free = 0; free < r.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<T> v(r.cols(), zero);
    v[free] = one;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- Q ---------------------------------------------------------------------

std::size_t rank(Matrix<Rational> m);
std::vector<Vector<Rational>> nullspace(Matrix<Rational> m);
Rational determinant(Matrix<Rational> m);

// --- fraction-free determinants --------------------------------------------

/// Bareiss elimination over Z.
Integer bareiss_determinant(Matrix<Integer> m);
/// Bareiss elimination over Q[t]; every division is exact.
Poly bareiss_determinant(Matrix<Poly> m);

// --- Q[x]/(f) with dynamic splitting ----------------------------------------

/// Entrywise reduction to a branch whose modulus divides the original one.
Matrix<NFElement> reduce_to(const Matrix<NFElement>& m, const NumberField& branch);
Vector<NFElement> reduce_to(const Vector<NFElement>& v, const NumberField& branch);

/// Kernel basis over `field`; throws SplitRequired on a zero-divisor pivot
/// and std::invalid_argument if an entry lives in another field.
std::vector<Vector<NFElement>> nullspace_or_split(const NumberField& field, Matrix<NFElement> m);
std::size_t rank_or_split(const NumberField& field, Matrix<NFElement> m);

template <class R>
struct Branch {
  NumberField field;
  R value;
};

/// Runs `body(field)`; whenever it raises SplitRequired, reruns it on each
/// factor of the split modulus. Branches come out ordered by factor position
/// (first factor before second), which is deterministic for a given input.
template <class F>
auto run_branches(const NumberField& field, F&& body, std::vector<SplitEvent>* splits = nullptr)
    -> std::vector<Branch<decltype(body(field))>> {
  using R = decltype(body(field));
  std::vector<Branch<R>> out;
  std::vector<NumberField> pending{field};
  while (!pending.empty()) {
    NumberField current = pending.front();
    pending.erase(pending.begin());
    try {
      out.push_back({current, body(current)});
    } catch (const SplitRequired& split) {
      if (splits != nullptr) splits->push_back(split.event());
      pending.insert(pending.begin(), {NumberField(split.event().first), NumberField(split.event().second)});
    }
  }
  return out;
}

struct NullspaceBranch {
  NumberField field;
  std::vector<Vector<NFElement>> basis;
};

struct NullspaceResult {
  std::vector<NullspaceBranch> branches;
  std::vector<SplitEvent> splits;
};

/// Kernel of m over Q[x]/(f), one entry per branch of the final splitting.
NullspaceResult nf_nullspace(const NumberField& field, const Matrix<NFElement>& m);

}  // namespace metabel
