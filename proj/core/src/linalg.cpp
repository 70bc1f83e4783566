#include "metabel/linalg.hpp"

namespace metabel {

namespace {

template <class T, class ExactDivide>
T bareiss(Matrix<T> m, const T& one, ExactDivide&& divide) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  bool negate = false;
  T previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return one - one;
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = divide(num, previous);
      }
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

void require_field(const NumberField& field, const Matrix<NFElement>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i))
      if (!(x.field() == field)) throw std::invalid_argument("matrix entries have mixed moduli");
}

}  // namespace

std::size_t rank(Matrix<Rational> m) {
  return rref_in_place(m, [](const Rational& x) { return Rational(1 / x); }).size();
}

std::vector<Vector<Rational>> nullspace(Matrix<Rational> m) {
  auto pivots = rref_in_place(m, [](const Rational& x) { return Rational(1 / x); });
  return kernel_from_rref(m, pivots, Rational(0), Rational(1));
}

Rational determinant(Matrix<Rational> m) {
  return bareiss(std::move(m), Rational(1), [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

Integer bareiss_determinant(Matrix<Integer> m) {
  return bareiss(std::move(m), Integer(1), [](const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  });
}

Poly bareiss_determinant(Matrix<Poly> m) {
  return bareiss(std::move(m), Poly::constant(1), [](const Poly& a, const Poly& b) { return exact_quotient(a, b); });
}

Matrix<NFElement> reduce_to(const Matrix<NFElement>& m, const NumberField& branch) {
  return m.map([&](const NFElement& x) { return x.reduced_to(branch); });
}

Vector<NFElement> reduce_to(const Vector<NFElement>& v, const NumberField& branch) {
  Vector<NFElement> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.reduced_to(branch));
  return out;
}

std::vector<Vector<NFElement>> nullspace_or_split(const NumberField& field, Matrix<NFElement> m) {
  require_field(field, m);
  auto pivots = rref_in_place(m, [](const NFElement& x) { return invert_or_split(x); });
  return kernel_from_rref(m, pivots, field.zero(), field.one());
}

std::size_t rank_or_split(const NumberField& field, Matrix<NFElement> m) {
  require_field(field, m);
  return rref_in_place(m, [](const NFElement& x) { return invert_or_split(x); }).size();
}

NullspaceResult nf_nullspace(const NumberField& field, const Matrix<NFElement>& m) {
  require_field(field, m);
  NullspaceResult out;
  auto branches = run_branches(
      field,
      [&](const NumberField& branch) { return nullspace_or_split(branch, reduce_to(m, branch)); },
      &out.splits);
  for (auto& b : branches) out.branches.push_back({b.field, std::move(b.value)});
  return out;
}

}  // namespace metabel
