#include "metabel/snf.hpp"

#include "metabel/errors.hpp"

#include <algorithm>

namespace metabel {

namespace {

class SmithReducer {
 public:
  SmithReducer(const Matrix<Poly>& a, bool track)
      : m_(a), track_(track) {
    if (track_) {
      left_ = identity(a.rows(), Poly(), Poly::constant(1));
      right_ = identity(a.cols(), Poly(), Poly::constant(1));
    }
  }

  void run() {
    const std::size_t n = std::min(m_.rows(), m_.cols());
    for (std::size_t k = 0; k < n; ++k) {
      if (!place_pivot(k)) break;
      eliminate_around(k);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (m_(k, k).is_zero()) continue;
      const Rational inv = 1 / m_(k, k).leading();
      scale_row(k, inv);
    }
  }

  const Matrix<Poly>& diagonal() const { return m_; }
  const Matrix<Poly>& left() const { return left_; }
  const Matrix<Poly>& right() const { return right_; }

 private:
  // Moves a minimal-degree nonzero entry of the trailing block to (k, k).
  bool place_pivot(std::size_t k) {
    std::size_t bi = 0, bj = 0;
    int best = -1;
    for (std::size_t i = k; i < m_.rows(); ++i)
      for (std::size_t j = k; j < m_.cols(); ++j) {
        const int d = m_(i, j).degree();
        if (d >= 0 && (best < 0 || d < best)) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    if (best < 0) return false;
    swap_rows(k, bi);
    swap_cols(k, bj);
    return true;
  }

  void eliminate_around(std::size_t k) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < m_.rows(); ++i) {
        if (m_(i, k).is_zero()) continue;
        add_row(i, k, -divrem(m_(i, k), m_(k, k)).quotient);
        if (!m_(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < m_.cols(); ++j) {
        if (m_(k, j).is_zero()) continue;
        add_col(j, k, -divrem(m_(k, j), m_(k, k)).quotient);
        if (!m_(k, j).is_zero()) clean = false;
      }
      if (!clean) {
        place_pivot(k);
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      std::size_t bad_row = m_.rows();
      for (std::size_t i = k + 1; i < m_.rows() && bad_row == m_.rows(); ++i)
        for (std::size_t j = k + 1; j < m_.cols(); ++j)
          if (!divides(m_(k, k), m_(i, j))) {
            bad_row = i;
            break;
          }
      if (bad_row == m_.rows()) return;
      add_row(k, bad_row, Poly::constant(1));
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    m_.swap_rows(a, b);
    if (track_) left_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    m_.swap_cols(a, b);
    if (track_) right_.swap_cols(a, b);
  }
  // row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const Poly& c) {
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(dst, j) += c * m_(src, j);
    if (track_)
      for (std::size_t j = 0; j < left_.cols(); ++j) left_(dst, j) += c * left_(src, j);
  }
  // col[dst] += c * col[src]
  void add_col(std::size_t dst, std::size_t src, const Poly& c) {
    for (std::size_t i = 0; i < m_.rows(); ++i) m_(i, dst) += c * m_(i, src);
    if (track_)
      for (std::size_t i = 0; i < right_.rows(); ++i) right_(i, dst) += c * right_(i, src);
  }
  void scale_row(std::size_t r, const Rational& c) {
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(r, j) *= c;
    if (track_)
      for (std::size_t j = 0; j < left_.cols(); ++j) left_(r, j) *= c;
  }

  Matrix<Poly> m_;
  bool track_;
  Matrix<Poly> left_;
  Matrix<Poly> right_;
};

}  // namespace

SmithForm smith_normal_form(const Matrix<Poly>& a, bool verify) {
  SmithReducer reducer(a, verify);
  reducer.run();
  SmithForm out;
  const auto& d = reducer.diagonal();
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t k = 0; k < n; ++k) out.invariants.factors.push_back(d(k, k));

  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!divides(out.invariants.factors[k], out.invariants.factors[k + 1]))
      throw InternalError("Smith form: divisibility chain broken at index " + std::to_string(k));

  if (verify) {
    const Matrix<Poly> product = multiply(multiply(reducer.left(), a, Poly()), reducer.right(), Poly());
    if (!(product == d)) throw InternalError("Smith form: U*A*W != D");
    out.left = reducer.left();
    out.right = reducer.right();
    out.invariants.verified = true;
  }
  return out;
}

InvariantFactors smith_normal_form(const AlexanderPresentation& a, bool verify) {
  return smith_normal_form(a.matrix, verify).invariants;
}

std::vector<int> local_exponents(const InvariantFactors& inv, const Poly& f) {
  std::vector<int> out;
  for (const auto& d : inv.factors) {
    if (d.is_zero()) continue;
    const int e = multiplicity(f, d);
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> refine_by_invariants(const InvariantFactors& inv, const Poly& f) {
  std::vector<Poly> pieces{f.monic()};
  for (const auto& d : inv.factors) {
    if (d.is_zero()) continue;
    std::vector<Poly> next;
    for (const auto& piece : pieces) {
      // Peel off, for e = 0, 1, ..., the roots of `piece` where d has
      // multiplicity exactly e.
      Poly rest = piece;
      Poly r = d;
      while (!rest.is_constant()) {
        const Poly g = gcd(rest, r);
        const Poly exact_here = exact_quotient(rest, g);
        if (!exact_here.is_constant()) next.push_back(exact_here.monic());
        rest = g;
        if (!rest.is_constant()) r = exact_quotient(r, rest);
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

Decomposition oracle_decomposition(const InvariantFactors& inv, const RootClassSet& classes) {
  Decomposition out{Provenance::oracle, {}};
  for (const auto& rc : classes) {
    for (const auto& piece : refine_by_invariants(inv, rc.factor)) {
      std::vector<int> q = local_exponents(inv, piece);
      int sum = 0;
      for (int e : q) sum += e;
      if (sum != rc.multiplicity)
        throw InternalError("oracle: exponents of " + to_string(piece) + " sum to " + std::to_string(sum) +
                            ", expected multiplicity " + std::to_string(rc.multiplicity));
      out.classes.push_back({piece, std::move(q)});
    }
  }
  return out;
}

}  // namespace metabel
