#pragma once

// Reference computations for tests. Nothing here calls the library's
// elimination, Bareiss or Smith-form code: determinants go through plain
// rational Gaussian elimination and Lagrange interpolation, invariant factors
// through gcds of all minors.

#include "metabel/poly.hpp"
#include "metabel/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using metabel::Matrix;
using metabel::Poly;
using metabel::Rational;

// Canonical n/d; mpq_class(n, d) alone does not reduce.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

inline std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<Rational>> evaluate(const Matrix<Poly>& m, const Rational& t0) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).eval(t0);
  return out;
}

// Polynomial through (xs[i], ys[i]).
inline Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      const Rational inv = 1 / Rational(xs[i] - xs[j]);
      basis *= Poly({Rational(-xs[j] * inv), inv});
    }
    out += basis;
  }
  return out;
}

// Determinant of a matrix with entries of degree <= max_entry_degree.
inline Poly poly_det(const Matrix<Poly>& m, int max_entry_degree = 1) {
  const int bound = static_cast<int>(m.rows()) * max_entry_degree;
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    xs.emplace_back(k, 1);
    ys.push_back(rational_det(evaluate(m, xs.back())));
  }
  return interpolate(xs, ys);
}

inline Matrix<Poly> submatrix(const Matrix<Poly>& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
  Matrix<Poly> out(rows.size(), cols.size(), Poly());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// D_k = gcd of all k x k minors; d_k = D_k / D_{k-1}. Monic, square input
// with nonzero determinant and entries of degree <= 1.
inline std::vector<Poly> determinantal_invariants(const Matrix<Poly>& m) {
  const std::size_t n = m.rows();
  std::vector<Poly> divisors{Poly::constant(Rational(1))};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly g;
    const auto sets = subsets(n, k);
    for (const auto& rows : sets) {
      for (const auto& cols : sets) {
        g = metabel::gcd(g, poly_det(submatrix(m, rows, cols)));
        if (g.is_one()) break;
      }
      if (g.is_one()) break;
    }
    divisors.push_back(g);
  }
  std::vector<Poly> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(metabel::exact_quotient(divisors[k], divisors[k - 1]));
  return out;
}

// Pieces of squarefree f on which d has a uniform root multiplicity.
inline std::vector<std::pair<Poly, int>> split_by_multiplicity(const Poly& f, Poly d) {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f.monic();
  int e = 0;
  while (!rest.is_constant()) {
    const Poly g = metabel::gcd(rest, d);
    const Poly h = metabel::exact_quotient(rest, g).monic();
    if (!h.is_constant()) out.emplace_back(h, e);
    rest = g;
    if (!g.is_constant()) d = metabel::exact_quotient(d, g);
    ++e;
  }
  return out;
}

// Exponent multiset -> product of all roots carrying it, from invariant
// factors, over the given squarefree factors.
inline std::map<std::vector<int>, Poly> decomposition(const std::vector<Poly>& invariants,
                                                      const std::vector<Poly>& factors) {
  std::vector<std::pair<Poly, std::vector<int>>> pieces;
  for (const auto& f : factors) pieces.push_back({f.monic(), {}});
  for (const auto& d : invariants) {
    std::vector<std::pair<Poly, std::vector<int>>> next;
    for (const auto& [p, exps] : pieces)
      for (const auto& [piece, e] : split_by_multiplicity(p, d)) {
        auto with = exps;
        if (e > 0) with.push_back(e);
        next.push_back({piece, std::move(with)});
      }
    pieces = std::move(next);
  }
  std::map<std::vector<int>, Poly> out;
  for (auto& [p, exps] : pieces) {
    if (exps.empty()) continue;
    std::sort(exps.begin(), exps.end());
    auto it = out.find(exps);
    if (it == out.end())
      out.emplace(exps, p);
    else
      it->second *= p;
  }
  return out;
}

inline Matrix<Rational> matrix_power(const Matrix<Rational>& m, long k) {
  // k >= 0 by repeated multiplication; k < 0 through the inverse of J.
  Matrix<Rational> base = m;
  if (k < 0) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
      a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (sgn(a[p][c]) == 0) ++p;
      std::swap(a[p], a[c]);
      const Rational inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < n; ++r)
        if (r != c && sgn(a[r][c]) != 0) {
          const Rational f = a[r][c];
          for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) base(i, j) = a[i][n + j];
    k = -k;
  }
  Matrix<Rational> out = metabel::identity(m.rows(), Rational(0), Rational(1));
  for (long i = 0; i < k; ++i) out = metabel::multiply(out, base, Rational(0));
  return out;
}

using RawMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t intersection_det(const RawMatrix& s) {
  std::vector<std::vector<Rational>> a(s.size(), std::vector<Rational>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) a[i][j] = Rational(static_cast<long>(s[i][j] - s[j][i]));
  const Rational d = rational_det(a);
  return d.get_num().get_si();
}

// Seifert matrices with entries in [-2, 2] and det(S - S^T) = 1.
class SeifertGenerator {
 public:
  explicit SeifertGenerator(std::uint64_t seed) : rng_(seed) {}

  // S = Sym + U, U block diagonal with blocks [[0, 1], [0, 0]], then a
  // random signed permutation conjugation.
  RawMatrix constructed(std::size_t size) {
    std::uniform_int_distribution<int> entry(-2, 2), capped(-2, 1);
    RawMatrix s(size, std::vector<std::int64_t>(size, 0));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) {
        const bool upper_pair = (i % 2 == 0) && j == i + 1;
        const int v = upper_pair ? capped(rng_) : entry(rng_);
        s[i][j] = s[j][i] = v;
      }
    for (std::size_t i = 0; i + 1 < size; i += 2) s[i][i + 1] += 1;
    return conjugate(s);
  }

  // Uniform entries, rejected until the intersection form is unimodular.
  RawMatrix rejection(std::size_t size) {
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
      RawMatrix s(size, std::vector<std::int64_t>(size));
      for (auto& row : s)
        for (auto& x : row) x = entry(rng_);
      if (intersection_det(s) == 1) return s;
    }
  }

  static RawMatrix block_sum(const RawMatrix& a, const RawMatrix& b) {
    const std::size_t n = a.size() + b.size();
    RawMatrix s(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) s[i][j] = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) s[a.size() + i][a.size() + j] = b[i][j];
    return s;
  }

  RawMatrix conjugate(const RawMatrix& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng_);
    std::vector<int> sign(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto& x : sign) x = coin(rng_) ? 1 : -1;
    RawMatrix out(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] = sign[i] * sign[j] * s[perm[i]][perm[j]];
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// A mix of constructed, rejection-sampled and block-summed matrices of size
// 2, 4 or 6, including repeated blocks so that multiplicities above 1 occur.
inline std::vector<RawMatrix> random_seifert_family(std::uint64_t seed, std::size_t count) {
  SeifertGenerator gen(seed);
  const RawMatrix trefoil{{-1, 1}, {0, -1}}, figure_eight{{1, 1}, {0, -1}};
  std::vector<RawMatrix> out;
  std::uniform_int_distribution<int> size_pick(1, 3);
  for (std::size_t i = 0; out.size() < count; ++i) {
    const std::size_t size = 2 * static_cast<std::size_t>(size_pick(gen.rng()));
    switch (i % 5) {
      case 0:
      case 1:
        out.push_back(gen.constructed(size));
        break;
      case 2:
        out.push_back(gen.rejection(std::min<std::size_t>(size, 4)));
        break;
      case 3: {
        const RawMatrix a = gen.constructed(2);
        out.push_back(gen.conjugate(SeifertGenerator::block_sum(a, a)));
        break;
      }
      default: {
        const RawMatrix& k = (i / 5) % 2 ? trefoil : figure_eight;
        RawMatrix s = SeifertGenerator::block_sum(k, k);
        if (size == 6) s = SeifertGenerator::block_sum(s, (i / 10) % 2 ? k : gen.constructed(2));
        out.push_back(gen.conjugate(s));
        break;
      }
    }
  }
  return out;
}

}  // namespace oracle
