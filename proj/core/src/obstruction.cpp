#include "metabel/obstruction.hpp"

#include "metabel/errors.hpp"

#include <algorithm>

namespace metabel {

Integer binomial(long k, long p) {
  if (p < 0) throw std::invalid_argument("binomial: negative lower index");
  Integer num(1), den(1);
  for (long i = 0; i < p; ++i) {
    num *= k - i;
    den *= i + 1;
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Matrix<Rational> jordan_power(std::size_t m, long k) {
  if (m == 0) throw std::invalid_argument("jordan_power: size must be >= 1");
  Matrix<Rational> out(m, m, Rational(0));
  for (std::size_t p = 0; p < m; ++p) {
    const Rational c(binomial(k, static_cast<long>(p)));
    for (std::size_t i = 0; i + p < m; ++i) out(i, i + p) = c;
  }
  return out;
}

Matrix<NFElement> to_field(const Matrix<Rational>& m, const NumberField& field) {
  return m.map([&](const Rational& q) { return field.element(q); });
}

ObstructionSystem build_obstruction_system(const SeifertData& s, const Poly& delta, const NumberField& field, int n) {
  if (n < 2) throw std::invalid_argument("obstruction system needs level n >= 2");
  if (!divides(field.modulus(), delta))
    throw ValidationError(ValidationFailure::not_a_root_class,
                          to_string(field.modulus()) + " does not divide the Alexander polynomial " + to_string(delta));
  const std::size_t size = s.size();
  const std::size_t width = static_cast<std::size_t>(n - 1);
  const Matrix<Rational> jordan = jordan_power(width, 1);
  const NFElement alpha = field.generator();

  ObstructionSystem sys{field, n, size, Matrix<NFElement>(size * width, size * width, field.zero())};
  // Equation (r, c): sum_{i,l} S[i][r] J[l][c] Phi[i][l] - alpha sum_i S[r][i] Phi[i][c] = 0.
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < width; ++c) {
      const std::size_t eq = r * width + c;
      for (std::size_t i = 0; i < size; ++i) {
        const Rational st(static_cast<long>(s(i, r)));
        if (sgn(st) != 0)
          for (std::size_t l = 0; l < width; ++l)
            if (sgn(jordan(l, c)) != 0) sys.coefficients(eq, sys.index(i, l)) += field.element(Rational(st * jordan(l, c)));
        const long sv = static_cast<long>(s(r, i));
        if (sv != 0) sys.coefficients(eq, sys.index(i, c)) -= alpha * Rational(sv);
      }
    }
  return sys;
}

ObstructionSystem build_obstruction_system(const SeifertData& s, const NumberField& field, int n) {
  return build_obstruction_system(s, alexander_polynomial(alexander_matrix(s)).delta, field, n);
}

std::vector<Vector<NFElement>> solution_basis(const ObstructionSystem& sys) {
  return nullspace_or_split(sys.field, sys.coefficients);
}

std::vector<Branch<std::size_t>> solution_dim(const ObstructionSystem& sys) {
  return run_branches(sys.field, [&](const NumberField& branch) {
    return nullspace_or_split(branch, reduce_to(sys.coefficients, branch)).size();
  });
}

Matrix<NFElement> solution_matrix(const ObstructionSystem& sys, const Vector<NFElement>& solution) {
  if (solution.size() != sys.unknowns()) throw std::invalid_argument("solution_matrix: wrong length");
  Matrix<NFElement> phi(sys.seifert_size, sys.width(), sys.field.zero());
  for (std::size_t i = 0; i < sys.seifert_size; ++i)
    for (std::size_t j = 0; j < sys.width(); ++j) phi(i, j) = solution[sys.index(i, j)];
  return phi;
}

std::size_t phi1_projection_dim(const ObstructionSystem& sys, const std::vector<Vector<NFElement>>& basis) {
  if (basis.empty()) return 0;
  Matrix<NFElement> proj(basis.size(), sys.seifert_size, sys.field.zero());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < sys.seifert_size; ++i) proj(b, i) = basis[b][sys.index(i, 0)];
  return rank_or_split(sys.field, std::move(proj));
}

std::vector<int> decompose_from_filtration(const std::vector<std::size_t>& projection_dims, int multiplicity) {
  if (projection_dims.empty() || projection_dims.back() != 0)
    throw InternalError("filtration did not terminate: cbar never reached 0");
  for (std::size_t i = 0; i + 1 < projection_dims.size(); ++i)
    if (projection_dims[i] < projection_dims[i + 1])
      throw InternalError("filtration is not weakly decreasing at level " + std::to_string(i + 2));

  // projection_dims[i] is cbar_{i+2}; exponent e counts cbar_{e+1} - cbar_{e+2}.
  std::vector<int> exponents;
  for (std::size_t i = 0; i + 1 < projection_dims.size(); ++i) {
    const int e = static_cast<int>(i) + 1;
    exponents.insert(exponents.end(), projection_dims[i] - projection_dims[i + 1], e);
  }
  int sum = 0;
  for (int e : exponents) sum += e;
  if (sum != multiplicity)
    throw InternalError("filtration exponents " + format_exponents(exponents) + " sum to " + std::to_string(sum) +
                        ", expected multiplicity " + std::to_string(multiplicity));
  if (exponents.size() != projection_dims.front())
    throw InternalError("number of summands differs from cbar_2");
  return exponents;
}

ClassFiltration filtrate_root_class(const SeifertData& s, const Poly& delta, const RootClass& rc,
                                    const FiltrationOptions& options) {
  const int cap = options.max_level.value_or(rc.multiplicity + 2);
  ClassFiltration out;
  out.factor = rc.factor;
  out.multiplicity = rc.multiplicity;

  auto branches = run_branches(
      NumberField(rc.factor),
      [&](const NumberField& field) {
        std::vector<LevelRecord> levels;
        for (int n = 2; n <= cap; ++n) {
          const ObstructionSystem sys = build_obstruction_system(s, delta, field, n);
          const auto basis = solution_basis(sys);
          const std::size_t cbar = phi1_projection_dim(sys, basis);
          levels.push_back({n, basis.size(), cbar});
          if (cbar == 0) break;
        }
        return levels;
      },
      &out.splits);

  for (auto& b : branches) {
    if (b.value.empty() || b.value.back().projection_dim != 0)
      throw InternalError("filtration for " + to_string(b.field.modulus()) + " exceeded level cap " +
                          std::to_string(cap) + " without cbar reaching 0");
    std::vector<std::size_t> cbar;
    for (const auto& rec : b.value) cbar.push_back(rec.projection_dim);
    std::vector<int> exponents = decompose_from_filtration(cbar, rc.multiplicity);
    out.branches.push_back({b.field.modulus(), std::move(b.value), std::move(exponents)});
  }
  return out;
}

FiltrationResult run_filtration(const SeifertData& s, const FiltrationOptions& options) {
  FiltrationResult out;
  out.alexander = alexander_polynomial(alexander_matrix(s));
  out.root_classes = root_classes(out.alexander);
  out.decomposition.provenance = Provenance::filtration;
  for (const auto& rc : out.root_classes) {
    ClassFiltration cf = filtrate_root_class(s, out.alexander.delta, rc, options);
    for (const auto& b : cf.branches) out.decomposition.classes.push_back({b.modulus, b.exponents});
    out.report.classes.push_back(std::move(cf));
  }
  return out;
}

// --- cyclic modules -----------------------------------------------------------

Matrix<NFElement> cyclic_equivariance_system(const NumberField& field, int q, int n) {
  if (q < 1 || n < 2) throw std::invalid_argument("cyclic system needs q >= 1 and n >= 2");
  const std::size_t width = static_cast<std::size_t>(n - 1);
  const std::size_t count = static_cast<std::size_t>(q);
  const Matrix<Rational> jinv = jordan_power(width, -1);
  const NFElement alpha = field.generator();
  auto at = [&](std::size_t j, std::size_t c) { return j * width + c; };

  // Row vector equation, component c, for basis vector e_j:
  //   Phi(e_{j+1})_c + alpha Phi(e_j)_c - alpha sum_l Phi(e_j)_l Jinv[l][c] = 0,
  // where the first term is absent for j = q - 1 since t e_{q-1} = alpha e_{q-1}.
  Matrix<NFElement> sys(count * width, count * width, field.zero());
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t c = 0; c < width; ++c) {
      const std::size_t eq = at(j, c);
      if (j + 1 < count) sys(eq, at(j + 1, c)) += field.one();
      sys(eq, at(j, c)) += alpha;
      for (std::size_t l = 0; l < width; ++l)
        if (sgn(jinv(l, c)) != 0) sys(eq, at(j, l)) -= alpha * jinv(l, c);
    }
  return sys;
}

std::vector<Vector<NFElement>> cyclic_phi(const NumberField& field, int q, int n) {
  if (q < 1 || n < 2 || n > q + 1) throw std::invalid_argument("cyclic_phi needs q >= 1 and 2 <= n <= q + 1");
  const std::size_t width = static_cast<std::size_t>(n - 1);
  const NFElement alpha = field.generator();
  Matrix<NFElement> step = to_field(jordan_power(width, -1), field);
  for (std::size_t i = 0; i < width; ++i) step(i, i) -= field.one();
  for (std::size_t i = 0; i < width; ++i)
    for (std::size_t j = 0; j < width; ++j) step(i, j) *= alpha;

  std::vector<Vector<NFElement>> out;
  Vector<NFElement> current(width, field.zero());
  current[0] = field.one();
  for (int j = 0; j < q; ++j) {
    out.push_back(current);
    Vector<NFElement> next(width, field.zero());
    for (std::size_t c = 0; c < width; ++c)
      for (std::size_t l = 0; l < width; ++l) next[c] += current[l] * step(l, c);
    current = std::move(next);
  }
  return out;
}

std::size_t cyclic_phi1_rank(const NumberField& field, const std::vector<Vector<NFElement>>& basis, int q, int n) {
  if (basis.empty()) return 0;
  const std::size_t width = static_cast<std::size_t>(n - 1);
  Matrix<NFElement> proj(basis.size(), static_cast<std::size_t>(q), field.zero());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t j = 0; j < static_cast<std::size_t>(q); ++j) proj(b, j) = basis[b][j * width];
  return rank_or_split(field, std::move(proj));
}

}  // namespace metabel
