#include "metabel/seifert.hpp"

#include "metabel/errors.hpp"
#include "metabel/linalg.hpp"

namespace metabel {

Integer intersection_determinant(const IntMatrix& s) {
  const std::size_t n = s.rows();
  Matrix<Integer> skew(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) skew(i, j) = Integer(static_cast<long>(s(i, j) - s(j, i)));
  return bareiss_determinant(std::move(skew));
}

SeifertData validate_seifert(std::string name, const std::vector<std::vector<std::int64_t>>& raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n)
      throw ValidationError(ValidationFailure::not_square,
                            name + ": Seifert matrix is not square (row " + std::to_string(i) + " has " +
                                std::to_string(raw[i].size()) + " entries, expected " + std::to_string(n) + ")");
  }
  if (n % 2 != 0)
    throw ValidationError(ValidationFailure::odd_size,
                          name + ": Seifert matrix has odd size " + std::to_string(n));
  IntMatrix m = n == 0 ? IntMatrix() : IntMatrix::from_rows(raw);
  const Integer det = intersection_determinant(m);
  if (det != 1)
    throw ValidationError(ValidationFailure::not_unimodular,
                          name + ": det(S - S^T) = " + det.get_str() + ", expected 1");
  return SeifertData(std::move(name), std::move(m));
}

AlexanderPresentation alexander_matrix(const SeifertData& s) {
  const std::size_t n = s.size();
  Matrix<Poly> a(n, n, Poly());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = Poly(std::vector<Rational>{Rational(static_cast<long>(s(j, i))), Rational(static_cast<long>(-s(i, j)))});
  return {std::move(a)};
}

Poly reciprocal(const Poly& p) {
  std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly(std::move(c));
}

NormalizedAlexanderPoly normalize_alexander(const Poly& det) {
  if (det.is_zero())
    throw ValidationError(ValidationFailure::degenerate_alexander, "Alexander determinant is identically zero");
  int k = 0;
  while (is_zero(det.coeff(k))) ++k;
  std::vector<Rational> c(det.coeffs().begin() + k, det.coeffs().end());
  NormalizedAlexanderPoly out{Poly(std::move(c)), 1, k};
  if (sgn(out.delta.leading()) < 0) {
    out.delta = -out.delta;
    out.sign = -1;
  }
  return out;
}

NormalizedAlexanderPoly alexander_polynomial(const AlexanderPresentation& a) {
  NormalizedAlexanderPoly out = normalize_alexander(bareiss_determinant(a.matrix));
  const Rational at_one = out.delta.eval(Rational(1));
  if (abs(at_one) != 1)
    throw ValidationError(ValidationFailure::degenerate_alexander,
                          "Alexander polynomial has delta(1) = " + at_one.get_str() + ", expected +-1");
  const Poly rec = reciprocal(out.delta);
  if (!(rec == out.delta || rec == -out.delta))
    throw ValidationError(ValidationFailure::degenerate_alexander, "Alexander polynomial is not symmetric");
  return out;
}

RootClassSet root_classes(const NormalizedAlexanderPoly& d) {
  RootClassSet out;
  for (auto& [f, m] : yun_squarefree(d.delta).factors) {
    if (is_zero(f.eval(Rational(0))) || is_zero(f.eval(Rational(1))))
      throw InternalError("root class " + to_string(f) + " vanishes at t = 0 or t = 1");
    out.push_back({f, m});
  }
  return out;
}

}  // namespace metabel
