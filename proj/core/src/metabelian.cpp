#include "metabel/metabelian.hpp"

#include "metabel/obstruction.hpp"

namespace metabel {

LaurentPoly::LaurentPoly(Poly body, int shift) : shift_(shift) {
  if (body.is_zero()) {
    shift_ = 0;
    return;
  }
  int low = 0;
  while (metabel::is_zero(body.coeff(low))) ++low;
  if (low == 0) {
    body_ = std::move(body);
  } else {
    body_ = Poly(std::vector<Rational>(body.coeffs().begin() + low, body.coeffs().end()));
    shift_ += low;
  }
}

LaurentPoly LaurentPoly::times_t_power(int k) const {
  if (is_zero()) return *this;
  LaurentPoly out = *this;
  out.shift_ += k;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int low = std::min(shift_, rhs.shift_);
  *this = LaurentPoly(body_.shifted(shift_ - low) + rhs.body_.shifted(rhs.shift_ - low), low);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.body_ * b.body_, a.shift_ + b.shift_);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  if (p.shift() == 0) return to_string(p.body());
  return "t^" + std::to_string(p.shift()) + "*(" + to_string(p.body()) + ")";
}

std::string to_string(const MetabelianElement& g) {
  std::string out = "([";
  for (std::size_t i = 0; i < g.y.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(g.y[i]);
  }
  return out += "], " + std::to_string(g.k) + ")";
}

MetabelianElement semidirect_mul(const MetabelianElement& a, const MetabelianElement& b) {
  if (a.y.size() != b.y.size()) throw std::invalid_argument("semidirect_mul: size mismatch");
  MetabelianElement out{a.y, a.k + b.k};
  for (std::size_t i = 0; i < out.y.size(); ++i) out.y[i] += b.y[i].times_t_power(static_cast<int>(a.k));
  return out;
}

LaurentRow row_span_element(const SeifertData& s, const LaurentRow& coeffs) {
  const std::size_t n = s.size();
  if (coeffs.size() != n) throw std::invalid_argument("row_span_element: wrong coefficient count");
  const AlexanderPresentation a = alexander_matrix(s);
  LaurentRow out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += coeffs[i] * LaurentPoly(a.matrix(i, j));
  }
  return out;
}

RepBuilder::RepBuilder(const SeifertData& s, NumberField field, int level, Matrix<NFElement> phi)
    : RepBuilder(s, std::move(field), level, std::move(phi), true) {}

RepBuilder RepBuilder::unchecked(const SeifertData& s, NumberField field, int level, Matrix<NFElement> phi) {
  return RepBuilder(s, std::move(field), level, std::move(phi), false);
}

RepBuilder::RepBuilder(const SeifertData& s, NumberField field, int level, Matrix<NFElement> phi, bool check)
    : seifert_(s), field_(std::move(field)), level_(level), phi_(std::move(phi)) {
  if (level_ < 2) throw std::invalid_argument("RepBuilder: level must be >= 2");
  if (phi_.rows() != s.size() || phi_.cols() != width())
    throw std::invalid_argument("RepBuilder: Phi must be 2g x (n-1)");
  for (std::size_t i = 0; i < phi_.rows(); ++i)
    for (const auto& x : phi_.row(i))
      if (!(x.field() == field_)) throw std::invalid_argument("RepBuilder: Phi entries have mixed moduli");

  const NFElement alpha = field_.generator();
  const NFElement alpha_inv = invert_or_split(alpha);
  step_ = to_field(jordan_power(width(), -1), field_);
  step_inverse_ = to_field(jordan_power(width(), 1), field_);
  for (std::size_t i = 0; i < width(); ++i)
    for (std::size_t j = 0; j < width(); ++j) {
      step_(i, j) *= alpha;
      step_inverse_(i, j) *= alpha_inv;
    }
  if (check && !satisfies_obstruction())
    throw std::invalid_argument("RepBuilder: Phi does not satisfy S^T Phi J = alpha S Phi");
}

bool RepBuilder::satisfies_obstruction() const {
  const std::size_t n = seifert_.size();
  if (n == 0) return true;
  const Matrix<NFElement> jordan = to_field(jordan_power(width(), 1), field_);
  Matrix<NFElement> st(n, n, field_.zero()), sm(n, n, field_.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      st(i, j) = field_.element(Rational(static_cast<long>(seifert_(j, i))));
      sm(i, j) = field_.element(Rational(static_cast<long>(seifert_(i, j))));
    }
  const Matrix<NFElement> lhs = multiply(multiply(st, phi_, field_.zero()), jordan, field_.zero());
  Matrix<NFElement> rhs = multiply(sm, phi_, field_.zero());
  const NFElement alpha = field_.generator();
  for (std::size_t i = 0; i < rhs.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) *= alpha;
  return lhs == rhs;
}

namespace {

Vector<NFElement> row_times(const Vector<NFElement>& v, const Matrix<NFElement>& m, const NFElement& zero) {
  Vector<NFElement> out(m.cols(), zero);
  for (std::size_t l = 0; l < m.rows(); ++l) {
    if (v[l].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += v[l] * m(l, c);
  }
  return out;
}

}  // namespace

Vector<NFElement> RepBuilder::apply(const Vector<NFElement>& v, const LaurentPoly& p) const {
  const NFElement zero = field_.zero();
  Vector<NFElement> acc(width(), zero);
  if (p.is_zero()) return acc;
  Vector<NFElement> w = v;
  const Matrix<NFElement>& shift_step = p.shift() < 0 ? step_inverse_ : step_;
  for (int s = 0; s < std::abs(p.shift()); ++s) w = row_times(w, shift_step, zero);
  for (int k = 0; k <= p.body().degree(); ++k) {
    const Rational& c = p.body().coeff(k);
    if (sgn(c) != 0)
      for (std::size_t i = 0; i < width(); ++i) acc[i] += w[i] * c;
    if (k < p.body().degree()) w = row_times(w, step_, zero);
  }
  return acc;
}

Vector<NFElement> RepBuilder::phi_extend(const LaurentRow& y) const {
  if (y.size() != seifert_.size()) throw std::invalid_argument("phi_extend: row has wrong length");
  Vector<NFElement> out(width(), field_.zero());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) continue;
    Vector<NFElement> phi_row(phi_.row(i).begin(), phi_.row(i).end());
    const Vector<NFElement> term = apply(phi_row, y[i]);
    for (std::size_t c = 0; c < width(); ++c) out[c] += term[c];
  }
  return out;
}

Matrix<NFElement> RepBuilder::build_rep(const MetabelianElement& g) const {
  const std::size_t n = static_cast<std::size_t>(level_);
  const Matrix<NFElement> jk = to_field(jordan_power(width(), g.k), field_);
  const Vector<NFElement> top = row_times(phi_extend(g.y), jk, field_.zero());
  Matrix<NFElement> rho(n, n, field_.zero());
  rho(0, 0) = pow(field_.generator(), g.k);
  for (std::size_t c = 0; c < width(); ++c) rho(0, c + 1) = top[c];
  for (std::size_t i = 0; i < width(); ++i)
    for (std::size_t j = 0; j < width(); ++j) rho(i + 1, j + 1) = jk(i, j);
  return rho;
}

LaurentPoly ElementSampler::laurent(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> shift(-max_shift, max_shift);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  const int d = degree(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
  const int s = shift(rng);
  return LaurentPoly(Poly(std::move(c)), s);
}

MetabelianElement ElementSampler::element(std::size_t size, std::mt19937_64& rng) const {
  std::uniform_int_distribution<long> k(-max_k, max_k);
  MetabelianElement g;
  for (std::size_t i = 0; i < size; ++i) g.y.push_back(laurent(rng));
  g.k = k(rng);
  return g;
}

HomomorphismCheck verify_homomorphism(const RepBuilder& b, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ElementSampler sampler;
  const std::size_t size = b.seifert().size();
  const NFElement zero = b.field().zero();
  HomomorphismCheck out;
  for (std::size_t t = 0; t < trials; ++t) {
    const MetabelianElement g1 = sampler.element(size, rng);
    const MetabelianElement g2 = sampler.element(size, rng);
    ++out.trials;
    const Matrix<NFElement> product = multiply(b.build_rep(g1), b.build_rep(g2), zero);
    if (!(b.build_rep(semidirect_mul(g1, g2)) == product)) {
      out.passed = false;
      out.witness = "rho(g1 g2) != rho(g1) rho(g2) for g1 = " + to_string(g1) + ", g2 = " + to_string(g2);
      return out;
    }
    LaurentRow coeffs;
    for (std::size_t i = 0; i < size; ++i) coeffs.push_back(sampler.laurent(rng));
    const LaurentRow r = row_span_element(b.seifert(), coeffs);
    MetabelianElement shifted = g1;
    for (std::size_t i = 0; i < size; ++i) shifted.y[i] += r[i];
    if (!(b.build_rep(shifted) == b.build_rep(g1))) {
      out.passed = false;
      MetabelianElement rel{r, 0};
      out.witness = "rho depends on the representative: g = " + to_string(g1) + ", relation r = " + to_string(rel);
      return out;
    }
  }
  return out;
}

}  // namespace metabel
