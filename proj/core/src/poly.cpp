#include "metabel/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace metabel {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) return zero_rational();
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  const Rational inv = 1 / leading();
  out *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  Poly out;
  out.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  const int db = b.degree();
  const Rational lead_inv = 1 / b.leading();
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (sgn(c) == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: division is not exact");
  return q;
}

bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  return (p % d).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout extended_gcd(const Poly& a, const Poly& b) {
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

int multiplicity(const Poly& d, const Poly& p) {
  if (d.is_constant() || p.is_zero()) throw std::invalid_argument("multiplicity: degenerate arguments");
  int e = 0;
  Poly rest = p;
  for (;;) {
    auto [q, r] = divrem(rest, d);
    if (!r.is_zero()) return e;
    rest = std::move(q);
    ++e;
  }
}

std::string to_string(const Poly& p, std::string_view var, TermOrder order) {
  if (p.is_zero()) return "0";
  std::vector<int> degrees;
  for (int i = 0; i <= p.degree(); ++i)
    if (sgn(p.coeff(i)) != 0) degrees.push_back(i);
  if (order == TermOrder::descending) std::reverse(degrees.begin(), degrees.end());

  std::string out;
  bool first = true;
  for (int k : degrees) {
    const Rational& c = p.coeff(k);
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += var;
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

namespace {

[[noreturn]] void bad_poly(std::string_view text, std::string_view why) {
  throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + std::string(why));
}

Rational parse_coefficient(std::string_view digits, std::string_view text) {
  if (digits.empty()) bad_poly(text, "empty coefficient");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') bad_poly(text, "bad coefficient");
  Rational q;
  if (q.set_str(std::string(digits), 10) != 0) bad_poly(text, "bad coefficient");
  q.canonicalize();
  return q;
}

}  // namespace

Poly parse_poly(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) bad_poly(text, "empty input");

  Poly result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      bad_poly(text, "expected sign");
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) bad_poly(text, "empty term");
    pos = end;

    Rational c(1);
    int degree = 0;
    const std::size_t vpos = term.find(var);
    if (vpos == std::string_view::npos) {
      c = parse_coefficient(term, text);
    } else {
      std::string_view head = term.substr(0, vpos);
      if (!head.empty()) {
        if (head.back() != '*') bad_poly(text, "missing '*'");
        c = parse_coefficient(head.substr(0, head.size() - 1), text);
      }
      std::string_view tail = term.substr(vpos + var.size());
      degree = 1;
      if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2) bad_poly(text, "bad exponent");
        degree = 0;
        for (char ch : tail.substr(1)) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) bad_poly(text, "bad exponent");
          degree = degree * 10 + (ch - '0');
        }
      }
    }
    if (negative) c = -c;
    result += Poly::monomial(c, degree);
  }
  return result;
}

}  // namespace metabel
