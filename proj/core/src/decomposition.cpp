#include "metabel/decomposition.hpp"

#include "metabel/seifert.hpp"

namespace metabel {

const char* to_string(Provenance p) { return p == Provenance::filtration ? "filtration" : "oracle"; }

std::map<std::vector<int>, Poly> Decomposition::canonical() const {
  std::map<std::vector<int>, Poly> out;
  for (const auto& c : classes) {
    auto [it, inserted] = out.try_emplace(c.exponents, c.factor);
    if (!inserted) it->second *= c.factor;
  }
  return out;
}

bool equivalent(const Decomposition& a, const Decomposition& b) { return a.canonical() == b.canonical(); }

std::string format_exponents(const std::vector<int>& exponents) {
  std::string out = "{";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(exponents[i]);
  }
  return out + "}";
}

std::vector<std::string> complex_summands(const ExponentClass& c) {
  std::vector<std::string> roots;
  const int d = c.factor.degree();
  if (d == 1) {
    roots.push_back(Rational(-c.factor.coeff(0) / c.factor.leading()).get_str());
  } else if (d == 2 && reciprocal(c.factor) == c.factor) {
    roots = {"a", "a^-1"};
  } else {
    for (int i = 1; i <= d; ++i) roots.push_back("a_" + std::to_string(i));
  }
  std::vector<std::string> out;
  for (const auto& r : roots)
    for (int q : c.exponents) {
      std::string s = "Lambda/(t - " + r + ")";
      if (q != 1) s += "^" + std::to_string(q);
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace metabel
