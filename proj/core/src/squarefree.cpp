#include "metabel/squarefree.hpp"

#include <stdexcept>

namespace metabel {

SquarefreeDecomposition yun_squarefree(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("yun_squarefree: zero polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.is_constant()) return out;

  const Poly a = p.monic();
  const Poly da = a.derivative();
  const Poly c = gcd(a, da);
  Poly w = exact_quotient(a, c);
  Poly y = exact_quotient(da, c);
  Poly z = y - w.derivative();
  for (int i = 1; !w.is_constant(); ++i) {
    Poly g = gcd(w, z);
    if (!g.is_constant()) out.factors.push_back({g, i});
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  return out;
}

bool is_squarefree(const Poly& p) {
  return !p.is_constant() && gcd(p, p.derivative()).is_one();
}

}  // namespace metabel
