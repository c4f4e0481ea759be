#include "curvepencil/unipoly.hpp"

#include <map>

namespace curvepencil {

QPoly cyclotomic(int n) {
  if (n < 1) throw domain_error("cyclotomic index must be >= 1");
  static std::map<int, QPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the product of phi_d over proper divisors d of n.
  std::vector<Rat> xn(static_cast<size_t>(n) + 1, Rat(0));
  xn[0] = Rat(-1);
  xn[static_cast<size_t>(n)] = Rat(1);
  QPoly p(std::move(xn));
  for (int d = 1; d < n; d++) {
    if (n % d != 0) continue;
    auto [q, r] = divrem_field(p, cyclotomic(d));
    assert(r.is_zero());
    p = q;
  }
  cache[n] = p;
  return p;
}

std::string upoly_to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; i--) {
    const Rat a = p.coeff(i, Rat(0));
    if (sgn(a) == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace curvepencil
