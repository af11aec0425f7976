#include "fihom/filtered.hpp"

namespace fihom {

RationalPolynomial interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  if (xs.size() != ys.size()) throw ContractViolation("interpolate: size mismatch");
  const std::size_t k = xs.size();
  // Newton divided differences, then expand the nested form
  std::vector<mpq_class> dd = ys;
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      if (xs[i] == xs[i - level]) throw ContractViolation("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  std::vector<mpq_class> c;
  for (std::size_t i = k; i-- > 0;) {
    // c <- c·(X − xs[i]) + dd[i]
    std::vector<mpq_class> next(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * xs[i];
    }
    next[0] += dd[i];
    c = std::move(next);
  }
  RationalPolynomial p{std::move(c)};
  while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
  for (auto& x : p.coefficients) x.canonicalize();
  return p;
}

std::string RationalPolynomial::to_string() const {
  std::string s;
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k) {
    mpq_class c = coefficients[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mag = c.get_str();
    if (k == 0) {
      s += mag;
      continue;
    }
    if (c != 1) s += c.get_den() == 1 ? mag : "(" + mag + ")";
    s += "X";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace fihom
