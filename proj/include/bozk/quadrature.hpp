#pragma once

#include <vector>

namespace bozk {

// Gauss-Legendre rule on [-1,1].
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

// integral of f over [a,b] with `panels` equal panels of an n-point rule
template <class F>
double integrate(F&& f, double a, double b, int panels, int n = 8) {
  const GaussRule& g = gauss_legendre(n);
  const double h = (b - a) / panels;
  double s = 0;
  for (int p = 0; p < panels; ++p) {
    double c = a + (p + 0.5) * h;
    for (std::size_t k = 0; k < g.x.size(); ++k) s += g.w[k] * f(c + 0.5 * h * g.x[k]);
  }
  return 0.5 * h * s;
}

}  // namespace bozk
