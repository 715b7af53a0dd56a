#include "bozk/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace bozk {

namespace {

GaussRule build(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p = std::legendre(n, x);
      double dp = n * (x * p - std::legendre(n - 1, x)) / (x * x - 1);
      double dxn = p / dp;
      x -= dxn;
      if (std::abs(dxn) < 1e-16) break;
    }
    double p1 = std::legendre(n - 1, x);
    double dp = n * (x * std::legendre(n, x) - p1) / (x * x - 1);
    r.x[k] = x;
    r.w[k] = 2 / ((1 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

}  // namespace bozk
