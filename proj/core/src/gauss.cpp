#include "exrobin/detail/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace exrobin::detail {

namespace {

// Newton iteration on the three-term recurrence. Converges to ~1 ulp in a
// handful of steps for the orders used here (<= 64).
GaussRule make_rule(int n) {
  GaussRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.node[k] = -x;
    rule.node[n - 1 - k] = x;
    rule.weight[k] = w;
    rule.weight[n - 1 - k] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1 || order > 256) throw std::domain_error("gauss_legendre: order out of range");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  // References into the map stay valid across later insertions.
  return it->second;
}

}  // namespace exrobin::detail
