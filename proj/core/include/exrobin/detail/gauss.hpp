#pragma once

#include <vector>

namespace exrobin::detail {

// Gauss-Legendre rule on [-1, 1]. Nodes ascend; weights are positive and
// symmetric. Rules are computed once per order and cached.
struct GaussRule {
  std::vector<double> node;
  std::vector<double> weight;
};

const GaussRule& gauss_legendre(int order);

}  // namespace exrobin::detail
