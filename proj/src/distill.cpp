// distill.cpp

#include "redmap/distill.hpp"

#include <string>
#include <vector>

namespace redmap {

namespace {

// Grouped order A_1..A_n B_1..B_n from the interleaved order A_1 B_1 A_2 B_2...
std::vector<int> grouping_order(int n) {
  std::vector<int> order(static_cast<size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    order[static_cast<size_t>(k - 1)] = 2 * k - 1;
    order[static_cast<size_t>(n + k - 1)] = 2 * k;
  }
  return order;
}

// Interleaved n-th tensor power of a two-system operator, regrouped to
// X_1..X_n Y_1..Y_n order.
Operator power_grouped(const Operator& two_system, int n, long long cap) {
  if (n < 1) throw ParameterError("tensor power needs n >= 1");
  long long side = 1;
  for (int k = 0; k < n; ++k) {
    side *= two_system.side();
    if (side > cap) {
      throw ResourceError("tensor power side " + std::to_string(side) + " exceeds cap " +
                          std::to_string(cap));
    }
  }
  Operator acc = two_system;
  for (int k = 1; k < n; ++k) acc = tensor_product(acc, two_system);
  return reorder_systems(acc, grouping_order(n));
}

}  // namespace

BipartiteState::BipartiteState(DensityMatrix rho) : rho_(std::move(rho)) {
  if (rho_.dims().count() != 2) {
    throw ShapeError("bipartite state must have exactly two subsystems");
  }
}

DensityMatrix tensor_power_grouped(const BipartiteState& rho, int n, long long cap) {
  return DensityMatrix(power_grouped(rho.state().op(), n, cap));
}

bool power_factorization_check(const BipartiteState& rho, int n, double tol) {
  const DensityMatrix power = tensor_power_grouped(rho, n);
  const Operator lhs =
      apply_reduction_on_subset(power.op(), SubsystemSet::range(n + 1, 2 * n));

  const Operator single = apply_reduction_on_subset(rho.state().op(), {2});
  const Operator rhs = power_grouped(single, n, kDimCap);

  return (lhs.mat - rhs.mat).cwiseAbs().maxCoeff() <= tol;
}

DetectionResult reduction_distillable(const BipartiteState& rho, double tol) {
  return detect(rho.state(), {2}, tol);
}

bool equivalence_check(const BipartiteState& rho, int n, double tol, long long cap) {
  const DensityMatrix power = tensor_power_grouped(rho, n, cap);
  const DetectionResult copies = detect(power, SubsystemSet::range(n + 1, 2 * n), tol);
  const DetectionResult single = reduction_distillable(rho, tol);
  return copies.detected == single.detected;
}

}  // namespace redmap
