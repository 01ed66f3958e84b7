// distill.hpp
// Distillation-side checks for bipartite states: grouped tensor powers, the
// factorization of the n-system reduction map over n copies, and the
// resulting equivalence with the single-copy reduction criterion.

#pragma once

#include "redmap/reduction.hpp"
#include "redmap/tensor.hpp"

namespace redmap {

// A state on exactly two subsystems A, B.
class BipartiteState {
 public:
  explicit BipartiteState(DensityMatrix rho);

  const DensityMatrix& state() const { return rho_; }
  int dim_a() const { return rho_.dims().dim(1); }
  int dim_b() const { return rho_.dims().dim(2); }

 private:
  DensityMatrix rho_;
};

// rho^(x)n with systems grouped A_1..A_n B_1..B_n (the natural interleaved
// power conjugated by the regrouping permutation). Throws ResourceError when
// (dim_A * dim_B)^n exceeds cap.
DensityMatrix tensor_power_grouped(const BipartiteState& rho, int n, long long cap = kDimCap);

// Checks I_{1..n} (x) L^(n)_{n+1..2n} (rho^(x)n) == (I (x) L(rho))^(x)n
// within tol, both sides in the grouped system order.
bool power_factorization_check(const BipartiteState& rho, int n, double tol);

// Reduction criterion rho_A (x) Id - rho; a detection certifies
// 1-distillability (sufficient condition).
DetectionResult reduction_distillable(const BipartiteState& rho, double tol = kPsdTol);

// True iff the detection verdicts of I (x) L^(n) on rho^(x)n and of
// I (x) L^(1) on rho agree at tolerance tol.
bool equivalence_check(const BipartiteState& rho, int n, double tol = kPsdTol,
                       long long cap = kDimCap);

}  // namespace redmap
