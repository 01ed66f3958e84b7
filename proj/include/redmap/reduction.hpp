// reduction.hpp
// Generalized reduction maps L^(n) on multipartite operators, their action on
// subsystem subsets, the associated Choi operators and identities, and the
// odd-n marginal-compatibility test.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "redmap/tensor.hpp"

namespace redmap {

// Verdict of a minimum-eigenvalue test. detected <=> min_eigenvalue < -tolerance,
// so eigenvalues in [-tol, 0) classify as NOT detected.
struct DetectionResult {
  double min_eigenvalue;
  bool detected;
  SubsystemSet subset;
  double tolerance;

  DetectionResult(double min_eig, SubsystemSet s, double tol)
      : min_eigenvalue(min_eig), detected(min_eig < -tol), subset(std::move(s)), tolerance(tol) {}
};

// L^(n)(rho) = sum over all subsets B of {1..n} of (-1)^|B| rho_B, where
// rho_B is the marginal on B padded with identities (rho_{} = Tr(rho) * Id,
// rho_N = rho). Linear; Hermitian output for Hermitian input.
Operator generalized_reduction_map(const Operator& rho);

// I_{N\A} (x) L^(|A|)_A (rho): the signed sum of padded marginals
// rho_{(N\A) union B} over B subset of A. A must be nonempty.
Operator apply_reduction_on_subset(const Operator& rho, const SubsystemSet& a);

// Minimum-eigenvalue verdict of apply_reduction_on_subset; a detection
// certifies entanglement across the corresponding split.
DetectionResult detect(const DensityMatrix& rho, const SubsystemSet& a, double tol = kPsdTol);

// Instance check of the extension property: if the map on systems 2..n
// detects rho, the map on systems 2..n+m must detect rho (x) sigma.
// Returns whether the implication held for these inputs.
bool product_extension_negativity(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  double tol = kPsdTol);

// Unnormalized projector P+ = sum_{i,j} |i i><j j| on the doubled space
// K (x) K; rank 1 with trace = prod(dims).
Operator plus_state_projector(const Dims& dims);

// Choi operator A^(n) = (I (x) L^(n))(P+) on K (x) K, systems 1..n then
// n+1..2n. Throws ResourceError when the side length (prod dims)^2 exceeds cap.
Operator choi_operator(const Dims& dims, long long cap = kDimCap);

// Checks (A^(n))^{T_B} == tensor over k of (Id - V)_{k,n+k} within tol, and
// that this operator is PSD. T_B is the partial transpose over systems
// n+1..2n.
bool choi_pt_identity_check(const Dims& dims, double tol = 1e-12, long long cap = kDimCap);

// Checks sum_{i<j} |psi_ij><psi_ij| == Id - V on C^d (x) C^d exactly, with
// |psi_ij> = |ij> - |ji>. Vacuously true for d = 1.
bool antisymmetric_decomposition_check(int d);

// Inverse Choi correspondence: Lambda(rho) = Tr_A[ D (rho^T (x) Id) ], the
// trace taken over the first half of D's systems. D.dims must be the
// doubling of rho.dims.
Operator map_from_choi(const Operator& choi, const Operator& rho);

// The reduced density matrices of all proper nonempty subsets of an n-party
// system. Construction enforces completeness and shapes; numeric conditions
// (PSD marginals, equal traces, mutual consistency under further tracing)
// are reported as warnings, since the compatibility test itself remains
// meaningful on slightly inconsistent data.
class MarginalSet {
 public:
  MarginalSet(Dims dims, std::map<SubsystemSet, Operator> marginals);

  // Extract all proper nonempty marginals of a global state.
  static MarginalSet from_state(const DensityMatrix& rho);

  int parties() const { return dims_.count(); }
  const Dims& dims() const { return dims_; }
  const Operator& marginal(const SubsystemSet& subset) const;
  const std::map<SubsystemSet, Operator>& marginals() const { return marginals_; }

  // Mean trace over all marginals; the common normalization of the set.
  double common_trace() const;

  std::vector<std::string> consistency_warnings(double tol = 1e-8) const;

 private:
  Dims dims_;
  std::map<SubsystemSet, Operator> marginals_;
};

// Necessary condition for the marginals to arise from one global state
// (odd n only): sum_{B proper subset of N} (-1)^|B| rho_B >= 0, the B = {}
// term being common_trace * Id. detected = true certifies incompatibility.
// Throws ParityError for even n.
DetectionResult marginal_compatibility_check(const MarginalSet& m, double tol = kPsdTol);

}  // namespace redmap
