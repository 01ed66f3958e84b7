// tensor.hpp
// Dense complex-matrix substrate for multipartite operators: tensor products,
// subsystem indexing, partial trace/transpose, permutation operators,
// Hermitian spectra and Schmidt decompositions.
//
// Index convention: system 1 is the most significant digit of a composite
// row/column index (big-endian), so tensor_product(A, B) indexes A-major.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <vector>

#include "redmap/errors.hpp"

namespace redmap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Hermiticity acceptance threshold, scaled by max(1, maxabs(H)).
inline constexpr double kHermTol = 1e-10;
// Default tolerance on the minimum eigenvalue for PSD / detection verdicts.
inline constexpr double kPsdTol = 1e-10;
// Trace tolerance for density matrices.
inline constexpr double kTraceTol = 1e-10;
// Default cap on the side length of constructed operators (Choi, tensor powers).
inline constexpr long long kDimCap = 1LL << 12;

// Ordered list of subsystem dimensions d_1..d_n of a tensor-product space.
// An empty list denotes the scalar (1x1) space.
class Dims {
 public:
  Dims() = default;
  Dims(std::initializer_list<int> dims) : Dims(std::vector<int>(dims)) {}
  explicit Dims(std::vector<int> dims);

  int count() const { return static_cast<int>(dims_.size()); }
  // 1-based subsystem dimension.
  int dim(int k) const { return dims_.at(static_cast<size_t>(k - 1)); }
  long long total() const { return total_; }
  const std::vector<int>& vec() const { return dims_; }

  Dims concat(const Dims& other) const;
  // The doubled space K (x) K, systems 1..n then n+1..2n.
  Dims doubled() const { return concat(*this); }

  bool operator==(const Dims& other) const { return dims_ == other.dims_; }
  bool operator!=(const Dims& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  long long total_ = 1;
};

// Sorted set of distinct 1-based subsystem indices.
class SubsystemSet {
 public:
  SubsystemSet() = default;
  SubsystemSet(std::initializer_list<int> indices)
      : SubsystemSet(std::vector<int>(indices)) {}
  explicit SubsystemSet(std::vector<int> indices);

  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static SubsystemSet range(int lo, int hi);
  static SubsystemSet full(int n) { return range(1, n); }

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int k) const;
  const std::vector<int>& indices() const { return indices_; }

  SubsystemSet complement(int n) const;
  // Throws SubsystemError unless all indices lie in 1..dims.count().
  void validate_for(const Dims& dims) const;

  bool operator==(const SubsystemSet& other) const { return indices_ == other.indices_; }
  bool operator<(const SubsystemSet& other) const { return indices_ < other.indices_; }

 private:
  std::vector<int> indices_;
};

// Dense operator on a multipartite space, tagged with its subsystem dimensions.
// Carries states, map outputs, projectors and unitaries alike; hermiticity is
// checked at the points of use that require it.
struct Operator {
  Matrix mat;
  Dims dims;

  Operator(Matrix m, Dims d);

  long long side() const { return dims.total(); }
  Complex trace() const { return mat.trace(); }
  // max |M - M^dag| over entries.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermTol) const;
};

Operator identity_operator(const Dims& dims);

// Schmidt decomposition of a bipartite vector: v = sum_i c_i |a_i> (x) |b_i>,
// coefficients positive and descending, vector sets orthonormal.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<CVector> left;
  std::vector<CVector> right;

  int rank() const { return static_cast<int>(coefficients.size()); }
  CVector reconstruct(const Dims& dims) const;
};

// --- core operations ---------------------------------------------------

// Kronecker product; result dims = concat(a.dims, b.dims), first factor most
// significant in the composite index.
Operator tensor_product(const Operator& a, const Operator& b);

// Trace out everything not in `keep`; result dims = dims restricted to keep
// in the original system order. keep = full set is the identity, keep = {}
// yields the 1x1 trace.
Operator partial_trace(const Operator& rho, const SubsystemSet& keep);

// Embed sigma into the larger space `dims`, acting as sigma on `placement`
// and identity elsewhere, with the global system order preserved. Built on a
// contiguous layout and conjugated with the system-reordering permutation.
Operator pad_with_identity(const Operator& sigma, const Dims& dims,
                           const SubsystemSet& placement);

// Transpose the indices of the selected subsystems only.
Operator partial_transpose(const Operator& rho, const SubsystemSet& subset);

// V_pi on (C^d)^(x)n for a permutation pi of {1..n} given as 1-based images
// (pi[k-1] = pi(k)): V_pi |phi_1 ... phi_n> = |phi_{pi^-1(1)} ... phi_{pi^-1(n)}>.
Operator permutation_operator(const std::vector<int>& pi, int d);

// Relabel subsystems: output slot k holds the input system new_order[k-1]
// (1-based). Equivalent to conjugation with system_reorder_unitary.
Operator reorder_systems(const Operator& x, const std::vector<int>& new_order);

// The permutation unitary P with reorder_systems(x, o).mat == P * x.mat * P^dag.
Operator system_reorder_unitary(const Dims& dims, const std::vector<int>& new_order);

// Full real spectrum in ascending order. The input is symmetrized as
// (H + H^dag)/2 before solving; inputs with a hermiticity defect beyond
// kHermTol * max(1, maxabs) throw HermiticityError.
std::vector<double> eigenvalues_hermitian(const Operator& h);

double min_eigenvalue(const Operator& h);
bool is_psd(const Operator& h, double tol = kPsdTol);

// Schmidt decomposition of a vector on a two-subsystem space. Coefficients
// below 1e-12 * max(1, c_max) are dropped.
SchmidtDecomposition schmidt_decompose(const CVector& v, const Dims& dims);

// Density matrix: Hermitian, unit trace, PSD within tolerance.
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator op);

  const Operator& op() const { return op_; }
  const Matrix& mat() const { return op_.mat; }
  const Dims& dims() const { return op_.dims; }

 private:
  Operator op_;
};

}  // namespace redmap
