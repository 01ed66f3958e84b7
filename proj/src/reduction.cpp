// reduction.cpp

#include "redmap/reduction.hpp"

#include <cmath>
#include <sstream>

namespace redmap {

namespace {

// Subset of 1..n selected by a bitmask (bit k-1 <=> system k).
SubsystemSet subset_from_mask(unsigned mask, int n) {
  std::vector<int> v;
  for (int k = 1; k <= n; ++k) {
    if (mask & (1u << (k - 1))) v.push_back(k);
  }
  return SubsystemSet(std::move(v));
}

// (-1)^|B| rho_B, padded to the full space. B = {} yields Tr(rho) * Id,
// B = N yields rho itself.
Operator signed_padded_marginal(const Operator& rho, const SubsystemSet& b, int sign) {
  const int n = rho.dims.count();
  Operator term = (b.size() == n)
                      ? rho
                      : pad_with_identity(partial_trace(rho, b), rho.dims, b);
  term.mat *= static_cast<double>(sign);
  return term;
}

}  // namespace

Operator generalized_reduction_map(const Operator& rho) {
  return apply_reduction_on_subset(rho, SubsystemSet::full(rho.dims.count()));
}

Operator apply_reduction_on_subset(const Operator& rho, const SubsystemSet& a) {
  if (a.empty()) throw SubsystemError("reduction map requires a nonempty subsystem set");
  a.validate_for(rho.dims);
  const int n = rho.dims.count();
  const SubsystemSet rest = a.complement(n);

  Matrix acc = Matrix::Zero(rho.side(), rho.side());
  const unsigned count = 1u << a.size();
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<int> kept = rest.indices();
    int parity = 1;
    for (int j = 0; j < a.size(); ++j) {
      if (mask & (1u << j)) {
        kept.push_back(a.indices()[static_cast<size_t>(j)]);
        parity = -parity;
      }
    }
    acc += signed_padded_marginal(rho, SubsystemSet(std::move(kept)), parity).mat;
  }
  return Operator(std::move(acc), rho.dims);
}

DetectionResult detect(const DensityMatrix& rho, const SubsystemSet& a, double tol) {
  const Operator mapped = apply_reduction_on_subset(rho.op(), a);
  return DetectionResult(min_eigenvalue(mapped), a, tol);
}

bool product_extension_negativity(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  double tol) {
  const int n = rho.dims().count();
  if (n < 2) throw SubsystemError("need at least two systems (party 1 plus map systems)");
  const DetectionResult base = detect(rho, SubsystemSet::range(2, n), tol);
  if (!base.detected) return true;  // nothing to imply

  const Operator extended = tensor_product(rho.op(), sigma.op());
  const DensityMatrix ext(extended);
  const DetectionResult lifted =
      detect(ext, SubsystemSet::range(2, extended.dims.count()), tol);
  return lifted.detected;
}

Operator plus_state_projector(const Dims& dims) {
  const long long d = dims.total();
  const Dims doubled = dims.doubled();
  // |vec(Id)><vec(Id)| in the composite index: entry ((i,i),(j,j)) = 1.
  Matrix m = Matrix::Zero(d * d, d * d);
  for (long long i = 0; i < d; ++i) {
    for (long long j = 0; j < d; ++j) {
      m(i * d + i, j * d + j) = 1.0;
    }
  }
  return Operator(std::move(m), doubled);
}

Operator choi_operator(const Dims& dims, long long cap) {
  const long long d = dims.total();
  if (d * d > cap) {
    throw ResourceError("Choi operator side " + std::to_string(d * d) +
                        " exceeds cap " + std::to_string(cap));
  }
  const int n = dims.count();
  const Operator p_plus = plus_state_projector(dims);
  return apply_reduction_on_subset(p_plus, SubsystemSet::range(n + 1, 2 * n));
}

bool choi_pt_identity_check(const Dims& dims, double tol, long long cap) {
  const int n = dims.count();
  const Operator choi = choi_operator(dims, cap);
  const Operator choi_pt = partial_transpose(choi, SubsystemSet::range(n + 1, 2 * n));

  // tensor over k of (Id - V)_{k,n+k}, built pairwise then put in 1..2n order.
  Operator pairs = [&] {
    Operator acc = Operator(Matrix::Ones(1, 1), Dims{});
    for (int k = 1; k <= n; ++k) {
      const int dk = dims.dim(k);
      Operator one_minus_v = permutation_operator({2, 1}, dk);
      one_minus_v.mat = Matrix::Identity(dk * dk, dk * dk) - one_minus_v.mat;
      acc = tensor_product(acc, one_minus_v);
    }
    return acc;
  }();
  std::vector<int> order(static_cast<size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    order[static_cast<size_t>(k - 1)] = 2 * k - 1;   // system k sits at pair slot 2k-1
    order[static_cast<size_t>(n + k - 1)] = 2 * k;   // system n+k at pair slot 2k
  }
  const Operator expected = reorder_systems(pairs, order);

  const double diff = (choi_pt.mat - expected.mat).cwiseAbs().maxCoeff();
  return diff <= tol && is_psd(choi_pt);
}

bool antisymmetric_decomposition_check(int d) {
  if (d < 1) throw ShapeError("dimension must be >= 1");
  const long long dd = static_cast<long long>(d) * d;
  Matrix sum = Matrix::Zero(dd, dd);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      CVector psi = CVector::Zero(dd);
      psi(i * d + j) = 1.0;
      psi(j * d + i) = -1.0;
      sum += psi * psi.adjoint();
    }
  }
  const Operator swap = permutation_operator({2, 1}, d);
  const Matrix expected = Matrix::Identity(dd, dd) - swap.mat;
  return (sum - expected).cwiseAbs().maxCoeff() == 0.0;
}

Operator map_from_choi(const Operator& choi, const Operator& rho) {
  if (choi.dims != rho.dims.doubled()) {
    throw ShapeError("Choi operator dims must be the doubling of the input dims");
  }
  const int n = rho.dims.count();
  Operator arg = tensor_product(Operator(rho.mat.transpose(), rho.dims),
                                identity_operator(rho.dims));
  Operator product(choi.mat * arg.mat, choi.dims);
  return partial_trace(product, SubsystemSet::range(n + 1, 2 * n));
}

MarginalSet::MarginalSet(Dims dims, std::map<SubsystemSet, Operator> marginals)
    : dims_(std::move(dims)), marginals_(std::move(marginals)) {
  const int n = dims_.count();
  if (n < 2) throw IncompleteInputError("marginal set needs at least two parties");
  if (n > 20) throw ResourceError("marginal set too large");
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    const SubsystemSet b = subset_from_mask(mask, n);
    auto it = marginals_.find(b);
    if (it == marginals_.end()) {
      std::ostringstream oss;
      oss << "missing marginal for subset {";
      for (int k : b.indices()) oss << " " << k;
      oss << " }";
      throw IncompleteInputError(oss.str());
    }
    std::vector<int> expected;
    for (int k : b.indices()) expected.push_back(dims_.dim(k));
    if (it->second.dims != Dims{expected}) {
      throw ShapeError("marginal dims do not match the declared subsystem dimensions");
    }
  }
}

MarginalSet MarginalSet::from_state(const DensityMatrix& rho) {
  const int n = rho.dims().count();
  std::map<SubsystemSet, Operator> marginals;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    const SubsystemSet b = subset_from_mask(mask, n);
    marginals.emplace(b, partial_trace(rho.op(), b));
  }
  return MarginalSet(rho.dims(), std::move(marginals));
}

const Operator& MarginalSet::marginal(const SubsystemSet& subset) const {
  auto it = marginals_.find(subset);
  if (it == marginals_.end()) throw IncompleteInputError("no marginal for that subset");
  return it->second;
}

double MarginalSet::common_trace() const {
  double sum = 0.0;
  for (const auto& [subset, op] : marginals_) sum += op.trace().real();
  return sum / static_cast<double>(marginals_.size());
}

std::vector<std::string> MarginalSet::consistency_warnings(double tol) const {
  std::vector<std::string> warnings;
  auto subset_name = [](const SubsystemSet& s) {
    std::ostringstream oss;
    oss << "{";
    for (size_t i = 0; i < s.indices().size(); ++i) {
      oss << (i ? "," : "") << s.indices()[i];
    }
    oss << "}";
    return oss.str();
  };

  const double t0 = common_trace();
  for (const auto& [subset, op] : marginals_) {
    if (!op.is_hermitian(1e-8)) {
      warnings.push_back("marginal " + subset_name(subset) + " is not Hermitian");
      continue;
    }
    if (std::abs(op.trace().real() - t0) > tol) {
      warnings.push_back("marginal " + subset_name(subset) + " trace deviates from the common value");
    }
    if (min_eigenvalue(op) < -tol) {
      warnings.push_back("marginal " + subset_name(subset) + " is not PSD");
    }
  }

  // Tracing a larger marginal down one system must reproduce the smaller one.
  for (const auto& [subset, op] : marginals_) {
    if (subset.size() < 2) continue;
    for (size_t drop = 0; drop < subset.indices().size(); ++drop) {
      std::vector<int> smaller = subset.indices();
      smaller.erase(smaller.begin() + static_cast<long>(drop));
      const SubsystemSet small_set(smaller);

      // Position of the kept systems inside the larger marginal's local order.
      std::vector<int> local_keep;
      for (size_t i = 0; i < subset.indices().size(); ++i) {
        if (i != drop) local_keep.push_back(static_cast<int>(i + 1));
      }
      const Operator traced = partial_trace(op, SubsystemSet(local_keep));
      const double diff =
          (traced.mat - marginal(small_set).mat).cwiseAbs().maxCoeff();
      if (diff > tol) {
        warnings.push_back("marginal " + subset_name(subset) + " traced down disagrees with " +
                           subset_name(small_set));
      }
    }
  }
  return warnings;
}

DetectionResult marginal_compatibility_check(const MarginalSet& m, double tol) {
  const int n = m.parties();
  if (n % 2 == 0) {
    throw ParityError("marginal compatibility test is defined for odd n only");
  }
  if (n < 3) throw IncompleteInputError("need n >= 3");

  const long long d = m.dims().total();
  // B = {} term: common trace times identity.
  Matrix acc = m.common_trace() * Matrix::Identity(d, d);
  for (const auto& [subset, op] : m.marginals()) {
    const double sign = (subset.size() % 2 == 0) ? 1.0 : -1.0;
    acc += sign * pad_with_identity(op, m.dims(), subset).mat;
  }
  const Operator expression(std::move(acc), m.dims());
  return DetectionResult(min_eigenvalue(expression), SubsystemSet::full(n), tol);
}

}  // namespace redmap
