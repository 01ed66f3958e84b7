// tensor.cpp

#include "redmap/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <string>

namespace redmap {

namespace {

// Strides of each system in the composite index, system 1 most significant.
std::vector<long long> strides_of(const Dims& dims) {
  const int n = dims.count();
  std::vector<long long> s(static_cast<size_t>(n), 1);
  for (int k = n - 1; k >= 1; --k) {
    s[static_cast<size_t>(k - 1)] = s[static_cast<size_t>(k)] * dims.dim(k + 1);
  }
  return s;
}

// Linear indices of all multi-indices over the given subsystem positions,
// i.e. offsets sum_j digit_j * stride(systems[j]) in mixed-radix order.
std::vector<long long> enumerate_offsets(const Dims& dims,
                                         const std::vector<int>& systems,
                                         const std::vector<long long>& strides) {
  long long count = 1;
  for (int s : systems) count *= dims.dim(s);
  std::vector<long long> offsets(static_cast<size_t>(count), 0);
  long long repeat = count;
  for (int s : systems) {
    const int d = dims.dim(s);
    const long long stride = strides[static_cast<size_t>(s - 1)];
    repeat /= d;
    long long idx = 0;
    while (idx < count) {
      for (int digit = 0; digit < d; ++digit) {
        for (long long r = 0; r < repeat; ++r) {
          offsets[static_cast<size_t>(idx++)] += digit * stride;
        }
      }
    }
  }
  return offsets;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

Dims::Dims(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_) {
    if (d < 1) throw ShapeError("subsystem dimension must be >= 1, got " + std::to_string(d));
  }
  total_ = 1;
  for (int d : dims_) total_ *= d;
}

Dims Dims::concat(const Dims& other) const {
  std::vector<int> out = dims_;
  out.insert(out.end(), other.dims_.begin(), other.dims_.end());
  return Dims(std::move(out));
}

SubsystemSet::SubsystemSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw SubsystemError("duplicate subsystem index");
  }
  if (!indices_.empty() && indices_.front() < 1) {
    throw SubsystemError("subsystem indices are 1-based");
  }
}

SubsystemSet SubsystemSet::range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return SubsystemSet(std::move(v));
}

bool SubsystemSet::contains(int k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

SubsystemSet SubsystemSet::complement(int n) const {
  std::vector<int> v;
  for (int k = 1; k <= n; ++k) {
    if (!contains(k)) v.push_back(k);
  }
  return SubsystemSet(std::move(v));
}

void SubsystemSet::validate_for(const Dims& dims) const {
  for (int k : indices_) {
    if (k < 1 || k > dims.count()) {
      throw SubsystemError("subsystem index " + std::to_string(k) + " out of range 1.." +
                           std::to_string(dims.count()));
    }
  }
}

Operator::Operator(Matrix m, Dims d) : mat(std::move(m)), dims(std::move(d)) {
  if (mat.rows() != mat.cols()) {
    throw ShapeError("operator matrix must be square, got " + std::to_string(mat.rows()) +
                     "x" + std::to_string(mat.cols()));
  }
  if (mat.rows() != dims.total()) {
    throw ShapeError("matrix side " + std::to_string(mat.rows()) +
                     " does not match dims product " + std::to_string(dims.total()));
  }
}

double Operator::hermiticity_defect() const {
  return max_abs(mat - mat.adjoint());
}

bool Operator::is_hermitian(double tol) const {
  return hermiticity_defect() <= tol * std::max(1.0, max_abs(mat));
}

Operator identity_operator(const Dims& dims) {
  return Operator(Matrix::Identity(dims.total(), dims.total()), dims);
}

CVector SchmidtDecomposition::reconstruct(const Dims& dims) const {
  const long long d1 = dims.dim(1), d2 = dims.dim(2);
  CVector v = CVector::Zero(d1 * d2);
  for (size_t k = 0; k < coefficients.size(); ++k) {
    for (long long i = 0; i < d1; ++i) {
      for (long long j = 0; j < d2; ++j) {
        v(i * d2 + j) += coefficients[k] * left[k](i) * right[k](j);
      }
    }
  }
  return v;
}

Operator tensor_product(const Operator& a, const Operator& b) {
  Matrix m = Eigen::kroneckerProduct(a.mat, b.mat);
  return Operator(std::move(m), a.dims.concat(b.dims));
}

Operator partial_trace(const Operator& rho, const SubsystemSet& keep) {
  keep.validate_for(rho.dims);
  const int n = rho.dims.count();
  const auto strides = strides_of(rho.dims);
  const SubsystemSet traced = keep.complement(n);

  std::vector<int> kept_dims;
  for (int s : keep.indices()) kept_dims.push_back(rho.dims.dim(s));
  const Dims out_dims{kept_dims};

  const auto keep_off = enumerate_offsets(rho.dims, keep.indices(), strides);
  const auto trace_off = enumerate_offsets(rho.dims, traced.indices(), strides);

  Matrix out = Matrix::Zero(out_dims.total(), out_dims.total());
  for (long long r = 0; r < out.rows(); ++r) {
    for (long long c = 0; c < out.cols(); ++c) {
      Complex sum = 0.0;
      for (long long t : trace_off) {
        sum += rho.mat(keep_off[static_cast<size_t>(r)] + t,
                       keep_off[static_cast<size_t>(c)] + t);
      }
      out(r, c) = sum;
    }
  }
  return Operator(std::move(out), out_dims);
}

namespace {

// map[new linear index] = old linear index, plus the reordered dims.
std::pair<std::vector<long long>, Dims> reorder_index_map(const Dims& dims,
                                                          const std::vector<int>& new_order) {
  const int n = dims.count();
  if (static_cast<int>(new_order.size()) != n) {
    throw SubsystemError("reorder permutation has wrong length");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> out_dims(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int src = new_order[static_cast<size_t>(k)];
    if (src < 1 || src > n || seen[static_cast<size_t>(src - 1)]) {
      throw SubsystemError("reorder is not a permutation of 1..n");
    }
    seen[static_cast<size_t>(src - 1)] = true;
    out_dims[static_cast<size_t>(k)] = dims.dim(src);
  }
  const Dims dims_out{out_dims};

  const auto old_strides = strides_of(dims);
  const auto new_strides = strides_of(dims_out);
  const long long total = dims.total();
  std::vector<long long> map(static_cast<size_t>(total), 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long rem = idx;
    long long old_idx = 0;
    for (int k = 0; k < n; ++k) {
      const long long digit = rem / new_strides[static_cast<size_t>(k)];
      rem %= new_strides[static_cast<size_t>(k)];
      old_idx += digit * old_strides[static_cast<size_t>(new_order[static_cast<size_t>(k)] - 1)];
    }
    map[static_cast<size_t>(idx)] = old_idx;
  }
  return {std::move(map), dims_out};
}

}  // namespace

Operator reorder_systems(const Operator& x, const std::vector<int>& new_order) {
  auto [map, dims_out] = reorder_index_map(x.dims, new_order);
  const long long total = x.side();
  Matrix out(total, total);
  for (long long r = 0; r < total; ++r) {
    for (long long c = 0; c < total; ++c) {
      out(r, c) = x.mat(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]);
    }
  }
  return Operator(std::move(out), dims_out);
}

Operator system_reorder_unitary(const Dims& dims, const std::vector<int>& new_order) {
  auto [map, dims_out] = reorder_index_map(dims, new_order);
  const long long total = dims.total();
  Matrix p = Matrix::Zero(total, total);
  for (long long idx = 0; idx < total; ++idx) {
    p(idx, map[static_cast<size_t>(idx)]) = 1.0;
  }
  return Operator(std::move(p), dims_out);
}

Operator pad_with_identity(const Operator& sigma, const Dims& dims,
                           const SubsystemSet& placement) {
  placement.validate_for(dims);
  std::vector<int> placed_dims;
  for (int s : placement.indices()) placed_dims.push_back(dims.dim(s));
  if (Dims{placed_dims} != sigma.dims) {
    throw ShapeError("pad_with_identity: sigma dims do not match dims restricted to placement");
  }
  const SubsystemSet rest = placement.complement(dims.count());
  std::vector<int> rest_dims;
  for (int s : rest.indices()) rest_dims.push_back(dims.dim(s));

  // Contiguous layout [placement..., rest...], then reorder to global order.
  Operator contiguous = tensor_product(sigma, identity_operator(Dims{rest_dims}));

  std::vector<int> layout;  // layout[pos] = global system at that position
  layout.insert(layout.end(), placement.indices().begin(), placement.indices().end());
  layout.insert(layout.end(), rest.indices().begin(), rest.indices().end());
  std::vector<int> new_order(layout.size());
  for (size_t pos = 0; pos < layout.size(); ++pos) {
    new_order[static_cast<size_t>(layout[pos] - 1)] = static_cast<int>(pos + 1);
  }
  return reorder_systems(contiguous, new_order);
}

Operator partial_transpose(const Operator& rho, const SubsystemSet& subset) {
  subset.validate_for(rho.dims);
  const int n = rho.dims.count();
  const auto strides = strides_of(rho.dims);
  const long long total = rho.side();

  // Row/column indices split into transposed and untouched parts:
  // out(r, c) = in(r_fix + c_sub, c_fix + r_sub).
  Matrix out(total, total);
  std::vector<int> digits_r(static_cast<size_t>(n)), digits_c(static_cast<size_t>(n));
  for (long long r = 0; r < total; ++r) {
    long long rem = r;
    for (int k = 0; k < n; ++k) {
      digits_r[static_cast<size_t>(k)] = static_cast<int>(rem / strides[static_cast<size_t>(k)]);
      rem %= strides[static_cast<size_t>(k)];
    }
    for (long long c = 0; c < total; ++c) {
      long long rem_c = c;
      for (int k = 0; k < n; ++k) {
        digits_c[static_cast<size_t>(k)] = static_cast<int>(rem_c / strides[static_cast<size_t>(k)]);
        rem_c %= strides[static_cast<size_t>(k)];
      }
      long long src_r = 0, src_c = 0;
      for (int k = 1; k <= n; ++k) {
        const long long stride = strides[static_cast<size_t>(k - 1)];
        if (subset.contains(k)) {
          src_r += digits_c[static_cast<size_t>(k - 1)] * stride;
          src_c += digits_r[static_cast<size_t>(k - 1)] * stride;
        } else {
          src_r += digits_r[static_cast<size_t>(k - 1)] * stride;
          src_c += digits_c[static_cast<size_t>(k - 1)] * stride;
        }
      }
      out(r, c) = rho.mat(src_r, src_c);
    }
  }
  return Operator(std::move(out), rho.dims);
}

Operator permutation_operator(const std::vector<int>& pi, int d) {
  const int n = static_cast<int>(pi.size());
  if (n < 1) throw SubsystemError("permutation must act on at least one system");
  if (d < 1) throw ShapeError("local dimension must be >= 1");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int img : pi) {
    if (img < 1 || img > n || seen[static_cast<size_t>(img - 1)]) {
      throw SubsystemError("not a permutation of 1..n");
    }
    seen[static_cast<size_t>(img - 1)] = true;
  }

  std::vector<int> dvec(static_cast<size_t>(n), d);
  const Dims dims{dvec};
  const auto strides = strides_of(dims);
  const long long total = dims.total();

  // Column j with digits (j_1..j_n) maps to the row whose digit at slot
  // pi(k) is j_k.
  Matrix m = Matrix::Zero(total, total);
  std::vector<int> digits(static_cast<size_t>(n));
  for (long long col = 0; col < total; ++col) {
    long long rem = col;
    for (int k = 0; k < n; ++k) {
      digits[static_cast<size_t>(k)] = static_cast<int>(rem / strides[static_cast<size_t>(k)]);
      rem %= strides[static_cast<size_t>(k)];
    }
    long long row = 0;
    for (int k = 0; k < n; ++k) {
      row += static_cast<long long>(digits[static_cast<size_t>(k)]) *
             strides[static_cast<size_t>(pi[static_cast<size_t>(k)] - 1)];
    }
    m(row, col) = 1.0;
  }
  return Operator(std::move(m), dims);
}

std::vector<double> eigenvalues_hermitian(const Operator& h) {
  const double scale = std::max(1.0, max_abs(h.mat));
  if (h.hermiticity_defect() > kHermTol * scale) {
    throw HermiticityError("operator is not Hermitian within tolerance (defect " +
                           std::to_string(h.hermiticity_defect()) + ")");
  }
  const Matrix sym = 0.5 * (h.mat + h.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double min_eigenvalue(const Operator& h) {
  return eigenvalues_hermitian(h).front();
}

bool is_psd(const Operator& h, double tol) {
  return min_eigenvalue(h) >= -tol;
}

SchmidtDecomposition schmidt_decompose(const CVector& v, const Dims& dims) {
  if (dims.count() != 2) {
    throw ShapeError("schmidt_decompose requires exactly two subsystems");
  }
  const long long d1 = dims.dim(1), d2 = dims.dim(2);
  if (v.size() != d1 * d2) {
    throw ShapeError("vector length does not match dims product");
  }
  Matrix m(d1, d2);
  for (long long i = 0; i < d1; ++i) {
    for (long long j = 0; j < d2; ++j) m(i, j) = v(i * d2 + j);
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = 1e-12 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);

  SchmidtDecomposition out;
  for (long long k = 0; k < sv.size(); ++k) {
    if (sv(k) <= cutoff) break;  // singular values are descending
    out.coefficients.push_back(sv(k));
    out.left.push_back(svd.matrixU().col(k));
    out.right.push_back(svd.matrixV().col(k).conjugate());
  }
  return out;
}

DensityMatrix::DensityMatrix(Operator op) : op_(std::move(op)) {
  if (!op_.is_hermitian()) {
    throw HermiticityError("density matrix is not Hermitian within tolerance");
  }
  const double trace_err = std::abs(op_.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    throw ShapeError("density matrix trace deviates from 1 by " + std::to_string(trace_err));
  }
  if (min_eigenvalue(op_) < -kPsdTol) {
    throw ShapeError("density matrix has a negative eigenvalue beyond tolerance");
  }
}

}  // namespace redmap
