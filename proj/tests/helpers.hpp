// helpers.hpp
// Deterministic random fixtures shared by the test suites.

#pragma once

#include <random>
#include <vector>

#include "redmap/tensor.hpp"

namespace redmap::testing {

inline Matrix random_matrix(std::mt19937_64& rng, long long side) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(side, side);
  for (long long r = 0; r < side; ++r) {
    for (long long c = 0; c < side; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  }
  return m;
}

inline CVector random_vector(std::mt19937_64& rng, long long size) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(size);
  for (long long i = 0; i < size; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v;
}

// Ginibre-induced random density matrix.
inline Operator random_density(std::mt19937_64& rng, const Dims& dims) {
  const Matrix g = random_matrix(rng, dims.total());
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return Operator(std::move(rho), dims);
}

inline Operator random_pure(std::mt19937_64& rng, const Dims& dims) {
  CVector v = random_vector(rng, dims.total());
  v.normalize();
  return Operator(v * v.adjoint(), dims);
}

inline Operator random_hermitian(std::mt19937_64& rng, const Dims& dims) {
  const Matrix g = random_matrix(rng, dims.total());
  return Operator(0.5 * (g + g.adjoint()), dims);
}

// Product of independent random single-system states.
inline Operator random_product_density(std::mt19937_64& rng, const std::vector<int>& dims) {
  Operator acc = random_density(rng, Dims{dims[0]});
  for (size_t k = 1; k < dims.size(); ++k) {
    acc = tensor_product(acc, random_density(rng, Dims{dims[k]}));
  }
  return acc;
}

// Convex mixture of `terms` random product states: fully separable by
// construction.
inline Operator random_separable(std::mt19937_64& rng, const std::vector<int>& dims, int terms) {
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  std::vector<double> weights(static_cast<size_t>(terms));
  double total = 0.0;
  for (auto& w : weights) total += (w = unit(rng));
  Operator acc = random_product_density(rng, dims);
  Matrix m = (weights[0] / total) * acc.mat;
  for (int t = 1; t < terms; ++t) {
    m += (weights[static_cast<size_t>(t)] / total) * random_product_density(rng, dims).mat;
  }
  return Operator(std::move(m), acc.dims);
}

inline Operator bell_projector() {
  CVector bell = CVector::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  return Operator(bell * bell.adjoint(), Dims{2, 2});
}

inline Operator ghz_projector() {
  CVector ghz = CVector::Zero(8);
  ghz(0) = 1.0 / std::sqrt(2.0);
  ghz(7) = 1.0 / std::sqrt(2.0);
  return Operator(ghz * ghz.adjoint(), Dims{2, 2, 2});
}

inline double max_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace redmap::testing
