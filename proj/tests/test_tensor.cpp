// test_tensor.cpp
// Tensor-core suite: products, partial trace/transpose, padding, permutation
// operators, Hermitian spectra, Schmidt decomposition. Expected values come
// from independent element-wise oracles written inline here.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "redmap/tensor.hpp"

using namespace redmap;
using namespace redmap::testing;

namespace {

// Quadratic-formula spectrum of a 2x2 Hermitian matrix.
std::array<double, 2> eig2x2(const Matrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double off = std::abs(h(0, 1));
  const double mean = 0.5 * (a + d);
  const double disc = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  return {mean - disc, mean + disc};
}

// Partial trace of a 3-qubit operator over systems {1,3}, by explicit index
// summation (system 1 most significant).
Matrix ptrace_13_naive(const Matrix& m) {
  Matrix out = Matrix::Zero(2, 2);
  for (int r2 = 0; r2 < 2; ++r2) {
    for (int c2 = 0; c2 < 2; ++c2) {
      for (int t1 = 0; t1 < 2; ++t1) {
        for (int t3 = 0; t3 < 2; ++t3) {
          out(r2, c2) += m(4 * t1 + 2 * r2 + t3, 4 * t1 + 2 * c2 + t3);
        }
      }
    }
  }
  return out;
}

// Element-wise partial transpose of a two-qubit operator over system 2.
Matrix pt2_naive(const Matrix& m) {
  Matrix out(4, 4);
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2)
          out(2 * r1 + r2, 2 * c1 + c2) = m(2 * r1 + c2, 2 * c1 + r2);
  return out;
}

}  // namespace

TEST_CASE("tensor product basics") {
  const Operator i2 = identity_operator(Dims{2});

  SUBCASE("identity times identity") {
    const Operator i4 = tensor_product(i2, i2);
    CHECK(i4.dims == Dims{2, 2});
    CHECK(max_diff(i4.mat, Matrix::Identity(4, 4)) == 0.0);
  }

  SUBCASE("basis projectors, system 1 most significant") {
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const Operator prod = tensor_product(Operator(p0, Dims{2}), Operator(p1, Dims{2}));
    Matrix expected = Matrix::Zero(4, 4);
    expected(1, 1) = 1.0;  // |01><01|
    CHECK(max_diff(prod.mat, expected) == 0.0);
  }

  SUBCASE("trace multiplicativity vs direct summation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = random_matrix(rng, 2);
      const Matrix b = random_matrix(rng, 2);
      const Operator prod = tensor_product(Operator(a, Dims{2}), Operator(b, Dims{2}));
      Complex trace_direct = 0.0;
      for (int i = 0; i < 4; ++i) trace_direct += prod.mat(i, i);
      const Complex expected = a.trace() * b.trace();
      CHECK(std::abs(trace_direct - expected) < 1e-12);
    }
  }

  SUBCASE("associativity up to dims bookkeeping") {
    std::mt19937_64 rng(12);
    const Operator a(random_matrix(rng, 2), Dims{2});
    const Operator b(random_matrix(rng, 3), Dims{3});
    const Operator c(random_matrix(rng, 2), Dims{2});
    const Operator left = tensor_product(tensor_product(a, b), c);
    const Operator right = tensor_product(a, tensor_product(b, c));
    CHECK(max_diff(left.mat, right.mat) < 1e-14);
    CHECK(left.dims == Dims{2, 3, 2});
  }
}

TEST_CASE("partial trace") {
  SUBCASE("Bell state marginal is maximally mixed") {
    const Operator traced = partial_trace(bell_projector(), {1});
    CHECK(max_diff(traced.mat, 0.5 * Matrix::Identity(2, 2)) < 1e-15);
  }

  SUBCASE("product factorization") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      const Operator rho1(random_matrix(rng, 2), Dims{2});
      const Operator rho2(random_matrix(rng, 3), Dims{3});
      const Operator prod = tensor_product(rho1, rho2);
      const Operator traced = partial_trace(prod, {1});
      CHECK(max_diff(traced.mat, rho2.trace() * rho1.mat) < 1e-12);
    }
  }

  SUBCASE("3-qubit trace over {1,3} matches quadruple-loop oracle") {
    std::mt19937_64 rng(14);
    const Operator rho = random_density(rng, Dims{2, 2, 2});
    const Operator traced = partial_trace(rho, {2});
    CHECK(max_diff(traced.mat, ptrace_13_naive(rho.mat)) < 1e-14);
  }

  SUBCASE("keep everything / keep nothing") {
    std::mt19937_64 rng(15);
    const Operator rho = random_density(rng, Dims{2, 3});
    const Operator all = partial_trace(rho, SubsystemSet::full(2));
    CHECK(max_diff(all.mat, rho.mat) == 0.0);
    const Operator none = partial_trace(rho, {});
    CHECK(none.side() == 1);
    CHECK(std::abs(none.mat(0, 0) - rho.trace()) < 1e-14);
  }

  SUBCASE("trace preservation") {
    std::mt19937_64 rng(16);
    const Operator rho = random_density(rng, Dims{2, 2, 3});
    for (const auto& keep : {SubsystemSet{1}, SubsystemSet{3}, SubsystemSet{1, 3}}) {
      CHECK(std::abs(partial_trace(rho, keep).trace() - rho.trace()) < 1e-13);
    }
  }

  SUBCASE("index out of range") {
    std::mt19937_64 rng(17);
    const Operator rho = random_density(rng, Dims{2, 2});
    CHECK_THROWS_AS(partial_trace(rho, {3}), SubsystemError);
  }
}

TEST_CASE("pad_with_identity") {
  std::mt19937_64 rng(18);

  SUBCASE("single system to the left") {
    const Operator rho1 = random_density(rng, Dims{2});
    const Operator padded = pad_with_identity(rho1, Dims{2, 2, 2}, {1});
    const Operator expected =
        tensor_product(tensor_product(rho1, identity_operator(Dims{2})), identity_operator(Dims{2}));
    CHECK(max_diff(padded.mat, expected.mat) == 0.0);
  }

  SUBCASE("contiguous placement {2,3}") {
    const Operator sigma = random_density(rng, Dims{2, 2});
    const Operator padded = pad_with_identity(sigma, Dims{2, 2, 2}, {2, 3});
    const Operator expected = tensor_product(identity_operator(Dims{2}), sigma);
    CHECK(max_diff(padded.mat, expected.mat) == 0.0);
  }

  SUBCASE("non-contiguous placement {1,3}: tracing system 2 rescales") {
    const Operator sigma = random_density(rng, Dims{2, 2});
    const Operator padded = pad_with_identity(sigma, Dims{2, 2, 2}, {1, 3});
    const Operator traced = partial_trace(padded, {1, 3});
    CHECK(max_diff(traced.mat, 2.0 * sigma.mat) < 1e-13);
  }

  SUBCASE("pad then trace recovers a multiple, all placements") {
    const Dims dims{2, 3, 2};
    for (const auto& placement :
         {SubsystemSet{1}, SubsystemSet{2}, SubsystemSet{3}, SubsystemSet{1, 2},
          SubsystemSet{1, 3}, SubsystemSet{2, 3}, SubsystemSet{1, 2, 3}}) {
      std::vector<int> local;
      for (int s : placement.indices()) local.push_back(dims.dim(s));
      const Operator sigma = random_density(rng, Dims{local});
      const Operator padded = pad_with_identity(sigma, dims, placement);
      const SubsystemSet complement = placement.complement(3);
      long long rest = 1;
      for (int s : complement.indices()) rest *= dims.dim(s);
      CHECK(max_diff(partial_trace(padded, placement).mat,
                     static_cast<double>(rest) * sigma.mat) < 1e-12);
    }
  }

  SUBCASE("dimension mismatch") {
    const Operator sigma = random_density(rng, Dims{3});
    CHECK_THROWS_AS(pad_with_identity(sigma, Dims{2, 2}, {1}), ShapeError);
  }
}

TEST_CASE("partial transpose") {
  SUBCASE("Bell projector over system 2 gives half the swap") {
    const Operator pt = partial_transpose(bell_projector(), {2});
    const Operator swap = permutation_operator({2, 1}, 2);
    CHECK(max_diff(pt.mat, 0.5 * swap.mat) < 1e-15);
    CHECK(max_diff(pt.mat, pt2_naive(bell_projector().mat)) == 0.0);
  }

  SUBCASE("empty subset and full transpose") {
    std::mt19937_64 rng(19);
    const Operator rho = random_density(rng, Dims{2, 3});
    CHECK(max_diff(partial_transpose(rho, {}).mat, rho.mat) == 0.0);
    CHECK(max_diff(partial_transpose(rho, {1, 2}).mat, rho.mat.transpose()) == 0.0);
  }

  SUBCASE("involution and disjoint commutation") {
    std::mt19937_64 rng(20);
    const Operator rho = random_density(rng, Dims{2, 2, 3});
    const Operator twice = partial_transpose(partial_transpose(rho, {2}), {2});
    CHECK(max_diff(twice.mat, rho.mat) == 0.0);
    const Operator ab = partial_transpose(partial_transpose(rho, {1}), {3});
    const Operator ba = partial_transpose(partial_transpose(rho, {3}), {1});
    CHECK(max_diff(ab.mat, ba.mat) == 0.0);
  }

  SUBCASE("invalid subset") {
    std::mt19937_64 rng(21);
    const Operator rho = random_density(rng, Dims{2});
    CHECK_THROWS_AS(partial_transpose(rho, {2}), SubsystemError);
  }
}

TEST_CASE("permutation operators") {
  SUBCASE("two-qubit swap matrix") {
    const Operator v = permutation_operator({2, 1}, 2);
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 1.0;
    expected(1, 2) = expected(2, 1) = 1.0;
    CHECK(max_diff(v.mat, expected) == 0.0);
  }

  SUBCASE("swap eigenvalues are +-1") {
    for (int d : {2, 3}) {
      const auto eigs = eigenvalues_hermitian(permutation_operator({2, 1}, d));
      for (double e : eigs) CHECK(std::min(std::abs(e - 1.0), std::abs(e + 1.0)) < 1e-12);
    }
  }

  SUBCASE("three-cycle cubes to identity, d=3") {
    const Operator v = permutation_operator({2, 3, 1}, 3);
    const Matrix cubed = v.mat * v.mat * v.mat;
    CHECK(max_diff(cubed, Matrix::Identity(27, 27)) == 0.0);
  }

  SUBCASE("composition and unitarity") {
    const std::vector<std::vector<int>> s3 = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1},
                                              {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& pi : s3) {
      const Operator v = permutation_operator(pi, 2);
      CHECK(max_diff(v.mat * v.mat.adjoint(), Matrix::Identity(8, 8)) == 0.0);
      for (const auto& sigma : s3) {
        std::vector<int> composed(3);
        for (int k = 0; k < 3; ++k) composed[k] = pi[static_cast<size_t>(sigma[static_cast<size_t>(k)] - 1)];
        const Operator lhs(permutation_operator(pi, 2).mat * permutation_operator(sigma, 2).mat,
                           Dims{2, 2, 2});
        CHECK(max_diff(lhs.mat, permutation_operator(composed, 2).mat) == 0.0);
      }
    }
    CHECK(max_diff(permutation_operator({1, 2}, 3).mat, Matrix::Identity(9, 9)) == 0.0);
  }

  SUBCASE("spectrum invariant under permutation conjugation") {
    std::mt19937_64 rng(23);
    const Operator h = random_hermitian(rng, Dims{2, 2, 2});
    const Operator v = permutation_operator({3, 1, 2}, 2);
    const Operator conj(v.mat * h.mat * v.mat.adjoint(), h.dims);
    const auto a = eigenvalues_hermitian(h);
    const auto b = eigenvalues_hermitian(conj);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  }

  SUBCASE("reorder_systems agrees with unitary conjugation") {
    std::mt19937_64 rng(24);
    const Operator x = random_hermitian(rng, Dims{2, 3, 2});
    const std::vector<int> order = {3, 1, 2};
    const Operator direct = reorder_systems(x, order);
    const Operator p = system_reorder_unitary(x.dims, order);
    CHECK(max_diff(direct.mat, p.mat * x.mat * p.mat.adjoint()) < 1e-14);
    CHECK(direct.dims == Dims{2, 2, 3});
  }
}

TEST_CASE("hermitian eigenvalues") {
  SUBCASE("reduction witness of the Bell state") {
    Operator witness(0.5 * Matrix::Identity(4, 4) - bell_projector().mat, Dims{2, 2});
    const auto eigs = eigenvalues_hermitian(witness);
    CHECK(eigs[0] == doctest::Approx(-0.5).epsilon(1e-14));
    for (int k = 1; k < 4; ++k) CHECK(eigs[static_cast<size_t>(k)] == doctest::Approx(0.5).epsilon(1e-14));
  }

  SUBCASE("diagonal matrix sorts ascending") {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = 3.0;
    m(1, 1) = 1.0;
    m(2, 2) = 2.0;
    const auto eigs = eigenvalues_hermitian(Operator(m, Dims{3}));
    CHECK(eigs == std::vector<double>{1.0, 2.0, 3.0});
  }

  SUBCASE("2x2 spectra match the quadratic formula") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 50; ++trial) {
      const Operator h = random_hermitian(rng, Dims{2});
      const auto eigs = eigenvalues_hermitian(h);
      const auto expected = eig2x2(h.mat);
      CHECK(eigs[0] == doctest::Approx(expected[0]).epsilon(1e-12));
      CHECK(eigs[1] == doctest::Approx(expected[1]).epsilon(1e-12));
    }
  }

  SUBCASE("eigenvalue sum equals trace") {
    std::mt19937_64 rng(26);
    for (const Dims& dims : {Dims{4}, Dims{2, 3}, Dims{2, 2, 2}}) {
      const Operator h = random_hermitian(rng, dims);
      const auto eigs = eigenvalues_hermitian(h);
      double sum = 0.0;
      for (double e : eigs) sum += e;
      const double scale = std::max(1.0, h.mat.cwiseAbs().maxCoeff());
      CHECK(std::abs(sum - h.trace().real()) < 1e-9 * scale);
    }
  }

  SUBCASE("non-Hermitian input is rejected, small drift tolerated") {
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(eigenvalues_hermitian(Operator(bad, Dims{2})), HermiticityError);

    Matrix drift = Matrix::Identity(2, 2);
    drift(0, 1) = Complex(0.0, 1e-13);
    CHECK_NOTHROW(eigenvalues_hermitian(Operator(drift, Dims{2})));
  }

  SUBCASE("psd checks") {
    CHECK(is_psd(identity_operator(Dims{2, 2})));
    Operator witness(0.5 * Matrix::Identity(4, 4) - bell_projector().mat, Dims{2, 2});
    CHECK_FALSE(is_psd(witness, 1e-10));
    std::mt19937_64 rng(27);
    const Matrix g = random_matrix(rng, 4);
    CHECK(is_psd(Operator(g.adjoint() * g, Dims{4})));
  }
}

TEST_CASE("schmidt decomposition") {
  SUBCASE("Bell state coefficients") {
    CVector bell = CVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const auto sd = schmidt_decompose(bell, Dims{2, 2});
    REQUIRE(sd.rank() == 2);
    CHECK(sd.coefficients[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(sd.coefficients[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  }

  SUBCASE("product state has a single coefficient") {
    CVector v = CVector::Zero(4);
    v(0) = 1.0;
    const auto sd = schmidt_decompose(v, Dims{2, 2});
    REQUIRE(sd.rank() == 1);
    CHECK(sd.coefficients[0] == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("random vectors: norm, reconstruction, orthonormality") {
    std::mt19937_64 rng(28);
    for (const Dims& dims : {Dims{2, 3}, Dims{3, 2}, Dims{3, 3}}) {
      const CVector v = random_vector(rng, dims.total());
      const auto sd = schmidt_decompose(v, dims);
      double sumsq = 0.0;
      for (double c : sd.coefficients) {
        CHECK(c > 0.0);
        sumsq += c * c;
      }
      CHECK(sumsq == doctest::Approx(v.squaredNorm()).epsilon(1e-12));
      CHECK((sd.reconstruct(dims) - v).norm() < 1e-10);
      for (int i = 0; i < sd.rank(); ++i) {
        for (int j = 0; j < sd.rank(); ++j) {
          const Complex lip = sd.left[static_cast<size_t>(i)].dot(sd.left[static_cast<size_t>(j)]);
          const Complex rip = sd.right[static_cast<size_t>(i)].dot(sd.right[static_cast<size_t>(j)]);
          CHECK(std::abs(lip - (i == j ? 1.0 : 0.0)) < 1e-12);
          CHECK(std::abs(rip - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
      }
      // descending order
      for (size_t k = 1; k < sd.coefficients.size(); ++k) {
        CHECK(sd.coefficients[k - 1] >= sd.coefficients[k]);
      }
    }
  }

  SUBCASE("wrong dims length") {
    CVector v = CVector::Zero(8);
    CHECK_THROWS_AS(schmidt_decompose(v, Dims{2, 2, 2}), ShapeError);
  }
}

TEST_CASE("domain type validation") {
  CHECK_THROWS_AS(Dims{0}, ShapeError);
  CHECK_THROWS_AS(SubsystemSet({2, 2}), SubsystemError);
  CHECK_THROWS_AS(SubsystemSet({0}), SubsystemError);
  CHECK_THROWS_AS(Operator(Matrix::Zero(2, 3), Dims{2}), ShapeError);
  CHECK_THROWS_AS(Operator(Matrix::Zero(3, 3), Dims{2}), ShapeError);

  // density matrix invariants
  CHECK_NOTHROW(DensityMatrix(Operator(0.25 * Matrix::Identity(4, 4), Dims{2, 2})));
  CHECK_THROWS(DensityMatrix(Operator(Matrix::Identity(4, 4), Dims{2, 2})));  // trace 4
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS(DensityMatrix(Operator(neg, Dims{2})));
}
