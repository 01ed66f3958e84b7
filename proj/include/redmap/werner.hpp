// werner.hpp
// Tripartite Werner states on (C^d)^(x)3: the six R-basis operators built
// from S3 permutation representation theory, the density-matrix
// characterization in terms of R-expectations, the two-parameter family
// rho(a, b, d), and closed-form spectra of the two reduction operators
// rho_12 - rho and rho_1 - rho_12 - rho_13 + rho.

#pragma once

#include <array>
#include <vector>

#include "redmap/tensor.hpp"

namespace redmap {

// Coefficients in rho = c+ R+ + c- R- + c0 R0 + c1 R1 + c2 R2 + c3 R3.
struct WernerCoefficients {
  double c_plus = 0.0;
  double c_minus = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

// Expectations r_k = Tr(rho R_k).
struct WernerExpectations {
  double r_plus = 0.0;
  double r_minus = 0.0;
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
};

// Dimensions of the S3 isotypic subspaces: trivial, alternating, and the
// two-dimensional representation (which appears with multiplicity nu0).
struct Multiplicities {
  long long nu_plus = 0;
  long long nu_minus = 0;
  long long nu0 = 0;
};

// Parameters of the family rho = (1/N)(a R+ + (1-a) R0 + b R1).
// Valid region: d >= 2, 0 <= a <= 1, |b| <= a.
struct FamilyParams {
  int d;
  double a;
  double b;
};

// One eigenvalue with its multiplicity. `suppressed` marks entries whose
// multiplicity vanishes (the antisymmetric subspace is empty at d = 2); the
// closed-form value is still reported for formula regression.
struct SpectralLine {
  double value;
  long long multiplicity;
  bool suppressed;
};

struct AnalyticSpectrum {
  std::vector<SpectralLine> lines;

  // Smallest eigenvalue among non-suppressed lines.
  double min_value() const;
  // Eigenvalues expanded by multiplicity, ascending; suppressed lines omitted.
  std::vector<double> expand_sorted() const;
  long long total_multiplicity() const;
};

struct ROperators {
  Operator r_plus, r_minus, r0, r1, r2, r3;
};

// The six R operators on (C^d)^(x)3. Cached per d behind a mutex; the
// returned reference stays valid for the program lifetime. Rejects d < 2.
const ROperators& r_operators(int d);

// nu+ = d(d^2+3d+2)/6, nu- = d(d^2-3d+2)/6, nu0 = d(d^2-1)/3.
Multiplicities multiplicities(int d);

// r+ = c+ nu+, r- = c- nu-, r_i = 2 c_i nu0 for i in {0,1,2,3}.
WernerExpectations expectations_from_coefficients(const WernerCoefficients& c, int d);

// Density-matrix characterization: r+, r-, r0 >= 0, r+ + r- + r0 = 1 and
// r1^2 + r2^2 + r3^2 <= r0^2, each with 1e-12 slack at the boundary.
bool is_valid_werner(const WernerExpectations& r);

// Eigenvalues of sum_k c_k R_k: c+ (nu+), c- (nu-), c0 +- sqrt(c1^2+c2^2+c3^2)
// (nu0 each). Zero-multiplicity entries are flagged suppressed.
AnalyticSpectrum spectrum_from_coefficients(const WernerCoefficients& c, int d);

// Dense matrix sum_k c_k R_k.
Operator werner_operator(const WernerCoefficients& c, int d);

// Closed-form normalization N = (1/6) d (d+1) (3a(2-d) + 4(d-1)).
double family_normalization(int d, double a);

// The possibly-unnormalized, possibly-invalid family operator
// a R+ + (1-a) R0 + b R1 divided by N; no validity checks.
Operator family_operator_unchecked(const FamilyParams& p);

// The family state; throws ParameterError outside d >= 2, 0 <= a <= 1, |b| <= a.
DensityMatrix family_state(const FamilyParams& p);

// R-basis expansions of the two reduction operators of the family.
struct FamilyExpansions {
  WernerCoefficients red1;  // rho_12 - rho
  WernerCoefficients red2;  // rho_1 - rho_12 - rho_13 + rho
};
FamilyExpansions family_reduction_expansions(const FamilyParams& p);

// Closed-form spectra of the two reduction operators, via the expansion route.
AnalyticSpectrum analytic_eigs_red1(const FamilyParams& p);
AnalyticSpectrum analytic_eigs_red2(const FamilyParams& p);

// True iff rho_12 - rho and rho_13 - rho have identical sorted spectra
// within 1e-10 (dense comparison).
bool symmetry_check_red13(const FamilyParams& p);

}  // namespace redmap
