// werner.cpp

#include "redmap/werner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include "redmap/reduction.hpp"

namespace redmap {

namespace {

constexpr double kLemmaTol = 1e-12;

ROperators build_r_operators(int d) {
  const Complex i_unit(0.0, 1.0);
  const auto v = [d](std::vector<int> pi) { return permutation_operator(pi, d).mat; };

  const Matrix id = v({1, 2, 3});
  const Matrix v12 = v({2, 1, 3});
  const Matrix v13 = v({3, 2, 1});
  const Matrix v23 = v({1, 3, 2});
  const Matrix v123 = v({2, 3, 1});  // 1->2, 2->3, 3->1
  const Matrix v132 = v({3, 1, 2});  // 1->3, 3->2, 2->1

  const Dims dims{d, d, d};
  return ROperators{
      Operator((id + v12 + v13 + v23 + v123 + v132) / 6.0, dims),
      Operator((id - v12 - v13 - v23 + v123 + v132) / 6.0, dims),
      Operator((2.0 * id - v123 - v132) / 3.0, dims),
      Operator((2.0 * v23 - v13 - v12) / 3.0, dims),
      Operator((v12 - v13) / std::sqrt(3.0), dims),
      Operator(i_unit / std::sqrt(3.0) * (v123 - v132), dims),
  };
}

}  // namespace

const ROperators& r_operators(int d) {
  if (d < 2) throw ParameterError("tripartite Werner operators need d >= 2");
  if (static_cast<long long>(d) * d * d > kDimCap) {
    throw ResourceError("tripartite operator side " + std::to_string((long long)d * d * d) +
                        " exceeds cap " + std::to_string(kDimCap));
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const ROperators>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    it = cache.emplace(d, std::make_unique<const ROperators>(build_r_operators(d))).first;
  }
  return *it->second;
}

Multiplicities multiplicities(int d) {
  const long long dl = d;
  return Multiplicities{
      dl * (dl * dl + 3 * dl + 2) / 6,
      dl * (dl * dl - 3 * dl + 2) / 6,
      dl * (dl * dl - 1) / 3,
  };
}

WernerExpectations expectations_from_coefficients(const WernerCoefficients& c, int d) {
  const Multiplicities nu = multiplicities(d);
  return WernerExpectations{
      c.c_plus * static_cast<double>(nu.nu_plus),
      c.c_minus * static_cast<double>(nu.nu_minus),
      2.0 * c.c0 * static_cast<double>(nu.nu0),
      2.0 * c.c1 * static_cast<double>(nu.nu0),
      2.0 * c.c2 * static_cast<double>(nu.nu0),
      2.0 * c.c3 * static_cast<double>(nu.nu0),
  };
}

bool is_valid_werner(const WernerExpectations& r) {
  if (r.r_plus < -kLemmaTol || r.r_minus < -kLemmaTol || r.r0 < -kLemmaTol) return false;
  if (std::abs(r.r_plus + r.r_minus + r.r0 - 1.0) > kLemmaTol) return false;
  return r.r1 * r.r1 + r.r2 * r.r2 + r.r3 * r.r3 <= r.r0 * r.r0 + kLemmaTol;
}

double AnalyticSpectrum::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& line : lines) {
    if (!line.suppressed) m = std::min(m, line.value);
  }
  return m;
}

std::vector<double> AnalyticSpectrum::expand_sorted() const {
  std::vector<double> out;
  for (const auto& line : lines) {
    if (line.suppressed) continue;
    out.insert(out.end(), static_cast<size_t>(line.multiplicity), line.value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long AnalyticSpectrum::total_multiplicity() const {
  long long sum = 0;
  for (const auto& line : lines) {
    if (!line.suppressed) sum += line.multiplicity;
  }
  return sum;
}

AnalyticSpectrum spectrum_from_coefficients(const WernerCoefficients& c, int d) {
  const Multiplicities nu = multiplicities(d);
  const double radius = std::sqrt(c.c1 * c.c1 + c.c2 * c.c2 + c.c3 * c.c3);
  AnalyticSpectrum spec;
  spec.lines = {
      {c.c_plus, nu.nu_plus, nu.nu_plus == 0},
      {c.c_minus, nu.nu_minus, nu.nu_minus == 0},
      {c.c0 + radius, nu.nu0, nu.nu0 == 0},
      {c.c0 - radius, nu.nu0, nu.nu0 == 0},
  };
  return spec;
}

Operator werner_operator(const WernerCoefficients& c, int d) {
  const ROperators& r = r_operators(d);
  Matrix m = c.c_plus * r.r_plus.mat + c.c_minus * r.r_minus.mat + c.c0 * r.r0.mat +
             c.c1 * r.r1.mat + c.c2 * r.r2.mat + c.c3 * r.r3.mat;
  return Operator(std::move(m), r.r_plus.dims);
}

double family_normalization(int d, double a) {
  return d * (d + 1) * (3.0 * a * (2.0 - d) + 4.0 * (d - 1)) / 6.0;
}

namespace {

WernerCoefficients family_coefficients(const FamilyParams& p) {
  const double n = family_normalization(p.d, p.a);
  return WernerCoefficients{p.a / n, 0.0, (1.0 - p.a) / n, p.b / n, 0.0, 0.0};
}

void validate_family(const FamilyParams& p) {
  if (p.d < 2) throw ParameterError("family requires d >= 2");
  if (p.a < 0.0 || p.a > 1.0) throw ParameterError("family requires 0 <= a <= 1");
  if (std::abs(p.b) > p.a) throw ParameterError("family requires |b| <= a");
}

}  // namespace

Operator family_operator_unchecked(const FamilyParams& p) {
  if (p.d < 2) throw ParameterError("family requires d >= 2");
  return werner_operator(family_coefficients(p), p.d);
}

DensityMatrix family_state(const FamilyParams& p) {
  validate_family(p);
  // The spectrum contains ((1-a) - |b|)/N, so |b| <= 1-a is required for an
  // actual state; the coefficient algebra stays valid on the wider |b| <= a
  // wedge (family_operator_unchecked covers it).
  if (std::abs(p.b) > 1.0 - p.a + 1e-12) {
    throw ParameterError("family parameters give a non-positive operator (need |b| <= 1-a)");
  }
  return DensityMatrix(family_operator_unchecked(p));
}

FamilyExpansions family_reduction_expansions(const FamilyParams& p) {
  validate_family(p);
  const double a = p.a, b = p.b, d = p.d;
  const double n = family_normalization(p.d, p.a);

  // rho_12 - rho
  WernerCoefficients red1;
  red1.c_plus = (d - 1.0) * (2.0 - a - b) / (3.0 * n);
  red1.c_minus = (d + 1.0) * (2.0 - 2.0 * a + b) / (3.0 * n);
  red1.c0 = (a * (d + 2.0) + (1.0 - a) * (4.0 * d - 6.0) + 2.0 * b) / (6.0 * n);
  red1.c1 = -(a * (d + 2.0) - 4.0 * (1.0 - a) + b * (12.0 - 2.0 * d)) / (12.0 * n);
  red1.c2 = std::sqrt(3.0) * (a * (d + 2.0) - 4.0 * (1.0 - a) - 2.0 * b * d) / (12.0 * n);
  red1.c3 = 0.0;

  // rho_1 - rho_12 - rho_13 + rho. The R- and R1 coefficients carry sign
  // corrections fixed against the dense route (see README, analytic spectra
  // notes); reconstruction is exact for d = 2..6.
  WernerCoefficients red2;
  red2.c_plus = (a * ((d + 2.0) * (d - 3.0) + 6.0) + 4.0 * (1.0 - a) * (d - 1.0) * (d - 1.0) +
                 4.0 * b * (d - 1.0)) /
                (6.0 * n);
  red2.c_minus = (a * (d + 1.0) * (d + 2.0) + 4.0 * (1.0 - a) * (d + 1.0) * (d - 3.0) -
                  4.0 * b * (d + 1.0)) /
                 (6.0 * n);
  red2.c0 = (a * (d - 1.0) * (d + 2.0) +
             (1.0 - a) * (4.0 * (d - 1.0) * (d + 1.0) - 8.0 * d + 6.0) - 4.0 * b) /
            (6.0 * n);
  red2.c1 = (a * (d + 2.0) - 4.0 * (1.0 - a) + b * (6.0 - 2.0 * d)) / (6.0 * n);
  red2.c2 = 0.0;
  red2.c3 = 0.0;

  return FamilyExpansions{red1, red2};
}

AnalyticSpectrum analytic_eigs_red1(const FamilyParams& p) {
  return spectrum_from_coefficients(family_reduction_expansions(p).red1, p.d);
}

AnalyticSpectrum analytic_eigs_red2(const FamilyParams& p) {
  return spectrum_from_coefficients(family_reduction_expansions(p).red2, p.d);
}

bool symmetry_check_red13(const FamilyParams& p) {
  validate_family(p);
  const Operator rho = family_operator_unchecked(p);
  const auto eigs_12 = eigenvalues_hermitian(apply_reduction_on_subset(rho, {3}));
  const auto eigs_13 = eigenvalues_hermitian(apply_reduction_on_subset(rho, {2}));
  for (size_t k = 0; k < eigs_12.size(); ++k) {
    if (std::abs(eigs_12[k] - eigs_13[k]) > 1e-10) return false;
  }
  return true;
}

}  // namespace redmap
