// scan.hpp
// (a, b) detection-region scan over the tripartite Werner family: classifies
// each grid point by which of the two reduction operators (rho_12 - rho and
// rho_1 - rho_12 - rho_13 + rho) has a negative eigenvalue, using the
// closed-form spectra, with an optional dense cross-check.

#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "redmap/werner.hpp"

namespace redmap {

enum class DetectionClass { Both, OnlyL2, OnlyL1, Neither };

const char* to_string(DetectionClass c);

struct ScanConfig {
  int d = 2;
  int a_steps = 201;      // grid over a in [0, 1]
  int b_steps = 401;      // grid over b in [-1, 1], clipped to |b| <= a
  double tol = kPsdTol;
  bool verify_dense = false;
  bool all_cuts = false;  // also evaluate rho_23 - rho and the other
                          // two-system placements (dense; beyond the two
                          // canonical operators)
  std::optional<std::array<double, 4>> box;  // a_min, a_max, b_min, b_max
  int threads = 1;
};

struct DetectionRecord {
  double a;
  double b;
  double min_eig_red1;
  double min_eig_red2;
  DetectionClass cls;
  // all_cuts extras: L1 on system 1, L2 on {1,2}, L2 on {1,3}.
  std::array<double, 3> extra_cuts{0.0, 0.0, 0.0};
};

struct ScanResult {
  ScanConfig config;
  std::vector<DetectionRecord> records;  // a-major, b ascending
  long long count_both = 0;
  long long count_only_l2 = 0;
  long long count_only_l1 = 0;
  long long count_neither = 0;
  long long skipped = 0;           // grid points with |b| > a
  long long box_violations = 0;    // points inside the box detected by L2
  long long dense_mismatches = 0;  // verify_dense class disagreements
};

// Throws ParameterError on invalid configuration (steps < 2, d < 2, ...).
// Grid points are independent; rows are evaluated concurrently when
// config.threads > 1 and records are emitted in canonical order regardless.
ScanResult scan(const ScanConfig& config);

// CSV with header a,b,min_eig_red1,min_eig_red2,class and 17-significant-
// digit floats; byte-identical across runs and thread counts.
void write_scan_csv(std::ostream& out, const ScanResult& result);
void write_scan_csv_file(const std::string& path, const ScanResult& result);

// One line per class count plus skip/violation/mismatch totals.
std::string scan_summary(const ScanResult& result);

}  // namespace redmap
