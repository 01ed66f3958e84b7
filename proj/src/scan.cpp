// scan.cpp

#include "redmap/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "redmap/reduction.hpp"

namespace redmap {

namespace {

void validate_config(const ScanConfig& c) {
  if (c.d < 2) throw ParameterError("scan requires d >= 2");
  if (c.a_steps < 2 || c.b_steps < 2) throw ParameterError("scan requires steps >= 2");
  if (c.tol < 0.0) throw ParameterError("tolerance must be nonnegative");
  if (c.threads < 1) throw ParameterError("threads must be >= 1");
  if ((c.verify_dense || c.all_cuts) && static_cast<long long>(c.d) * c.d * c.d > kDimCap) {
    throw ParameterError("dense evaluation needs d^3 <= " + std::to_string(kDimCap) +
                         "; the closed-form path has no such limit");
  }
  if (c.box) {
    const auto& box = *c.box;
    if (box[0] > box[1] || box[2] > box[3]) {
      throw ParameterError("box corners must satisfy a_min <= a_max and b_min <= b_max");
    }
  }
}

DetectionClass classify(bool det1, bool det2) {
  if (det1 && det2) return DetectionClass::Both;
  if (det2) return DetectionClass::OnlyL2;
  if (det1) return DetectionClass::OnlyL1;
  return DetectionClass::Neither;
}

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct RowResult {
  std::vector<DetectionRecord> records;
  long long box_violations = 0;
  long long dense_mismatches = 0;
};

RowResult scan_row(const ScanConfig& c, int i) {
  RowResult row;
  const double a = static_cast<double>(i) / (c.a_steps - 1);
  for (int j = 0; j < c.b_steps; ++j) {
    const double b = -1.0 + 2.0 * static_cast<double>(j) / (c.b_steps - 1);
    if (std::abs(b) > a) continue;

    const FamilyParams p{c.d, a, b};
    DetectionRecord rec;
    rec.a = a;
    rec.b = b;
    rec.min_eig_red1 = analytic_eigs_red1(p).min_value();
    rec.min_eig_red2 = analytic_eigs_red2(p).min_value();
    const bool det1 = rec.min_eig_red1 < -c.tol;
    const bool det2 = rec.min_eig_red2 < -c.tol;
    rec.cls = classify(det1, det2);

    if (c.verify_dense || c.all_cuts) {
      const Operator rho = family_operator_unchecked(p);
      if (c.verify_dense) {
        const double dense1 = min_eigenvalue(apply_reduction_on_subset(rho, {3}));
        const double dense2 = min_eigenvalue(apply_reduction_on_subset(rho, {2, 3}));
        if (classify(dense1 < -c.tol, dense2 < -c.tol) != rec.cls) ++row.dense_mismatches;
      }
      if (c.all_cuts) {
        rec.extra_cuts = {
            min_eigenvalue(apply_reduction_on_subset(rho, {1})),
            min_eigenvalue(apply_reduction_on_subset(rho, {1, 2})),
            min_eigenvalue(apply_reduction_on_subset(rho, {1, 3})),
        };
      }
    }

    if (c.box) {
      const auto& box = *c.box;
      if (a >= box[0] && a <= box[1] && b >= box[2] && b <= box[3] && det2) {
        ++row.box_violations;
      }
    }
    row.records.push_back(rec);
  }
  return row;
}

}  // namespace

const char* to_string(DetectionClass c) {
  switch (c) {
    case DetectionClass::Both: return "BOTH";
    case DetectionClass::OnlyL2: return "ONLY_L2";
    case DetectionClass::OnlyL1: return "ONLY_L1";
    case DetectionClass::Neither: return "NEITHER";
  }
  return "?";
}

ScanResult scan(const ScanConfig& config) {
  validate_config(config);
  ScanResult result;
  result.config = config;

  std::vector<RowResult> rows(static_cast<size_t>(config.a_steps));
  const int workers = std::min(config.threads, config.a_steps);
  if (workers <= 1) {
    for (int i = 0; i < config.a_steps; ++i) rows[static_cast<size_t>(i)] = scan_row(config, i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < config.a_steps; i = next.fetch_add(1)) {
          rows[static_cast<size_t>(i)] = scan_row(config, i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& row : rows) {
    result.box_violations += row.box_violations;
    result.dense_mismatches += row.dense_mismatches;
    for (const auto& rec : row.records) {
      switch (rec.cls) {
        case DetectionClass::Both: ++result.count_both; break;
        case DetectionClass::OnlyL2: ++result.count_only_l2; break;
        case DetectionClass::OnlyL1: ++result.count_only_l1; break;
        case DetectionClass::Neither: ++result.count_neither; break;
      }
      result.records.push_back(rec);
    }
  }
  result.skipped = static_cast<long long>(config.a_steps) * config.b_steps -
                   static_cast<long long>(result.records.size());
  return result;
}

void write_scan_csv(std::ostream& out, const ScanResult& result) {
  out << "a,b,min_eig_red1,min_eig_red2,class";
  if (result.config.all_cuts) out << ",min_eig_l1_1,min_eig_l2_12,min_eig_l2_13";
  out << '\n';
  for (const auto& rec : result.records) {
    out << format_g17(rec.a) << ',' << format_g17(rec.b) << ',' << format_g17(rec.min_eig_red1)
        << ',' << format_g17(rec.min_eig_red2) << ',' << to_string(rec.cls);
    if (result.config.all_cuts) {
      for (double v : rec.extra_cuts) out << ',' << format_g17(v);
    }
    out << '\n';
  }
}

void write_scan_csv_file(const std::string& path, const ScanResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_scan_csv(out, result);
}

std::string scan_summary(const ScanResult& result) {
  std::ostringstream oss;
  oss << "points " << result.records.size() << " (skipped " << result.skipped << " outside |b| <= a)\n"
      << "BOTH " << result.count_both << "\n"
      << "ONLY_L2 " << result.count_only_l2 << "\n"
      << "ONLY_L1 " << result.count_only_l1 << "\n"
      << "NEITHER " << result.count_neither << "\n";
  if (result.config.box) oss << "box violations " << result.box_violations << "\n";
  if (result.config.verify_dense) oss << "dense mismatches " << result.dense_mismatches << "\n";
  return oss.str();
}

}  // namespace redmap
