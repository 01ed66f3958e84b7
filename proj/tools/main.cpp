// main.cpp
// redmap command-line frontend: detection-region scans over the tripartite
// Werner family, single-state subset checks, and marginal-compatibility
// checks. Exit codes: 0 no detection / success, 1 detection found (or scan
// consistency failure), 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "redmap/reduction.hpp"
#include "redmap/scan.hpp"
#include "redmap/state_io.hpp"
#include "redmap/tensor.hpp"

namespace {

using namespace redmap;

std::string subset_label(const SubsystemSet& s) {
  std::ostringstream oss;
  oss << '{';
  for (size_t i = 0; i < s.indices().size(); ++i) oss << (i ? "," : "") << s.indices()[i];
  oss << '}';
  return oss.str();
}

std::vector<SubsystemSet> parse_subsets(const std::vector<std::string>& specs) {
  std::vector<SubsystemSet> out;
  for (const auto& spec : specs) {
    std::vector<int> indices;
    std::istringstream iss(spec);
    std::string token;
    while (std::getline(iss, token, ',')) {
      try {
        indices.push_back(std::stoi(token));
      } catch (const std::exception&) {
        throw ParseError("bad subset '" + spec + "'");
      }
    }
    out.emplace_back(std::move(indices));
  }
  return out;
}

std::vector<SubsystemSet> all_nonempty_subsets(int n) {
  std::vector<SubsystemSet> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> v;
    for (int k = 1; k <= n; ++k) {
      if (mask & (1u << (k - 1))) v.push_back(k);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

int run_scan(const ScanConfig& config, const std::string& out_path) {
  const ScanResult result = scan(config);
  write_scan_csv_file(out_path, result);
  std::cout << scan_summary(result);
  std::cout << "wrote " << out_path << "\n";
  return (result.box_violations > 0 || result.dense_mismatches > 0) ? 1 : 0;
}

int run_check(const std::string& state_path, const std::vector<std::string>& subset_specs,
              double tol) {
  const Operator op = read_operator_file(state_path);
  const DensityMatrix rho(op);

  std::vector<SubsystemSet> subsets = parse_subsets(subset_specs);
  if (subsets.empty()) subsets = all_nonempty_subsets(rho.dims().count());

  int detections = 0;
  for (const auto& subset : subsets) {
    const DetectionResult r = detect(rho, subset, tol);
    std::cout << "subset " << subset_label(subset) << ": min_eig=" << format_double(r.min_eigenvalue)
              << " detected=" << (r.detected ? "yes" : "no") << "\n";
    if (r.detected) ++detections;
  }
  std::cout << "verdict: " << (detections ? "entangled" : "not detected") << " (" << detections
            << " of " << subsets.size() << " subsets detect)\n";
  return detections ? 1 : 0;
}

int run_check_marginals(const std::string& path, double tol) {
  const MarginalSet marginals = read_marginals_path(path);
  std::cout << "n=" << marginals.parties() << " dims";
  for (int d : marginals.dims().vec()) std::cout << ' ' << d;
  std::cout << "\n";
  for (const auto& warning : marginals.consistency_warnings()) {
    std::cout << "warning: " << warning << "\n";
  }
  const DetectionResult r = marginal_compatibility_check(marginals, tol);
  std::cout << "min_eig=" << format_double(r.min_eigenvalue) << "\n";
  std::cout << "verdict: " << (r.detected ? "incompatible" : "compatible") << "\n";
  return r.detected ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite reduction criteria: Werner-family detection scans, "
               "state checks, and marginal-compatibility checks"};
  app.require_subcommand(1);

  // scan
  ScanConfig config;
  std::string out_path;
  std::vector<double> box_values;
  auto* scan_cmd = app.add_subcommand("scan", "Classify the (a,b) grid of the d-dimensional "
                                              "tripartite Werner family and write a CSV");
  scan_cmd->add_option("--d", config.d, "local dimension")->required();
  scan_cmd->add_option("--a-steps", config.a_steps, "grid points over a in [0,1]")->required();
  scan_cmd->add_option("--b-steps", config.b_steps, "grid points over b in [-1,1]")->required();
  scan_cmd->add_option("--tol", config.tol, "detection tolerance");
  scan_cmd->add_flag("--verify-dense", config.verify_dense,
                     "cross-check the closed-form classification against dense spectra");
  scan_cmd->add_flag("--all-cuts", config.all_cuts,
                     "also evaluate the map on system 1 and on {1,2}, {1,3} "
                     "(dense; extra CSV columns)");
  scan_cmd->add_option("--box", box_values, "biseparable box a_min,a_max,b_min,b_max")
      ->delimiter(',')->expected(4);
  scan_cmd->add_option("--threads", config.threads, "worker threads (output is order-stable)");
  scan_cmd->add_option("--out", out_path, "output CSV path")->required();

  // check
  std::string state_path;
  std::vector<std::string> subset_specs;
  double check_tol = kPsdTol;
  auto* check_cmd = app.add_subcommand("check", "Run the subset reduction criteria on a state file");
  check_cmd->add_option("--state", state_path, "state file")->required();
  check_cmd->add_option("--subset", subset_specs,
                        "comma-separated subsystem subset (repeatable; default: all nonempty subsets)");
  check_cmd->add_option("--tol", check_tol, "detection tolerance");

  // check-marginals
  std::string marginals_path;
  double marginals_tol = kPsdTol;
  auto* marg_cmd = app.add_subcommand("check-marginals",
                                      "Test a set of proper-subset marginals for compatibility "
                                      "with any global state (odd n)");
  marg_cmd->add_option("--dir", marginals_path, "marginal stream file or directory of blocks")
      ->required();
  marg_cmd->add_option("--tol", marginals_tol, "detection tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan_cmd->parsed()) {
      if (!box_values.empty()) {
        config.box = {box_values[0], box_values[1], box_values[2], box_values[3]};
      }
      return run_scan(config, out_path);
    }
    if (check_cmd->parsed()) return run_check(state_path, subset_specs, check_tol);
    if (marg_cmd->parsed()) return run_check_marginals(marginals_path, marginals_tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
