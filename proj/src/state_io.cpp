// state_io.cpp

#include "redmap/state_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace redmap {

namespace {

namespace fs = std::filesystem;

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::istringstream iss(text);
  std::vector<int> out;
  int value;
  while (iss >> value) out.push_back(value);
  std::string leftover;
  if (iss.clear(), iss >> leftover) {
    throw ParseError("malformed " + what + " list: '" + text + "'");
  }
  if (out.empty()) throw ParseError("empty " + what + " list");
  return out;
}

// One re+imj token, e.g. "0.5+0.0j", "-1.25e-3-2j".
Complex parse_complex(const std::string& token) {
  if (token.empty() || token.back() != 'j') {
    throw ParseError("matrix entry '" + token + "' does not end in j");
  }
  const std::string body = token.substr(0, token.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign
  // and not the leading sign.
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    throw ParseError("matrix entry '" + token + "' has no imaginary part");
  }
  try {
    size_t used = 0;
    const double re = std::stod(body.substr(0, split), &used);
    if (used != split) throw ParseError("");
    const std::string im_text = body.substr(split);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw ParseError("");
    return Complex(re, im);
  } catch (const std::exception&) {
    throw ParseError("cannot parse matrix entry '" + token + "'");
  }
}

// Reads "dims:" line plus matrix rows from `in`.
Operator read_operator_block(std::istream& in, const std::string& context) {
  std::string line;
  while (std::getline(in, line)) {
    if (!strip(line).empty()) break;
  }
  const std::string header = strip(line);
  if (header.rfind("dims:", 0) != 0) {
    throw ParseError(context + ": expected 'dims:' line, got '" + header + "'");
  }
  const Dims dims{parse_int_list(header.substr(5), "dims")};
  const long long side = dims.total();

  Matrix m(side, side);
  for (long long r = 0; r < side; ++r) {
    std::string row_line;
    do {
      if (!std::getline(in, row_line)) {
        throw ParseError(context + ": matrix ends after " + std::to_string(r) + " rows, need " +
                         std::to_string(side));
      }
    } while (strip(row_line).empty());
    std::istringstream iss(row_line);
    std::string token;
    long long c = 0;
    while (iss >> token) {
      if (c >= side) throw ParseError(context + ": row has more than " + std::to_string(side) + " entries");
      m(r, c++) = parse_complex(token);
    }
    if (c != side) {
      throw ParseError(context + ": row " + std::to_string(r) + " has " + std::to_string(c) +
                       " entries, need " + std::to_string(side));
    }
  }
  return Operator(std::move(m), dims);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) out += '+';
  out += format_double(z.imag());
  out += 'j';
  return out;
}

Operator read_operator(std::istream& in) {
  return read_operator_block(in, "state file");
}

Operator read_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_operator_block(in, path);
}

void write_operator(std::ostream& out, const Operator& op) {
  out << "dims:";
  for (int d : op.dims.vec()) out << ' ' << d;
  out << '\n';
  for (long long r = 0; r < op.side(); ++r) {
    for (long long c = 0; c < op.side(); ++c) {
      if (c) out << ' ';
      out << format_complex(op.mat(r, c));
    }
    out << '\n';
  }
}

void write_operator_file(const std::string& path, const Operator& op) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_operator(out, op);
}

void write_marginal_block(std::ostream& out, const SubsystemSet& subset, const Operator& op) {
  out << "subset:";
  for (int k : subset.indices()) out << ' ' << k;
  out << '\n';
  write_operator(out, op);
}

MarginalSet read_marginal_stream(std::istream& in) {
  int declared_n = 0;
  std::map<SubsystemSet, Operator> blocks;

  std::string line;
  while (std::getline(in, line)) {
    const std::string text = strip(line);
    if (text.empty()) continue;
    if (text.rfind("n:", 0) == 0) {
      const auto values = parse_int_list(text.substr(2), "n");
      if (values.size() != 1 || values[0] < 2) throw ParseError("bad 'n:' line");
      declared_n = values[0];
      continue;
    }
    if (text.rfind("subset:", 0) != 0) {
      throw ParseError("expected 'subset:' line, got '" + text + "'");
    }
    const SubsystemSet subset{parse_int_list(text.substr(7), "subset")};
    std::ostringstream name;
    name << "marginal block";
    for (int k : subset.indices()) name << ' ' << k;
    Operator op = read_operator_block(in, name.str());
    if (op.dims.count() != subset.size()) {
      throw ParseError(name.str() + ": dims count does not match subset size");
    }
    if (!blocks.emplace(subset, std::move(op)).second) {
      throw ParseError(name.str() + ": duplicate subset");
    }
  }
  if (blocks.empty()) throw ParseError("no marginal blocks found");

  int n = declared_n;
  if (n == 0) {
    for (const auto& [subset, op] : blocks) n = std::max(n, subset.indices().back());
  }

  // Full dims come from the single-party blocks.
  std::vector<int> dims(static_cast<size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    auto it = blocks.find(SubsystemSet{k});
    if (it == blocks.end()) {
      throw IncompleteInputError("missing single-party marginal for system " + std::to_string(k));
    }
    dims[static_cast<size_t>(k - 1)] = it->second.dims.dim(1);
  }
  return MarginalSet(Dims{dims}, std::move(blocks));
}

MarginalSet read_marginals_path(const std::string& path) {
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ParseError("directory '" + path + "' has no files");
    std::ostringstream merged;
    for (const auto& f : files) {
      std::ifstream in(f);
      if (!in) throw ParseError("cannot open '" + f.string() + "'");
      merged << in.rdbuf() << '\n';
    }
    std::istringstream stream(merged.str());
    return read_marginal_stream(stream);
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_marginal_stream(in);
}

}  // namespace redmap
