// state_io.hpp
// Text formats consumed by the CLI and produced by test fixtures.
//
// State files: line 1 is "dims: d1 d2 ... dn"; the matrix follows row-major,
// one row per line, entries as re+imj pairs separated by whitespace, e.g.
// "0.5+0.0j". The parser rejects non-square or dims-mismatched data.
//
// Marginal streams: an optional leading "n: <int>" line, then one block per
// proper subset, each a "subset: i j ..." line followed by a state-file
// payload. A directory is read as its regular files concatenated in name
// order. When the "n:" line is absent, n is inferred as the largest
// subsystem index mentioned.

#pragma once

#include <iosfwd>
#include <string>

#include "redmap/reduction.hpp"
#include "redmap/tensor.hpp"

namespace redmap {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);
std::string format_complex(Complex z);  // re+imj

Operator read_operator(std::istream& in);
Operator read_operator_file(const std::string& path);
void write_operator(std::ostream& out, const Operator& op);
void write_operator_file(const std::string& path, const Operator& op);

MarginalSet read_marginal_stream(std::istream& in);
// Accepts a file or a directory of block files.
MarginalSet read_marginals_path(const std::string& path);
void write_marginal_block(std::ostream& out, const SubsystemSet& subset, const Operator& op);

}  // namespace redmap
