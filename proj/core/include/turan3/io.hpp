#pragma once

#include <iosfwd>
#include <string>

#include "turan3/hypergraph.hpp"

namespace turan3 {

// ".hg3" text format:
//   hg3 n=<N> m=<M>
//   u v w          (M lines, 0 <= u < v < w < N, sorted colex)
// '#' starts a comment line. Round trips bit-exactly.

void write_hg3(const Hypergraph3& h, std::ostream& out);
std::string to_hg3(const Hypergraph3& h);

Hypergraph3 read_hg3(std::istream& in);
Hypergraph3 parse_hg3(const std::string& text);

Hypergraph3 load_hg3_file(const std::string& path);
void save_hg3_file(const Hypergraph3& h, const std::string& path);

} // namespace turan3
