#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

// graph6 interchange format: header byte 63+n for n < 63, '~' + 3 bytes for
// larger orders, then the upper triangle in column order (0,1),(0,2),(1,2),
// (0,3),... packed into 6-bit groups, each +63, zero-padded.
//
// decode rejects anything a conforming writer would not emit (bad header
// bytes, short payloads, trailing bytes, nonzero padding), so
// encode(decode(s)) == s on every accepted token.

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph decode_graph6(const std::string& token);
std::string encode_graph6(const Graph& g);

struct CorpusLine {
    long line_number;
    std::string token;
};

// One token per line; a leading ">>graph6<<" header and blank lines are
// skipped. Tokens are not decoded here, so malformed lines surface at the
// caller with their line number.
std::vector<CorpusLine> read_graph6_lines(std::istream& in);
std::vector<CorpusLine> read_graph6_file(const std::string& path);

}  // namespace locdim
