#include "locdim/graph6.hpp"

#include <fstream>
#include <sstream>

namespace locdim {

namespace {

constexpr int kLo = 63;
constexpr int kHi = 126;

int byte_value(unsigned char c, const std::string& token) {
    if (c < kLo || c > kHi)
        throw Graph6Error("graph6: byte " + std::to_string(static_cast<int>(c)) +
                          " outside printable range in \"" + token + "\"");
    return c - kLo;
}

}  // namespace

Graph decode_graph6(const std::string& token) {
    if (token.empty()) throw Graph6Error("graph6: empty token");
    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(token[0]) == 126) {
        if (token.size() >= 2 && static_cast<unsigned char>(token[1]) == 126)
            throw Graph6Error("graph6: 8-byte order form not supported");
        if (token.size() < 4) throw Graph6Error("graph6: truncated long-form header");
        n = 0;
        for (pos = 1; pos <= 3; ++pos)
            n = (n << 6) | byte_value(static_cast<unsigned char>(token[pos]), token);
        if (n < 63) throw Graph6Error("graph6: long-form header for order < 63");
    } else {
        n = byte_value(static_cast<unsigned char>(token[0]), token);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw Graph6Error("graph6: order " + std::to_string(n) + " outside supported range [1, " +
                          std::to_string(kMaxVertices) + "]");

    long needed = n * (n - 1) / 2;
    long chars = (needed + 5) / 6;
    if (static_cast<long>(token.size()) - static_cast<long>(pos) < chars)
        throw Graph6Error("graph6: payload too short in \"" + token + "\"");
    if (static_cast<long>(token.size()) - static_cast<long>(pos) > chars)
        throw Graph6Error("graph6: trailing bytes after payload in \"" + token + "\"");

    GraphBuilder b(static_cast<int>(n));
    long idx = 0;  // bit index over the upper triangle
    int i = 0, j = 1;
    for (long c = 0; c < chars; ++c) {
        int val = byte_value(static_cast<unsigned char>(token[pos + static_cast<std::size_t>(c)]), token);
        for (int k = 5; k >= 0; --k, ++idx) {
            int b6 = (val >> k) & 1;
            if (idx >= needed) {
                if (b6) throw Graph6Error("graph6: nonzero padding bits in \"" + token + "\"");
                continue;
            }
            if (b6) b.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return b.take();
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(n + kLo));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kLo));
        out.push_back(static_cast<char>((n & 0x3f) + kLo));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | static_cast<int>(g.adjacent(i, j));
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kLo));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kLo));
    return out;
}

std::vector<CorpusLine> read_graph6_lines(std::istream& in) {
    std::vector<CorpusLine> out;
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(CorpusLine{line_number, line});
    }
    return out;
}

std::vector<CorpusLine> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return read_graph6_lines(in);
}

}  // namespace locdim
