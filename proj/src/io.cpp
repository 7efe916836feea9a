#include "msetdim/io.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "msetdim/errors.hpp"

namespace msetdim {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
}

long long read_size(std::string_view s, std::size_t& pos) {
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw ParseError("graph6: truncated size field");
        int c = static_cast<unsigned char>(s[i]);
        if (c < kBias || c > 126) throw ParseError("graph6: byte out of range");
        return c - kBias;
    };
    if (byte(pos) != 63) return byte(pos++);
    ++pos; // 126
    int groups = 3;
    if (byte(pos) == 63) { // second 126: 36-bit form
        ++pos;
        groups = 6;
    }
    long long n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | byte(pos++);
    return n;
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_size(out, n);

    // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    long long n = read_size(line, pos);
    if (n > 100000) throw ParseError("graph6: vertex count too large");

    std::vector<std::pair<int, int>> edges;
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                if (pos >= line.size()) throw ParseError("graph6: truncated bit vector");
                int c = static_cast<unsigned char>(line[pos++]);
                if (c < kBias || c > 126) throw ParseError("graph6: byte out of range");
                acc = c - kBias;
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(row, col);
            --nbits;
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue; // skip blank lines
            return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("edge list: missing header line");
    long long n = 0, m = 0;
    {
        std::istringstream hdr(line);
        if (!(hdr >> n >> m) || n < 0 || m < 0)
            throw ParseError("edge list: header must be \"n m\"", lineno);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("edge list: expected " + std::to_string(m) +
                                           " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw ParseError("edge list: expected \"u v\"", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    auto edges = g.edge_list();
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
    for (const auto& [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace msetdim
