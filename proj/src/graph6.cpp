#include "pursuit/graph6.hpp"

#include "pursuit/errors.hpp"

#include <cstdint>

namespace pursuit {

namespace {

constexpr int kBias = 63;
constexpr int kLongPrefix = 126;

int decode_char(std::string_view text, std::size_t offset) {
    const auto c = static_cast<unsigned char>(text[offset]);
    if (c < kBias || c > kLongPrefix)
        throw ParseError(offset, "byte value " + std::to_string(c) + " outside 63..126");
    return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw ParseError(0, "missing size prefix");

    std::size_t pos = 0;
    int n = 0;
    if (static_cast<unsigned char>(text[0]) == kLongPrefix) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongPrefix)
            throw ParseError(1, "orders above 258047 are not supported");
        if (text.size() < 4)
            throw ParseError(text.size(), "truncated four-byte size prefix");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | decode_char(text, i);
        pos = 4;
    } else {
        n = decode_char(text, 0);
        pos = 1;
    }
    if (n == 0)
        throw ParseError(0, "graphs must have at least one vertex");

    const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() < expected)
        throw ParseError(text.size(), "expected " + std::to_string(expected) + " bytes, got " + std::to_string(text.size()));
    if (text.size() > expected)
        throw ParseError(expected, "trailing bytes after adjacency data");

    std::vector<VertexSet> rows(n, VertexSet(n));
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::size_t offset = pos + k / 6;
            const int chunk = decode_char(text, offset);
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    if (bits % 6 != 0) {
        const std::size_t offset = expected - 1;
        const int chunk = decode_char(text, offset);
        const int pad = static_cast<int>(6 - bits % 6);
        if ((chunk & ((1 << pad) - 1)) != 0)
            throw ParseError(offset, "nonzero padding bits");
    }
    return Graph::from_adjacency(std::move(rows));
}

std::string write_graph6(const Graph& g) {
    const int n = g.n();
    if (n > kMaxGraph6Order)
        throw UnsupportedSizeError("graph6 cannot encode " + std::to_string(n) + " vertices");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kLongPrefix));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }

    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

} // namespace pursuit
