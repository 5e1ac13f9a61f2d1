#include "chromabounds/graph6.hpp"

#include <fstream>

namespace chromabounds {

namespace {
constexpr int kBias = 63;
}

Graph parse_graph6(std::string_view record) {
    if (record.empty()) throw ParseError("graph6: empty record", 0);
    for (std::size_t i = 0; i < record.size(); ++i) {
        unsigned char b = static_cast<unsigned char>(record[i]);
        if (b < 63 || b > 126)
            throw ParseError("graph6: invalid byte 0x" +
                                 [](unsigned char x) {
                                     const char* hex = "0123456789abcdef";
                                     return std::string{hex[x >> 4], hex[x & 15]};
                                 }(b),
                             i);
    }
    int n = static_cast<unsigned char>(record[0]) - kBias;
    if (n == 63)
        throw ParseError("graph6: long-form order (leading '~') is not supported", 0);

    const int pairs = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (record.size() < 1 + body)
        throw ParseError("graph6: record truncated, expected " + std::to_string(1 + body) +
                             " bytes for order " + std::to_string(n),
                         record.size());
    if (record.size() > 1 + body)
        throw ParseError("graph6: trailing bytes after a complete record", 1 + body);

    std::vector<Edge> edges;
    int bit = 0;
    for (std::size_t i = 0; i < body; ++i) {
        int group = static_cast<unsigned char>(record[1 + i]) - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (group >> k) & 1;
            if (bit >= pairs) {
                if (set) throw ParseError("graph6: nonzero padding bits", 1 + i);
                continue;
            }
            if (set) {
                // bit index -> (u,v): column-major over v = 1..n-1, u = 0..v-1
                int v = 1;
                int idx = bit;
                while (idx >= v) idx -= v, ++v;
                edges.push_back({idx, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    const int pairs = n * (n - 1) / 2;
    std::string out;
    out.reserve(1 + static_cast<std::size_t>((pairs + 5) / 6));
    out.push_back(static_cast<char>(n + kBias));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    if (filled != 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph6 file: " + path);
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(),
                             e.byte_offset());
        }
    }
    return graphs;
}

}  // namespace chromabounds
