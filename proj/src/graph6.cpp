#include "shedlab/graph6.hpp"

namespace shedlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }

    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw BadGraph6("empty graph6 string");

    for (char c : text) {
        auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw BadGraph6("byte " + std::to_string(b) + " outside 63..126");
    }

    std::size_t pos = 0;
    int n = static_cast<unsigned char>(text[0]) - 63;
    pos = 1;
    if (n == 63) {
        if (text.size() < 4) throw BadGraph6("truncated vertex count");
        if (text[1] == 126) throw BadGraph6("graphs beyond 64 vertices are not supported");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | (static_cast<unsigned char>(text[k]) - 63);
        pos = 4;
        if (n <= 62) throw BadGraph6("non-minimal vertex count encoding");
    }
    if (n > kMaxVertices) throw BadGraph6("graphs beyond 64 vertices are not supported");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() - pos != payload)
        throw BadGraph6("expected " + std::to_string(payload) + " payload bytes for n=" + std::to_string(n) +
                        ", got " + std::to_string(text.size() - pos));

    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = static_cast<unsigned char>(text[pos + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    if (bits % 6 != 0) {
        int last = static_cast<unsigned char>(text.back()) - 63;
        int pad = static_cast<int>(6 - bits % 6);
        if ((last & ((1 << pad) - 1)) != 0) throw BadGraph6("nonzero padding bits");
    }
    return Graph::from_rows(std::move(rows));
}

} // namespace shedlab
