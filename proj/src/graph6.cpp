#include "powerpath/graph6.hpp"

#include <cstdint>

#include "powerpath/errors.hpp"

namespace powerpath {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void encode_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int sextet(std::string_view text, std::size_t pos, std::size_t base) {
    if (pos >= text.size()) throw ParseError("graph6 text truncated", base + pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", base + pos);
    return c - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    encode_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.view().adjacent(i, j) ? 1 : 0);
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

Graph graph6_decode(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.empty()) throw ParseError("empty graph6 text", base);
    std::size_t pos = 0;
    std::uint64_t n = 0;
    const int first = sextet(text, pos++, base);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
    } else if (pos < text.size() && text[pos] == 126) {
        ++pos;
        for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++, base));
    } else {
        for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++, base));
    }
    if (n > order_cap()) throw SizeError("graph6 order " + std::to_string(n) + " exceeds cap");
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < data_bytes) throw ParseError("graph6 text truncated", base + text.size());
    if (text.size() - pos > data_bytes) throw ParseError("graph6 text has trailing bytes", base + pos + data_bytes);

    Graph g(static_cast<std::size_t>(n));
    std::uint64_t index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++index) {
            const std::size_t at = pos + static_cast<std::size_t>(index / 6);
            const int value = sextet(text, at, base);
            if ((value >> (5 - index % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t at = pos + data_bytes - 1;
        const int value = sextet(text, at, base);
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (value & pad_mask) throw ParseError("graph6 padding bits are not zero", base + at);
    }
    return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.detail(), e.offset());
        }
    }
    return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace powerpath
