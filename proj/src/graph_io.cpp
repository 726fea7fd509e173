#include "mforge/graph_io.hpp"

#include <sstream>

#include "mforge/errors.hpp"

namespace mforge {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    }
}

int sixbits(std::string_view text, std::size_t pos, std::size_t base) {
    if (pos >= text.size()) {
        throw ParseError("graph6: input truncated", base + pos);
    }
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw ParseError("graph6: byte outside the printable range 63..126", base + pos);
    }
    return c - 63;
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    put_order(out, g.order());
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    }
    return out;
}

Graph from_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input", base);
    }
    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == 126) {
        if (text.size() > 1 && text[1] == 126) {
            for (std::size_t i = 2; i < 8; ++i) {
                n = (n << 6) | sixbits(text, i, base);
            }
            pos = 8;
        } else {
            for (std::size_t i = 1; i < 4; ++i) {
                n = (n << 6) | sixbits(text, i, base);
            }
            pos = 4;
        }
    } else {
        n = sixbits(text, 0, base);
        pos = 1;
    }
    if (n > 100000) {
        throw ParseError("graph6: order " + std::to_string(n) + " too large", base);
    }
    const auto bits = static_cast<std::size_t>(n * (n - 1) / 2);
    const std::size_t need = (bits + 5) / 6;
    if (text.size() - pos != need) {
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                             std::to_string(text.size() - pos),
                         base + std::min(text.size(), pos + need));
    }
    GraphBuilder b(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sixbits(text, pos + k / 6, base);
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
                b.add_edge(i, j);
            }
        }
    }
    if (k % 6 != 0) {
        const int byte = sixbits(text, pos + k / 6, base);
        if ((byte & ((1 << (6 - static_cast<int>(k % 6))) - 1)) != 0) {
            throw ParseError("graph6: nonzero padding bits", base + pos + k / 6);
        }
    }
    return std::move(b).build();
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v << " [label=\"" << v << "\"];\n";
    }
    for (auto [u, v] : g.edges()) {
        os << "  " << u << " -- " << v << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace mforge
