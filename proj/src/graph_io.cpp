#include "powdom/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace powdom {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int g6_byte(std::string_view s, size_t i, size_t base = 0) {
    if (i >= s.size()) throw parse_error("graph6 data truncated", base + s.size());
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error("graph6 byte outside printable range", base + i);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    std::string_view s = line.substr(base);
    if (s.empty()) throw parse_error("empty graph6 line", base);

    size_t pos = 0;
    long long n = 0;
    const int b0 = g6_byte(s, 0, base);
    if (b0 <= 62) {
        n = b0;
        pos = 1;
    } else if (g6_byte(s, 1, base) <= 62) {
        n = (static_cast<long long>(g6_byte(s, 1, base)) << 12) | (g6_byte(s, 2, base) << 6) |
            g6_byte(s, 3, base);
        pos = 4;
    } else {
        // 8-byte length form encodes n up to 2^36; far beyond our width.
        throw size_limit_error("graph6 order exceeds supported width");
    }
    if (n > kMaxVertices)
        throw size_limit_error("graph6 order " + std::to_string(n) + " exceeds width " +
                               std::to_string(kMaxVertices));

    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t nbytes = (nbits + 5) / 6;
    if (s.size() != pos + nbytes) {
        if (s.size() < pos + nbytes) throw parse_error("graph6 data truncated", base + s.size());
        throw parse_error("trailing garbage after graph6 data", base + pos + nbytes);
    }

    std::vector<Edge> es;
    size_t bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) cur = g6_byte(s, pos + bit / 6, base);
            if ((cur >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

namespace {

struct LineScanner {
    std::string_view text;
    size_t pos = 0;

    // Next non-empty line with its starting offset, or false at end.
    bool next(std::string_view& line, size_t& offset) {
        while (pos < text.size()) {
            size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view raw = text.substr(pos, eol - pos);
            size_t start = pos;
            pos = eol + 1;
            while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
                raw.remove_suffix(1);
            size_t lead = 0;
            while (lead < raw.size() && (raw[lead] == ' ' || raw[lead] == '\t')) ++lead;
            raw.remove_prefix(lead);
            if (!raw.empty()) {
                line = raw;
                offset = start + lead;
                return true;
            }
        }
        return false;
    }
};

long parse_int(std::string_view tok, size_t offset) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error("expected an integer, got '" + std::string(tok) + "'", offset);
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text, IndexBase base) {
    LineScanner sc{text};
    std::string_view line;
    size_t off = 0;
    if (!sc.next(line, off)) throw parse_error("empty edge-list input", 0);
    auto head = split_ws(line);
    if (head.size() != 2) throw parse_error("header must be 'n m'", off);
    const long n = parse_int(head[0], off);
    const long m = parse_int(head[1], off);
    if (n < 0 || m < 0) throw parse_error("negative count in header", off);
    if (n > kMaxVertices) throw size_limit_error("edge-list order exceeds bitset width");

    const int lo = base == IndexBase::zero ? 0 : 1;
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m));
    for (long e = 0; e < m; ++e) {
        if (!sc.next(line, off)) throw parse_error("expected " + std::to_string(m) + " edges", text.size());
        auto toks = split_ws(line);
        if (toks.size() != 2) throw parse_error("edge line must be 'u v'", off);
        const long u = parse_int(toks[0], off);
        const long v = parse_int(toks[1], off);
        if (u < lo || u >= n + lo || v < lo || v >= n + lo)
            throw parse_error("vertex index out of range", off);
        if (u == v) throw parse_error("self-loop rejected", off);
        es.emplace_back(static_cast<int>(u - lo), static_cast<int>(v - lo));
    }
    if (sc.next(line, off)) throw parse_error("trailing garbage after edge list", off);
    return Graph(static_cast<int>(n), es);
}

std::string emit_edge_list(const Graph& g, IndexBase base) {
    const int lo = base == IndexBase::zero ? 0 : 1;
    auto es = g.edges();
    std::ostringstream out;
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u + lo << ' ' << v + lo << '\n';
    return out.str();
}

Graph parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> es;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u,v]");
            es.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, es);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph JSON: ") + e.what(), 0);
    }
}

std::string emit_graph_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto arr = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = std::move(arr);
    return j.dump();
}

}  // namespace powdom
