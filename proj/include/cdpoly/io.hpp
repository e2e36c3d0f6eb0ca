#ifndef CDPOLY_IO_HPP
#define CDPOLY_IO_HPP

#include "cdpoly/graph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdpoly {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { EdgeList, Graph6 };

inline GraphFormat parse_format(std::string_view name)
{
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "graph6") return GraphFormat::Graph6;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

namespace detail {

inline std::string strip_comment(const std::string& line)
{
    std::string s = line.substr(0, line.find('#'));
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<long long> read_ints(const std::string& text, int line, std::size_t expected)
{
    std::istringstream in(text);
    std::vector<long long> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw ParseError(line, "expected an integer, got '" + token + "'");
        }
        if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
        out.push_back(v);
    }
    if (out.size() != expected)
        throw ParseError(line, "expected " + std::to_string(expected) + " integers, got " + std::to_string(out.size()));
    return out;
}

}  // namespace detail

/// First line "n m", then m lines "u v" (0-based). '#' starts a comment.
inline Graph parse_edgelist(std::istream& in)
{
    std::string raw;
    int line_no = 0;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::strip_comment(raw);
        if (line.empty()) continue;
        if (n < 0) {
            auto header = detail::read_ints(line, line_no, 2);
            if (header[0] < 0 || header[0] > kMaxVertices)
                throw ParseError(line_no, "vertex count " + std::to_string(header[0]) + " outside [0, 128]");
            if (header[1] < 0) throw ParseError(line_no, "negative edge count");
            n = static_cast<int>(header[0]);
            m = header[1];
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
        auto e = detail::read_ints(line, line_no, 2);
        const long long u = e[0];
        const long long v = e[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line_no, "endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u))
                throw ParseError(line_no, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError(0, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

inline Graph parse_edgelist(const std::string& text)
{
    std::istringstream in(text);
    return parse_edgelist(in);
}

inline std::string render_edgelist(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// Standard graph6: size prefix, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each
/// byte offset by 63. An optional ">>graph6<<" header is accepted.
inline Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError(0, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError(0, std::string("invalid graph6 character '") + c + "'");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw ParseError(0, "graph6 size prefix too large or truncated");
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        pos = 4;
    }
    if (n > kMaxVertices) throw ParseError(0, "graph6 vertex count " + std::to_string(n) + " exceeds 128");

    const long bits = n * (n - 1) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != bytes)
        throw ParseError(0, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                std::to_string(bytes));
    std::vector<std::pair<int, int>> edges;
    long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
        }
    if (bits % 6 != 0) {
        const int last = text.back() - 63;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError(0, "nonzero graph6 padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string render_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

inline Graph parse_graph(std::istream& in, GraphFormat format)
{
    if (format == GraphFormat::EdgeList) return parse_edgelist(in);
    std::string line;
    while (std::getline(in, line)) {
        auto s = detail::strip_comment(line);
        if (!s.empty()) return parse_graph6(s);
    }
    throw ParseError(0, "no graph6 line found");
}

}  // namespace cdpoly

#endif  // CDPOLY_IO_HPP
