#pragma once

// Text formats: the "n m" edge-list format and the graph6 one-liner format.
// Both are 0-based. Parse errors name the offending line.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "tdc/errors.hpp"
#include "tdc/graph.hpp"

namespace tdc {

namespace detail {

inline std::string strip_cr(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

inline bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

// First line "n m"; then m lines "u v". Duplicate edge lines collapse to one
// edge. Rejects out-of-range ids and self-loops, naming the line number.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("edge list: empty input");
    line = detail::strip_cr(line);

    long long n = 0, m = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra))
            throw ParseError("edge list: line 1: expected header \"n m\"");
        if (n < 0 || m < 0) throw ParseError("edge list: line 1: negative count");
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long e = 0; e < m; ++e) {
        int lineno = static_cast<int>(e) + 2;
        if (!std::getline(in, line))
            throw ParseError("edge list: line " + std::to_string(lineno) + ": unexpected end of input");
        line = detail::strip_cr(line);
        long long u = 0, v = 0;
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("edge list: line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": vertex id out of range [0," +
                             std::to_string(n - 1) + "]");
        if (u == v)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    int lineno = static_cast<int>(m) + 2;
    while (std::getline(in, line)) {
        if (!detail::blank(detail::strip_cr(line)))
            throw ParseError("edge list: line " + std::to_string(lineno) + ": trailing content");
        ++lineno;
    }
    return Graph(static_cast<int>(n), edges);
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// graph6: one printable line; byte values 63..126 carry 6 bits each; the
// adjacency bits cover the upper triangle in column-major order.
inline Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw ParseError("graph6: empty input");

    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126");

    size_t pos = 0;
    long long n = 0;
    if (s[pos] != '~') {
        n = s[pos] - 63;
        pos += 1;
    } else {
        if (s.size() < 2) throw ParseError("graph6: truncated order field");
        if (s[1] != '~') {
            if (s.size() < 4) throw ParseError("graph6: truncated order field");
            n = 0;
            for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
            pos = 4;
        } else {
            if (s.size() < 8) throw ParseError("graph6: truncated order field");
            n = 0;
            for (size_t i = 2; i <= 7; ++i) n = (n << 6) | (s[i] - 63);
            pos = 8;
        }
    }
    if (n > 1000000) throw ParseError("graph6: order too large");

    long long bits = n * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < bytes)
        throw ParseError("graph6: truncated bit field");
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) > bytes)
        throw ParseError("graph6: trailing characters");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + static_cast<size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

inline std::string serialize_graph6(const Graph& g) {
    long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    long long bits = n * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    std::string body(static_cast<size_t>(bytes), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) body[static_cast<size_t>(bit / 6)] |= static_cast<char>(1 << (5 - bit % 6));
        }
    }
    for (char& c : body) c = static_cast<char>(c + 63);
    return out + body;
}

} // namespace tdc
