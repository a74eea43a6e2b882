#include "bridgelab/graph6.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bridgelab {

namespace {

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 18-bit size, three sextets, '~' marker
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

int parse_size(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("empty graph6 string");
    unsigned char c = s[pos];
    if (c == '~') {
        if (pos + 3 >= s.size()) throw std::invalid_argument("truncated graph6 size");
        int n = 0;
        for (int i = 1; i <= 3; ++i) {
            unsigned char d = s[pos + i];
            if (d < 63 || d > 126) throw std::invalid_argument("bad graph6 size byte");
            n = (n << 6) | (d - 63);
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 size byte");
    ++pos;
    return c - 63;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_size(out, n);
    int bit = 5;
    unsigned char cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= 1u << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    size_t pos = 0;
    int n = parse_size(line, pos);
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph6 size out of supported range");
    Graph g(n);
    int bit = 5;
    size_t idx = pos;
    auto next_bit = [&]() -> bool {
        if (idx >= line.size()) throw std::invalid_argument("truncated graph6 body");
        unsigned char c = line[idx];
        if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 body byte");
        bool b = ((c - 63) >> bit) & 1;
        if (--bit < 0) {
            bit = 5;
            ++idx;
        }
        return b;
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (next_bit()) g.add_edge(u, v);
    // padding bits must leave no trailing garbage bytes
    if (bit != 5) ++idx;
    if (idx != line.size()) throw std::invalid_argument("trailing bytes after graph6 body");
    return g;
}

void write_graph6_stream(std::ostream& os, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) os << to_graph6(g) << '\n';
}

std::vector<Graph> read_graph6_stream(std::istream& is) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

std::string to_json_graph(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (int v = 1; v < g.vertex_count(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) edges.push_back({u + 1, v + 1});
    j["edges"] = edges;
    return j.dump();
}

Graph from_json_graph(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>(), v = e.at(1).get<int>();
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

}  // namespace bridgelab
