#include "purepairs/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace purepairs {

Graph read_edge_list(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw InvalidInput("edge list: missing 'n m' header");
    std::vector<std::pair<int, int>> es;
    es.reserve(size_t(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw InvalidInput("edge list: truncated edge section");
        es.emplace_back(u, v);
    }
    return Graph::from_edges(n, es);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.size() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

std::string to_graph6(const Graph& g) {
    int n = g.size();
    std::string s;
    if (n <= 62) {
        s.push_back(char(n + 63));
    } else {
        s.push_back(char(126));
        s.push_back(char(((n >> 12) & 0x3f) + 63));
        s.push_back(char(((n >> 6) & 0x3f) + 63));
        s.push_back(char((n & 0x3f) + 63));
    }
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit == 6) {
                s.push_back(char(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit) s.push_back(char((acc << (6 - bit)) + 63));
    return s;
}

Graph from_graph6(const std::string& line) {
    size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= line.size()) throw InvalidInput("graph6: empty line");
    auto val = [&](size_t i) -> int {
        if (i >= line.size()) throw InvalidInput("graph6: truncated");
        int c = int(static_cast<unsigned char>(line[i])) - 63;
        if (c < 0 || c > 63) throw InvalidInput("graph6: byte out of range");
        return c;
    };
    int n;
    if (line[pos] == char(126)) {
        if (pos + 3 >= line.size()) throw InvalidInput("graph6: truncated size");
        if (line[pos + 1] == char(126)) throw InvalidInput("graph6: n too large");
        n = (val(pos + 1) << 12) | (val(pos + 2) << 6) | val(pos + 3);
        pos += 4;
    } else {
        n = val(pos);
        pos += 1;
    }
    if (n > kMaxVertices) throw CapExceeded("graph6: n = " + std::to_string(n) + " above cap");
    std::vector<std::pair<int, int>> es;
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                acc = val(pos++);
                bit = 6;
            }
            if (acc & (1 << (bit - 1))) es.emplace_back(i, j);
            --bit;
        }
    }
    return Graph::from_edges(n, es);
}

std::vector<Graph> read_graph6_stream(std::istream& in, int max_count) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
        if (max_count >= 0 && int(out.size()) >= max_count) break;
    }
    return out;
}

Graph read_graph_auto(std::istream& in) {
    std::string first;
    while (std::getline(in, first)) {
        if (!first.empty() && first.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream head(first);
    int n;
    long long m;
    char extra;
    if (head >> n >> m && !(head >> extra)) {
        // looks like an edge-list header
        std::vector<std::pair<int, int>> es;
        es.reserve(size_t(m));
        for (long long i = 0; i < m; ++i) {
            int u, v;
            if (!(in >> u >> v)) throw InvalidInput("edge list: truncated edge section");
            es.emplace_back(u, v);
        }
        return Graph::from_edges(n, es);
    }
    while (!first.empty() && (first.back() == '\r' || first.back() == '\n')) first.pop_back();
    return from_graph6(first);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_graph_auto(in);
}

}  // namespace purepairs
