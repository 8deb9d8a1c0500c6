#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lks/fail.hpp"
#include "lks/graph.hpp"
#include "lks/rooted_tree.hpp"

namespace lks {

// Strips '#' comments and blank lines, returns remaining whitespace-separated tokens.
inline std::vector<std::string> read_tokens(std::istream& in) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.push_back(t);
    }
    return toks;
}

inline long long parse_int(const std::string& t, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (...) {
        fail_input("parse", "bad integer '" + t + "' for " + what);
    }
}

// Graph text: "n m" then m pairs "u v".
inline Graph read_graph(std::istream& in) {
    auto toks = read_tokens(in);
    if (toks.size() < 2) fail_input("graph", "expected header 'n m'");
    int n = static_cast<int>(parse_int(toks[0], "n"));
    long long m = parse_int(toks[1], "m");
    if (static_cast<long long>(toks.size()) != 2 + 2 * m)
        fail_input("graph", "expected " + std::to_string(2 * m) + " endpoint tokens");
    Graph g(n);
    for (long long i = 0; i < m; ++i)
        g.add_edge(static_cast<int>(parse_int(toks[2 + 2 * i], "u")),
                   static_cast<int>(parse_int(toks[3 + 2 * i], "v")));
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// Tree text: "n root" then n parent entries, -1 at the root.
inline RootedTree read_tree(std::istream& in) {
    auto toks = read_tokens(in);
    if (toks.size() < 2) fail_input("tree", "expected header 'n root'");
    int n = static_cast<int>(parse_int(toks[0], "n"));
    int root = static_cast<int>(parse_int(toks[1], "root"));
    if (static_cast<int>(toks.size()) != 2 + n) fail_input("tree", "expected " + std::to_string(n) + " parent entries");
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = static_cast<int>(parse_int(toks[2 + i], "parent"));
    return RootedTree(n, root, std::move(parent));
}

inline void write_tree(std::ostream& out, const RootedTree& t) {
    out << t.n() << ' ' << t.root() << '\n';
    for (int v = 0; v < t.n(); ++v) out << t.parent(v) << (v + 1 == t.n() ? '\n' : ' ');
}

}  // namespace lks
