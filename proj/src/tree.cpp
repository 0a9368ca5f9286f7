#include "treecol/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace treecol {

Tree::Tree(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw InvalidParameter("tree needs at least one vertex, got n=" + std::to_string(n_));
    }
    if (static_cast<int>(edges_.size()) != n_ - 1) {
        throw NotATree("expected " + std::to_string(n_ - 1) + " edges, got " +
                       std::to_string(edges_.size()));
    }
    adjacency_.assign(n_, {});
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw BadVertexId("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        }
        if (u == v) {
            throw NotATree("self-loop at vertex " + std::to_string(u));
        }
        if (!seen.insert(std::minmax(u, v)).second) {
            throw NotATree("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    // n-1 edges, no duplicates: connected iff acyclic. One BFS settles both.
    std::vector<char> reached(n_, 0);
    std::queue<int> q;
    q.push(0);
    reached[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adjacency_[u]) {
            if (!reached[w]) {
                reached[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    if (count != n_) {
        throw NotATree("graph is disconnected");
    }
}

std::vector<int> Tree::distances_from(int src) const {
    if (src < 0 || src >= n_) {
        throw BadVertexId("vertex " + std::to_string(src) + " out of range");
    }
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adjacency_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<int> Tree::centers() const {
    if (n_ == 1) return {0};
    // Strip leaves layer by layer; the last one or two vertices remain.
    std::vector<int> deg(n_);
    for (int v = 0; v < n_; ++v) deg[v] = degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n_; ++v)
        if (deg[v] == 1) layer.push_back(v);
    int remaining = n_;
    std::vector<char> removed(n_, 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : adjacency_[v]) {
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> result;
    for (int v = 0; v < n_; ++v)
        if (!removed[v]) result.push_back(v);
    return result;
}

std::string Tree::to_edge_list() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (auto [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

Tree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1) {
                throw ParseError("line " + std::to_string(lineno) + ": expected vertex count");
            }
            std::string rest;
            if (fields >> rest) {
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after n");
            }
            continue;
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        int u, v;
        if (!(fields >> u >> v)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        }
        std::string rest;
        if (fields >> rest) {
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after edge");
        }
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("empty input");
    return Tree(n, std::move(edges));
}

Tree path(int n) {
    if (n < 1) throw InvalidParameter("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

Tree star(int n) {
    if (n < 1) throw InvalidParameter("star needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Tree(n, std::move(edges));
}

Tree double_star(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParameter("double star needs a, b >= 1");
    // Centers 0 and 1; a leaves on 0, b leaves on 1.
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);
    for (int i = 0; i < a; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, 2 + a + i);
    return Tree(a + b + 2, std::move(edges));
}

namespace {

// Rooted canonical string over '(' ')': children encodings sorted, so two
// rooted trees get equal strings iff they are isomorphic as rooted trees.
std::string rooted_encoding(const Tree& t, int root) {
    // Iterative post-order, parents tracked to avoid recursion depth limits.
    int n = t.n();
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int w : t.neighbors(u)) {
            if (parent[w] < 0) {
                parent[w] = u;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::string> enc(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        std::vector<std::string> child_codes;
        for (int w : t.neighbors(u)) {
            if (w != root && parent[w] == u) child_codes.push_back(std::move(enc[w]));
        }
        std::sort(child_codes.begin(), child_codes.end());
        std::string s = "(";
        for (auto& c : child_codes) s += c;
        s += ")";
        enc[u] = std::move(s);
    }
    return enc[root];
}

std::string pack_parens_to_hex(const std::string& parens) {
    static const char* digits = "0123456789abcdef";
    std::string hex;
    hex.reserve((parens.size() + 7) / 8 * 2);
    unsigned byte = 0;
    int bits = 0;
    for (char c : parens) {
        byte = (byte << 1) | (c == ')' ? 1u : 0u);
        if (++bits == 8) {
            hex += digits[byte >> 4];
            hex += digits[byte & 0xf];
            byte = 0;
            bits = 0;
        }
    }
    if (bits > 0) {
        byte <<= (8 - bits);
        hex += digits[byte >> 4];
        hex += digits[byte & 0xf];
    }
    return hex;
}

} // namespace

CanonicalCode canonical_code(const Tree& t) {
    std::string best;
    for (int c : t.centers()) {
        std::string enc = rooted_encoding(t, c);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return CanonicalCode{pack_parens_to_hex(best)};
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw InvalidParameter("enumeration needs n >= 1");
    if (n > kEnumerationLimit) {
        throw LimitExceeded("tree enumeration supported up to n=" +
                            std::to_string(kEnumerationLimit));
    }
    // Grow one vertex at a time: every tree on k+1 vertices arises from a tree
    // on k vertices by attaching a leaf, so appending a leaf at every vertex of
    // every representative and deduplicating by code is exhaustive.
    std::vector<Tree> level;
    level.push_back(Tree(1, {}));
    for (int k = 1; k < n; ++k) {
        std::map<CanonicalCode, Tree> next;
        for (const Tree& t : level) {
            for (int v = 0; v < k; ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, k);
                Tree grown(k + 1, std::move(edges));
                next.emplace(canonical_code(grown), std::move(grown));
            }
        }
        level.clear();
        for (auto& [code, t] : next) level.push_back(std::move(t));
    }
    // The map already sorted the final generation by code.
    return level;
}

LeafProfile leaf_profile(const Tree& t, int v) {
    if (v < 0 || v >= t.n()) throw BadVertexId("vertex " + std::to_string(v) + " out of range");
    if (!t.is_leaf(v)) {
        throw NotALeaf("vertex " + std::to_string(v) + " has degree " +
                       std::to_string(t.degree(v)));
    }
    LeafProfile p;
    p.leaf = v;
    p.dist = t.distances_from(v);
    for (int d : p.dist) {
        if (d == 2) ++p.n2;
        if (d >= 4) ++p.n_ge4;
    }
    return p;
}

int tree_diameter(const Tree& t) {
    auto d0 = t.distances_from(0);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = t.distances_from(far);
    return *std::max_element(d1.begin(), d1.end());
}

Tree tree_from_pruefer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw BadVertexId("pruefer entry out of range");
        ++deg[v];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *leaves.rbegin();
    edges.emplace_back(a, b);
    return Tree(n, std::move(edges));
}

} // namespace treecol
