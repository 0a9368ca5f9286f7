#pragma once

#include "treecol/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace treecol {

/// Free tree on vertices 0..n-1. Immutable after construction; the
/// constructor rejects anything that is not a connected acyclic simple graph.
class Tree {
public:
    Tree(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool is_leaf(int v) const { return degree(v) == 1; }

    /// Hop distances from src to every vertex.
    std::vector<int> distances_from(int src) const;

    /// One or two central vertices (midpoints of a longest path).
    std::vector<int> centers() const;

    std::string to_edge_list() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Isomorphism-invariant identifier. Two trees get equal codes iff they are
/// isomorphic. Serialized form is a lowercase hex string; codes of trees with
/// the same vertex count have the same length, so lexicographic order is
/// well-defined within one n.
struct CanonicalCode {
    std::string hex;

    auto operator<=>(const CanonicalCode&) const = default;
    const std::string& str() const { return hex; }
};

struct LeafProfile {
    int leaf = -1;
    int n2 = 0;    // vertices at distance exactly 2
    int n_ge4 = 0; // vertices at distance >= 4
    std::vector<int> dist;
};

/// Parses the edge-list wire format: first line "n", then one "u v" line per
/// edge, 0-based ids. Blank lines and "#" comment lines are skipped.
Tree parse_tree(const std::string& text);

Tree path(int n);
Tree star(int n);
Tree double_star(int a, int b);

/// Rooted-at-center canonical form (AHU-style level encoding), packed to hex.
CanonicalCode canonical_code(const Tree& t);

/// All trees on n vertices, one representative per isomorphism class,
/// sorted by canonical code. Supported up to kEnumerationLimit.
std::vector<Tree> enumerate_trees(int n);

inline constexpr int kEnumerationLimit = 14;

LeafProfile leaf_profile(const Tree& t, int v);

int tree_diameter(const Tree& t);

/// Standard Pruefer decoding; sequence values in [0, n) with n = seq.size()+2.
/// Test oracle for the enumeration, and a convenient uniform random tree.
Tree tree_from_pruefer(const std::vector<int>& seq);

} // namespace treecol
