#pragma once

#include "treecol/errors.hpp"
#include "treecol/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace treecol {

/// Proper 3-coloring, one residue in {0,1,2} per vertex.
struct Coloring {
    std::vector<std::uint8_t> colors;

    bool operator==(const Coloring&) const = default;
    std::string to_string() const;
    static Coloring from_string(const std::string& text);
};

bool is_proper(const Tree& t, const Coloring& c);
void require_proper(const Tree& t, const Coloring& c);

/// Recolors v by eps in {-1,+1} mod 3. Returns nullopt when the result would
/// clash with a neighbor; an invalid toggle is a value, not an error.
std::optional<Coloring> toggle(const Tree& t, const Coloring& c, int v, int eps);

inline constexpr int kOracleLimit = 20;

/// Dense index over all proper 3-colorings of one tree. Colorings are packed
/// as base-3 integers (digit per vertex) so lookup is a binary search and
/// neighbor generation is O(n); the reconfiguration graph itself is never
/// materialized as an edge list.
class ColoringSpace {
public:
    explicit ColoringSpace(const Tree& t);

    const Tree& tree() const { return tree_; }
    std::size_t size() const { return codes_.size(); }
    Coloring coloring(std::size_t id) const;
    std::size_t index_of(const Coloring& c) const;

    /// Appends ids of colorings one toggle away, in (vertex asc, eps=-1 then
    /// +1) order. The buffer is cleared first.
    void neighbor_ids(std::size_t id, std::vector<std::size_t>& out) const;
    std::vector<std::size_t> neighbor_ids(std::size_t id) const;

    /// Single-source hop distances in the recoloring graph.
    std::vector<int> bfs_from(std::size_t src) const;

    /// Exact hop distance between two colorings (bidirectional BFS).
    int distance_between(std::size_t from, std::size_t to) const;

private:
    Tree tree_;
    std::vector<std::uint64_t> codes_;        // sorted packed colorings
    std::vector<std::uint8_t> colors_flat_;   // size() * n digits, id-major
    std::vector<std::uint64_t> pow3_;
};

std::vector<Coloring> enumerate_colorings(const Tree& t);

int bfs_distance(const Tree& t, const Coloring& f, const Coloring& g);

struct OracleDiameter {
    long long value = 0;
    Coloring from;
    Coloring to;
};

/// Exact diameter of the recoloring graph by BFS from every coloring, with a
/// witness pair attaining it. Sources are split across jobs; the result does
/// not depend on the job count.
OracleDiameter oracle_diameter(const Tree& t, int jobs = 1);

} // namespace treecol
