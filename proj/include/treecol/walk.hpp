#pragma once

#include "treecol/coloring.hpp"
#include "treecol/labeling.hpp"
#include "treecol/tree.hpp"

#include <string>
#include <vector>

namespace treecol {

struct WalkStep {
    int vertex = -1;
    int eps = 0; // +1 or -1

    bool operator==(const WalkStep&) const = default;
};

/// A walk in the recoloring graph: a start coloring and an ordered list of
/// single-vertex toggles, each of which must keep the coloring proper.
struct Walk {
    Coloring start;
    std::vector<WalkStep> steps;

    std::size_t length() const { return steps.size(); }
    std::string serialize() const;
    static Walk deserialize(const std::string& text);
};

struct WalkReport {
    bool valid = false;           // every replayed step stays proper
    int first_invalid_step = -1;  // index of the first bad step, -1 if none
    Coloring end;                 // coloring after the last valid prefix
    std::size_t length = 0;
    std::vector<int> up_toggles;   // per-vertex +1 step counts
    std::vector<int> down_toggles; // per-vertex -1 step counts
    bool monotone = false;         // no vertex toggled in both directions
    bool has_opposite_edges = false;
};

/// Builds a walk from f of length exactly norm1(h) whose endpoint is f + h
/// pointwise (mod 3); every vertex w is toggled |h(w)| times, always in the
/// direction sign(h(w)). Strips leaves highest-id-first and splices each
/// leaf's toggles back around its neighbor's, pairing them so every
/// intermediate coloring stays proper.
Walk build_walk(const Tree& t, const Coloring& f, const Labeling& h);

/// Replays the walk step by step and reports everything the invariants need.
WalkReport validate_walk(const Tree& t, const Walk& w);

} // namespace treecol
