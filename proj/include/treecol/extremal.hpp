#pragma once

#include "treecol/coloring.hpp"
#include "treecol/labeling.hpp"
#include "treecol/tree.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace treecol {

inline constexpr int kSearchLimit = 14;

enum class DiameterMethod { search, oracle, formula };

std::string to_string(DiameterMethod m);
DiameterMethod diameter_method_from_string(const std::string& s);

struct DiameterResult {
    long long value = 0;
    Labeling witness; // balanced, norm1(witness) == value
    std::optional<std::pair<Coloring, Coloring>> witness_pair;
    DiameterMethod method = DiameterMethod::search;
};

/// Closed form for the recoloring diameter of the path: C(ceil(n/2)-1, 2) +
/// C(floor(n/2)+2, 2). Exact for n = 1, 2 and n >= 4.
long long path_diameter_formula(int n);

/// floor(3n/2): the minimum recoloring diameter over trees on n vertices,
/// attained by the star for every n.
long long min_diameter_formula(int n);

/// Labels path vertices with the n consecutive integers from 2 - ceil(n/2)
/// through floor(n/2) + 1; balanced with norm path_diameter_formula(n).
Labeling sequential_path_labeling(int n);

/// ceil(n/2) ones (lowest vertex ids) and floor(n/2) twos; balanced on any
/// tree with norm floor(3n/2).
Labeling two_level_labeling(const Tree& t);

/// For a leaf v with |N2(v)| <= ceil(n/2) - 4: -1 at v, 0 at its neighbor,
/// 1 on ceil(n/2) - 4 vertices covering N2(v) (smallest ids fill the rest),
/// 2 elsewhere. Balanced with norm floor(3n/2) + 1.
Labeling small_n2_labeling(const Tree& t, int v);

/// For a leaf v with |N2(v)| = ceil(n/2) - 4 + k and |N>=4(v)| >= k, k >= 1:
/// -1 at v, 0 at its neighbor, 1 on N2(v), 3 on the k smallest-id vertices of
/// N>=4(v), 2 elsewhere. Balanced with norm floor(3n/2) + 1.
Labeling large_n2_labeling(const Tree& t, int v, int k);

/// Exact diameter as the maximum norm over balanced labelings, by exhaustive
/// depth-first assignment with branch-and-bound pruning. The witness is
/// normalized to nonnegative median (negating a balanced labeling preserves
/// balance and norm).
DiameterResult max_balanced_labeling(const Tree& t);

/// Twice-medians of every norm-maximal balanced labeling of t.
std::set<int> maximizer_medians(const Tree& t);

bool is_path(const Tree& t);
bool is_star(const Tree& t);

/// (max arm, min arm) when t is a double star S(a,b) with a, b >= 1.
std::optional<std::pair<int, int>> double_star_arms(const Tree& t);
bool is_nearly_symmetric_double_star(const Tree& t);

struct ExtremalClassification {
    int n = 0;
    long long max_value = 0;
    long long min_value = 0;
    std::set<CanonicalCode> max_trees;
    std::set<CanonicalCode> min_trees;
};

struct SweepEntry {
    CanonicalCode code;
    Tree tree;
    DiameterResult result;
};

/// Diameter of every isomorphism class on n vertices, sorted by code.
/// Trees are distributed across jobs; each search is independent.
std::vector<SweepEntry> sweep_diameters(int n, DiameterMethod method, int jobs = 1);

ExtremalClassification classify_extremal(int n, int jobs = 1);

/// nullopt when the classification matches the expected extremal sets
/// (unique path maximum at the binomial value; star plus near-symmetric
/// double stars at floor(3n/2)); otherwise a description of the mismatch.
/// Only meaningful for n >= 7.
std::optional<std::string> check_extremal_claim(const ExtremalClassification& c);

} // namespace treecol
