#pragma once

#include "treecol/coloring.hpp"
#include "treecol/errors.hpp"
#include "treecol/tree.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace treecol {

/// Integer labeling h: V -> Z with |h(u)-h(v)| <= 1 on every edge. On a
/// connected tree the image is then a contiguous interval.
struct Labeling {
    std::vector<int> labels;

    bool operator==(const Labeling&) const = default;
    std::string to_string() const;
    static Labeling from_string(const std::string& text);
};

/// Sum of |h(v)| over all vertices.
long long norm1(const Labeling& h);

/// Shifted norm sum |h(v)+x|.
long long phi(const Labeling& h, long long x);

bool is_labeling(const Tree& t, const Labeling& h);
void require_labeling(const Tree& t, const Labeling& h);

/// Histogram view of a label multiset with the shifted-norm slope machinery:
/// delta(k) = phi(k+1) - phi(k) = 2 * count_ge(-k) - n, nondecreasing in k.
class PhiProfile {
public:
    explicit PhiProfile(const Labeling& h);

    long long n() const { return n_; }
    const std::map<int, long long>& histogram() const { return histogram_; }

    /// Twice the median of the label multiset (medians are half-integers).
    int median2() const { return median2_; }
    double median() const { return median2_ / 2.0; }

    long long count_ge(int t) const; // labels >= t
    long long count_le(int t) const; // labels <= t
    long long delta(int k) const { return 2 * count_ge(-k) - n_; }
    long long phi(long long x) const;

private:
    std::map<int, long long> histogram_;
    long long n_ = 0;
    int median2_ = 0;
};

inline PhiProfile slopes(const Labeling& h) { return PhiProfile(h); }

/// True iff no uniform shift by a multiple of 3 decreases the norm; by
/// convexity it is enough to compare against the two adjacent shifts.
bool is_balanced(const Labeling& h);

/// The norm-minimizing representative of {h + 3m}. On a tie, the
/// representative whose median is closest to zero from above wins.
Labeling balance(const Labeling& h);

/// The unique lift of the coloring difference g - f with root label in
/// {-1,0,1}: the root takes the least-absolute residue, and each child the
/// single value within 1 of its parent that matches the required residue.
Labeling lift(const Tree& t, const Coloring& f, const Coloring& g);

/// Some proper pair (f, g) whose difference lifts to h (up to a uniform
/// multiple-of-3 shift). Deterministic: smallest feasible colors first.
std::pair<Coloring, Coloring> realize(const Tree& t, const Labeling& h);

/// Exact distance in the recoloring graph: the norm of the balanced lift.
long long labeling_distance(const Tree& t, const Coloring& f, const Coloring& g);

} // namespace treecol
