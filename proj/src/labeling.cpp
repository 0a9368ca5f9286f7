#include "treecol/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace treecol {

std::string Labeling::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out << ' ';
        out << labels[i];
    }
    return out.str();
}

Labeling Labeling::from_string(const std::string& text) {
    Labeling h;
    std::istringstream in(text);
    int value;
    while (in >> value) h.labels.push_back(value);
    if (!in.eof()) throw ParseError("labeling must be space-separated integers");
    if (h.labels.empty()) throw ParseError("empty labeling");
    return h;
}

long long norm1(const Labeling& h) {
    long long sum = 0;
    for (int v : h.labels) sum += std::abs(v);
    return sum;
}

long long phi(const Labeling& h, long long x) {
    long long sum = 0;
    for (int v : h.labels) sum += std::llabs(v + x);
    return sum;
}

bool is_labeling(const Tree& t, const Labeling& h) {
    if (static_cast<int>(h.labels.size()) != t.n()) {
        throw SizeMismatch("labeling has " + std::to_string(h.labels.size()) +
                           " entries for a tree on " + std::to_string(t.n()) + " vertices");
    }
    for (auto [u, v] : t.edges()) {
        if (std::abs(h.labels[u] - h.labels[v]) > 1) return false;
    }
    return true;
}

void require_labeling(const Tree& t, const Labeling& h) {
    if (!is_labeling(t, h)) {
        throw InvalidLabeling("adjacent labels differ by more than 1: " + h.to_string());
    }
}

PhiProfile::PhiProfile(const Labeling& h) {
    n_ = static_cast<long long>(h.labels.size());
    for (int v : h.labels) ++histogram_[v];
    std::vector<int> sorted = h.labels;
    std::sort(sorted.begin(), sorted.end());
    if (n_ % 2 == 1) {
        median2_ = 2 * sorted[n_ / 2];
    } else if (n_ > 0) {
        median2_ = sorted[n_ / 2 - 1] + sorted[n_ / 2];
    }
}

long long PhiProfile::count_ge(int t) const {
    long long count = 0;
    for (auto it = histogram_.lower_bound(t); it != histogram_.end(); ++it) count += it->second;
    return count;
}

long long PhiProfile::count_le(int t) const {
    long long count = 0;
    for (auto it = histogram_.begin(); it != histogram_.end() && it->first <= t; ++it) {
        count += it->second;
    }
    return count;
}

long long PhiProfile::phi(long long x) const {
    long long sum = 0;
    for (auto [value, mult] : histogram_) sum += mult * std::llabs(value + x);
    return sum;
}

bool is_balanced(const Labeling& h) {
    long long at_zero = phi(h, 0);
    return at_zero <= phi(h, -3) && at_zero <= phi(h, 3);
}

Labeling balance(const Labeling& h) {
    int maxabs = 0;
    for (int v : h.labels) maxabs = std::max(maxabs, std::abs(v));
    // The minimizing shift cannot move labels past the far side of zero.
    int window = maxabs / 3 + 2;
    long long best = -1;
    std::vector<int> tied;
    for (int m = -window; m <= window; ++m) {
        long long value = phi(h, 3LL * m);
        if (best < 0 || value < best) {
            best = value;
            tied.assign(1, m);
        } else if (value == best) {
            tied.push_back(m);
        }
    }
    auto median2_shifted = [&](int m) {
        Labeling s = h;
        for (int& v : s.labels) v += 3 * m;
        return PhiProfile(s).median2();
    };
    // Prefer the tied representative with the smallest nonnegative median;
    // with none nonnegative, the largest (still deterministic).
    int chosen = tied.front();
    bool have_nonneg = false;
    for (int m : tied) {
        int med2 = median2_shifted(m);
        if (med2 >= 0) {
            if (!have_nonneg || med2 < median2_shifted(chosen)) chosen = m;
            have_nonneg = true;
        } else if (!have_nonneg && med2 > median2_shifted(chosen)) {
            chosen = m;
        }
    }
    Labeling out = h;
    for (int& v : out.labels) v += 3 * chosen;
    return out;
}

Labeling lift(const Tree& t, const Coloring& f, const Coloring& g) {
    require_proper(t, f);
    require_proper(t, g);
    int n = t.n();
    Labeling h;
    h.labels.assign(n, 0);
    std::vector<char> done(n, 0);

    auto residue = [&](int v) { return (g.colors[v] - f.colors[v] + 3) % 3; };

    int r0 = residue(0);
    h.labels[0] = (r0 == 2) ? -1 : r0;
    done[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(u)) {
            if (done[w]) continue;
            int r = residue(w);
            // Exactly one of parent-1, parent, parent+1 hits the residue.
            for (int cand = h.labels[u] - 1; cand <= h.labels[u] + 1; ++cand) {
                if (((cand % 3) + 3) % 3 == r) {
                    h.labels[w] = cand;
                    break;
                }
            }
            done[w] = 1;
            stack.push_back(w);
        }
    }
    return h;
}

std::pair<Coloring, Coloring> realize(const Tree& t, const Labeling& h) {
    require_labeling(t, h);
    int n = t.n();
    Coloring f, g;
    f.colors.assign(n, 0);
    g.colors.assign(n, 0);
    std::vector<char> done(n, 0);

    f.colors[0] = 0;
    g.colors[0] = static_cast<std::uint8_t>(((h.labels[0] % 3) + 3) % 3);
    done[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(u)) {
            if (done[w]) continue;
            int need = ((h.labels[w] % 3) + 3) % 3;
            bool found = false;
            for (int fc = 0; fc < 3 && !found; ++fc) {
                if (fc == f.colors[u]) continue;
                for (int gc = 0; gc < 3; ++gc) {
                    if (gc == g.colors[u]) continue;
                    if ((gc - fc + 3) % 3 == need) {
                        f.colors[w] = static_cast<std::uint8_t>(fc);
                        g.colors[w] = static_cast<std::uint8_t>(gc);
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                throw InvalidLabeling("no proper extension at vertex " + std::to_string(w));
            }
            done[w] = 1;
            stack.push_back(w);
        }
    }
    return {std::move(f), std::move(g)};
}

long long labeling_distance(const Tree& t, const Coloring& f, const Coloring& g) {
    return norm1(balance(lift(t, f, g)));
}

} // namespace treecol
