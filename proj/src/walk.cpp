#include "treecol/walk.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace treecol {

std::string Walk::serialize() const {
    std::ostringstream out;
    out << start.to_string() << "\n";
    for (const WalkStep& s : steps) {
        out << s.vertex << (s.eps > 0 ? " +1" : " -1") << "\n";
    }
    return out.str();
}

Walk Walk::deserialize(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty walk");
    Walk w;
    w.start = Coloring::from_string(line);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        int vertex;
        std::string dir, rest;
        if (!(fields >> vertex >> dir) || (dir != "+1" && dir != "-1") || (fields >> rest)) {
            throw ParseError("walk line " + std::to_string(lineno) + ": expected \"v +1\" or \"v -1\"");
        }
        w.steps.push_back({vertex, dir == "+1" ? 1 : -1});
    }
    return w;
}

namespace {

struct Replay {
    const Tree& tree;
    std::vector<std::uint8_t> colors;
    std::vector<char> present;

    Replay(const Tree& t, const Coloring& f, const std::vector<char>& present_set)
        : tree(t), colors(f.colors), present(present_set) {}

    // +1/-1 between the colors of v and u, derived from the current state.
    int diff_sign(int v, int u) const {
        int d = (colors[v] - colors[u] + 3) % 3;
        return d == 1 ? 1 : -1;
    }

    void apply(const WalkStep& s) {
        std::uint8_t next = static_cast<std::uint8_t>((colors[s.vertex] + s.eps + 3) % 3);
        for (int w : tree.neighbors(s.vertex)) {
            if (present[w] && colors[w] == next) {
                throw std::logic_error("internal: splice produced an improper step at vertex " +
                                       std::to_string(s.vertex));
            }
        }
        colors[s.vertex] = next;
    }
};

int sign_of(int x) { return (x > 0) - (x < 0); }

} // namespace

Walk build_walk(const Tree& t, const Coloring& f, const Labeling& h) {
    require_proper(t, f);
    if (!is_labeling(t, h)) {
        throw IncompatibleLabeling("labeling violates the adjacent-difference bound");
    }
    // The implied endpoint must be proper; an edge-Lipschitz h does not
    // guarantee that for an arbitrary start coloring.
    Coloring g = f;
    for (int v = 0; v < t.n(); ++v) {
        g.colors[v] = static_cast<std::uint8_t>(((f.colors[v] + h.labels[v]) % 3 + 3) % 3);
    }
    require_proper(t, g);

    // Strip the highest-numbered leaf until one vertex remains.
    int n = t.n();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<char> alive(n, 1);
    std::vector<std::pair<int, int>> removals; // (leaf, its neighbor)
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) leaves.insert(v);
    for (int round = 0; round + 1 < n; ++round) {
        int v = *leaves.rbegin();
        leaves.erase(v);
        alive[v] = 0;
        int u = -1;
        for (int w : t.neighbors(v)) {
            if (alive[w]) {
                u = w;
                break;
            }
        }
        removals.emplace_back(v, u);
        if (--deg[u] == 1) leaves.insert(u);
    }
    int root = *leaves.begin();

    std::vector<char> present(n, 0);
    present[root] = 1;
    std::vector<WalkStep> steps;
    steps.reserve(static_cast<std::size_t>(norm1(h)));
    for (int i = 0; i < std::abs(h.labels[root]); ++i) {
        steps.push_back({root, sign_of(h.labels[root])});
    }

    // Re-attach leaves in reverse removal order, splicing each one's toggles
    // into the walk built so far.
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        auto [v, u] = *it;
        present[v] = 1;
        int hv = h.labels[v];
        int hu = h.labels[u];
        if (hv == 0) continue;
        if (hu == 0) {
            // u never moves, so the single toggle of v goes at the very end.
            steps.push_back({v, sign_of(hv)});
            continue;
        }
        int s = sign_of(hv);
        int pairs = std::min(std::abs(hv), std::abs(hu));
        std::vector<WalkStep> spliced;
        spliced.reserve(steps.size() + std::abs(hv));
        Replay replay(t, f, present);
        auto emit = [&](WalkStep step) {
            replay.apply(step);
            spliced.push_back(step);
        };
        if (std::abs(hv) == std::abs(hu) + 1) {
            emit({v, s});
        }
        int remaining = pairs;
        for (const WalkStep& step : steps) {
            if (step.vertex == u && remaining > 0) {
                // Paired toggle; the order keeps both moves proper and is
                // dictated by the current color difference.
                if (replay.diff_sign(v, u) == s) {
                    emit({v, s});
                    emit({u, s});
                } else {
                    emit({u, s});
                    emit({v, s});
                }
                --remaining;
            } else {
                emit(step);
            }
        }
        steps = std::move(spliced);
    }
    return Walk{f, std::move(steps)};
}

WalkReport validate_walk(const Tree& t, const Walk& w) {
    WalkReport report;
    report.length = w.steps.size();
    report.up_toggles.assign(t.n(), 0);
    report.down_toggles.assign(t.n(), 0);
    if (!is_proper(t, w.start)) {
        report.valid = false;
        report.first_invalid_step = 0;
        report.end = w.start;
        return report;
    }
    Coloring current = w.start;
    report.valid = true;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const WalkStep& s = w.steps[i];
        if (s.vertex < 0 || s.vertex >= t.n() || (s.eps != 1 && s.eps != -1)) {
            report.valid = false;
            report.first_invalid_step = static_cast<int>(i);
            break;
        }
        auto next = toggle(t, current, s.vertex, s.eps);
        if (!next) {
            report.valid = false;
            report.first_invalid_step = static_cast<int>(i);
            break;
        }
        current = std::move(*next);
        (s.eps > 0 ? report.up_toggles : report.down_toggles)[s.vertex]++;
    }
    report.end = std::move(current);
    report.has_opposite_edges = false;
    for (int v = 0; v < t.n(); ++v) {
        if (report.up_toggles[v] > 0 && report.down_toggles[v] > 0) {
            report.has_opposite_edges = true;
        }
    }
    report.monotone = !report.has_opposite_edges;
    return report;
}

} // namespace treecol
