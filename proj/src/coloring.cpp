#include "treecol/coloring.hpp"

#include <algorithm>
#include <thread>

namespace treecol {

std::string Coloring::to_string() const {
    std::string s;
    s.reserve(colors.size());
    for (auto c : colors) s += static_cast<char>('0' + c);
    return s;
}

Coloring Coloring::from_string(const std::string& text) {
    Coloring c;
    c.colors.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '2') {
            throw ParseError(std::string("coloring digit must be 0, 1 or 2, got '") + ch + "'");
        }
        c.colors.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    if (c.colors.empty()) throw ParseError("empty coloring");
    return c;
}

bool is_proper(const Tree& t, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != t.n()) return false;
    for (auto [u, v] : t.edges()) {
        if (c.colors[u] > 2 || c.colors[v] > 2) return false;
        if (c.colors[u] == c.colors[v]) return false;
    }
    return true;
}

void require_proper(const Tree& t, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != t.n()) {
        throw ImproperColoring("coloring has " + std::to_string(c.colors.size()) +
                               " entries for a tree on " + std::to_string(t.n()) + " vertices");
    }
    if (!is_proper(t, c)) throw ImproperColoring("coloring is not proper: " + c.to_string());
}

std::optional<Coloring> toggle(const Tree& t, const Coloring& c, int v, int eps) {
    if (v < 0 || v >= t.n()) throw BadVertexId("toggle vertex out of range");
    if (eps != 1 && eps != -1) throw InvalidParameter("toggle direction must be +1 or -1");
    std::uint8_t next = static_cast<std::uint8_t>((c.colors[v] + eps + 3) % 3);
    for (int w : t.neighbors(v)) {
        if (c.colors[w] == next) return std::nullopt;
    }
    Coloring out = c;
    out.colors[v] = next;
    return out;
}

namespace {

void check_oracle_limit(const Tree& t) {
    if (t.n() > kOracleLimit) {
        throw OracleTooLarge("coloring oracle supports n <= " + std::to_string(kOracleLimit) +
                             ", got n=" + std::to_string(t.n()));
    }
}

} // namespace

ColoringSpace::ColoringSpace(const Tree& t) : tree_(t) {
    check_oracle_limit(t);
    int n = t.n();
    pow3_.resize(n);
    std::uint64_t p = 1;
    for (int v = 0; v < n; ++v, p *= 3) pow3_[v] = p;

    // Backtracking over vertices in id order; each edge constraint is checked
    // at its higher-numbered endpoint, so every proper coloring appears once.
    codes_.reserve(static_cast<std::size_t>(3) << (n - 1));
    std::vector<std::uint8_t> partial(n, 0);
    std::vector<int> choice(n, -1);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) {
            std::uint64_t code = 0;
            for (int v = 0; v < n; ++v) code += pow3_[v] * partial[v];
            codes_.push_back(code);
            --depth;
            continue;
        }
        bool advanced = false;
        for (int c = choice[depth] + 1; c < 3; ++c) {
            bool ok = true;
            for (int w : tree_.neighbors(depth)) {
                if (w < depth && partial[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                choice[depth] = c;
                partial[depth] = static_cast<std::uint8_t>(c);
                ++depth;
                if (depth < n) choice[depth] = -1;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            choice[depth] = -1;
            --depth;
        }
    }
    std::sort(codes_.begin(), codes_.end());

    colors_flat_.resize(codes_.size() * static_cast<std::size_t>(n));
    for (std::size_t id = 0; id < codes_.size(); ++id) {
        std::uint64_t rest = codes_[id];
        for (int v = 0; v < n; ++v) {
            colors_flat_[id * n + v] = static_cast<std::uint8_t>(rest % 3);
            rest /= 3;
        }
    }
}

Coloring ColoringSpace::coloring(std::size_t id) const {
    int n = tree_.n();
    Coloring c;
    c.colors.assign(colors_flat_.begin() + id * n, colors_flat_.begin() + (id + 1) * n);
    return c;
}

std::size_t ColoringSpace::index_of(const Coloring& c) const {
    require_proper(tree_, c);
    std::uint64_t code = 0;
    for (int v = 0; v < tree_.n(); ++v) code += pow3_[v] * c.colors[v];
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) {
        throw ImproperColoring("coloring not found in enumeration: " + c.to_string());
    }
    return static_cast<std::size_t>(it - codes_.begin());
}

void ColoringSpace::neighbor_ids(std::size_t id, std::vector<std::size_t>& out) const {
    out.clear();
    int n = tree_.n();
    const std::uint8_t* digits = colors_flat_.data() + id * n;
    std::uint64_t code = codes_[id];
    for (int v = 0; v < n; ++v) {
        for (int eps : {-1, +1}) {
            std::uint8_t next = static_cast<std::uint8_t>((digits[v] + eps + 3) % 3);
            bool ok = true;
            for (int w : tree_.neighbors(v)) {
                if (digits[w] == next) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::uint64_t ncode = code + pow3_[v] * next - pow3_[v] * digits[v];
            auto it = std::lower_bound(codes_.begin(), codes_.end(), ncode);
            out.push_back(static_cast<std::size_t>(it - codes_.begin()));
        }
    }
}

std::vector<std::size_t> ColoringSpace::neighbor_ids(std::size_t id) const {
    std::vector<std::size_t> out;
    neighbor_ids(id, out);
    return out;
}

std::vector<int> ColoringSpace::bfs_from(std::size_t src) const {
    std::vector<int> dist(codes_.size(), -1);
    std::vector<std::size_t> frontier{src}, next, nbr;
    dist[src] = 0;
    int d = 0;
    while (!frontier.empty()) {
        next.clear();
        for (std::size_t u : frontier) {
            neighbor_ids(u, nbr);
            for (std::size_t w : nbr) {
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
        ++d;
    }
    return dist;
}

int ColoringSpace::distance_between(std::size_t from, std::size_t to) const {
    if (from == to) return 0;
    // Expand the smaller frontier from each side in turn until they touch.
    std::vector<int> dist_a(codes_.size(), -1), dist_b(codes_.size(), -1);
    std::vector<std::size_t> front_a{from}, front_b{to}, next, nbr;
    dist_a[from] = 0;
    dist_b[to] = 0;
    int depth_a = 0, depth_b = 0;
    while (!front_a.empty() && !front_b.empty()) {
        bool expand_a = front_a.size() <= front_b.size();
        auto& frontier = expand_a ? front_a : front_b;
        auto& dist = expand_a ? dist_a : dist_b;
        const auto& other = expand_a ? dist_b : dist_a;
        int depth = expand_a ? ++depth_a : ++depth_b;
        int best = -1;
        next.clear();
        for (std::size_t u : frontier) {
            neighbor_ids(u, nbr);
            for (std::size_t w : nbr) {
                if (other[w] >= 0) {
                    int total = depth + other[w];
                    if (best < 0 || total < best) best = total;
                }
                if (dist[w] < 0) {
                    dist[w] = depth;
                    next.push_back(w);
                }
            }
        }
        if (best >= 0) return best;
        frontier.swap(next);
    }
    return -1; // unreachable for trees: the recoloring graph is connected
}

std::vector<Coloring> enumerate_colorings(const Tree& t) {
    ColoringSpace space(t);
    std::vector<Coloring> out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.coloring(i));
    return out;
}

int bfs_distance(const Tree& t, const Coloring& f, const Coloring& g) {
    ColoringSpace space(t);
    return space.distance_between(space.index_of(f), space.index_of(g));
}

OracleDiameter oracle_diameter(const Tree& t, int jobs) {
    ColoringSpace space(t);
    std::size_t count = space.size();
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<std::size_t>(jobs, count));

    struct Best {
        long long value = -1;
        std::size_t from = 0, to = 0;
    };
    std::vector<Best> bests(jobs);
    auto run = [&](int job) {
        Best& best = bests[job];
        for (std::size_t src = job; src < count; src += static_cast<std::size_t>(jobs)) {
            auto dist = space.bfs_from(src);
            for (std::size_t v = 0; v < dist.size(); ++v) {
                if (dist[v] > best.value) {
                    best.value = dist[v];
                    best.from = src;
                    best.to = v;
                }
            }
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(run, j);
        for (auto& th : pool) th.join();
    }
    // Same winner regardless of job count: maximize value, then take the
    // smallest (from, to) pair.
    Best merged;
    for (const Best& b : bests) {
        if (b.value > merged.value ||
            (b.value == merged.value &&
             std::make_pair(b.from, b.to) < std::make_pair(merged.from, merged.to))) {
            merged = b;
        }
    }
    OracleDiameter out;
    out.value = merged.value;
    out.from = space.coloring(merged.from);
    out.to = space.coloring(merged.to);
    return out;
}

} // namespace treecol
