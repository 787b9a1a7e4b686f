#include "prlab/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "prlab/turan.hpp"

namespace prlab {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::proved_range: return "proved";
        case Provenance::conjectured: return "conjectured";
        case Provenance::lower_bound_only: return "lower-bound-only";
    }
    return "?";
}

namespace {

long long binom2(long long x) { return x * (x - 1) / 2; }

inline int pair_index(int i, int j) {
    return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

// Colors K[subset] with 1+r colors so that no properly colored P_{3+r} lies
// inside it: r=0 monochromatic, r=1 a star over a flood color, r=2 two
// nested stars (the edge between the two hubs keeps the first hub's color).
void paint_blocker(std::vector<int>& raw, const std::vector<int>& subset, int r,
                   int first_color) {
    int u = subset[0];
    int v = r >= 2 ? subset[1] : -1;
    for (size_t a = 0; a < subset.size(); ++a) {
        for (size_t b = a + 1; b < subset.size(); ++b) {
            int i = subset[a], j = subset[b];
            int c = first_color + r; // flood
            if (r >= 1 && (i == u || j == u)) c = first_color;
            else if (r >= 2 && (i == v || j == v)) c = first_color + 1;
            raw[pair_index(i, j)] = c;
        }
    }
}

} // namespace

ConstructionReport small_path_blocker(int n, int r) {
    if (r < 0 || r > 2) throw std::invalid_argument("small_path_blocker: r must be 0, 1 or 2");
    if (n < 3 + r)
        throw std::invalid_argument("small_path_blocker: need n >= " + std::to_string(3 + r));
    std::vector<int> raw(pair_count(n), -1);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    paint_blocker(raw, all, r, 0);
    ConstructionReport rep;
    rep.coloring = EdgeColoring::from_colors(n, std::move(raw));
    rep.claimed_colors = 1 + r;
    rep.formula_name = "blocker";
    rep.parameters = {{"n", n}, {"r", r}};
    rep.provenance = Provenance::proved_range; // equals pr(K_n, P_{3+r})
    return rep;
}

ConstructionReport path_lower_bound(int n, int l, Variant variant) {
    if (l < 4) throw std::invalid_argument("path_lower_bound: need l >= 4");
    if (n < l) throw std::invalid_argument("path_lower_bound: need n >= l");
    int rl = l % 3;
    std::vector<int> raw(pair_count(n), -1);
    long long count = 0;
    ConstructionReport rep;

    if (variant == Variant::clique) {
        // rainbow K_{l-3} on the first labels, one flood color elsewhere
        int q = l - 3;
        int next = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                raw[pair_index(i, j)] = (j < q) ? next++ : -1;
        for (int& c : raw)
            if (c == -1) c = next;
        count = binom2(q) + 1;
        rep.formula_name = "path-clique";
        rep.provenance = Provenance::lower_bound_only;
    } else {
        // rainbow K_{m-1} joined to everything, blocker on the rest
        int a = l / 3 - 1;
        int next = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (i < a) raw[pair_index(i, j)] = next++;
        std::vector<int> rest(n - a);
        std::iota(rest.begin(), rest.end(), a);
        paint_blocker(raw, rest, rl, next);
        count = (static_cast<long long>(a)) * n - binom2(a + 1) + 1 + rl;
        rep.formula_name = "path-join";
        // proved exactly where the closed form is known to equal pr
        if (l <= 6 || path_formula_proved(n, l)) rep.provenance = Provenance::proved_range;
        else rep.provenance = Provenance::lower_bound_only;
    }
    rep.coloring = EdgeColoring::from_colors(n, std::move(raw));
    rep.claimed_colors = count;
    rep.parameters = {{"n", n}, {"l", l}, {"r_l", rl}};
    return rep;
}

ConstructionReport cycle_lower_bound(int n, int k, Variant variant) {
    if (k < 4) throw std::invalid_argument("cycle_lower_bound: need k >= 4");
    if (n < k) throw std::invalid_argument("cycle_lower_bound: need n >= k");
    int rk = (k - 1) % 3;
    std::vector<int> raw(pair_count(n), -1);
    long long count = 0;
    ConstructionReport rep;

    if (variant == Variant::clique) {
        int q = k - 1;
        int next = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                raw[pair_index(i, j)] = (j < q) ? next++ : -1;
        for (int& c : raw)
            if (c == -1) c = next;
        count = binom2(q) + 1;
        rep.formula_name = "cycle-clique";
        rep.note = "the stated max term C(k-1,2)+n-k+1 is not produced by this "
                   "coloring; it yields C(k-1,2)+1";
    } else {
        int b = (k - 1) / 3;
        int next = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (i < b) raw[pair_index(i, j)] = next++;
        std::vector<int> rest(n - b);
        std::iota(rest.begin(), rest.end(), b);
        paint_blocker(raw, rest, rk, next);
        count = static_cast<long long>(b) * n - binom2(b + 1) + 1 + rk;
        rep.formula_name = "cycle-join";
    }

    // proved when the count meets a known exact value, conjectured when it
    // meets the conjectured max, otherwise just a valid lower bound
    long long proved = -1;
    if (n == k) proved = binom2(n - 1) + 1;
    else if (k == 4) proved = n;
    else if (k == 5) proved = n + 2;
    else if (k == 6) proved = n + 5;
    if (count == proved) rep.provenance = Provenance::proved_range;
    else if (proved == -1 && count == cycle_conjecture_value(n, k))
        rep.provenance = Provenance::conjectured;
    else rep.provenance = Provenance::lower_bound_only;

    rep.coloring = EdgeColoring::from_colors(n, std::move(raw));
    rep.claimed_colors = count;
    rep.parameters = {{"n", n}, {"k", k}, {"r_k1", rk}};
    return rep;
}

ConstructionReport k4minus_lower_bound(int n) {
    if (n < 4) throw std::invalid_argument("k4minus_lower_bound: need n >= 4");
    std::vector<int> raw(pair_count(n), -1);
    int next = 0;
    int t = (n - 3) / 2; // matched pairs beyond the triangle
    // pair colors: everything earlier than x_i sees x_i in one color, y_i in another
    for (int i = 1; i <= t; ++i) {
        int xi = 3 + 2 * (i - 1), yi = xi + 1;
        int cx = next++, cy = next++;
        for (int u = 0; u < xi; ++u) raw[pair_index(u, xi)] = cx;
        for (int u = 0; u < yi; ++u)
            if (u != xi) raw[pair_index(u, yi)] = cy;
    }
    if (n % 2 == 0) {
        int w = n - 1, cw = next++;
        for (int u = 0; u < w; ++u) raw[pair_index(u, w)] = cw;
    }
    // triangle and matching edges each get their own color
    raw[pair_index(0, 1)] = next++;
    raw[pair_index(0, 2)] = next++;
    raw[pair_index(1, 2)] = next++;
    for (int i = 1; i <= t; ++i) {
        int xi = 3 + 2 * (i - 1);
        raw[pair_index(xi, xi + 1)] = next++;
    }
    ConstructionReport rep;
    rep.coloring = EdgeColoring::from_colors(n, std::move(raw));
    rep.claimed_colors = (3LL * (n - 1)) / 2;
    rep.formula_name = "k4minus";
    rep.parameters = {{"n", n}};
    rep.provenance = Provenance::proved_range;
    return rep;
}

ConstructionReport k23_lower_bound(int n) {
    if (n < 5) throw std::invalid_argument("k23_lower_bound: need n >= 5");
    int k = (n - 1) / 4;     // full blocks of four
    int r = n - 4 * k;       // last block size, 1..4
    auto block_of = [&](int v) { return v / 4 < k ? v / 4 : k; };
    std::vector<int> raw(pair_count(n), -1);
    int next = k; // colors 0..k-1 reserved for between-block classes
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int bi = block_of(i), bj = block_of(j);
            raw[pair_index(i, j)] = bi == bj ? next++ : std::min(bi, bj);
        }
    }
    ConstructionReport rep;
    rep.coloring = EdgeColoring::from_colors(n, std::move(raw));
    rep.claimed_colors = 7LL * k + binom2(r);
    rep.formula_name = "k23";
    rep.parameters = {{"n", n}, {"blocks", k}, {"r", r}};
    rep.provenance = Provenance::lower_bound_only;
    return rep;
}

ConstructionReport turan_based_lower_bound(int n, const SimpleGraph& g) {
    auto family = reduced_family(g, true);
    auto turan = ex_exact(n, family); // throws above the engine cap
    std::vector<int> raw(pair_count(n), -1);
    int next = 0;
    for (auto [i, j] : turan.witness.edges) raw[pair_index(i, j)] = next++;
    bool flooded = false;
    for (int& c : raw)
        if (c == -1) {
            c = next;
            flooded = true;
        }
    ConstructionReport rep;
    rep.coloring = EdgeColoring::from_colors(n, std::move(raw));
    rep.claimed_colors = turan.value + (flooded ? 1 : 0);
    rep.formula_name = "turan";
    rep.parameters = {{"n", n}, {"ex", turan.value}, {"family_size", static_cast<long long>(family.size())}};
    rep.provenance = Provenance::lower_bound_only;
    if (!flooded)
        rep.note = "extremal witness is all of K_n; no flood color was needed";
    return rep;
}

long long path_formula_value(long long n, long long l) {
    if (l < 4) throw std::invalid_argument("path_formula_value: need l >= 4");
    long long m = l / 3;
    return (m - 1) * n - binom2(m) + 1 + l % 3;
}

bool path_formula_proved(long long n, long long l) {
    return l >= 27 && n >= 2 * l * l * l;
}

long long cycle_conjecture_value(long long n, long long k) {
    if (k < 4) throw std::invalid_argument("cycle_conjecture_value: need k >= 4");
    if (n < k) throw std::invalid_argument("cycle_conjecture_value: need n >= k");
    long long b = (k - 1) / 3;
    long long join_term = b * n - binom2(b + 1) + 1 + (k - 1) % 3;
    long long clique_term = binom2(k - 1) + n - k + 1;
    return std::max(join_term, clique_term);
}

} // namespace prlab
