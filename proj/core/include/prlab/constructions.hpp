#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prlab/coloring.hpp"
#include "prlab/graph.hpp"

namespace prlab {

// How firmly a generated coloring's count is tied to the true pr value.
enum class Provenance {
    proved_range,     // equals pr(K_n, target) where that value is proved
    conjectured,      // matches a conjectured exact value
    lower_bound_only, // valid coloring, optimality not claimed
};

std::string to_string(Provenance p);

// One lower-bound coloring plus its closed-form color count. The coloring is
// always normalized; color_count == claimed_colors by construction. Freedom
// from properly colored target copies is checked by the verifier, not here.
struct ConstructionReport {
    EdgeColoring coloring;
    long long claimed_colors = 0;
    std::string formula_name;
    std::vector<std::pair<std::string, long long>> parameters;
    Provenance provenance = Provenance::lower_bound_only;
    std::string note; // discrepancy or applicability remarks, if any
};

enum class Variant { clique, join };

/// Coloring of K_n with 1+r colors and no properly colored P_{3+r},
/// r in {0,1,2}: monochromatic; one star; or two nested stars (the shared
/// edge keeps the first star's color) over a flood color. Requires n >= 3+r.
ConstructionReport small_path_blocker(int n, int r);

/// Lower-bound colorings for P_l, n >= l >= 4.
/// clique: rainbow K_{l-3} plus one flood color, C(l-3,2)+1 colors.
/// join:   rainbow K_{m-1} joined to the rest (m = floor(l/3)) with the
///         remaining clique colored by small_path_blocker(., l mod 3);
///         (m-1)n - C(m,2) + 1 + (l mod 3) colors.
ConstructionReport path_lower_bound(int n, int l, Variant variant);

/// Lower-bound colorings for C_k, n >= k >= 4; same two shapes with
/// b = floor((k-1)/3): clique gives C(k-1,2)+1 colors, join gives
/// b*n - C(b+1,2) + 1 + ((k-1) mod 3).
ConstructionReport cycle_lower_bound(int n, int k, Variant variant);

/// The triangle-plus-matching coloring blocking properly colored copies of
/// K_4 minus an edge; floor(3(n-1)/2) colors, n >= 4.
ConstructionReport k4minus_lower_bound(int n);

/// The block-partition coloring blocking properly colored K_{2,3}: blocks of
/// four (last block of size r, 1 <= r <= 4), rainbow inside blocks, color
/// index min(block_i, block_j) between them; 7k + C(r,2) colors, n >= 5.
ConstructionReport k23_lower_bound(int n);

/// Rainbow extremal witness of ex(n, {g - M : M matching}) plus one flood
/// color: ex + 1 colors. When the witness is all of K_n the flood class is
/// empty and the count stays at ex. Turan engine cap applies (n <= 9).
ConstructionReport turan_based_lower_bound(int n, const SimpleGraph& g);

/// Closed form (floor(l/3)-1)n - C(floor(l/3),2) + 1 + (l mod 3) for
/// pr(K_n, P_l). Proved for l >= 27 and n >= 2l^3; see path_formula_proved.
long long path_formula_value(long long n, long long l);
bool path_formula_proved(long long n, long long l);

/// Conjectured exact value for pr(K_n, C_k), n >= k >= 4:
/// max{ C(k-1,2)+n-k+1, floor((k-1)/3)n - C(floor((k-1)/3)+1,2) + 1 + r }
/// with r = (k-1) mod 3. Always labeled a conjecture in reports.
long long cycle_conjecture_value(long long n, long long k);

} // namespace prlab
