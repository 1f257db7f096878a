#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "o1p/diagpicker.hpp"

namespace o1p {

struct ColoringReport {
    int red_count = 0;
    int blue_count = 0;
    int max_red_degree = 0;
    bool red_is_forest = false;
    // Components of the red subgraph with at least one edge, and their vertices.
    int red_tree_count = 0;
    int red_spanned_vertices = 0;
    bool blue_is_maximal_plane = false;
    bool one_red_per_pair = false;

    friend bool operator==(const ColoringReport&, const ColoringReport&) = default;
};

// Recomputes every field from the graph alone. Blue maximality is checked on
// the embedding: blue diagonals are drawn inside their faces and every face
// of the result must be a triangle. Throws ForeignEdge for unknown references.
ColoringReport verify_coloring(const OptimalOnePlaneGraph& g, const RedBlueColoring& c);

// Selection number `mask` as a coloring: face i takes its white diagonal iff
// bit (F - 1 - i) is set, so increasing masks are lexicographic.
RedBlueColoring coloring_from_mask(const OptimalOnePlaneGraph& g, std::uint64_t mask);

struct OracleOptions {
    int budget = 22;  // max faces
    int threads = 1;
    // Optional: also minimise the largest red degree among these vertices
    // over forest colorings.
    std::vector<Vertex> watch;
};

struct OracleResult {
    int min_max_degree = 0;
    RedBlueColoring witness;  // lexicographically least optimum
    std::uint64_t selections = 0;
    std::uint64_t forest_colorings = 0;
    // (tree_count, spanned, max_degree) -> number of forest colorings
    std::map<std::tuple<int, int, int>, std::uint64_t> forest_stats;
    // Set when watch vertices were given and some forest coloring exists.
    std::optional<int> watched_min_max_degree;
};

// Full enumeration of the 2^F selections. Throws TooLarge when F > budget.
OracleResult oracle_enumerate(const OptimalOnePlaneGraph& g, const OracleOptions& options = {});

// Budget from O1P_ORACLE_BUDGET if set, else 22.
int default_oracle_budget();

// For a forest coloring: true iff exactly two trees span all n vertices.
// Throws InvalidArgument if the report is not a forest.
bool lemma1_counting_check(const ColoringReport& report, int n);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Reduced fraction; den > 0.
Rational make_rational(std::int64_t num, std::int64_t den);
bool operator<(const Rational& a, const Rational& b);

// Degree counting on the grid family: the red edges (2m_R endpoints) must fit
// into 6 per gray cycle plus k per black vertex, so k >= 4 - 4/h - 2/h^2.
struct GridCertificate {
    int h = 0;
    std::int64_t red_endpoints = 0;    // 2 m_R = 10h^2 - 16h + 4
    std::int64_t gray_endpoints = 0;   // 6 (h-1)^2
    std::int64_t black_vertices = 0;   // h^2
    Rational bound;
    bool no_degree_3_coloring = false;  // bound > 3
};

// Throws InvalidArgument for h < 3.
GridCertificate lemma4_certificate(int h);

// Sum of red degrees over each gray 4-cycle equals 6. The grid size is
// recovered from the vertex count; throws NotGridFamily if g does not have
// the grid layout.
bool gray_cycle_degree_check(const OptimalOnePlaneGraph& g, const RedBlueColoring& selection);

}  // namespace o1p
