#pragma once
// ForceAtlas2-style placement of the lexicon-similarity graph.
//
// Force model (mass m(u) = deg(u) + 1):
//   repulsion   k_r * m(u) * m(v) / d(u, v)      between every node pair
//   attraction  w(u, v)^delta * d(u, v)          along each edge
//   gravity     k_g * m(u) toward the origin, scaled down linearly inside
//               the unit disc so the origin is a stable rest point
//
// Each step computes all forces from the old positions, then moves every node
// at once. Repulsion is exact O(n^2).

#include "lexdiv/analytics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lexdiv::layout {

struct Vec2 {
    double x = 0;
    double y = 0;

    Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(Vec2 o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    friend Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    bool operator==(const Vec2&) const = default;
};

double norm(Vec2 v);

struct SimilarityEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    double weight = 0;  // in (0, 1]
};

struct SimilarityGraph {
    std::vector<std::string> nodes;
    std::vector<SimilarityEdge> edges;
    std::vector<std::size_t> degree;
};

// Edge (a, b, score) for every record with score >= threshold and score > 0.
// Nodes are the languages of all records plus `languages`, sorted.
SimilarityGraph build_graph(const std::vector<analytics::SimilarityRecord>& records, double threshold,
                            const std::vector<std::string>& languages = {});

struct LayoutParams {
    double k_r = 1.0;       // repulsion scale
    double k_g = 1.0;       // gravity scale
    double delta = 1.0;     // edge-weight exponent
    double tau = 1.0;       // jitter tolerance for the adaptive speed
    double max_step = 10.0; // displacement cap per node per step
    double speed = 0.1;     // initial (and, in fixed mode, constant) global speed
    bool adaptive = false;  // swinging/traction speed control
    std::uint64_t seed = 42;

    bool operator==(const LayoutParams&) const = default;
};

struct LayoutState {
    std::vector<Vec2> positions;
    std::vector<Vec2> prev_forces;
    double global_speed = 0.1;
    LayoutParams params;
};

// Positions drawn uniformly in a disc of radius sqrt(n), from params.seed.
LayoutState initial_state(const SimilarityGraph& graph, const LayoutParams& params);

// Net force on every node at the state's current positions.
std::vector<Vec2> compute_forces(const LayoutState& state, const SimilarityGraph& graph);

// One synchronous update. Nodes closer than 1e-9 are first separated by a
// deterministic unit displacement derived from (node index, seed).
// Throws Error(non-finite) if any coordinate becomes non-finite.
LayoutState step(const LayoutState& state, const SimilarityGraph& graph);

// Largest node displacement of the most recent step.
double max_displacement(const LayoutState& before, const LayoutState& after);

struct LayoutResult {
    std::vector<Vec2> positions;
    std::size_t iterations = 0;
    bool converged = false;
    double last_displacement = 0;
};

// Steps until the largest displacement drops below eps or max_iters is hit.
LayoutResult run(const SimilarityGraph& graph, const LayoutParams& params, std::size_t max_iters, double eps);
LayoutResult run_from(LayoutState state, const SimilarityGraph& graph, std::size_t max_iters, double eps);

// `code\tx\ty` lines in node order.
std::string positions_tsv(const SimilarityGraph& graph, const std::vector<Vec2>& positions);

}  // namespace lexdiv::layout
