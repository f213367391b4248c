#include "lexdiv/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

namespace lexdiv::layout {

namespace {

constexpr double kCoincident = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

Vec2 jitter_direction(std::size_t index, std::size_t other, std::uint64_t seed) {
    std::uint64_t h = splitmix64(seed ^ splitmix64(index * 0x100000001b3ULL + other));
    double angle = 2.0 * std::numbers::pi * unit_interval(h);
    return {std::cos(angle), std::sin(angle)};
}

double mass(const SimilarityGraph& g, std::size_t i) { return static_cast<double>(g.degree[i]) + 1.0; }

void require_finite(const std::vector<Vec2>& positions) {
    for (std::size_t i = 0; i < positions.size(); ++i)
        if (!std::isfinite(positions[i].x) || !std::isfinite(positions[i].y))
            throw Error(errc::non_finite, "layout produced a non-finite coordinate at node " + std::to_string(i));
}

}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

SimilarityGraph build_graph(const std::vector<analytics::SimilarityRecord>& records, double threshold,
                            const std::vector<std::string>& languages) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw Error(errc::precondition, "threshold must lie in [0, 1]");

    std::set<std::string> codes(languages.begin(), languages.end());
    for (const auto& r : records) {
        codes.insert(r.lang_a);
        codes.insert(r.lang_b);
    }
    SimilarityGraph g;
    g.nodes.assign(codes.begin(), codes.end());
    g.degree.assign(g.nodes.size(), 0);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i], i);

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& r : records) {
        if (r.lang_a == r.lang_b || r.score < threshold || r.score <= 0.0) continue;
        std::size_t i = index.at(r.lang_a);
        std::size_t j = index.at(r.lang_b);
        if (j < i) std::swap(i, j);
        if (!seen.emplace(i, j).second) continue;
        g.edges.push_back({i, j, std::min(r.score, 1.0)});
        ++g.degree[i];
        ++g.degree[j];
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const SimilarityEdge& a, const SimilarityEdge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    return g;
}

LayoutState initial_state(const SimilarityGraph& graph, const LayoutParams& params) {
    LayoutState state;
    state.params = params;
    state.global_speed = params.speed;
    const std::size_t n = graph.nodes.size();
    state.positions.resize(n);
    state.prev_forces.assign(n, Vec2{});
    // mt19937_64's output sequence is fixed by the standard; the distributions
    // are not, so the mapping to the disc is done by hand.
    std::mt19937_64 rng(params.seed);
    const double radius = std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)));
    for (auto& p : state.positions) {
        double r = radius * std::sqrt(unit_interval(rng()));
        double angle = 2.0 * std::numbers::pi * unit_interval(rng());
        p = {r * std::cos(angle), r * std::sin(angle)};
    }
    return state;
}

std::vector<Vec2> compute_forces(const LayoutState& state, const SimilarityGraph& graph) {
    const auto& p = state.positions;
    const auto& prm = state.params;
    const std::size_t n = p.size();
    std::vector<Vec2> force(n);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec2 delta = p[i] - p[j];
            double d = norm(delta);
            if (d < kCoincident) continue;
            double magnitude = prm.k_r * mass(graph, i) * mass(graph, j) / d;
            Vec2 f = (magnitude / d) * delta;
            force[i] += f;
            force[j] -= f;
        }
    }

    for (const auto& e : graph.edges) {
        // w^delta * d along the edge, i.e. w^delta times the difference vector.
        Vec2 f = std::pow(e.weight, prm.delta) * (p[e.j] - p[e.i]);
        force[e.i] += f;
        force[e.j] -= f;
    }

    if (prm.k_g != 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            double r = norm(p[i]);
            double scale = prm.k_g * mass(graph, i) / std::max(r, 1.0);
            force[i] -= scale * p[i];
        }
    }
    return force;
}

LayoutState step(const LayoutState& state, const SimilarityGraph& graph) {
    if (state.positions.size() != graph.nodes.size())
        throw Error(errc::precondition, "layout state and graph disagree on node count");

    LayoutState next = state;
    const std::size_t n = next.positions.size();
    if (next.prev_forces.size() != n) next.prev_forces.assign(n, Vec2{});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (norm(next.positions[i] - next.positions[j]) < kCoincident)
                next.positions[j] += jitter_direction(j, i, next.params.seed);

    std::vector<Vec2> force = compute_forces(next, graph);
    std::vector<double> factor(n, next.global_speed);

    if (next.params.adaptive) {
        std::vector<double> swinging(n);
        double total_swinging = 0;
        double total_traction = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double m = mass(graph, i);
            swinging[i] = m * norm(force[i] - next.prev_forces[i]);
            total_swinging += swinging[i];
            total_traction += m * norm(force[i] + next.prev_forces[i]) / 2.0;
        }
        if (total_swinging > 0) {
            double target = next.params.tau * total_traction / total_swinging;
            double speed = std::min(target, 1.5 * next.global_speed);
            next.global_speed = speed > 0 ? speed : 0.5 * next.global_speed;
        }
        for (std::size_t i = 0; i < n; ++i)
            factor[i] = next.global_speed / (1.0 + std::sqrt(next.global_speed * swinging[i]));
    }

    for (std::size_t i = 0; i < n; ++i) {
        Vec2 displacement = factor[i] * force[i];
        double length = norm(displacement);
        if (length > next.params.max_step) displacement = (next.params.max_step / length) * displacement;
        next.positions[i] += displacement;
    }
    next.prev_forces = std::move(force);
    require_finite(next.positions);
    return next;
}

double max_displacement(const LayoutState& before, const LayoutState& after) {
    double worst = 0;
    for (std::size_t i = 0; i < before.positions.size() && i < after.positions.size(); ++i)
        worst = std::max(worst, norm(after.positions[i] - before.positions[i]));
    return worst;
}

LayoutResult run_from(LayoutState state, const SimilarityGraph& graph, std::size_t max_iters, double eps) {
    if (max_iters < 1) throw Error(errc::precondition, "max_iters must be >= 1");
    LayoutResult result;
    for (std::size_t it = 0; it < max_iters; ++it) {
        LayoutState next = step(state, graph);
        result.last_displacement = max_displacement(state, next);
        state = std::move(next);
        result.iterations = it + 1;
        if (result.last_displacement < eps) {
            result.converged = true;
            break;
        }
    }
    result.positions = std::move(state.positions);
    return result;
}

LayoutResult run(const SimilarityGraph& graph, const LayoutParams& params, std::size_t max_iters, double eps) {
    return run_from(initial_state(graph, params), graph, max_iters, eps);
}

std::string positions_tsv(const SimilarityGraph& graph, const std::vector<Vec2>& positions) {
    std::string out;
    char buf[96];
    for (std::size_t i = 0; i < graph.nodes.size() && i < positions.size(); ++i) {
        std::snprintf(buf, sizeof buf, "\t%.17g\t%.17g\n", positions[i].x, positions[i].y);
        out += graph.nodes[i];
        out += buf;
    }
    return out;
}

}  // namespace lexdiv::layout
