#ifndef QUIVERHOM_TEST_RANDOM_ALGEBRAS_HPP
#define QUIVERHOM_TEST_RANDOM_ALGEBRAS_HPP

#include <random>
#include <string>
#include <vector>

#include "quiverhom/algebra.hpp"
#include "quiverhom/error.hpp"

namespace rnd {

using namespace qh;

inline Quiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows,
                            bool acyclic) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    std::size_t m = std::uniform_int_distribution<std::size_t>(acyclic && n == 1 ? 0 : 1, max_arrows)(rng);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    for (std::size_t i = 0; i < m; ++i) {
        VertexId s = pick(rng), t = pick(rng);
        if (acyclic) {
            if (s == t) continue;
            if (s > t) std::swap(s, t);
        }
        arrows.push_back({"x" + std::to_string(arrows.size() + 1), s, t});
    }
    return Quiver(names, arrows);
}

inline Path random_path(std::mt19937_64& rng, const Quiver& q, std::size_t len) {
    if (q.num_arrows() == 0) return Path();
    std::vector<ArrowId> arrows{std::uniform_int_distribution<ArrowId>(
        0, static_cast<ArrowId>(q.num_arrows() - 1))(rng)};
    while (arrows.size() < len) {
        const auto& out = q.out_arrows(q.arrow(arrows.back()).target);
        if (out.empty()) break;
        arrows.push_back(out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)]);
    }
    return Path::from_arrows(q, arrows);
}

/// Random finite-dimensional monomial algebra; retries until admissible.
inline AlgebraPtr random_monomial(std::mt19937_64& rng, std::size_t max_vertices = 4,
                                  std::size_t max_arrows = 6) {
    for (;;) {
        Quiver q = random_quiver(rng, max_vertices, max_arrows, false);
        if (q.num_arrows() == 0) continue;
        std::vector<Path> gens;
        std::size_t count = std::uniform_int_distribution<std::size_t>(1, 2 * q.num_arrows())(rng);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t len = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
            Path p = random_path(rng, q, len);
            if (p.length() >= 2) gens.push_back(p);
        }
        if (gens.empty()) continue;
        try {
            AlgebraPtr A = build_algebra(q, IdealSpec::monomial(gens));
            if (A->dimension() <= 120) return A;
        } catch (const Error&) {
        }
    }
}

inline AlgebraPtr random_acyclic_truncated(std::mt19937_64& rng, std::size_t max_vertices,
                                           std::size_t max_arrows, std::size_t k) {
    Quiver q = random_quiver(rng, max_vertices, max_arrows, true);
    return build_algebra(q, IdealSpec::truncated(k));
}

}  // namespace rnd

#endif
