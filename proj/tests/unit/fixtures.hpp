#ifndef QUIVERHOM_TEST_FIXTURES_HPP
#define QUIVERHOM_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "quiverhom/algebra.hpp"
#include "quiverhom/quiver.hpp"

namespace fx {

using namespace qh;

inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    return v;
}

// Oriented cycle 1 -> 2 -> ... -> n -> 1, arrows a1..an.
inline Quiver cycle(std::size_t n) {
    std::vector<Arrow> arrows;
    for (VertexId i = 0; i < n; ++i)
        arrows.push_back({"a" + std::to_string(i + 1), i, static_cast<VertexId>((i + 1) % n)});
    return Quiver(names(n), arrows);
}

// Linear 1 -> 2 -> ... -> n.
inline Quiver linear(std::size_t n) {
    std::vector<Arrow> arrows;
    for (VertexId i = 0; i + 1 < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return Quiver(names(n), arrows);
}

// alpha: 1 -> 2, beta: 2 -> 1, gamma loop at 2.
inline Quiver two_loop() {
    return Quiver(names(2), {{"alpha", 0, 1}, {"beta", 1, 0}, {"gamma", 1, 1}});
}

inline Path path(const Quiver& q, std::initializer_list<const char*> arrows) {
    std::vector<ArrowId> ids;
    for (const char* a : arrows) ids.push_back(q.arrow_index(a));
    return Path::from_arrows(q, ids);
}

// Zero patterns "beta then alpha" and "gamma then gamma".
inline AlgebraPtr two_loop_algebra() {
    Quiver q = two_loop();
    std::vector<Path> gens{path(q, {"beta", "alpha"}), path(q, {"gamma", "gamma"})};
    return build_algebra(q, IdealSpec::monomial(gens));
}

}  // namespace fx

#endif
