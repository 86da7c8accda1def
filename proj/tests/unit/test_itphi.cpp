#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "../support/random_algebras.hpp"
#include "quiverhom/error.hpp"
#include "quiverhom/itphi.hpp"

using namespace qh;

namespace {

ClassTable truncated(const Quiver& q, std::size_t k) { return ClassTable(build_algebra(q, IdealSpec::truncated(k))); }

// Length of the syzygy trajectory until it vanishes, or -1 past `cap`.
int resolution_length(const ClassTable& T, ModuleMultiset m, int cap) {
    m = nonprojective_part(T, m);
    for (int n = 0; n <= cap; ++n) {
        if (m.empty()) return n;
        m = nonprojective_part(T, syzygy(T, m));
    }
    return -1;
}

}  // namespace

TEST_CASE("lattice of the cyclic quiver is a swap") {
    ClassTable T = truncated(fx::cycle(2), 2);
    K0Lattice L = build_lattice(T, {T.simple(0)});
    REQUIRE(L.rank() == 2);
    CHECK(L.T(0, 0) == 0);
    CHECK(L.T(1, 0) == 1);
    CHECK(L.T(0, 1) == 1);
    CHECK(L.T(1, 1) == 0);
    CHECK(phi(T, direct_sum(singleton(T.simple(0)), singleton(T.simple(1)))) == 0);
    PhiReport r = phi_report(T, singleton(T.simple(0)));
    CHECK(r.ranks == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("lattice of the two-loop algebra") {
    ClassTable T(fx::two_loop_algebra());
    ClassId g = T.class_of(fx::path(T.algebra().quiver(), {"gamma"}));
    K0Lattice L = build_lattice(T, {g});
    REQUIRE(L.rank() == 1);
    CHECK(L.T(0, 0) == 1);
    CHECK(phi(T, singleton(g)) == 0);
    CHECK(phi(T, singleton(T.projective(0))) == 0);

    PhidimBounds b = phidim_bounds(T);
    REQUIRE(b.upper);
    CHECK(b.lower <= *b.upper);
    std::vector<ClassId> all;
    for (const auto& c : T.classes()) all.push_back(c.id);
    PhiReport sub = phidim_subcat_report(T, all);
    CHECK(stabilization_sound(sub.lattice, full_generators(sub.lattice)));
    for (const auto& c : T.classes()) {
        if (c.projective) continue;
        ModuleMultiset m = singleton(c.id);
        CHECK(phi(T, m) <= phi(T, syzygy(T, m)) + 1);
    }
}

TEST_CASE("phi equals pd on finite-pd classes") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 2; k <= 3; ++k) {
            ClassTable T = truncated(fx::linear(n), k);
            for (const auto& c : T.classes()) {
                int len = resolution_length(T, singleton(c.id), 50);
                REQUIRE(len >= 0);
                CHECK(phi(T, singleton(c.id)) == static_cast<std::size_t>(len));
            }
        }
}

TEST_CASE("subcategory phidim") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 2; k <= 3; ++k) {
            ClassTable T = truncated(fx::cycle(n), k);
            std::vector<ClassId> all;
            for (const auto& c : T.classes()) all.push_back(c.id);
            CHECK(phidim_subcat(T, all) == 0);
            PhidimBounds b = phidim_bounds(T);
            CHECK(b.lower == 0);
            CHECK(b.upper == 1);
            CHECK(b.exact == 0);
        }

    ClassTable A3 = truncated(fx::linear(3), 2);
    std::vector<ClassId> all;
    std::size_t max_pd = 0;
    for (const auto& c : A3.classes()) {
        all.push_back(c.id);
        max_pd = std::max(max_pd, A3.pd(c.id).value);
    }
    CHECK(phidim_subcat(A3, all) == max_pd);
    PhidimBounds b = phidim_bounds(A3);
    CHECK(b.exact == 2);
    CHECK(b.lower == 2);
    CHECK(*b.upper >= *b.exact);
}

TEST_CASE("phi properties on random monomial algebras") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraPtr A = rnd::random_monomial(rng);
        ClassTable T(A);
        std::vector<ClassId> np;
        for (const auto& c : T.classes())
            if (!c.projective) np.push_back(c.id);
        if (np.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, np.size() - 1);
        for (int s = 0; s < 10; ++s) {
            ModuleMultiset m = singleton(np[pick(rng)]);
            ModuleMultiset n = singleton(np[pick(rng)], 2);
            std::size_t pm = phi(T, m);
            ExtNat d = pd(T, m);
            if (!d.infinite) CHECK(pm == d.value);
            else CHECK(pm == 0);
            CHECK(pm <= phi(T, direct_sum(m, n)));
            ModuleMultiset m3 = m;
            for (auto& [c, k] : m3) k *= 3;
            CHECK(phi(T, m3) == pm);
            ModuleMultiset om = nonprojective_part(T, syzygy(T, m));
            if (!om.empty()) CHECK(pm <= phi(T, om) + 1);
            PhiReport r = phi_report(T, direct_sum(m, n));
            CHECK(stabilization_sound(r.lattice, generator_columns(r.lattice, T, direct_sum(m, n))));
        }
    }
}

TEST_CASE("relations algebras are rejected by the lattice") {
    Quiver q(fx::names(4), {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}});
    Relation r{{{Scalar(1), fx::path(q, {"a", "b"})}, {Scalar(-1), fx::path(q, {"c", "d"})}}};
    AlgebraPtr A = build_algebra(q, IdealSpec::with_relations({r}, 3));
    CHECK_THROWS_AS(ClassTable{A}, Error);
    PhidimBounds b = phidim_bounds_any(A, 6);
    // Acyclic: finite global dimension is exact.
    REQUIRE(b.exact);
    CHECK(b.lower <= *b.exact);
}

TEST_CASE("triangular hypotheses") {
    // Two acyclic parts joined by one bridge arrow c annihilating what precedes it.
    Quiver q(fx::names(4), {{"a", 0, 1}, {"c", 1, 2}, {"b", 2, 3}});
    AlgebraPtr C = build_algebra(q, IdealSpec::monomial({fx::path(q, {"a", "c"})}));
    TriangularReport r = triangular_check(C, {0, 1}, {2, 3});
    CHECK(r.consistent);
    REQUIRE(r.theorem_bound);
    CHECK(r.a.exact == 1);
    CHECK(r.b.exact == 1);
    CHECK(*r.theorem_bound == 3);
    CHECK(r.c.lower <= 3);

    CHECK_THROWS_AS(triangular_check(C, {2, 3}, {0, 1}), Error);
    AlgebraPtr D = build_algebra(q, IdealSpec::truncated(3));
    CHECK_THROWS_AS(triangular_check(D, {0, 1}, {2, 3}), Error);
}
