#include "doctest.h"
#include "fixtures.hpp"
#include "quiverhom/error.hpp"
#include "quiverhom/homgor.hpp"

using namespace qh;

namespace {

AlgebraPtr truncated(const Quiver& q, std::size_t k) { return build_algebra(q, IdealSpec::truncated(k)); }

// Loop x at 1, arrow b: 1 -> 2, loop y at 2.
Quiver loop_into_loop() { return Quiver(fx::names(2), {{"x", 0, 0}, {"b", 0, 1}, {"y", 1, 1}}); }

// Two loops at one vertex.
Quiver double_loop() { return Quiver(fx::names(1), {{"x", 0, 0}, {"y", 0, 0}}); }

}  // namespace

TEST_CASE("perfect paths of the two-loop algebra") {
    ClassTable T(fx::two_loop_algebra());
    const Quiver& q = T.algebra().quiver();
    Path gamma = fx::path(q, {"gamma"});
    auto pp = perfect_paths(T);
    REQUIRE(pp.size() == 1);
    CHECK(pp[0].path == gamma);
    REQUIRE(pp[0].cycle.size() == 1);
    CHECK(pp[0].cycle[0] == gamma);

    auto gp = gp_indecomposables(T);
    REQUIRE(gp.size() == 1);
    CHECK(gp[0].id == T.class_of(gamma));
    CHECK_FALSE(is_cm_free(T));

    auto w = find_periodic_module(T);
    REQUIRE(w);
    CHECK(w->module == singleton(T.class_of(gamma)));
    CHECK(w->period == 1);
    CHECK_FALSE(omega_infinity_trivial(T));

    CoGorensteinVerdict v = cogorenstein_monomial(T);
    CHECK(v.verdict);
    CHECK_FALSE(v.witness);
}

TEST_CASE("cyclic truncated algebras are self-injective and Co-Gorenstein") {
    ClassTable T(truncated(fx::cycle(2), 2));
    CHECK(is_self_injective_truncated(T.algebra()));
    auto pp = perfect_paths(T);
    CHECK(pp.size() == 2);
    for (const PerfectPath& p : pp) CHECK(p.cycle.size() == 2);
    auto w = find_periodic_module(T);
    REQUIRE(w);
    CHECK(w->period == 2);
    CHECK((w->module == singleton(T.simple(0)) || w->module == singleton(T.simple(1))));
    CoGorensteinVerdict v = cogorenstein_truncated(T);
    CHECK(v.verdict);
    CHECK(v.branch == "cycle_graph");
    CHECK(cogorenstein_monomial(T).verdict);

    ClassTable T5(truncated(fx::cycle(5), 3));
    CHECK(is_self_injective_truncated(T5.algebra()));
    // Every nonzero non-trivial path of length < 3 is perfect.
    CHECK(perfect_paths(T5).size() == 10);
    CHECK(gp_indecomposables(T5).size() == 10);
    CHECK(cogorenstein_monomial(T5).verdict);
}

TEST_CASE("acyclic algebras have trivial Omega-infinity") {
    ClassTable T(truncated(fx::linear(4), 2));
    CHECK_FALSE(is_self_injective_truncated(T.algebra()));
    CHECK(is_cm_free(T));
    CHECK(omega_infinity_trivial(T));
    CoGorensteinVerdict v = cogorenstein_truncated(T);
    CHECK(v.verdict);
    CHECK(v.branch == "acyclic");
    CHECK(restrict_to_q_infinity(T.algebra()) == nullptr);
}

TEST_CASE("a cycle-graph final subheart yields a non-GP periodic witness") {
    ClassTable T(truncated(loop_into_loop(), 2));
    CoGorensteinVerdict v = cogorenstein_truncated(T);
    CHECK_FALSE(v.verdict);
    CHECK(v.branch == "counterexample");
    REQUIRE(v.witness);
    auto gp = gp_indecomposables(T);
    CHECK(non_gp_summand(T, v.witness->module, gp));
    CHECK(is_periodic(T, v.witness->module).periodic);
    CHECK(v.witness->module == singleton(T.simple(1)));

    CoGorensteinVerdict s = cogorenstein_monomial(T);
    CHECK_FALSE(s.verdict);

    AlgebraPtr R = restrict_to_q_infinity(T.algebra());
    REQUIRE(R);
    ClassTable TR(R);
    CHECK(find_periodic_module(TR).has_value() == find_periodic_module(T).has_value());
}

TEST_CASE("a non-cycle final subheart gives a yes verdict") {
    ClassTable T(truncated(double_loop(), 2));
    CoGorensteinVerdict v = cogorenstein_truncated(T);
    CHECK(v.verdict);
    CHECK(v.branch == "no_cycle_subheart");
    CHECK(omega_infinity_trivial(T));
    CHECK(cogorenstein_monomial(T).verdict);
}

TEST_CASE("membership in Omega-infinity") {
    ClassTable T(truncated(fx::cycle(2), 2));
    CHECK(omega_infinity(T, singleton(T.simple(1))));
    CHECK_THROWS_AS(omega_infinity(T, singleton(T.projective(0))), Error);

    ClassTable L(truncated(fx::linear(3), 2));
    CHECK_FALSE(omega_infinity(L, singleton(L.simple(0))));
}

TEST_CASE("periodic witnesses are periodic with junk beyond the horizon") {
    for (std::size_t k = 2; k <= 4; ++k) {
        ClassTable T(truncated(loop_into_loop(), k));
        for (const PeriodicWitness& w : periodic_modules(T)) {
            CHECK(w.horizon % w.cycle.size() == 0);
            CHECK(iterate_syzygy(T, w.module, w.period) == w.module);
        }
    }
}
