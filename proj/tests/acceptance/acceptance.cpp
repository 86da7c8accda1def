// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "../support/quiver_family.hpp"
#include "../support/random_algebras.hpp"
#include "quiverhom/error.hpp"
#include "quiverhom/homgor.hpp"
#include "quiverhom/itphi.hpp"
#include "quiverhom/shell.hpp"

using namespace qh;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

// Lattices collected for criterion 10.
struct LatticeCheck {
    std::size_t count = 0;
    std::size_t unsound = 0;
    void add(const K0Lattice& L, const Matrix& gens) {
        ++count;
        if (!stabilization_sound(L, gens)) ++unsound;
    }
};
LatticeCheck lattices;

Outcome criterion1() {
    Outcome o;
    AlgebraFile f = load_algebra("corpus:loop_monomial");
    ClassTable T(f.algebra);
    const Quiver& q = f.algebra->quiver();
    Path gamma = parse_path(q, "gamma");
    std::vector<GpClass> gp = gp_indecomposables(T);
    o.check(gp.size() == 1, "gp-list has " + std::to_string(gp.size()) + " classes");
    if (gp.size() == 1) {
        o.check(gp[0].id == T.class_of(gamma), "GP class is not A(gamma)");
        o.check(gp[0].witness.cycle == std::vector<Path>{gamma}, "relation-cycle is not (gamma, gamma)");
    }
    CoGorensteinVerdict v = cogorenstein_monomial(T);
    o.check(v.verdict, "Co-Gorenstein verdict no");
    o.check(!is_cm_free(T), "reported CM-free");
    Representation I = direct_sum(injective_module(f.algebra, 0), injective_module(f.algebra, 1));
    PdResult p = pd_rep(I, 20);
    o.check(p.kind == PdKind::Infinite, "inj-pd of I_1+I_2 is " + p.str() + " (" + p.certificate + "), expected infinite_certified");
    if (o.pass) o.detail << "one GP class A(gamma), cycle (gamma, gamma); Co-Gorenstein; not CM-free; inj-pd infinite";
    return o;
}

Outcome criterion2() {
    Outcome o;
    AlgebraFile f = load_algebra("corpus:two_vertex");
    const AlgebraPtr& A = f.algebra;
    o.check(!A->field().is_prime(), "field is not Q");
    std::size_t certified = 0;
    for (int a : {1, 2, 4}) {
        IsoResult r1 = iso_test(syzygy_rep(m_a(A, a)), n_a(A, Scalar(-a, 2)));
        IsoResult r2 = iso_test(syzygy_rep(n_a(A, a)), m_a(A, -a));
        o.check(r1.verdict == IsoVerdict::Isomorphic && r1.certificate.has_value(),
                "Omega(M_" + std::to_string(a) + ") vs N: " + to_string(r1.verdict));
        o.check(r2.verdict == IsoVerdict::Isomorphic && r2.certificate.has_value(),
                "Omega(N_" + std::to_string(a) + ") vs M: " + to_string(r2.verdict));
        certified += (r1.verdict == IsoVerdict::Isomorphic) + (r2.verdict == IsoVerdict::Isomorphic);
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b) {
            IsoVerdict v = iso_test(m_a(A, a), m_a(A, b)).verdict;
            o.check(v == IsoVerdict::NotIsomorphic,
                    "M_" + std::to_string(a) + " vs M_" + std::to_string(b) + ": " + to_string(v));
        }
    std::vector<Representation> orbit{m_a(A, 1)};
    for (int i = 0; i < 8; ++i) orbit.push_back(syzygy_rep(orbit.back()));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = i + 1; j < orbit.size(); ++j)
            if (iso_test(orbit[i], orbit[j]).verdict != IsoVerdict::NotIsomorphic) ++bad;
    o.check(bad == 0, std::to_string(bad) + " orbit pairs not certified distinct");
    if (o.pass) o.detail << certified << " syzygy isomorphisms certified; M_1,M_2,M_3 distinct; orbit of M_1 distinct for 8 steps";
    return o;
}

Outcome criterion3() {
    Outcome o;
    AlgebraFile f = load_algebra("corpus:infinito");
    const AlgebraPtr& A = f.algebra;
    std::vector<Representation> simples;
    for (VertexId v = 0; v < 4; ++v) simples.push_back(simple_module(A, v));
    for (std::size_t n = 2; n <= 5; ++n) {
        Representation O = syzygy_rep(m_alpha(A, 1, n));
        std::vector<std::size_t> want{0, n - 1, 10 * n, 0};
        o.check(O.dims() == want, "dim Omega(M_alpha(1," + std::to_string(n) + ")) = " + dims_text(O.dims()));
        std::vector<Representation> catalog{m_alpha(A, 2, n - 1)};
        catalog.insert(catalog.end(), simples.begin(), simples.end());
        try {
            Decomposition d = decompose_against_catalog(O, catalog);
            std::vector<std::size_t> mult(catalog.size(), 0);
            for (std::size_t i = 0; i < d.multiplicity.size(); ++i) mult[d.catalog_index[i]] += d.multiplicity[i];
            o.check(mult == std::vector<std::size_t>{1, 0, 0, 7 * n + 2, 0},
                    "decomposition of Omega(M_alpha(1," + std::to_string(n) + ")) differs");
        } catch (const Error& e) {
            o.check(false, std::string("decomposition failed: ") + e.what());
        }
    }
    IsoResult r = iso_test(syzygy_rep(m_alpha(A, 1, 1)), power(simples[2], 10));
    o.check(r.verdict == IsoVerdict::Isomorphic, "Omega(M_alpha(1,1)) vs S_3^10: " + to_string(r.verdict));
    std::vector<CatalogEntry> catalog = build_catalog(f);
    std::string phis;
    for (std::size_t n = 2; n <= 5; ++n) {
        HybridPhiReport p = phi_hybrid(direct_sum(m_alpha(A, 1, n), m_beta(A, 1, n)), catalog);
        o.check(p.value == n - 1, "phi(M_alpha(1," + std::to_string(n) + ") + M_beta(1," + std::to_string(n) +
                                      ")) = " + std::to_string(p.value));
        phis += (phis.empty() ? "" : ",") + std::to_string(p.value);
    }
    if (o.pass) o.detail << "syzygy dims and decompositions for n=2..5; Omega(M_alpha(1,1)) = S_3^10; phi = " << phis;
    return o;
}

Outcome criterion4() {
    Outcome o;
    AlgebraFile f = load_algebra("corpus:finito");
    const AlgebraPtr& C = f.algebra;
    const Quiver& q = C->quiver();
    auto [g, gb] = parse_split(q, corpus_file("finito_reversed.split").text, "finito_reversed.split");
    try {
        TriangularReport t = triangular_check(C, g, gb);
        o.check(t.theorem_bound == std::size_t{1}, "theorem bound is not 1");
        o.check(t.consistent, "bound report inconsistent");
    } catch (const Error& e) {
        o.check(false, std::string("split gamma={1,2}, gamma_bar={3}: ") + e.what());
    }
    auto [vg, vgb] = parse_split(q, corpus_file("finito_valid.split").text, "finito_valid.split");
    TriangularReport valid = triangular_check(C, vg, vgb);
    PhidimBounds b = phidim_bounds_any(C);
    o.check(b.lower >= 1, "no module of finite pd 1 among the probes (lower bound " + std::to_string(b.lower) + ")");
    PdResult p = pd_rep(injective_module(C, 2), 20);
    o.check(p.kind == PdKind::AtLeast && p.value == 20, "pd I_3 over Q = " + p.str());
    o.detail << "; info: split gamma={3}, gamma_bar={1,2} satisfies the hypotheses with bound "
             << (valid.theorem_bound ? std::to_string(*valid.theorem_bound) : std::string("unknown"))
             << (valid.consistent ? " (consistent)" : " (inconsistent)") << "; pd I_3 = " << p.str();
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(5);
    std::size_t agree = 0, total = 0;
    for (int i = 0; i < 60; ++i) {
        std::size_t k = 2 + i % 3;
        AlgebraPtr A = rnd::random_acyclic_truncated(rng, 6, 10, k);
        ClassTable T(A);
        ExtNat formula = truncated_gldim_formula(A->quiver(), k);
        ExtNat resolved = gldim(T);
        std::size_t linear = 0;
        for (VertexId v = 0; v < A->quiver().num_vertices(); ++v)
            linear = std::max(linear, pd_rep(simple_module(A, v), 50).value);
        ++total;
        if (formula == resolved && !resolved.infinite && resolved.value == linear) ++agree;
    }
    o.check(agree == total, std::to_string(total - agree) + " disagreements");
    o.detail << (o.pass ? "" : "; ") << agree << "/" << total << " random acyclic truncated algebras agree";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    std::size_t certified = 0, total = 0;
    while (total < 220) {
        AlgebraPtr A = rnd::random_monomial(rng);
        ClassTable T(A);
        for (int s = 0; s < 4; ++s) {
            std::size_t b = std::uniform_int_distribution<std::size_t>(0, A->dimension() - 1)(rng);
            const Path& p = A->basis_path(b);
            Representation lin = syzygy_rep(cyclic_module(A, p));
            Representation comb = multiset_module(T, syzygy_class(T, T.class_of(p)));
            ++total;
            if (iso_test(lin, comb).verdict == IsoVerdict::Isomorphic) ++certified;
        }
    }
    o.check(certified == total, std::to_string(total - certified) + " pairs not iso-certified");
    o.detail << (o.pass ? "" : "; ") << certified << "/" << total << " (algebra, path) pairs iso-certified";
    return o;
}

struct FamilyStats {
    std::size_t algebras = 0, verdict_mismatch = 0, no_verdicts = 0, bad_witness = 0;
    std::size_t periodic_mismatch = 0, companion_only = 0, perfect_paths = 0, perfect_not_periodic = 0;
};

FamilyStats family_stats;
bool family_done = false;

void run_family() {
    if (family_done) return;
    family_done = true;
    family::for_each_quiver(4, 6, [&](const Quiver& q) {
        for (std::size_t k : {2, 3}) {
            AlgebraPtr A = build_algebra(q, IdealSpec::truncated(k));
            ClassTable T(A);
            ++family_stats.algebras;
            CoGorensteinVerdict quiver_side = cogorenstein_truncated(T);
            CoGorensteinVerdict search_side = cogorenstein_monomial(T);
            if (quiver_side.verdict != search_side.verdict) ++family_stats.verdict_mismatch;
            std::vector<GpClass> gp = gp_indecomposables(T);
            for (const CoGorensteinVerdict* v : {&quiver_side, &search_side}) {
                if (v->verdict) continue;
                ++family_stats.no_verdicts;
                bool ok = v->witness && is_periodic(T, v->witness->module).periodic &&
                          non_gp_summand(T, v->witness->module, gp).has_value();
                if (!ok) ++family_stats.bad_witness;
            }
            bool has_periodic = find_periodic_module(T).has_value();
            bool has_omega = false;
            for (ClassId c = 0; c < T.size() && !has_omega; ++c)
                if (!T[c].projective && omega_infinity(T, singleton(c))) has_omega = true;
            if (has_periodic != has_omega) {
                ++family_stats.periodic_mismatch;
                std::optional<PeriodicWitness> w = find_periodic_module(T);
                if (w && w->module.size() > 1) ++family_stats.companion_only;
            }
            for (const PerfectPath& p : perfect_paths(T)) {
                ++family_stats.perfect_paths;
                if (!is_periodic(T, singleton(T.class_of(p.path))).periodic) ++family_stats.perfect_not_periodic;
            }
            std::vector<ClassId> seed;
            for (ClassId c = 0; c < T.size(); ++c)
                if (!T[c].projective) seed.push_back(c);
            if (!seed.empty()) {
                PhiReport r = phidim_subcat_report(T, seed);
                lattices.add(r.lattice, full_generators(r.lattice));
            }
        }
    });
}

Outcome criterion7() {
    Outcome o;
    run_family();
    const FamilyStats& s = family_stats;
    o.check(s.verdict_mismatch == 0, std::to_string(s.verdict_mismatch) + " verdict mismatches");
    o.check(s.bad_witness == 0, std::to_string(s.bad_witness) + " 'no' verdicts without a verified witness");
    o.detail << (o.pass ? "" : "; ") << s.algebras << " truncated algebras, verdicts agree; " << s.no_verdicts
             << " 'no' verdicts across both deciders, each with a verified periodic non-GP witness";
    return o;
}

Outcome criterion8() {
    Outcome o;
    run_family();
    const FamilyStats& s = family_stats;
    o.check(s.periodic_mismatch == 0, std::to_string(s.periodic_mismatch) + " periodic/Omega-infinity mismatches");
    o.check(s.perfect_not_periodic == 0, std::to_string(s.perfect_not_periodic) + " perfect paths not periodic");
    if (s.periodic_mismatch)
        o.detail << " (" << s.companion_only
                 << " of them: no single class is periodic, the witness carries a projective or finite-pd companion)";
    o.detail << (o.pass ? "" : "; ") << s.algebras << " algebras; " << s.perfect_paths
             << " perfect paths, all periodic";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(9);
    std::size_t instances = 0, multisets = 0, violations = 0;
    std::ostringstream first;
    auto violate = [&](const std::string& what) {
        if (violations++ == 0) first << what;
    };
    while (instances < 120 || multisets < 600) {
        AlgebraPtr A = rnd::random_monomial(rng);
        ClassTable T(A);
        std::vector<ClassId> np;
        for (const auto& c : T.classes())
            if (!c.projective) np.push_back(c.id);
        if (np.empty()) continue;
        ++instances;
        std::uniform_int_distribution<std::size_t> pick(0, np.size() - 1), mult(1, 3), parts(1, 3);
        auto random_multiset = [&] {
            ModuleMultiset m;
            for (std::size_t i = parts(rng); i > 0; --i) m[np[pick(rng)]] += mult(rng);
            return m;
        };
        for (int s = 0; s < 6; ++s) {
            ModuleMultiset m = random_multiset(), n = random_multiset();
            ++multisets;
            PhiReport rm = phi_report(T, m);
            lattices.add(rm.lattice, generator_columns(rm.lattice, T, m));
            std::size_t pm = rm.value;
            ExtNat d = pd(T, m);
            if (!d.infinite && pm != d.value) violate("phi != pd");
            if (m.size() == 1 && m.begin()->second == 1 && d.infinite && pm != 0) violate("phi of an infinite-pd class != 0");
            ModuleMultiset mn = direct_sum(m, n);
            PhiReport rmn = phi_report(T, mn);
            lattices.add(rmn.lattice, generator_columns(rmn.lattice, T, mn));
            if (pm > rmn.value) violate("phi not monotone");
            ModuleMultiset mk = m;
            for (auto& [c, k] : mk) k *= 4;
            if (phi(T, mk) != pm) violate("phi(M^k) != phi(M)");
            ModuleMultiset om = nonprojective_part(T, syzygy(T, m));
            std::size_t bound = om.empty() ? 1 : phi(T, om) + 1;
            if (pm > bound) violate("phi(M) > phi(Omega M) + 1");
        }
    }
    o.check(violations == 0, std::to_string(violations) + " violations, first: " + first.str());
    o.detail << (o.pass ? "" : "; ") << instances << " algebras, " << multisets << " multisets, " << violations
             << " violations";
    return o;
}

Outcome criterion10() {
    Outcome o;
    run_family();
    o.check(lattices.count > 0, "no lattices collected");
    o.check(lattices.unsound == 0, std::to_string(lattices.unsound) + " lattices where r_l != r_d for some l in [d, 2d]");
    o.detail << (o.pass ? "" : "; ") << lattices.count << " lattices, ranks stable from d through 2d";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"monomial example with a loop: GP list, Co-Gorenstein, CM-free, inj-pd", criterion1},
        {"two-vertex example: syzygies of M_a and N_a", criterion2},
        {"radical-cube-zero example: syzygies, decompositions and phi growth", criterion3},
        {"triangular example: hypotheses, bound and pd of I_3", criterion4},
        {"gldim formula against resolutions", criterion5},
        {"path-module syzygy against linear syzygy", criterion6},
        {"Co-Gorenstein quiver criterion against search", criterion7},
        {"periodic modules against Omega-infinity", criterion8},
        {"phi properties", criterion9},
        {"rank stabilization soundness", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " [" << criteria[i].first << "] ("
                  << t.str() << " s): " << o.detail.str() << std::endl;
        failed += !o.pass;
    }
    std::cout << "acceptance: " << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
    return 0;
}
