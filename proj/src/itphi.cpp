#include "quiverhom/itphi.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "quiverhom/error.hpp"
#include "quiverhom/homgor.hpp"

namespace qh {

namespace {

const Field kQ = Field::rationals();

Matrix unit_columns(std::size_t d, const std::vector<std::size_t>& positions) {
    Matrix g(d, positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) g(positions[j], j) = 1;
    return g;
}

std::vector<ClassId> nonprojective_classes(const ClassTable& T) {
    std::vector<ClassId> out;
    for (const PathModuleClass& c : T.classes())
        if (!c.projective) out.push_back(c.id);
    return out;
}

}  // namespace

std::optional<std::size_t> K0Lattice::position(ClassId c) const {
    auto it = std::find(classes.begin(), classes.end(), c);
    if (it == classes.end()) return std::nullopt;
    return static_cast<std::size_t>(it - classes.begin());
}

K0Lattice build_lattice(const ClassTable& T, const std::vector<ClassId>& seed) {
    require(T.algebra().is_monomial(), ErrorCode::UnsupportedIdeal, "lattice needs a monomial algebra");
    std::map<ClassId, std::size_t> pos;
    std::vector<ClassId> order;
    std::deque<ClassId> queue;
    auto visit = [&](ClassId c) {
        if (T[c].projective || pos.count(c)) return;
        pos[c] = order.size();
        order.push_back(c);
        queue.push_back(c);
    };
    for (ClassId c : seed) visit(c);
    while (!queue.empty()) {
        ClassId c = queue.front();
        queue.pop_front();
        for (const auto& [d, k] : T.syzygy(c)) visit(d);
    }
    K0Lattice L;
    L.classes = order;
    for (ClassId c : order) L.labels.push_back(T[c].label);
    L.T = Matrix(order.size(), order.size());
    for (ClassId c : order)
        for (const auto& [d, k] : T.syzygy(c))
            if (!T[d].projective) L.T(pos.at(d), pos.at(c)) = static_cast<unsigned long>(k);
    return L;
}

std::vector<std::size_t> rank_sequence(const K0Lattice& L, const Matrix& generators, std::size_t upto) {
    std::vector<std::size_t> out;
    Matrix cur = generators;
    for (std::size_t l = 0; l <= upto; ++l) {
        std::size_t r = cur.cols() == 0 || L.rank() == 0 ? 0 : rank(kQ, cur);
        out.push_back(r);
        if (l == upto) break;
        if (r == 0) {
            out.resize(upto + 1, 0);
            break;
        }
        cur = multiply(kQ, L.T, cur);
    }
    return out;
}

std::size_t stabilization_index(const std::vector<std::size_t>& ranks, std::size_t d) {
    std::size_t limit = ranks.at(d);
    for (std::size_t l = 0; l <= d; ++l)
        if (ranks[l] == limit) return l;
    return d;
}

bool stabilization_sound(const K0Lattice& L, const Matrix& generators) {
    std::size_t d = L.rank();
    std::vector<std::size_t> r = rank_sequence(L, generators, 2 * d);
    for (std::size_t l = 0; l + 1 < r.size(); ++l)
        if (r[l + 1] > r[l]) return false;
    for (std::size_t l = d; l < r.size(); ++l)
        if (r[l] != r[d]) return false;
    return true;
}

Matrix generator_columns(const K0Lattice& L, const ClassTable& T, const ModuleMultiset& m) {
    std::vector<std::size_t> positions;
    for (const auto& [c, k] : m) {
        if (T[c].projective) continue;
        auto p = L.position(c);
        require(p.has_value(), ErrorCode::InvalidArgument, "class " + T[c].label + " is outside the lattice");
        positions.push_back(*p);
    }
    return unit_columns(L.rank(), positions);
}

Matrix full_generators(const K0Lattice& L) {
    std::vector<std::size_t> all(L.rank());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return unit_columns(L.rank(), all);
}

PhiReport phi_report(const ClassTable& T, const ModuleMultiset& m) {
    std::vector<ClassId> seed;
    for (const auto& [c, k] : m) seed.push_back(c);
    PhiReport out;
    out.lattice = build_lattice(T, seed);
    std::size_t d = out.lattice.rank();
    out.ranks = rank_sequence(out.lattice, generator_columns(out.lattice, T, m), d);
    out.value = stabilization_index(out.ranks, d);
    return out;
}

std::size_t phi(const ClassTable& T, const ModuleMultiset& m) { return phi_report(T, m).value; }

std::size_t phi_in(const K0Lattice& L, const ClassTable& T, const ModuleMultiset& m) {
    std::size_t d = L.rank();
    return stabilization_index(rank_sequence(L, generator_columns(L, T, m), d), d);
}

PhiReport phidim_subcat_report(const ClassTable& T, const std::vector<ClassId>& seed) {
    PhiReport out;
    out.lattice = build_lattice(T, seed);
    std::size_t d = out.lattice.rank();
    out.ranks = rank_sequence(out.lattice, full_generators(out.lattice), d);
    out.value = stabilization_index(out.ranks, d);
    return out;
}

std::size_t phidim_subcat(const ClassTable& T, const std::vector<ClassId>& seed) {
    return phidim_subcat_report(T, seed).value;
}

PhidimBounds phidim_bounds(const ClassTable& T) {
    const BoundQuiverAlgebra& A = T.algebra();
    require(A.is_monomial(), ErrorCode::UnsupportedIdeal, "phidim bounds need a monomial algebra");
    std::vector<ClassId> classes = nonprojective_classes(T);
    K0Lattice L = build_lattice(T, classes);
    PhidimBounds out;
    std::size_t sub = stabilization_index(rank_sequence(L, full_generators(L), L.rank()), L.rank());
    // Syzygies of modules are sums of path modules (one step for J^k, two in general).
    out.upper = sub + (A.is_truncated() ? 1 : 2);
    out.basis = A.is_truncated() ? "path-module subcategory + 1" : "path-module subcategory + 2";

    auto consider = [&](const ModuleMultiset& m) {
        std::size_t v = phi_in(L, T, m);
        if (v > out.lower || out.lower_witness.empty()) {
            out.lower_witness = format_multiset(T, m);
            out.lower = std::max(out.lower, v);
        }
    };
    for (std::size_t i = 0; i < classes.size(); ++i) {
        consider(singleton(classes[i]));
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            consider(direct_sum(singleton(classes[i]), singleton(classes[j])));
    }
    std::vector<ClassId> simples;
    for (VertexId v = 0; v < A.quiver().num_vertices(); ++v)
        if (!T[T.simple(v)].projective) simples.push_back(T.simple(v));
    const std::size_t n = simples.size();
    if (n <= 16) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            if (__builtin_popcountll(mask) > 4) continue;
            ModuleMultiset m;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) m[simples[i]] = 1;
            consider(m);
        }
    }

    ExtNat gl = ExtNat::of(0);
    for (VertexId v = 0; v < A.quiver().num_vertices(); ++v)
        if (gl < T.pd(T.simple(v))) gl = T.pd(T.simple(v));
    if (!gl.infinite) {
        out.exact = gl.value;
    } else if (A.is_truncated() && is_self_injective_truncated(A)) {
        out.exact = 0;
    }
    return out;
}

// ---- linear side ---------------------------------------------------------

HybridPhiReport phi_hybrid(const Representation& M, const std::vector<CatalogEntry>& catalog,
                           std::size_t trials, std::uint64_t seed) {
    std::vector<Representation> mods;
    for (const CatalogEntry& e : catalog) mods.push_back(e.module);
    Decomposition top = decompose_against_catalog(M, mods, trials, seed);

    // Deduplicated catalog, kept in the order decompose_against_catalog uses.
    std::vector<std::size_t> orig = top.catalog_index;
    std::vector<Representation> dedup;
    for (std::size_t i : orig) dedup.push_back(mods[i]);
    const std::size_t m = dedup.size();

    std::vector<int> projective(m, -1);
    std::vector<std::optional<Decomposition>> syz(m);
    auto is_projective = [&](std::size_t i) {
        if (projective[i] < 0) {
            bool opaque = catalog[orig[i]].opaque;
            projective[i] = !opaque && syzygy_rep(dedup[i]).is_zero() ? 1 : 0;
        }
        return projective[i] == 1;
    };

    std::map<std::size_t, std::size_t> pos;
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue;
    auto visit = [&](std::size_t i) {
        if (pos.count(i) || is_projective(i)) return;
        pos[i] = order.size();
        order.push_back(i);
        queue.push_back(i);
    };
    HybridPhiReport out;
    for (std::size_t i = 0; i < m; ++i)
        if (top.multiplicity[i] > 0) visit(i);
    for (std::size_t i = 0; i < m; ++i)
        if (top.multiplicity[i] > 0 && pos.count(i)) out.summands.push_back(pos[i]);

    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        if (catalog[orig[i]].opaque) continue;
        Decomposition d = decompose_against_catalog(syzygy_rep(dedup[i]), dedup, trials, seed);
        require(d.catalog_index.size() == m, ErrorCode::InvariantViolation, "catalog deduplication is unstable");
        for (std::size_t j = 0; j < m; ++j)
            if (d.multiplicity[j] > 0) visit(j);
        syz[i] = std::move(d);
    }

    K0Lattice& L = out.lattice;
    for (std::size_t i : order) L.labels.push_back(catalog[orig[i]].label);
    L.T = Matrix(order.size(), order.size());
    for (std::size_t i : order) {
        if (catalog[orig[i]].opaque) {
            L.T(pos[i], pos[i]) = 1;
            continue;
        }
        for (std::size_t j = 0; j < m; ++j)
            if (syz[i]->multiplicity[j] > 0 && pos.count(j))
                L.T(pos[j], pos[i]) = static_cast<unsigned long>(syz[i]->multiplicity[j]);
    }
    std::size_t d = L.rank();
    out.ranks = rank_sequence(L, unit_columns(d, out.summands), d);
    out.value = stabilization_index(out.ranks, d);
    return out;
}

namespace {

// Cyclic quotients P_v / A·x for each arrow x starting at v.
std::vector<std::pair<std::string, Representation>> probe_modules(const AlgebraPtr& A) {
    const Quiver& q = A->quiver();
    std::vector<std::pair<std::string, Representation>> out;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        out.emplace_back("S_" + q.vertex_name(v), simple_module(A, v));
        out.emplace_back("I_" + q.vertex_name(v), injective_module(A, v));
    }
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        Representation P = projective_module(A, v);
        const auto& from = A->basis_from(v);
        for (ArrowId a : q.out_arrows(v)) {
            std::size_t b = A->arrow_basis_index(a);
            std::vector<Matrix> gens;
            for (VertexId w = 0; w < q.num_vertices(); ++w) gens.emplace_back(P.dim(w), 0);
            // Local coordinate of b inside P_v: position among basis elements ending at t(b).
            std::size_t local = 0;
            for (std::size_t e : from)
                if (A->basis_path(e).target() == A->basis_path(b).target()) {
                    if (e == b) break;
                    ++local;
                }
            VertexId t = q.arrow(a).target;
            gens[t] = unit_columns(P.dim(t), {local});
            std::vector<Matrix> U = submodule_closure(P, gens);
            out.emplace_back("P_" + q.vertex_name(v) + "/A" + q.arrow(a).name, quotient_representation(P, U));
        }
    }
    return out;
}

}  // namespace

bool is_self_injective(const AlgebraPtr& A, std::size_t trials, std::uint64_t seed) {
    const std::size_t n = A->quiver().num_vertices();
    std::vector<Representation> inj;
    for (VertexId w = 0; w < n; ++w) inj.push_back(injective_module(A, w));
    for (VertexId v = 0; v < n; ++v) {
        Representation P = projective_module(A, v);
        bool matched = false;
        for (VertexId w = 0; w < n && !matched; ++w)
            matched = inj[w].dims() == P.dims() && iso_test(P, inj[w], trials, seed).verdict == IsoVerdict::Isomorphic;
        if (!matched) return false;
    }
    return true;
}

PhidimBounds phidim_bounds_any(const AlgebraPtr& A, std::size_t max_steps, std::size_t trials,
                               std::uint64_t seed) {
    AlgebraPtr N = normalize_ideal(A);
    if (N->is_monomial()) return phidim_bounds(ClassTable(N));
    PhidimBounds out;
    if (is_self_injective(N, trials, seed)) {
        out.exact = 0;
        out.basis = "self-injective";
        out.lower_witness = "0";
        return out;
    }
    bool all_finite = true;
    std::size_t gl = 0;
    for (auto& [name, R] : probe_modules(N)) {
        PdResult r = pd_rep(R, max_steps, trials, seed);
        bool simple = name.rfind("S_", 0) == 0;
        if (r.kind == PdKind::Finite) {
            if (simple) gl = std::max(gl, r.value);
            if (r.value > out.lower || out.lower_witness.empty()) {
                out.lower = std::max(out.lower, r.value);
                out.lower_witness = name + " (pd " + std::to_string(r.value) + ")";
            }
        } else if (simple) {
            all_finite = false;
        }
    }
    if (all_finite) {
        out.exact = gl;
        out.basis = "global dimension";
    } else {
        out.basis = "unknown";
    }
    return out;
}

TriangularReport triangular_check(const AlgebraPtr& C, const std::vector<VertexId>& gamma,
                                  const std::vector<VertexId>& gamma_bar, std::size_t max_steps,
                                  std::size_t trials, std::uint64_t seed) {
    const Quiver& q = C->quiver();
    std::vector<int> side(q.num_vertices(), -1);
    for (VertexId v : gamma) side.at(v) = 0;
    for (VertexId v : gamma_bar) {
        require(side.at(v) == -1, ErrorCode::HypothesisViolated, "vertex sets are not disjoint");
        side[v] = 1;
    }
    require(std::all_of(side.begin(), side.end(), [](int s) { return s >= 0; }),
            ErrorCode::HypothesisViolated, "vertex sets do not cover the quiver");
    bool bridge = false;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        require(!(side[arr.source] == 1 && side[arr.target] == 0), ErrorCode::HypothesisViolated,
                "arrow " + arr.name + " goes from the second vertex set to the first");
        if (side[arr.source] == 0 && side[arr.target] == 1) {
            bridge = true;
            for (ArrowId b : q.in_arrows(arr.source)) {
                Path p = Path::arrow(q, b).then(q, Path::arrow(q, a));
                require(C->reduce(p).empty(), ErrorCode::HypothesisViolated,
                        "bridge arrow " + arr.name + " does not annihilate arrow " + q.arrow(b).name);
            }
        }
    }
    require(bridge, ErrorCode::HypothesisViolated, "no arrow from the first vertex set to the second");

    TriangularReport out;
    out.gamma = gamma;
    out.gamma_bar = gamma_bar;
    out.c = phidim_bounds_any(C, max_steps, trials, seed);
    out.a = phidim_bounds_any(restrict_algebra(*C, gamma), max_steps, trials, seed);
    out.b = phidim_bounds_any(restrict_algebra(*C, gamma_bar), max_steps, trials, seed);
    auto ua = out.a.best_upper(), ub = out.b.best_upper();
    if (ua && ub) {
        out.theorem_bound = *ua + *ub + 1;
        out.consistent = out.c.lower <= *out.theorem_bound;
    }
    return out;
}

}  // namespace qh
