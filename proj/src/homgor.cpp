#include "quiverhom/homgor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quiverhom/error.hpp"

namespace qh {

namespace {

// Partner q of a perfect pair (p, q): R(p) = {q} and L(q) = {p}.
std::optional<Path> perfect_partner(const BoundQuiverAlgebra& A, const Path& p) {
    Annihilators ap = annihilator_sets(A, p);
    if (ap.right.size() != 1) return std::nullopt;
    const Path& q = ap.right.front();
    Annihilators aq = annihilator_sets(A, q);
    if (aq.left.size() != 1 || aq.left.front() != p) return std::nullopt;
    return q;
}

std::size_t reachable_junk_pd(const ClassTable& T, const std::vector<ClassId>& cycle) {
    std::set<ClassId> seen(cycle.begin(), cycle.end());
    std::vector<ClassId> stack(cycle.begin(), cycle.end());
    std::size_t out = 0;
    while (!stack.empty()) {
        ClassId c = stack.back();
        stack.pop_back();
        for (const auto& [d, k] : T.syzygy(c)) {
            if (!seen.insert(d).second) continue;
            if (!T.pd(d).infinite) out = std::max(out, T.pd(d).value);
            stack.push_back(d);
        }
    }
    return out;
}

PeriodicWitness witness_from_cycle(const ClassTable& T, std::vector<ClassId> cycle) {
    PeriodicWitness w;
    std::size_t len = cycle.size();
    std::size_t junk = reachable_junk_pd(T, cycle);
    w.horizon = len * (junk / len + 1);
    w.module = iterate_syzygy(T, singleton(cycle.front()), w.horizon);
    w.cycle = std::move(cycle);
    PeriodicResult r = is_periodic(T, w.module);
    require(r.periodic, ErrorCode::InvariantViolation,
            "cycle witness " + format_multiset(T, w.module) + " is not periodic");
    w.period = r.period;
    return w;
}

CoGorensteinVerdict search_verdict(const ClassTable& T, std::string branch_yes, std::string branch_no) {
    std::vector<GpClass> gp = gp_indecomposables(T);
    CoGorensteinVerdict out;
    for (PeriodicWitness& w : periodic_modules(T)) {
        if (non_gp_summand(T, w.module, gp)) {
            out.verdict = false;
            out.branch = std::move(branch_no);
            out.witness = std::move(w);
            return out;
        }
    }
    out.verdict = true;
    out.branch = std::move(branch_yes);
    return out;
}

}  // namespace

std::vector<PerfectPath> perfect_paths(const ClassTable& T) {
    const BoundQuiverAlgebra& A = T.algebra();
    std::map<Path, Path> next;
    for (const Path& p : A.basis()) {
        if (p.is_trivial()) continue;
        if (auto q = perfect_partner(A, p)) next.emplace(p, *q);
    }
    // Perfect paths are those on a cycle of the partner map.
    std::vector<PerfectPath> out;
    for (const auto& [p, q] : next) {
        std::vector<Path> cycle{p};
        Path cur = q;
        bool closed = false;
        while (cycle.size() <= next.size()) {
            if (cur == p) {
                closed = true;
                break;
            }
            auto it = next.find(cur);
            if (it == next.end()) break;
            cycle.push_back(cur);
            cur = it->second;
        }
        if (closed) out.push_back({p, std::move(cycle)});
    }
    return out;
}

std::vector<GpClass> gp_indecomposables(const ClassTable& T) {
    std::map<ClassId, PerfectPath> best;
    for (PerfectPath& pp : perfect_paths(T)) {
        ClassId c = T.class_of(pp.path);
        auto it = best.find(c);
        if (it == best.end() || pp.path.length() < it->second.path.length())
            best[c] = std::move(pp);
    }
    std::vector<GpClass> out;
    for (auto& [c, pp] : best) out.push_back({c, std::move(pp)});
    return out;
}

bool is_self_injective_truncated(const BoundQuiverAlgebra& A) {
    require(A.is_truncated(), ErrorCode::UnsupportedIdeal, "self-injectivity test needs J^k");
    return graph_analysis(A.quiver()).is_cycle_graph;
}

bool is_cm_free(const ClassTable& T) { return gp_indecomposables(T).empty(); }

std::vector<PeriodicWitness> periodic_modules(const ClassTable& T) {
    // Successor map on infinite-pd classes with exactly one infinite-pd
    // summand (with multiplicity) in their syzygy.
    std::map<ClassId, ClassId> succ;
    for (const PathModuleClass& c : T.classes()) {
        if (!T.pd(c.id).infinite) continue;
        std::size_t count = 0;
        ClassId s = 0;
        for (const auto& [d, k] : T.syzygy(c.id))
            if (T.pd(d).infinite) {
                count += k;
                s = d;
            }
        if (count == 1) succ.emplace(c.id, s);
    }
    enum State { Fresh, Active, Done };
    std::map<ClassId, State> state;
    std::vector<PeriodicWitness> out;
    for (const auto& [start, unused] : succ) {
        if (state[start] != Fresh) continue;
        std::vector<ClassId> trail;
        ClassId cur = start;
        while (succ.count(cur) && state[cur] == Fresh) {
            state[cur] = Active;
            trail.push_back(cur);
            cur = succ.at(cur);
        }
        if (succ.count(cur) && state[cur] == Active) {
            auto from = std::find(trail.begin(), trail.end(), cur);
            std::vector<ClassId> cycle(from, trail.end());
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            out.push_back(witness_from_cycle(T, std::move(cycle)));
        }
        for (ClassId c : trail) state[c] = Done;
    }
    return out;
}

std::optional<PeriodicWitness> find_periodic_module(const ClassTable& T) {
    std::vector<PeriodicWitness> all = periodic_modules(T);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

bool omega_infinity(const ClassTable& T, const ModuleMultiset& m, std::size_t cap) {
    for (const auto& [c, k] : m)
        require(!T[c].projective, ErrorCode::InvalidArgument,
                "membership test expects a projective-free module");
    return is_periodic(T, m, cap).periodic;
}

bool omega_infinity_trivial(const ClassTable& T) { return !find_periodic_module(T).has_value(); }

std::optional<ClassId> non_gp_summand(const ClassTable& T, const ModuleMultiset& m,
                                      const std::vector<GpClass>& gp) {
    for (const auto& [c, k] : m) {
        if (T[c].projective) continue;
        bool in_gp = std::any_of(gp.begin(), gp.end(), [&](const GpClass& g) { return g.id == c; });
        if (!in_gp) return c;
    }
    return std::nullopt;
}

CoGorensteinVerdict cogorenstein_truncated(const ClassTable& T) {
    const BoundQuiverAlgebra& A = T.algebra();
    require(A.is_truncated(), ErrorCode::UnsupportedIdeal, "quiver criterion needs J^k");
    const Quiver& q = A.quiver();
    GraphAnalysis g = graph_analysis(q);
    CoGorensteinVerdict out;
    if (g.is_acyclic) {
        out.verdict = true;
        out.branch = "acyclic";
        return out;
    }
    if (g.is_cycle_graph) {
        out.verdict = true;
        out.branch = "cycle_graph";
        return out;
    }
    std::vector<VertexId> qinf = q_infinity_vertices(q);
    std::optional<Subheart> cyclic;
    for (Subheart& h : final_subhearts(q_infinity(q))) {
        if (h.trivial || !graph_analysis(h.quiver).is_cycle_graph) continue;
        for (VertexId& v : h.vertices) v = qinf.at(v);
        cyclic = std::move(h);
        break;
    }
    if (!cyclic) {
        out.verdict = true;
        out.branch = "no_cycle_subheart";
        return out;
    }
    out = search_verdict(T, "counterexample", "counterexample");
    out.verdict = false;
    std::string verts;
    for (VertexId v : cyclic->vertices) verts += (verts.empty() ? "" : ",") + q.vertex_name(v);
    out.note = "final subheart {" + verts + "} of Q^infinity is a cycle graph";
    if (!out.witness) out.note += "; no periodic non-GP witness found";
    return out;
}

CoGorensteinVerdict cogorenstein_monomial(const ClassTable& T) {
    CoGorensteinVerdict out = search_verdict(T, "search", "search");
    if (out.verdict)
        out.note = "every periodic syzygy cycle consists of Gorenstein-projective classes";
    return out;
}

AlgebraPtr restrict_to_q_infinity(const BoundQuiverAlgebra& A) {
    std::vector<VertexId> vs = q_infinity_vertices(A.quiver());
    if (vs.empty()) return nullptr;
    return restrict_algebra(A, vs);
}

}  // namespace qh
