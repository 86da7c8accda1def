#include "quiverhom/pathcalc.hpp"

#include <algorithm>
#include <set>

#include "quiverhom/error.hpp"

namespace qh {

ClassTable::ClassTable(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
    const BoundQuiverAlgebra& A = *algebra_;
    require(A.is_monomial(), ErrorCode::UnsupportedIdeal,
            "path-module calculus needs a truncated or monomial ideal");
    const Quiver& q = A.quiver();
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        Path e = Path::trivial(v);
        projective_.push_back(intern(v, continuation_of(e), &e));
    }
    for (const Path& p : A.basis()) intern(p.target(), continuation_of(p), &p);
    for (VertexId v = 0; v < q.num_vertices(); ++v)
        simple_.push_back(intern(v, {A.trivial_index(v)}, nullptr));

    for (PathModuleClass& c : classes_) {
        c.dimension.assign(q.num_vertices(), 0);
        for (std::size_t b : c.continuation) ++c.dimension[A.basis_path(b).target()];
        c.projective = c.continuation == A.basis_from(c.vertex);
        c.simple = c.continuation.size() == 1;
        const std::string& vn = q.vertex_name(c.vertex);
        if (c.projective) {
            c.label = "P_" + vn;
        } else if (A.is_truncated() && c.representative) {
            c.label = "M[" + vn + "," + std::to_string(c.representative->length()) + "]";
        } else if (c.simple) {
            c.label = "S_" + vn;
        } else {
            c.label = "A(" + c.representative->traversal_string(q) + ")";
        }
    }
    compute_syzygies();
    compute_pds();
}

std::vector<std::size_t> ClassTable::continuation_of(const Path& p) const {
    const BoundQuiverAlgebra& A = *algebra_;
    std::vector<std::size_t> out;
    for (std::size_t b : A.basis_from(p.target()))
        if (!A.is_zero_path(p.then(A.quiver(), A.basis_path(b)))) out.push_back(b);
    return out;
}

ClassId ClassTable::intern(VertexId v, std::vector<std::size_t> continuation, const Path* rep) {
    auto key = std::make_pair(v, continuation);
    auto it = index_.find(key);
    if (it != index_.end()) {
        PathModuleClass& c = classes_[it->second];
        if (rep && (!c.representative || rep->length() < c.representative->length() ||
                    (rep->length() == c.representative->length() && *rep < *c.representative)))
            c.representative = *rep;
        return it->second;
    }
    PathModuleClass c;
    c.id = classes_.size();
    c.vertex = v;
    c.continuation = std::move(continuation);
    if (rep) c.representative = *rep;
    classes_.push_back(std::move(c));
    index_.emplace(std::move(key), classes_.back().id);
    return classes_.back().id;
}

ClassId ClassTable::class_of(const Path& p) const {
    require(!algebra_->is_zero_path(p), ErrorCode::ZeroPath,
            "path " + p.traversal_string(algebra_->quiver()) + " is zero in A");
    auto found = find(p.target(), continuation_of(p));
    if (!found) fail(ErrorCode::InvariantViolation, "class table is missing a path class");
    return *found;
}

std::optional<ClassId> ClassTable::find(VertexId v, const std::vector<std::size_t>& continuation) const {
    auto it = index_.find(std::make_pair(v, continuation));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void ClassTable::compute_syzygies() {
    // The kernel of P_v -> Ae_v/(paths outside C) is the direct sum of Aq over
    // the minimal paths q outside C.
    const BoundQuiverAlgebra& A = *algebra_;
    const Quiver& q = A.quiver();
    syzygy_.assign(classes_.size(), {});
    for (PathModuleClass& c : classes_) {
        if (c.projective) continue;
        for (std::size_t b : A.basis_from(c.vertex)) {
            if (std::binary_search(c.continuation.begin(), c.continuation.end(), b)) continue;
            const Path& path = A.basis_path(b);
            std::size_t prefix = *A.basis_index(path.segment(q, 0, path.length() - 1));
            if (!std::binary_search(c.continuation.begin(), c.continuation.end(), prefix)) continue;
            ++syzygy_[c.id][class_of(path)];
        }
    }
}

void ClassTable::compute_pds() {
    enum State { Fresh, Active, Done };
    std::vector<State> state(classes_.size(), Fresh);
    pd_.assign(classes_.size(), ExtNat::of(0));
    // Iterative DFS; a back edge to an active node certifies an infinite pd.
    for (ClassId root = 0; root < classes_.size(); ++root) {
        if (state[root] != Fresh) continue;
        std::vector<std::pair<ClassId, ModuleMultiset::const_iterator>> stack;
        state[root] = Active;
        stack.emplace_back(root, syzygy_[root].begin());
        while (!stack.empty()) {
            auto& [u, it] = stack.back();
            if (it != syzygy_[u].end()) {
                ClassId w = it->first;
                ++it;
                if (state[w] == Active) {
                    pd_[u] = ExtNat::inf();
                } else if (state[w] == Fresh) {
                    state[w] = Active;
                    stack.emplace_back(w, syzygy_[w].begin());
                } else {
                    ExtNat cand = pd_[w].infinite ? ExtNat::inf() : ExtNat::of(pd_[w].value + 1);
                    if (pd_[u] < cand) pd_[u] = cand;
                }
                continue;
            }
            if (!classes_[u].projective && !pd_[u].infinite && pd_[u].value == 0) pd_[u] = ExtNat::of(1);
            state[u] = Done;
            ClassId done = u;
            stack.pop_back();
            if (!stack.empty()) {
                ClassId parent = stack.back().first;
                ExtNat cand = pd_[done].infinite ? ExtNat::inf() : ExtNat::of(pd_[done].value + 1);
                if (pd_[parent] < cand) pd_[parent] = cand;
            }
        }
    }
}

ModuleMultiset singleton(ClassId c, std::size_t multiplicity) {
    ModuleMultiset m;
    if (multiplicity > 0) m[c] = multiplicity;
    return m;
}

void add_to(ModuleMultiset& m, const ModuleMultiset& other, std::size_t times) {
    if (times == 0) return;
    for (const auto& [c, k] : other) m[c] += k * times;
}

ModuleMultiset direct_sum(const ModuleMultiset& a, const ModuleMultiset& b) {
    ModuleMultiset out = a;
    add_to(out, b);
    return out;
}

ModuleMultiset nonprojective_part(const ClassTable& T, const ModuleMultiset& m) {
    ModuleMultiset out;
    for (const auto& [c, k] : m)
        if (!T[c].projective) out[c] = k;
    return out;
}

std::vector<std::size_t> dimension_vector(const ClassTable& T, const ModuleMultiset& m) {
    std::vector<std::size_t> out(T.algebra().quiver().num_vertices(), 0);
    for (const auto& [c, k] : m)
        for (std::size_t v = 0; v < out.size(); ++v) out[v] += k * T[c].dimension[v];
    return out;
}

ClassId class_of(const ClassTable& T, const Path& p) { return T.class_of(p); }
const ModuleMultiset& syzygy_class(const ClassTable& T, ClassId c) { return T.syzygy(c); }
const ModuleMultiset& syzygy_simple(const ClassTable& T, VertexId v) { return T.syzygy(T.simple(v)); }

ModuleMultiset syzygy(const ClassTable& T, const ModuleMultiset& m) {
    ModuleMultiset out;
    for (const auto& [c, k] : m) add_to(out, T.syzygy(c), k);
    return out;
}

ModuleMultiset iterate_syzygy(const ClassTable& T, const ModuleMultiset& m, std::size_t steps) {
    ModuleMultiset cur = m;
    for (std::size_t i = 0; i < steps && !cur.empty(); ++i) cur = syzygy(T, cur);
    return cur;
}

ExtNat pd_class(const ClassTable& T, ClassId c) { return T.pd(c); }

ExtNat pd(const ClassTable& T, const ModuleMultiset& m) {
    ExtNat out = ExtNat::of(0);
    for (const auto& [c, k] : m)
        if (out < T.pd(c)) out = T.pd(c);
    return out;
}

ExtNat truncated_gldim_formula(const Quiver& q, std::size_t k) {
    GraphAnalysis g = graph_analysis(q);
    if (!g.is_acyclic) return ExtNat::inf();
    std::size_t l = g.longest_path.value;
    return ExtNat::of(l % k == 0 ? 2 * l / k : 2 * (l / k) + 1);
}

ExtNat gldim(const ClassTable& T) {
    const BoundQuiverAlgebra& A = T.algebra();
    ExtNat out = ExtNat::of(0);
    for (VertexId v = 0; v < A.quiver().num_vertices(); ++v)
        if (out < T.pd(T.simple(v))) out = T.pd(T.simple(v));
    if (A.is_truncated()) {
        ExtNat formula = truncated_gldim_formula(A.quiver(), A.truncation());
        require(formula == out, ErrorCode::InvariantViolation,
                "global dimension " + out.str() + " disagrees with the truncated formula " +
                    formula.str());
    }
    return out;
}

std::size_t norm(const ClassTable& T, const ModuleMultiset& m) {
    std::size_t n = 0;
    for (const auto& [c, k] : m)
        if (T.pd(c).infinite) n += k;
    return n;
}

ModuleMultiset truncated_syzygy_formula(const ClassTable& T, ClassId c) {
    const BoundQuiverAlgebra& A = T.algebra();
    require(A.is_truncated(), ErrorCode::UnsupportedIdeal, "closed syzygy formula needs J^k");
    const PathModuleClass& cls = T[c];
    if (cls.projective) return {};
    std::size_t k = A.truncation();
    std::size_t l = cls.representative ? cls.representative->length() : k - 1;
    ModuleMultiset out;
    for (std::size_t b : A.basis_from(cls.vertex))
        if (A.basis_path(b).length() == k - l) ++out[T.class_of(A.basis_path(b))];
    return out;
}

PeriodicResult is_periodic(const ClassTable& T, const ModuleMultiset& m, std::size_t cap) {
    require(!m.empty(), ErrorCode::InvalidArgument, "periodicity test of the zero module");
    std::size_t n0 = norm(T, m);
    std::set<ModuleMultiset> seen;
    ModuleMultiset cur = m;
    for (std::size_t t = 1; t <= cap; ++t) {
        cur = syzygy(T, cur);
        if (cur == m) return {true, t, t};
        if (norm(T, cur) > n0 || !seen.insert(cur).second) return {false, 0, t};
    }
    fail(ErrorCode::Indeterminate, "periodicity undecided after " + std::to_string(cap) + " steps");
}

std::string format_multiset(const ClassTable& T, const ModuleMultiset& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [c, k] : m) {
        if (!out.empty()) out += " ⊕ ";
        if (k > 1) out += std::to_string(k) + "·";
        out += T[c].label;
    }
    return out;
}

}  // namespace qh
