#include "quiverhom/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quiverhom/error.hpp"

namespace qh {

IdealSpec IdealSpec::truncated(std::size_t k) {
    IdealSpec s;
    s.kind = IdealKind::Truncated;
    s.truncation = k;
    return s;
}

IdealSpec IdealSpec::monomial(std::vector<Path> generators) {
    IdealSpec s;
    s.kind = IdealKind::Monomial;
    s.generators = std::move(generators);
    return s;
}

IdealSpec IdealSpec::with_relations(std::vector<Relation> relations, std::size_t nilpotency,
                                    std::optional<std::size_t> radical_power) {
    IdealSpec s;
    s.kind = IdealKind::Relations;
    s.relations = std::move(relations);
    s.nilpotency = nilpotency;
    s.radical_power = radical_power;
    return s;
}

namespace {

Path extend(const Quiver& q, const Path& p, ArrowId a) { return p.then(q, Path::arrow(q, a)); }

// All paths of kQ of each length up to `max_len`, each level sorted.
std::vector<std::vector<Path>> all_paths(const Quiver& q, std::size_t max_len) {
    std::vector<std::vector<Path>> levels(max_len + 1);
    for (VertexId v = 0; v < q.num_vertices(); ++v) levels[0].push_back(Path::trivial(v));
    for (std::size_t d = 1; d <= max_len; ++d) {
        for (const Path& p : levels[d - 1])
            for (ArrowId a : q.out_arrows(p.target())) levels[d].push_back(extend(q, p, a));
        std::sort(levels[d].begin(), levels[d].end());
    }
    return levels;
}

void add_term(const Field& F, SparseVec& v, std::uint32_t idx, const Scalar& c) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& e, std::uint32_t i) { return e.first < i; });
    if (it != v.end() && it->first == idx) {
        it->second = F.add(it->second, c);
        if (it->second == 0) v.erase(it);
    } else if (F.reduce(c) != 0) {
        v.insert(it, {idx, F.reduce(c)});
    }
}

}  // namespace

std::optional<std::size_t> BoundQuiverAlgebra::basis_index(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool BoundQuiverAlgebra::is_zero_path(const Path& p) const {
    if (is_monomial()) return !index_.count(p);
    return reduce(p).empty();
}

SparseVec BoundQuiverAlgebra::reduce(const Path& p) const {
    if (is_monomial()) {
        auto it = index_.find(p);
        if (it == index_.end()) return {};
        return {{static_cast<std::uint32_t>(it->second), Scalar(1)}};
    }
    if (p.length() >= ideal_.nilpotency) return {};
    auto it = normal_forms_.find(p);
    if (it == normal_forms_.end()) fail(ErrorCode::InvariantViolation, "missing normal form");
    return it->second;
}

SparseVec BoundQuiverAlgebra::act(ArrowId a, const SparseVec& x) const {
    SparseVec out;
    for (const auto& [b, c] : x)
        for (const auto& [r, d] : arrow_action(a, b)) add_term(field_, out, r, field_.mul(c, d));
    return out;
}

SparseVec BoundQuiverAlgebra::basis_product(std::size_t i, std::size_t j) const {
    // b_i · b_j: traverse b_j, then the arrows of b_i in order.
    const Path& left = basis_.at(i);
    const Path& right = basis_.at(j);
    if (left.source() != right.target()) return {};
    SparseVec cur{{static_cast<std::uint32_t>(j), Scalar(1)}};
    for (ArrowId a : left.arrows()) {
        cur = act(a, cur);
        if (cur.empty()) break;
    }
    return cur;
}

SparseVec BoundQuiverAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, c] : x)
        for (const auto& [j, d] : y)
            for (const auto& [r, e] : basis_product(i, j))
                add_term(field_, out, r, field_.mul(field_.mul(c, d), e));
    return out;
}

namespace {

template <class ZeroTest>
bool windows_acyclic(const Quiver& q, const std::vector<Path>& windows, const ZeroTest& zero_after_extend) {
    std::map<Path, std::size_t> id;
    for (std::size_t i = 0; i < windows.size(); ++i) id.emplace(windows[i], i);
    std::vector<std::vector<std::size_t>> succ(windows.size());
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const Path& u = windows[i];
        for (ArrowId a : q.out_arrows(u.target())) {
            Path e = extend(q, u, a);
            if (zero_after_extend(e)) continue;
            auto it = id.find(e.segment(q, 1, u.length()));
            if (it != id.end()) succ[i].push_back(it->second);
        }
    }
    enum State { Fresh, Active, Done };
    std::vector<State> state(windows.size(), Fresh);
    for (std::size_t root = 0; root < windows.size(); ++root) {
        if (state[root] != Fresh) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        state[root] = Active;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < succ[u].size()) {
                std::size_t w = succ[u][next++];
                if (state[w] == Active) return false;
                if (state[w] == Fresh) {
                    state[w] = Active;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[u] = Done;
                stack.pop_back();
            }
        }
    }
    return true;
}

}  // namespace

void BoundQuiverAlgebra::build_monomial() {
    const Quiver& q = quiver_;
    std::size_t L = 1;
    std::set<std::vector<ArrowId>> gens;
    if (ideal_.kind == IdealKind::Truncated) {
        require(ideal_.truncation >= 2, ErrorCode::NotAdmissible, "truncation exponent must be >= 2");
        L = ideal_.truncation;
    } else {
        for (const Path& g : ideal_.generators) {
            require(g.length() >= 2, ErrorCode::NotAdmissible,
                    "monomial generator of length < 2: " + g.traversal_string(q));
            gens.insert(g.arrows());
            L = std::max(L, g.length());
        }
    }
    auto zero_after_extend = [&](const Path& p) {
        if (ideal_.kind == IdealKind::Truncated) return p.length() >= L;
        const auto& arr = p.arrows();
        for (const auto& g : gens)
            if (g.size() <= arr.size() && std::equal(g.begin(), g.end(), arr.end() - g.size()))
                return true;
        return false;
    };

    // Nonzero paths of length >= L-1 are walks in the graph whose nodes are
    // the nonzero windows of length L-1; kQ/I is finite iff it is acyclic.
    std::vector<Path> level;
    for (VertexId v = 0; v < q.num_vertices(); ++v) level.push_back(Path::trivial(v));
    for (std::size_t d = 0; !level.empty(); ++d) {
        if (d == L - 1) require(windows_acyclic(q, level, zero_after_extend), ErrorCode::InfiniteDimensional,
                                "monomial ideal is not admissible: kQ/I is infinite dimensional");
        for (const Path& p : level) basis_.push_back(p);
        std::vector<Path> next;
        for (const Path& p : level)
            for (ArrowId a : q.out_arrows(p.target())) {
                Path e = extend(q, p, a);
                if (!zero_after_extend(e)) next.push_back(std::move(e));
            }
        level = std::move(next);
    }
    std::sort(basis_.begin(), basis_.end());
    finish_indexing();

    action_.assign(q.num_arrows(), std::vector<SparseVec>(basis_.size()));
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            if (basis_[b].target() != q.arrow(a).source) continue;
            auto it = index_.find(extend(q, basis_[b], a));
            if (it != index_.end()) action_[a][b] = {{static_cast<std::uint32_t>(it->second), Scalar(1)}};
        }
}

void BoundQuiverAlgebra::build_relations() {
    const Quiver& q = quiver_;
    const std::size_t N = ideal_.nilpotency;
    require(N >= 2, ErrorCode::NotAdmissible, "nilpotency bound must be >= 2");
    if (ideal_.radical_power)
        require(*ideal_.radical_power >= 2, ErrorCode::NotAdmissible, "radical power must be >= 2");
    for (Relation& r : ideal_.relations) {
        require(!r.empty(), ErrorCode::BadRelation, "empty relation");
        const Path& p0 = r.front().path;
        for (RelationTerm& t : r) {
            t.coefficient = field_.reduce(t.coefficient);
            require(t.path.length() >= 2, ErrorCode::NotAdmissible,
                    "relation term of length < 2: " + t.path.traversal_string(q));
            require(t.path.source() == p0.source() && t.path.target() == p0.target(),
                    ErrorCode::BadRelation, "relation terms have different endpoints");
            require(t.path.length() == p0.length(), ErrorCode::BadRelation,
                    "relation is not homogeneous");
        }
    }

    auto paths = all_paths(q, N);
    struct Degree {
        std::map<Path, std::uint32_t> col;
        SparseEchelon echelon;
    };
    std::vector<Degree> degrees;
    for (std::size_t d = 0; d <= N; ++d) {
        Degree deg{{}, SparseEchelon(field_, paths[d].size())};
        for (std::uint32_t i = 0; i < paths[d].size(); ++i) deg.col.emplace(paths[d][i], i);
        if (ideal_.radical_power && d >= *ideal_.radical_power) {
            for (std::uint32_t i = 0; i < paths[d].size(); ++i) deg.echelon.add_row({{i, Scalar(1)}});
        } else {
            for (const Relation& r : ideal_.relations) {
                std::size_t m = r.front().path.length();
                if (m > d) continue;
                VertexId s = r.front().path.source(), t = r.front().path.target();
                for (std::size_t a = 0; a + m <= d; ++a) {
                    for (const Path& before : paths[a]) {
                        if (before.target() != s) continue;
                        for (const Path& after : paths[d - m - a]) {
                            if (after.source() != t) continue;
                            SparseVec row;
                            for (const RelationTerm& term : r) {
                                Path full = before.then(q, term.path).then(q, after);
                                add_term(field_, row, deg.col.at(full), term.coefficient);
                            }
                            deg.echelon.add_row(row);
                        }
                    }
                }
            }
        }
        deg.echelon.finalize();
        degrees.push_back(std::move(deg));
    }
    require(degrees[N].echelon.nullity() == 0, ErrorCode::BadRelation,
            "the ideal does not contain all paths of length " + std::to_string(N));

    for (std::size_t d = 0; d < N; ++d)
        for (std::uint32_t c : degrees[d].echelon.free_columns()) basis_.push_back(paths[d][c]);
    std::sort(basis_.begin(), basis_.end());
    finish_indexing();

    for (std::size_t d = 0; d < N; ++d) {
        const SparseEchelon& E = degrees[d].echelon;
        for (std::uint32_t c = 0; c < paths[d].size(); ++c) {
            SparseVec nf;
            if (const SparseVec* row = E.pivot_row(c)) {
                for (std::size_t k = 1; k < row->size(); ++k)
                    add_term(field_, nf, static_cast<std::uint32_t>(index_.at(paths[d][(*row)[k].first])),
                             field_.neg((*row)[k].second));
            } else {
                nf = {{static_cast<std::uint32_t>(index_.at(paths[d][c])), Scalar(1)}};
            }
            normal_forms_.emplace(paths[d][c], std::move(nf));
        }
    }

    action_.assign(q.num_arrows(), std::vector<SparseVec>(basis_.size()));
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        for (std::size_t b = 0; b < basis_.size(); ++b)
            if (basis_[b].target() == q.arrow(a).source) action_[a][b] = reduce(extend(q, basis_[b], a));
}

void BoundQuiverAlgebra::finish_indexing() {
    const Quiver& q = quiver_;
    from_.assign(q.num_vertices(), {});
    to_.assign(q.num_vertices(), {});
    trivial_.assign(q.num_vertices(), SIZE_MAX);
    arrow_basis_.assign(q.num_arrows(), SIZE_MAX);
    max_length_ = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Path& p = basis_[i];
        index_.emplace(p, i);
        from_[p.source()].push_back(i);
        to_[p.target()].push_back(i);
        max_length_ = std::max(max_length_, p.length());
        if (p.is_trivial()) trivial_[p.source()] = i;
        if (p.length() == 1) arrow_basis_[p.arrows()[0]] = i;
    }
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        require(arrow_basis_[a] != SIZE_MAX, ErrorCode::NotAdmissible,
                "arrow " + q.arrow(a).name + " lies in the ideal");
}

AlgebraPtr build_algebra(Quiver quiver, IdealSpec ideal, Field field) {
    require(quiver.num_vertices() > 0, ErrorCode::InvalidQuiver, "quiver has no vertices");
    std::shared_ptr<BoundQuiverAlgebra> A(new BoundQuiverAlgebra());
    A->quiver_ = std::move(quiver);
    A->ideal_ = std::move(ideal);
    A->field_ = std::move(field);
    if (A->ideal_.kind == IdealKind::Relations)
        A->build_relations();
    else
        A->build_monomial();
    return A;
}

namespace {

// Re-expresses a path of the parent quiver in the subquiver, if it lies there.
std::optional<Path> transport(const Quiver& parent, const Quiver& sub, const Path& p) {
    auto v = sub.find_vertex(parent.vertex_name(p.source()));
    if (!v) return std::nullopt;
    if (p.is_trivial()) return Path::trivial(*v);
    std::vector<ArrowId> arrows;
    for (ArrowId a : p.arrows()) {
        auto b = sub.find_arrow(parent.arrow(a).name);
        if (!b) return std::nullopt;
        arrows.push_back(*b);
    }
    return Path::from_arrows(sub, std::move(arrows));
}

}  // namespace

AlgebraPtr restrict_algebra(const BoundQuiverAlgebra& A, const std::vector<VertexId>& vertices) {
    const Quiver& q = A.quiver();
    Quiver sub = q.full_subquiver(vertices);
    IdealSpec spec = A.ideal();
    if (spec.kind == IdealKind::Monomial) {
        std::vector<Path> gens;
        for (const Path& g : spec.generators)
            if (auto t = transport(q, sub, g)) gens.push_back(*t);
        spec.generators = std::move(gens);
    } else if (spec.kind == IdealKind::Relations) {
        std::vector<Relation> rels;
        for (const Relation& r : spec.relations) {
            Relation out;
            bool inside = true;
            for (const RelationTerm& t : r) {
                auto p = transport(q, sub, t.path);
                if (!p) {
                    inside = false;
                    break;
                }
                out.push_back({t.coefficient, *p});
            }
            if (inside) rels.push_back(std::move(out));
        }
        spec.relations = std::move(rels);
    }
    return build_algebra(std::move(sub), std::move(spec), A.field());
}

AlgebraPtr normalize_ideal(const AlgebraPtr& A) {
    const Quiver& q = A->quiver();
    const IdealSpec& spec = A->ideal();
    if (spec.kind == IdealKind::Truncated) return A;
    std::vector<Path> gens;
    if (spec.kind == IdealKind::Monomial) {
        gens = spec.generators;
    } else {
        for (const Relation& r : spec.relations) {
            if (r.size() != 1) return A;
            gens.push_back(r.front().path);
        }
        std::size_t top = spec.radical_power ? std::min(*spec.radical_power, spec.nilpotency) : spec.nilpotency;
        auto paths = all_paths(q, top);
        for (const Path& p : paths[top]) gens.push_back(p);
    }
    // Drop generators that contain another generator as a segment.
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto contains = [](const Path& big, const Path& small) {
        if (small.length() > big.length()) return false;
        const auto& b = big.arrows();
        const auto& s = small.arrows();
        return std::search(b.begin(), b.end(), s.begin(), s.end()) != b.end();
    };
    std::vector<Path> minimal;
    for (const Path& g : gens) {
        bool redundant = false;
        for (const Path& h : gens)
            if (h != g && contains(g, h)) redundant = true;
        if (!redundant) minimal.push_back(g);
    }
    IdealSpec out;
    bool one_length = !minimal.empty() &&
                      std::all_of(minimal.begin(), minimal.end(),
                                  [&](const Path& p) { return p.length() == minimal.front().length(); });
    if (one_length) {
        std::size_t k = minimal.front().length();
        if (all_paths(q, k)[k].size() == minimal.size()) out = IdealSpec::truncated(k);
        else out = IdealSpec::monomial(minimal);
    } else {
        out = IdealSpec::monomial(minimal);
    }
    if (spec.kind == IdealKind::Monomial && out.kind == IdealKind::Monomial) return A;
    return build_algebra(q, std::move(out), A->field());
}

Annihilators annihilator_sets(const BoundQuiverAlgebra& A, const Path& p) {
    require(A.is_monomial(), ErrorCode::UnsupportedIdeal, "annihilator sets need a monomial ideal");
    require(!A.is_zero_path(p), ErrorCode::ZeroPath, "path is zero in A");
    const Quiver& q = A.quiver();
    Annihilators out;
    std::vector<Path> left, right;
    for (const Path& b : A.basis()) {
        if (b.is_trivial()) continue;
        if (b.source() == p.target() && A.is_zero_path(p.then(q, b))) left.push_back(b);
        if (b.target() == p.source() && A.is_zero_path(b.then(q, p))) right.push_back(b);
    }
    for (const Path& c : left)
        if (std::none_of(left.begin(), left.end(),
                         [&](const Path& d) { return d != c && c.has_prefix(d); }))
            out.left.push_back(c);
    for (const Path& c : right)
        if (std::none_of(right.begin(), right.end(),
                         [&](const Path& d) { return d != c && c.has_suffix(d); }))
            out.right.push_back(c);
    return out;
}

bool check_associativity(const BoundQuiverAlgebra& A, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, A.dimension() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        SparseVec x{{static_cast<std::uint32_t>(pick(rng)), Scalar(1)}};
        SparseVec y{{static_cast<std::uint32_t>(pick(rng)), Scalar(1)}};
        SparseVec z{{static_cast<std::uint32_t>(pick(rng)), Scalar(1)}};
        if (A.multiply(A.multiply(x, y), z) != A.multiply(x, A.multiply(y, z))) return false;
    }
    return true;
}

std::vector<StructureConstant> structure_constants(const BoundQuiverAlgebra& A) {
    std::vector<StructureConstant> out;
    for (ArrowId a = 0; a < A.quiver().num_arrows(); ++a)
        for (std::size_t b = 0; b < A.dimension(); ++b)
            for (const auto& [r, c] : A.arrow_action(a, b)) out.push_back({a, b, r, c});
    return out;
}

}  // namespace qh
