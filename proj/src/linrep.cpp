#include "quiverhom/linrep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "quiverhom/error.hpp"

namespace qh {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<Matrix> arrows)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), arrows_(std::move(arrows)) {
    const Quiver& q = algebra_->quiver();
    require(dims_.size() == q.num_vertices(), ErrorCode::InvalidArgument,
            "representation needs one dimension per vertex");
    require(arrows_.size() == q.num_arrows(), ErrorCode::InvalidArgument,
            "representation needs one matrix per arrow");
    const Field& F = algebra_->field();
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        Matrix& m = arrows_[a];
        const Arrow& arr = q.arrow(a);
        require(m.rows() == dims_[arr.target] && m.cols() == dims_[arr.source],
                ErrorCode::InvalidArgument,
                "matrix of arrow " + arr.name + " must be " + std::to_string(dims_[arr.target]) + "x" +
                    std::to_string(dims_[arr.source]));
        if (F.is_prime())
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.reduce(m(i, j));
    }
}

Representation Representation::zero(AlgebraPtr algebra) {
    const Quiver& q = algebra->quiver();
    std::vector<Matrix> mats(q.num_arrows());
    return Representation(std::move(algebra), std::vector<std::size_t>(q.num_vertices(), 0), std::move(mats));
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix Representation::evaluate(const Path& p) const {
    Matrix out = Matrix::identity(dim(p.source()));
    for (ArrowId a : p.arrows()) out = multiply(field(), arrows_[a], out);
    return out;
}

Matrix Representation::evaluate(const SparseVec& x, VertexId source, VertexId target) const {
    Matrix out(dim(target), dim(source));
    for (const auto& [b, c] : x) {
        const Path& p = algebra_->basis_path(b);
        if (p.source() != source || p.target() != target) continue;
        out = add(field(), out, scale(field(), c, evaluate(p)));
    }
    return out;
}

namespace {

std::vector<Path> paths_of_length(const Quiver& q, std::size_t len) {
    std::vector<Path> cur;
    for (VertexId v = 0; v < q.num_vertices(); ++v) cur.push_back(Path::trivial(v));
    for (std::size_t d = 0; d < len; ++d) {
        std::vector<Path> next;
        for (const Path& p : cur)
            for (ArrowId a : q.out_arrows(p.target())) next.push_back(p.then(q, Path::arrow(q, a)));
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

bool check_relations(const Representation& M) {
    const BoundQuiverAlgebra& A = *M.algebra();
    const Quiver& q = A.quiver();
    const Field& F = A.field();
    auto kills_all = [&](std::size_t len) {
        for (const Path& p : paths_of_length(q, len))
            if (!M.evaluate(p).is_zero()) return false;
        return true;
    };
    switch (A.kind()) {
        case IdealKind::Truncated:
            return kills_all(A.truncation());
        case IdealKind::Monomial:
            for (const Path& g : A.ideal().generators)
                if (!M.evaluate(g).is_zero()) return false;
            return true;
        case IdealKind::Relations: {
            for (const Relation& r : A.ideal().relations) {
                const Path& p0 = r.front().path;
                Matrix sum(M.dim(p0.target()), M.dim(p0.source()));
                for (const RelationTerm& t : r) sum = add(F, sum, scale(F, t.coefficient, M.evaluate(t.path)));
                if (!sum.is_zero()) return false;
            }
            if (A.ideal().radical_power && !kills_all(*A.ideal().radical_power)) return false;
            return kills_all(A.ideal().nilpotency);
        }
    }
    return false;
}

Representation direct_sum(const std::vector<const Representation*>& parts) {
    require(!parts.empty(), ErrorCode::InvalidArgument, "direct sum of nothing");
    const AlgebraPtr& A = parts.front()->algebra();
    const Quiver& q = A->quiver();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    for (const Representation* p : parts) {
        require(p->algebra() == A, ErrorCode::FieldMismatch, "direct sum over different algebras");
        for (VertexId v = 0; v < q.num_vertices(); ++v) dims[v] += p->dim(v);
    }
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        std::vector<const Matrix*> blocks;
        for (const Representation* p : parts) blocks.push_back(&p->matrix(a));
        mats.push_back(block_diagonal(blocks));
    }
    return Representation(A, std::move(dims), std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum({&a, &b}); }

Representation power(const Representation& M, std::size_t n) {
    if (n == 0) return Representation::zero(M.algebra());
    std::vector<const Representation*> parts(n, &M);
    return direct_sum(parts);
}

Representation simple_module(const AlgebraPtr& A, VertexId v) {
    const Quiver& q = A->quiver();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    dims.at(v) = 1;
    std::vector<Matrix> mats;
    for (const Arrow& a : q.arrows()) mats.emplace_back(dims[a.target], dims[a.source]);
    return Representation(A, std::move(dims), std::move(mats));
}

namespace {

// Representation on a set of basis elements closed under the arrow action
// (modulo elements outside the set, which act as zero), grouped by `vertex_of`.
template <class VertexOf>
Representation on_basis_subset(const AlgebraPtr& A, const std::vector<std::size_t>& elems, VertexOf vertex_of,
                               std::vector<std::size_t>& local) {
    const Quiver& q = A->quiver();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    local.assign(A->dimension(), SIZE_MAX);
    for (std::size_t b : elems) local[b] = dims[vertex_of(b)]++;
    std::vector<Matrix> mats;
    for (const Arrow& a : q.arrows()) mats.emplace_back(dims[a.target], dims[a.source]);
    return Representation(A, std::move(dims), std::move(mats));
}

}  // namespace

Representation projective_module(const AlgebraPtr& A, VertexId v) {
    const Quiver& q = A->quiver();
    std::vector<std::size_t> local;
    const auto& elems = A->basis_from(v);
    Representation shell =
        on_basis_subset(A, elems, [&](std::size_t b) { return A->basis_path(b).target(); }, local);
    std::vector<Matrix> mats = shell.matrices();
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        for (std::size_t b : elems) {
            if (A->basis_path(b).target() != q.arrow(a).source) continue;
            for (const auto& [r, c] : A->arrow_action(a, b)) mats[a](local[r], local[b]) = c;
        }
    return Representation(A, shell.dims(), std::move(mats));
}

Representation injective_module(const AlgebraPtr& A, VertexId v) {
    const Quiver& q = A->quiver();
    std::vector<std::size_t> local;
    const auto& elems = A->basis_to(v);
    Representation shell =
        on_basis_subset(A, elems, [&](std::size_t b) { return A->basis_path(b).source(); }, local);
    std::vector<Matrix> mats = shell.matrices();
    // (a·b*)(y) = b*(y·a) for y ending at v and starting at t(a).
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        for (std::size_t y : elems) {
            if (A->basis_path(y).source() != q.arrow(a).target) continue;
            for (const auto& [r, c] : A->basis_product(y, A->arrow_basis_index(a))) mats[a](local[y], local[r]) = c;
        }
    return Representation(A, shell.dims(), std::move(mats));
}

Representation class_module(const ClassTable& T, ClassId c) {
    const AlgebraPtr& A = T.algebra_ptr();
    const Quiver& q = A->quiver();
    const auto& elems = T[c].continuation;
    std::vector<std::size_t> local;
    Representation shell =
        on_basis_subset(A, elems, [&](std::size_t b) { return A->basis_path(b).target(); }, local);
    std::vector<Matrix> mats = shell.matrices();
    for (ArrowId a = 0; a < q.num_arrows(); ++a)
        for (std::size_t b : elems) {
            if (A->basis_path(b).target() != q.arrow(a).source) continue;
            for (const auto& [r, coef] : A->arrow_action(a, b))
                if (local[r] != SIZE_MAX) mats[a](local[r], local[b]) = coef;
        }
    return Representation(A, shell.dims(), std::move(mats));
}

Representation multiset_module(const ClassTable& T, const ModuleMultiset& m) {
    std::vector<Representation> reps;
    for (const auto& [c, k] : m)
        for (std::size_t i = 0; i < k; ++i) reps.push_back(class_module(T, c));
    if (reps.empty()) return Representation::zero(T.algebra_ptr());
    std::vector<const Representation*> parts;
    for (const Representation& r : reps) parts.push_back(&r);
    return direct_sum(parts);
}

namespace {

// Columns spanning rad M at v: images of all incoming arrows.
Matrix radical_span(const Representation& M, VertexId v) {
    const Quiver& q = M.algebra()->quiver();
    Matrix span(M.dim(v), 0);
    for (ArrowId a : q.in_arrows(v)) span = hstack(span, M.matrix(a));
    return span;
}

// Rows: all outgoing arrow matrices stacked.
Matrix outgoing_stack(const Representation& M, VertexId v) {
    const Quiver& q = M.algebra()->quiver();
    Matrix t(M.dim(v), 0);
    for (ArrowId a : q.out_arrows(v)) t = hstack(t, M.matrix(a).transpose());
    return t.transpose();
}

}  // namespace

std::vector<std::size_t> top_dims(const Representation& M) {
    std::vector<std::size_t> out;
    for (VertexId v = 0; v < M.dims().size(); ++v) out.push_back(M.dim(v) - rank(M.field(), radical_span(M, v)));
    return out;
}

std::vector<std::size_t> socle_dims(const Representation& M) {
    std::vector<std::size_t> out;
    for (VertexId v = 0; v < M.dims().size(); ++v) {
        Matrix s = outgoing_stack(M, v);
        out.push_back(M.dim(v) - (s.rows() == 0 ? 0 : rank(M.field(), s)));
    }
    return out;
}

ProjectiveCover projective_cover(const Representation& M) {
    const AlgebraPtr& A = M.algebra();
    const Quiver& q = A->quiver();
    const std::size_t n = q.num_vertices();
    ProjectiveCover out;
    std::vector<std::vector<std::size_t>> lifts(n);
    for (VertexId v = 0; v < n; ++v) {
        lifts[v] = complement_indices(M.field(), radical_span(M, v));
        out.top.push_back(lifts[v].size());
    }
    std::vector<Representation> parts;
    for (VertexId v = 0; v < n; ++v)
        for (std::size_t j = 0; j < lifts[v].size(); ++j) parts.push_back(projective_module(A, v));
    if (parts.empty()) {
        out.cover = Representation::zero(A);
    } else {
        std::vector<const Representation*> ptrs;
        for (const Representation& p : parts) ptrs.push_back(&p);
        out.cover = direct_sum(ptrs);
    }
    // Columns follow the layout of direct_sum and projective_module.
    std::vector<std::vector<std::vector<Scalar>>> columns(n);
    for (VertexId v = 0; v < n; ++v) {
        if (lifts[v].empty()) continue;
        Matrix select(M.dim(v), lifts[v].size());
        for (std::size_t j = 0; j < lifts[v].size(); ++j) select(lifts[v][j], j) = 1;
        std::vector<Matrix> images;
        for (std::size_t b : A->basis_from(v)) {
            Matrix image = select;
            for (ArrowId a : A->basis_path(b).arrows()) image = multiply(M.field(), M.matrix(a), image);
            images.push_back(std::move(image));
        }
        for (std::size_t j = 0; j < lifts[v].size(); ++j)
            for (std::size_t i = 0; i < images.size(); ++i) {
                const Matrix& image = images[i];
                std::vector<Scalar> col(image.rows());
                for (std::size_t r = 0; r < col.size(); ++r) col[r] = image(r, j);
                columns[A->basis_path(A->basis_from(v)[i]).target()].push_back(std::move(col));
            }
    }
    for (VertexId u = 0; u < n; ++u) {
        Matrix m(M.dim(u), columns[u].size());
        for (std::size_t c = 0; c < columns[u].size(); ++c)
            for (std::size_t r = 0; r < M.dim(u); ++r) m(r, c) = columns[u][c][r];
        out.map.push_back(std::move(m));
    }
    return out;
}

Representation syzygy_rep(const Representation& M) {
    const AlgebraPtr& A = M.algebra();
    const Quiver& q = A->quiver();
    const Field& F = M.field();
    ProjectiveCover pc = projective_cover(M);
    std::vector<Matrix> K;
    std::vector<std::size_t> dims;
    for (VertexId u = 0; u < q.num_vertices(); ++u) {
        require(rank(F, pc.map[u]) == M.dim(u), ErrorCode::InvariantViolation, "projective cover is not onto");
        K.push_back(kernel(F, pc.map[u]).basis);
        dims.push_back(K.back().cols());
    }
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        Matrix image = multiply(F, pc.cover.matrix(a), K[arr.source]);
        auto x = solve(F, K[arr.target], image);
        require(x.has_value(), ErrorCode::InvariantViolation, "kernel is not a submodule");
        mats.push_back(std::move(*x));
    }
    return Representation(A, std::move(dims), std::move(mats));
}

HomSpace::HomSpace(const Representation& M, const Representation& N)
    : mdims_(M.dims()), ndims_(N.dims()), echelon_(M.field(), 0) {
    require(M.field() == N.field(), ErrorCode::FieldMismatch, "modules over different fields");
    require(M.algebra()->quiver() == N.algebra()->quiver(), ErrorCode::InvalidArgument,
            "modules over different quivers");
    const Quiver& q = M.algebra()->quiver();
    const Field& F = M.field();
    const std::size_t n = q.num_vertices();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return mdims_[a] * ndims_[a] > mdims_[b] * ndims_[b];
    });
    offset_.assign(n, 0);
    std::size_t total = 0;
    for (VertexId v : order) {
        offset_[v] = total;
        total += mdims_[v] * ndims_[v];
    }
    echelon_ = SparseEchelon(F, total);
    auto var = [&](VertexId v, std::size_t i, std::size_t j) {
        return static_cast<std::uint32_t>(offset_[v] + i * mdims_[v] + j);
    };
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        VertexId u = q.arrow(a).source, w = q.arrow(a).target;
        const Matrix& Ma = M.matrix(a);
        const Matrix& Na = N.matrix(a);
        // (X_w Ma - Na X_u)(r, c) = 0
        for (std::size_t r = 0; r < ndims_[w]; ++r)
            for (std::size_t c = 0; c < mdims_[u]; ++c) {
                std::map<std::uint32_t, Scalar> row;
                for (std::size_t k = 0; k < mdims_[w]; ++k)
                    if (Ma(k, c) != 0) row[var(w, r, k)] += Ma(k, c);
                for (std::size_t k = 0; k < ndims_[u]; ++k)
                    if (Na(r, k) != 0) row[var(u, k, c)] -= Na(r, k);
                SparseVec sv;
                for (auto& [i, x] : row) {
                    Scalar y = F.reduce(x);
                    if (y != 0) sv.emplace_back(i, y);
                }
                if (!sv.empty()) echelon_.add_row(sv);
            }
    }
    echelon_.finalize();
}

ModuleHom HomSpace::from_coordinates(const std::vector<Scalar>& x) const {
    ModuleHom f;
    for (std::size_t v = 0; v < mdims_.size(); ++v) {
        Matrix X(ndims_[v], mdims_[v]);
        for (std::size_t i = 0; i < ndims_[v]; ++i)
            for (std::size_t j = 0; j < mdims_[v]; ++j) X(i, j) = x[offset_[v] + i * mdims_[v] + j];
        f.components.push_back(std::move(X));
    }
    return f;
}

ModuleHom HomSpace::basis_element(std::size_t i) const { return from_coordinates(echelon_.kernel_basis_vector(i)); }

ModuleHom HomSpace::sample(std::mt19937_64& rng) const {
    std::vector<Scalar> free(dimension());
    for (Scalar& s : free) s = echelon_.field().random(rng);
    return from_coordinates(echelon_.kernel_point(free));
}

std::size_t hom_dimension(const Representation& M, const Representation& N) { return HomSpace(M, N).dimension(); }

bool is_module_hom(const Representation& M, const Representation& N, const ModuleHom& f) {
    const Quiver& q = M.algebra()->quiver();
    const Field& F = M.field();
    if (f.components.size() != q.num_vertices()) return false;
    for (VertexId v = 0; v < q.num_vertices(); ++v)
        if (f.components[v].rows() != N.dim(v) || f.components[v].cols() != M.dim(v)) return false;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        VertexId u = q.arrow(a).source, w = q.arrow(a).target;
        if (multiply(F, f.components[w], M.matrix(a)) != multiply(F, N.matrix(a), f.components[u])) return false;
    }
    return true;
}

std::string to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Isomorphic: return "isomorphic";
        case IsoVerdict::NotIsomorphic: return "not_isomorphic";
        case IsoVerdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

bool invertible_everywhere(const Field& F, const ModuleHom& f) {
    for (const Matrix& X : f.components)
        if (X.rows() != X.cols() || rank(F, X) != X.rows()) return false;
    return true;
}

std::string dims_str(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

}  // namespace

IsoResult iso_test(const Representation& M, const Representation& N, std::size_t trials, std::uint64_t seed) {
    require(M.field() == N.field(), ErrorCode::FieldMismatch, "modules over different fields");
    const Field& F = M.field();
    if (M.dims() != N.dims())
        return {IsoVerdict::NotIsomorphic, "dimension vectors " + dims_str(M.dims()) + " and " + dims_str(N.dims()), {}};
    if (M.matrices() == N.matrices()) {
        ModuleHom id;
        for (std::size_t d : M.dims()) id.components.push_back(Matrix::identity(d));
        return {IsoVerdict::Isomorphic, "identical representations", id};
    }
    auto tm = top_dims(M), tn = top_dims(N);
    if (tm != tn) return {IsoVerdict::NotIsomorphic, "top dimension vectors " + dims_str(tm) + " and " + dims_str(tn), {}};
    auto sm = socle_dims(M), sn = socle_dims(N);
    if (sm != sn) return {IsoVerdict::NotIsomorphic, "socle dimension vectors " + dims_str(sm) + " and " + dims_str(sn), {}};
    HomSpace hmn(M, N);
    std::size_t dmn = hmn.dimension();
    if (dmn == 0) return {IsoVerdict::NotIsomorphic, "Hom(M,N) = 0", {}};
    std::size_t dnm = hom_dimension(N, M);
    if (dnm != dmn)
        return {IsoVerdict::NotIsomorphic,
                "dim Hom(M,N) = " + std::to_string(dmn) + " but dim Hom(N,M) = " + std::to_string(dnm), {}};
    std::size_t dmm = hom_dimension(M, M);
    if (dmm != dmn)
        return {IsoVerdict::NotIsomorphic,
                "dim End(M) = " + std::to_string(dmm) + " but dim Hom(M,N) = " + std::to_string(dmn), {}};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        ModuleHom f = hmn.sample(rng);
        if (invertible_everywhere(F, f) && is_module_hom(M, N, f))
            return {IsoVerdict::Isomorphic, "invertible homomorphism found at trial " + std::to_string(t + 1), f};
    }
    return {IsoVerdict::Undetermined, "no invertible sample in " + std::to_string(trials) + " trials", {}};
}

Decomposition decompose_against_catalog(const Representation& M, const std::vector<Representation>& catalog,
                                        std::size_t trials, std::uint64_t seed) {
    const std::size_t n = M.dims().size();
    auto invariant = [&](const Representation& R) {
        std::vector<std::size_t> v = R.dims();
        auto t = top_dims(R), s = socle_dims(R);
        v.insert(v.end(), t.begin(), t.end());
        v.insert(v.end(), s.begin(), s.end());
        return v;
    };
    Decomposition out;
    std::vector<std::vector<std::size_t>> inv;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (catalog[i].is_zero()) continue;
        auto vi = invariant(catalog[i]);
        bool duplicate = false;
        for (std::size_t j = 0; j < out.catalog_index.size() && !duplicate; ++j)
            duplicate = inv[j] == vi &&
                        iso_test(catalog[out.catalog_index[j]], catalog[i], trials, seed).verdict == IsoVerdict::Isomorphic;
        if (duplicate) continue;
        out.catalog_index.push_back(i);
        inv.push_back(std::move(vi));
    }
    const std::size_t m = out.catalog_index.size();
    std::vector<std::size_t> target = invariant(M);
    if (M.is_zero()) {
        out.multiplicity.assign(m, 0);
        return out;
    }

    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> mult(m, 0);
    const std::size_t kMaxCandidates = 4096;
    std::function<void(std::size_t, std::vector<std::size_t>&)> search = [&](std::size_t i, std::vector<std::size_t>& rem) {
        if (candidates.size() >= kMaxCandidates) return;
        if (std::all_of(rem.begin(), rem.end(), [](std::size_t x) { return x == 0; })) {
            candidates.push_back(mult);
            return;
        }
        if (i == m) return;
        std::size_t most = SIZE_MAX;
        for (std::size_t k = 0; k < rem.size(); ++k)
            if (inv[i][k] > 0) most = std::min(most, rem[k] / inv[i][k]);
        for (std::size_t c = most;; --c) {
            for (std::size_t k = 0; k < rem.size(); ++k) rem[k] -= c * inv[i][k];
            mult[i] = c;
            search(i + 1, rem);
            for (std::size_t k = 0; k < rem.size(); ++k) rem[k] += c * inv[i][k];
            mult[i] = 0;
            if (c == 0) break;
        }
    };
    std::vector<std::size_t> rem = target;
    search(0, rem);
    (void)n;

    bool found = false;
    std::size_t tested = 0;
    for (const auto& cand : candidates) {
        if (found && tested >= 16) break;
        std::vector<const Representation*> parts;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = 0; c < cand[i]; ++c) parts.push_back(&catalog[out.catalog_index[i]]);
        Representation sum = direct_sum(parts);
        ++tested;
        if (iso_test(sum, M, trials, seed).verdict != IsoVerdict::Isomorphic) continue;
        if (found) {
            out.ambiguous = true;
            break;
        }
        found = true;
        out.multiplicity = cand;
    }
    require(found, ErrorCode::NoDecomposition,
            "no sum of catalog modules is certified isomorphic (" + std::to_string(candidates.size()) +
                " candidates)");
    return out;
}

std::string PdResult::str() const {
    switch (kind) {
        case PdKind::Finite: return std::to_string(value);
        case PdKind::Infinite: return "infinite_certified";
        case PdKind::AtLeast: return "at_least(" + std::to_string(value) + ")";
    }
    return "";
}

PdResult pd_rep(const Representation& M, std::size_t max_steps, std::size_t trials, std::uint64_t seed,
                std::size_t max_dim) {
    const AlgebraPtr& A = M.algebra();
    std::vector<Representation> trajectory;
    Representation cur = M;
    for (std::size_t step = 0;; ++step) {
        if (cur.is_zero()) return {PdKind::Finite, step == 0 ? 0 : step - 1, "syzygy " + std::to_string(step) + " is zero"};
        if (step == 2 && A->is_monomial()) {
            ClassTable T(A);
            std::vector<Representation> catalog;
            for (ClassId c = 0; c < T.size(); ++c) catalog.push_back(class_module(T, c));
            try {
                Decomposition d = decompose_against_catalog(cur, catalog, trials, seed);
                ModuleMultiset mm;
                for (std::size_t i = 0; i < d.multiplicity.size(); ++i)
                    if (d.multiplicity[i]) mm[d.catalog_index[i]] += d.multiplicity[i];
                ExtNat p = pd(T, mm);
                std::string cert = "second syzygy = " + format_multiset(T, mm);
                if (p.infinite) return {PdKind::Infinite, 0, cert + " has infinite pd"};
                return {PdKind::Finite, 2 + p.value, cert};
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NoDecomposition) throw;
            }
        }
        for (std::size_t i = 0; i < trajectory.size(); ++i) {
            if (trajectory[i].dims() != cur.dims()) continue;
            if (iso_test(trajectory[i], cur, trials, seed).verdict == IsoVerdict::Isomorphic)
                return {PdKind::Infinite, 0,
                        "syzygy " + std::to_string(i) + " is isomorphic to syzygy " + std::to_string(step)};
        }
        if (step == max_steps) return {PdKind::AtLeast, max_steps, "syzygy " + std::to_string(step) + " is nonzero"};
        if (cur.total_dim() > max_dim)
            return {PdKind::AtLeast, step, "syzygy " + std::to_string(step) + " is nonzero of dimension " +
                                               std::to_string(cur.total_dim()) + " (size cap)"};
        trajectory.push_back(cur);
        cur = syzygy_rep(cur);
    }
}

namespace {

// Column basis of the span of the columns of m.
Matrix column_basis(const Field& F, const Matrix& m) {
    if (m.cols() == 0) return m;
    RowEchelon e = rref(F, m.transpose());
    Matrix out(m.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, j) = e.reduced(j, r);
    return out;
}

}  // namespace

// Submodule generated by the given vectors, per vertex.
std::vector<Matrix> submodule_closure(const Representation& M, std::vector<Matrix> gens) {
    const Field& F = M.field();
    const Quiver& q = M.algebra()->quiver();
    for (VertexId v = 0; v < gens.size(); ++v) gens[v] = column_basis(F, gens[v]);
    bool changed = true;
    while (changed) {
        changed = false;
        for (ArrowId a = 0; a < q.num_arrows(); ++a) {
            const Arrow& arr = q.arrow(a);
            if (gens[arr.source].cols() == 0) continue;
            Matrix img = multiply(F, M.matrix(a), gens[arr.source]);
            Matrix merged = column_basis(F, hstack(gens[arr.target], img));
            if (merged.cols() != gens[arr.target].cols()) {
                gens[arr.target] = std::move(merged);
                changed = true;
            }
        }
    }
    return gens;
}

Representation quotient_representation(const Representation& M, const std::vector<Matrix>& U) {
    const Field& F = M.field();
    const Quiver& q = M.algebra()->quiver();
    std::vector<std::vector<std::size_t>> comp;
    std::vector<Matrix> full;
    std::vector<std::size_t> dims;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        comp.push_back(complement_indices(F, U[v]));
        Matrix e(M.dim(v), comp[v].size());
        for (std::size_t j = 0; j < comp[v].size(); ++j) e(comp[v][j], j) = 1;
        full.push_back(hstack(U[v], e));
        dims.push_back(comp[v].size());
    }
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        Matrix out(dims[arr.target], dims[arr.source]);
        for (std::size_t j = 0; j < comp[arr.source].size(); ++j) {
            Matrix e(M.dim(arr.source), 1);
            e(comp[arr.source][j], 0) = 1;
            Matrix y = multiply(F, M.matrix(a), e);
            auto x = solve(F, full[arr.target], y);
            require(x.has_value(), ErrorCode::InvariantViolation, "quotient coordinates");
            for (std::size_t r = 0; r < dims[arr.target]; ++r) out(r, j) = (*x)(U[arr.target].cols() + r, 0);
        }
        mats.push_back(std::move(out));
    }
    return Representation(M.algebra(), std::move(dims), std::move(mats));
}


Representation subrepresentation(const Representation& M, const std::vector<Matrix>& U) {
    const Field& F = M.field();
    const Quiver& q = M.algebra()->quiver();
    std::vector<std::size_t> dims;
    for (const Matrix& u : U) dims.push_back(u.cols());
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        if (dims[arr.source] == 0 || dims[arr.target] == 0) {
            mats.emplace_back(dims[arr.target], dims[arr.source]);
            continue;
        }
        auto x = solve(F, U[arr.target], multiply(F, M.matrix(a), U[arr.source]));
        require(x.has_value(), ErrorCode::InvariantViolation, "subspace is not a submodule");
        mats.push_back(std::move(*x));
    }
    return Representation(M.algebra(), std::move(dims), std::move(mats));
}

Representation cyclic_module(const AlgebraPtr& A, const Path& p) {
    const Quiver& q = A->quiver();
    Representation P = projective_module(A, p.source());
    SparseVec coords = A->reduce(p);
    require(!coords.empty(), ErrorCode::ZeroPath, "path " + p.traversal_string(q) + " is zero in A");
    // Local coordinates inside P_{s(p)}: basis elements grouped by target.
    std::vector<Matrix> gens;
    for (VertexId w = 0; w < q.num_vertices(); ++w) gens.emplace_back(P.dim(w), 0);
    Matrix g(P.dim(p.target()), 1);
    std::size_t local = 0;
    for (std::size_t b : A->basis_from(p.source())) {
        if (A->basis_path(b).target() != p.target()) continue;
        for (const auto& [i, c] : coords)
            if (i == b) g(local, 0) = c;
        ++local;
    }
    gens[p.target()] = std::move(g);
    return subrepresentation(P, submodule_closure(P, std::move(gens)));
}

}  // namespace qh
