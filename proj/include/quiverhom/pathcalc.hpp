#ifndef QUIVERHOM_PATHCALC_HPP
#define QUIVERHOM_PATHCALC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverhom/algebra.hpp"

namespace qh {

using ClassId = std::size_t;

/// Isomorphism class of a cyclic path module Ap over a monomial algebra.
/// Ap is the quotient of P_v (v = t(p)) by the span of the paths c with
/// c·p = 0, so the pair (v, continuation set) determines it.
struct PathModuleClass {
    ClassId id = 0;
    VertexId vertex = 0;
    std::vector<std::size_t> continuation;  // sorted basis indices, sources = vertex
    std::vector<std::size_t> dimension;     // dimension vector
    bool projective = false;
    bool simple = false;
    std::optional<Path> representative;     // shortest path generating it, if any
    std::string label;
};

/// Formal direct sum: class -> multiplicity (entries are positive).
using ModuleMultiset = std::map<ClassId, std::size_t>;

/// All path-module classes of a monomial algebra together with their
/// syzygies and projective dimensions. Built eagerly and immutable.
class ClassTable {
public:
    explicit ClassTable(AlgebraPtr algebra);

    const BoundQuiverAlgebra& algebra() const noexcept { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }

    std::size_t size() const noexcept { return classes_.size(); }
    const PathModuleClass& operator[](ClassId c) const { return classes_.at(c); }
    const std::vector<PathModuleClass>& classes() const noexcept { return classes_; }

    /// Class of Ap; ZERO_PATH when p = 0.
    ClassId class_of(const Path& p) const;
    ClassId projective(VertexId v) const { return projective_.at(v); }
    ClassId simple(VertexId v) const { return simple_.at(v); }
    std::optional<ClassId> find(VertexId v, const std::vector<std::size_t>& continuation) const;

    const ModuleMultiset& syzygy(ClassId c) const { return syzygy_.at(c); }
    ExtNat pd(ClassId c) const { return pd_.at(c); }

private:
    ClassId intern(VertexId v, std::vector<std::size_t> continuation, const Path* rep);
    std::vector<std::size_t> continuation_of(const Path& p) const;
    void compute_syzygies();
    void compute_pds();

    AlgebraPtr algebra_;
    std::vector<PathModuleClass> classes_;
    std::map<std::pair<VertexId, std::vector<std::size_t>>, ClassId> index_;
    std::vector<ClassId> projective_, simple_;
    std::vector<ModuleMultiset> syzygy_;
    std::vector<ExtNat> pd_;
};

ModuleMultiset singleton(ClassId c, std::size_t multiplicity = 1);
void add_to(ModuleMultiset& m, const ModuleMultiset& other, std::size_t times = 1);
ModuleMultiset direct_sum(const ModuleMultiset& a, const ModuleMultiset& b);
/// Drops projective summands.
ModuleMultiset nonprojective_part(const ClassTable& T, const ModuleMultiset& m);
std::vector<std::size_t> dimension_vector(const ClassTable& T, const ModuleMultiset& m);

ClassId class_of(const ClassTable& T, const Path& p);
const ModuleMultiset& syzygy_class(const ClassTable& T, ClassId c);
const ModuleMultiset& syzygy_simple(const ClassTable& T, VertexId v);
/// Syzygy of a formal sum; projective summands contribute nothing.
ModuleMultiset syzygy(const ClassTable& T, const ModuleMultiset& m);
ModuleMultiset iterate_syzygy(const ClassTable& T, const ModuleMultiset& m, std::size_t steps);

ExtNat pd_class(const ClassTable& T, ClassId c);
ExtNat pd(const ClassTable& T, const ModuleMultiset& m);
/// max_v pd(S_v). For truncated algebras also checks the closed formula.
ExtNat gldim(const ClassTable& T);
/// gldim of kQ/J^k: infinite on cyclic Q, else 2l/k when k | l and
/// 2 floor(l/k) + 1 otherwise, l the longest path length.
ExtNat truncated_gldim_formula(const Quiver& q, std::size_t k);

/// Number of infinite-pd summands counted with multiplicity.
std::size_t norm(const ClassTable& T, const ModuleMultiset& m);

/// Syzygy of M[v,l] over kQ/J^k by the closed formula: one copy of
/// M[t(s), k-l] for every path s of length k-l starting at v.
ModuleMultiset truncated_syzygy_formula(const ClassTable& T, ClassId c);

struct PeriodicResult {
    bool periodic = false;
    std::size_t period = 0;
    std::size_t steps = 0;  // trajectory length examined
};

/// INDETERMINATE when `cap` steps pass without a decision.
PeriodicResult is_periodic(const ClassTable& T, const ModuleMultiset& m, std::size_t cap = 1000);

/// "2·M[2,1] ⊕ P_1"; "0" for the empty sum.
std::string format_multiset(const ClassTable& T, const ModuleMultiset& m);

}  // namespace qh

#endif
