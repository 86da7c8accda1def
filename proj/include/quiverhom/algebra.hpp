#ifndef QUIVERHOM_ALGEBRA_HPP
#define QUIVERHOM_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "quiverhom/field.hpp"
#include "quiverhom/matrix.hpp"
#include "quiverhom/quiver.hpp"

namespace qh {

enum class IdealKind { Truncated, Monomial, Relations };

struct RelationTerm {
    Scalar coefficient;
    Path path;
};
using Relation = std::vector<RelationTerm>;

/// Generators of an admissible ideal I of kQ.
struct IdealSpec {
    IdealKind kind = IdealKind::Truncated;
    std::size_t truncation = 0;               // Truncated: I = J^k
    std::vector<Path> generators;             // Monomial
    std::vector<Relation> relations;          // Relations
    std::optional<std::size_t> radical_power; // Relations: J^k listed among the generators
    std::size_t nilpotency = 0;               // Relations: J^N inside I

    static IdealSpec truncated(std::size_t k);
    static IdealSpec monomial(std::vector<Path> generators);
    static IdealSpec with_relations(std::vector<Relation> relations, std::size_t nilpotency,
                                    std::optional<std::size_t> radical_power = std::nullopt);
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// kQ/I with an explicit basis. For truncated and monomial ideals the basis
/// is the set of nonzero paths; for linear relations it is a set of path
/// representatives of a complement of I, degree by degree.
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
public:
    const Quiver& quiver() const noexcept { return quiver_; }
    const IdealSpec& ideal() const noexcept { return ideal_; }
    const Field& field() const noexcept { return field_; }
    IdealKind kind() const noexcept { return ideal_.kind; }
    bool is_monomial() const noexcept { return ideal_.kind != IdealKind::Relations; }
    bool is_truncated() const noexcept { return ideal_.kind == IdealKind::Truncated; }

    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<Path>& basis() const noexcept { return basis_; }
    const Path& basis_path(std::size_t i) const { return basis_.at(i); }
    /// Basis elements with the given source (these span P_v = A e_v).
    const std::vector<std::size_t>& basis_from(VertexId v) const { return from_.at(v); }
    /// Basis elements with the given target (these span e_v A).
    const std::vector<std::size_t>& basis_to(VertexId v) const { return to_.at(v); }

    std::size_t trivial_index(VertexId v) const { return trivial_.at(v); }
    std::size_t arrow_basis_index(ArrowId a) const { return arrow_basis_.at(a); }
    /// Index of a basis representative path, if it is one.
    std::optional<std::size_t> basis_index(const Path& p) const;

    /// Truncated/monomial only: p = 0 in A.
    bool is_zero_path(const Path& p) const;

    /// Coordinates of the coset of an arbitrary path.
    SparseVec reduce(const Path& p) const;

    /// Left action of an arrow on a basis element: traverse b, then the arrow.
    const SparseVec& arrow_action(ArrowId a, std::size_t b) const { return action_.at(a).at(b); }
    SparseVec act(ArrowId a, const SparseVec& x) const;

    /// Bilinear product x·y (function order: y first, then x).
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    SparseVec basis_product(std::size_t i, std::size_t j) const;

    /// Longest nonzero basis path.
    std::size_t max_length() const noexcept { return max_length_; }

    /// For truncated ideals the exponent k, otherwise 0.
    std::size_t truncation() const noexcept { return is_truncated() ? ideal_.truncation : 0; }

private:
    friend AlgebraPtr build_algebra(Quiver, IdealSpec, Field);
    BoundQuiverAlgebra() = default;

    void build_monomial();
    void build_relations();
    void finish_indexing();

    Quiver quiver_;
    IdealSpec ideal_;
    Field field_ = Field::rationals();
    std::vector<Path> basis_;
    std::map<Path, std::size_t> index_;
    std::map<Path, SparseVec> normal_forms_;  // relations algebras, paths of length < N
    std::vector<std::vector<std::size_t>> from_, to_;
    std::vector<std::size_t> trivial_, arrow_basis_;
    std::vector<std::vector<SparseVec>> action_;
    std::size_t max_length_ = 0;
};

AlgebraPtr build_algebra(Quiver quiver, IdealSpec ideal, Field field = Field::rationals());

/// Full sub-bound-quiver algebra on a vertex subset: truncated/monomial
/// generators and relations with both endpoints in the subset are kept.
AlgebraPtr restrict_algebra(const BoundQuiverAlgebra& A, const std::vector<VertexId>& vertices);

/// Relations algebras whose relations are all single paths are rewritten as
/// monomial (or truncated, when the generators are exactly the paths of one
/// length) algebras; anything else is returned unchanged.
AlgebraPtr normalize_ideal(const AlgebraPtr& A);

struct Annihilators {
    std::vector<Path> left;   // L(p): minimal q with q·p = 0 (q traversed after p)
    std::vector<Path> right;  // R(p): minimal q with p·q = 0 (q traversed before p)
};

Annihilators annihilator_sets(const BoundQuiverAlgebra& A, const Path& p);

/// (xy)z == x(yz) for `samples` random basis triples.
bool check_associativity(const BoundQuiverAlgebra& A, std::size_t samples, std::uint64_t seed);

/// Structure constants for arrow multiplication as (arrow, basis, result, coefficient).
struct StructureConstant {
    std::size_t arrow, basis, result;
    Scalar coefficient;
};
std::vector<StructureConstant> structure_constants(const BoundQuiverAlgebra& A);

}  // namespace qh

#endif
