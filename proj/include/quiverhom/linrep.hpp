#ifndef QUIVERHOM_LINREP_HPP
#define QUIVERHOM_LINREP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverhom/algebra.hpp"
#include "quiverhom/matrix.hpp"
#include "quiverhom/pathcalc.hpp"

namespace qh {

/// Left module as a quiver representation. The matrix of an arrow u -> w
/// has dim M_w rows and dim M_u columns.
class Representation {
public:
    Representation() = default;
    Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
    static Representation zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t dim(VertexId v) const { return dims_.at(v); }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& matrix(ArrowId a) const { return arrows_.at(a); }
    const std::vector<Matrix>& matrices() const noexcept { return arrows_; }

    /// Action of a path: later arrows applied last.
    Matrix evaluate(const Path& p) const;
    /// Action of an algebra element given in basis coordinates, restricted
    /// to the summand at `source`.
    Matrix evaluate(const SparseVec& x, VertexId source, VertexId target) const;

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> arrows_;
};

/// Every ideal generator (and, for relations algebras, every path of the
/// nilpotency length) acts as zero.
bool check_relations(const Representation& M);

Representation direct_sum(const std::vector<const Representation*>& parts);
Representation direct_sum(const Representation& a, const Representation& b);
Representation power(const Representation& M, std::size_t n);

Representation simple_module(const AlgebraPtr& A, VertexId v);
Representation projective_module(const AlgebraPtr& A, VertexId v);
/// D(e_v A): basis dual to the basis elements ending at v.
Representation injective_module(const AlgebraPtr& A, VertexId v);
/// The cyclic module Ap of a path class (monomial algebras).
Representation class_module(const ClassTable& T, ClassId c);
Representation multiset_module(const ClassTable& T, const ModuleMultiset& m);

/// Dimension vector of M / rad M.
std::vector<std::size_t> top_dims(const Representation& M);
/// Dimension vector of the socle.
std::vector<std::size_t> socle_dims(const Representation& M);

struct ProjectiveCover {
    Representation cover;               // direct sum of P_v^{top_v}
    std::vector<Matrix> map;            // per vertex: cover_v -> M_v
    std::vector<std::size_t> top;       // multiplicity of P_v
};
ProjectiveCover projective_cover(const Representation& M);
Representation syzygy_rep(const Representation& M);

struct ModuleHom {
    std::vector<Matrix> components;     // X_v : M_v -> N_v
};

/// Submodule generated by the given column vectors at each vertex (column bases).
std::vector<Matrix> submodule_closure(const Representation& M, std::vector<Matrix> gens);
/// Restriction to a submodule given by column bases per vertex.
Representation subrepresentation(const Representation& M, const std::vector<Matrix>& U);
/// M/U on the standard-vector complement of U.
Representation quotient_representation(const Representation& M, const std::vector<Matrix>& U);
/// The left ideal Ap inside P_{s(p)}.
Representation cyclic_module(const AlgebraPtr& A, const Path& p);

/// Solution space of the intertwining equations X_w M_a = N_a X_u.
class HomSpace {
public:
    HomSpace(const Representation& M, const Representation& N);
    std::size_t dimension() const { return echelon_.nullity(); }
    ModuleHom basis_element(std::size_t i) const;
    ModuleHom sample(std::mt19937_64& rng) const;
    ModuleHom from_coordinates(const std::vector<Scalar>& x) const;

private:
    std::vector<std::size_t> mdims_, ndims_, offset_;
    SparseEchelon echelon_;
};

std::size_t hom_dimension(const Representation& M, const Representation& N);
bool is_module_hom(const Representation& M, const Representation& N, const ModuleHom& f);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undetermined };
std::string to_string(IsoVerdict v);

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Undetermined;
    std::string reason;
    std::optional<ModuleHom> certificate;  // re-verified invertible hom
};

IsoResult iso_test(const Representation& M, const Representation& N, std::size_t trials = 20,
                   std::uint64_t seed = 0);

struct Decomposition {
    std::vector<std::size_t> multiplicity;  // per entry of the (deduplicated) catalog
    std::vector<std::size_t> catalog_index; // deduplicated entry -> original catalog index
    bool ambiguous = false;
};

/// Finds multiplicities n_i with M isomorphic to the sum of catalog[i]^{n_i}.
/// Isomorphic catalog entries are merged first. NO_DECOMPOSITION on failure.
Decomposition decompose_against_catalog(const Representation& M,
                                        const std::vector<Representation>& catalog,
                                        std::size_t trials = 20, std::uint64_t seed = 0);

enum class PdKind { Finite, Infinite, AtLeast };

struct PdResult {
    PdKind kind = PdKind::AtLeast;
    std::size_t value = 0;         // pd for Finite, step count for AtLeast
    std::string certificate;
    std::string str() const;
};

/// Iterated syzygies with three certificates: reaching zero, a monomial
/// handoff of the second syzygy to the path-module calculus, or two
/// isomorphic trajectory members. Stops early once a syzygy exceeds max_dim.
PdResult pd_rep(const Representation& M, std::size_t max_steps, std::size_t trials = 20,
                std::uint64_t seed = 0, std::size_t max_dim = 128);

}  // namespace qh

#endif
