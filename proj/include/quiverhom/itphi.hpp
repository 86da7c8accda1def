#ifndef QUIVERHOM_ITPHI_HPP
#define QUIVERHOM_ITPHI_HPP

#include <optional>
#include <string>
#include <vector>

#include "quiverhom/linrep.hpp"
#include "quiverhom/matrix.hpp"
#include "quiverhom/pathcalc.hpp"

namespace qh {

/// Free abelian group on non-projective indecomposables closed under the
/// syzygy, with the induced endomorphism T (column c = image of basis c).
struct K0Lattice {
    std::vector<std::string> labels;
    std::vector<ClassId> classes;  // path-module lattices only
    Matrix T;                      // d x d, non-negative integers
    std::size_t rank() const { return labels.size(); }
    std::optional<std::size_t> position(ClassId c) const;
};

K0Lattice build_lattice(const ClassTable& T, const std::vector<ClassId>& seed);

/// Ranks of T^l G for l = 0..upto, G given by generator columns.
std::vector<std::size_t> rank_sequence(const K0Lattice& L, const Matrix& generators, std::size_t upto);
/// min{l : r_l = r_d}, d the lattice rank.
std::size_t stabilization_index(const std::vector<std::size_t>& ranks, std::size_t d);
/// Non-increasing and constant from d to 2d.
bool stabilization_sound(const K0Lattice& L, const Matrix& generators);

/// Unit columns for the distinct non-projective summands of m.
Matrix generator_columns(const K0Lattice& L, const ClassTable& T, const ModuleMultiset& m);
Matrix full_generators(const K0Lattice& L);

struct PhiReport {
    K0Lattice lattice;
    std::vector<std::size_t> ranks;
    std::size_t value = 0;
};

PhiReport phi_report(const ClassTable& T, const ModuleMultiset& m);
std::size_t phi(const ClassTable& T, const ModuleMultiset& m);
/// phi of m computed inside a larger syzygy-closed lattice.
std::size_t phi_in(const K0Lattice& L, const ClassTable& T, const ModuleMultiset& m);

PhiReport phidim_subcat_report(const ClassTable& T, const std::vector<ClassId>& seed);
std::size_t phidim_subcat(const ClassTable& T, const std::vector<ClassId>& seed);

struct PhidimBounds {
    std::size_t lower = 0;
    std::optional<std::size_t> upper;
    std::optional<std::size_t> exact;  // known value (self-injective: 0; finite gldim: gldim)
    std::string lower_witness;
    std::string basis;                 // how upper/exact were obtained
    std::optional<std::size_t> best_upper() const { return exact ? exact : upper; }
};

/// Monomial and truncated algebras.
PhidimBounds phidim_bounds(const ClassTable& T);

// ---- non-monomial algebras ------------------------------------------------

/// Catalog entry for linear phi. An opaque entry is not decomposed further;
/// its syzygy is modelled as an independent infinite-pd chain (T fixes it).
struct CatalogEntry {
    Representation module;
    std::string label;
    bool opaque = false;
};

struct HybridPhiReport {
    K0Lattice lattice;                 // labels of catalog entries reached
    std::vector<std::size_t> ranks;
    std::size_t value = 0;
    std::vector<std::size_t> summands; // positions of M's summands in the lattice
};

/// phi of an explicit module via certified decompositions of iterated
/// syzygies against the catalog. NO_DECOMPOSITION when a syzygy escapes it.
HybridPhiReport phi_hybrid(const Representation& M, const std::vector<CatalogEntry>& catalog,
                           std::size_t trials = 20, std::uint64_t seed = 0);

/// Bounds for any algebra: monomial ones through the class table, others
/// through linear pd probes (lower) and self-injectivity / finite gldim (exact).
PhidimBounds phidim_bounds_any(const AlgebraPtr& A, std::size_t max_steps = 12,
                               std::size_t trials = 20, std::uint64_t seed = 0);

bool is_self_injective(const AlgebraPtr& A, std::size_t trials = 20, std::uint64_t seed = 0);

struct TriangularReport {
    std::vector<VertexId> gamma, gamma_bar;
    PhidimBounds c, a, b;
    std::optional<std::size_t> theorem_bound;  // phidim(A) + phidim(B) + 1 from best known values
    bool consistent = true;                    // lower(C) <= theorem bound (vacuous when unknown)
};

/// HYPOTHESIS_VIOLATED naming the failing condition.
TriangularReport triangular_check(const AlgebraPtr& C, const std::vector<VertexId>& gamma,
                                  const std::vector<VertexId>& gamma_bar, std::size_t max_steps = 12,
                                  std::size_t trials = 20, std::uint64_t seed = 0);

}  // namespace qh

#endif
