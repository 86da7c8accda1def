#ifndef QUIVERHOM_HOMGOR_HPP
#define QUIVERHOM_HOMGOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "quiverhom/pathcalc.hpp"

namespace qh {

/// A path on a cycle of perfect pairs, with its relation-cycle
/// p = p_1, p_2, ..., p_n (p_{n+1} = p_1).
struct PerfectPath {
    Path path;
    std::vector<Path> cycle;
};

std::vector<PerfectPath> perfect_paths(const ClassTable& T);

struct GpClass {
    ClassId id;
    PerfectPath witness;  // shortest perfect path generating the class
};

/// Non-projective indecomposable Gorenstein-projective classes, one per
/// class of perfect paths.
std::vector<GpClass> gp_indecomposables(const ClassTable& T);

bool is_self_injective_truncated(const BoundQuiverAlgebra& A);
bool is_cm_free(const ClassTable& T);

struct PeriodicWitness {
    ModuleMultiset module;
    std::size_t period = 0;
    std::vector<ClassId> cycle;   // infinite-pd classes, in syzygy order
    std::size_t horizon = 0;      // T: multiple of the cycle length beyond the junk pd
};

/// One witness per cycle of the single-infinite-successor syzygy graph.
std::vector<PeriodicWitness> periodic_modules(const ClassTable& T);
std::optional<PeriodicWitness> find_periodic_module(const ClassTable& T);

/// Membership of a projective-free multiset in Omega^infinity (periodicity).
bool omega_infinity(const ClassTable& T, const ModuleMultiset& m, std::size_t cap = 1000);
bool omega_infinity_trivial(const ClassTable& T);

struct CoGorensteinVerdict {
    bool verdict = false;
    std::string branch;  // acyclic | cycle_graph | no_cycle_subheart | counterexample | search
    std::optional<PeriodicWitness> witness;
    std::string note;
};

/// Quiver criterion for kQ/J^k.
CoGorensteinVerdict cogorenstein_truncated(const ClassTable& T);
/// Search over periodic cycles against the GP list (any monomial algebra).
CoGorensteinVerdict cogorenstein_monomial(const ClassTable& T);

/// A summand that is neither projective nor Gorenstein-projective.
std::optional<ClassId> non_gp_summand(const ClassTable& T, const ModuleMultiset& m,
                                      const std::vector<GpClass>& gp);

/// Restriction of A to the full subquiver Q^infinity (nullptr when empty).
AlgebraPtr restrict_to_q_infinity(const BoundQuiverAlgebra& A);

}  // namespace qh

#endif
