#ifndef QUIVERHOM_SHELL_HPP
#define QUIVERHOM_SHELL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverhom/itphi.hpp"
#include "quiverhom/linrep.hpp"
#include "quiverhom/pathcalc.hpp"

namespace qh {

// ---- .alg files -------------------------------------------------------------
//
//   name: loop_monomial
//   field: Q                      (or "Fp 32003")
//   vertices: 1 2
//   arrow: alpha 1 2
//   monomial: beta.alpha, gamma.gamma
//   truncated: 2
//   relations: alpha1.beta1 - 2*alpha2.beta2; J^3
//   nilpotency: 3
//   catalog: M_alpha(1..4,1..5)
//   catalog: opaque simple(1..4)
//
// Paths are written in traversal order: "a.b" traverses a, then b, which is
// the product ba. Exactly one of truncated / monomial / relations appears.

struct CatalogLine {
    std::string expr;
    bool opaque = false;
};

struct AlgebraFile {
    std::string name;
    AlgebraPtr algebra;
    std::vector<CatalogLine> catalog;
};

AlgebraFile parse_algebra(std::string_view text, const std::string& source = "<input>");
/// A path on disk, or "corpus:NAME" for an embedded file.
AlgebraFile load_algebra(const std::string& location);
std::string print_algebra(const AlgebraFile& file);
/// Same quiver, field and ideal description.
bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);
/// Copy of the algebra over another field.
AlgebraPtr with_field(const BoundQuiverAlgebra& A, const Field& F);

Path parse_path(const Quiver& q, std::string_view text);
/// "Q" or "Fp p".
Field parse_field_name(std::string_view text);
Scalar parse_scalar(std::string_view text);

/// "gamma: 1 2" / "gamma_bar: 3".
std::pair<std::vector<VertexId>, std::vector<VertexId>> parse_split(const Quiver& q, std::string_view text,
                                                                    const std::string& source = "<split>");

// ---- module expressions -----------------------------------------------------
//
//   path(a.b) | simple(v) | proj(v) | inj(v) | k*(expr) | expr + expr
//   rep{1:2, 2:1; alpha = [[1],[0]]}   (matrix rows = target dim)
//   M(a) | N(a) | M_alpha(i,n) | M_beta(i,n)

/// Combinatorial context: path, simple and proj only.
ModuleMultiset eval_multiset(const ClassTable& T, std::string_view expr);
/// Linear context: everything.
Representation eval_representation(const AlgebraPtr& A, std::string_view expr);

/// "M_alpha(1..4,1..5)" -> every instance of the ranges.
std::vector<std::string> expand_ranges(std::string_view expr);
std::vector<CatalogEntry> build_catalog(const AlgebraFile& file);

// Generators for the worked examples.
Representation m_a(const AlgebraPtr& A, const Scalar& a);
Representation n_a(const AlgebraPtr& A, const Scalar& a);
Representation m_alpha(const AlgebraPtr& A, std::size_t i, std::size_t n);
Representation m_beta(const AlgebraPtr& A, std::size_t i, std::size_t n);

// ---- embedded corpus ----------------------------------------------------------

struct CorpusFile {
    std::string name;
    std::string text;
};
const std::vector<CorpusFile>& corpus();
const CorpusFile& corpus_file(const std::string& name);

}  // namespace qh

#endif
