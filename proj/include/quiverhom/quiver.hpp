#ifndef QUIVERHOM_QUIVER_HPP
#define QUIVERHOM_QUIVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qh {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
    std::string name;
    VertexId source;
    VertexId target;
};

/// Finite quiver with named vertices and arrows. Loops and parallel arrows
/// are allowed. Immutable after construction.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_arrows() const noexcept { return arrows_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<ArrowId> find_arrow(const std::string& name) const;
    VertexId vertex_index(const std::string& name) const;  // throws InvalidQuiver
    ArrowId arrow_index(const std::string& name) const;    // throws InvalidQuiver

    const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
    const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

    /// Full subquiver on `vertices` (kept in the given order); arrows keep
    /// their relative order.
    Quiver full_subquiver(const std::vector<VertexId>& vertices) const;

    friend bool operator==(const Quiver& a, const Quiver& b);

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<ArrowId>> out_;
    std::vector<std::vector<ArrowId>> in_;
};

/// Path stored in traversal order: arrows()[0] is traversed first. A path
/// with no arrows is the trivial path e_v.
class Path {
public:
    Path() = default;
    static Path trivial(VertexId v) { return Path(v, v, {}); }
    static Path arrow(const Quiver& q, ArrowId a);
    /// Validates composability along the sequence.
    static Path from_arrows(const Quiver& q, std::vector<ArrowId> arrows);

    VertexId source() const noexcept { return source_; }
    VertexId target() const noexcept { return target_; }
    std::size_t length() const noexcept { return arrows_.size(); }
    bool is_trivial() const noexcept { return arrows_.empty(); }
    const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }

    /// Traversal-order concatenation: this path first, then `next`.
    Path then(const Quiver& q, const Path& next) const;
    /// Subpath of traversal positions [from, from + len).
    Path segment(const Quiver& q, std::size_t from, std::size_t len) const;

    bool has_prefix(const Path& p) const;  // p traversed first
    bool has_suffix(const Path& p) const;  // p traversed last

    /// "a.b.c" (traversal order) or "e_v".
    std::string traversal_string(const Quiver& q) const;
    /// "c·b·a" (paper / function order) or "e_v".
    std::string function_string(const Quiver& q) const;
    /// Both notations with explicit labels.
    std::string describe(const Quiver& q) const;

    friend bool operator==(const Path& a, const Path& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.arrows_ == b.arrows_;
    }
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
    friend bool operator<(const Path& a, const Path& b);

private:
    Path(VertexId s, VertexId t, std::vector<ArrowId> arrows)
        : source_(s), target_(t), arrows_(std::move(arrows)) {}

    VertexId source_ = 0;
    VertexId target_ = 0;
    std::vector<ArrowId> arrows_;
};

/// Function-order product pq: traverse q, then p. Requires s(p) = t(q).
Path compose(const Quiver& quiver, const Path& p, const Path& q);

/// Natural number or infinity.
struct ExtNat {
    bool infinite = false;
    std::size_t value = 0;

    static ExtNat inf() { return {true, 0}; }
    static ExtNat of(std::size_t v) { return {false, v}; }
    std::string str() const { return infinite ? std::string("inf") : std::to_string(value); }
    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator!=(const ExtNat& a, const ExtNat& b) { return !(a == b); }
    friend bool operator<(const ExtNat& a, const ExtNat& b) {
        if (a.infinite) return false;
        return b.infinite || a.value < b.value;
    }
};

struct GraphAnalysis {
    std::vector<std::vector<VertexId>> sccs;  // each sorted; listed in topological order
    std::vector<std::size_t> scc_of;           // vertex -> index into sccs
    bool is_acyclic = true;
    bool is_cycle_graph = false;
    ExtNat longest_path;
};

GraphAnalysis graph_analysis(const Quiver& q);

bool is_connected(const Quiver& q);

/// Vertices lying on or reaching an oriented cycle, sorted.
std::vector<VertexId> q_infinity_vertices(const Quiver& q);
Quiver q_infinity(const Quiver& q);

struct Subheart {
    std::vector<VertexId> vertices;  // in the parent quiver, sorted
    Quiver quiver;                   // the full subquiver
    bool trivial = false;            // single vertex without a loop
};

/// Terminal strongly connected components of the condensation.
std::vector<Subheart> final_subhearts(const Quiver& q);

}  // namespace qh

#endif
