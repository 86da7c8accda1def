#include "quiverhom/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "quiverhom/error.hpp"

namespace qh {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    require(!vertices_.empty(), ErrorCode::InvalidQuiver, "quiver has no vertices");
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
        require(!v.empty(), ErrorCode::InvalidQuiver, "empty vertex name");
        require(seen.insert(v).second, ErrorCode::InvalidQuiver, "duplicate vertex '" + v + "'");
    }
    std::set<std::string> seen_arrows;
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (ArrowId a = 0; a < arrows_.size(); ++a) {
        const Arrow& ar = arrows_[a];
        require(!ar.name.empty(), ErrorCode::InvalidQuiver, "empty arrow name");
        require(seen_arrows.insert(ar.name).second, ErrorCode::InvalidQuiver,
                "duplicate arrow '" + ar.name + "'");
        require(ar.source < vertices_.size() && ar.target < vertices_.size(), ErrorCode::InvalidQuiver,
                "arrow '" + ar.name + "' has an undeclared endpoint");
        out_[ar.source].push_back(a);
        in_[ar.target].push_back(a);
    }
}

std::optional<VertexId> Quiver::find_vertex(const std::string& name) const {
    for (VertexId v = 0; v < vertices_.size(); ++v)
        if (vertices_[v] == name) return v;
    return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
    for (ArrowId a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name == name) return a;
    return std::nullopt;
}

VertexId Quiver::vertex_index(const std::string& name) const {
    auto v = find_vertex(name);
    require(v.has_value(), ErrorCode::InvalidQuiver, "unknown vertex '" + name + "'");
    return *v;
}

ArrowId Quiver::arrow_index(const std::string& name) const {
    auto a = find_arrow(name);
    require(a.has_value(), ErrorCode::InvalidQuiver, "unknown arrow '" + name + "'");
    return *a;
}

Quiver Quiver::full_subquiver(const std::vector<VertexId>& vertices) const {
    std::vector<long> index(vertices_.size(), -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index.at(vertices[i]) = static_cast<long>(i);
        names.push_back(vertices_[vertices[i]]);
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : arrows_)
        if (index[a.source] >= 0 && index[a.target] >= 0)
            arrows.push_back({a.name, static_cast<VertexId>(index[a.source]),
                              static_cast<VertexId>(index[a.target])});
    return Quiver(std::move(names), std::move(arrows));
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
        const Arrow& x = a.arrows_[i];
        const Arrow& y = b.arrows_[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Path Path::arrow(const Quiver& q, ArrowId a) {
    const Arrow& ar = q.arrow(a);
    return Path(ar.source, ar.target, {a});
}

Path Path::from_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
    require(!arrows.empty(), ErrorCode::InvalidArgument, "from_arrows needs at least one arrow");
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        require(q.arrow(arrows[i]).target == q.arrow(arrows[i + 1]).source, ErrorCode::ComposeMismatch,
                "arrows '" + q.arrow(arrows[i]).name + "' and '" + q.arrow(arrows[i + 1]).name +
                    "' do not compose");
    VertexId s = q.arrow(arrows.front()).source;
    VertexId t = q.arrow(arrows.back()).target;
    return Path(s, t, std::move(arrows));
}

Path Path::then(const Quiver& q, const Path& next) const {
    require(target_ == next.source_, ErrorCode::ComposeMismatch,
            "cannot follow " + traversal_string(q) + " by " + next.traversal_string(q));
    std::vector<ArrowId> arrows = arrows_;
    arrows.insert(arrows.end(), next.arrows_.begin(), next.arrows_.end());
    return Path(source_, next.target_, std::move(arrows));
}

Path Path::segment(const Quiver& q, std::size_t from, std::size_t len) const {
    require(from + len <= arrows_.size(), ErrorCode::InvalidArgument, "segment out of range");
    if (len == 0) {
        VertexId v = from == 0 ? source_ : q.arrow(arrows_[from - 1]).target;
        return trivial(v);
    }
    std::vector<ArrowId> sub(arrows_.begin() + static_cast<long>(from),
                             arrows_.begin() + static_cast<long>(from + len));
    VertexId s = q.arrow(sub.front()).source;
    VertexId t = q.arrow(sub.back()).target;
    return Path(s, t, std::move(sub));
}

bool Path::has_prefix(const Path& p) const {
    if (p.source_ != source_ || p.arrows_.size() > arrows_.size()) return false;
    return std::equal(p.arrows_.begin(), p.arrows_.end(), arrows_.begin());
}

bool Path::has_suffix(const Path& p) const {
    if (p.target_ != target_ || p.arrows_.size() > arrows_.size()) return false;
    return std::equal(p.arrows_.rbegin(), p.arrows_.rend(), arrows_.rbegin());
}

std::string Path::traversal_string(const Quiver& q) const {
    if (arrows_.empty()) return "e_" + q.vertex_name(source_);
    std::string s;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (i) s += '.';
        s += q.arrow(arrows_[i]).name;
    }
    return s;
}

std::string Path::function_string(const Quiver& q) const {
    if (arrows_.empty()) return "e_" + q.vertex_name(source_);
    std::string s;
    for (std::size_t i = arrows_.size(); i-- > 0;) {
        s += q.arrow(arrows_[i]).name;
        if (i) s += "·";
    }
    return s;
}

std::string Path::describe(const Quiver& q) const {
    return "traversal " + traversal_string(q) + " | function " + function_string(q);
}

bool operator<(const Path& a, const Path& b) {
    if (a.source_ != b.source_) return a.source_ < b.source_;
    if (a.arrows_.size() != b.arrows_.size()) return a.arrows_.size() < b.arrows_.size();
    return a.arrows_ < b.arrows_;
}

Path compose(const Quiver& quiver, const Path& p, const Path& q) {
    require(p.source() == q.target(), ErrorCode::ComposeMismatch,
            "s(p) != t(q) for p = " + p.function_string(quiver) + ", q = " + q.function_string(quiver));
    return q.then(quiver, p);
}

// ---------------------------------------------------------------------------

namespace {

// Tarjan's algorithm; components come out in reverse topological order.
std::vector<std::vector<VertexId>> tarjan(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    std::vector<long> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> comps;
    long counter = 0;
    std::function<void(VertexId)> visit = [&](VertexId v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (ArrowId a : q.out_arrows(v)) {
            VertexId w = q.arrow(a).target;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<VertexId> comp;
            VertexId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (VertexId v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    return comps;
}

}  // namespace

bool is_connected(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> todo{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!todo.empty()) {
        VertexId v = todo.back();
        todo.pop_back();
        auto visit = [&](VertexId w) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                todo.push_back(w);
            }
        };
        for (ArrowId a : q.out_arrows(v)) visit(q.arrow(a).target);
        for (ArrowId a : q.in_arrows(v)) visit(q.arrow(a).source);
    }
    return count == n;
}

GraphAnalysis graph_analysis(const Quiver& q) {
    GraphAnalysis g;
    auto comps = tarjan(q);
    std::reverse(comps.begin(), comps.end());
    g.sccs = std::move(comps);
    g.scc_of.assign(q.num_vertices(), 0);
    for (std::size_t c = 0; c < g.sccs.size(); ++c)
        for (VertexId v : g.sccs[c]) g.scc_of[v] = c;
    for (const Arrow& a : q.arrows())
        if (g.scc_of[a.source] == g.scc_of[a.target]) g.is_acyclic = false;

    bool degrees_ok = q.num_arrows() == q.num_vertices();
    for (VertexId v = 0; v < q.num_vertices() && degrees_ok; ++v)
        degrees_ok = q.out_arrows(v).size() == 1 && q.in_arrows(v).size() == 1;
    g.is_cycle_graph = degrees_ok && is_connected(q);

    if (!g.is_acyclic) {
        g.longest_path = ExtNat::inf();
    } else {
        // SCCs are singletons in topological order; relax arrows in that order.
        std::vector<std::size_t> best(q.num_vertices(), 0);
        std::size_t longest = 0;
        for (const auto& comp : g.sccs) {
            VertexId v = comp.front();
            for (ArrowId a : q.out_arrows(v)) {
                VertexId w = q.arrow(a).target;
                best[w] = std::max(best[w], best[v] + 1);
                longest = std::max(longest, best[w]);
            }
        }
        g.longest_path = ExtNat::of(longest);
    }
    return g;
}

std::vector<VertexId> q_infinity_vertices(const Quiver& q) {
    GraphAnalysis g = graph_analysis(q);
    const std::size_t n = q.num_vertices();
    std::vector<bool> good(n, false);
    for (const Arrow& a : q.arrows())
        if (g.scc_of[a.source] == g.scc_of[a.target])
            for (VertexId v : g.sccs[g.scc_of[a.source]]) good[v] = true;
    // Reverse reachability from cycle vertices.
    std::vector<VertexId> todo;
    for (VertexId v = 0; v < n; ++v)
        if (good[v]) todo.push_back(v);
    while (!todo.empty()) {
        VertexId v = todo.back();
        todo.pop_back();
        for (ArrowId a : q.in_arrows(v)) {
            VertexId u = q.arrow(a).source;
            if (!good[u]) {
                good[u] = true;
                todo.push_back(u);
            }
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (good[v]) out.push_back(v);
    return out;
}

Quiver q_infinity(const Quiver& q) {
    auto vs = q_infinity_vertices(q);
    if (vs.empty()) return Quiver();
    return q.full_subquiver(vs);
}

std::vector<Subheart> final_subhearts(const Quiver& q) {
    std::vector<Subheart> out;
    if (q.num_vertices() == 0) return out;
    GraphAnalysis g = graph_analysis(q);
    std::vector<bool> terminal(g.sccs.size(), true);
    for (const Arrow& a : q.arrows())
        if (g.scc_of[a.source] != g.scc_of[a.target]) terminal[g.scc_of[a.source]] = false;
    for (std::size_t c = 0; c < g.sccs.size(); ++c) {
        if (!terminal[c]) continue;
        Subheart s;
        s.vertices = g.sccs[c];
        s.quiver = q.full_subquiver(s.vertices);
        s.trivial = s.vertices.size() == 1 && s.quiver.num_arrows() == 0;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const Subheart& a, const Subheart& b) { return a.vertices < b.vertices; });
    return out;
}

}  // namespace qh
