#include "quiverhom/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "quiverhom/error.hpp"
#include "quiverhom/homgor.hpp"
#include "quiverhom/itphi.hpp"
#include "quiverhom/shell.hpp"

namespace qh {

using json = nlohmann::ordered_json;

namespace {

struct Context {
    const RunOptions& opt;
    RunReport& rep;
    AlgebraFile file;
    AlgebraPtr A;
    std::unique_ptr<ClassTable> table;

    const Quiver& quiver() const { return A->quiver(); }
    const ClassTable& T() {
        require(A->is_monomial(), ErrorCode::UnsupportedIdeal, "'" + rep.command + "' needs a monomial algebra");
        if (!table) table = std::make_unique<ClassTable>(A);
        return *table;
    }
    const std::string& module_expr() const {
        require(opt.module.has_value(), ErrorCode::InvalidArgument, "'" + rep.command + "' needs --module");
        return *opt.module;
    }
    void line(const std::string& s) { rep.lines.push_back(s); }
};

json ext(const ExtNat& n) { return n.infinite ? json("inf") : json(n.value); }

json pd_json(const PdResult& r) {
    switch (r.kind) {
    case PdKind::Finite: return r.value;
    case PdKind::Infinite: return "infinite_certified";
    case PdKind::AtLeast: return "at_least(" + std::to_string(r.value) + ")";
    }
    return nullptr;
}

std::string ideal_kind(const BoundQuiverAlgebra& A) {
    switch (A.kind()) {
    case IdealKind::Truncated: return "truncated";
    case IdealKind::Monomial: return "monomial";
    case IdealKind::Relations: return "relations";
    }
    return "";
}

std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

json multiset_json(const ClassTable& T, const ModuleMultiset& m) {
    json out = json::array();
    for (const auto& [c, k] : m) out.push_back({{"class", T[c].label}, {"multiplicity", k}});
    return out;
}

json path_json(const Quiver& q, const Path& p) {
    return {{"traversal", p.traversal_string(q)}, {"product", p.function_string(q)}};
}

json witness_json(const ClassTable& T, const PeriodicWitness& w) {
    json cycle = json::array();
    for (ClassId c : w.cycle) cycle.push_back(T[c].label);
    return {{"module", format_multiset(T, w.module)}, {"period", w.period}, {"cycle", cycle}, {"horizon", w.horizon}};
}

// Path-module multiset when the expression allows it, otherwise nothing.
std::optional<ModuleMultiset> as_multiset(Context& ctx) {
    if (!ctx.A->is_monomial()) return std::nullopt;
    try {
        return eval_multiset(ctx.T(), ctx.module_expr());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument) return std::nullopt;
        throw;
    }
}

void cmd_info(Context& ctx) {
    const Quiver& q = ctx.quiver();
    json verts = json::array(), arrows = json::array(), proj = json::array();
    for (VertexId v = 0; v < q.num_vertices(); ++v) verts.push_back(q.vertex_name(v));
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
    for (VertexId v = 0; v < q.num_vertices(); ++v) proj.push_back(projective_module(ctx.A, v).dims());
    json& r = ctx.rep.result;
    r["name"] = ctx.file.name;
    r["field"] = ctx.A->field().is_prime() ? "Fp " + std::to_string(ctx.A->field().characteristic()) : "Q";
    r["vertices"] = verts;
    r["arrows"] = arrows;
    r["ideal"] = ideal_kind(*ctx.A);
    r["dimension"] = ctx.A->dimension();
    r["projective_dims"] = proj;
    r["catalog_lines"] = ctx.file.catalog.size();
    ctx.line("algebra " + ctx.file.name + " over " + r["field"].get<std::string>());
    ctx.line(std::to_string(q.num_vertices()) + " vertices, " + std::to_string(q.num_arrows()) + " arrows, " +
             ideal_kind(*ctx.A) + " ideal, dimension " + std::to_string(ctx.A->dimension()));
    for (VertexId v = 0; v < q.num_vertices(); ++v)
        ctx.line("dim P_" + q.vertex_name(v) + " = " + dims_text(proj[v].get<std::vector<std::size_t>>()));
}

void cmd_gldim(Context& ctx) {
    json& r = ctx.rep.result;
    if (ctx.A->is_monomial()) {
        ExtNat g = gldim(ctx.T());
        r["gldim"] = ext(g);
        r["method"] = "path-module resolutions";
        if (ctx.A->is_truncated()) {
            ExtNat f = truncated_gldim_formula(ctx.quiver(), ctx.A->truncation());
            r["formula"] = ext(f);
            require(f == g, ErrorCode::InvariantViolation, "truncated gldim formula disagrees with resolutions");
        }
        ctx.line("gldim = " + g.str());
        return;
    }
    std::size_t finite_max = 0;
    bool infinite = false, capped = false;
    json per = json::object();
    for (VertexId v = 0; v < ctx.quiver().num_vertices(); ++v) {
        PdResult p = pd_rep(simple_module(ctx.A, v), ctx.opt.max_steps, ctx.opt.trials, ctx.opt.seed,
                             ctx.opt.max_dim);
        per["S_" + ctx.quiver().vertex_name(v)] = pd_json(p);
        ctx.rep.certificates.push_back("pd S_" + ctx.quiver().vertex_name(v) + ": " + p.certificate);
        if (p.kind != PdKind::Infinite) finite_max = std::max(finite_max, p.value);
        if (p.kind == PdKind::Infinite) infinite = true;
        if (p.kind == PdKind::AtLeast) capped = true;
    }
    r["simples"] = per;
    r["method"] = "linear resolutions of the simples";
    if (infinite) r["gldim"] = "inf";
    else if (capped) r["gldim"] = "at_least(" + std::to_string(finite_max) + ")";
    else r["gldim"] = finite_max;
    if (!infinite && capped) ctx.rep.exit = ExitCode::CapReached;
    ctx.line("gldim = " + (r["gldim"].is_string() ? r["gldim"].get<std::string>() : std::to_string(finite_max)));
}

void cmd_pd(Context& ctx) {
    json& r = ctx.rep.result;
    if (auto m = as_multiset(ctx)) {
        ExtNat p = pd(ctx.T(), *m);
        r["module"] = format_multiset(ctx.T(), *m);
        r["pd"] = ext(p);
        ctx.line("pd " + format_multiset(ctx.T(), *m) + " = " + p.str());
        return;
    }
    Representation M = eval_representation(ctx.A, ctx.module_expr());
    PdResult p = pd_rep(M, ctx.opt.max_steps, ctx.opt.trials, ctx.opt.seed,
                             ctx.opt.max_dim);
    r["module"] = ctx.module_expr();
    r["dims"] = M.dims();
    r["pd"] = pd_json(p);
    ctx.rep.certificates.push_back(p.certificate);
    if (p.kind == PdKind::AtLeast) ctx.rep.exit = ExitCode::CapReached;
    ctx.line("pd " + ctx.module_expr() + " = " + p.str());
}

void cmd_syzygy(Context& ctx) {
    std::size_t steps = ctx.opt.steps.value_or(1);
    json traj = json::array();
    if (auto m = as_multiset(ctx)) {
        ModuleMultiset cur = *m;
        for (std::size_t i = 1; i <= steps; ++i) {
            cur = syzygy(ctx.T(), cur);
            traj.push_back({{"step", i}, {"summands", multiset_json(ctx.T(), cur)},
                            {"dims", dimension_vector(ctx.T(), cur)}});
            ctx.line("Omega^" + std::to_string(i) + " = " + format_multiset(ctx.T(), cur));
        }
        ctx.rep.result["trajectory"] = traj;
        return;
    }
    Representation cur = eval_representation(ctx.A, ctx.module_expr());
    for (std::size_t i = 1; i <= steps; ++i) {
        cur = syzygy_rep(cur);
        traj.push_back({{"step", i}, {"dims", cur.dims()}, {"top", top_dims(cur)}});
        ctx.line("Omega^" + std::to_string(i) + " has dimension vector " + dims_text(cur.dims()) + ", top " +
                 dims_text(top_dims(cur)));
    }
    ctx.rep.result["trajectory"] = traj;
    if (!ctx.opt.decompose || cur.is_zero()) return;
    require(!ctx.file.catalog.empty(), ErrorCode::InvalidArgument, "--decompose needs catalog lines in the algebra file");
    std::vector<CatalogEntry> catalog = build_catalog(ctx.file);
    std::vector<Representation> mods;
    for (const CatalogEntry& e : catalog) mods.push_back(e.module);
    try {
        Decomposition d = decompose_against_catalog(cur, mods, ctx.opt.trials, ctx.opt.seed);
        json parts = json::array();
        std::string text;
        for (std::size_t i = 0; i < d.multiplicity.size(); ++i) {
            if (!d.multiplicity[i]) continue;
            const std::string& label = catalog[d.catalog_index[i]].label;
            parts.push_back({{"module", label}, {"multiplicity", d.multiplicity[i]}});
            text += (text.empty() ? "" : " + ") + std::to_string(d.multiplicity[i]) + "*" + label;
        }
        ctx.rep.result["decomposition"] = parts;
        ctx.rep.certificates.push_back("Omega^" + std::to_string(steps) + " iso-certified against " + text);
        ctx.line("decomposition: " + text);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoDecomposition) throw;
        ctx.rep.warnings.push_back("no decomposition against the file catalog");
    }
}

void cmd_norm(Context& ctx) {
    ModuleMultiset m = eval_multiset(ctx.T(), ctx.module_expr());
    std::size_t n = norm(ctx.T(), m);
    ctx.rep.result["norm"] = n;
    ctx.line("norm " + format_multiset(ctx.T(), m) + " = " + std::to_string(n));
}

void cmd_periodic_test(Context& ctx) {
    json& r = ctx.rep.result;
    if (auto m = as_multiset(ctx)) {
        PeriodicResult p = is_periodic(ctx.T(), *m, ctx.opt.max_steps);
        r["periodic"] = p.periodic;
        if (p.periodic) r["period"] = p.period;
        r["steps"] = p.steps;
        if (!p.periodic && p.steps >= ctx.opt.max_steps) ctx.rep.exit = ExitCode::CapReached;
        ctx.line(format_multiset(ctx.T(), *m) + (p.periodic ? " is periodic of period " + std::to_string(p.period)
                                                            : " is not periodic"));
        return;
    }
    Representation M = eval_representation(ctx.A, ctx.module_expr());
    Representation cur = M;
    for (std::size_t i = 1; i <= ctx.opt.max_steps; ++i) {
        cur = syzygy_rep(cur);
        if (cur.is_zero()) {
            r["periodic"] = false;
            r["steps"] = i;
            ctx.line(ctx.module_expr() + " is not periodic (finite projective dimension)");
            return;
        }
        if (cur.dims() != M.dims()) continue;
        IsoResult iso = iso_test(cur, M, ctx.opt.trials, ctx.opt.seed);
        if (iso.verdict == IsoVerdict::Isomorphic) {
            r["periodic"] = true;
            r["period"] = i;
            ctx.rep.certificates.push_back("Omega^" + std::to_string(i) + " iso-certified: " + iso.reason);
            ctx.line(ctx.module_expr() + " is periodic of period " + std::to_string(i));
            return;
        }
        if (iso.verdict == IsoVerdict::Undetermined)
            ctx.rep.warnings.push_back("iso test undetermined at step " + std::to_string(i));
    }
    r["periodic"] = nullptr;
    r["steps"] = ctx.opt.max_steps;
    ctx.rep.exit = ExitCode::CapReached;
    ctx.line("no period found within " + std::to_string(ctx.opt.max_steps) + " steps");
}

void cmd_periodic_find(Context& ctx) {
    std::optional<PeriodicWitness> w = find_periodic_module(ctx.T());
    ctx.rep.result["found"] = w.has_value();
    if (!w) {
        ctx.line("no periodic module");
        return;
    }
    ctx.rep.result["witness"] = witness_json(ctx.T(), *w);
    ctx.rep.certificates.push_back("is_periodic confirms period " + std::to_string(w->period));
    ctx.line("periodic module " + format_multiset(ctx.T(), w->module) + " of period " + std::to_string(w->period));
}

void cmd_omega_inf(Context& ctx) {
    const ClassTable& T = ctx.T();
    if (ctx.opt.module) {
        ModuleMultiset m = eval_multiset(T, *ctx.opt.module);
        bool in = omega_infinity(T, m, ctx.opt.max_steps);
        ctx.rep.result["member"] = in;
        ctx.line(format_multiset(T, m) + (in ? " lies in" : " does not lie in") + " Omega^inf");
        return;
    }
    json members = json::array();
    for (ClassId c = 0; c < T.size(); ++c)
        if (!T[c].projective && omega_infinity(T, singleton(c), ctx.opt.max_steps)) members.push_back(T[c].label);
    bool trivial = omega_infinity_trivial(T);
    ctx.rep.result["trivial"] = trivial;
    ctx.rep.result["nonprojective_members"] = members;
    ctx.line(std::string("Omega^inf is ") + (trivial ? "trivial" : "nontrivial") + " (" +
             std::to_string(members.size()) + " non-projective indecomposable members)");
}

void cmd_perfect_paths(Context& ctx) {
    json list = json::array();
    for (const PerfectPath& p : perfect_paths(ctx.T())) {
        json cycle = json::array();
        std::string text;
        for (const Path& c : p.cycle) {
            cycle.push_back(path_json(ctx.quiver(), c));
            text += (text.empty() ? "" : ", ") + c.traversal_string(ctx.quiver());
        }
        text += ", " + p.cycle.front().traversal_string(ctx.quiver());
        list.push_back({{"path", path_json(ctx.quiver(), p.path)}, {"cycle", cycle}});
        ctx.line(p.path.describe(ctx.quiver()) + "  cycle (" + text + ")");
    }
    ctx.rep.result["perfect_paths"] = list;
    ctx.rep.result["count"] = list.size();
}

void cmd_gp_list(Context& ctx) {
    const ClassTable& T = ctx.T();
    json list = json::array();
    for (const GpClass& g : gp_indecomposables(T)) {
        json cycle = json::array();
        std::string text;
        for (const Path& c : g.witness.cycle) {
            cycle.push_back(path_json(ctx.quiver(), c));
            text += (text.empty() ? "" : ", ") + c.traversal_string(ctx.quiver());
        }
        text += ", " + g.witness.cycle.front().traversal_string(ctx.quiver());
        list.push_back({{"class", T[g.id].label}, {"dims", T[g.id].dimension},
                        {"witness", path_json(ctx.quiver(), g.witness.path)}, {"cycle", cycle}});
        ctx.line(T[g.id].label + " = A·" + g.witness.path.function_string(ctx.quiver()) + "  relation-cycle (" + text + ")");
    }
    ctx.rep.result["classes"] = list;
    ctx.rep.result["count"] = list.size();
    if (list.empty()) ctx.line("no non-projective Gorenstein projective indecomposables");
}

void cmd_self_injective(Context& ctx) {
    bool s;
    if (ctx.A->is_truncated()) {
        s = is_self_injective_truncated(*ctx.A);
        ctx.rep.result["method"] = "quiver criterion";
    } else {
        s = is_self_injective(ctx.A, ctx.opt.trials, ctx.opt.seed);
        ctx.rep.result["method"] = "projective-injective matching";
    }
    ctx.rep.result["self_injective"] = s;
    ctx.line(std::string("self-injective: ") + (s ? "yes" : "no"));
}

void cmd_cm_free(Context& ctx) {
    bool f = is_cm_free(ctx.T());
    ctx.rep.result["cm_free"] = f;
    ctx.line(std::string("CM-free: ") + (f ? "yes" : "no"));
}

void cmd_co_gorenstein(Context& ctx) {
    CoGorensteinVerdict v = ctx.A->is_truncated() ? cogorenstein_truncated(ctx.T()) : cogorenstein_monomial(ctx.T());
    json& r = ctx.rep.result;
    r["verdict"] = v.verdict;
    r["branch"] = v.branch;
    if (v.witness) {
        r["witness"] = witness_json(ctx.T(), *v.witness);
        ctx.rep.certificates.push_back("periodic witness " + format_multiset(ctx.T(), v.witness->module) +
                                       " has a non-GP summand");
    }
    if (!v.note.empty()) r["note"] = v.note;
    ctx.line(std::string("Co-Gorenstein: ") + (v.verdict ? "yes" : "no") + " (" + v.branch + ")");
}

void cmd_inj_pd(Context& ctx) {
    const Quiver& q = ctx.quiver();
    json per = json::object();
    std::size_t finite_max = 0;
    bool infinite = false, capped = false;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        PdResult p = pd_rep(injective_module(ctx.A, v), ctx.opt.max_steps, ctx.opt.trials, ctx.opt.seed,
                             ctx.opt.max_dim);
        per["I_" + q.vertex_name(v)] = pd_json(p);
        ctx.rep.certificates.push_back("pd I_" + q.vertex_name(v) + ": " + p.certificate);
        ctx.line("pd I_" + q.vertex_name(v) + " = " + p.str());
        if (p.kind != PdKind::Infinite) finite_max = std::max(finite_max, p.value);
        if (p.kind == PdKind::Infinite) infinite = true;
        if (p.kind == PdKind::AtLeast) capped = true;
    }
    json& r = ctx.rep.result;
    r["injectives"] = per;
    if (infinite) r["pd"] = "infinite_certified";
    else if (capped) r["pd"] = "at_least(" + std::to_string(finite_max) + ")";
    else r["pd"] = finite_max;
    if (!infinite && capped) ctx.rep.exit = ExitCode::CapReached;
    ctx.line("pd of the sum of injectives = " + (r["pd"].is_string() ? r["pd"].get<std::string>() : std::to_string(finite_max)));
}

void cmd_phi(Context& ctx) {
    json& r = ctx.rep.result;
    if (auto m = as_multiset(ctx)) {
        PhiReport p = phi_report(ctx.T(), *m);
        r["phi"] = p.value;
        r["ranks"] = p.ranks;
        r["lattice_rank"] = p.lattice.rank();
        r["method"] = "path-module lattice";
        ctx.line("phi " + format_multiset(ctx.T(), *m) + " = " + std::to_string(p.value));
        return;
    }
    require(!ctx.file.catalog.empty(), ErrorCode::InvalidArgument,
            "phi of a linear module needs catalog lines in the algebra file");
    Representation M = eval_representation(ctx.A, ctx.module_expr());
    HybridPhiReport p = phi_hybrid(M, build_catalog(ctx.file), ctx.opt.trials, ctx.opt.seed);
    r["phi"] = p.value;
    r["ranks"] = p.ranks;
    r["lattice"] = p.lattice.labels;
    r["method"] = "catalog decomposition";
    ctx.rep.certificates.push_back("syzygies iso-certified against catalog entries: " +
                                   std::to_string(p.lattice.rank()) + " classes reached");
    ctx.line("phi " + ctx.module_expr() + " = " + std::to_string(p.value));
}

void cmd_phidim_subcat(Context& ctx) {
    const ClassTable& T = ctx.T();
    std::vector<ClassId> seed;
    if (ctx.opt.module) {
        for (const auto& [c, k] : eval_multiset(T, *ctx.opt.module)) seed.push_back(c);
    } else {
        for (ClassId c = 0; c < T.size(); ++c)
            if (!T[c].projective) seed.push_back(c);
    }
    PhiReport p = phidim_subcat_report(T, seed);
    ctx.rep.result["phidim"] = p.value;
    ctx.rep.result["ranks"] = p.ranks;
    ctx.rep.result["lattice_rank"] = p.lattice.rank();
    ctx.line("phidim of the syzygy-closed subcategory = " + std::to_string(p.value));
}

json bounds_json(const PhidimBounds& b) {
    json out{{"lower", b.lower}, {"upper", b.upper ? json(*b.upper) : json(nullptr)},
             {"exact", b.exact ? json(*b.exact) : json(nullptr)}, {"lower_witness", b.lower_witness},
             {"basis", b.basis}};
    return out;
}

std::string bounds_text(const PhidimBounds& b) {
    if (b.exact) return std::to_string(*b.exact) + " (" + b.basis + ")";
    return "[" + std::to_string(b.lower) + ", " + (b.upper ? std::to_string(*b.upper) : std::string("?")) + "] (" +
           b.basis + ")";
}

void cmd_phidim_bounds(Context& ctx) {
    std::size_t probe = ctx.opt.steps.value_or(12);
    PhidimBounds b = ctx.A->is_monomial() ? phidim_bounds(ctx.T())
                                          : phidim_bounds_any(ctx.A, probe, ctx.opt.trials, ctx.opt.seed);
    ctx.rep.result = bounds_json(b);
    if (!b.best_upper()) ctx.rep.exit = ExitCode::CapReached;
    ctx.line("phidim " + bounds_text(b));
}

void cmd_triangular(Context& ctx) {
    require(ctx.opt.split.has_value(), ErrorCode::InvalidArgument, "triangular-check needs --split");
    std::string text;
    if (ctx.opt.split->rfind("corpus:", 0) == 0) {
        text = corpus_file(ctx.opt.split->substr(7)).text;
    } else {
        std::ifstream in(*ctx.opt.split);
        require(static_cast<bool>(in), ErrorCode::ParseError, "cannot read split file '" + *ctx.opt.split + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto [g, gb] = parse_split(ctx.quiver(), text, *ctx.opt.split);
    TriangularReport t = triangular_check(ctx.A, g, gb, ctx.opt.steps.value_or(12), ctx.opt.trials, ctx.opt.seed);
    json& r = ctx.rep.result;
    auto names = [&](const std::vector<VertexId>& vs) {
        json out = json::array();
        for (VertexId v : vs) out.push_back(ctx.quiver().vertex_name(v));
        return out;
    };
    r["hypotheses"] = true;
    r["gamma"] = names(t.gamma);
    r["gamma_bar"] = names(t.gamma_bar);
    r["corner_gamma"] = bounds_json(t.a);
    r["corner_gamma_bar"] = bounds_json(t.b);
    r["algebra"] = bounds_json(t.c);
    r["theorem_bound"] = t.theorem_bound ? json(*t.theorem_bound) : json(nullptr);
    r["consistent"] = t.consistent;
    ctx.line("hypotheses hold");
    ctx.line("phidim on gamma: " + bounds_text(t.a));
    ctx.line("phidim on gamma_bar: " + bounds_text(t.b));
    ctx.line("phidim of the algebra: " + bounds_text(t.c));
    ctx.line("theorem bound: " + (t.theorem_bound ? std::to_string(*t.theorem_bound) : std::string("unknown")) +
             (t.consistent ? " (consistent)" : " (INCONSISTENT)"));
    if (!t.consistent) ctx.rep.exit = ExitCode::Internal;
}

using Handler = void (*)(Context&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"info", cmd_info},
        {"gldim", cmd_gldim},
        {"pd", cmd_pd},
        {"syzygy", cmd_syzygy},
        {"norm", cmd_norm},
        {"periodic-test", cmd_periodic_test},
        {"periodic-find", cmd_periodic_find},
        {"omega-inf", cmd_omega_inf},
        {"perfect-paths", cmd_perfect_paths},
        {"gp-list", cmd_gp_list},
        {"self-injective", cmd_self_injective},
        {"cm-free", cmd_cm_free},
        {"co-gorenstein", cmd_co_gorenstein},
        {"inj-pd", cmd_inj_pd},
        {"phi", cmd_phi},
        {"phidim-subcat", cmd_phidim_subcat},
        {"phidim-bounds", cmd_phidim_bounds},
        {"triangular-check", cmd_triangular},
    };
    return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{
        "info",      "gldim",         "pd",     "syzygy",        "norm",   "periodic-test",
        "periodic-find", "omega-inf", "perfect-paths", "gp-list", "self-injective", "cm-free",
        "co-gorenstein", "inj-pd",   "phi",    "phidim-subcat", "phidim-bounds", "triangular-check"};
    return names;
}

RunReport run_command(const std::string& command, const RunOptions& options) {
    RunReport rep;
    rep.command = command;
    rep.algebra = options.algebra;
    try {
        auto it = handlers().find(command);
        require(it != handlers().end(), ErrorCode::InvalidArgument, "unknown command '" + command + "'");
        Context ctx{options, rep, load_algebra(options.algebra), nullptr, nullptr};
        ctx.A = ctx.file.algebra;
        if (options.field) ctx.A = with_field(*ctx.A, parse_field_name(*options.field));
        ctx.file.algebra = ctx.A;
        it->second(ctx);
    } catch (const Error& e) {
        rep.result = {{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
        rep.lines = {std::string("error: ") + e.what()};
        switch (e.code()) {
        case ErrorCode::Indeterminate: rep.exit = ExitCode::CapReached; break;
        case ErrorCode::InvariantViolation: rep.exit = ExitCode::Internal; break;
        default: rep.exit = ExitCode::UserError; break;
        }
    } catch (const std::exception& e) {
        rep.result = {{"error", "INTERNAL"}, {"message", e.what()}};
        rep.lines = {std::string("internal error: ") + e.what()};
        rep.exit = ExitCode::Internal;
    }
    return rep;
}

nlohmann::ordered_json RunReport::json() const {
    return {{"command", command}, {"algebra", algebra}, {"result", result}, {"certificates", certificates},
            {"warnings", warnings}};
}

std::string RunReport::text() const {
    std::string out;
    for (const std::string& l : lines) out += l + "\n";
    for (const std::string& c : certificates) out += "certificate: " + c + "\n";
    for (const std::string& w : warnings) out += "warning: " + w + "\n";
    return out;
}

}  // namespace qh
