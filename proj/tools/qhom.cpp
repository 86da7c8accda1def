#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "quiverhom/commands.hpp"
#include "quiverhom/shell.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Homological invariants of bound quiver algebras"};
    app.require_subcommand(0, 1);

    qh::RunOptions opt;
    bool as_json = false;
    std::string list_corpus;

    const std::map<std::string, std::string> about{
        {"info", "Quiver, ideal, dimension and projectives"},
        {"gldim", "Global dimension"},
        {"pd", "Projective dimension of --module"},
        {"syzygy", "Syzygy trajectory of --module"},
        {"norm", "Norm of a path-module multiset"},
        {"periodic-test", "Decide whether --module is Omega-periodic"},
        {"periodic-find", "Search for a periodic module"},
        {"omega-inf", "Omega-infinity membership and triviality"},
        {"perfect-paths", "Perfect paths with their relation-cycles"},
        {"gp-list", "Indecomposable Gorenstein-projective modules"},
        {"self-injective", "Self-injectivity"},
        {"cm-free", "CM-freeness"},
        {"co-gorenstein", "Co-Gorenstein verdict with witness"},
        {"inj-pd", "Projective dimensions of the injectives"},
        {"phi", "Igusa-Todorov phi of --module"},
        {"phidim-subcat", "phi-dimension of the syzygy-closed path-module subcategory"},
        {"phidim-bounds", "Bounds on the phi-dimension"},
        {"triangular-check", "Triangular decomposition bound for --split"},
    };
    std::vector<CLI::App*> subs;
    for (const std::string& name : qh::command_names()) {
        CLI::App* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--algebra", opt.algebra, "Algebra file, or corpus:NAME")->required();
        sub->add_option("--module", opt.module, "Module expression");
        sub->add_option("--steps", opt.steps, "Syzygy steps, or probe depth for bounds");
        sub->add_option("--max-steps", opt.max_steps, "Cap on resolution and trajectory length")->capture_default_str();
        sub->add_option("--max-dim", opt.max_dim, "Cap on the dimension of linear syzygies")->capture_default_str();
        sub->add_flag("--decompose", opt.decompose, "Decompose the last syzygy against the file catalog");
        sub->add_option("--trials", opt.trials, "Random trials per isomorphism test")->capture_default_str();
        sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
        sub->add_option("--split", opt.split, "Vertex split file, or corpus:NAME (triangular-check)");
        sub->add_option("--field", opt.field, "Override the field: Q or 'Fp p'");
        sub->add_flag("--json", as_json, "Emit JSON");
        subs.push_back(sub);
    }
    bool show_corpus = false;
    std::string dump;
    app.add_flag("--corpus", show_corpus, "List the embedded corpus");
    app.add_option("--dump", dump, "Print an embedded corpus file");

    CLI11_PARSE(app, argc, argv);

    if (show_corpus) {
        for (const qh::CorpusFile& f : qh::corpus()) std::cout << f.name << "\n";
        return 0;
    }
    if (!dump.empty()) {
        try {
            std::cout << qh::corpus_file(dump).text;
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
        return 0;
    }
    for (CLI::App* sub : subs) {
        if (!sub->parsed()) continue;
        qh::RunReport rep = qh::run_command(sub->get_name(), opt);
        if (as_json) std::cout << rep.json().dump(2) << "\n";
        else (rep.exit == qh::ExitCode::Ok || rep.exit == qh::ExitCode::CapReached ? std::cout : std::cerr) << rep.text();
        return static_cast<int>(rep.exit);
    }
    std::cout << app.help();
    return 0;
}
