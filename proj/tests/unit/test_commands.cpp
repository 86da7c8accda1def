#include "doctest.h"
#include "quiverhom/commands.hpp"

using namespace qh;

namespace {

RunReport run(const std::string& command, const std::string& algebra, std::optional<std::string> module = {}) {
    RunOptions o;
    o.algebra = algebra;
    o.module = std::move(module);
    return run_command(command, o);
}

}  // namespace

TEST_CASE("every command is registered") {
    CHECK(command_names().size() == 18);
    CHECK(run("no-such-command", "corpus:loop_monomial").exit == ExitCode::UserError);
}

TEST_CASE("json report has the fixed top-level keys") {
    RunReport r = run("info", "corpus:loop_monomial");
    REQUIRE(r.exit == ExitCode::Ok);
    std::vector<std::string> keys;
    nlohmann::ordered_json j = r.json();
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "algebra", "result", "certificates", "warnings"});
    CHECK(r.result["dimension"] == 9);
}

TEST_CASE("monomial commands on the loop example") {
    CHECK(run("gldim", "corpus:loop_monomial").result["gldim"] == "inf");
    CHECK(run("pd", "corpus:loop_monomial", "simple(1)").result["pd"] == 1);
    RunReport gp = run("gp-list", "corpus:loop_monomial");
    CHECK(gp.result["count"] == 1);
    CHECK(run("co-gorenstein", "corpus:loop_monomial").result["verdict"] == true);
    CHECK(run("cm-free", "corpus:loop_monomial").result["cm_free"] == false);
    CHECK(run("co-gorenstein", "corpus:c3_k2").result["branch"] == "cycle_graph");
    CHECK(run("co-gorenstein", "corpus:subheart_counterexample").result["verdict"] == false);
}

TEST_CASE("errors map to exit codes") {
    CHECK(run("info", "corpus:missing").exit == ExitCode::UserError);
    CHECK(run("pd", "corpus:loop_monomial", "path(nope)").exit == ExitCode::UserError);
    CHECK(run("pd", "corpus:loop_monomial").exit == ExitCode::UserError);
    RunReport r = run("norm", "corpus:two_vertex", "simple(1)");
    CHECK(r.exit == ExitCode::UserError);
    CHECK(r.text().find("UNSUPPORTED_IDEAL") != std::string::npos);
}

TEST_CASE("size cap is reported as exit 2") {
    RunOptions o;
    o.algebra = "corpus:infinito";
    o.module = "simple(1)";
    o.max_dim = 32;
    RunReport r = run_command("pd", o);
    CHECK(r.exit == ExitCode::CapReached);
}

TEST_CASE("linear syzygy on the two-vertex example") {
    RunOptions o;
    o.algebra = "corpus:two_vertex";
    o.module = "M(2)";
    o.steps = 2;
    o.decompose = true;
    RunReport r = run_command("syzygy", o);
    REQUIRE(r.exit == ExitCode::Ok);
    CHECK(r.result["trajectory"][0]["dims"] == nlohmann::ordered_json{1, 1});
    CHECK(r.result["decomposition"][0]["module"] == "M(1)");
    CHECK(r.result["decomposition"][0]["multiplicity"] == 1);
    CHECK(r.certificates.size() == 1);
}

TEST_CASE("reports are deterministic") {
    RunOptions o;
    o.algebra = "corpus:finito";
    o.module = "M(1)";
    o.steps = 3;
    CHECK(run_command("syzygy", o).json() == run_command("syzygy", o).json());
    CHECK(run("phi", "corpus:c3_k2", "simple(1)").json() == run("phi", "corpus:c3_k2", "simple(1)").json());
}

TEST_CASE("triangular check with a split file") {
    RunOptions o;
    o.algebra = "corpus:finito";
    o.split = "corpus:finito_valid.split";
    RunReport r = run_command("triangular-check", o);
    REQUIRE(r.exit == ExitCode::Ok);
    CHECK(r.result["hypotheses"] == true);
    CHECK(r.result["theorem_bound"] == 1);
    o.split = "corpus:finito_reversed.split";
    CHECK(run_command("triangular-check", o).exit == ExitCode::UserError);
}
