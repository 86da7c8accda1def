#ifndef QUIVERHOM_COMMANDS_HPP
#define QUIVERHOM_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qh {

struct RunOptions {
    std::string algebra;                  // file path or corpus:NAME
    std::optional<std::string> module;
    std::optional<std::size_t> steps;
    std::size_t max_steps = 1000;
    std::size_t max_dim = 128;            // size cap on linear syzygies
    bool decompose = false;               // syzygy: decompose against the file catalog
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    std::optional<std::string> split;     // file path or corpus:NAME
    std::optional<std::string> field;     // override, "Q" or "Fp p"
};

/// Exit codes: 0 success, 1 user or parse error, 2 cap reached, 3 internal.
enum class ExitCode { Ok = 0, UserError = 1, CapReached = 2, Internal = 3 };

struct RunReport {
    std::string command;
    std::string algebra;
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::vector<std::string> certificates;
    std::vector<std::string> warnings;
    std::vector<std::string> lines;  // human-readable rendering
    ExitCode exit = ExitCode::Ok;

    nlohmann::ordered_json json() const;
    std::string text() const;
};

const std::vector<std::string>& command_names();
/// Never throws; errors become a report with a non-zero exit code.
RunReport run_command(const std::string& command, const RunOptions& options);

}  // namespace qh

#endif
