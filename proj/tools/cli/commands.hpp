#ifndef LIECOH_TOOLS_COMMANDS_HPP
#define LIECOH_TOOLS_COMMANDS_HPP

#include "../io/io.hpp"

#include <optional>
#include <string>

namespace liecoh::cli {

using io::json;

/// Exit codes: 0 success, 1 validation error, 2 internal inconsistency.
struct CommandResult {
    json report;
    int exit_code = 0;
};

CommandResult cmd_validate(const std::string& path);
CommandResult cmd_cohomology(const std::string& path, std::size_t degree, const std::string& module);
CommandResult cmd_invariant_forms(const std::string& path, bool universal);
/// form: "killing", "invariant:<i>" or a FormDoc path.
CommandResult cmd_cartan(const std::string& path, const std::string& form);
/// type: I, II, III or curvature.
CommandResult cmd_loop(const std::string& path, int r, const std::string& type, int check_window);
CommandResult cmd_multiloop(const std::string& spec, int window, bool centroid);
/// Exactly one of virasoro / psi.
CommandResult cmd_witt(bool virasoro, std::optional<int> psi, int window, bool certify);
/// module: "trivial", "trivial:<d>" or a ModuleDoc path on n x| g.
CommandResult cmd_semidirect(const std::string& n, const std::string& g, const std::string& action,
                             const std::string& module);

/// Wraps a command: library errors become an error report with exit 1
/// (validation) or 2 (anything else).
template <class F>
CommandResult run_guarded(const std::string& command, F&& f);

json error_report(const std::string& command, const std::exception& e);
int error_exit_code(const std::exception& e);

template <class F>
CommandResult run_guarded(const std::string& command, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return {error_report(command, e), error_exit_code(e)};
    }
}

}  // namespace liecoh::cli

#endif
