#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>

using liecoh::cli::CommandResult;
using liecoh::cli::run_guarded;

int main(int argc, char** argv) {
    CLI::App app{"Exact Lie algebra cohomology engine"};
    app.require_subcommand(1);
    app.set_version_flag("--version", liecoh::io::conventions_version);

    std::string path, module, form, type, spec, n_path, g_path, action_path;
    std::size_t degree = 0;
    int r = 1, check_window = 2, ml_window = 3, witt_window = 3, psi = 0;
    bool universal = false, centroid = false, virasoro = false, certify = false;

    auto* validate = app.add_subcommand("validate", "Parse and validate an algebra or multiloop document");
    validate->add_option("path", path, "JSON document")->required();

    auto* coh = app.add_subcommand("cohomology", "H^p(g, V) with representatives");
    coh->add_option("path", path, "AlgebraDoc")->required();
    coh->add_option("degree", degree, "Degree p")->required();
    coh->add_option("module", module, "trivial, trivial:<d>, adjoint, coadjoint or a ModuleDoc")->required();

    auto* inv = app.add_subcommand("invariant-forms", "Basis of invariant symmetric bilinear forms");
    inv->add_option("path", path, "AlgebraDoc")->required();
    inv->add_flag("--universal", universal, "Also report V(g) and the factorization of each form");

    auto* cartan = app.add_subcommand("cartan", "Exactness of the Cartan 3-cocycle of a form");
    cartan->add_option("path", path, "AlgebraDoc")->required();
    cartan->add_option("form", form, "killing, invariant:<i> or a FormDoc")->required();

    auto* loop = app.add_subcommand("loop", "Cocycles on k (x) Laurent polynomials in r variables");
    loop->add_option("path", path, "AlgebraDoc")->required();
    loop->add_option("r", r, "Number of variables")->required();
    loop->add_option("cocycle-type", type, "I, II, III or curvature")->required();
    loop->add_option("--check-window", check_window, "Closure check window N")->capture_default_str();

    auto* ml = app.add_subcommand("multiloop", "Graded basis and centroid of a multiloop or Klein-bottle algebra");
    ml->add_option("spec", spec, "MultiloopDoc")->required();
    ml->add_option("--window", ml_window, "Exponent window N")->capture_default_str();
    ml->add_flag("--centroid", centroid, "Compute the graded centroid");

    auto* witt = app.add_subcommand("witt", "Witt algebra cocycles and window certificates");
    auto* vir_flag = witt->add_flag("--virasoro", virasoro, "Pulled-back Virasoro cocycle");
    auto* psi_opt = witt->add_option("--psi", psi, "Psi-bar_k and Psi_k for k = 1, 2");
    vir_flag->excludes(psi_opt);
    witt->add_option("--window", witt_window, "Window N")->capture_default_str();
    witt->add_flag("--certify", certify, "Emit a window coboundary certificate");

    auto* semi = app.add_subcommand("semidirect", "Four-term exact sequence for H^2(n x| g, V)");
    semi->add_option("n", n_path, "AlgebraDoc for n")->required();
    semi->add_option("g", g_path, "AlgebraDoc for g")->required();
    semi->add_option("action", action_path, "ActionDoc: g -> der(n)")->required();
    semi->add_option("module", module, "trivial, trivial:<d> or a ModuleDoc on n x| g")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    CommandResult res;
    if (*validate) {
        res = run_guarded("validate", [&] { return liecoh::cli::cmd_validate(path); });
    } else if (*coh) {
        res = run_guarded("cohomology", [&] { return liecoh::cli::cmd_cohomology(path, degree, module); });
    } else if (*inv) {
        res = run_guarded("invariant-forms", [&] { return liecoh::cli::cmd_invariant_forms(path, universal); });
    } else if (*cartan) {
        res = run_guarded("cartan", [&] { return liecoh::cli::cmd_cartan(path, form); });
    } else if (*loop) {
        res = run_guarded("loop", [&] { return liecoh::cli::cmd_loop(path, r, type, check_window); });
    } else if (*ml) {
        res = run_guarded("multiloop", [&] { return liecoh::cli::cmd_multiloop(spec, ml_window, centroid); });
    } else if (*witt) {
        const std::optional<int> k = psi_opt->count() ? std::optional<int>(psi) : std::nullopt;
        res = run_guarded("witt", [&] { return liecoh::cli::cmd_witt(virasoro, k, witt_window, certify); });
    } else {
        res = run_guarded("semidirect",
                          [&] { return liecoh::cli::cmd_semidirect(n_path, g_path, action_path, module); });
    }
    std::cout << liecoh::io::dump(res.report);
    return res.exit_code;
}
