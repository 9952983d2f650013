#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <centraldeg/commands.hpp>

namespace {

using centraldeg::CommandResult;
using centraldeg::OutputFormat;
using centraldeg::RunConfig;

std::uint64_t default_seed()
{
    if (const char* s = std::getenv("CENTRALDEG_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed CENTRALDEG_SEED='" << s << "'\n";
        }
    }
    return 1;
}

void add_common(CLI::App* cmd, RunConfig& rc, std::string& format)
{
    cmd->add_option("--seed", rc.seed, "instance seed (default $CENTRALDEG_SEED or 1)");
    cmd->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_dims(CLI::App* cmd, RunConfig& rc)
{
    cmd->add_option("--m", rc.m, "matrix size / number of variables");
    cmd->add_option("--d", rc.d, "number of linear constraints");
}

void add_tracker(CLI::App* cmd, RunConfig& rc)
{
    cmd->add_option("--tracker-seeds", rc.tracker.seeds, "homotopy seeds that must agree");
    cmd->add_option("--threads", rc.tracker.threads, "path-tracking workers (0 = all cores)");
    cmd->add_option("--max-paths", rc.tracker.max_paths, "refuse systems with more Bezout paths per seed");
}

int emit(const CommandResult& res, const RunConfig& rc)
{
    switch (rc.format) {
    case OutputFormat::json: std::cout << res.json.dump(2) << "\n"; break;
    case OutputFormat::text: std::cout << centraldeg::render_text(res.json); break;
    case OutputFormat::csv:
        if (res.csv.empty()) {
            std::cerr << "this command has no CSV output\n";
            return 2;
        }
        std::cout << res.csv;
        break;
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Algebraic degree of central curves: counts, formulas, genera and central paths"};
    app.require_subcommand(1);

    RunConfig rc;
    rc.seed = default_seed();
    std::string format = "json";
    std::string genus_kind;

    auto* degree = app.add_subcommand("degree", "central-curve degree of a random instance");
    degree->add_option("family", rc.family, "lp, qp, sdp or sos")
        ->required()
        ->check(CLI::IsMember({"lp", "qp", "sdp", "sos"}));
    add_dims(degree, rc);
    degree->add_option("--n", rc.n, "number of variables of the form (sos)");
    degree->add_option("--two-d", rc.two_D, "degree 2D of the form (sos)");
    degree->add_option("--method", rc.method, "formula, polytope, homotopy or all")
        ->check(CLI::IsMember({"formula", "polytope", "homotopy", "all", "reference"}));
    add_tracker(degree, rc);
    add_common(degree, rc, format);

    auto* genus = app.add_subcommand("genus", "arithmetic genus of a central curve");
    genus->add_option("kind", genus_kind, "sdp-special, lp or hvector")
        ->required()
        ->check(CLI::IsMember({"sdp-special", "lp", "hvector"}));
    add_dims(genus, rc);
    genus->add_option("--hvector", rc.hvector, "h-vector entries h_0 h_1 ... (hvector)");
    add_common(genus, rc, format);

    auto* path = app.add_subcommand("path", "trace the central path of a random instance");
    path->add_option("family", rc.family, "lp, qp or sdp")->required()->check(CLI::IsMember({"lp", "qp", "sdp"}));
    add_dims(path, rc);
    path->add_option("--lambda-start", rc.schedule.lambda_start, "first barrier weight");
    path->add_option("--sigma", rc.schedule.sigma, "shrink factor per sample");
    path->add_option("--steps", rc.schedule.n_steps, "number of samples");
    path->add_option("--out", rc.out, "CSV destination");
    add_common(path, rc, format);

    auto* reproduce = app.add_subcommand("reproduce-paper", "run every desk-scale claim and print a pass/fail table");
    bool skip_sos = false;
    reproduce->add_flag("--skip-sos", skip_sos, "leave out the 65,536-path binary sextic count");
    add_tracker(reproduce, rc);
    add_common(reproduce, rc, format);

    auto* instance = app.add_subcommand("instance", "print the random instance a seed produces");
    instance->add_option("family", rc.family, "lp, qp, sdp or sos")
        ->required()
        ->check(CLI::IsMember({"lp", "qp", "sdp", "sos"}));
    add_dims(instance, rc);
    instance->add_option("--n", rc.n, "number of variables of the form (sos)");
    instance->add_option("--two-d", rc.two_D, "degree 2D of the form (sos)");
    add_common(instance, rc, format);

    CLI11_PARSE(app, argc, argv);
    rc.format = centraldeg::output_format_from_string(format);

    try {
        if (degree->parsed()) {
            return emit(centraldeg::cmd_degree(rc), rc);
        }
        if (genus->parsed()) {
            return emit(centraldeg::cmd_genus(genus_kind, rc), rc);
        }
        if (path->parsed()) {
            return emit(centraldeg::cmd_path(rc), rc);
        }
        if (reproduce->parsed()) {
            return emit(centraldeg::cmd_reproduce(rc, {.include_sos = !skip_sos, .on_claim = {}}), rc);
        }
        if (instance->parsed()) {
            return emit(centraldeg::cmd_instance(rc), rc);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
