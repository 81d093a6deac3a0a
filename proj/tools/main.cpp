#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace radext::cli;

namespace {

// Flags bound to optionals so that only values given on the command line
// override the environment and the config file.
struct Overrides {
    std::optional<int> kmax;
    std::optional<int> eps;
    std::optional<double> tol;
    std::optional<std::string> domain;
    std::vector<std::string> alphas;
    std::optional<std::string> format;
    std::optional<int> samples;
    std::optional<int> imax;
};

void add_common(CLI::App* sub, RunConfig& cfg, Overrides& o, std::optional<std::string>& config_path)
{
    sub->add_option("--params-json", cfg.params_json, "parameters as inline JSON");
    sub->add_option("--params", cfg.params_file, "parameters from a JSON file");
    sub->add_option("--example", cfg.example, "parameters of a registered example");
    sub->add_option("--kmax", o.kmax, "largest k (default 20, env RADEXT_KMAX)");
    sub->add_option("--eps", o.eps, "ambient sign: -1, 0 or 1")->check(CLI::IsMember({-1, 0, 1}));
    sub->add_option("--tol", o.tol, "integration tolerance (default 1e-9, env RADEXT_TOL)");
    sub->add_option("--domain", o.domain, "'auto' or 'lo,hi' with -inf/+inf");
    sub->add_option("--alphas", o.alphas, "scale factors as rationals")->delimiter(',');
    sub->add_option("--format", o.format, "json, csv or text");
    sub->add_option("-o,--output", cfg.output, "write the report to a file (atomically)");
    sub->add_option("--y0", cfg.y0, "anchor value of y (rational)");
    sub->add_option("--r0", cfg.r0, "anchor value of r (rational, series)");
    sub->add_option("--t0", cfg.t0, "anchor time t = log r (profile)");
    sub->add_option("--t-range", cfg.t_range, "profile time range: lo hi");
    sub->add_option("--samples", o.samples, "profile sample count");
    sub->add_option("--imax", o.imax, "largest determinant size (det1)");
    sub->add_option("--config", config_path, "JSON file with default options");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"radext: radial extremal Kahler metrics, exact obstruction scans and profiles"};
    app.require_subcommand(1);

    RunConfig cfg;
    Overrides o;
    std::optional<std::string> config_path;

    const std::pair<Command, const char*> commands[] = {
        {Command::Classify, "metric class, psi and scalar curvature"},
        {Command::Qtable, "Q_k table with closed-form extremes"},
        {Command::Obstruct, "certified obstruction scan up to --kmax"},
        {Command::Det1, "n = 1 determinant test up to --imax"},
        {Command::Profile, "numeric profile t, r, y, f, s"},
        {Command::Series, "interior derivative coefficients at (r0, y0)"},
        {Command::Ke, "Kahler-Einstein invariants and obstruction prediction"},
        {Command::Stability, "projective scan of alpha multiples"},
        {Command::ListExamples, "registered worked examples"},
    };
    for (const auto& [c, help] : commands) {
        CLI::App* sub = app.add_subcommand(command_name(c), help);
        add_common(sub, cfg, o, config_path);
    }
    CLI::App* rep = app.add_subcommand("reproduce", "re-run every claim check of an example");
    rep->add_option("id", cfg.id, "example id")->required();
    rep->add_option("--tol", o.tol, "integration tolerance");
    rep->add_option("--format", o.format, "json or text");
    rep->add_option("-o,--output", cfg.output, "write the report to a file (atomically)");
    rep->add_option("--config", config_path, "JSON file with default options");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    cfg.command = *parse_command(app.get_subcommands().front()->get_name());
    try {
        apply_environment(cfg);
        if (config_path) {
            std::ifstream in(*config_path);
            if (!in)
                throw std::runtime_error("cannot read config '" + *config_path + "'");
            std::ostringstream os;
            os << in.rdbuf();
            apply_config(cfg, os.str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    if (o.kmax)
        cfg.kmax = *o.kmax;
    if (o.eps)
        cfg.eps = *o.eps;
    if (o.tol)
        cfg.tol = *o.tol;
    if (o.domain)
        cfg.domain = *o.domain;
    if (!o.alphas.empty())
        cfg.alphas = o.alphas;
    if (o.samples)
        cfg.samples = *o.samples;
    if (o.imax)
        cfg.imax = *o.imax;
    if (o.format) {
        cfg.format = parse_format(*o.format);
        if (!cfg.format) {
            std::cerr << "error: unknown format '" << *o.format << "'\n";
            return kExitError;
        }
    }
    return run_command(cfg, std::cout, std::cerr);
}
