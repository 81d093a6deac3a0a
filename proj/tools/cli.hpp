#ifndef RADEXT_TOOLS_CLI_HPP
#define RADEXT_TOOLS_CLI_HPP

#include "radext/family.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace radext::cli {

enum class Command { Classify, Qtable, Obstruct, Det1, Profile, Series, Ke, Stability, Reproduce, ListExamples };

enum class Format { Json, Csv, Text };

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitObstructed = 2;
inline constexpr int kExitDiscrepancy = 3;

struct RunConfig {
    Command command = Command::Classify;

    // Exactly one source of parameters for commands that take them.
    std::optional<std::string> params_json;
    std::optional<std::string> params_file;
    std::optional<std::string> example;

    int kmax = 20;
    int eps = 1;
    double tol = 1e-9;
    /// "auto" or "lo,hi" with -inf / +inf allowed.
    std::string domain = "auto";
    std::vector<std::string> alphas;
    std::optional<std::string> output;
    std::optional<Format> format;

    std::optional<std::string> y0;
    std::optional<std::string> r0;
    std::optional<double> t0;
    std::optional<std::pair<double, double>> t_range;
    int samples = 201;
    int imax = 3;
    /// Example id for reproduce.
    std::string id;
};

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);
std::optional<Format> parse_format(const std::string& name);

/// Defaults layered under the command line: RADEXT_KMAX and RADEXT_TOL
/// from the environment, then a config object with any of the keys kmax,
/// eps, tol, domain, samples, imax, alphas, format. Later layers win.
void apply_environment(RunConfig& cfg);
void apply_config(RunConfig& cfg, const std::string& json_text);

/// Resolves the single parameter source; ParseError/InvalidArgument on misuse.
ExtremalParams load_params(const RunConfig& cfg);

/// Anchor used by `--domain auto`: the midpoint of the two smallest positive
/// roots of psi, else root + 1, else root / 2, else 1; the first candidate
/// with psi > 0 wins.
Rational auto_anchor(const ExtremalParams& p);

/// "auto" resolves to the inner interval of positivity_domain around
/// auto_anchor(p); otherwise "lo,hi" with -inf / +inf for open ends.
Interval resolve_domain(const ExtremalParams& p, const std::string& text);

/// Runs one command. Reports go to `out` (or to cfg.output, written
/// atomically); diagnostics go to `err`. Returns the exit code.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace radext::cli

#endif
