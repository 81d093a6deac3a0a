#include "cli.hpp"

#include "reproduce.hpp"

#include "radext/error.hpp"
#include "radext/io.hpp"
#include "radext/ke.hpp"
#include "radext/profile.hpp"
#include "radext/registry.hpp"
#include "radext/resolvability.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace radext::cli {

namespace {

const std::vector<std::pair<Command, std::string>>& command_table()
{
    static const std::vector<std::pair<Command, std::string>> table = {
        {Command::Classify, "classify"},
        {Command::Qtable, "qtable"},
        {Command::Obstruct, "obstruct"},
        {Command::Det1, "det1"},
        {Command::Profile, "profile"},
        {Command::Series, "series"},
        {Command::Ke, "ke"},
        {Command::Stability, "stability"},
        {Command::Reproduce, "reproduce"},
        {Command::ListExamples, "list-examples"},
    };
    return table;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::optional<Rational> parse_bound(const std::string& text)
{
    std::string t;
    for (const char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t == "-inf" || t == "+inf" || t == "inf")
        return std::nullopt;
    return parse_rational(t);
}

// Flattened "path: value" lines, one per leaf.
void render_text(std::ostream& os, const Json& j, const std::string& path)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_text(os, value, path.empty() ? key : path + "." + key);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            render_text(os, j[i], path + "[" + std::to_string(i) + "]");
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

Json prediction_json(const ExtremePrediction& p)
{
    if (const auto* hit = std::get_if<Predicted>(&p))
        return {{"degree", hit->degree}, {"coeff", hit->coeff}};
    return "degenerate";
}

bool prediction_matches(const ExtremePrediction& pred, const LaurentPoly& q, Extreme which)
{
    const auto* hit = std::get_if<Predicted>(&pred);
    if (!hit)
        return true;
    if (q.is_zero())
        return false;
    if (which == Extreme::Leading)
        return q.degree() == hit->degree && q.leading() == hit->coeff;
    return q.valuation() == hit->degree && q.trailing() == hit->coeff;
}

struct Emitted {
    Emitted(Json r, int code = kExitOk) : report(std::move(r)), exit_code(code) {}

    Json report;
    int exit_code = kExitOk;
    /// Set when the command produced CSV instead of JSON.
    std::optional<std::string> csv;
};

Rational profile_anchor(const RunConfig& cfg, const ExtremalParams& p)
{
    if (cfg.y0)
        return parse_rational(*cfg.y0);
    if (cfg.example)
        return builtin_profile(*cfg.example).anchor_y;
    return auto_anchor(p);
}

Emitted classify_cmd(const RunConfig& cfg)
{
    const ExtremalParams p = load_params(cfg);
    const ScalarCurvature sc = scalar_curvature(p);
    Json report = {{"params", p}, {"psi", build_psi(p)}, {"class", classify(p)},
        {"scalar_curvature", {{"s", sc.s}, {"sigma", sc.sigma}, {"gamma1", sc.gamma1}, {"gamma2", sc.gamma2}}}};
    try {
        report["domain"] = positivity_domain(p, auto_anchor(p));
    } catch (const Error&) {
        report["domain"] = nullptr;
    }
    return {report};
}

Emitted qtable_cmd(const RunConfig& cfg)
{
    const ExtremalParams p = load_params(cfg);
    const AmbientSign eps = ambient_sign(cfg.eps);
    const QSequence seq(p, eps, cfg.kmax);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "k,degree,valuation,leading,trailing,matches_closed_form\n";
    bool all_match = true;
    for (int k = 1; k <= cfg.kmax; ++k) {
        const LaurentPoly& q = seq[k];
        Json row = {{"k", k}, {"Q", q}};
        if (!q.is_zero()) {
            row["degree"] = q.degree();
            row["valuation"] = q.valuation();
            row["leading"] = q.leading();
            row["trailing"] = q.trailing();
        }
        bool matches = true;
        if (p.n >= 2 && k >= 2) {
            const ExtremePrediction lead = extremes_closed_form(p, eps, k, Extreme::Leading);
            const ExtremePrediction low = extremes_closed_form(p, eps, k, Extreme::Lower);
            row["predicted_leading"] = prediction_json(lead);
            row["predicted_lower"] = prediction_json(low);
            matches = prediction_matches(lead, q, Extreme::Leading) && prediction_matches(low, q, Extreme::Lower);
            row["matches_closed_form"] = matches;
        }
        all_match = all_match && matches;
        csv << k << ',';
        if (q.is_zero())
            csv << ",,0,0";
        else
            csv << q.degree() << ',' << q.valuation() << ',' << to_string(q.leading()) << ',' << to_string(q.trailing());
        csv << ',' << (matches ? "true" : "false") << '\n';
        rows.push_back(std::move(row));
    }
    Emitted e{{{"params", p}, {"eps", cfg.eps}, {"kmax", cfg.kmax}, {"all_match", all_match}, {"rows", rows}}};
    if (cfg.format == Format::Csv)
        e.csv = csv.str();
    return e;
}

Emitted obstruct_cmd(const RunConfig& cfg)
{
    const ExtremalParams p = load_params(cfg);
    const Interval domain = resolve_domain(p, cfg.domain);
    const ObstructionReport r = obstruction_scan(p, ambient_sign(cfg.eps), domain, cfg.kmax);
    Json report = r;
    report["params"] = p;
    report["eps"] = cfg.eps;
    report["kmax"] = cfg.kmax;
    return {report, is_obstructed(r) ? kExitObstructed : kExitOk};
}

Emitted det1_cmd(const RunConfig& cfg)
{
    const ExtremalParams p = load_params(cfg);
    const Interval domain = resolve_domain(p, cfg.domain);
    const DetReport r = det_test_dim1(p, ambient_sign(cfg.eps), cfg.imax, domain);
    Json report = r;
    report["params"] = p;
    report["eps"] = cfg.eps;
    return {report, r.first_violation ? kExitObstructed : kExitOk};
}

Emitted profile_cmd(const RunConfig& cfg)
{
    const ExtremalParams p = load_params(cfg);
    const Rational y0 = profile_anchor(cfg, p);
    double t0 = 0.0;
    std::optional<std::pair<double, double>> range = cfg.t_range;
    if (cfg.example && !cfg.y0) {
        const ExampleEntry entry = builtin_profile(*cfg.example);
        t0 = std::log(entry.anchor_r);
        if (!range && entry.r_hi > entry.r_lo)
            range = std::pair{std::min(t0, std::log(entry.r_lo)), std::max(t0, std::log(entry.r_hi))};
    }
    if (cfg.t0)
        t0 = *cfg.t0;
    if (!range)
        range = std::pair{t0 - 1.0, t0 + 1.0};

    ProfileOptions opts;
    opts.tol = cfg.tol;
    opts.samples = cfg.samples;
    const MetricProfile prof = integrate_profile(p, y0.get_d(), t0, *range, opts);

    Json samples = Json::array();
    for (const auto& s : prof.samples)
        samples.push_back({{"t", s.t}, {"r", s.r}, {"y", s.y}, {"f", s.f}, {"s", s.s}});
    Emitted e{{{"params", p}, {"y0", y0}, {"t0", t0}, {"tol", cfg.tol}, {"t_min", prof.t_min}, {"t_max", prof.t_max},
        {"clipped_below", prof.clipped_below}, {"clipped_above", prof.clipped_above},
        {"extremality_residual", extremality_residual(prof)}, {"samples", samples}}};
    if (cfg.format.value_or(Format::Csv) == Format::Csv) {
        std::ostringstream os;
        write_profile_csv(os, prof);
        e.csv = os.str();
    }
    return e;
}

Emitted series_cmd(const RunConfig& cfg)
{
    const ExtremalParams p = load_params(cfg);
    const Rational y0 = profile_anchor(cfg, p);
    const Rational r0 = cfg.r0 ? parse_rational(*cfg.r0) : Rational(1);
    const auto g = interior_series(p, ambient_sign(cfg.eps), r0, y0, cfg.kmax);
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < g.size(); ++k)
        coeffs.push_back({{"k", k + 1}, {"g", g[k]}});
    return {{{"params", p}, {"eps", cfg.eps}, {"r0", r0}, {"y0", y0}, {"coefficients", coeffs}}};
}

Emitted ke_cmd(const RunConfig& cfg)
{
    const ExtremalParams p = load_params(cfg);
    const Rational y0 = profile_anchor(cfg, p);
    const KEDiagnostics diag = ke_invariants(p, y0);
    Json report = {{"params", p}, {"diagnostics", diag}};
    if (const auto check = verify_prediction(p, diag))
        report["prediction_check"] = *check;
    else
        report["prediction_check"] = nullptr;
    if (diag.y_inf.kind == Endpoint::Kind::ExactRoot)
        report["falling_factorial_check"] = falling_factorial_check(p, diag.y_inf.value, cfg.kmax);
    return {report};
}

Emitted stability_cmd(const RunConfig& cfg)
{
    if (cfg.alphas.empty())
        throw Error(ErrorCode::InvalidArgument, "stability needs --alphas");
    const ExtremalParams p = load_params(cfg);
    std::vector<Rational> alphas;
    for (const auto& a : cfg.alphas)
        alphas.push_back(parse_rational(a));
    const Rational anchor = profile_anchor(cfg, p);
    const auto entries = stability_scan(p, alphas, anchor, cfg.kmax);
    bool any = false;
    Json list = Json::array();
    for (const auto& entry : entries) {
        any = any || is_obstructed(entry.report);
        list.push_back(entry);
    }
    return {{{"params", p}, {"kmax", cfg.kmax}, {"entries", list}}, any ? kExitObstructed : kExitOk};
}

Emitted reproduce_cmd(const RunConfig& cfg)
{
    const std::string id = !cfg.id.empty() ? cfg.id : cfg.example.value_or("");
    if (id.empty())
        throw Error(ErrorCode::InvalidArgument, "reproduce needs an example id");
    Json report = reproduce(id, cfg.tol);
    return {report, discrepancy_count(report) > 0 ? kExitDiscrepancy : kExitOk};
}

Emitted list_examples_cmd()
{
    Json list = Json::array();
    for (const auto& id : example_ids()) {
        const ExampleEntry e = builtin_profile(id);
        Json claims = Json::array();
        for (const auto& c : e.claims)
            claims.push_back(c.id);
        list.push_back({{"id", e.id}, {"title", e.title}, {"params", e.params}, {"claims", claims}});
    }
    return {list};
}

Emitted dispatch(const RunConfig& cfg)
{
    switch (cfg.command) {
    case Command::Classify:
        return classify_cmd(cfg);
    case Command::Qtable:
        return qtable_cmd(cfg);
    case Command::Obstruct:
        return obstruct_cmd(cfg);
    case Command::Det1:
        return det1_cmd(cfg);
    case Command::Profile:
        return profile_cmd(cfg);
    case Command::Series:
        return series_cmd(cfg);
    case Command::Ke:
        return ke_cmd(cfg);
    case Command::Stability:
        return stability_cmd(cfg);
    case Command::Reproduce:
        return reproduce_cmd(cfg);
    case Command::ListExamples:
        return list_examples_cmd();
    }
    throw Error(ErrorCode::InvalidArgument, "unknown command");
}

void validate(const RunConfig& cfg)
{
    if (cfg.kmax < 1)
        throw Error(ErrorCode::InvalidArgument, "kmax must be >= 1");
    if (!(cfg.tol > 0))
        throw Error(ErrorCode::InvalidArgument, "tol must be > 0");
    if (cfg.imax < 1)
        throw Error(ErrorCode::InvalidArgument, "imax must be >= 1");
    if (cfg.samples < 2)
        throw Error(ErrorCode::InvalidArgument, "samples must be >= 2");
    if (cfg.format == Format::Csv && cfg.command != Command::Profile && cfg.command != Command::Qtable)
        throw Error(ErrorCode::InvalidArgument, "csv output is only available for profile and qtable");
}

} // namespace

std::optional<Command> parse_command(const std::string& name)
{
    for (const auto& [cmd, text] : command_table())
        if (text == name)
            return cmd;
    return std::nullopt;
}

std::string command_name(Command c)
{
    for (const auto& [cmd, text] : command_table())
        if (cmd == c)
            return text;
    return "?";
}

std::optional<Format> parse_format(const std::string& name)
{
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "text")
        return Format::Text;
    return std::nullopt;
}

void apply_environment(RunConfig& cfg)
{
    if (const char* k = std::getenv("RADEXT_KMAX"); k && *k) {
        try {
            cfg.kmax = std::stoi(k);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, std::string("RADEXT_KMAX is not an integer: ") + k);
        }
    }
    if (const char* t = std::getenv("RADEXT_TOL"); t && *t) {
        try {
            cfg.tol = std::stod(t);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, std::string("RADEXT_TOL is not a number: ") + t);
        }
    }
}

void apply_config(RunConfig& cfg, const std::string& json_text)
{
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "config must be a JSON object");
    try {
        if (j.contains("kmax"))
            cfg.kmax = j["kmax"].get<int>();
        if (j.contains("eps"))
            cfg.eps = j["eps"].get<int>();
        if (j.contains("tol"))
            cfg.tol = j["tol"].get<double>();
        if (j.contains("domain"))
            cfg.domain = j["domain"].get<std::string>();
        if (j.contains("samples"))
            cfg.samples = j["samples"].get<int>();
        if (j.contains("imax"))
            cfg.imax = j["imax"].get<int>();
        if (j.contains("alphas"))
            cfg.alphas = j["alphas"].get<std::vector<std::string>>();
        if (j.contains("format")) {
            const auto f = parse_format(j["format"].get<std::string>());
            if (!f)
                throw Error(ErrorCode::ParseError, "config: unknown format");
            cfg.format = f;
        }
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
    }
}

ExtremalParams load_params(const RunConfig& cfg)
{
    const int sources = (cfg.params_json ? 1 : 0) + (cfg.params_file ? 1 : 0) + (cfg.example ? 1 : 0);
    if (sources != 1)
        throw Error(ErrorCode::InvalidArgument, "give exactly one of --params-json, --params, --example");
    if (cfg.params_json)
        return parse_params(*cfg.params_json);
    if (cfg.params_file)
        return parse_params(read_file(*cfg.params_file));
    return builtin_profile(*cfg.example).params;
}

Rational auto_anchor(const ExtremalParams& p)
{
    const LaurentPoly psi = build_psi(p);
    if (psi.is_zero())
        throw Error(ErrorCode::DomainNotPositive, "psi vanishes identically");
    const SturmSequence sturm(psi);
    std::vector<IsolatingInterval> roots = sturm.isolate(Rational(0), std::nullopt);
    std::vector<Rational> centers;
    for (auto& iv : roots) {
        sturm.refine(iv, default_isolation_width());
        centers.push_back((iv.lo + iv.hi) / 2);
    }
    std::vector<Rational> candidates;
    if (centers.size() >= 2)
        candidates.push_back((centers[0] + centers[1]) / 2);
    if (!centers.empty()) {
        candidates.push_back(centers[0] + 1);
        candidates.push_back(centers[0] / 2);
    }
    candidates.emplace_back(1);
    for (const auto& c : candidates) {
        if (c > 0 && psi.eval(c) > 0)
            return c;
    }
    throw Error(ErrorCode::DomainNotPositive, "no anchor with psi > 0 found; pass an explicit domain");
}

Interval resolve_domain(const ExtremalParams& p, const std::string& text)
{
    if (text == "auto")
        return positivity_domain(p, auto_anchor(p)).inner();
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorCode::ParseError, "domain must be 'auto' or 'lo,hi', got '" + text + "'");
    const auto lo = parse_bound(text.substr(0, comma));
    const auto hi = parse_bound(text.substr(comma + 1));
    return Interval::open(lo, hi);
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        validate(cfg);
        const Emitted e = dispatch(cfg);
        std::string body;
        if (e.csv) {
            body = *e.csv;
        } else if (cfg.format == Format::Text) {
            std::ostringstream os;
            render_text(os, e.report, "");
            body = os.str();
        } else {
            body = e.report.dump(2) + "\n";
        }
        if (cfg.output)
            write_file_atomic(*cfg.output, body);
        else
            out << body;
        return e.exit_code;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
    }
    return kExitError;
}

} // namespace radext::cli
