#include "radext/io.hpp"

#include "radext/error.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

void nlohmann::adl_serializer<mpq_class>::to_json(nlohmann::json& j, const mpq_class& q) { j = q.get_str(); }

void nlohmann::adl_serializer<mpq_class>::from_json(const nlohmann::json& j, mpq_class& q)
{
    using radext::Error;
    using radext::ErrorCode;
    if (j.is_string()) {
        q = radext::parse_rational(j.get<std::string>());
    } else if (j.is_number_float()) {
        throw Error(ErrorCode::FloatLiteralRefused, "floating number " + j.dump() + " is not an exact rational");
    } else if (j.is_number_integer()) {
        q = mpq_class(j.dump());
    } else {
        throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
    }
}

namespace radext {

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "expected a JSON object, got " + j.dump());
    const auto it = j.find(name);
    if (it == j.end())
        throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
    return *it;
}

template <class T>
T get_field(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    try {
        return v.get<T>();
    } catch (const Error& e) {
        throw Error(e.code(), std::string("field '") + name + "': " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("field '") + name + "': " + e.what());
    }
}

Json bound(const std::optional<Rational>& b, const char* infinity)
{
    return b ? Json(*b) : Json(infinity);
}

std::optional<Rational> parse_bound(const Json& j, const char* infinity)
{
    if (j.is_string() && j.get<std::string>() == infinity)
        return std::nullopt;
    return j.get<Rational>();
}

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_field(const Json& j, const char* name)
{
    const auto it = j.find(name);
    if (it == j.end() || it->is_null())
        return std::nullopt;
    return it->get<T>();
}

} // namespace

void to_json(Json& j, const LaurentPoly& p)
{
    j = Json::object();
    for (const auto& [e, c] : p.terms())
        j[std::to_string(e)] = c;
}

void from_json(const Json& j, LaurentPoly& p)
{
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "a Laurent polynomial is an object of exponent -> coefficient");
    std::vector<std::pair<int, Rational>> raw;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty())
            throw Error(ErrorCode::ParseError, "bad exponent key '" + key + "'");
        raw.emplace_back(e, value.get<Rational>());
    }
    p = LaurentPoly::from_terms(raw);
}

void to_json(Json& j, const Interval& i) { j = {{"lo", bound(i.lo, "-inf")}, {"hi", bound(i.hi, "+inf")}}; }

void from_json(const Json& j, Interval& i)
{
    i = Interval::open(parse_bound(field(j, "lo"), "-inf"), parse_bound(field(j, "hi"), "+inf"));
}

void to_json(Json& j, const IsolatingInterval& i) { j = {{"lo", i.lo}, {"hi", i.hi}, {"exact", i.exact}}; }

void from_json(const Json& j, IsolatingInterval& i)
{
    i.lo = get_field<Rational>(j, "lo");
    i.hi = get_field<Rational>(j, "hi");
    i.exact = j.value("exact", false);
}

void to_json(Json& j, const ExtremalParams& p)
{
    j = {{"n", p.n}, {"A", p.A}, {"B", p.B}, {"C", p.C}, {"D", p.D}};
}

void from_json(const Json& j, ExtremalParams& p)
{
    const Json& n = field(j, "n");
    if (!n.is_number_integer())
        throw Error(ErrorCode::ParseError, "field 'n': expected an integer, got " + n.dump());
    p.n = n.get<int>();
    if (p.n < 1)
        throw Error(ErrorCode::ParseError, "field 'n': dimension must be >= 1");
    p.A = get_field<Rational>(j, "A");
    p.B = get_field<Rational>(j, "B");
    p.C = get_field<Rational>(j, "C");
    p.D = get_field<Rational>(j, "D");
}

void to_json(Json& j, const MetricClass& c)
{
    j = {{"tag", tag_name(c)}};
    if (const auto* ke = std::get_if<KahlerEinstein>(&c))
        j["lambda"] = ke->lambda;
    else if (const auto* csc = std::get_if<CscK>(&c))
        j["s"] = csc->s;
    else if (const auto* ext = std::get_if<ExtremalProper>(&c)) {
        j["gamma1"] = ext->gamma1;
        j["gamma2"] = ext->gamma2;
    }
}

void from_json(const Json& j, MetricClass& c)
{
    const auto tag = get_field<std::string>(j, "tag");
    if (tag == "ConstHolSecCurv")
        c = ConstHolSecCurv{};
    else if (tag == "KahlerEinstein")
        c = KahlerEinstein{get_field<Rational>(j, "lambda")};
    else if (tag == "CscK")
        c = CscK{get_field<Rational>(j, "s")};
    else if (tag == "ExtremalProper")
        c = ExtremalProper{get_field<Rational>(j, "gamma1"), get_field<Rational>(j, "gamma2")};
    else
        throw Error(ErrorCode::ParseError, "unknown metric class tag '" + tag + "'");
}

void to_json(Json& j, const PositivityCertificate& c)
{
    if (const auto* ok = std::get_if<NonnegativeOn>(&c))
        j = {{"verdict", "nonnegative"}, {"interval", ok->interval}};
    else if (const auto* neg = std::get_if<NegativeWitness>(&c))
        j = {{"verdict", "negative"}, {"point", neg->point}, {"value", neg->value}};
    else
        j = {{"verdict", "identically_zero"}};
}

void from_json(const Json& j, PositivityCertificate& c)
{
    const auto verdict = get_field<std::string>(j, "verdict");
    if (verdict == "nonnegative")
        c = NonnegativeOn{get_field<Interval>(j, "interval")};
    else if (verdict == "negative")
        c = NegativeWitness{get_field<Rational>(j, "point"), get_field<Rational>(j, "value")};
    else if (verdict == "identically_zero")
        c = IdenticallyZero{};
    else
        throw Error(ErrorCode::ParseError, "unknown certificate verdict '" + verdict + "'");
}

void to_json(Json& j, const Endpoint& e)
{
    switch (e.kind) {
    case Endpoint::Kind::Zero:
        j = {{"kind", "zero"}};
        break;
    case Endpoint::Kind::Infinity:
        j = {{"kind", "infinity"}};
        break;
    case Endpoint::Kind::ExactRoot:
        j = {{"kind", "exact"}, {"value", e.value}};
        break;
    case Endpoint::Kind::IsolatedRoot:
        j = {{"kind", "isolated"}, {"lo", e.enclosure.lo}, {"hi", e.enclosure.hi}, {"approx", e.approx()}};
        break;
    }
}

void from_json(const Json& j, Endpoint& e)
{
    const auto kind = get_field<std::string>(j, "kind");
    if (kind == "zero")
        e = Endpoint::zero();
    else if (kind == "infinity")
        e = Endpoint::infinity();
    else if (kind == "exact")
        e = Endpoint::exact(get_field<Rational>(j, "value"));
    else if (kind == "isolated")
        e = Endpoint::isolated({get_field<Rational>(j, "lo"), get_field<Rational>(j, "hi"), false});
    else
        throw Error(ErrorCode::ParseError, "unknown endpoint kind '" + kind + "'");
}

void to_json(Json& j, const PositivityDomain& d) { j = {{"lo", d.lo}, {"hi", d.hi}}; }

void from_json(const Json& j, PositivityDomain& d)
{
    d.lo = get_field<Endpoint>(j, "lo");
    d.hi = get_field<Endpoint>(j, "hi");
}

void to_json(Json& j, const ObstructionReport& r)
{
    if (const auto* clear = std::get_if<ClearUpTo>(&r.verdict))
        j = {{"verdict", "clear"}, {"k", clear->K}};
    else if (const auto* hit = std::get_if<ObstructedAt>(&r.verdict))
        j = {{"verdict", "obstructed"}, {"k", hit->k}, {"witness", hit->witness}, {"value", hit->value}};
    else
        j = {{"verdict", "identically_zero"}, {"k", std::get<IdenticallyZeroFrom>(r.verdict).k}};
    j["domain"] = r.domain;
}

void from_json(const Json& j, ObstructionReport& r)
{
    const auto verdict = get_field<std::string>(j, "verdict");
    const int k = get_field<int>(j, "k");
    if (verdict == "clear")
        r.verdict = ClearUpTo{k};
    else if (verdict == "obstructed")
        r.verdict = ObstructedAt{k, get_field<Rational>(j, "witness"), get_field<Rational>(j, "value")};
    else if (verdict == "identically_zero")
        r.verdict = IdenticallyZeroFrom{k};
    else
        throw Error(ErrorCode::ParseError, "unknown report verdict '" + verdict + "'");
    r.domain = get_field<Interval>(j, "domain");
}

void to_json(Json& j, const DetEntry& e) { j = {{"I", e.I}, {"det", e.det}, {"certificate", e.certificate}}; }

void from_json(const Json& j, DetEntry& e)
{
    e.I = get_field<int>(j, "I");
    e.det = get_field<LaurentPoly>(j, "det");
    e.certificate = get_field<PositivityCertificate>(j, "certificate");
}

void to_json(Json& j, const DetReport& r)
{
    j = {{"verdict", r.first_violation ? "obstructed" : "clear"}, {"first_violation", optional_json(r.first_violation)},
        {"domain", r.domain}, {"entries", r.entries}};
}

void from_json(const Json& j, DetReport& r)
{
    r.first_violation = optional_field<int>(j, "first_violation");
    r.domain = get_field<Interval>(j, "domain");
    r.entries = get_field<std::vector<DetEntry>>(j, "entries");
}

void to_json(Json& j, const KEDiagnostics& d)
{
    j = {{"lambda", d.lambda}, {"y_inf", d.y_inf}, {"n_tilde", optional_json(d.n_tilde)},
        {"n_tilde_enclosure", optional_json(d.n_tilde_enclosure)}, {"y_inf_integral", d.y_inf_integral},
        {"n_tilde_integral", d.n_tilde_integral}, {"predicted_obstruction_k", optional_json(d.predicted_obstruction_k)}};
}

void from_json(const Json& j, KEDiagnostics& d)
{
    d.lambda = get_field<Rational>(j, "lambda");
    d.y_inf = get_field<Endpoint>(j, "y_inf");
    d.n_tilde = optional_field<Rational>(j, "n_tilde");
    d.n_tilde_enclosure = optional_field<IsolatingInterval>(j, "n_tilde_enclosure");
    d.y_inf_integral = get_field<bool>(j, "y_inf_integral");
    d.n_tilde_integral = get_field<bool>(j, "n_tilde_integral");
    d.predicted_obstruction_k = optional_field<int>(j, "predicted_obstruction_k");
}

void to_json(Json& j, const NeighborhoodCertificate& c)
{
    j = {{"interval", c.interval}, {"witness", c.witness}, {"value", c.value}, {"strictly_negative", c.strictly_negative}};
}

void from_json(const Json& j, NeighborhoodCertificate& c)
{
    c.interval = get_field<Interval>(j, "interval");
    c.witness = get_field<Rational>(j, "witness");
    c.value = get_field<Rational>(j, "value");
    c.strictly_negative = get_field<bool>(j, "strictly_negative");
}

void to_json(Json& j, const PredictionCheck& c)
{
    j = {{"k", c.k}, {"value", optional_json(c.value)}, {"derivative", optional_json(c.derivative)},
        {"neighborhood", c.neighborhood}, {"sound", c.sound}};
}

void from_json(const Json& j, PredictionCheck& c)
{
    c.k = get_field<int>(j, "k");
    c.value = optional_field<Rational>(j, "value");
    c.derivative = optional_field<Rational>(j, "derivative");
    c.neighborhood = get_field<NeighborhoodCertificate>(j, "neighborhood");
    c.sound = get_field<bool>(j, "sound");
}

void to_json(Json& j, const StabilityEntry& e)
{
    j = e.report;
    j["alpha"] = e.alpha;
    j["lambda"] = optional_json(e.lambda);
}

void from_json(const Json& j, StabilityEntry& e)
{
    e.alpha = get_field<Rational>(j, "alpha");
    e.report = j.get<ObstructionReport>();
    e.lambda = optional_field<Rational>(j, "lambda");
}

void to_json(Json& j, const Claim& c)
{
    j = {{"id", c.id}, {"statement", c.statement}, {"status", to_string(c.status)}, {"details", c.details}};
}

void from_json(const Json& j, Claim& c)
{
    c.id = get_field<std::string>(j, "id");
    c.statement = get_field<std::string>(j, "statement");
    const auto status = get_field<std::string>(j, "status");
    if (status != "confirmed" && status != "discrepant")
        throw Error(ErrorCode::ParseError, "unknown claim status '" + status + "'");
    c.status = status == "confirmed" ? ClaimStatus::Confirmed : ClaimStatus::Discrepant;
    c.details = j.value("details", std::string());
}

ExtremalParams params_from_json(const Json& j) { return j.get<ExtremalParams>(); }

ExtremalParams parse_params(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return params_from_json(j);
}

void write_profile_csv(std::ostream& os, const MetricProfile& profile)
{
    os << "t,r,y,f,s\n";
    char line[256];
    for (const auto& s : profile.samples) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t, s.r, s.y, s.f, s.s);
        os << line;
    }
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::InvalidArgument, "cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out)
            throw Error(ErrorCode::InvalidArgument, "write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error(ErrorCode::InvalidArgument, "cannot move output into '" + path + "': " + ec.message());
    }
}

} // namespace radext
