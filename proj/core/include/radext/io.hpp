#ifndef RADEXT_IO_HPP
#define RADEXT_IO_HPP

#include "radext/family.hpp"
#include "radext/ke.hpp"
#include "radext/laurent.hpp"
#include "radext/profile.hpp"
#include "radext/registry.hpp"
#include "radext/resolvability.hpp"
#include "radext/roots.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

// Rationals travel as "p/q" strings. Integer JSON numbers are accepted on
// input; floating numbers are refused.
template <>
struct nlohmann::adl_serializer<mpq_class> {
    static void to_json(nlohmann::json& j, const mpq_class& q);
    static void from_json(const nlohmann::json& j, mpq_class& q);
};

namespace radext {

using Json = nlohmann::json;

void to_json(Json& j, const LaurentPoly& p);
void from_json(const Json& j, LaurentPoly& p);

void to_json(Json& j, const Interval& i);
void from_json(const Json& j, Interval& i);

void to_json(Json& j, const IsolatingInterval& i);
void from_json(const Json& j, IsolatingInterval& i);

void to_json(Json& j, const ExtremalParams& p);
void from_json(const Json& j, ExtremalParams& p);

void to_json(Json& j, const MetricClass& c);
void from_json(const Json& j, MetricClass& c);

void to_json(Json& j, const PositivityCertificate& c);
void from_json(const Json& j, PositivityCertificate& c);

void to_json(Json& j, const Endpoint& e);
void from_json(const Json& j, Endpoint& e);

void to_json(Json& j, const PositivityDomain& d);
void from_json(const Json& j, PositivityDomain& d);

void to_json(Json& j, const ObstructionReport& r);
void from_json(const Json& j, ObstructionReport& r);

void to_json(Json& j, const DetEntry& e);
void from_json(const Json& j, DetEntry& e);

void to_json(Json& j, const DetReport& r);
void from_json(const Json& j, DetReport& r);

void to_json(Json& j, const KEDiagnostics& d);
void from_json(const Json& j, KEDiagnostics& d);

void to_json(Json& j, const NeighborhoodCertificate& c);
void from_json(const Json& j, NeighborhoodCertificate& c);

void to_json(Json& j, const PredictionCheck& c);
void from_json(const Json& j, PredictionCheck& c);

void to_json(Json& j, const StabilityEntry& e);
void from_json(const Json& j, StabilityEntry& e);

void to_json(Json& j, const Claim& c);
void from_json(const Json& j, Claim& c);

/// Parses ExtremalParams from JSON text. ParseError names the offending
/// field; FloatLiteralRefused for decimal values.
ExtremalParams parse_params(const std::string& text);
ExtremalParams params_from_json(const Json& j);

/// CSV with header t,r,y,f,s and 17 significant digits.
void write_profile_csv(std::ostream& os, const MetricProfile& profile);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace radext

#endif
