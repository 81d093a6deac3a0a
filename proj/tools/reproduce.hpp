#ifndef RADEXT_TOOLS_REPRODUCE_HPP
#define RADEXT_TOOLS_REPRODUCE_HPP

#include "radext/io.hpp"

#include <string>

namespace radext::cli {

/// Re-runs every claim check of a registry entry. Each claim carries the
/// machine-checked status, the recorded status and the computed value.
/// UnknownExample for an unregistered id.
Json reproduce(const std::string& id, double tol = 1e-9);

/// Number of claims whose machine-checked status is discrepant.
int discrepancy_count(const Json& report);

} // namespace radext::cli

#endif
