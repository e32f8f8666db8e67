#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "sdlattice/distribution.hpp"
#include "sdlattice/flows.hpp"
#include "sdlattice/functions.hpp"
#include "sdlattice/integrability.hpp"

namespace sdlattice::io {

// {"points": [{"x": .., "p": ..}, ...]}. Parsing goes through make_discrete;
// malformed documents raise ContractError.
nlohmann::json to_json(const DiscreteDistribution& mu);
DiscreteDistribution distribution_from_json(const nlohmann::json& doc);

// {"atoms": [{"label": .., "pi": .., "points": [...]}, ...]}.
nlohmann::json to_json(const Flow& flow);
Flow flow_from_json(const nlohmann::json& doc);

// Reads and parses a JSON file; ContractError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);
DiscreteDistribution read_distribution(const std::string& path);
Flow read_flow(const std::string& path);

/// Tail oracle from a table with columns s,T and optionally U (header line
/// optional, "inf" accepted). s must start at 0 and increase strictly; T and
/// U must not increase. Between rows the oracle returns the value of the
/// last row at or before s, an upper bound for a nonincreasing tail.
TailOracle tail_oracle_from_csv(std::istream& in);
TailOracle read_tail_oracle(const std::string& path);

// "%.17g".
std::string format_number(double v);

/// Writes `s,value` rows for plotting: every node of a piecewise-linear
/// function, both one-sided values at every jump of a step function, and
/// `padding` evenly spaced points on each ray. Rows left of `lower_bound`
/// are omitted.
void export_function(const std::variant<StepFunction, PiecewiseLinearFunction>& f, std::ostream& out,
                     std::size_t padding = 3, std::optional<double> lower_bound = std::nullopt);

}  // namespace sdlattice::io
