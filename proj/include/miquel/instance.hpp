#pragma once

// Instance documents and the construct output.
//
// Input:
//   {"triangle": {"a2": "25", "b2": "16", "c2": "9"},
//    "cevian":   {"l": "1", "m": "2", "n": "3"}}
// Values are rational strings "p/q" or JSON integers.

#include <string>

#include "miquel/pipeline.hpp"

namespace miquel {

/// Throws Error(ParseError), Error(InvalidMetric) or Error(InvalidConfig).
CevianConfig<Rational> parse_instance(const std::string& json_text);

std::string instance_json(const CevianConfig<Rational>& cfg);

/// Exact normalized triples as rational strings plus decimal Cartesian
/// coordinates for every object the figure has reached. A nonempty
/// degeneracy is reported alongside.
std::string figure_json(const MiquelFigure& fig, const std::string& degeneracy = {});

}  // namespace miquel
