#pragma once

#include <esetlab/avoidance.hpp>
#include <esetlab/bound_checks.hpp>
#include <esetlab/cartan.hpp>
#include <esetlab/curve_family.hpp>
#include <esetlab/disc_collection.hpp>
#include <esetlab/gauge.hpp>
#include <esetlab/measure_lab.hpp>

#include <string>
#include <vector>

namespace esetlab {

// JSON wire formats (schema files ship under schemas/):
//   gauge:      {"kind": str, "params": {...}, "x0": num, "R": num,
//                "alpha"|"beta"|"tau": num}
//   collection: {"ambient": "plane"|"unit_disc", "gauge": {...},
//                "epsilon": num, "tail_index": int,
//                "discs": [{"re": num, "im": num, "r": num}]}
// The string interface keeps the vendored JSON header out of the installed
// public headers.

std::string gauge_to_json(const Gauge& g, int indent = 2);
Gauge gauge_from_json(const std::string& text);

std::string collection_to_json(const DiscCollection& col, int indent = 2);
DiscCollection collection_from_json(const std::string& text);

/// CSV with columns n, re, im, r, ratio.
std::string collection_to_csv(const DiscCollection& col);

/// CSV with columns disc_index, c_lo, c_hi, width, bound, satisfied.
std::string c_interval_rows_to_csv(const std::vector<CIntervalReport>& rows);

std::string validation_to_json(const ValidationReport& rep, int indent = 2);
std::string hit_report_to_json(const HitReport& rep, int indent = 2);
std::string density_report_to_json(const DensityReport& rep, int indent = 2);
std::string exceptional_report_to_json(const ExceptionalCReport& rep, int indent = 2);
std::string bound_report_to_json(const BoundReport& rep, int indent = 2);
std::string avoidance_report_to_json(const AvoidanceReport& rep, int indent = 2);
std::string cartan_to_json(const CartanConstruction& con, int indent = 2);

/// Machine-readable error payload used by the CLI on failure paths.
std::string error_to_json(const std::string& kind, const std::string& message);

}  // namespace esetlab
