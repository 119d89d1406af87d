#pragma once

// Batch experiment driver: each experiment is a thin composition of library
// operations with deterministic seeding, a metrics/pass-flag report, and an
// optional CSV ladder.  With a fixed (name, parameters, seed) triple every
// report field except wall_time_ms is bit-identical across runs.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holonomy/json_io.hpp"

namespace holonomy {

// Ladder output: header row plus one row per parameter point.
struct CsvTable {
	std::vector<std::string> header;
	std::vector<std::vector<double>> rows;

	std::string to_string() const;
};

using ParamMap = std::map<std::string, double>;

struct ExperimentReport {
	std::string name;
	std::uint64_t seed = 0;
	ParamMap parameters;  // resolved values, defaults filled in
	std::map<std::string, double> metrics;
	std::map<std::string, bool> passes;
	double wall_time_ms = 0.0;

	bool all_pass() const;
	Json to_json() const;  // keys sorted
};

// Known experiment names, in listing order.
const std::vector<std::string>& experiment_names();

// Runs one experiment.  Unknown names, unknown parameter keys, and parameter
// values outside an experiment's domain throw std::invalid_argument.  When
// csv is non-null the experiment's ladder (if it has one) is stored there.
ExperimentReport run_experiment(const std::string& name, const ParamMap& params,
                                std::uint64_t seed, CsvTable* csv = nullptr);

}  // namespace holonomy
