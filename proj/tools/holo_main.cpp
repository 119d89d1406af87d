#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "holonomy/experiments.hpp"

namespace {

// key=value, value parsed as a double.
bool parse_param(const std::string& text, holonomy::ParamMap* out) {
	const auto eq = text.find('=');
	if (eq == std::string::npos || eq == 0) return false;
	try {
		std::size_t used = 0;
		const double value = std::stod(text.substr(eq + 1), &used);
		if (used != text.size() - eq - 1) return false;
		(*out)[text.substr(0, eq)] = value;
	} catch (const std::exception&) {
		return false;
	}
	return true;
}

bool write_file(const std::string& path, const std::string& content) {
	std::ofstream out(path);
	out << content;
	return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"holonomy experiment driver"};
	std::string experiment;
	std::uint64_t seed = 0;
	std::string out_path;
	std::string csv_path;
	std::vector<std::string> raw_params;
	bool list = false;

	app.add_flag("--list", list, "print the known experiment names and exit");
	app.add_option("--experiment", experiment, "experiment name (see --list)");
	app.add_option("--seed", seed, "RNG seed")->capture_default_str();
	app.add_option("--out", out_path, "write the JSON report to this file (default: stdout)");
	app.add_option("--csv", csv_path, "write the experiment's CSV ladder to this file");
	app.add_option("--param", raw_params, "parameter override key=value (repeatable)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	if (list) {
		for (const auto& name : holonomy::experiment_names()) std::cout << name << "\n";
		return 0;
	}
	if (experiment.empty()) {
		std::cerr << "error: --experiment is required (or use --list)\n";
		return 2;
	}

	holonomy::ParamMap params;
	for (const auto& raw : raw_params) {
		if (!parse_param(raw, &params)) {
			std::cerr << "error: bad --param '" << raw << "' (expected key=value)\n";
			return 2;
		}
	}

	holonomy::ExperimentReport report;
	holonomy::CsvTable csv;
	try {
		report = holonomy::run_experiment(experiment, params, seed,
		                                  csv_path.empty() ? nullptr : &csv);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}

	const std::string json = report.to_json().dump(2) + "\n";
	if (out_path.empty()) {
		std::cout << json;
	} else if (!write_file(out_path, json)) {
		std::cerr << "error: cannot write " << out_path << "\n";
		return 2;
	}

	if (!csv_path.empty()) {
		if (csv.header.empty()) {
			std::cerr << "note: experiment '" << experiment << "' has no CSV ladder\n";
		} else if (!write_file(csv_path, csv.to_string())) {
			std::cerr << "error: cannot write " << csv_path << "\n";
			return 2;
		}
	}

	std::cerr << experiment << ": " << (report.all_pass() ? "all checks passed" : "CHECK FAILED")
	          << "\n";
	return report.all_pass() ? 0 : 1;
}
