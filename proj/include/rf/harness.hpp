#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rf {

inline constexpr const char * kCsvSchema = "rf-csv/1";

struct ExperimentConfig {
    std::string task;
    std::vector<nlohmann::json> instances;
    std::vector<std::uint64_t> seeds;
    int workers = 1;
    std::string csv_path;     // empty: no file
    std::string summary_path; // empty: no file
    std::string timing_path;  // per-cell wall times, kept apart from the CSV
    nlohmann::json raw;

    // Throws ConfigError naming the offending field.
    static ExperimentConfig from_json(const nlohmann::json & j);
    static ExperimentConfig load(const std::string & path);
};

struct RunRecord {
    int cell = 0;
    int instance = 0;
    std::uint64_t seed = 0;
    std::string task;
    std::string outcome; // some, none, value, exceeds, infinite_suspected, certified, violated, unrefuted, degenerate
    std::string value;
    std::optional<bool> verified; // set for outcomes that carry a checkable object
    std::string stage;
    std::string detail;
    double wall_ms = 0;
    bool trace = false;       // ask the task for a per-step dump
    nlohmann::json artifacts; // maps, classes, traces; never written to the CSV
};

struct RunOutput {
    std::vector<RunRecord> rows;
    nlohmann::json summary;
    bool tripwire = false; // some outcome failed independent verification
};

std::vector<std::string> known_tasks();

// One cell outside any config; input problems propagate as exceptions.
RunRecord run_cell(const std::string & task, const nlohmann::json & instance, std::uint64_t seed, bool trace = false);

// Every (instance, seed) cell, instance-major; results do not depend on the worker count.
RunOutput run_experiment(const ExperimentConfig & cfg);

std::string render_csv(const std::vector<RunRecord> & rows);

// Runs and writes the outputs; returns the process exit code (0 ok, 2 tripwire).
int run_and_write(const ExperimentConfig & cfg);

// RF_WORKERS when set, else the given count.
int effective_workers(int configured);

} // namespace rf
