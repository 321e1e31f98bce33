#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromkit/chromatic.hpp"
#include "chromkit/io.hpp"
#include "chromkit/shift.hpp"
#include "chromkit/spectral.hpp"

namespace chromkit {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed experiment file. See configs/README.md for the schema.
struct ExperimentConfig {
    std::string experiment;
    std::optional<std::uint64_t> seed;
    std::filesystem::path output;
    std::uint64_t budget = kDefaultBudget;
    Json params = Json::object();  // experiment-specific, checked by run_experiment
};

const std::vector<std::string>& experiment_names();

/// Throws ConfigError with a location on malformed YAML or bad top-level keys.
ExperimentConfig parse_config(std::string_view yaml, std::string_view source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

struct Assertion {
    std::string name;
    bool passed = false;
    Json measured = Json::object();
};

struct ExperimentReport {
    std::string experiment;
    Json params;  // effective values, defaults filled in
    std::vector<Assertion> assertions;
    Json observations = Json::object();  // measured but not asserted
    std::vector<std::string> artifacts;  // relative to the output directory

    bool passed() const;
    Json to_json() const;
};

/// Validates the parameters, runs the pipeline and writes report.json,
/// series.csv and the artifacts under cfg.output. Throws ConfigError on
/// invalid parameters before any file is written.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

struct RoundtripOptions {
    std::size_t n = 3;
    std::size_t orders = 8;              // random BFS root orders besides the identity order
    std::size_t enumerate_max_base = 6;  // full enumeration for fragments up to this size
    std::uint64_t cap = 10'000'000;      // colorings per H' component
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
};

struct RoundtripResult {
    bool passed = false;
    Json measured;
};

/// Lifts greedy 2-colorings of the fragment to H'_n, checks properness and
/// project(lift(c)) = c; small fragments additionally get full enumeration
/// of proper n-colorings and a solver witness, all required tuple-constant.
RoundtripResult check_roundtrip(const ShiftFragment& fragment, const RoundtripOptions& opts);

Json spectral_report_to_json(const SpectralReport& r);
Json certificate_to_json(const MixingCertificate& c);

}  // namespace chromkit
