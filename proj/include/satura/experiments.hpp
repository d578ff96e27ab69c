#pragma once

// Batch runners for randomized g_i trials, g_i tables and Hilbert tables,
// plus their JSON/CSV reports.  Work is spread across threads one trial or
// cell at a time; each result depends only on its own seed.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "satura/problems.hpp"

namespace satura::experiments {

inline constexpr int kSchemaVersion = 1;

/// SATURA_THREADS if set and positive, else the hardware concurrency (at least 1).
unsigned default_threads();

/// Known g_i for a built-in problem, if any.
std::optional<std::size_t> reference_value(const std::string& problem, std::size_t i);

/// 60 s for i >= 5, unlimited below.
std::optional<std::chrono::milliseconds> default_timeout(std::size_t i);

enum class Outcome { Value, Unit, PositiveDimensional, Timeout, Error };

std::string to_string(Outcome o);

struct TrialResult {
    Outcome outcome = Outcome::Error;
    std::size_t value = 0;
    double elapsed_ms = 0;
    std::string message; // error text for Outcome::Error
};

struct Histogram {
    std::map<std::size_t, std::size_t> values;
    std::size_t unit = 0;
    std::size_t positive_dimensional = 0;
    std::size_t timeout = 0;
    std::size_t error = 0;

    std::size_t total() const;
    friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct TimeSummary {
    double min_ms = 0, median_ms = 0, mean_ms = 0, max_ms = 0;
};

struct TrialReport {
    std::string problem;
    std::size_t i = 0;
    std::uint64_t prime = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> reference; // absent: no reference, successes stay 0
    std::size_t successes = 0;
    Histogram histogram;
    double wall_ms = 0;
    TimeSummary times;
};

struct RunOptions {
    unsigned threads = 0; // 0: default_threads()
    std::optional<std::chrono::milliseconds> timeout; // unset: default_timeout(i)
    std::optional<std::size_t> reference;             // unset: reference_value(problem, i)
};

/// N compute_gi calls with seeds trial_seed(seed, t).  Per-trial failures land
/// in the histogram.  Throws PrimeTooSmall, InvalidArgument before any trial runs.
TrialReport run_trials(const problems::ProblemInstance& inst, std::size_t i, std::uint64_t p, std::size_t n_trials,
                       std::uint64_t seed, const RunOptions& opts = {});

/// Seed of a (i, p) table cell, independent of the other cells requested.
std::uint64_t cell_seed(std::uint64_t master, std::size_t i, std::uint64_t p);

struct GiCell {
    std::size_t i = 0;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    Outcome outcome = Outcome::Error;
    std::optional<std::size_t> value;
    double elapsed_ms = 0;
    std::string message;
};

struct GiTable {
    std::string problem;
    std::uint64_t seed = 0;
    std::vector<GiCell> cells; // row-major over (prime, i) as requested

    bool has_failures() const;
};

struct TableOptions {
    unsigned threads = 0;
    std::optional<std::chrono::milliseconds> timeout; // unset: default_timeout(i)
    /// Completed cells are stored here after each cell and reused on rerun.
    std::optional<std::string> checkpoint_path;
};

GiTable gi_table(const problems::ProblemInstance& inst, const std::vector<std::size_t>& i_list,
                 const std::vector<std::uint64_t>& primes, std::uint64_t seed, const TableOptions& opts = {});

struct HilbertRow {
    std::size_t i = 0;
    Outcome outcome = Outcome::Error;
    std::vector<std::size_t> values; // HF(0..d_max) when computed
    double elapsed_ms = 0;
    std::string message;
};

struct HilbertTable {
    std::string problem;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    unsigned d_max = 0;
    std::vector<HilbertRow> rows;

    bool has_failures() const;
};

HilbertTable hilbert_table(const problems::ProblemInstance& inst, const std::vector<std::size_t>& i_list,
                           std::uint64_t p, unsigned d_max, std::uint64_t seed, const TableOptions& opts = {});

nlohmann::ordered_json to_json(const TrialReport& r);
nlohmann::ordered_json to_json(const GiTable& t);
nlohmann::ordered_json to_json(const HilbertTable& t);
std::string to_csv(const TrialReport& r);
std::string to_csv(const GiTable& t);
std::string to_csv(const HilbertTable& t);

} // namespace satura::experiments
