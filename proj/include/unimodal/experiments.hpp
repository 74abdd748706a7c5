#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "unimodal/curves.hpp"
#include "unimodal/sampling.hpp"
#include "unimodal/stats.hpp"

namespace unimodal {

enum class Statistic { Parts, Rank, Peak, MarkedWeight };

const char* statistic_name(Statistic s);
Statistic statistic_from_name(const std::string& name);

struct ExperimentConfig {
    Family family = Family::Strong;
    long n = 1600;
    double epsilon = 0.25;
    int samples = 400;
    std::uint64_t seed = 0;
    SamplingMode mode = SamplingMode::Exact;
};

// Monte Carlo N_epsilon containment against the family's limit curve.
struct ShapeReport {
    ExperimentConfig config;
    int contained = 0;
    double containment_fraction = 0; // contained / samples, exactly
    double worst_offset = 0;         // largest vertex offset over all samples
    VertexDiagnostic worst_vertex;   // where it occurred

    nlohmann::json to_json() const;
};

// tables, when provided, must cover n (n+1 for overpartitions) and are
// shared read-only across calls.
ShapeReport verify_shape(const ExperimentConfig& config,
                         std::optional<TableSet> tables = std::nullopt);

struct StatsReport {
    ExperimentConfig config;
    Statistic statistic = Statistic::Parts;
    Summary raw;        // the statistic itself
    Summary normalized; // parts/sqrt(n), rank/(sqrt(n) log n / pi),
                        // peak/sqrt(n), marked_weight/n

    nlohmann::json to_json() const;
};

// Throws ValidationError on statistic/family mismatch (rank needs SemiStrict,
// marked weight needs overpartitions).
StatsReport run_stats(const ExperimentConfig& config, Statistic statistic,
                      std::optional<TableSet> tables = std::nullopt);

// Rank of a semi-strict sequence: parts right of the peak minus parts left.
long rank_statistic(const UnimodalSequence& seq);

} // namespace unimodal
