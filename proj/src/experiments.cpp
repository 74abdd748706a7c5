#include "unimodal/experiments.hpp"

#include <cmath>

#include "unimodal/bijection.hpp"

namespace unimodal {

const char* statistic_name(Statistic s) {
    switch (s) {
        case Statistic::Parts: return "parts";
        case Statistic::Rank: return "rank";
        case Statistic::Peak: return "peak";
        case Statistic::MarkedWeight: return "marked_weight";
    }
    return "?";
}

Statistic statistic_from_name(const std::string& name) {
    if (name == "parts") return Statistic::Parts;
    if (name == "rank") return Statistic::Rank;
    if (name == "peak") return Statistic::Peak;
    if (name == "marked_weight") return Statistic::MarkedWeight;
    throw ValidationError("unknown statistic: " + name);
}

namespace {

nlohmann::json config_json(const ExperimentConfig& c) {
    return {{"family", family_name(c.family)}, {"n", c.n},       {"epsilon", c.epsilon},
            {"samples", c.samples},            {"seed", c.seed}, {"mode", sampling_mode_name(c.mode)}};
}

Sampler make_sampler(const ExperimentConfig& c, std::optional<TableSet>& tables) {
    SamplerConfig sc{c.family, c.n, c.seed, c.mode};
    if (tables && c.mode == SamplingMode::Exact) return Sampler(sc, *tables);
    return Sampler(sc);
}

} // namespace

nlohmann::json ShapeReport::to_json() const {
    return {{"config", config_json(config)},
            {"contained", contained},
            {"containment_fraction", containment_fraction},
            {"worst_offset", worst_offset},
            {"worst_vertex", {{"x", worst_vertex.x}, {"y", worst_vertex.y}}}};
}

ShapeReport verify_shape(const ExperimentConfig& config, std::optional<TableSet> tables) {
    if (config.samples < 1) throw ValidationError("samples must be >= 1");
    ShapeReport report;
    report.config = config;
    const CurveFamily curve = curve_for_family(config.family);
    const NeighborhoodSpec spec{config.epsilon};

    Sampler sampler = make_sampler(config, tables);
    for (int i = 0; i < config.samples; ++i) {
        VertexSet vs = config.family == Family::Overpartition
                           ? overpartition_profile(sampler.next_overpartition())
                           : renormalized_vertices(sampler.next());
        ContainmentResult res = in_neighborhood(vs, curve, spec);
        if (res.contained) ++report.contained;
        if (res.worst_offset > report.worst_offset) {
            report.worst_offset = res.worst_offset;
            report.worst_vertex = res.worst_vertex;
        }
    }
    report.containment_fraction =
        static_cast<double>(report.contained) / config.samples;
    return report;
}

long rank_statistic(const UnimodalSequence& seq) {
    const PeakInfo info = peak_info(seq);
    const long left = static_cast<long>(info.leftmost_index) - 1;
    const long right = static_cast<long>(seq.parts().size()) - left - 1;
    return right - left;
}

nlohmann::json StatsReport::to_json() const {
    auto summary_json = [](const Summary& s) {
        return nlohmann::json{{"mean", s.mean},     {"stddev", s.stddev},
                              {"median", s.median}, {"min", s.min},
                              {"max", s.max}};
    };
    return {{"config", config_json(config)},
            {"statistic", statistic_name(statistic)},
            {"raw", summary_json(raw)},
            {"normalized", summary_json(normalized)}};
}

StatsReport run_stats(const ExperimentConfig& config, Statistic statistic,
                      std::optional<TableSet> tables) {
    if (config.samples < 1) throw ValidationError("samples must be >= 1");
    if (statistic == Statistic::Rank && config.family != Family::SemiStrict)
        throw ValidationError("rank is defined for semi-strict sequences only");
    if (statistic == Statistic::MarkedWeight && config.family != Family::Overpartition)
        throw ValidationError("marked weight is defined for overpartitions only");
    if (config.family == Family::Overpartition && statistic != Statistic::MarkedWeight &&
        statistic != Statistic::Parts && statistic != Statistic::Peak)
        throw ValidationError("statistic/family mismatch");

    const double sqrt_n = std::sqrt(static_cast<double>(config.n));
    const double rank_scale =
        sqrt_n * std::log(static_cast<double>(config.n)) / 3.14159265358979323846;

    Sampler sampler = make_sampler(config, tables);
    std::vector<double> raw_values, norm_values;
    raw_values.reserve(static_cast<std::size_t>(config.samples));
    for (int i = 0; i < config.samples; ++i) {
        double value = 0, normalized = 0;
        if (config.family == Family::Overpartition) {
            Overpartition op = sampler.next_overpartition();
            switch (statistic) {
                case Statistic::MarkedWeight:
                    value = static_cast<double>(marked_weight(op));
                    normalized = value / static_cast<double>(config.n);
                    break;
                case Statistic::Parts:
                    value = static_cast<double>(op.parts().size());
                    normalized = value / sqrt_n;
                    break;
                case Statistic::Peak:
                    value = op.parts().empty() ? 0.0
                                               : static_cast<double>(op.parts().front());
                    normalized = value / sqrt_n;
                    break;
                default: break;
            }
        } else {
            UnimodalSequence seq = sampler.next();
            switch (statistic) {
                case Statistic::Parts:
                    value = static_cast<double>(seq.parts().size());
                    normalized = value / sqrt_n;
                    break;
                case Statistic::Rank:
                    value = static_cast<double>(rank_statistic(seq));
                    normalized = value / rank_scale;
                    break;
                case Statistic::Peak:
                    value = static_cast<double>(peak_info(seq).peak_value);
                    normalized = value / sqrt_n;
                    break;
                default: break;
            }
        }
        raw_values.push_back(value);
        norm_values.push_back(normalized);
    }

    StatsReport report;
    report.config = config;
    report.statistic = statistic;
    report.raw = summarize(std::move(raw_values));
    report.normalized = summarize(std::move(norm_values));
    return report;
}

} // namespace unimodal
