// Command-line front end: exact counts, enumeration, exact uniform sampling,
// limit-curve tabulation, Monte Carlo shape verification, saddle diagnostics
// and the semi-strict <-> overpartition bijection.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "unimodal/asymptotics.hpp"
#include "unimodal/bijection.hpp"
#include "unimodal/counting.hpp"
#include "unimodal/curves.hpp"
#include "unimodal/experiments.hpp"
#include "unimodal/sampling.hpp"
#include "unimodal/serialization.hpp"
#include "unimodal/svg.hpp"

namespace {

constexpr const char* kVersion = "unimodal-shapes 0.1.0";

// 0 success, 2 usage, 3 validation, 4 resource, 5 threshold failure
enum ExitCode { kOk = 0, kUsage = 2, kValidation = 3, kResource = 4, kThreshold = 5 };

std::string argv_echo(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
    return os.str();
}

struct Output {
    std::string path;   // empty: stdout
    std::string format; // csv, json, svg
    std::string echo;

    void write(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream file(path);
        if (!file) throw unimodal::ValidationError("cannot open output file: " + path);
        if (format == "json") {
            file << nlohmann::json{{"tool", kVersion}, {"args", echo}}.dump() << "\n";
        } else {
            file << "# " << kVersion << " | " << echo << "\n";
        }
        file << body;
    }
};

unimodal::SamplingMode mode_from_name(const std::string& name) {
    if (name == "exact") return unimodal::SamplingMode::Exact;
    if (name == "highprecision" || name == "hp")
        return unimodal::SamplingMode::HighPrecision;
    throw unimodal::ValidationError("unknown mode: " + name);
}

} // namespace

int main(int argc, char** argv) {
    using namespace unimodal;

    CLI::App app{"Exact toolkit for unimodal sequences, overpartitions and limit shapes"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string family_name_arg = "strong";
    long n = 1600;
    double epsilon = 0.25;
    int samples = 400;
    std::uint64_t seed = 0;
    std::string mode_name = "exact";
    Output output;
    output.echo = argv_echo(argc, argv);

    std::map<const CLI::App*, std::string> default_format;
    auto add_common = [&](CLI::App* cmd, const std::string& fmt) {
        default_format[cmd] = fmt;
        cmd->add_option("--out", output.path, "output file (default: stdout)");
        cmd->add_option("--format", output.format, "csv, json or svg");
        return cmd;
    };

    // count
    auto* count_cmd = app.add_subcommand("count", "exact family count");
    count_cmd->add_option("family", family_name_arg)->required();
    count_cmd->add_option("n", n)->required();
    bool upto = false;
    count_cmd->add_flag("--upto", upto, "print counts for all sizes 0..n as CSV");
    long peak_bound = -1;
    count_cmd->add_option("--peak-bound", peak_bound, "restrict the peak to <= k");
    add_common(count_cmd, "csv");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive enumeration");
    enum_cmd->add_option("family", family_name_arg)->required();
    enum_cmd->add_option("n", n)->required();
    long enum_bound = 30;
    enum_cmd->add_option("--bound", enum_bound, "enumeration size bound");
    add_common(enum_cmd, "json");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "exact uniform samples");
    sample_cmd->add_option("--family", family_name_arg)->required();
    sample_cmd->add_option("--n", n)->required();
    sample_cmd->add_option("--samples", samples);
    sample_cmd->add_option("--seed", seed);
    sample_cmd->add_option("--mode", mode_name);
    add_common(sample_cmd, "json");

    // verify-shape
    auto* shape_cmd = app.add_subcommand("verify-shape", "Monte Carlo N_eps containment");
    shape_cmd->add_option("--family", family_name_arg);
    shape_cmd->add_option("--n", n);
    shape_cmd->add_option("--epsilon", epsilon);
    shape_cmd->add_option("--samples", samples);
    shape_cmd->add_option("--seed", seed);
    shape_cmd->add_option("--mode", mode_name);
    double min_fraction = -1.0;
    shape_cmd->add_option("--min-fraction", min_fraction,
                          "exit 5 if the containment fraction falls below this");
    add_common(shape_cmd, "json");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "sampled statistic summary");
    std::string statistic_name_arg = "parts";
    stats_cmd->add_option("--family", family_name_arg);
    stats_cmd->add_option("--n", n);
    stats_cmd->add_option("--samples", samples);
    stats_cmd->add_option("--seed", seed);
    stats_cmd->add_option("--mode", mode_name);
    stats_cmd->add_option("--statistic", statistic_name_arg,
                          "parts, rank, peak or marked_weight");
    add_common(stats_cmd, "json");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "tabulate a limit curve");
    std::string curve_name_arg;
    double step = 0.01;
    curve_cmd->add_option("curve", curve_name_arg, "f_d, f_s, f_dm, f_p, f_pbar")
        ->required();
    curve_cmd->add_option("--step", step);
    add_common(curve_cmd, "csv");

    // saddle
    auto* saddle_cmd = app.add_subcommand("saddle", "saddle-point diagnostics");
    saddle_cmd->add_option("--family", family_name_arg);
    saddle_cmd->add_option("--n", n);
    add_common(saddle_cmd, "csv");

    // bijection
    auto* bij_cmd = app.add_subcommand("bijection", "semi-strict <-> overpartition");
    std::string bij_action;
    std::string bij_input;
    std::string bij_case = "a";
    bij_cmd->add_option("action", bij_action, "map, invert or verify-exhaustive")
        ->required();
    bij_cmd->add_option("input", bij_input, "JSON record, or n for verify-exhaustive");
    bij_cmd->add_option("--case", bij_case, "a (same size) or b (size plus one)");
    add_common(bij_cmd, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    for (const CLI::App* cmd : app.get_subcommands())
        if (output.format.empty() && default_format.count(cmd))
            output.format = default_format[cmd];

    try {
        std::ostringstream body;

        if (count_cmd->parsed()) {
            Family family = family_from_name(family_name_arg);
            if (peak_bound >= 0) {
                body << peak_bounded_count(family, n, peak_bound).get_str() << "\n";
            } else if (upto) {
                write_family_counts_csv(body, family, count_family_upto(family, n));
            } else {
                body << count_family(family, n).get_str() << "\n";
            }
        } else if (enum_cmd->parsed()) {
            Family family = family_from_name(family_name_arg);
            if (family == Family::Overpartition) {
                for (const auto& op : enumerate_overpartitions(n, enum_bound))
                    body << (output.format == "svg" ? render_svg(op) : to_json_line(op) + "\n");
            } else {
                for (const auto& seq : enumerate_family(family, n, enum_bound))
                    body << (output.format == "svg" ? render_svg(seq)
                                                    : to_json_line(seq) + "\n");
            }
        } else if (sample_cmd->parsed()) {
            Family family = family_from_name(family_name_arg);
            SamplerConfig config{family, n, seed, mode_from_name(mode_name)};
            Sampler sampler(config);
            if (output.format != "svg") {
                body << nlohmann::json{{"family", family_name(family)},
                                       {"n", n},
                                       {"seed", seed},
                                       {"mode", sampling_mode_name(config.mode)},
                                       {"table_checksum", sampler.table_checksum()}}
                            .dump()
                     << "\n";
            }
            for (int i = 0; i < samples; ++i) {
                if (family == Family::Overpartition) {
                    auto op = sampler.next_overpartition();
                    body << (output.format == "svg" ? render_svg(op) : to_json_line(op) + "\n");
                } else {
                    auto seq = sampler.next();
                    body << (output.format == "svg" ? render_svg(seq)
                                                    : to_json_line(seq) + "\n");
                }
            }
        } else if (shape_cmd->parsed()) {
            ExperimentConfig config{family_from_name(family_name_arg), n,      epsilon,
                                    samples,                           seed,   mode_from_name(mode_name)};
            ShapeReport report = verify_shape(config);
            if (output.format == "csv") {
                body << "family,n,epsilon,samples,seed,containment_fraction,worst_offset\n"
                     << family_name(config.family) << ',' << n << ',' << epsilon << ','
                     << samples << ',' << seed << ',' << report.containment_fraction
                     << ',' << report.worst_offset << "\n";
            } else {
                body << report.to_json().dump() << "\n";
            }
            output.write(body.str());
            if (min_fraction >= 0 && report.containment_fraction < min_fraction)
                return kThreshold;
            return kOk;
        } else if (stats_cmd->parsed()) {
            ExperimentConfig config{family_from_name(family_name_arg), n,    epsilon,
                                    samples,                           seed, mode_from_name(mode_name)};
            StatsReport report = run_stats(config, statistic_from_name(statistic_name_arg));
            if (output.format == "csv") {
                body << "family,n,statistic,mean,stddev,median,normalized_mean,normalized_median\n"
                     << family_name(config.family) << ',' << n << ','
                     << statistic_name(report.statistic) << ',' << report.raw.mean << ','
                     << report.raw.stddev << ',' << report.raw.median << ','
                     << report.normalized.mean << ',' << report.normalized.median << "\n";
            } else {
                body << report.to_json().dump() << "\n";
            }
        } else if (curve_cmd->parsed()) {
            CurveFamily curve = curve_from_name(curve_name_arg);
            if (step <= 0) throw ValidationError("step must be positive");
            body << "family,branch,x,y\n";
            body.precision(15);
            const double lo = std::max(support_min(curve), -5.0);
            const double hi = std::min(support_max(curve), 5.0);
            for (double x = lo; x <= hi; x += step) {
                if (std::fabs(x) < 1e-12) continue; // pole / axis
                try {
                    body << curve_name(curve) << ',' << (x < 0 ? "left" : "right") << ','
                         << x << ',' << curve_eval(curve, x) << "\n";
                } catch (const DomainError&) {
                    // outside the support (Fd endpoints when stepping past them)
                }
            }
        } else if (saddle_cmd->parsed()) {
            Family family = family_from_name(family_name_arg);
            SaddleSpec spec = saddle_spec(family);
            SaddleCheck check = saddle_check(family, n);
            body << "family,n,quantity,value,reference,ratio\n";
            body.precision(12);
            body << family_name(family) << ',' << n << ",log_bound," << check.log_bound
                 << ',' << spec.growth * std::sqrt(static_cast<double>(n)) << ','
                 << check.ratio << "\n";
            if (n <= 2000) {
                const double log_count =
                    log_big(gf_coefficients(family, n)[static_cast<std::size_t>(n)]);
                body << family_name(family) << ',' << n << ",log_count," << log_count
                     << ',' << check.log_bound << ','
                     << log_count / (spec.growth * std::sqrt(static_cast<double>(n)))
                     << "\n";
            }
        } else if (bij_cmd->parsed()) {
            if (bij_action == "verify-exhaustive") {
                const long limit = bij_input.empty() ? 8 : std::stol(bij_input);
                if (limit > 12) throw ValidationError("verify-exhaustive supports n <= 12");
                for (long size = 0; size <= limit; ++size) {
                    auto overs = enumerate_overpartitions(size, 25);
                    std::size_t hits = 0;
                    for (const auto& op : overs) {
                        auto [lam, c] = overpartition_to_dm(op);
                        if (dm_to_overpartition(lam, c) == op) ++hits;
                    }
                    if (hits != overs.size())
                        throw ValidationError("bijection round trip failed at n = " +
                                              std::to_string(size));
                    body << "OK: pbar(" << size << ") = " << overs.size()
                         << " matched, round-trip clean\n";
                }
            } else if (bij_action == "map") {
                auto lam = sequence_from_json(nlohmann::json::parse(bij_input));
                auto c = bij_case == "a" ? BijectionCase::FromSameSize
                                         : BijectionCase::FromSizePlusOne;
                body << to_json_line(dm_to_overpartition(lam, c)) << "\n";
            } else if (bij_action == "invert") {
                auto op = overpartition_from_json(nlohmann::json::parse(bij_input));
                auto [lam, c] = overpartition_to_dm(op);
                nlohmann::json j = to_json(lam);
                j["case"] = (c == BijectionCase::FromSameSize) ? "a" : "b";
                body << j.dump() << "\n";
            } else {
                throw ValidationError("unknown bijection action: " + bij_action);
            }
        }

        output.write(body.str());
        return kOk;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const DomainError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const ImpossibleInstanceError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
