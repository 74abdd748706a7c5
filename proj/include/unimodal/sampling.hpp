#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "unimodal/counting.hpp"
#include "unimodal/sequences.hpp"

namespace unimodal {

enum class SamplingMode { Exact, HighPrecision };

const char* sampling_mode_name(SamplingMode mode);

struct SamplerConfig {
    Family family = Family::Unrestricted;
    long n = 0;
    std::uint64_t seed = 0;
    SamplingMode mode = SamplingMode::Exact;
    long exact_threshold = 2000;
};

// splitmix64 of (seed + index * golden gamma); the per-worker / per-sample
// stream derivation. Fixed here so results are reproducible across worker
// counts.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Pinned generator: the GMP Mersenne Twister, seeded from a 64-bit value.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    ~Rng();
    Rng(const Rng&) = delete;
    Rng& operator=(const Rng&) = delete;

    BigInt below(const BigInt& bound);  // uniform integer in [0, bound)
    mpf_class unit();                   // uniform in [0,1) at kHighPrecisionBits

private:
    gmp_randstate_t state_;
};

// Uniform partition of a into parts <= K (distinct parts for Distinct),
// returned weakly decreasing. Exactly uniform: every decision draws a uniform
// integer below an exact count. Throws ImpossibleInstanceError when no such
// partition exists.
std::vector<long> sample_bounded(BoundedKind kind, long a, long K,
                                 const BoundedTable& table, Rng& rng);

// Exact (or high-precision) uniform sampler over one family at fixed n.
// Sample i is drawn from the stream seeded with derive_seed(seed, i), so the
// output is independent of batching. Thread-unsafe per instance; the
// underlying tables are shared read-only.
class Sampler {
public:
    explicit Sampler(SamplerConfig config);
    Sampler(SamplerConfig config, TableSet tables);          // Exact mode
    Sampler(SamplerConfig config, FloatTableSet tables);     // HighPrecision mode
    ~Sampler();
    Sampler(Sampler&&) noexcept;
    Sampler& operator=(Sampler&&) noexcept;

    const SamplerConfig& config() const { return config_; }

    UnimodalSequence next();             // unimodal families only
    Overpartition next_overpartition();  // Family::Overpartition only

    // Echoed in batch headers so consumers can detect mismatched tables.
    std::string table_checksum() const;

    struct Impl;

private:
    SamplerConfig config_;
    std::uint64_t next_index_ = 0;
    std::unique_ptr<Impl> impl_;
};

} // namespace unimodal
