#include "unimodal/sampling.hpp"

#include <algorithm>
#include <sstream>

#include "unimodal/bijection.hpp"

namespace unimodal {

const char* sampling_mode_name(SamplingMode mode) {
    return mode == SamplingMode::Exact ? "exact" : "highprecision";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + index * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
    gmp_randinit_mt(state_);
    mpz_class s;
    mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
    gmp_randseed(state_, s.get_mpz_t());
}

Rng::~Rng() {
    gmp_randclear(state_);
}

BigInt Rng::below(const BigInt& bound) {
    if (bound <= 0) throw ValidationError("rng bound must be positive");
    BigInt r;
    mpz_urandomm(r.get_mpz_t(), state_, bound.get_mpz_t());
    return r;
}

mpf_class Rng::unit() {
    mpf_class u(0, kHighPrecisionBits);
    mpf_urandomb(u.get_mpf_t(), state_, kHighPrecisionBits);
    return u;
}

namespace {

// A "uniform integer below the total" draw for exact counts, and its
// high-precision floating analogue.
BigInt draw_below(Rng& rng, const BigInt& total) {
    return rng.below(total);
}

mpf_class draw_below(Rng& rng, const mpf_class& total) {
    return rng.unit() * total;
}

template <class Count>
bool is_zero(const Count& v) {
    return v == 0;
}

template <class Count>
std::vector<long> sample_bounded_impl(BoundedKind kind, long a, long K,
                                      const BasicBoundedTable<Count>& table, Rng& rng) {
    if (a < 0 || K < 0) throw ValidationError("sample_bounded requires a, K >= 0");
    if (a > table.max_n()) throw ValidationError("count table does not cover a");
    if (is_zero(table.at(a, K)))
        throw ImpossibleInstanceError("no partition of this size under the part bound");
    std::vector<long> parts;
    long m = a;
    long k = std::min(K, a);
    while (m > 0) {
        k = std::min(k, m);
        // Either the largest part is < k, or a part k is removed.
        Count r = draw_below(rng, table.at(m, k));
        if (r < table.at(m, k - 1)) {
            --k;
        } else {
            parts.push_back(k);
            m -= k;
            if (kind == BoundedKind::Distinct) --k;
        }
    }
    return parts;
}

template <class Count>
struct PeakWeights {
    std::vector<Count> weight; // weight[m], m = 0..n; weight[0] = 0
    Count total;

    PeakWeights(Family family, const BasicTableSet<Count>& tables, long n)
        : weight(static_cast<std::size_t>(n) + 1, Count(0)), total(0) {
        for (long m = 1; m <= n; ++m) {
            weight[static_cast<std::size_t>(m)] = peak_term(family, tables, n, m);
            total += weight[static_cast<std::size_t>(m)];
        }
    }
};

struct FamilyCaps {
    BoundedKind left_kind, right_kind;
    long left_off, right_off; // cap = m + off
};

FamilyCaps caps_for(Family family) {
    switch (family) {
        case Family::Strong:
            return {BoundedKind::Distinct, BoundedKind::Distinct, -1, -1};
        case Family::Unrestricted:
            return {BoundedKind::Partition, BoundedKind::Partition, -1, 0};
        case Family::SemiStrict:
            return {BoundedKind::Distinct, BoundedKind::Partition, -1, -1};
        case Family::Overpartition:
            break;
    }
    throw ValidationError("no peak decomposition for overpartitions");
}

template <class Count>
const BasicBoundedTable<Count>& table_for(const BasicTableSet<Count>& tables,
                                          BoundedKind kind) {
    return kind == BoundedKind::Partition ? *tables.partitions : *tables.distinct;
}

// Peak value, then the split of the remainder, then the two halves.
template <class Count>
UnimodalSequence sample_family(Family family, long n, const BasicTableSet<Count>& tables,
                               const PeakWeights<Count>& weights, Rng& rng) {
    if (is_zero(weights.total))
        throw ImpossibleInstanceError("family is empty at this size");
    const FamilyCaps caps = caps_for(family);
    const auto& left_table = table_for(tables, caps.left_kind);
    const auto& right_table = table_for(tables, caps.right_kind);

    Count r = draw_below(rng, weights.total);
    long m = 0;
    Count cum(0);
    for (m = 1; m <= n; ++m) {
        cum += weights.weight[static_cast<std::size_t>(m)];
        if (r < cum) break;
    }
    m = std::min(m, n); // float-mode rounding guard

    const long rest = n - m;
    const long lcap = m + caps.left_off;
    const long rcap = m + caps.right_off;
    Count r2 = draw_below(rng, weights.weight[static_cast<std::size_t>(m)]);
    long a = 0;
    Count cum2(0);
    for (a = 0; a <= rest; ++a) {
        cum2 += left_table.at(a, lcap) * right_table.at(rest - a, rcap);
        if (r2 < cum2) break;
    }
    a = std::min(a, rest);

    std::vector<long> left = sample_bounded_impl(caps.left_kind, a, lcap, left_table, rng);
    std::vector<long> right =
        sample_bounded_impl(caps.right_kind, rest - a, rcap, right_table, rng);
    std::reverse(left.begin(), left.end());
    std::vector<long> parts = std::move(left);
    parts.push_back(m);
    parts.insert(parts.end(), right.begin(), right.end());
    return UnimodalSequence::from_parts(std::move(parts));
}

std::string checksum_of(const BigInt& total) {
    BigInt low = total % (BigInt(1) << 64);
    std::ostringstream os;
    os << std::hex << low.get_str(16);
    return os.str();
}

std::string checksum_of(const mpf_class& total) {
    std::ostringstream os;
    os.precision(20);
    os << total.get_d();
    return os.str();
}

} // namespace

std::vector<long> sample_bounded(BoundedKind kind, long a, long K,
                                 const BoundedTable& table, Rng& rng) {
    return sample_bounded_impl(kind, a, K, table, rng);
}

struct Sampler::Impl {
    virtual ~Impl() = default;
    virtual UnimodalSequence next(Rng& rng) = 0;
    virtual Overpartition next_overpartition(Rng& rng) = 0;
    virtual std::string checksum() const = 0;
};

namespace {

template <class Count>
struct ImplT final : Sampler::Impl {
    Family family;
    long n;
    BasicTableSet<Count> tables;
    // For overpartitions: weights over D_m(n) and D_m(n+1).
    std::unique_ptr<PeakWeights<Count>> weights, weights_plus;

    ImplT(Family family_, long n_, BasicTableSet<Count> tables_)
        : family(family_), n(n_), tables(std::move(tables_)) {
        if (family == Family::Overpartition) {
            if (tables.max_n() < n + 1)
                throw ValidationError("overpartition sampling needs tables up to n+1");
            weights =
                std::make_unique<PeakWeights<Count>>(Family::SemiStrict, tables, n);
            weights_plus =
                std::make_unique<PeakWeights<Count>>(Family::SemiStrict, tables, n + 1);
        } else {
            if (tables.max_n() < n) throw ValidationError("tables do not cover n");
            weights = std::make_unique<PeakWeights<Count>>(family, tables, n);
        }
    }

    UnimodalSequence next(Rng& rng) override {
        if (family == Family::Overpartition)
            throw ValidationError("use next_overpartition for overpartitions");
        return sample_family(family, n, tables, *weights, rng);
    }

    Overpartition next_overpartition(Rng& rng) override {
        if (family != Family::Overpartition)
            throw ValidationError("next_overpartition requires the overpartition family");
        if (n == 0) return Overpartition::empty();
        // pbar(n) = dm(n) + dm(n+1): pick the case with exact probability.
        Count pbar = weights->total + weights_plus->total;
        Count r = draw_below(rng, pbar);
        if (r < weights->total) {
            auto lam = sample_family(Family::SemiStrict, n, tables, *weights, rng);
            return dm_to_overpartition(lam, BijectionCase::FromSameSize);
        }
        auto lam = sample_family(Family::SemiStrict, n + 1, tables, *weights_plus, rng);
        return dm_to_overpartition(lam, BijectionCase::FromSizePlusOne);
    }

    std::string checksum() const override {
        Count total = weights->total;
        if (weights_plus) total += weights_plus->total;
        return checksum_of(total);
    }
};

} // namespace

Sampler::Sampler(SamplerConfig config) : config_(config) {
    const long need = config.family == Family::Overpartition ? config.n + 1 : config.n;
    if (config.mode == SamplingMode::Exact) {
        if (config.n > config.exact_threshold)
            throw ResourceError("exact mode requires n <= exact_threshold");
        impl_ = std::make_unique<ImplT<BigInt>>(config.family, config.n,
                                                TableSet::build(need));
    } else {
        impl_ = std::make_unique<ImplT<mpf_class>>(config.family, config.n,
                                                   FloatTableSet::build(need));
    }
}

Sampler::Sampler(SamplerConfig config, TableSet tables) : config_(config) {
    if (config.mode != SamplingMode::Exact)
        throw ValidationError("exact tables require exact mode");
    impl_ = std::make_unique<ImplT<BigInt>>(config.family, config.n, std::move(tables));
}

Sampler::Sampler(SamplerConfig config, FloatTableSet tables) : config_(config) {
    if (config.mode != SamplingMode::HighPrecision)
        throw ValidationError("float tables require high-precision mode");
    impl_ =
        std::make_unique<ImplT<mpf_class>>(config.family, config.n, std::move(tables));
}

Sampler::~Sampler() = default;
Sampler::Sampler(Sampler&&) noexcept = default;
Sampler& Sampler::operator=(Sampler&&) noexcept = default;

UnimodalSequence Sampler::next() {
    Rng rng(derive_seed(config_.seed, next_index_++));
    return impl_->next(rng);
}

Overpartition Sampler::next_overpartition() {
    Rng rng(derive_seed(config_.seed, next_index_++));
    return impl_->next_overpartition(rng);
}

std::string Sampler::table_checksum() const {
    return impl_->checksum();
}

} // namespace unimodal
