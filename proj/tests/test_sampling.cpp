#include <doctest.h>

#include <cmath>
#include <map>

#include "unimodal/sampling.hpp"
#include "unimodal/serialization.hpp"

using namespace unimodal;

TEST_CASE("seed derivation is a fixed function") {
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("rng draws below a bound") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt v = rng.below(BigInt(10));
        CHECK(v >= 0);
        CHECK(v < 10);
        double u = rng.unit().get_d();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("bounded sampling endpoints") {
    auto table = bounded_partition_table(8);
    auto dtable = bounded_distinct_table(8);
    Rng rng(3);
    CHECK(sample_bounded(BoundedKind::Partition, 0, 5, table, rng).empty());
    for (int i = 0; i < 20; ++i) {
        CHECK(sample_bounded(BoundedKind::Distinct, 6, 3, dtable, rng) ==
              std::vector<long>{3, 2, 1});
    }
    CHECK_THROWS_AS(sample_bounded(BoundedKind::Distinct, 7, 3, dtable, rng),
                    ImpossibleInstanceError);
}

TEST_CASE("bounded sampling is uniform") {
    auto table = bounded_partition_table(8);
    Rng rng(11);
    std::map<std::vector<long>, int> freq;
    const int draws = 3000;
    for (int i = 0; i < draws; ++i) ++freq[sample_bounded(BoundedKind::Partition, 4, 2, table, rng)];
    REQUIRE(freq.size() == 3);
    const double expect = draws / 3.0;
    const double sigma = std::sqrt(draws * (1.0 / 3) * (2.0 / 3));
    for (const auto& [parts, count] : freq) CHECK(std::fabs(count - expect) <= 3 * sigma);
}

namespace {

template <class Item>
void check_uniform(Family family, long n, const std::vector<Item>& support,
                   std::uint64_t seed) {
    std::map<std::string, int> freq;
    Sampler sampler({family, n, seed, SamplingMode::Exact});
    const int per = 1000;
    const int draws = per * static_cast<int>(support.size());
    for (int i = 0; i < draws; ++i) {
        if constexpr (std::is_same_v<Item, Overpartition>)
            ++freq[to_json_line(sampler.next_overpartition())];
        else
            ++freq[to_json_line(sampler.next())];
    }
    const double p = 1.0 / static_cast<double>(support.size());
    const double sigma = std::sqrt(draws * p * (1 - p));
    for (const auto& item : support) {
        const double count = freq[to_json_line(item)];
        CHECK(std::fabs(count - per) <= 3 * sigma);
    }
}

} // namespace

TEST_CASE("family samplers are uniform on small supports") {
    Sampler trivial({Family::Strong, 1, 5, SamplingMode::Exact});
    for (int i = 0; i < 10; ++i) CHECK(trivial.next().parts() == std::vector<long>{1});

    check_uniform(Family::Unrestricted, 4, enumerate_family(Family::Unrestricted, 4), 17);
    check_uniform(Family::SemiStrict, 4, enumerate_family(Family::SemiStrict, 4), 19);
    check_uniform(Family::Overpartition, 3, enumerate_overpartitions(3), 23);
}

TEST_CASE("overpartition sampler endpoints") {
    Sampler zero({Family::Overpartition, 0, 1, SamplingMode::Exact});
    for (int i = 0; i < 5; ++i) CHECK(zero.next_overpartition() == Overpartition::empty());

    std::map<std::string, int> freq;
    Sampler one({Family::Overpartition, 1, 2, SamplingMode::Exact});
    const int draws = 4000;
    for (int i = 0; i < draws; ++i) ++freq[to_json_line(one.next_overpartition())];
    REQUIRE(freq.size() == 2);
    const double sigma = std::sqrt(draws * 0.25);
    for (const auto& [k, count] : freq) CHECK(std::fabs(count - draws / 2.0) <= 3 * sigma);
}

TEST_CASE("sampling is deterministic and batch independent") {
    Sampler a({Family::SemiStrict, 60, 99, SamplingMode::Exact});
    Sampler b({Family::SemiStrict, 60, 99, SamplingMode::Exact});
    std::vector<UnimodalSequence> first;
    for (int i = 0; i < 8; ++i) first.push_back(a.next());
    for (int i = 0; i < 8; ++i) CHECK(b.next() == first[static_cast<std::size_t>(i)]);
    CHECK(a.table_checksum() == b.table_checksum());
}

TEST_CASE("samples are members of the family") {
    for (Family f : {Family::Unrestricted, Family::Strong, Family::SemiStrict}) {
        Sampler sampler({f, 80, 31, SamplingMode::Exact});
        for (int i = 0; i < 40; ++i) {
            auto seq = sampler.next();
            CHECK(seq.size() == 80);
            auto m = classify(seq.parts());
            if (f == Family::Strong) CHECK(m.strong);
            if (f == Family::SemiStrict) CHECK(m.semi_strict);
            CHECK(m.unrestricted);
        }
    }
    Sampler over({Family::Overpartition, 80, 31, SamplingMode::Exact});
    for (int i = 0; i < 40; ++i) CHECK(over.next_overpartition().size() == 80);
}

TEST_CASE("high precision mode") {
    for (Family f : {Family::Strong, Family::SemiStrict, Family::Overpartition}) {
        Sampler sampler({f, 120, 77, SamplingMode::HighPrecision});
        for (int i = 0; i < 15; ++i) {
            if (f == Family::Overpartition) {
                CHECK(sampler.next_overpartition().size() == 120);
            } else {
                auto seq = sampler.next();
                CHECK(seq.size() == 120);
                if (f == Family::Strong) CHECK(classify(seq.parts()).strong);
            }
        }
    }
}

TEST_CASE("sampler misuse") {
    Sampler s({Family::Strong, 10, 1, SamplingMode::Exact});
    CHECK_THROWS_AS(s.next_overpartition(), ValidationError);
    Sampler o({Family::Overpartition, 10, 1, SamplingMode::Exact});
    CHECK_THROWS_AS(o.next(), ValidationError);
}
