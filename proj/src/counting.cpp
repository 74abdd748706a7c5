#include "unimodal/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

namespace unimodal {

std::size_t memory_budget_bytes() {
    if (const char* env = std::getenv("UNIMODAL_MEMORY_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw ValidationError("UNIMODAL_MEMORY_BUDGET must be a positive byte count");
    }
    return std::size_t{1} << 30;
}

namespace {

// Rough per-entry footprint used only for the budget check.
constexpr std::size_t kEntryBytesEstimate = 64;

void check_budget(long max_n) {
    if (max_n < 0) throw ValidationError("table size must be >= 0");
    std::size_t entries =
        (static_cast<std::size_t>(max_n) + 1) * (static_cast<std::size_t>(max_n) + 2) / 2;
    if (entries > memory_budget_bytes() / kEntryBytesEstimate)
        throw ResourceError("count table for n = " + std::to_string(max_n) +
                            " exceeds the memory budget");
}

template <class Count>
void set_default_precision();

template <>
void set_default_precision<BigInt>() {}

template <>
void set_default_precision<mpf_class>() {
    if (mpf_get_default_prec() < kHighPrecisionBits) mpf_set_default_prec(kHighPrecisionBits);
}

} // namespace

template <class Count>
BasicBoundedTable<Count>::BasicBoundedTable(BoundedKind kind, long max_n)
    : kind_(kind), max_n_(max_n) {
    check_budget(max_n);
    set_default_precision<Count>();
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (long m = 0; m <= max_n; ++m)
        rows_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
    rows_[0][0] = 1; // the empty partition; p_{<=0}(m) = 0 for m >= 1
    for (long m = 1; m <= max_n; ++m) {
        auto& row = rows_[static_cast<std::size_t>(m)];
        row[0] = 0;
        for (long k = 1; k <= m; ++k) {
            // p_{<=k}(m) = p_{<=k-1}(m) + p_{<=k}(m-k)
            // q_{<=k}(m) = q_{<=k-1}(m) + q_{<=k-1}(m-k)
            long rest_cap = (kind_ == BoundedKind::Partition) ? k : k - 1;
            row[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k - 1)] + at(m - k, rest_cap);
        }
    }
}

template <class Count>
const Count& BasicBoundedTable<Count>::at(long m, long k) const {
    if (m < 0 || k < 0 || m > max_n_) throw ValidationError("table index out of range");
    if (k > m) k = m; // parts larger than m cannot occur
    return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

template class BasicBoundedTable<BigInt>;
template class BasicBoundedTable<mpf_class>;

BoundedTable bounded_partition_table(long max_n) {
    return BoundedTable(BoundedKind::Partition, max_n);
}

BoundedTable bounded_distinct_table(long max_n) {
    return BoundedTable(BoundedKind::Distinct, max_n);
}

template <class Count>
BasicTableSet<Count> BasicTableSet<Count>::build(long max_n) {
    BasicTableSet<Count> t;
    t.partitions =
        std::make_shared<BasicBoundedTable<Count>>(BoundedKind::Partition, max_n);
    t.distinct =
        std::make_shared<BasicBoundedTable<Count>>(BoundedKind::Distinct, max_n);
    return t;
}

template <class Count>
long BasicTableSet<Count>::max_n() const {
    return partitions ? partitions->max_n() : -1;
}

template struct BasicTableSet<BigInt>;
template struct BasicTableSet<mpf_class>;

template <class Count>
Count peak_term(Family family, const BasicTableSet<Count>& tables, long n, long m) {
    if (m < 1 || m > n) return Count(0);
    const auto& p = *tables.partitions;
    const auto& q = *tables.distinct;
    Count sum(0);
    const long rest = n - m;
    for (long a = 0; a <= rest; ++a) {
        const long b = rest - a;
        switch (family) {
            case Family::Strong:
                sum += q.at(a, m - 1) * q.at(b, m - 1);
                break;
            case Family::Unrestricted:
                // Exactly one copy of the peak sits left of the cut; further
                // copies are generated on the right.
                sum += p.at(a, m - 1) * p.at(b, m);
                break;
            case Family::SemiStrict:
                sum += q.at(a, m - 1) * p.at(b, m - 1);
                break;
            case Family::Overpartition:
                throw ValidationError("overpartitions have no peak decomposition");
        }
    }
    return sum;
}

template BigInt peak_term<BigInt>(Family, const BasicTableSet<BigInt>&, long, long);
template mpf_class peak_term<mpf_class>(Family, const BasicTableSet<mpf_class>&, long, long);

BigInt peak_bounded_count(Family family, const TableSet& tables, long n, long k) {
    if (n < 0) throw ValidationError("n must be >= 0");
    if (k < 1) throw ValidationError("k must be >= 1");
    BigInt total(0);
    for (long m = 1; m <= std::min(n, k); ++m) total += peak_term(family, tables, n, m);
    return total;
}

BigInt peak_bounded_count(Family family, long n, long k) {
    return peak_bounded_count(family, TableSet::build(n), n, k);
}

BigInt count_family(Family family, const TableSet& tables, long n) {
    if (n < 0) throw ValidationError("n must be >= 0");
    if (family == Family::Overpartition) return gf_coefficients(family, n).back();
    if (n == 0) return BigInt(0);
    return peak_bounded_count(family, tables, n, n);
}

BigInt count_family(Family family, long n) {
    if (n < 0) throw ValidationError("n must be >= 0");
    if (family == Family::Overpartition) return gf_coefficients(family, n).back();
    if (n == 0) return BigInt(0);
    return count_family(family, TableSet::build(n), n);
}

std::vector<BigInt> count_family_upto(Family family, long N) {
    if (N < 0) throw ValidationError("N must be >= 0");
    if (family == Family::Overpartition) return gf_coefficients(family, N);
    TableSet tables = TableSet::build(N);
    std::vector<BigInt> counts(static_cast<std::size_t>(N) + 1, BigInt(0));
    for (long n = 1; n <= N; ++n)
        for (long m = 1; m <= n; ++m)
            counts[static_cast<std::size_t>(n)] += peak_term(family, tables, n, m);
    return counts;
}

namespace {

// In-place multiply by (1 + q^j), truncated at degree N.
void mul_one_plus(std::vector<BigInt>& poly, long j) {
    for (long i = static_cast<long>(poly.size()) - 1; i >= j; --i)
        poly[static_cast<std::size_t>(i)] += poly[static_cast<std::size_t>(i - j)];
}

// In-place multiply by 1 / (1 - q^j), truncated at degree N.
void mul_geometric(std::vector<BigInt>& poly, long j) {
    for (long i = j; i < static_cast<long>(poly.size()); ++i)
        poly[static_cast<std::size_t>(i)] += poly[static_cast<std::size_t>(i - j)];
}

std::vector<BigInt> overpartition_product(long N) {
    std::vector<BigInt> poly(static_cast<std::size_t>(N) + 1, BigInt(0));
    poly[0] = 1;
    for (long j = 1; j <= N; ++j) {
        mul_one_plus(poly, j);
        mul_geometric(poly, j);
    }
    return poly;
}

} // namespace

std::vector<BigInt> gf_coefficients(Family family, long N) {
    if (N < 0) throw ValidationError("N must be >= 0");
    check_budget(N); // same O(N^2) work scale as the tables
    const std::size_t len = static_cast<std::size_t>(N) + 1;
    switch (family) {
        case Family::Strong: {
            // D(q) = sum_{m>=0} q^{m+1} prod_{j<=m} (1+q^j)^2
            std::vector<BigInt> coeff(len, BigInt(0));
            std::vector<BigInt> prod(len, BigInt(0));
            prod[0] = 1;
            for (long m = 0; m + 1 <= N; ++m) {
                if (m >= 1) {
                    mul_one_plus(prod, m);
                    mul_one_plus(prod, m);
                }
                for (long i = 0; i + m + 1 <= N; ++i)
                    coeff[static_cast<std::size_t>(i + m + 1)] +=
                        prod[static_cast<std::size_t>(i)];
            }
            return coeff;
        }
        case Family::Unrestricted: {
            // ST(q) = prod_m (1-q^m)^{-2} * L(q),
            // L(q) = sum_{m>=1} (-1)^{m+1} q^{m(m+1)/2}
            std::vector<BigInt> prod(len, BigInt(0));
            prod[0] = 1;
            for (long m = 1; m <= N; ++m) {
                mul_geometric(prod, m);
                mul_geometric(prod, m);
            }
            std::vector<BigInt> coeff(len, BigInt(0));
            for (long m = 1; m * (m + 1) / 2 <= N; ++m) {
                const long tri = m * (m + 1) / 2;
                const int sign = (m % 2 == 1) ? 1 : -1;
                for (long i = 0; i + tri <= N; ++i) {
                    if (sign > 0)
                        coeff[static_cast<std::size_t>(i + tri)] +=
                            prod[static_cast<std::size_t>(i)];
                    else
                        coeff[static_cast<std::size_t>(i + tri)] -=
                            prod[static_cast<std::size_t>(i)];
                }
            }
            return coeff;
        }
        case Family::SemiStrict: {
            // (1+q)/q * Dm(q) equals the overpartition product, so
            // dm(n+1) = pbar(n) - dm(n) with dm(0) = 0.
            std::vector<BigInt> pbar = overpartition_product(N);
            std::vector<BigInt> coeff(len, BigInt(0));
            for (long n = 0; n + 1 <= N; ++n)
                coeff[static_cast<std::size_t>(n + 1)] =
                    pbar[static_cast<std::size_t>(n)] - coeff[static_cast<std::size_t>(n)];
            return coeff;
        }
        case Family::Overpartition:
            return overpartition_product(N);
    }
    throw ValidationError("unknown family");
}

void write_family_counts_csv(std::ostream& out, Family family,
                             const std::vector<BigInt>& counts) {
    out << "family,n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n)
        out << family_name(family) << ',' << n << ',' << counts[n].get_str() << '\n';
}

void write_bounded_table_csv(std::ostream& out, const BoundedTable& table) {
    out << "kind,n,k,count\n";
    const char* kind = table.kind() == BoundedKind::Partition ? "partition" : "distinct";
    for (long m = 0; m <= table.max_n(); ++m)
        for (long k = 0; k <= m; ++k)
            out << kind << ',' << m << ',' << k << ',' << table.at(m, k).get_str() << '\n';
}

} // namespace unimodal
