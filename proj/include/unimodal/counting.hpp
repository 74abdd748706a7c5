#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <vector>

#include "unimodal/sequences.hpp"

namespace unimodal {

using BigInt = mpz_class;

// Mantissa bits used by high-precision (non-exact) count tables.
inline constexpr unsigned kHighPrecisionBits = 192;

// Memory budget for count tables, overridable via UNIMODAL_MEMORY_BUDGET
// (bytes). The default admits full tables up to n ~ 2000.
std::size_t memory_budget_bytes();

enum class BoundedKind { Partition, Distinct };

// Triangular table of p_{<=k}(m) (partitions of m into parts <= k) or
// q_{<=k}(m) (distinct parts <= k). Entries with k > m alias k = m.
// Immutable after construction; concurrent reads are safe.
template <class Count>
class BasicBoundedTable {
public:
    // Throws ResourceError when the estimated footprint exceeds the budget.
    BasicBoundedTable(BoundedKind kind, long max_n);

    const Count& at(long m, long k) const;
    long max_n() const { return max_n_; }
    BoundedKind kind() const { return kind_; }

private:
    BoundedKind kind_;
    long max_n_;
    std::vector<std::vector<Count>> rows_; // rows_[m][k], 0 <= k <= m
};

using BoundedTable = BasicBoundedTable<BigInt>;
using FloatBoundedTable = BasicBoundedTable<mpf_class>;

BoundedTable bounded_partition_table(long max_n);
BoundedTable bounded_distinct_table(long max_n);

// The partition and distinct-parts tables a family decomposition needs,
// shared read-only between counters and samplers.
template <class Count>
struct BasicTableSet {
    std::shared_ptr<const BasicBoundedTable<Count>> partitions;
    std::shared_ptr<const BasicBoundedTable<Count>> distinct;

    static BasicTableSet build(long max_n);
    long max_n() const;
};

using TableSet = BasicTableSet<BigInt>;
using FloatTableSet = BasicTableSet<mpf_class>;

// One term of the peak decomposition: the number of family members of size n
// whose leftmost peak equals m.
//   strong:       sum_{a+b=n-m} q_{<=m-1}(a) q_{<=m-1}(b)
//   unrestricted: sum_{a+b=n-m} p_{<=m-1}(a) p_{<=m}(b)
//   semistrict:   sum_{a+b=n-m} q_{<=m-1}(a) p_{<=m-1}(b)
template <class Count>
Count peak_term(Family family, const BasicTableSet<Count>& tables, long n, long m);

// Family members of size n whose peak is at most k.
BigInt peak_bounded_count(Family family, const TableSet& tables, long n, long k);
BigInt peak_bounded_count(Family family, long n, long k);

// Exact family count via the peak-decomposition convolutions (for
// overpartitions, via the product generating function).
BigInt count_family(Family family, const TableSet& tables, long n);
BigInt count_family(Family family, long n);

// Convolution-route counts for every n <= N at once.
std::vector<BigInt> count_family_upto(Family family, long N);

// Coefficients 0..N of the family's generating function computed by direct
// truncated series/product arithmetic; algorithmically independent of
// count_family and used to cross-check it.
std::vector<BigInt> gf_coefficients(Family family, long N);

// CSV export (decimal strings; counts overflow native integers).
void write_family_counts_csv(std::ostream& out, Family family,
                             const std::vector<BigInt>& counts);
void write_bounded_table_csv(std::ostream& out, const BoundedTable& table);

} // namespace unimodal
