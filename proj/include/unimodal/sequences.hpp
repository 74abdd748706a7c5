#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unimodal/errors.hpp"

namespace unimodal {

enum class Family { Unrestricted, Strong, SemiStrict, Overpartition };

const char* family_name(Family f);
Family family_from_name(const std::string& name); // throws ValidationError

// Membership of a part list in each unimodal family.
struct FamilyMembership {
    bool unrestricted = false;
    bool strong = false;
    bool semi_strict = false;
};

// Validates the parts (nonempty, all >= 1) and reports which families contain them.
// A list belongs to Unrestricted iff it increases weakly then decreases weakly.
FamilyMembership classify(const std::vector<long>& parts);

struct PeakInfo {
    std::size_t leftmost_index = 0; // 1-based position of the leftmost peak
    long peak_value = 0;
    std::size_t multiplicity = 0;   // number of parts equal to the maximum
};

// A unimodal sequence of positive integers. Immutable after construction.
class UnimodalSequence {
public:
    // Throws ValidationError unless parts is nonempty, positive and unimodal.
    static UnimodalSequence from_parts(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long long size() const { return size_; }

    bool operator==(const UnimodalSequence& other) const { return parts_ == other.parts_; }

private:
    UnimodalSequence() = default;
    std::vector<long> parts_;
    long long size_ = 0;
};

PeakInfo peak_info(const UnimodalSequence& seq);

// A weakly decreasing partition where the last occurrence of a value may be marked.
class Overpartition {
public:
    // Throws ValidationError unless parts is weakly decreasing and positive,
    // marked is parallel to parts, and each marked flag sits on the last
    // occurrence of its value (at most one mark per distinct value).
    static Overpartition from_parts(std::vector<long> parts, std::vector<bool> marked);

    static Overpartition empty();

    const std::vector<long>& parts() const { return parts_; }
    const std::vector<bool>& marked() const { return marked_; }
    long long size() const { return size_; }

    bool operator==(const Overpartition& other) const {
        return parts_ == other.parts_ && marked_ == other.marked_;
    }

private:
    Overpartition() = default;
    std::vector<long> parts_;
    std::vector<bool> marked_;
    long long size_ = 0;
};

// Exhaustive enumeration oracles. Lexicographic order on part lists; for
// overpartitions the marked-flag vector breaks ties (false < true).
// Throws ResourceError above the bound, ValidationError for n < 1 (n < 0 for
// overpartitions; the empty overpartition of size 0 exists).
std::vector<UnimodalSequence> enumerate_family(Family family, long n, long bound = 30);
std::vector<Overpartition> enumerate_overpartitions(long n, long bound = 25);

} // namespace unimodal
