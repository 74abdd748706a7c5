#include "unimodal/sequences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace unimodal {

const char* family_name(Family f) {
    switch (f) {
        case Family::Unrestricted: return "unrestricted";
        case Family::Strong: return "strong";
        case Family::SemiStrict: return "semistrict";
        case Family::Overpartition: return "overpartition";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "unrestricted" || name == "s") return Family::Unrestricted;
    if (name == "strong" || name == "d") return Family::Strong;
    if (name == "semistrict" || name == "dm") return Family::SemiStrict;
    if (name == "overpartition" || name == "pbar") return Family::Overpartition;
    throw ValidationError("unknown family: " + name);
}

namespace {

void validate_positive(const std::vector<long>& parts) {
    if (parts.empty()) throw ValidationError("parts must be nonempty");
    for (long p : parts)
        if (p < 1) throw ValidationError("parts must be positive");
}

bool is_unimodal(const std::vector<long>& parts) {
    std::size_t i = 1;
    while (i < parts.size() && parts[i - 1] <= parts[i]) ++i;
    while (i < parts.size() && parts[i - 1] >= parts[i]) ++i;
    return i == parts.size();
}

bool is_strong(const std::vector<long>& parts) {
    std::size_t i = 1;
    while (i < parts.size() && parts[i - 1] < parts[i]) ++i;
    while (i < parts.size() && parts[i - 1] > parts[i]) ++i;
    return i == parts.size();
}

// Unique peak, strict increase to its left, weak decrease to its right.
bool is_semi_strict(const std::vector<long>& parts) {
    std::size_t i = 1;
    while (i < parts.size() && parts[i - 1] < parts[i]) ++i;
    std::size_t peak = i - 1;
    if (peak + 1 < parts.size() && parts[peak + 1] >= parts[peak]) return false;
    while (i < parts.size() && parts[i - 1] >= parts[i]) ++i;
    return i == parts.size();
}

} // namespace

FamilyMembership classify(const std::vector<long>& parts) {
    validate_positive(parts);
    FamilyMembership m;
    m.unrestricted = is_unimodal(parts);
    m.strong = m.unrestricted && is_strong(parts);
    m.semi_strict = m.unrestricted && is_semi_strict(parts);
    return m;
}

UnimodalSequence UnimodalSequence::from_parts(std::vector<long> parts) {
    validate_positive(parts);
    if (!is_unimodal(parts)) throw ValidationError("parts are not unimodal");
    UnimodalSequence seq;
    seq.size_ = std::accumulate(parts.begin(), parts.end(), 0LL);
    seq.parts_ = std::move(parts);
    return seq;
}

PeakInfo peak_info(const UnimodalSequence& seq) {
    const auto& parts = seq.parts();
    long peak = *std::max_element(parts.begin(), parts.end());
    PeakInfo info;
    info.peak_value = peak;
    info.leftmost_index =
        static_cast<std::size_t>(std::find(parts.begin(), parts.end(), peak) - parts.begin()) + 1;
    info.multiplicity =
        static_cast<std::size_t>(std::count(parts.begin(), parts.end(), peak));
    return info;
}

Overpartition Overpartition::from_parts(std::vector<long> parts, std::vector<bool> marked) {
    if (parts.size() != marked.size())
        throw ValidationError("marked flags must be parallel to parts");
    for (long p : parts)
        if (p < 1) throw ValidationError("parts must be positive");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i]) throw ValidationError("parts must decrease weakly");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!marked[i]) continue;
        // Only the last occurrence of a value may carry the mark.
        if (i + 1 < parts.size() && parts[i + 1] == parts[i])
            throw ValidationError("mark must sit on the last occurrence of a value");
    }
    Overpartition op;
    op.size_ = std::accumulate(parts.begin(), parts.end(), 0LL);
    op.parts_ = std::move(parts);
    op.marked_ = std::move(marked);
    return op;
}

Overpartition Overpartition::empty() {
    return Overpartition{};
}

namespace {

// Generates every unimodal sequence of size n once, in lexicographic order.
// State: last part chosen and whether a strict decrease has happened yet.
void extend_unimodal(std::vector<long>& prefix, long remaining, long last, bool descending,
                     const std::function<void(const std::vector<long>&)>& emit) {
    if (remaining == 0) {
        emit(prefix);
        return;
    }
    long hi = descending ? std::min<long>(last, remaining) : remaining;
    for (long v = 1; v <= hi; ++v) {
        prefix.push_back(v);
        extend_unimodal(prefix, remaining - v, v, descending || v < last, emit);
        prefix.pop_back();
    }
}

bool family_accepts(Family family, const FamilyMembership& m) {
    switch (family) {
        case Family::Unrestricted: return m.unrestricted;
        case Family::Strong: return m.strong;
        case Family::SemiStrict: return m.semi_strict;
        case Family::Overpartition: break;
    }
    throw ValidationError("enumerate_family does not handle overpartitions");
}

// Weakly decreasing partitions of n, each visited once.
void extend_partition(std::vector<long>& prefix, long remaining, long cap,
                      const std::function<void(const std::vector<long>&)>& emit) {
    if (remaining == 0) {
        emit(prefix);
        return;
    }
    for (long v = 1; v <= std::min(cap, remaining); ++v) {
        prefix.push_back(v);
        extend_partition(prefix, remaining - v, v, emit);
        prefix.pop_back();
    }
}

} // namespace

std::vector<UnimodalSequence> enumerate_family(Family family, long n, long bound) {
    if (family == Family::Overpartition)
        throw ValidationError("use enumerate_overpartitions for overpartitions");
    if (n < 1) throw ValidationError("n must be >= 1 for unimodal families");
    if (n > bound) throw ResourceError("n exceeds the exhaustive-enumeration bound");
    std::vector<UnimodalSequence> out;
    std::vector<long> prefix;
    extend_unimodal(prefix, n, 0, false, [&](const std::vector<long>& parts) {
        if (family_accepts(family, classify(parts)))
            out.push_back(UnimodalSequence::from_parts(parts));
    });
    return out;
}

std::vector<Overpartition> enumerate_overpartitions(long n, long bound) {
    if (n < 0) throw ValidationError("n must be >= 0");
    if (n > bound) throw ResourceError("n exceeds the exhaustive-enumeration bound");
    std::vector<Overpartition> out;
    if (n == 0) {
        out.push_back(Overpartition::empty());
        return out;
    }
    std::vector<long> prefix;
    extend_partition(prefix, n, n, [&](const std::vector<long>& dec) {
        const std::vector<long>& parts = dec;
        // Positions eligible for a mark: last occurrence of each distinct value.
        std::vector<std::size_t> slots;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (i + 1 == parts.size() || parts[i + 1] != parts[i]) slots.push_back(i);
        // Subsets ordered so the resulting flag vectors are lexicographic.
        for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
            std::vector<bool> marked(parts.size(), false);
            for (std::size_t j = 0; j < slots.size(); ++j)
                if (mask & (1ULL << j)) marked[slots[j]] = true;
            out.push_back(Overpartition::from_parts(parts, marked));
        }
    });
    std::sort(out.begin(), out.end(), [](const Overpartition& a, const Overpartition& b) {
        if (a.parts() != b.parts()) return a.parts() < b.parts();
        return a.marked() < b.marked();
    });
    return out;
}

} // namespace unimodal
