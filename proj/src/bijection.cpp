#include "unimodal/bijection.hpp"

#include <algorithm>
#include <set>

namespace unimodal {

namespace {

Overpartition assemble(std::vector<long> values, const std::set<long>& marked_values) {
    std::sort(values.begin(), values.end(), std::greater<long>());
    std::vector<bool> marked(values.size(), false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        bool last = (i + 1 == values.size()) || values[i + 1] != values[i];
        if (last && marked_values.count(values[i])) marked[i] = true;
    }
    return Overpartition::from_parts(std::move(values), std::move(marked));
}

} // namespace

Overpartition dm_to_overpartition(const UnimodalSequence& lam, BijectionCase c) {
    if (!classify(lam.parts()).semi_strict)
        throw ValidationError("sequence is not semi-strict");
    const PeakInfo info = peak_info(lam);
    const std::size_t k = info.leftmost_index - 1; // 0-based peak position
    const auto& parts = lam.parts();

    std::vector<long> values;
    std::set<long> marked_values;
    for (std::size_t i = 0; i < k; ++i) {
        values.push_back(parts[i]);
        marked_values.insert(parts[i]);
    }
    if (c == BijectionCase::FromSameSize) {
        values.push_back(info.peak_value);
        marked_values.insert(info.peak_value);
    } else if (info.peak_value > 1) {
        values.push_back(info.peak_value - 1); // unmarked; a peak of 1 vanishes
    }
    for (std::size_t i = k + 1; i < parts.size(); ++i) values.push_back(parts[i]);
    return assemble(std::move(values), marked_values);
}

std::pair<UnimodalSequence, BijectionCase> overpartition_to_dm(const Overpartition& op) {
    const auto& parts = op.parts();
    const auto& marked = op.marked();
    if (parts.empty())
        return {UnimodalSequence::from_parts({1}), BijectionCase::FromSizePlusOne};

    const long max = parts.front();
    const std::size_t max_count =
        static_cast<std::size_t>(std::count(parts.begin(), parts.end(), max));
    // The decremented peak of a FromSizePlusOne image is an unmarked maximum,
    // so a unique marked maximum discriminates the cases.
    const bool case_a = (max_count == 1) && marked.front();

    long peak;
    std::vector<long> left, right;
    bool peak_taken = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (case_a && i == 0) continue; // the marked maximum becomes the peak
        if (!case_a && !peak_taken && parts[i] == max && !marked[i]) {
            peak_taken = true; // one unmarked copy of the maximum is absorbed
            continue;
        }
        if (marked[i])
            left.push_back(parts[i]);
        else
            right.push_back(parts[i]);
    }
    peak = case_a ? max : max + 1;

    std::reverse(left.begin(), left.end()); // ascending, strictly (distinct values)
    std::vector<long> lam = left;
    lam.push_back(peak);
    lam.insert(lam.end(), right.begin(), right.end()); // already descending
    auto seq = UnimodalSequence::from_parts(std::move(lam));
    if (!classify(seq.parts()).semi_strict)
        throw ValidationError("inverse image is not semi-strict");
    return {seq, case_a ? BijectionCase::FromSameSize : BijectionCase::FromSizePlusOne};
}

long long marked_weight(const Overpartition& op) {
    long long total = 0;
    for (std::size_t i = 0; i < op.parts().size(); ++i)
        if (op.marked()[i]) total += op.parts()[i];
    return total;
}

} // namespace unimodal
