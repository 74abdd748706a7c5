#pragma once

#include <utility>

#include "unimodal/sequences.hpp"

namespace unimodal {

// Which semi-strict set an overpartition of size n corresponds to.
// FromSameSize: the image of D_m(n); the maximum value occurs exactly once
// and that occurrence is marked. FromSizePlusOne: the image of D_m(n+1).
enum class BijectionCase { FromSameSize, FromSizePlusOne };

// Semi-strict sequence -> overpartition. FromSameSize marks the peak and the
// parts left of it; FromSizePlusOne marks only the left parts and decrements
// the peak (a peak of 1 vanishes, giving the empty overpartition).
Overpartition dm_to_overpartition(const UnimodalSequence& lam, BijectionCase c);

// Inverse direction. The empty overpartition maps to ((1), FromSizePlusOne).
// Returns the semi-strict preimage; sizes satisfy n (FromSameSize) or n+1.
std::pair<UnimodalSequence, BijectionCase> overpartition_to_dm(const Overpartition& op);

// Total weight of marked parts.
long long marked_weight(const Overpartition& op);

} // namespace unimodal
