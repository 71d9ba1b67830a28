#ifndef THC_INDEXING_HPP
#define THC_INDEXING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace thc::indexing {

// A string of k pairwise-distinct wall positions, 1-based.
// Families are ordered lexicographically ascending.
using EndpointString = std::vector<int>;

// Bit string over the wall positions not used as endpoints, in increasing
// position order; '1' = covered as path interior within this tile, '0' =
// left for the neighboring tile. Empty string when k equals the wall size.
// Families are ordered lexicographically DESCENDING (all-ones first).
using RemainderMask = std::string;

std::uint64_t endpoint_count(int wall_size, int k);   // C(ws,k) * k!
std::uint64_t mask_count(int wall_size, int k);       // 2^(ws-k)

std::vector<EndpointString> enumerate_endpoint_strings(int wall_size, int k);
std::vector<RemainderMask> enumerate_remainder_masks(int wall_size, int k);

std::uint64_t rank_endpoint(int wall_size, const EndpointString& b);
EndpointString unrank_endpoint(int wall_size, int k, std::uint64_t rank);

std::uint64_t rank_mask(const RemainderMask& m);
RemainderMask unrank_mask(int length, std::uint64_t rank);

RemainderMask flip(const RemainderMask& m);

// Right rotation by z (any integer z, taken mod k).
EndpointString shift(const EndpointString& b, int z);

// Wall positions (1-based, ascending) not present in b.
std::vector<int> remaining_positions(int wall_size, const EndpointString& b);

}  // namespace thc::indexing

#endif
