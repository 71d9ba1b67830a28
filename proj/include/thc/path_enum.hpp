#ifndef THC_PATH_ENUM_HPP
#define THC_PATH_ENUM_HPP

#include "thc/bigint.hpp"
#include "thc/indexing.hpp"
#include "thc/tile.hpp"
#include "thc/transfer.hpp"

namespace thc {

// One matrix entry: k vertex-disjoint left-to-right path systems in a tile.
struct EntryQuery {
    const Tile* tile = nullptr;
    int k = 0;
    indexing::EndpointString b;   // over left wall positions
    indexing::EndpointString c;   // over right wall positions
    indexing::RemainderMask d;    // remaining left wall coverage
    indexing::RemainderMask e;    // remaining right wall coverage
};

// Number of sets of k pairwise vertex-disjoint simple paths where path j runs
// from left position b[j] to right position c[j], every internal vertex lies
// on some path, and a remaining wall vertex is touched iff its mask bit is 1.
BigInt count_path_systems(const EntryQuery& q);

// Dense flattened matrix; entry layout per canonical family orders.
BlockTransferMatrix build_transfer_matrix(const Tile& tile, int k, int threads = 1);

}  // namespace thc

#endif
