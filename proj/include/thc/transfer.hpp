#ifndef THC_TRANSFER_HPP
#define THC_TRANSFER_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "thc/bigint.hpp"
#include "thc/indexing.hpp"
#include "thc/tile.hpp"

namespace thc {

// Flattened block matrix: row = rank(b)*|L^r| + rank(d),
// col = rank(c)*|R^r| + rank(e). Block multiplication is then plain matrix
// multiplication in this layout.
struct BlockTransferMatrix {
    int k = 0;
    int left_wall_size = 0;
    int right_wall_size = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> values;  // row-major, rows*cols

    BigInt& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

    std::size_t left_masks() const;   // |L^r|
    std::size_t right_masks() const;  // |R^r|

    bool same_shape(const BlockTransferMatrix& o) const;
};

BlockTransferMatrix make_zero_matrix(int k, int left_wall_size, int right_wall_size);

// Within every b-block, the row for mask d holds the original row for
// flip(d); in the descending mask order that reverses block-row order.
BlockTransferMatrix bar(const BlockTransferMatrix& m);

BlockTransferMatrix multiply(const BlockTransferMatrix& a, const BlockTransferMatrix& b_bar);

enum class ProductMode { Linear, Pow };

using MatrixProvider = std::function<BlockTransferMatrix(const Tile&, int)>;

// ^{0,m}A = A_0 * bar(A_1) * ... * bar(A_m). Pow mode folds maximal runs of
// identical tiles (by canonical key) with binary exponentiation; the result
// is identical to linear mode.
BlockTransferMatrix transfer_product(const TileSequence& seq, int k, ProductMode mode,
                                     const MatrixProvider& provider);

// Uniform sequence of `count` copies of one precomputed tile matrix.
BlockTransferMatrix transfer_product_uniform(const BlockTransferMatrix& a, std::size_t count,
                                             ProductMode mode);

// Sum of the block anti-diagonal of block (b, c):
// sum_s entry(b, c, d_s, flip(d_s)). Requires equal wall sizes.
BigInt anti_diagonal_sum(const BlockTransferMatrix& m, const indexing::EndpointString& b,
                         const indexing::EndpointString& c);

}  // namespace thc

#endif
