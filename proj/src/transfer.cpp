#include "thc/transfer.hpp"

#include <map>
#include <utility>

#include "thc/errors.hpp"

namespace thc {

std::size_t BlockTransferMatrix::left_masks() const {
    return indexing::mask_count(left_wall_size, k);
}

std::size_t BlockTransferMatrix::right_masks() const {
    return indexing::mask_count(right_wall_size, k);
}

bool BlockTransferMatrix::same_shape(const BlockTransferMatrix& o) const {
    return k == o.k && left_wall_size == o.left_wall_size &&
           right_wall_size == o.right_wall_size && rows == o.rows && cols == o.cols;
}

BlockTransferMatrix make_zero_matrix(int k, int left_wall_size, int right_wall_size) {
    BlockTransferMatrix m;
    m.k = k;
    m.left_wall_size = left_wall_size;
    m.right_wall_size = right_wall_size;
    m.rows = indexing::endpoint_count(left_wall_size, k) * indexing::mask_count(left_wall_size, k);
    m.cols =
        indexing::endpoint_count(right_wall_size, k) * indexing::mask_count(right_wall_size, k);
    m.values.assign(m.rows * m.cols, BigInt(0));
    return m;
}

BlockTransferMatrix bar(const BlockTransferMatrix& m) {
    BlockTransferMatrix out = m;
    const std::size_t lr = m.left_masks();
    if (lr == 1) return out;
    for (std::size_t block = 0; block < m.rows; block += lr)
        for (std::size_t u = 0; u < lr; ++u)
            for (std::size_t c = 0; c < m.cols; ++c)
                out.at(block + u, c) = m.at(block + lr - 1 - u, c);
    return out;
}

namespace {

// out is reshaped if needed but keeps its mpz allocations otherwise, so a
// long chain of products reuses limb storage instead of reallocating each
// step. out must not alias a or b.
void multiply_into(BlockTransferMatrix& out, const BlockTransferMatrix& a,
                   const BlockTransferMatrix& b) {
    if (a.k != b.k)
        throw ShapeMismatch("multiply: k mismatch");
    if (a.right_wall_size != b.left_wall_size || a.cols != b.rows)
        throw ShapeMismatch("multiply: inner dimensions disagree");

    if (out.k != a.k || out.left_wall_size != a.left_wall_size ||
        out.right_wall_size != b.right_wall_size || out.rows != a.rows || out.cols != b.cols) {
        out = make_zero_matrix(a.k, a.left_wall_size, b.right_wall_size);
    } else {
        for (BigInt& v : out.values) mpz_set_ui(v.get_mpz_t(), 0);
    }
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t x = 0; x < a.cols; ++x) {
            const BigInt& av = a.at(i, x);
            if (av == 0) continue;
            const BigInt* brow = &b.values[x * b.cols];
            BigInt* orow = &out.values[i * out.cols];
            for (std::size_t j = 0; j < b.cols; ++j)
                mpz_addmul(orow[j].get_mpz_t(), av.get_mpz_t(), brow[j].get_mpz_t());
        }
}

}  // namespace

BlockTransferMatrix multiply(const BlockTransferMatrix& a, const BlockTransferMatrix& b) {
    BlockTransferMatrix out;
    multiply_into(out, a, b);
    return out;
}

namespace {

// base^e for e >= 1 via binary exponentiation; base must be square.
BlockTransferMatrix matrix_power(const BlockTransferMatrix& base, std::size_t e) {
    if (base.left_wall_size != base.right_wall_size)
        throw ShapeMismatch("matrix_power: matrix not square");
    BlockTransferMatrix result;
    bool have = false;
    BlockTransferMatrix sq = base;
    while (e > 0) {
        if (e & 1) {
            result = have ? multiply(result, sq) : sq;
            have = true;
        }
        e >>= 1;
        if (e > 0) sq = multiply(sq, sq);
    }
    return result;
}

}  // namespace

BlockTransferMatrix transfer_product(const TileSequence& seq, int k, ProductMode mode,
                                     const MatrixProvider& provider) {
    if (seq.tiles.empty()) throw ShapeMismatch("transfer_product: empty sequence");
    for (const Tile& t : seq.tiles)
        if (k < 1 || k > std::min(t.left_size(), t.right_size()))
            throw InvalidK("k=" + std::to_string(k) + " exceeds wall capacity of tile " + t.name);
    if (!sequence_compatible(seq)) throw IncompatibleTiles("transfer_product: sequence");

    std::map<std::string, BlockTransferMatrix> by_key;
    auto matrix_of = [&](const Tile& t) -> const BlockTransferMatrix& {
        auto key = canonical_key(t);
        auto it = by_key.find(key);
        if (it == by_key.end()) it = by_key.emplace(key, provider(t, k)).first;
        return it->second;
    };

    BlockTransferMatrix acc = matrix_of(seq.tiles[0]);

    if (mode == ProductMode::Linear) {
        std::map<std::string, BlockTransferMatrix> barred;
        BlockTransferMatrix scratch;
        for (std::size_t i = 1; i < seq.size(); ++i) {
            auto key = canonical_key(seq.tiles[i]);
            auto it = barred.find(key);
            if (it == barred.end()) it = barred.emplace(key, bar(matrix_of(seq.tiles[i]))).first;
            multiply_into(scratch, acc, it->second);
            std::swap(acc, scratch);
        }
        return acc;
    }

    // Pow mode: fold maximal runs of identical tiles. Runs are detected by
    // direct structural comparison, which is much cheaper than keying.
    auto same_tile = [](const Tile& a, const Tile& b) {
        return a.vertex_count == b.vertex_count && a.left_wall == b.left_wall &&
               a.right_wall == b.right_wall && a.edges == b.edges;
    };
    std::size_t i = 1;
    while (i < seq.size()) {
        std::size_t run = 1;
        while (i + run < seq.size() && same_tile(seq.tiles[i + run], seq.tiles[i])) ++run;
        BlockTransferMatrix factor = bar(matrix_of(seq.tiles[i]));
        acc = multiply(acc, run == 1 ? factor : matrix_power(factor, run));
        i += run;
    }
    return acc;
}

BlockTransferMatrix transfer_product_uniform(const BlockTransferMatrix& a, std::size_t count,
                                             ProductMode mode) {
    if (count == 0) throw ShapeMismatch("transfer_product_uniform: empty sequence");
    if (count == 1) return a;
    BlockTransferMatrix barred = bar(a);
    if (mode == ProductMode::Linear) {
        BlockTransferMatrix acc = a;
        BlockTransferMatrix scratch;
        for (std::size_t i = 1; i < count; ++i) {
            multiply_into(scratch, acc, barred);
            std::swap(acc, scratch);
        }
        return acc;
    }
    return multiply(a, matrix_power(barred, count - 1));
}

BigInt anti_diagonal_sum(const BlockTransferMatrix& m, const indexing::EndpointString& b,
                         const indexing::EndpointString& c) {
    if (m.left_wall_size != m.right_wall_size)
        throw ShapeMismatch("anti_diagonal_sum requires equal wall sizes");
    const std::size_t lr = m.left_masks();
    const std::size_t row0 = indexing::rank_endpoint(m.left_wall_size, b) * lr;
    const std::size_t col0 = indexing::rank_endpoint(m.right_wall_size, c) * lr;
    BigInt sum = 0;
    for (std::size_t s = 0; s < lr; ++s) sum += m.at(row0 + s, col0 + (lr - 1 - s));
    return sum;
}

}  // namespace thc
