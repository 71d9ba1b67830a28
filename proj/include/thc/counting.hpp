#ifndef THC_COUNTING_HPP
#define THC_COUNTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "thc/bigint.hpp"
#include "thc/oracle.hpp"
#include "thc/tile.hpp"
#include "thc/transfer.hpp"

namespace thc {

// Closed-formula value; when the pre-division sum is not divisible by k!
// the exact rational is reported instead of a rounded quotient.
struct PaperValue {
    bool divisible = true;
    BigInt value = 0;      // quotient when divisible
    BigInt numerator = 0;  // pre-division sum
    BigInt denominator = 1;
};

PaperValue thc_paper_from_product(const BlockTransferMatrix& product);
BigInt thc_cycle_complete_from_product(const BlockTransferMatrix& product);

PaperValue thc_paper(const TiledGraphSpec& spec, int k, const MatrixProvider& provider,
                     ProductMode mode = ProductMode::Linear);
BigInt thc_cycle_complete(const TiledGraphSpec& spec, int k, const MatrixProvider& provider,
                          ProductMode mode = ProductMode::Linear);

// Permutations of {0..k-1} whose cycle decomposition is a single k-cycle
// (the identity for k = 1); sigma[j] is the image of j.
std::vector<std::vector<int>> single_cycle_permutations(int k);

struct KRecord {
    int k = 0;
    std::optional<PaperValue> paper;
    std::optional<BigInt> cycle_complete;
    std::optional<BigInt> oracle;
    double seconds_product = 0.0;
    double seconds_oracle = 0.0;

    bool paper_agrees() const {
        return paper && cycle_complete && paper->divisible && paper->value == *cycle_complete;
    }
    bool oracle_agrees() const {
        return oracle && cycle_complete && *oracle == *cycle_complete;
    }
};

struct CountReport {
    std::string graph_id;
    int min_ws = 0;
    std::vector<KRecord> records;
    std::optional<BigInt> oracle_total;
    std::optional<BigInt> oracle_other;
};

struct CountOptions {
    bool run_paper = true;
    bool run_cycle_complete = true;
    bool with_oracle = false;
    ProductMode mode = ProductMode::Linear;
    int oracle_vertex_cap = 24;
    std::optional<int> only_k;  // restrict to one k
};

CountReport count_all(const TiledGraphSpec& spec, const CountOptions& opts,
                      const MatrixProvider& provider);

}  // namespace thc

#endif
