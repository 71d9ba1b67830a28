#include "thc/counting.hpp"

#include <algorithm>
#include <chrono>

#include "thc/errors.hpp"

namespace thc {

namespace {

using indexing::EndpointString;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_square(const BlockTransferMatrix& p) {
    if (p.left_wall_size != p.right_wall_size)
        throw ShapeMismatch("count formulas need a cyclized (square) product");
}

}  // namespace

PaperValue thc_paper_from_product(const BlockTransferMatrix& p) {
    require_square(p);
    const int k = p.k;
    const auto bs = indexing::enumerate_endpoint_strings(p.left_wall_size, k);

    BigInt sum = 0;
    if (k == 1) {
        for (const auto& b : bs) sum += anti_diagonal_sum(p, b, b);
        return PaperValue{true, sum, sum, BigInt(1)};
    }
    for (const auto& b : bs)
        for (int z = 1; z <= k - 1; ++z) sum += anti_diagonal_sum(p, b, indexing::shift(b, z));

    PaperValue out;
    out.numerator = sum;
    out.denominator = factorial(static_cast<unsigned>(k));
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), out.denominator.get_mpz_t());
    out.divisible = (r == 0);
    out.value = q;
    return out;
}

std::vector<std::vector<int>> single_cycle_permutations(int k) {
    std::vector<std::vector<int>> out;
    if (k == 1) {
        out.push_back({0});
        return out;
    }
    // Cycle (0 a_1 a_2 ... a_{k-1}) for every arrangement of {1..k-1}.
    std::vector<int> rest(k - 1);
    for (int i = 0; i < k - 1; ++i) rest[i] = i + 1;
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> sigma(k);
        int prev = 0;
        for (int v : rest) {
            sigma[prev] = v;
            prev = v;
        }
        sigma[prev] = 0;
        out.push_back(std::move(sigma));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

BigInt thc_cycle_complete_from_product(const BlockTransferMatrix& p) {
    require_square(p);
    const int k = p.k;
    const auto sigmas = single_cycle_permutations(k);

    // Canonical endpoint strings: strictly increasing position sequences.
    const auto bs = indexing::enumerate_endpoint_strings(p.left_wall_size, k);
    BigInt sum = 0;
    for (const auto& b : bs) {
        if (!std::is_sorted(b.begin(), b.end())) continue;
        for (const auto& sigma : sigmas) {
            EndpointString c(k);
            for (int j = 0; j < k; ++j) c[j] = b[sigma[j]];
            sum += anti_diagonal_sum(p, b, c);
        }
    }
    return sum;
}

PaperValue thc_paper(const TiledGraphSpec& spec, int k, const MatrixProvider& provider,
                     ProductMode mode) {
    if (k < 1 || k > min_ws(spec)) throw InvalidK("k out of 1..min_ws");
    return thc_paper_from_product(transfer_product(spec.sequence, k, mode, provider));
}

BigInt thc_cycle_complete(const TiledGraphSpec& spec, int k, const MatrixProvider& provider,
                          ProductMode mode) {
    if (k < 1 || k > min_ws(spec)) throw InvalidK("k out of 1..min_ws");
    return thc_cycle_complete_from_product(transfer_product(spec.sequence, k, mode, provider));
}

CountReport count_all(const TiledGraphSpec& spec, const CountOptions& opts,
                      const MatrixProvider& provider) {
    CountReport report;
    report.graph_id = spec.graph_id;
    report.min_ws = min_ws(spec);

    if (opts.only_k && (*opts.only_k < 1 || *opts.only_k > report.min_ws))
        throw InvalidK("requested k=" + std::to_string(*opts.only_k) + " outside 1..min_ws=" +
                       std::to_string(report.min_ws));

    std::optional<OracleCount> oc;
    if (opts.with_oracle) oc = oracle_count(spec, opts.oracle_vertex_cap);

    for (int k = 1; k <= report.min_ws; ++k) {
        if (opts.only_k && k != *opts.only_k) continue;
        KRecord rec;
        rec.k = k;
        auto t0 = std::chrono::steady_clock::now();
        if (opts.run_paper || opts.run_cycle_complete) {
            auto product = transfer_product(spec.sequence, k, opts.mode, provider);
            if (opts.run_paper) rec.paper = thc_paper_from_product(product);
            if (opts.run_cycle_complete)
                rec.cycle_complete = thc_cycle_complete_from_product(product);
        }
        rec.seconds_product = seconds_since(t0);
        if (oc) {
            auto it = oc->traversing.find(k);
            rec.oracle = (it == oc->traversing.end()) ? BigInt(0) : it->second;
        }
        report.records.push_back(std::move(rec));
    }
    if (oc) {
        report.oracle_total = oc->total;
        report.oracle_other = oc->other;
    }
    return report;
}

}  // namespace thc
