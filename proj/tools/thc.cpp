// Command-line front end: validation, counting, matrix cache, benchmark and
// comparison harness for traversing Hamiltonian cycle counts in tiled graphs.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thc/counting.hpp"
#include "thc/errors.hpp"
#include "thc/io.hpp"
#include "thc/oracle.hpp"
#include "thc/path_enum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIncompatible = 3;
constexpr int kExitNotDivisible = 4;
constexpr int kExitMismatch = 5;

using nlohmann::json;

thc::MatrixProvider make_provider(const std::string& cache_dir, int threads) {
    std::string dir = cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("THC_CACHE_DIR")) dir = env;
    if (dir.empty()) return thc::io::direct_provider(threads);
    return thc::io::MatrixCache(dir).provider(threads);
}

thc::TiledGraphSpec load_spec(const std::string& path) {
    thc::TileSequence seq = thc::io::load_graph_file(path);
    for (const thc::Tile& t : seq.tiles) {
        auto violations = thc::validate_tile(t);
        if (!violations.empty()) {
            std::string msg = "tile " + t.name + ":";
            for (const auto& v : violations) msg += " " + v + ";";
            throw thc::InvalidTile(msg);
        }
    }
    return thc::cyclize(seq, std::filesystem::path(path).stem().string());
}

int run_validate(const std::vector<std::string>& paths) {
    int worst = kExitOk;
    for (const auto& p : paths) {
        try {
            json j;
            {
                std::ifstream in(p);
                if (!in) throw thc::FormatError("cannot open " + p);
                in >> j;
            }
            if (j.contains("vertices")) {
                thc::Tile t = thc::io::tile_from_json(j);
                auto violations = thc::validate_tile(t);
                if (violations.empty()) {
                    std::cout << p << ": ok (tile " << t.name << ")\n";
                } else {
                    for (const auto& v : violations) std::cout << p << ": " << v << "\n";
                    worst = std::max(worst, kExitValidation);
                }
            } else {
                thc::TileSequence seq = thc::io::load_graph_file(p);
                bool any = false;
                for (const thc::Tile& t : seq.tiles)
                    for (const auto& v : thc::validate_tile(t)) {
                        std::cout << p << ": tile " << t.name << ": " << v << "\n";
                        any = true;
                    }
                if (any) {
                    worst = std::max(worst, kExitValidation);
                    continue;
                }
                if (!thc::cyclically_compatible(seq)) {
                    std::cout << p << ": tile sequence not cyclically compatible\n";
                    worst = std::max(worst, kExitIncompatible);
                } else if (seq.size() < 3) {
                    std::cout << p << ": cyclization needs at least 3 tiles\n";
                    worst = std::max(worst, kExitValidation);
                } else {
                    thc::cyclize(seq);
                    std::cout << p << ": ok (" << seq.size() << " tiles)\n";
                }
            }
        } catch (const thc::IncompatibleTiles& e) {
            std::cout << p << ": " << e.what() << "\n";
            worst = std::max(worst, kExitIncompatible);
        } catch (const thc::Error& e) {
            std::cout << p << ": " << e.what() << "\n";
            worst = std::max(worst, kExitValidation);
        }
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traversing Hamiltonian cycle counter for tiled graphs"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Thread bound for matrix building");

    // validate
    auto* validate = app.add_subcommand("validate", "Validate tile or graph files");
    std::vector<std::string> validate_paths;
    validate->add_option("paths", validate_paths, "Tile or graph JSON files")->required();

    // count
    auto* count = app.add_subcommand("count", "Count k-traversing Hamiltonian cycles");
    std::string count_graph, count_k = "all", count_method = "both", count_mode = "linear";
    std::string count_cache, count_format = "json";
    bool count_oracle = false;
    count->add_option("graph", count_graph, "Graph JSON file")->required();
    count->add_option("--k", count_k, "all or a specific k");
    count->add_option("--method", count_method, "paper|cycle-complete|both")
        ->check(CLI::IsMember({"paper", "cycle-complete", "both"}));
    count->add_option("--mode", count_mode, "linear|pow")
        ->check(CLI::IsMember({"linear", "pow"}));
    count->add_option("--cache", count_cache, "Matrix cache directory");
    count->add_option("--format", count_format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    count->add_flag("--oracle", count_oracle, "Also run the brute-force oracle");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Build or load a tile transfer matrix");
    std::string matrix_tile, matrix_out, matrix_cache;
    int matrix_k = 1;
    matrix->add_option("tile", matrix_tile, "Tile JSON file")->required();
    matrix->add_option("--k", matrix_k, "Number of traversing paths")->required();
    matrix->add_option("--out", matrix_out, "Output matrix file");
    matrix->add_option("--cache", matrix_cache, "Matrix cache directory");

    // bench
    auto* bench = app.add_subcommand("bench", "Time transfer products over uniform sequences");
    std::string bench_tile, bench_mode = "linear";
    int bench_k = 1, bench_repeats = 5;
    std::vector<std::size_t> bench_lengths;
    bench->add_option("tile", bench_tile, "Tile JSON file")->required();
    bench->add_option("--k", bench_k, "Number of traversing paths")->required();
    bench->add_option("--lengths", bench_lengths, "Sequence lengths")->required();
    bench->add_option("--mode", bench_mode, "linear|pow|both")
        ->check(CLI::IsMember({"linear", "pow", "both"}));
    bench->add_option("--repeats", bench_repeats, "Repeats per length (median reported)");

    // compare
    auto* compare = app.add_subcommand("compare", "Paper formula vs cycle-complete vs oracle");
    std::string compare_graph, compare_cache;
    compare->add_option("graph", compare_graph, "Graph JSON file")->required();
    compare->add_option("--cache", compare_cache, "Matrix cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return run_validate(validate_paths);

        if (*count) {
            thc::TiledGraphSpec spec = load_spec(count_graph);
            thc::CountOptions opts;
            opts.run_paper = count_method != "cycle-complete";
            opts.run_cycle_complete = count_method != "paper";
            opts.with_oracle = count_oracle;
            opts.mode = count_mode == "pow" ? thc::ProductMode::Pow : thc::ProductMode::Linear;
            if (count_k != "all") opts.only_k = std::stoi(count_k);
            auto report = thc::count_all(spec, opts, make_provider(count_cache, threads));
            if (count_format == "table")
                std::cout << thc::io::report_to_table(report);
            else
                std::cout << thc::io::report_to_json(report).dump(2) << "\n";
            for (const auto& rec : report.records)
                if (rec.paper && !rec.paper->divisible) return kExitNotDivisible;
            return kExitOk;
        }

        if (*matrix) {
            thc::Tile tile = thc::io::load_tile_file(matrix_tile);
            auto violations = thc::validate_tile(tile);
            if (!violations.empty()) {
                for (const auto& v : violations) std::cerr << matrix_tile << ": " << v << "\n";
                return kExitValidation;
            }
            auto m = make_provider(matrix_cache, threads)(tile, matrix_k);
            if (matrix_out.empty())
                std::cout << thc::io::matrix_to_json(m, thc::tile_hash(tile)).dump(2) << "\n";
            else
                thc::io::save_matrix_file(matrix_out, m, thc::tile_hash(tile));
            return kExitOk;
        }

        if (*bench) {
            thc::Tile tile = thc::io::load_tile_file(bench_tile);
            for (std::size_t len : bench_lengths)
                if (len < 3) {
                    std::cerr << "length " << len << " rejected: a tiled graph has >= 3 tiles\n";
                    return kExitValidation;
                }
            auto base = thc::build_transfer_matrix(tile, bench_k, threads);
            thc::MatrixProvider precomputed = [&](const thc::Tile&, int) { return base; };
            auto run_mode = [&](thc::ProductMode mode, const char* label) {
                std::cout << label << ":\n";
                double prev_median = 0.0;
                for (std::size_t len : bench_lengths) {
                    thc::TileSequence seq;
                    seq.tiles.assign(len, tile);
                    std::vector<double> times;
                    thc::BigInt witness = 0;
                    for (int r = 0; r < bench_repeats; ++r) {
                        auto t0 = std::chrono::steady_clock::now();
                        auto prod = thc::transfer_product(seq, bench_k, mode, precomputed);
                        auto b = thc::indexing::unrank_endpoint(prod.left_wall_size, prod.k, 0);
                        witness = thc::anti_diagonal_sum(prod, b, b);
                        times.push_back(std::chrono::duration<double>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count());
                    }
                    std::sort(times.begin(), times.end());
                    double median = times[times.size() / 2];
                    std::cout << "  length=" << len << " median_s=" << median;
                    if (prev_median > 0) std::cout << " ratio=" << median / prev_median;
                    std::cout << " witness_digits=" << thc::to_decimal(witness).size() << "\n";
                    prev_median = median;
                }
                return prev_median;
            };
            if (bench_mode == "linear" || bench_mode == "both")
                run_mode(thc::ProductMode::Linear, "linear");
            if (bench_mode == "pow" || bench_mode == "both")
                run_mode(thc::ProductMode::Pow, "pow");
            return kExitOk;
        }

        if (*compare) {
            thc::TiledGraphSpec spec = load_spec(compare_graph);
            thc::CountOptions opts;
            opts.with_oracle = true;
            auto report = thc::count_all(spec, opts, make_provider(compare_cache, threads));
            std::cout << thc::io::report_to_table(report);
            bool mismatch = false;
            for (const auto& rec : report.records) {
                std::cout << "k=" << rec.k << " paper_agrees=" << (rec.paper_agrees() ? "yes" : "no")
                          << " oracle_agrees=" << (rec.oracle_agrees() ? "yes" : "no") << "\n";
                if (!rec.oracle_agrees()) mismatch = true;
            }
            // Paper-vs-oracle disagreement is a finding, not a failure;
            // cycle-complete must match the oracle.
            return mismatch ? kExitMismatch : kExitOk;
        }
    } catch (const thc::IncompatibleTiles& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIncompatible;
    } catch (const thc::NotCyclicallyCompatible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIncompatible;
    } catch (const thc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
