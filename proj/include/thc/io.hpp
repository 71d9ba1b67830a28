#ifndef THC_IO_HPP
#define THC_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "thc/counting.hpp"
#include "thc/tile.hpp"
#include "thc/transfer.hpp"

namespace thc::io {

// {"name": str, "vertices": int, "edges": [[int,int],...],
//  "left_wall": [...], "right_wall": [...]}
Tile load_tile_file(const std::filesystem::path& path);
Tile tile_from_json(const nlohmann::json& j);

// {"tile_files": [path,...], "tiles": [name,...]} or
// {"tile_files": [path,...], "tile": name, "repeat": int}
TileSequence load_graph_file(const std::filesystem::path& path);

// thc-matrix/1
nlohmann::json matrix_to_json(const BlockTransferMatrix& m, const std::string& tile_hash);
BlockTransferMatrix matrix_from_json(const nlohmann::json& j, std::string* tile_hash = nullptr);
void save_matrix_file(const std::filesystem::path& path, const BlockTransferMatrix& m,
                      const std::string& tile_hash);
BlockTransferMatrix load_matrix_file(const std::filesystem::path& path,
                                     std::string* tile_hash = nullptr);

// Per-(tile_hash, k) matrix cache under a directory; load revalidates shape.
class MatrixCache {
public:
    explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<BlockTransferMatrix> load(const Tile& tile, int k) const;
    void store(const Tile& tile, int k, const BlockTransferMatrix& m) const;

    // Provider that consults the cache before building.
    MatrixProvider provider(int threads = 1) const;

private:
    std::filesystem::path dir_;
};

MatrixProvider direct_provider(int threads = 1);

// thc-report/1; timings live under "timings", everything else is stable.
nlohmann::json report_to_json(const CountReport& report, bool include_timings = true);
std::string report_to_table(const CountReport& report);

}  // namespace thc::io

#endif
