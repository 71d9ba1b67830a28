#include "thc/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "thc/errors.hpp"
#include "thc/path_enum.hpp"

namespace thc::io {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out << text;
}

}  // namespace

Tile tile_from_json(const json& j) {
    Tile t;
    try {
        t.name = j.at("name").get<std::string>();
        t.vertex_count = j.at("vertices").get<int>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a pair");
            t.edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        t.left_wall = j.at("left_wall").get<std::vector<int>>();
        t.right_wall = j.at("right_wall").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad tile file: ") + e.what());
    }
    return t;
}

Tile load_tile_file(const std::filesystem::path& path) {
    return tile_from_json(read_json(path));
}

TileSequence load_graph_file(const std::filesystem::path& path) {
    json j = read_json(path);
    std::map<std::string, Tile> by_name;
    try {
        for (const auto& rel : j.at("tile_files")) {
            auto tp = path.parent_path() / rel.get<std::string>();
            Tile t = load_tile_file(tp);
            by_name[t.name] = std::move(t);
        }
        TileSequence seq;
        auto lookup = [&](const std::string& name) -> const Tile& {
            auto it = by_name.find(name);
            if (it == by_name.end()) throw FormatError("graph references unknown tile " + name);
            return it->second;
        };
        if (j.contains("tiles")) {
            for (const auto& name : j.at("tiles"))
                seq.tiles.push_back(lookup(name.get<std::string>()));
        } else if (j.contains("tile")) {
            int repeat = j.at("repeat").get<int>();
            if (repeat < 0) throw FormatError("repeat must be nonnegative");
            const Tile& t = lookup(j.at("tile").get<std::string>());
            seq.tiles.assign(repeat, t);
        } else {
            throw FormatError("graph file needs \"tiles\" or \"tile\"/\"repeat\"");
        }
        return seq;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad graph file: ") + e.what());
    }
}

json matrix_to_json(const BlockTransferMatrix& m, const std::string& tile_hash) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(to_decimal(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    return json{{"schema", "thc-matrix/1"}, {"tile_hash", tile_hash}, {"k", m.k},
                {"left_wall", m.left_wall_size}, {"right_wall", m.right_wall_size},
                {"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

BlockTransferMatrix matrix_from_json(const json& j, std::string* tile_hash) {
    try {
        if (j.at("schema").get<std::string>() != "thc-matrix/1")
            throw FormatError("unexpected schema " + j.at("schema").get<std::string>());
        BlockTransferMatrix m =
            make_zero_matrix(j.at("k").get<int>(), j.at("left_wall").get<int>(),
                             j.at("right_wall").get<int>());
        if (m.rows != j.at("rows").get<std::size_t>() ||
            m.cols != j.at("cols").get<std::size_t>())
            throw FormatError("matrix shape does not match its wall sizes and k");
        const auto& entries = j.at("entries");
        if (entries.size() != m.rows) throw FormatError("row count mismatch");
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (entries[r].size() != m.cols) throw FormatError("column count mismatch");
            for (std::size_t c = 0; c < m.cols; ++c)
                m.at(r, c) = from_decimal(entries[r][c].get<std::string>());
        }
        if (tile_hash) *tile_hash = j.at("tile_hash").get<std::string>();
        return m;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad matrix file: ") + e.what());
    }
}

void save_matrix_file(const std::filesystem::path& path, const BlockTransferMatrix& m,
                      const std::string& tile_hash) {
    write_text(path, matrix_to_json(m, tile_hash).dump(2) + "\n");
}

BlockTransferMatrix load_matrix_file(const std::filesystem::path& path,
                                     std::string* tile_hash) {
    return matrix_from_json(read_json(path), tile_hash);
}

std::optional<BlockTransferMatrix> MatrixCache::load(const Tile& tile, int k) const {
    auto path = dir_ / (tile_hash(tile) + "_k" + std::to_string(k) + ".json");
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::string stored_hash;
    BlockTransferMatrix m = load_matrix_file(path, &stored_hash);
    if (stored_hash != tile_hash(tile) || m.k != k ||
        m.left_wall_size != tile.left_size() || m.right_wall_size != tile.right_size())
        throw FormatError("cache entry " + path.string() + " does not match the tile");
    return m;
}

void MatrixCache::store(const Tile& tile, int k, const BlockTransferMatrix& m) const {
    std::filesystem::create_directories(dir_);
    auto path = dir_ / (tile_hash(tile) + "_k" + std::to_string(k) + ".json");
    save_matrix_file(path, m, tile_hash(tile));
}

MatrixProvider MatrixCache::provider(int threads) const {
    MatrixCache cache = *this;
    return [cache, threads](const Tile& tile, int k) {
        if (auto m = cache.load(tile, k)) return *m;
        BlockTransferMatrix m = build_transfer_matrix(tile, k, threads);
        cache.store(tile, k, m);
        return m;
    };
}

MatrixProvider direct_provider(int threads) {
    return [threads](const Tile& tile, int k) { return build_transfer_matrix(tile, k, threads); };
}

json report_to_json(const CountReport& report, bool include_timings) {
    json rows = json::array();
    json timings = json::array();
    for (const auto& rec : report.records) {
        json row{{"k", rec.k}};
        if (rec.paper) {
            row["paper"] = {{"divisible", rec.paper->divisible},
                            {"value", to_decimal(rec.paper->value)},
                            {"numerator", to_decimal(rec.paper->numerator)},
                            {"denominator", to_decimal(rec.paper->denominator)}};
        }
        if (rec.cycle_complete) row["cycle_complete"] = to_decimal(*rec.cycle_complete);
        if (rec.oracle) row["oracle"] = to_decimal(*rec.oracle);
        if (rec.paper && rec.cycle_complete) row["paper_agrees"] = rec.paper_agrees();
        if (rec.oracle && rec.cycle_complete) row["oracle_agrees"] = rec.oracle_agrees();
        rows.push_back(std::move(row));
        timings.push_back(json{{"k", rec.k},
                               {"seconds_product", rec.seconds_product},
                               {"seconds_oracle", rec.seconds_oracle}});
    }
    json out{{"schema", "thc-report/1"},
             {"graph", report.graph_id},
             {"min_ws", report.min_ws},
             {"counts", std::move(rows)}};
    if (report.oracle_total) out["oracle_total"] = to_decimal(*report.oracle_total);
    if (report.oracle_other) out["oracle_other"] = to_decimal(*report.oracle_other);
    if (include_timings) out["timings"] = std::move(timings);
    return out;
}

std::string report_to_table(const CountReport& report) {
    std::ostringstream os;
    os << "graph " << report.graph_id << "  min_ws=" << report.min_ws << "\n";
    os << "k\tpaper\tdivisible\tcycle_complete\toracle\n";
    for (const auto& rec : report.records) {
        os << rec.k << "\t";
        if (rec.paper) {
            if (rec.paper->divisible)
                os << to_decimal(rec.paper->value);
            else
                os << to_decimal(rec.paper->numerator) << "/" << to_decimal(rec.paper->denominator);
            os << "\t" << (rec.paper->divisible ? "yes" : "NO");
        } else {
            os << "-\t-";
        }
        os << "\t" << (rec.cycle_complete ? to_decimal(*rec.cycle_complete) : "-");
        os << "\t" << (rec.oracle ? to_decimal(*rec.oracle) : "-") << "\n";
    }
    if (report.oracle_total)
        os << "oracle total=" << to_decimal(*report.oracle_total)
           << " other=" << to_decimal(*report.oracle_other) << "\n";
    return os.str();
}

}  // namespace thc::io
