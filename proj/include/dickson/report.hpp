#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dickson/identities.hpp"
#include "dickson/koszul.hpp"
#include "dickson/sumnorm.hpp"

#include "json.hpp"

namespace dickson {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

struct GridCell {
    uint32_t p = 2;
    uint32_t n = 1;
    uint32_t i = 1;

    bool operator==(const GridCell&) const = default;
    auto operator<=>(const GridCell&) const = default;
};

// Everything a verification run depends on. Reports echo the full config,
// so equal configs (and seeds) give byte-identical reports.
struct RunConfig {
    std::vector<GridCell> grid;
    uint32_t max_m = 0;                    // 0: p + 1 at each cell
    std::vector<uint64_t> seeds = {1, 2, 3};
    uint64_t koszul_D = 0;                 // 0: 3 x the largest coefficient degree
    std::string format = "text";
    std::string out;                       // empty: standard output
    uint64_t max_dense_terms = Budget{}.max_dense_terms;

    // samples drawn per family, per seed
    uint32_t kernel_samples = 4;
    uint32_t image_samples = 4;
    uint32_t leibniz_samples = 4;
    uint32_t frobenius_samples = 4;
    uint32_t operator_samples = 2;

    bool parallel = true;

    static std::vector<GridCell> default_grid();
    Budget budget() const { return Budget{max_dense_terms}; }

    bool operator==(const RunConfig&) const = default;
    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

// A verification result as it appears in the report: timing is dropped so
// that reports depend only on (config, seeds).
struct CheckRow {
    std::string name;
    std::string params;
    std::string status;
    std::string note;
    std::optional<Witness> witness;

    bool operator==(const CheckRow& o) const;
    nlohmann::json to_json() const;
    static CheckRow from_json(const nlohmann::json& j);
};

CheckRow to_row(const VerificationResult& r);

struct IterateRow {
    uint32_t s = 0;
    uint32_t m = 0;
    std::string closed;
    std::string brute;
    bool equal = true;

    bool operator==(const IterateRow&) const = default;
    nlohmann::json to_json() const;
    static IterateRow from_json(const nlohmann::json& j);
};

// One coefficient in both coordinate systems.
struct CoeffPair {
    std::string q;  // generator coordinates
    std::string x;  // expanded term form

    bool operator==(const CoeffPair&) const = default;
    nlohmann::json to_json() const { return {{"q", q}, {"x", x}}; }
    static CoeffPair from_json(const nlohmann::json& j) { return {j.at("q"), j.at("x")}; }
};

struct CellReport {
    uint32_t p = 0, n = 0, i = 0;
    std::vector<CoeffPair> A;
    CoeffPair B;
    std::vector<CoeffPair> P;
    CoeffPair R;
    std::vector<CheckRow> checks;
    std::vector<IterateRow> iterates;
    std::string error;  // nonempty when the cell aborted on a falsification

    bool passed() const;

    bool operator==(const CellReport&) const = default;
    nlohmann::json to_json() const;
    static CellReport from_json(const nlohmann::json& j);
};

struct Report {
    std::string schema = kSchemaVersion;
    std::string version = kToolVersion;
    RunConfig config;
    std::vector<CellReport> cells;
    nlohmann::json koszul = nlohmann::json::array();
    std::string status = "pass";  // pass iff every non-vacuous check passed

    bool passed() const { return status == "pass"; }
    void refresh_status();

    bool operator==(const Report&) const = default;
    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string to_text() const;
};

// Extraction plus the full identity suite, iterate table and Margolis-style
// Koszul check at one cell. Falsifications are captured into the cell;
// budget violations propagate.
CellReport run_cell(const GridCell& cell, const RunConfig& config);
nlohmann::json run_cell_koszul(const GridCell& cell, const RunConfig& config);

// All cells of config.grid (sorted, de-duplicated), optionally in a work
// pool, assembled deterministically.
Report run_grid(const RunConfig& config);

// Pass/fail verdict of a koszul report entry produced by run_cell_koszul,
// tuan_entry or custom_entry.
std::string koszul_entry_status(const nlohmann::json& entry);

// Report entries for the standalone Koszul commands.
nlohmann::json tuan_entry(uint32_t p, size_t n, uint32_t j, uint64_t D, const Budget& budget);
nlohmann::json custom_entry(const KoszulInstance& inst, uint64_t D, const Budget& budget);

// Human-readable rendering of one koszul entry (shared by text reports).
std::string koszul_entry_text(const nlohmann::json& entry);

}  // namespace dickson
