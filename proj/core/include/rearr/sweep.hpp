#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace rearr {

/// One row of a sharpness sweep.
struct SharpnessRow {
    std::string family;
    int n = 0;
    double t = 0.0;
    double delta = std::nan("");
    double epsilon = std::nan("");
    double lambda = std::nan("");
    double R = std::nan("");
    double l1 = std::nan("");
    double ratio = 0.0;
    double target = 0.0;
    double gap = 0.0;      // target - ratio
    double res_tol = 0.0;  // grid-resolution tolerance estimate (0 if exact)
};

/// Deterministic CSV assembly: header row mandatory, numbers in 17-digit
/// scientific notation, NaN cells rendered empty, LF line endings.
class CsvTable {
  public:
    using Cell = std::variant<std::string, double, std::int64_t>;

    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_comment(const std::string& text) { comments_.push_back(text); }
    void add_row(std::vector<Cell> cells);
    void sort_rows();  // lexicographic over rendered cells
    std::string str() const;
    size_t rows() const { return rows_.size(); }

  private:
    std::vector<std::string> header_;
    std::vector<std::string> comments_;
    std::vector<std::vector<std::string>> rows_;
};

std::string format_sci(double x);  // %.17e, empty for NaN

/// In-memory result of one sweep suite.
struct SweepReport {
    std::string suite;
    std::uint64_t config_hash = 0;
    double wall_seconds = 0.0;  // never serialized into the CSV
    std::vector<SharpnessRow> rows;

    CsvTable to_csv() const;
};

/// Index-chunked deterministic parallel map; falls back to serial for small
/// jobs. fn(i) must be pure.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

} // namespace rearr
