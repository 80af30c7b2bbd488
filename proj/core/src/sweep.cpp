#include "rearr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

namespace rearr {

std::string format_sci(double x) {
    if (std::isnan(x)) return "";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17e", x);
    return buf;
}

void CsvTable::add_row(std::vector<Cell> cells) {
    std::vector<std::string> rendered;
    rendered.reserve(cells.size());
    for (auto& c : cells) {
        if (std::holds_alternative<std::string>(c)) {
            rendered.push_back(std::get<std::string>(c));
        } else if (std::holds_alternative<double>(c)) {
            rendered.push_back(format_sci(std::get<double>(c)));
        } else {
            rendered.push_back(std::to_string(std::get<std::int64_t>(c)));
        }
    }
    rows_.push_back(std::move(rendered));
}

void CsvTable::sort_rows() { std::sort(rows_.begin(), rows_.end()); }

std::string CsvTable::str() const {
    std::string out;
    for (const auto& c : comments_) out += "# " + c + "\n";
    for (size_t i = 0; i < header_.size(); ++i)
        out += (i ? "," : "") + header_[i];
    out += "\n";
    for (const auto& row : rows_) {
        for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += "\n";
    }
    return out;
}

CsvTable SweepReport::to_csv() const {
    CsvTable t({"family", "n", "t", "delta", "epsilon", "lambda", "R", "l1", "ratio",
                "target", "gap", "res_tol"});
    char meta[64];
    std::snprintf(meta, sizeof(meta), "suite=%s config=%016llx", suite.c_str(),
                  static_cast<unsigned long long>(config_hash));
    t.add_comment(meta);
    for (const auto& r : rows)
        t.add_row({r.family, std::int64_t(r.n), r.t, r.delta, r.epsilon, r.lambda, r.R,
                   r.l1, r.ratio, r.target, r.gap, r.res_tol});
    return t;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    unsigned hw = threads > 0 ? unsigned(threads) : std::thread::hardware_concurrency();
    if (hw < 2 || count < 4) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    hw = std::min<unsigned>(hw, unsigned(count));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(hw);
    for (unsigned w = 0; w < hw; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace rearr
