#pragma once

// Grid scans over (d, g) with deterministic output.  Work items are
// independent pure calls; a bounded worker pool fills an index-addressed
// result table, so the emitted bytes are identical for any worker count.
// Partial failures (vacuous queries, domain errors) become an error column
// and never abort a scan.

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "curvedim/bounds.hpp"
#include "curvedim/json_io.hpp"
#include "curvedim/numeric.hpp"
#include "curvedim/quadric.hpp"
#include "curvedim/rigidity.hpp"

namespace curvedim {

enum class ScanTarget { P3Bound, Mu, Pi, Rigidity, Quadric };
enum class ScanFormat { Csv, Json };

struct ScanRange {
    Int from;
    Int to;
    Int step{1};

    bool empty() const { return from > to; }
};

struct ScanSpec {
    ScanRange d_range;
    ScanRange g_range;        // ignored by the per-d targets (pi, rigidity, quadric)
    ScanTarget target = ScanTarget::P3Bound;
    ScanFormat format = ScanFormat::Csv;
    int workers = 1;
    Int r{3};                 // ambient dimension for the pi target
};

namespace detail {

inline bool target_uses_genus(ScanTarget t) {
    return t == ScanTarget::P3Bound || t == ScanTarget::Mu;
}

inline std::vector<std::string> scan_columns(const ScanSpec& spec) {
    switch (spec.target) {
        case ScanTarget::P3Bound: return {"d", "g", "bound", "branch", "mu", "error"};
        case ScanTarget::Mu: return {"d", "g", "mu_closed", "mu_search", "agree", "error"};
        case ScanTarget::Pi: return {"d", "r", "pi", "error"};
        case ScanTarget::Rigidity:
            return {"d", "g_star", "g_star_over_d32_approx", "error"};
        case ScanTarget::Quadric:
            return {"d", "gb_threshold", "paper_max_g", "closure_max_contiguous_g", "error"};
    }
    return {};
}

inline std::vector<std::string> scan_row(const ScanSpec& spec, const Int& d, const Int& g) {
    auto error_row = [&](std::size_t cells, const std::string& msg) {
        std::vector<std::string> row(cells);
        row[0] = d.str();
        if (target_uses_genus(spec.target)) row[1] = g.str();
        row.back() = msg;
        return row;
    };
    const std::size_t width = scan_columns(spec).size();
    try {
        switch (spec.target) {
            case ScanTarget::P3Bound: {
                const BoundCertificate c = lower_bound_p3(d, g);
                return {d.str(), g.str(), c.value.str(), provenance_name(c.provenance),
                        c.witness_s ? c.witness_s->str() : "", ""};
            }
            case ScanTarget::Mu: {
                const Int closed = mu_closed_form(d, g);
                const Int search = mu_minimal_s(d, g);
                return {d.str(), g.str(), closed.str(), search.str(),
                        closed == search ? "ok" : "mismatch", ""};
            }
            case ScanTarget::Pi:
                return {d.str(), spec.r.str(), castelnuovo_pi(d, spec.r).str(), ""};
            case ScanTarget::Rigidity: {
                const auto g_star = rigidity_threshold(d);
                if (!g_star) return {d.str(), "", "", "no_threshold"};
                return {d.str(), g_star->str(),
                        decimal_sqrt_string(*g_star * *g_star, d * d * d), ""};
            }
            case ScanTarget::Quadric: {
                const CoverageReport rep = coverage_report(d);
                const auto contiguous = closure_max_contiguous(rep);
                return {d.str(), gb_threshold(d).str(),
                        rep.paper_max_g ? rep.paper_max_g->str() : "",
                        contiguous ? contiguous->str() : "", ""};
            }
        }
    } catch (const std::exception& e) {
        return error_row(width, e.what());
    }
    return error_row(width, "unknown target");
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

inline std::string join_csv(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(cells[i]);
    }
    return out;
}

} // namespace detail

/// Runs a scan and returns the full output (CSV with a header line, or a
/// JSON array of row objects).  Byte-identical across runs and worker
/// counts; rows appear in (d, g)-lexicographic order.
inline std::string run_scan(const ScanSpec& spec) {
    if (spec.d_range.step < 1 || spec.g_range.step < 1)
        throw PreconditionError("scan: step must be >= 1");
    if (spec.workers < 1) throw PreconditionError("scan: workers must be >= 1");

    std::vector<std::pair<Int, Int>> tasks;
    for (Int d = spec.d_range.from; d <= spec.d_range.to; d += spec.d_range.step) {
        if (detail::target_uses_genus(spec.target)) {
            for (Int g = spec.g_range.from; g <= spec.g_range.to; g += spec.g_range.step)
                tasks.emplace_back(d, g);
        } else {
            tasks.emplace_back(d, 0);
        }
    }

    const auto columns = detail::scan_columns(spec);
    std::vector<std::vector<std::string>> rows(tasks.size());

    const int workers = std::min<int>(spec.workers, std::max<std::size_t>(tasks.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            rows[i] = detail::scan_row(spec, tasks[i].first, tasks[i].second);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (spec.format == ScanFormat::Csv) {
        std::string out = detail::join_csv(columns);
        out += '\n';
        for (const auto& row : rows) {
            out += detail::join_csv(row);
            out += '\n';
        }
        return out;
    }

    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json obj;
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

} // namespace curvedim
