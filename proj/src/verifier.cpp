#include "mrs/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace mrs {

CoverageResult coverage_run(const Configuration& initial, const Field& field, const RuleTable& table,
                            long long max_steps, RunOptions base) {
    base.target.reset();
    base.max_steps = max_steps;
    base.stop_on_full_coverage = true;
    CoverageResult res;
    res.run = run(initial, field, table, base);
    res.covered_all = res.run.covered_at >= 0;
    res.steps = res.run.covered_at;
    res.missing = res.run.missing;
    return res;
}

TargetSweepReport sweep_targets(const Configuration& initial, const Field& field,
                                const RuleTable& table, long long max_steps) {
    RunOptions base;
    base.record_trace = true;
    TargetSweepReport report;
    report.coverage = coverage_run(initial, field, table, max_steps, base);

    std::map<Cell, long long> first_visit;
    for (const StepRecord& s : report.coverage.run.trace.steps)
        for (Cell c : s.cells)
            if (!first_visit.count(c)) first_visit[c] = s.t;

    report.success = true;
    for (int x = 0; x < field.w(); ++x)
        for (int y = 0; y < field.d(); ++y)
            for (int z = 0; z < field.h(); ++z) {
                Cell target{x, y, z};
                auto it = first_visit.find(target);
                TargetOutcome out;
                out.target = target;
                out.found = it != first_visit.end();
                out.t = out.found ? it->second : -1;
                if (!out.found) report.success = false;
                report.outcomes.push_back(out);
            }
    return report;
}

std::vector<Offset> placements_for(const Shape& shape, const Field& field, PlacementPolicy policy,
                                   int k) {
    Cell lo = shape.front(), hi = shape.front();
    for (Cell c : shape) {
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y), std::max(hi.z, c.z)};
    }
    std::vector<Offset> all;
    for (int x = -lo.x; x + hi.x < field.w(); ++x)
        for (int y = -lo.y; y + hi.y < field.d(); ++y)
            for (int z = -lo.z; z + hi.z < field.h(); ++z) all.push_back({x, y, z});
    if (policy == PlacementPolicy::All) return all;

    // wall-distance profile, capped at k: walls further than k are invisible
    // and cannot influence any rule, so one representative per profile
    // exhausts the observational contexts
    auto cap = [&](int v) { return std::min(v, k); };
    std::map<std::array<int, 6>, Offset> reps;
    for (Offset o : all) {
        std::array<int, 6> profile = {
            cap(lo.x + o.x), cap(field.w() - 1 - (hi.x + o.x)),
            cap(lo.y + o.y), cap(field.d() - 1 - (hi.y + o.y)),
            cap(lo.z + o.z), cap(field.h() - 1 - (hi.z + o.z)),
        };
        reps.emplace(profile, o);  // first (lex-least) placement wins
    }
    std::vector<Offset> out;
    for (auto& [profile, o] : reps) out.push_back(o);
    std::sort(out.begin(), out.end());
    return out;
}

int worker_count() {
    int hw = (int)std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("MRS3D_WORKERS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

InitialSweepReport sweep_initials(const Field& field, const RuleTable& table, const SweepOptions& opts) {
    InitialSweepReport report;
    report.shapes = enumerate_shapes(table.module_count);
    bool requires_asymmetry = table.mode != CompassMode::CommonCompass;

    struct Job {
        int shape_index;
        Offset placement;
        bool rejected;
    };
    std::vector<Job> jobs;
    for (size_t si = 0; si < report.shapes.size(); ++si) {
        const Shape& shape = report.shapes[si];
        bool rejected = requires_asymmetry && !symmetric_pairs(shape, table.mode).empty();
        if (rejected) {
            jobs.push_back({(int)si, {0, 0, 0}, true});
            continue;
        }
        auto placements = placements_for(shape, field, opts.policy, table.k);
        for (size_t pi = 0; pi < placements.size(); pi += (size_t)std::max(1, opts.placement_stride))
            jobs.push_back({(int)si, placements[pi], false});
    }

    report.items.resize(jobs.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            size_t j = next.fetch_add(1);
            if (j >= jobs.size()) return;
            const Job& job = jobs[j];
            InitialSweepItem& item = report.items[j];
            item.shape_index = job.shape_index;
            item.placement = job.placement;
            if (job.rejected) {
                item.rejected_symmetric = true;
                continue;
            }
            Configuration cfg;
            for (Cell c : report.shapes[job.shape_index]) cfg.push_back(c + job.placement);
            cfg = make_configuration(std::move(cfg));
            RunOptions base;
            base.record_trace = opts.validate_traces;
            CoverageResult cov = coverage_run(cfg, field, table, opts.max_steps, base);
            item.covered = cov.covered_all;
            item.steps = cov.steps;
            if (cov.run.outcome == Outcome::Error) item.error = cov.run.error;
            if (opts.validate_traces && item.error.empty()) {
                if (auto bad = validate_trace(cov.run.trace, field))
                    item.error = "trace validation: " + *bad;
            }
        }
    };
    int workers = std::min<int>(worker_count(), (int)jobs.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    report.total = (long long)report.items.size();
    report.success = true;
    for (const InitialSweepItem& item : report.items) {
        if (item.rejected_symmetric) ++report.rejected;
        else if (item.covered && item.error.empty()) ++report.covered;
        else {
            ++report.failed;
            report.success = false;
        }
    }
    return report;
}

std::string render_report(const InitialSweepReport& report, const Field& field) {
    std::ostringstream out;
    out << "initial sweep field=" << field.to_string() << "\n";
    for (const InitialSweepItem& item : report.items) {
        out << "shape " << item.shape_index << " @" << to_string(item.placement) << " ";
        if (item.rejected_symmetric) out << "rejected: symmetric pair";
        else if (!item.error.empty()) out << "error: " << item.error;
        else if (item.covered) out << "covered steps=" << item.steps;
        else out << "incomplete";
        out << "\n";
    }
    out << "total " << report.total << " covered " << report.covered << " rejected "
        << report.rejected << " failed " << report.failed << "\n";
    return out.str();
}

std::string render_report(const TargetSweepReport& report, const Field& field) {
    std::ostringstream out;
    out << "target sweep field=" << field.to_string() << "\n";
    for (const TargetOutcome& o : report.outcomes) {
        out << "target " << to_string(o.target) << " ";
        if (o.found) out << "found t=" << o.t;
        else out << "not found";
        out << "\n";
    }
    out << (report.success ? "all targets found" : "targets missing") << "\n";
    return out.str();
}

}  // namespace mrs
