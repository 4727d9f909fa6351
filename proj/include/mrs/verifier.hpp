#pragma once

#include "mrs/engine.hpp"
#include "mrs/statespace.hpp"

namespace mrs {

// Targetless run until every interior cell has been occupied (or the step
// budget runs out). steps is the first t with full coverage.
struct CoverageResult {
    bool covered_all = false;
    long long steps = -1;
    std::vector<Cell> missing;
    RunResult run;
};

CoverageResult coverage_run(const Configuration& initial, const Field& field, const RuleTable& table,
                            long long max_steps = -1, RunOptions base = {});

struct TargetOutcome {
    Cell target{};
    bool found = false;
    long long t = -1;
};

// Outcomes for every interior cell as target. The engine is oblivious to the
// target, so a run with a target equals the targetless run up to the first
// step the target cell is occupied; outcomes are derived from one coverage
// trace. (A sampled direct cross-check lives in the test suite.)
struct TargetSweepReport {
    bool success = false;
    std::vector<TargetOutcome> outcomes;
    CoverageResult coverage;
};

TargetSweepReport sweep_targets(const Configuration& initial, const Field& field,
                                const RuleTable& table, long long max_steps = -1);

enum class PlacementPolicy {
    All,                 // every placement of the shape inside the field
    WallRepresentative,  // one placement per wall-distance profile (capped at k)
};

// Placements as translation offsets added to the canonical shape.
std::vector<Offset> placements_for(const Shape& shape, const Field& field, PlacementPolicy policy,
                                   int k);

struct InitialSweepItem {
    int shape_index = 0;
    Offset placement{};
    bool rejected_symmetric = false;
    bool covered = false;
    long long steps = -1;
    std::string error;  // engine/step/trace-validation failure
};

struct InitialSweepReport {
    bool success = false;  // every non-rejected item covered, no errors
    long long total = 0, covered = 0, rejected = 0, failed = 0;
    std::vector<Shape> shapes;
    std::vector<InitialSweepItem> items;
};

struct SweepOptions {
    long long max_steps = -1;
    PlacementPolicy policy = PlacementPolicy::WallRepresentative;
    int placement_stride = 1;    // keep every n-th placement (sampled sweeps)
    bool validate_traces = false;  // replay-validate every run (slower)
    bool per_target = false;       // record per-target outcomes in the report text
};

// Every translation-canonical shape of table.module_count modules, at every
// placement the policy selects; shapes with a symmetric pair are rejected up
// front for modes that require asymmetric initials.
InitialSweepReport sweep_initials(const Field& field, const RuleTable& table, const SweepOptions& opts);

std::string render_report(const InitialSweepReport& report, const Field& field);
std::string render_report(const TargetSweepReport& report, const Field& field);

// Thread count for sweep fan-out: min(MRS3D_WORKERS, hardware).
int worker_count();

}  // namespace mrs
