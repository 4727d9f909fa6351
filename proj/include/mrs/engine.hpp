#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mrs/rules.hpp"

namespace mrs {

struct EngineError : MrsError {
    using MrsError::MrsError;
};

struct FiredMove {
    Move move;
    std::string rule;  // name of the fired table row
};

struct StepRecord {
    int t = 0;
    std::vector<Cell> cells;       // post-step, sorted
    std::vector<FiredMove> fired;  // ordered by mover cell (pre-step)
};

struct Trace {
    std::string field;  // "WxDxH"
    std::string mode;
    std::string table;
    uint64_t seed = 0;
    int k = 3;
    std::vector<StepRecord> steps;  // steps[0] is the initial configuration
};

// Mutable synchronous-execution state. Module identity (index) exists only
// here, to thread frames through moves; externally modules stay anonymous.
struct SimState {
    Field field;
    std::vector<Cell> modules;  // by module index
    std::vector<Rot> frames;    // by module index
    int t = 0;
    std::vector<char> visited;        // bitmap over field interior
    long long visited_count = 0;
    uint64_t seed = 0;

    Configuration configuration() const;
    bool all_visited() const { return visited_count == field.volume(); }
    bool was_visited(Cell c) const;
};

enum class MatchPolicy : uint8_t {
    Canonical,     // first (rule, rotation) match in table/group order
    SeededRandom,  // uniform among all matches, driven by the run seed
};

SimState make_sim_state(const Configuration& initial, const Field& field, uint64_t seed = 0,
                        const std::vector<Rot>& frames = {});

// One synchronous step: every module observes through its frame, matches, and
// the nonzero outputs are resolved to moves and applied atomically. Returns
// the fired moves (empty when every module output (0,0,0)). Throws
// EngineError ("unrealizable output") or StepError from apply_step.
std::vector<FiredMove> tick(SimState& state, const RuleTable& table,
                            MatchPolicy policy = MatchPolicy::Canonical,
                            std::mt19937_64* rng = nullptr);

enum class Outcome : uint8_t { Found, Exhausted, Error };

struct RunOptions {
    std::optional<Cell> target;
    long long max_steps = -1;  // -1: 200*w*d*h + 1000
    uint64_t seed = 0;
    std::vector<Rot> frames;  // empty: identity for every module
    MatchPolicy policy = MatchPolicy::Canonical;
    bool stop_on_full_coverage = false;  // stop once every interior cell was occupied
    bool record_trace = true;
};

struct RunResult {
    Outcome outcome = Outcome::Exhausted;
    long long found_at = -1;        // Found: first t with target occupied
    long long steps = 0;            // ticks executed
    bool deadlocked = false;        // no module matched anything; state is final
    long long covered_at = -1;      // first t with full coverage (if reached)
    std::vector<Cell> missing;      // unvisited interior cells at stop time
    std::string error;              // Outcome::Error diagnostic
    Trace trace;
};

long long default_max_steps(const Field& field);

RunResult run(const Configuration& initial, const Field& field, const RuleTable& table,
              const RunOptions& opts = {});

// Exact text format, bit-stable for diffing:
//   field: WxDxH / mode: ... / table: ... / seed: N / k: N
//   t=0 cells=(x,y,z);... fired=
void write_trace(const Trace& trace, std::ostream& out);
std::string trace_to_string(const Trace& trace);

// Independent replay check: every consecutive pair of records must be a legal
// synchronous step (count preserved, interior, connectivity at boundaries,
// non-empty connected statics, disjoint tracks). Returns an error description
// or nullopt. Does not call apply_step.
std::optional<std::string> validate_trace(const Trace& trace, const Field& field);

}  // namespace mrs
