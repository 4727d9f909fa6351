#include "mrs/engine.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mrs {

Configuration SimState::configuration() const {
    Configuration cfg = modules;
    std::sort(cfg.begin(), cfg.end());
    return cfg;
}

namespace {

size_t cell_index(const Field& f, Cell c) {
    return ((size_t)c.x * f.d() + c.y) * f.h() + c.z;
}

void mark_visited(SimState& s, Cell c) {
    size_t i = cell_index(s.field, c);
    if (!s.visited[i]) {
        s.visited[i] = 1;
        ++s.visited_count;
    }
}

}  // namespace

bool SimState::was_visited(Cell c) const { return visited[cell_index(field, c)] != 0; }

SimState make_sim_state(const Configuration& initial, const Field& field, uint64_t seed,
                        const std::vector<Rot>& frames) {
    if (field.is_unbounded()) throw EngineError("engine requires a bounded field");
    validate_configuration(initial, field);
    SimState s{field, initial, frames, 0, {}, 0, seed};
    if (s.frames.empty()) s.frames.assign(initial.size(), kIdentityRot);
    if (s.frames.size() != initial.size()) throw EngineError("frames/modules size mismatch");
    s.visited.assign((size_t)field.volume(), 0);
    for (Cell c : initial) mark_visited(s, c);
    return s;
}

long long default_max_steps(const Field& field) { return 200 * field.volume() + 1000; }

std::vector<FiredMove> tick(SimState& state, const RuleTable& table, MatchPolicy policy,
                            std::mt19937_64* rng) {
    const Configuration cfg = state.configuration();
    const auto& group = rotation_group(table.mode);

    // module order: by current cell, so fired lists come out sorted
    std::vector<size_t> order(state.modules.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return state.modules[a] < state.modules[b]; });

    struct Pending {
        size_t module;
        Offset world_out;
        std::string rule;
    };
    std::vector<Pending> pending;
    for (size_t i : order) {
        Cell at = state.modules[i];
        const Rot& frame = state.frames[i];
        Observation obs = observe(cfg, state.field, at, frame, table.k);
        // Rotation search order is seeded by the frame (R = q * frame for q in
        // group order), so the world-level decision is frame-independent.
        std::vector<Rot> rot_order(group.size());
        for (size_t g = 0; g < group.size(); ++g) rot_order[g] = compose(group[g], frame);
        Offset local_out{};
        std::string name;
        if (policy == MatchPolicy::SeededRandom && rng) {
            auto all = match_rule_all(obs, table, rot_order);
            if (!all.empty()) {
                const auto& pick = all[(size_t)((*rng)() % all.size())];
                local_out = pick.output;
                name = pick.rule_name;
            }
        } else {
            MatchResult m = match_rule_detailed(obs, table, rot_order);
            if (m.matched) {
                local_out = m.output;
                name = m.rule_name;
            }
        }
        if (!is_zero(local_out)) pending.push_back({i, frame(local_out), std::move(name)});
    }

    std::vector<FiredMove> fired;
    std::vector<Move> moves;
    for (const Pending& p : pending) {
        Cell mover = state.modules[p.module];
        Cell dest = mover + p.world_out;
        // the output names a destination; realize it as a move, preferring
        // sliding, then the lexicographically smallest support set
        std::vector<Move> candidates = legal_moves(cfg, state.field, mover);
        const Move* best = nullptr;
        for (const Move& m : candidates) {
            if (m.dest != dest) continue;
            if (!best) {
                best = &m;
                continue;
            }
            if (m.kind != best->kind) {
                if (m.kind == MoveKind::Sliding) best = &m;
                continue;
            }
            if (m.supports < best->supports) best = &m;
        }
        if (!best)
            throw EngineError("unrealizable output: rule " + p.rule + " at " + to_string(mover) +
                              " -> " + to_string(dest) + " (t=" + std::to_string(state.t) + ")");
        moves.push_back(*best);
        fired.push_back({*best, p.rule});
    }

    apply_step(cfg, state.field, moves);  // validates; throws StepError on violation
    for (size_t j = 0; j < pending.size(); ++j) {
        state.modules[pending[j].module] = moves[j].dest;
        mark_visited(state, moves[j].dest);
    }
    ++state.t;
    return fired;
}

namespace {

StepRecord record_of(const SimState& s, std::vector<FiredMove> fired) {
    StepRecord r;
    r.t = s.t;
    r.cells = s.configuration();
    r.fired = std::move(fired);
    return r;
}

}  // namespace

RunResult run(const Configuration& initial, const Field& field, const RuleTable& table,
              const RunOptions& opts) {
    RunResult res;
    res.trace.field = field.to_string();
    res.trace.mode = to_string(table.mode);
    res.trace.table = "?";
    res.trace.seed = opts.seed;
    res.trace.k = table.k;

    long long max_steps = opts.max_steps >= 0 ? opts.max_steps : default_max_steps(field);
    if (opts.target && !field.contains(*opts.target)) {
        res.outcome = Outcome::Error;
        res.error = "target outside field";
        return res;
    }

    std::optional<SimState> state_opt;
    try {
        state_opt = make_sim_state(initial, field, opts.seed, opts.frames);
    } catch (const MrsError& e) {
        res.outcome = Outcome::Error;
        res.error = e.what();
        return res;
    }
    SimState& state = *state_opt;
    std::mt19937_64 rng(opts.seed);

    if (opts.record_trace) res.trace.steps.push_back(record_of(state, {}));
    auto found_now = [&] { return opts.target && occupied(state.configuration(), *opts.target); };
    if (state.all_visited()) res.covered_at = 0;
    if (found_now()) {
        res.outcome = Outcome::Found;
        res.found_at = 0;
        return res;
    }
    if (opts.stop_on_full_coverage && res.covered_at == 0) {
        res.outcome = Outcome::Exhausted;
        return res;
    }

    while (state.t < max_steps) {
        std::vector<FiredMove> fired;
        try {
            fired = tick(state, table, opts.policy, &rng);
        } catch (const MrsError& e) {
            res.outcome = Outcome::Error;
            res.error = std::string(e.what()) + " (t=" + std::to_string(state.t) + ")";
            res.steps = state.t;
            return res;
        }
        bool deadlock = fired.empty();  // stationary from here on
        if (opts.record_trace) res.trace.steps.push_back(record_of(state, std::move(fired)));
        res.steps = state.t;
        if (deadlock) {
            res.deadlocked = true;
            break;
        }
        if (res.covered_at < 0 && state.all_visited()) res.covered_at = state.t;
        if (found_now()) {
            res.outcome = Outcome::Found;
            res.found_at = state.t;
            return res;
        }
        if (opts.stop_on_full_coverage && res.covered_at >= 0) break;
    }

    res.outcome = Outcome::Exhausted;
    if (!state.all_visited()) {
        for (int x = 0; x < field.w(); ++x)
            for (int y = 0; y < field.d(); ++y)
                for (int z = 0; z < field.h(); ++z)
                    if (!state.was_visited({x, y, z})) res.missing.push_back({x, y, z});
    }
    return res;
}

void write_trace(const Trace& trace, std::ostream& out) {
    out << "field: " << trace.field << "\n";
    out << "mode: " << trace.mode << "\n";
    out << "table: " << trace.table << "\n";
    out << "seed: " << trace.seed << "\n";
    out << "k: " << trace.k << "\n";
    for (const StepRecord& s : trace.steps) {
        out << "t=" << s.t << " cells=";
        for (size_t i = 0; i < s.cells.size(); ++i) out << (i ? ";" : "") << to_string(s.cells[i]);
        out << " fired=";
        for (size_t i = 0; i < s.fired.size(); ++i) out << (i ? "," : "") << s.fired[i].rule;
        out << "\n";
    }
}

std::string trace_to_string(const Trace& trace) {
    std::ostringstream os;
    write_trace(trace, os);
    return os.str();
}

std::optional<std::string> validate_trace(const Trace& trace, const Field& field) {
    auto fail = [&](int t, const std::string& msg) {
        return std::optional<std::string>("t=" + std::to_string(t) + ": " + msg);
    };
    if (trace.steps.empty()) return std::nullopt;
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& cells = trace.steps[i].cells;
        if (cells.empty()) return fail(trace.steps[i].t, "empty configuration");
        if (!std::is_sorted(cells.begin(), cells.end())) return fail(trace.steps[i].t, "unsorted cells");
        for (Cell c : cells)
            if (!field.contains(c)) return fail(trace.steps[i].t, "cell outside field " + to_string(c));
        if (!is_connected(cells)) return fail(trace.steps[i].t, "configuration disconnected");
        if (i == 0) continue;

        const auto& prev = trace.steps[i - 1].cells;
        const auto& fired = trace.steps[i].fired;
        if (cells.size() != prev.size()) return fail(trace.steps[i].t, "module count changed");

        // statics: previous cells minus movers; must be non-empty, connected,
        // and agree with (cells minus destinations)
        std::vector<Cell> movers, dests, track;
        for (const FiredMove& f : fired) {
            movers.push_back(f.move.mover);
            dests.push_back(f.move.dest);
            for (Cell c : f.move.track()) track.push_back(c);
        }
        std::sort(movers.begin(), movers.end());
        if (std::adjacent_find(movers.begin(), movers.end()) != movers.end())
            return fail(trace.steps[i].t, "duplicate mover");
        Configuration statics;
        for (Cell c : prev)
            if (!std::binary_search(movers.begin(), movers.end(), c)) statics.push_back(c);
        for (Cell m : movers)
            if (!occupied(prev, m)) return fail(trace.steps[i].t, "mover was not occupied");
        if (!fired.empty()) {
            if (statics.empty()) return fail(trace.steps[i].t, "no static module");
            if (!is_connected(statics)) return fail(trace.steps[i].t, "static modules disconnected");
        }
        std::sort(track.begin(), track.end());
        if (std::adjacent_find(track.begin(), track.end()) != track.end())
            return fail(trace.steps[i].t, "track overlap between moves");
        for (Cell c : track) {
            if (!field.contains(c)) return fail(trace.steps[i].t, "track outside field");
            if (occupied(statics, c)) return fail(trace.steps[i].t, "track overlaps static cell");
        }
        for (const FiredMove& f : fired)
            for (const FiredMove& g : fired) {
                if (&f == &g) continue;
                for (Cell c : f.move.track())
                    if (g.move.mover == c)
                        return fail(trace.steps[i].t, "track overlaps another mover's start");
            }
        for (const FiredMove& f : fired) {
            for (Cell s : f.move.supports)
                if (!occupied(statics, s)) return fail(trace.steps[i].t, "support is moving");
            if (f.move.kind == MoveKind::Rotation) {
                Offset arm = f.move.mover - f.move.supports[0];
                Offset out = f.move.dest - f.move.supports[0];
                if (!is_unit(arm) || !is_unit(out) || dot(arm, out) != 0)
                    return fail(trace.steps[i].t, "rotation geometry invalid");
            } else {
                if (f.move.supports.size() != 2 || !side_adjacent(f.move.supports[0], f.move.supports[1]))
                    return fail(trace.steps[i].t, "sliding supports invalid");
                if (!is_unit(f.move.dest - f.move.mover))
                    return fail(trace.steps[i].t, "sliding not a unit translation");
            }
        }
        Configuration rebuilt = statics;
        for (Cell c : dests) rebuilt.push_back(c);
        std::sort(rebuilt.begin(), rebuilt.end());
        if (rebuilt != cells) return fail(trace.steps[i].t, "cells do not match statics+destinations");
    }
    return std::nullopt;
}

}  // namespace mrs
