#include "mrs/engine.hpp"
#include "mrs/statespace.hpp"

namespace mrs {

namespace {

// true iff some module's canonical match is a main-phase (non-norm) rule
bool matches_main_rule(const SimState& state, const RuleTable& table) {
    Configuration cfg = state.configuration();
    const auto& group = rotation_group(table.mode);
    for (size_t i = 0; i < state.modules.size(); ++i) {
        Observation obs = observe(cfg, state.field, state.modules[i], state.frames[i], table.k);
        std::vector<Rot> rot_order(group.size());
        for (size_t g = 0; g < group.size(); ++g) rot_order[g] = compose(group[g], state.frames[i]);
        MatchResult m = match_rule_detailed(obs, table, rot_order);
        if (m.matched && !m.is_norm) return true;
    }
    return false;
}

}  // namespace

std::vector<NormalizationStep> normalize_initial(const Configuration& cfg, const Field& field,
                                                 const RuleTable& table, int max_steps) {
    validate_configuration(cfg, field);
    if ((int)cfg.size() != table.module_count)
        throw MrsError("configuration size does not match table module count");
    if (table.mode != CompassMode::CommonCompass) {
        if (!symmetric_pairs(cfg, table.mode).empty())
            throw UnsolvableError("unsolvable: symmetric pair");
    }

    std::vector<NormalizationStep> steps;
    SimState state = make_sim_state(cfg, field);
    for (int i = 0; i < max_steps; ++i) {
        if (matches_main_rule(state, table)) return steps;
        std::vector<FiredMove> fired = tick(state, table);
        if (fired.empty())
            throw MrsError("normalization deadlock: no rule matches at step " + std::to_string(i));
        NormalizationStep step;
        for (FiredMove& f : fired) step.moves.push_back(std::move(f.move));
        step.after = state.configuration();
        steps.push_back(std::move(step));
    }
    throw MrsError("normalization did not reach a main-phase state within " +
                   std::to_string(max_steps) + " steps");
}

}  // namespace mrs
