#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mrs/observation.hpp"

namespace mrs {

struct ParseError : MrsError {
    ParseError(int line_, const std::string& msg)
        : MrsError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    int line;
};

// Initial configuration with a symmetric module pair under the table's mode.
struct UnsolvableError : MrsError {
    using MrsError::MrsError;
};

// One row of a rule table. C_m must match exactly (all modules within the
// observation radius); C_w and C_e are partial constraints ("the MRS does not
// care whether other cells than those specified are walls or not").
struct Rule {
    std::string name;
    bool norm = false;  // normalization rule: fires only before the main phase begins
    std::vector<Offset> cm, cw, ce;  // each sorted
    Offset output{};

    friend bool operator==(const Rule& a, const Rule& b) {
        return a.name == b.name && a.norm == b.norm && a.cm == b.cm && a.cw == b.cw &&
               a.ce == b.ce && a.output == b.output;
    }
};

struct RuleTable {
    CompassMode mode = CompassMode::CommonCompass;
    int module_count = 0;
    int k = 3;
    std::vector<Rule> rules;       // main phase, in priority order
    std::vector<Rule> norm_rules;  // tried after the main rules

    friend bool operator==(const RuleTable& a, const RuleTable& b) {
        return a.mode == b.mode && a.module_count == b.module_count && a.k == b.k &&
               a.rules == b.rules && a.norm_rules == b.norm_rules;
    }
};

// Validates one rule against the table header (offsets nonzero, within k,
// pairwise disjoint sets, output within {-1,0,1}^3 with at most two nonzero
// coordinates). Throws MrsError on violation.
void validate_rule(const Rule& rule, int k);

struct MatchResult {
    bool matched = false;
    bool is_norm = false;
    int rule_index = -1;      // within rules / norm_rules
    int rotation_index = -1;  // within the rotation order used
    Offset output{};          // already mapped back into observation coordinates
    std::string rule_name;
};

// A rule r matches under rotation R iff R(obs).modules == r.C_m exactly,
// r.C_w is a subset of R(obs).walls, r.C_e a subset of R(obs).empty, and the
// commanded move is locally possible (an "output with movement": destination
// and swept cell empty interior, a support pair / pivot in place). Rules are
// tried in order (normalization rules first, then main rules), rotations in
// the order given; the first match wins and R^-1(output) is returned. Rules
// with output (0,0,0) never match.
MatchResult match_rule_detailed(const Observation& obs, const RuleTable& table,
                                const std::vector<Rot>& rotation_order);

// Canonical entry point: rotation order = rotation_group(mode); returns the
// selected output, or (0,0,0) when nothing matches.
Offset match_rule(const Observation& obs, const RuleTable& table, CompassMode mode);

// All matching (rule, rotation) pairs, for the seeded-random policy and for
// uniqueness diagnostics.
std::vector<MatchResult> match_rule_all(const Observation& obs, const RuleTable& table,
                                        const std::vector<Rot>& rotation_order);

// ---- table file format ----------------------------------------------------
//
//   mrs-table v1
//   mode: compass|vertical|none
//   modules: <int>
//   k: <int>
//   rule <name> [norm] M{(x,y,z);...} W{...} E{...} -> (x,y,z)
//
// '#' starts a comment line; whitespace inside braces is ignored.

RuleTable parse_table(const std::string& text);
std::string serialize_table(const RuleTable& table);

enum class BuiltinTable { Compass3, Vertical4, NoCompass5 };

const RuleTable& builtin_table(BuiltinTable which);
// Accepts "builtin:compass3", "builtin:vertical4", "builtin:nocompass5".
std::optional<BuiltinTable> builtin_table_id(const std::string& name);
const char* builtin_table_name(BuiltinTable which);

// ---- initial-configuration normalization -----------------------------------

struct NormalizationStep {
    std::vector<Move> moves;
    Configuration after;
};

// Steps the table performs before any main-phase rule matches. Empty when the
// configuration already matches a main rule. Throws UnsolvableError when the
// mode requires asymmetry and the shape contains a symmetric pair, MrsError
// when the table fails to reach a main-phase state (deadlock / bound).
std::vector<NormalizationStep> normalize_initial(const Configuration& cfg, const Field& field,
                                                 const RuleTable& table, int max_steps = 200);

}  // namespace mrs
