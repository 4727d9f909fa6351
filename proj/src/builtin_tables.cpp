#include "mrs/rules.hpp"

namespace mrs {

namespace {

// Search algorithm for three modules with a common compass. The MRS sweeps
// the diagonal planes {x+y=s} line by line (M_NW / M_SE), climbs one row at
// the south/east wall (M_TurnSE), advances to the next plane over the top
// wall (M_T, M_D, M_B), and returns from the northeast top corner to the
// southwest corner along the bottom edges (M_NECorner, M_WallBottom,
// M_SWCorner, M_Up). N_* rules are normalization rules that pull the initial
// shapes the main rows do not cover into the sweep.
const char* kCompass3 = R"(mrs-table v1
mode: compass
modules: 3
k: 3

rule M_NECorner M{(0,0,-1);(0,-1,-1)} W{(0,1,0);(1,0,0);(0,0,-2)} E{} -> (-1,0,-1)

rule M_SWCorner M{(-1,0,0);(-1,1,0)} W{(0,0,-1);(-2,0,0);(0,-1,0)} E{} -> (-1,0,1)

rule M_T M{(0,0,1);(1,0,1)} W{(2,0,0);(0,0,2)} E{} -> (1,0,0)
rule M_T M{(1,0,0);(1,0,-1)} W{(2,0,0);(0,0,1)} E{} -> (1,1,0)
rule M_T M{(0,0,1);(0,1,1)} W{(1,0,0);(0,0,2)} E{} -> (0,1,0)
rule M_T M{(0,0,1);(0,-1,1)} W{(0,0,2);(0,-2,0)} E{(1,0,0)} -> (0,-1,0)
rule M_T M{(0,-1,0);(0,-1,-1)} W{(0,0,1);(0,-2,0)} E{} -> (1,-1,0)
rule M_T M{(0,0,1);(1,0,1)} W{(0,0,2);(0,-1,0)} E{} -> (1,0,0)

rule M_B M{(0,1,0);(0,1,1)} W{(1,0,0);(0,0,-1)} E{(0,-1,0);(0,2,0)} -> (-1,1,0)
rule M_B M{(0,0,-1);(-1,0,-1)} W{(1,0,0);(0,0,-2)} E{(0,-1,0)} -> (-1,0,0)
rule M_B M{(1,0,0);(1,0,1)} W{(0,-1,0);(0,0,-1)} E{} -> (1,1,0)
rule M_B M{(0,0,-1);(0,1,-1)} W{(0,-1,0);(0,0,-2)} E{(-1,0,0)} -> (0,1,0)

rule M_WallBottom M{(1,0,0);(1,-1,0)} W{(0,0,-1)} E{} -> (0,-1,0)
rule M_WallBottom M{(1,0,0);(1,1,0)} W{(0,0,-1)} E{(0,-1,0)} -> (1,-1,0)
rule M_WallBottom M{(0,-1,0);(0,-2,0)} W{(0,0,-1)} E{} -> (-1,-1,0)
rule M_WallBottom M{(0,-1,0);(-1,-1,0)} W{(0,0,-1);(0,-2,0)} E{} -> (-1,0,0)
rule M_WallBottom M{(0,-1,0);(1,-1,0)} W{(0,0,-1)} E{(-1,0,0)} -> (-1,-1,0)
rule M_WallBottom M{(-1,0,0);(-2,0,0)} W{(0,0,-1)} E{} -> (-1,1,0)

rule M_Up M{(0,-1,0);(0,-1,1)} W{(-1,0,0);(0,-2,0)} E{} -> (0,0,1)
rule M_Up M{(0,-1,0);(0,-1,-1)} W{(-1,0,0);(0,-2,0)} E{(0,0,1)} -> (0,-1,1)
rule M_Up M{(0,0,1);(0,0,2)} W{(-1,0,0);(0,-1,0)} E{} -> (0,1,1)

rule M_D M{(0,1,0);(0,1,-1)} W{(1,0,0)} E{} -> (0,0,-1)
rule M_D M{(0,1,0);(0,1,1)} W{(1,0,0)} E{(0,0,-1)} -> (0,1,-1)
rule M_D M{(0,0,-1);(0,0,-2)} W{(1,0,0)} E{} -> (0,-1,-1)
rule M_D M{(1,0,0);(1,0,-1)} W{(0,-1,0)} E{} -> (0,0,-1)
rule M_D M{(1,0,0);(1,0,1)} W{(0,-1,0)} E{(0,0,-1)} -> (1,0,-1)
rule M_D M{(0,0,-1);(0,0,-2)} W{(0,-1,0)} E{} -> (-1,0,-1)

rule M_TurnSE M{(0,0,1);(1,0,1)} W{(2,0,0)} E{(0,-1,0)} -> (-1,0,1)
rule M_TurnSE M{(1,0,0);(2,0,0)} W{} E{(0,0,-1);(0,0,1)} -> (1,0,1)
rule M_TurnSE M{(0,0,1);(0,-1,1)} W{(0,-2,0)} E{(1,0,0)} -> (0,1,1)
rule M_TurnSE M{(0,-1,0);(0,-2,0)} W{} E{(0,0,-1)} -> (0,-1,1)

rule M_TurnNW M{(0,-1,0);(0,-1,1)} W{(0,1,0)} E{} -> (0,0,1)
rule M_TurnNW M{(1,0,0);(1,0,1)} W{(-1,0,0)} E{} -> (0,0,1)

rule M_SE M{(0,0,1);(1,0,1)} W{} E{(2,0,0)} -> (1,0,0)
rule M_SE M{(1,0,0);(1,0,-1)} W{} E{} -> (1,-1,0)
rule M_SE M{(0,0,1);(0,-1,1)} W{} E{(0,-2,0);(1,0,0)} -> (0,-1,0)
rule M_SE M{(0,-1,0);(0,-1,-1)} W{} E{} -> (1,-1,0)

# Authored supplements (flagged norm): wall contexts Table 1 leaves without
# a continuation. N_LeaveSEBottom exits the southeast bottom corner after the
# east-wall descent and launches the northwest sweep of the corner plane.
rule N_LeaveSEBottom norm M{(0,1,0);(0,1,1)} W{(1,0,0);(0,0,-1);(0,-1,0)} E{} -> (-1,1,0)

# N_NWCol*: the printed turn rows never reach the northwest corner column
# (both turn variants bail one cell early). These rules splice a detour into
# the corner row's sweep: it parks a module in the corner cell at both row
# heights and rejoins the southeast gait at the same position, one phase
# earlier, so it never re-triggers within a pass.
rule N_NWCol1 norm M{(0,-1,0);(0,-1,1)} W{(0,1,0);(-2,0,0)} E{(-1,0,0)} -> (1,-1,0)
rule N_NWCol2 norm M{(-1,0,0);(-1,0,1)} W{(0,2,0);(-3,0,0)} E{(0,1,0);(-2,0,0)} -> (-1,-1,0)
rule N_NWCol3 norm M{(0,1,0);(0,1,1)} W{(0,3,0);(-2,0,0)} E{(0,2,0);(-1,0,0)} -> (0,0,1)
rule N_NWCol4 norm M{(0,0,1);(0,-1,1)} W{(0,2,0);(-2,0,0)} E{(0,1,0);(-1,0,0)} -> (-1,0,1)
rule N_NWCol5 norm M{(0,1,0);(-1,1,0)} W{(0,3,0);(-2,0,0)} E{(0,2,0);(-1,0,0)} -> (-1,0,0)
rule N_NWCol6a norm M{(0,1,0);(1,1,0)} W{(-1,0,0);(0,3,0)} E{(0,2,0)} -> (0,1,-1)
rule N_NWCol6b norm M{(0,1,0);(1,1,0)} W{(-1,0,0);(0,2,0)} E{} -> (0,1,-1)
rule N_NWCol7 norm M{(0,0,1);(1,0,1)} W{(-1,0,0);(0,2,0)} E{(0,1,0)} -> (0,1,1)
rule N_NWCol8 norm M{(-1,0,0);(-1,1,0)} W{(0,2,0);(-2,0,0)} E{(0,1,0)} -> (0,1,0)

rule M_NW M{(-1,0,0);(-1,0,1)} W{} E{(0,-1,0)} -> (-1,1,0)
rule M_NW M{(0,0,-1);(0,1,-1)} W{} E{(0,2,0);(-1,0,0)} -> (0,1,0)
rule M_NW M{(0,1,0);(0,1,1)} W{} E{(1,0,0)} -> (-1,1,0)
rule M_NW M{(0,0,-1);(-1,0,-1)} W{} E{(-2,0,0);(0,-1,0)} -> (-1,0,0)
)";

// Search algorithm for four modules with a common vertical axis. Planes
// perpendicular to a horizontal axis are swept column by column (M_Down /
// M_Up), the MRS shifts one column at the top wall (M_TurnU), crosses to the
// next plane along the bottom wall (M_B1, M_B2, M_B3) and turns the sweep 90
// degrees at the bottom corner (M_Corner). Rules match up to the four
// rotations about the shared vertical axis.
const char* kVertical4 = R"(mrs-table v1
mode: vertical
modules: 4
k: 3

rule M_Down M{(0,1,0);(0,1,1);(0,1,-1)} W{} E{(0,0,-2)} -> (0,0,-1)
rule M_Down M{(0,1,0);(0,1,1);(0,1,2)} W{} E{(0,0,-1)} -> (0,1,-1)
rule M_Down M{(0,0,-1);(0,0,-2);(0,-1,-2)} W{} E{(0,0,-3)} -> (0,-1,-1)
rule M_Down M{(0,1,0);(0,1,-1);(0,1,-2)} W{} E{(1,0,0)} -> (0,0,-1)

rule M_TurnD M{(0,0,-1);(-1,0,-1);(0,0,-2)} W{(0,0,-3)} E{} -> (0,-1,-1)

rule M_Up M{(-1,0,1);(0,-1,1);(0,0,1)} W{} E{} -> (1,0,1)
rule M_Up M{(-1,0,0);(-2,0,0);(-1,-1,0)} W{} E{(0,0,2);(0,0,-1)} -> (-1,0,1)
rule M_Up M{(1,0,0);(1,-1,0);(1,0,1)} W{} E{(0,0,-1)} -> (0,0,1)
rule M_Up M{(0,1,0);(0,1,1);(-1,1,1)} W{} E{(0,0,-1)} -> (0,0,1)

rule M_TurnU M{(0,1,0);(1,1,0);(-1,1,0)} W{(0,0,2)} E{} -> (1,0,0)
rule M_TurnU M{(1,0,0);(2,0,0);(1,-1,0)} W{(0,0,2)} E{} -> (1,0,1)
rule M_TurnU M{(0,0,-1);(1,0,-1);(1,-1,-1)} W{(0,0,1)} E{} -> (1,0,0)
rule M_TurnU M{(0,1,0);(-1,1,0);(-1,1,1)} W{(0,0,2)} E{} -> (0,1,-1)

rule M_B1 M{(0,1,0);(0,1,1);(0,1,-1)} W{(0,2,0);(0,0,-2)} E{} -> (0,0,-1)
rule M_B1 M{(0,0,-1);(0,0,-2);(0,-1,-2)} W{(0,1,0);(0,0,-3)} E{(-1,0,0)} -> (-1,0,-1)
rule M_B1 M{(1,0,0);(1,0,-1);(1,-1,-1)} W{(0,1,0);(0,0,-2)} E{} -> (0,0,-1)
rule M_B1 M{(0,0,-1);(-1,0,-1);(0,-1,-1)} W{(0,1,0);(0,0,-2)} E{(1,0,0)} -> (-1,0,0)
rule M_B1 M{(0,1,0);(-1,1,0);(0,1,1)} W{(0,2,0);(0,0,-1)} E{(1,0,0)} -> (-1,0,0)
rule M_B1 M{(0,0,-1);(1,0,-1);(0,-1,-1)} W{(0,1,0)} E{} -> (0,-1,0)
rule M_B1 M{(0,0,-1);(0,1,-1);(1,1,-1)} W{(0,1,0);(0,0,-2)} E{} -> (0,-1,-1)

rule M_B2 M{(0,1,0);(-1,1,0);(-2,1,0)} W{(0,0,-1)} E{} -> (-1,0,0)
rule M_B2 M{(0,1,0);(1,1,0);(-1,1,0)} W{(0,0,-1)} E{(-2,0,0)} -> (-1,0,0)
rule M_B2 M{(0,1,0);(1,1,0);(2,1,0)} W{(0,0,-1)} E{} -> (-1,1,0)
rule M_B2 M{(-1,0,0);(-2,0,0);(-2,-1,0)} W{(0,0,-1)} E{} -> (-1,-1,0)

rule M_B3 M{(0,1,0);(1,1,0);(-1,1,0)} W{(0,0,-1);(-2,0,0)} E{} -> (0,1,1)
rule M_B3 M{(1,0,0);(2,0,0);(1,0,1)} W{(0,0,-1);(-1,0,0)} E{} -> (0,0,1)
rule M_B3 M{(-1,0,0);(-2,0,0);(-1,0,1)} W{(0,0,-1);(-3,0,0)} E{} -> (0,0,1)
rule M_B3 M{(0,0,1);(1,0,1);(-1,0,1)} W{(0,0,-1);(-2,0,0)} E{} -> (0,-1,1)

rule M_Corner M{(0,0,-1);(0,0,-2);(-1,0,-2)} W{(0,1,0);(1,0,0);(0,0,-3)} E{} -> (-1,0,-1)
rule M_Corner M{(1,0,0);(0,0,-1);(1,0,-1)} W{(0,1,0);(2,0,0);(0,0,-2)} E{} -> (0,-1,-1)
rule M_Corner M{(0,0,-1);(-1,0,-1);(-1,-1,-1)} W{(1,0,0);(0,1,0);(0,0,-2)} E{} -> (-1,0,0)
)";

// Search algorithm for five modules without a common compass; rules match up
// to all 24 rotations. Authored as a marker-augmented variant of the
// vertical-axis algorithm: the fifth module rides along and pins the frame.
const char* kNoCompass5 = R"(mrs-table v1
mode: none
modules: 5
k: 3
)";

}  // namespace

const RuleTable& builtin_table(BuiltinTable which) {
    static const RuleTable compass3 = parse_table(kCompass3);
    static const RuleTable vertical4 = parse_table(kVertical4);
    static const RuleTable nocompass5 = parse_table(kNoCompass5);
    switch (which) {
        case BuiltinTable::Compass3: return compass3;
        case BuiltinTable::Vertical4: return vertical4;
        case BuiltinTable::NoCompass5: return nocompass5;
    }
    throw MrsError("unknown builtin table");
}

std::optional<BuiltinTable> builtin_table_id(const std::string& name) {
    std::string s = name;
    if (s.rfind("builtin:", 0) == 0) s = s.substr(8);
    if (s == "compass3") return BuiltinTable::Compass3;
    if (s == "vertical4") return BuiltinTable::Vertical4;
    if (s == "nocompass5") return BuiltinTable::NoCompass5;
    return std::nullopt;
}

const char* builtin_table_name(BuiltinTable which) {
    switch (which) {
        case BuiltinTable::Compass3: return "builtin:compass3";
        case BuiltinTable::Vertical4: return "builtin:vertical4";
        case BuiltinTable::NoCompass5: return "builtin:nocompass5";
    }
    return "?";
}

}  // namespace mrs
