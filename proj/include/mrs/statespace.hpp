#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mrs/observation.hpp"

namespace mrs {

// Canonical shape: translated so the lexicographically least cell is the
// origin. Cells stay sorted; coordinates may be negative.
using Shape = Configuration;

Shape canonical_translation(const Configuration& cfg);

// Least translation-canonical form over the mode's rotation group images.
Shape canonical_mode(const Configuration& cfg, CompassMode mode);

// All connected n-cell shapes up to translation, sorted. (1,3,15,86,534,...)
std::vector<Shape> enumerate_shapes(int n);

// Up to translation and the mode's rotation group.
std::vector<Shape> enumerate_shapes(int n, CompassMode mode);

// Module pairs that can obtain identical observations in an unbounded
// wall-free context under some adversarial frame assignment from the mode's
// group. Pairs are (u,v) with u < v, sorted.
std::vector<std::pair<Cell, Cell>> symmetric_pairs(const Configuration& cfg, CompassMode mode);

struct TransitionEdge {
    int from = 0, to = 0;
    Offset disp{};  // anchor displacement: lex-least cell after minus before

    friend bool operator==(const TransitionEdge& a, const TransitionEdge& b) {
        return a.from == b.from && a.to == b.to && a.disp == b.disp;
    }
    friend bool operator<(const TransitionEdge& a, const TransitionEdge& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.disp < b.disp;
    }
};

// Wall-free transition graph. Nodes are translation-canonical shapes (the
// locomotion analysis needs translation-true displacements); mode_class maps
// each node to its rotation-quotient class for mode-level views.
struct TransitionGraph {
    CompassMode mode = CompassMode::CommonCompass;
    std::vector<Shape> nodes;  // sorted; index is the node id
    std::vector<TransitionEdge> edges;
    std::vector<int> mode_class;
    int mode_class_count = 0;
};

// Every edge is a synchronous step that is legal and adversarially
// consistent: a module in a symmetric pair moves only when its mate moves
// with a witness-mapped displacement in the same step.
TransitionGraph build_transition_graph(int n, CompassMode mode);

struct LocomotionVerdict {
    Offset direction{};
    bool blocked = true;  // no cycle with positive net displacement along direction
};

std::vector<LocomotionVerdict> locomotion_analysis(const TransitionGraph& graph,
                                                   const std::vector<Offset>& directions);

// Net-displacement directions (primitive vectors) achievable by wall-free
// closed walks of two modules with a common compass.
std::vector<Offset> straight_directions_2(int max_cycle_len = 6);

// Distinct 2-module states that observe only the west wall: three shapes at
// each of the k wall-visible anchor columns.
int wall_adjacent_state_count_2(int k);

// node <id> cells=... / edge <from> <to> disp=(x,y,z); mode-level classes
// included as class lines when the group is nontrivial.
std::string export_graph(const TransitionGraph& graph, bool mode_level);

}  // namespace mrs
