#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mrs/vec.hpp"

namespace mrs {

struct MrsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step-level rule violation (track overlap, disconnected statics, ...).
struct StepError : MrsError {
    using MrsError::MrsError;
};

// Finite cuboid of cells; interior is [0,w) x [0,d) x [0,h). Every cell
// outside the interior is a wall cell. The unbounded variant (used by the
// wall-free state-space analysis) contains every cell.
class Field {
public:
    Field(int w, int d, int h) : w_(w), d_(d), h_(h) {
        if (w < 1 || d < 1 || h < 1) throw MrsError("field dimensions must be positive");
    }

    static Field unbounded() { return Field(Unbounded{}); }

    bool is_unbounded() const { return w_ == 0; }

    bool contains(Cell c) const {
        if (is_unbounded()) return true;
        return c.x >= 0 && c.x < w_ && c.y >= 0 && c.y < d_ && c.z >= 0 && c.z < h_;
    }

    int w() const { return w_; }
    int d() const { return d_; }
    int h() const { return h_; }
    long long volume() const { return (long long)w_ * d_ * h_; }

    std::string to_string() const;  // "WxDxH"

    friend bool operator==(const Field& a, const Field& b) {
        return a.w_ == b.w_ && a.d_ == b.d_ && a.h_ == b.h_;
    }

private:
    struct Unbounded {};
    explicit Field(Unbounded) : w_(0), d_(0), h_(0) {}
    int w_, d_, h_;
};

// Occupied cells, sorted lexicographically, no duplicates. Modules are
// anonymous; identity only exists inside the engine.
using Configuration = std::vector<Cell>;

// Sorts, rejects duplicates ("at most one module at a time").
Configuration make_configuration(std::vector<Cell> cells);

bool side_adjacent(Cell a, Cell b);

// Side-adjacency graph over cfg is connected. Throws on empty configuration.
bool is_connected(const Configuration& cfg);

// Sorted-ness is assumed by the binary searches below.
bool occupied(const Configuration& cfg, Cell c);

// Full validity: non-empty, inside field, connected.
void validate_configuration(const Configuration& cfg, const Field& field);

enum class MoveKind { Sliding, Rotation };

// One module's movement within a step. supports are static cells the move
// needs: two side-adjacent cells for sliding, the pivot for rotation. track
// is every cell traversed (dest, plus the swept transit cell for rotation).
struct Move {
    MoveKind kind = MoveKind::Sliding;
    Cell mover{};
    Cell dest{};
    std::vector<Cell> supports;  // sorted; size 2 (sliding) or 1 (rotation)
    Cell transit{};              // rotation only

    std::vector<Cell> track() const {
        if (kind == MoveKind::Rotation) return {dest, transit};
        return {dest};
    }

    friend bool operator==(const Move& a, const Move& b) {
        return a.kind == b.kind && a.mover == b.mover && a.dest == b.dest &&
               a.supports == b.supports && (a.kind == MoveKind::Sliding || a.transit == b.transit);
    }
};

// Every legal sliding/rotation of `mover`, evaluated against cfg: supports
// occupied by other modules, dest and track cells empty interior cells.
// Distinct support pairs yield distinct moves even when dest coincides.
// Throws if mover is not in cfg.
std::vector<Move> legal_moves(const Configuration& cfg, const Field& field, Cell mover);

// Synchronous application of a set of moves. Validates, in this order:
//   - movers are distinct cells of cfg, each move individually legal;
//   - the non-moving set is non-empty and connected;
//   - every support belongs to a non-moving module;
//   - tracks are pairwise disjoint, disjoint from static cells and from
//     every other mover's start cell;
//   - the result satisfies the Configuration invariants.
// Throws StepError naming the violated rule; never skips silently.
Configuration apply_step(const Configuration& cfg, const Field& field, const std::vector<Move>& moves);

// apply_step that reports instead of throwing (used by sweep enumeration).
bool try_apply_step(const Configuration& cfg, const Field& field, const std::vector<Move>& moves,
                    Configuration* out, std::string* error);

}  // namespace mrs
