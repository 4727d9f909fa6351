#include "mrs/grid.hpp"

#include <algorithm>
#include <cstdio>

namespace mrs {

std::string Field::to_string() const {
    if (is_unbounded()) return "unbounded";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%dx%dx%d", w_, d_, h_);
    return buf;
}

Configuration make_configuration(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw MrsError("duplicate cell in configuration");
    return cells;
}

bool side_adjacent(Cell a, Cell b) { return l1_norm(a - b) == 1; }

bool occupied(const Configuration& cfg, Cell c) {
    return std::binary_search(cfg.begin(), cfg.end(), c);
}

bool is_connected(const Configuration& cfg) {
    if (cfg.empty()) throw MrsError("empty configuration");
    std::vector<char> seen(cfg.size(), 0);
    std::vector<size_t> stack = {0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (Offset d : kAxisOffsets) {
            auto it = std::lower_bound(cfg.begin(), cfg.end(), cfg[i] + d);
            if (it != cfg.end() && *it == cfg[i] + d) {
                size_t j = (size_t)(it - cfg.begin());
                if (!seen[j]) {
                    seen[j] = 1;
                    ++reached;
                    stack.push_back(j);
                }
            }
        }
    }
    return reached == cfg.size();
}

void validate_configuration(const Configuration& cfg, const Field& field) {
    if (cfg.empty()) throw MrsError("empty configuration");
    if (!std::is_sorted(cfg.begin(), cfg.end()) ||
        std::adjacent_find(cfg.begin(), cfg.end()) != cfg.end())
        throw MrsError("configuration not sorted/unique");
    for (Cell c : cfg)
        if (!field.contains(c)) throw MrsError("cell outside field: " + to_string(c));
    if (!is_connected(cfg)) throw MrsError("configuration disconnected");
}

std::vector<Move> legal_moves(const Configuration& cfg, const Field& field, Cell mover) {
    if (!occupied(cfg, mover)) throw MrsError("mover not in configuration: " + to_string(mover));
    std::vector<Move> moves;
    auto empty_interior = [&](Cell c) { return field.contains(c) && !occupied(cfg, c); };

    // Slidings: ordered support pairs (a,b), a side-adjacent to mover, b
    // side-adjacent to a; mover translates by (b - a).
    for (Cell a : cfg) {
        if (a == mover || !side_adjacent(mover, a)) continue;
        for (Cell b : cfg) {
            if (b == mover || b == a || !side_adjacent(a, b)) continue;
            Cell dest = mover + (b - a);
            if (dest == a || dest == b) continue;  // occupied by a support
            if (!empty_interior(dest)) continue;
            Move m;
            m.kind = MoveKind::Sliding;
            m.mover = mover;
            m.dest = dest;
            m.supports = {a, b};
            std::sort(m.supports.begin(), m.supports.end());
            moves.push_back(std::move(m));
        }
    }

    // Rotations: quarter turn about a side-adjacent pivot; the swept diagonal
    // cell (transit) and the destination must both be empty interior cells.
    for (Cell p : cfg) {
        if (p == mover || !side_adjacent(mover, p)) continue;
        Offset arm = mover - p;
        for (Offset u : kAxisOffsets) {
            if (dot(u, arm) != 0) continue;
            Cell dest = p + u;
            Cell transit = p + arm + u;
            if (!empty_interior(dest) || !empty_interior(transit)) continue;
            Move m;
            m.kind = MoveKind::Rotation;
            m.mover = mover;
            m.dest = dest;
            m.supports = {p};
            m.transit = transit;
            moves.push_back(std::move(m));
        }
    }
    return moves;
}

namespace {

// Re-derives one move's legality against cfg (apply_step's per-move check).
bool move_is_legal(const Configuration& cfg, const Field& field, const Move& m, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!occupied(cfg, m.mover)) return fail("mover not in configuration");
    auto empty_interior = [&](Cell c) { return field.contains(c) && !occupied(cfg, c); };
    if (m.kind == MoveKind::Sliding) {
        if (m.supports.size() != 2) return fail("sliding needs two supports");
        for (Cell s : m.supports)
            if (!occupied(cfg, s) || s == m.mover) return fail("sliding support not an occupied other cell");
        Cell a = m.supports[0], b = m.supports[1];
        if (!side_adjacent(a, b)) return fail("sliding supports not side-adjacent");
        // supports are stored sorted; recover the orientation from dest
        if (m.dest - m.mover == a - b) std::swap(a, b);
        if (m.dest - m.mover != b - a) return fail("sliding dest does not follow supports");
        if (!side_adjacent(m.mover, a)) return fail("sliding mover not side-adjacent to first support");
        if (!empty_interior(m.dest)) return fail("sliding dest not an empty interior cell");
        return true;
    }
    if (m.supports.size() != 1) return fail("rotation needs one pivot");
    Cell p = m.supports[0];
    if (!occupied(cfg, p) || p == m.mover) return fail("rotation pivot not an occupied other cell");
    Offset arm = m.mover - p;
    Offset out = m.dest - p;
    if (!is_unit(arm) || !is_unit(out) || dot(arm, out) != 0)
        return fail("rotation geometry invalid");
    if (m.transit != p + arm + out) return fail("rotation transit cell mismatch");
    if (!empty_interior(m.dest) || !empty_interior(m.transit))
        return fail("rotation track not empty interior");
    return true;
}

}  // namespace

bool try_apply_step(const Configuration& cfg, const Field& field, const std::vector<Move>& moves,
                    Configuration* out, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (moves.empty()) {
        if (out) *out = cfg;
        return true;
    }

    std::vector<Cell> movers;
    for (const Move& m : moves) movers.push_back(m.mover);
    std::sort(movers.begin(), movers.end());
    if (std::adjacent_find(movers.begin(), movers.end()) != movers.end())
        return fail("duplicate mover");

    std::string why;
    for (const Move& m : moves)
        if (!move_is_legal(cfg, field, m, &why))
            return fail("illegal move of " + to_string(m.mover) + ": " + why);

    // (a) statics non-empty and connected
    Configuration statics;
    for (Cell c : cfg)
        if (!std::binary_search(movers.begin(), movers.end(), c)) statics.push_back(c);
    if (statics.empty()) return fail("no static module");
    if (!is_connected(statics)) return fail("static modules disconnected");

    // (b) supports static
    for (const Move& m : moves)
        for (Cell s : m.supports)
            if (!occupied(statics, s))
                return fail("support " + to_string(s) + " of " + to_string(m.mover) + " is moving");

    // (c) tracks pairwise disjoint, disjoint from statics and other movers' starts
    std::vector<Cell> all_track;
    for (const Move& m : moves) {
        for (Cell c : m.track()) {
            if (occupied(statics, c)) return fail("track overlap with static cell " + to_string(c));
            for (const Move& other : moves)
                if (other.mover != m.mover && other.mover == c)
                    return fail("track overlap with mover start " + to_string(c));
            all_track.push_back(c);
        }
    }
    std::sort(all_track.begin(), all_track.end());
    if (std::adjacent_find(all_track.begin(), all_track.end()) != all_track.end())
        return fail("track overlap between moves");

    // (d) result invariants
    Configuration result = statics;
    for (const Move& m : moves) result.push_back(m.dest);
    std::sort(result.begin(), result.end());
    if (std::adjacent_find(result.begin(), result.end()) != result.end())
        return fail("duplicate destination");
    if (!is_connected(result)) return fail("result disconnected");
    if (out) *out = std::move(result);
    return true;
}

Configuration apply_step(const Configuration& cfg, const Field& field, const std::vector<Move>& moves) {
    Configuration out;
    std::string error;
    if (!try_apply_step(cfg, field, moves, &out, &error)) throw StepError(error);
    return out;
}

}  // namespace mrs
