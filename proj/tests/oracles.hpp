// Test-side oracles, kept independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "mrs/grid.hpp"
#include "mrs/observation.hpp"

namespace mrs::test {

// Brute-force legal-move enumeration: try every support assignment and
// destination, keeping combinations that satisfy the Move invariants as
// literally stated. Independent of legal_moves' search order.
inline std::vector<Move> oracle_legal_moves(const Configuration& cfg, const Field& field, Cell mover) {
    std::vector<Move> out;
    auto empty_interior = [&](Cell c) { return field.contains(c) && !occupied(cfg, c); };

    // slidings: dest = mover + (b - a) for occupied side-adjacent a,b with
    // mover side-adjacent to a and dest side-adjacent to b
    for (Cell a : cfg)
        for (Cell b : cfg) {
            if (a == mover || b == mover || a == b) continue;
            if (!side_adjacent(a, b)) continue;
            if (!side_adjacent(mover, a)) continue;
            Cell dest = mover + (b - a);
            if (!side_adjacent(dest, b)) continue;
            if (!empty_interior(dest)) continue;
            Move m;
            m.kind = MoveKind::Sliding;
            m.mover = mover;
            m.dest = dest;
            m.supports = {std::min(a, b), std::max(a, b)};
            out.push_back(m);
        }

    // rotations: every perpendicular quarter turn about an occupied pivot
    for (Cell p : cfg) {
        if (p == mover || !side_adjacent(mover, p)) continue;
        for (Offset u : kAxisOffsets) {
            if (dot(u, mover - p) != 0) continue;
            Cell dest = p + u;
            Cell transit = p + (mover - p) + u;
            if (!empty_interior(dest) || !empty_interior(transit)) continue;
            Move m;
            m.kind = MoveKind::Rotation;
            m.mover = mover;
            m.dest = dest;
            m.supports = {p};
            m.transit = transit;
            out.push_back(m);
        }
    }
    return out;
}

inline bool same_move_set(std::vector<Move> a, std::vector<Move> b) {
    auto key = [](const Move& m) {
        std::vector<int> k = {(int)m.kind, m.mover.x, m.mover.y, m.mover.z, m.dest.x, m.dest.y, m.dest.z};
        for (Cell s : m.supports) {
            k.push_back(s.x);
            k.push_back(s.y);
            k.push_back(s.z);
        }
        return k;
    };
    auto lt = [&](const Move& l, const Move& r) { return key(l) < key(r); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (key(a[i]) != key(b[i])) return false;
    return true;
}

// Random connected n-cell configuration grown from the origin.
inline Configuration random_connected(int n, std::mt19937& rng) {
    std::set<Cell> cells = {{0, 0, 0}};
    while ((int)cells.size() < n) {
        std::vector<Cell> frontier;
        for (Cell c : cells)
            for (Offset d : kAxisOffsets)
                if (!cells.count(c + d)) frontier.push_back(c + d);
        cells.insert(frontier[rng() % frontier.size()]);
    }
    return Configuration(cells.begin(), cells.end());
}

// Independent symmetric-pair oracle: two modules are symmetric iff some
// frame assignment from the mode's group gives them equal observations in an
// unbounded wall-free context. Goes through the observation machinery rather
// than view-set arithmetic.
inline bool oracle_symmetric(const Configuration& cfg, Cell u, Cell v, CompassMode mode, int k) {
    Field open = Field::unbounded();
    for (const Rot& fu : rotation_group(mode)) {
        Observation ou = observe(cfg, open, u, fu, k);
        for (const Rot& fv : rotation_group(mode)) {
            if (observe(cfg, open, v, fv, k) == ou) return true;
        }
    }
    return false;
}

// Fixed polycubes are in bijection with connected n-sets whose lex-least
// cell is the origin. Counts them by connected-subgraph enumeration with an
// exclusion set (each subset generated exactly once); no canonicalization.
inline long long oracle_fixed_polycube_count(int n) {
    if (n < 1) return 0;
    const Cell origin{0, 0, 0};
    std::set<Cell> included = {origin};
    std::set<Cell> excluded;
    long long count = n == 1 ? 0 : 0;
    auto allowed = [&](Cell c) { return origin < c; };

    std::function<void(std::vector<Cell>)> grow = [&](std::vector<Cell> frontier) {
        if ((int)included.size() == n) {
            ++count;
            return;
        }
        std::vector<Cell> excluded_here;
        while (!frontier.empty()) {
            Cell c = frontier.back();
            frontier.pop_back();
            included.insert(c);
            std::vector<Cell> next = frontier;
            for (Offset d : kAxisOffsets) {
                Cell g = c + d;
                if (allowed(g) && !included.count(g) && !excluded.count(g) &&
                    std::find(next.begin(), next.end(), g) == next.end())
                    next.push_back(g);
            }
            grow(next);
            included.erase(c);
            excluded.insert(c);
            excluded_here.push_back(c);
        }
        for (Cell c : excluded_here) excluded.erase(c);
    };

    if (n == 1) return 1;
    std::vector<Cell> frontier;
    for (Offset d : kAxisOffsets)
        if (allowed(origin + d)) frontier.push_back(origin + d);
    grow(frontier);
    return count;
}

}  // namespace mrs::test
