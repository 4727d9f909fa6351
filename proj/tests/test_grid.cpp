#include <random>

#include "doctest.h"
#include "mrs/grid.hpp"
#include "oracles.hpp"

using namespace mrs;

TEST_CASE("side adjacency") {
    CHECK(side_adjacent({0, 0, 0}, {1, 0, 0}));
    CHECK(side_adjacent({0, 0, 0}, {0, -1, 0}));
    CHECK_FALSE(side_adjacent({0, 0, 0}, {0, 0, 0}));
    CHECK_FALSE(side_adjacent({0, 0, 0}, {1, 1, 0}));
    CHECK_FALSE(side_adjacent({0, 0, 0}, {2, 0, 0}));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_configuration({{0, 0, 0}, {1, 0, 0}})));
    CHECK_FALSE(is_connected(make_configuration({{0, 0, 0}, {2, 0, 0}})));
    CHECK(is_connected(make_configuration({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}})));
    CHECK_THROWS_AS(is_connected(Configuration{}), MrsError);
}

TEST_CASE("field walls") {
    Field f(3, 2, 1);
    CHECK(f.contains({0, 0, 0}));
    CHECK(f.contains({2, 1, 0}));
    CHECK_FALSE(f.contains({3, 0, 0}));
    CHECK_FALSE(f.contains({0, -1, 0}));
    CHECK_FALSE(f.contains({0, 0, 1}));
    CHECK_FALSE(f.contains({-2, -2, -2}));  // beyond-corner cells are walls too
    CHECK_THROWS_AS(Field(0, 1, 1), MrsError);
}

TEST_CASE("legal moves: two modules in a 3x1x1 corridor have none") {
    Field f(3, 1, 1);
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}});
    CHECK(legal_moves(cfg, f, {1, 0, 0}).empty());
    CHECK(legal_moves(cfg, f, {0, 0, 0}).empty());
}

TEST_CASE("legal moves: end of a 3-chain has exactly the four rotations") {
    Field f = Field::unbounded();
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    auto moves = legal_moves(cfg, f, {2, 0, 0});
    REQUIRE(moves.size() == 4);
    for (const Move& m : moves) {
        CHECK(m.kind == MoveKind::Rotation);
        CHECK(m.supports == std::vector<Cell>{{1, 0, 0}});
    }
    // no sliding: dest would land on an occupied support cell
    for (const Move& m : moves) CHECK(m.dest != Cell{3, 0, 0});
}

TEST_CASE("legal moves: single module cannot move") {
    Field f(5, 5, 5);
    auto cfg = make_configuration({{2, 2, 2}});
    CHECK(legal_moves(cfg, f, {2, 2, 2}).empty());
}

TEST_CASE("legal moves: mover must be part of the configuration") {
    Field f(5, 5, 5);
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}});
    CHECK_THROWS_AS(legal_moves(cfg, f, {4, 4, 4}), MrsError);
}

TEST_CASE("legal moves agree with the brute-force oracle") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + (int)(rng() % 4);
        Configuration cfg = mrs::test::random_connected(n, rng);
        Field f = iter % 2 ? Field(4, 4, 4) : Field::unbounded();
        if (iter % 2) {
            // shift into the bounded field where possible
            Configuration shifted;
            for (Cell c : cfg) shifted.push_back(c + Cell{1, 1, 1});
            bool inside = true;
            for (Cell c : shifted) inside = inside && f.contains(c);
            if (!inside) continue;
            cfg = make_configuration(shifted);
        }
        for (Cell mover : cfg) {
            CAPTURE(iter);
            CHECK(mrs::test::same_move_set(legal_moves(cfg, f, mover),
                                           mrs::test::oracle_legal_moves(cfg, f, mover)));
        }
    }
}

TEST_CASE("apply step: empty move set is the identity") {
    Field f(4, 4, 4);
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}});
    CHECK(apply_step(cfg, f, {}) == cfg);
}

TEST_CASE("apply step: single rotation example") {
    Field f = Field::unbounded();
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}});
    Move m;
    m.kind = MoveKind::Rotation;
    m.mover = {0, 0, 1};
    m.supports = {{0, 0, 0}};
    m.dest = {-1, 0, 0};
    m.transit = {-1, 0, 1};
    auto next = apply_step(cfg, f, {m});
    CHECK(next == make_configuration({{0, 0, 0}, {1, 0, 0}, {-1, 0, 0}}));
}

TEST_CASE("apply step: track overlap is rejected loudly") {
    Field f = Field::unbounded();
    // both ends of a 3-line rotate about the middle into the same cell
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    auto moves_a = legal_moves(cfg, f, {0, 0, 0});
    auto moves_b = legal_moves(cfg, f, {2, 0, 0});
    bool found_conflict = false;
    for (const Move& ma : moves_a)
        for (const Move& mb : moves_b) {
            bool overlap = false;
            for (Cell ca : ma.track())
                for (Cell cb : mb.track()) overlap = overlap || ca == cb;
            if (!overlap) continue;
            found_conflict = true;
            CHECK_THROWS_WITH_AS(apply_step(cfg, f, {ma, mb}), doctest::Contains("track overlap"),
                                 StepError);
        }
    CHECK(found_conflict);
}

TEST_CASE("apply step: static set must be non-empty and connected") {
    Field f = Field::unbounded();
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}});
    auto moves = legal_moves(cfg, f, {1, 0, 0});
    REQUIRE_FALSE(moves.empty());
    // moving the lone support of the other module: single move is fine, but
    // moving both modules leaves no static module
    auto moves0 = legal_moves(cfg, f, {0, 0, 0});
    REQUIRE_FALSE(moves0.empty());
    // pick non-overlapping tracks
    bool checked = false;
    for (const Move& ma : moves)
        for (const Move& mb : moves0) {
            bool overlap = false;
            for (Cell ca : ma.track())
                for (Cell cb : mb.track()) overlap = overlap || ca == cb;
            if (overlap) continue;
            CHECK_THROWS_WITH_AS(apply_step(cfg, f, {ma, mb}), doctest::Contains("static"), StepError);
            checked = true;
        }
    CHECK(checked);
}

TEST_CASE("apply step: supports must be static") {
    Field f = Field::unbounded();
    auto cfg = make_configuration({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}});
    // (2,0,0) rotates about (1,0,0); simultaneously (1,0,0) tries to rotate
    auto moves_end = legal_moves(cfg, f, {2, 0, 0});
    auto moves_mid = legal_moves(cfg, f, {1, 0, 0});
    bool checked = false;
    for (const Move& ma : moves_end) {
        if (ma.supports != std::vector<Cell>{{1, 0, 0}}) continue;
        for (const Move& mb : moves_mid) {
            bool overlap = false;
            for (Cell ca : ma.track())
                for (Cell cb : mb.track()) overlap = overlap || ca == cb;
            if (overlap) continue;
            CHECK_THROWS_AS(apply_step(cfg, f, {ma, mb}), StepError);
            checked = true;
        }
    }
    CHECK(checked);
}

TEST_CASE("property: legal steps preserve the configuration invariants") {
    std::mt19937 rng(777);
    Field f = Field::unbounded();
    for (int iter = 0; iter < 300; ++iter) {
        Configuration cfg = mrs::test::random_connected(3 + (int)(rng() % 3), rng);
        std::vector<Move> all;
        for (Cell c : cfg)
            for (Move& m : legal_moves(cfg, f, c)) all.push_back(std::move(m));
        if (all.empty()) continue;
        const Move& pick = all[rng() % all.size()];
        Configuration next;
        std::string err;
        if (try_apply_step(cfg, f, {pick}, &next, &err)) {
            CHECK(next.size() == cfg.size());
            CHECK(is_connected(next));
            CHECK(std::adjacent_find(next.begin(), next.end()) == next.end());
            // rotation reversibility: the inverse rotation is legal afterwards
            if (pick.kind == MoveKind::Rotation) {
                auto back = legal_moves(next, f, pick.dest);
                bool reversible = false;
                for (const Move& b : back)
                    reversible = reversible || (b.kind == MoveKind::Rotation && b.dest == pick.mover &&
                                                b.supports == pick.supports);
                CHECK(reversible);
            }
        }
    }
}

TEST_CASE("property: legal moves are translation invariant") {
    std::mt19937 rng(4242);
    Field f = Field::unbounded();
    for (int iter = 0; iter < 100; ++iter) {
        Configuration cfg = mrs::test::random_connected(4, rng);
        Cell shift{(int)(rng() % 7) - 3, (int)(rng() % 7) - 3, (int)(rng() % 7) - 3};
        Configuration moved;
        for (Cell c : cfg) moved.push_back(c + shift);
        moved = make_configuration(moved);
        for (Cell mover : cfg) {
            auto a = legal_moves(cfg, f, mover);
            auto b = legal_moves(moved, f, mover + shift);
            REQUIRE(a.size() == b.size());
            for (Move& m : a) {
                m.mover = m.mover + shift;
                m.dest = m.dest + shift;
                for (Cell& s : m.supports) s = s + shift;
                m.transit = m.transit + shift;
            }
            CHECK(mrs::test::same_move_set(a, b));
        }
    }
}
