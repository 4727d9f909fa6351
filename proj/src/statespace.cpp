#include "mrs/statespace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mrs {

Shape canonical_translation(const Configuration& cfg) {
    if (cfg.empty()) throw MrsError("empty configuration");
    Shape s = cfg;
    std::sort(s.begin(), s.end());
    Cell anchor = s.front();
    for (Cell& c : s) c = c - anchor;
    return s;
}

Shape canonical_mode(const Configuration& cfg, CompassMode mode) {
    Shape best;
    for (const Rot& r : rotation_group(mode)) {
        Configuration img;
        img.reserve(cfg.size());
        for (Cell c : cfg) img.push_back(r(c));
        Shape cand = canonical_translation(make_configuration(std::move(img)));
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

std::vector<Shape> enumerate_shapes(int n) {
    if (n < 1) throw MrsError("n must be >= 1");
    std::set<Shape> current = {{{0, 0, 0}}};
    for (int size = 1; size < n; ++size) {
        std::set<Shape> next;
        for (const Shape& s : current)
            for (Cell c : s)
                for (Offset d : kAxisOffsets) {
                    Cell grown = c + d;
                    if (std::binary_search(s.begin(), s.end(), grown)) continue;
                    Shape bigger = s;
                    bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), grown), grown);
                    next.insert(canonical_translation(bigger));
                }
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

std::vector<Shape> enumerate_shapes(int n, CompassMode mode) {
    std::set<Shape> classes;
    for (const Shape& s : enumerate_shapes(n)) classes.insert(canonical_mode(s, mode));
    return {classes.begin(), classes.end()};
}

namespace {

// offsets of the other modules as seen from `from`, sorted
std::vector<Offset> view_from(const Configuration& cfg, Cell from) {
    std::vector<Offset> v;
    for (Cell c : cfg)
        if (c != from) v.push_back(c - from);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Rot> witnesses(const std::vector<Offset>& view_u, const std::vector<Offset>& view_v,
                           CompassMode mode) {
    std::vector<Rot> out;
    for (const Rot& g : rotation_group(mode)) {
        std::vector<Offset> img;
        img.reserve(view_u.size());
        for (Offset o : view_u) img.push_back(g(o));
        std::sort(img.begin(), img.end());
        if (img == view_v) out.push_back(g);
    }
    return out;
}

}  // namespace

std::vector<std::pair<Cell, Cell>> symmetric_pairs(const Configuration& cfg, CompassMode mode) {
    std::vector<std::pair<Cell, Cell>> pairs;
    for (size_t i = 0; i < cfg.size(); ++i)
        for (size_t j = i + 1; j < cfg.size(); ++j)
            if (!witnesses(view_from(cfg, cfg[i]), view_from(cfg, cfg[j]), mode).empty())
                pairs.emplace_back(cfg[i], cfg[j]);
    return pairs;
}

namespace {

// A support-free description of a candidate single-module move; support
// existence is checked against the statics of the whole step.
struct CandidateMove {
    Cell mover, dest;
    MoveKind kind;
    Cell pivot{};  // rotation only; transit = pivot + (mover-pivot) + (dest-pivot)

    Cell transit() const { return pivot + (mover - pivot) + (dest - pivot); }
};

std::vector<CandidateMove> candidate_moves(const Configuration& cfg, Cell mover) {
    std::vector<CandidateMove> out;
    auto empty_cell = [&](Cell c) { return !occupied(cfg, c); };
    // slidings, deduplicated by destination
    std::set<Cell> sliding_dests;
    for (Cell a : cfg) {
        if (a == mover || !side_adjacent(mover, a)) continue;
        for (Cell b : cfg) {
            if (b == mover || b == a || !side_adjacent(a, b)) continue;
            Cell dest = mover + (b - a);
            if (!empty_cell(dest)) continue;
            if (sliding_dests.insert(dest).second)
                out.push_back({mover, dest, MoveKind::Sliding, {}});
        }
    }
    for (Cell p : cfg) {
        if (p == mover || !side_adjacent(mover, p)) continue;
        Offset arm = mover - p;
        for (Offset u : kAxisOffsets) {
            if (dot(u, arm) != 0) continue;
            Cell dest = p + u;
            Cell transit = p + arm + u;
            if (!empty_cell(dest) || !empty_cell(transit)) continue;
            out.push_back({mover, dest, MoveKind::Rotation, p});
        }
    }
    return out;
}

// sliding support realizable within statics?
bool sliding_supported(const Configuration& statics, Cell mover, Cell dest) {
    Offset delta = dest - mover;
    for (Cell a : statics) {
        if (!side_adjacent(mover, a)) continue;
        Cell b = a + delta;
        if (occupied(statics, b)) return true;
    }
    return false;
}

struct PairConstraint {
    size_t u, v;                 // module indices
    std::vector<Rot> witnesses;  // view_v == G(view_u)
};

bool step_consistent_and_legal(const Configuration& cfg, const std::vector<size_t>& movers,
                               const std::vector<const CandidateMove*>& chosen,
                               const std::vector<PairConstraint>& constraints,
                               Configuration* result_out) {
    // statics non-empty and connected
    Configuration statics;
    std::vector<char> moving(cfg.size(), 0);
    for (size_t m : movers) moving[m] = 1;
    for (size_t i = 0; i < cfg.size(); ++i)
        if (!moving[i]) statics.push_back(cfg[i]);
    if (statics.empty() || !is_connected(statics)) return false;

    // adversarial consistency per symmetric pair
    for (const PairConstraint& pc : constraints) {
        auto fu = std::find(movers.begin(), movers.end(), pc.u);
        auto fv = std::find(movers.begin(), movers.end(), pc.v);
        if ((fu == movers.end()) != (fv == movers.end())) return false;
        if (fu == movers.end()) continue;
        Offset du = chosen[fu - movers.begin()]->dest - cfg[pc.u];
        Offset dv = chosen[fv - movers.begin()]->dest - cfg[pc.v];
        bool ok = false;
        for (const Rot& g : pc.witnesses)
            if (g(du) == dv) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }

    // supports static, tracks pairwise disjoint (track cells are empty
    // pre-step by candidate construction, so they never hit a mover's start)
    std::vector<Cell> track;
    for (size_t i = 0; i < movers.size(); ++i) {
        const CandidateMove& m = *chosen[i];
        if (m.kind == MoveKind::Sliding) {
            if (!sliding_supported(statics, m.mover, m.dest)) return false;
            track.push_back(m.dest);
        } else {
            if (!occupied(statics, m.pivot)) return false;
            track.push_back(m.dest);
            track.push_back(m.transit());
        }
    }
    std::sort(track.begin(), track.end());
    if (std::adjacent_find(track.begin(), track.end()) != track.end()) return false;

    Configuration result = statics;
    for (size_t i = 0; i < movers.size(); ++i) result.push_back(chosen[i]->dest);
    std::sort(result.begin(), result.end());
    if (std::adjacent_find(result.begin(), result.end()) != result.end()) return false;
    if (!is_connected(result)) return false;
    if (result_out) *result_out = std::move(result);
    return true;
}

}  // namespace

TransitionGraph build_transition_graph(int n, CompassMode mode) {
    if (n < 1 || n > 5) throw MrsError("transition graph supported for 1 <= n <= 5");
    TransitionGraph g;
    g.mode = mode;
    g.nodes = enumerate_shapes(n);

    std::map<Shape, int> node_id;
    for (size_t i = 0; i < g.nodes.size(); ++i) node_id[g.nodes[i]] = (int)i;

    std::map<Shape, int> class_id;
    g.mode_class.resize(g.nodes.size());
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        Shape cls = canonical_mode(g.nodes[i], mode);
        auto it = class_id.find(cls);
        if (it == class_id.end()) it = class_id.emplace(cls, (int)class_id.size()).first;
        g.mode_class[i] = it->second;
    }
    g.mode_class_count = (int)class_id.size();

    std::set<TransitionEdge> edges;
    for (size_t ni = 0; ni < g.nodes.size(); ++ni) {
        const Shape& cfg = g.nodes[ni];
        const Cell anchor_before = cfg.front();  // lex-least

        // precompute per-module candidates and symmetric-pair witnesses
        std::vector<std::vector<CandidateMove>> cand(cfg.size());
        for (size_t i = 0; i < cfg.size(); ++i) cand[i] = candidate_moves(cfg, cfg[i]);
        std::vector<PairConstraint> constraints;
        for (size_t i = 0; i < cfg.size(); ++i)
            for (size_t j = i + 1; j < cfg.size(); ++j) {
                auto w = witnesses(view_from(cfg, cfg[i]), view_from(cfg, cfg[j]), mode);
                if (!w.empty()) constraints.push_back({i, j, std::move(w)});
            }

        // enumerate non-empty mover subsets (at least one module static)
        size_t count = cfg.size();
        for (uint32_t mask = 1; mask < (1u << count) - 1; ++mask) {
            std::vector<size_t> movers;
            for (size_t i = 0; i < count; ++i)
                if (mask & (1u << i)) movers.push_back(i);
            bool any_empty = false;
            for (size_t m : movers)
                if (cand[m].empty()) any_empty = true;
            if (any_empty) continue;

            // product of candidate choices
            std::vector<size_t> idx(movers.size(), 0);
            while (true) {
                std::vector<const CandidateMove*> chosen(movers.size());
                for (size_t i = 0; i < movers.size(); ++i) chosen[i] = &cand[movers[i]][idx[i]];
                Configuration result;
                if (step_consistent_and_legal(cfg, movers, chosen, constraints, &result)) {
                    Shape to = canonical_translation(result);
                    Cell anchor_after = *std::min_element(result.begin(), result.end());
                    edges.insert({(int)ni, node_id.at(to), anchor_after - anchor_before});
                }
                size_t d = 0;
                while (d < idx.size()) {
                    if (++idx[d] < cand[movers[d]].size()) break;
                    idx[d] = 0;
                    ++d;
                }
                if (d == idx.size()) break;
            }
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::vector<LocomotionVerdict> locomotion_analysis(const TransitionGraph& graph,
                                                   const std::vector<Offset>& directions) {
    std::vector<LocomotionVerdict> verdicts;
    size_t n = graph.nodes.size();
    for (Offset dir : directions) {
        // longest-walk relaxation; improvement after n rounds means a cycle
        // with positive net displacement along dir exists somewhere
        std::vector<long long> dist(n, 0);
        bool positive_cycle = false;
        for (size_t round = 0; round <= n && !positive_cycle; ++round) {
            bool changed = false;
            for (const TransitionEdge& e : graph.edges) {
                long long w = dot(e.disp, dir);
                if (dist[e.from] + w > dist[e.to]) {
                    dist[e.to] = dist[e.from] + w;
                    changed = true;
                }
            }
            if (!changed) break;
            if (round == n) positive_cycle = true;
        }
        verdicts.push_back({dir, !positive_cycle});
    }
    return verdicts;
}

std::vector<Offset> straight_directions_2(int max_cycle_len) {
    TransitionGraph g = build_transition_graph(2, CompassMode::CommonCompass);
    // walk states: (node, displacement); collect closed-walk displacements
    std::set<Offset> net;
    for (size_t start = 0; start < g.nodes.size(); ++start) {
        std::set<std::pair<int, std::array<int, 3>>> fringe = {{(int)start, {0, 0, 0}}};
        for (int len = 1; len <= max_cycle_len; ++len) {
            std::set<std::pair<int, std::array<int, 3>>> next;
            for (const auto& [node, acc] : fringe)
                for (const TransitionEdge& e : g.edges) {
                    if (e.from != node) continue;
                    std::array<int, 3> acc2 = {acc[0] + e.disp.x, acc[1] + e.disp.y, acc[2] + e.disp.z};
                    if ((size_t)e.to == start) {
                        Offset d{acc2[0], acc2[1], acc2[2]};
                        if (!is_zero(d)) net.insert(d);
                    }
                    next.insert({e.to, acc2});
                }
            fringe = std::move(next);
        }
    }
    std::set<Offset> primitive;
    for (Offset d : net) {
        int g3 = std::gcd(std::gcd(std::abs(d.x), std::abs(d.y)), std::abs(d.z));
        if (g3 > 0) primitive.insert({d.x / g3, d.y / g3, d.z / g3});
    }
    return {primitive.begin(), primitive.end()};
}

int wall_adjacent_state_count_2(int k) {
    if (k < 1) throw MrsError("k must be >= 1");
    // big enough that only the west wall can ever be seen near x ~ 0
    int big = 6 * k + 8;
    Field field(big, big, big);
    int mid = big / 2;
    int count = 0;
    for (const Shape& shape : enumerate_shapes(2)) {
        for (int x = 0; x <= k; ++x) {
            Configuration cfg;
            for (Cell c : shape) cfg.push_back(c + Cell{x, mid, mid});
            cfg = make_configuration(cfg);
            bool west = false, other = false;
            for (Cell m : cfg) {
                Observation obs = observe(cfg, field, m, kIdentityRot, k);
                for (Offset o : obs.offsets_of(CellKind::Wall)) {
                    if ((m + o).x < 0) west = true;
                    else other = true;
                }
            }
            if (west && !other) ++count;
        }
    }
    return count;
}

std::string export_graph(const TransitionGraph& graph, bool mode_level) {
    std::ostringstream out;
    auto shape_str = [](const Shape& s) {
        std::string t;
        for (size_t i = 0; i < s.size(); ++i) t += (i ? ";" : "") + to_string(s[i]);
        return t;
    };
    if (!mode_level) {
        for (size_t i = 0; i < graph.nodes.size(); ++i)
            out << "node " << i << " cells=" << shape_str(graph.nodes[i]) << "\n";
        for (const TransitionEdge& e : graph.edges)
            out << "edge " << e.from << " " << e.to << " disp=" << to_string(e.disp) << "\n";
        return out.str();
    }
    // mode-level: one node per rotation class; edges deduplicated between
    // classes, displacement taken from a representative translation-level edge
    std::vector<int> rep(graph.mode_class_count, -1);
    for (size_t i = 0; i < graph.nodes.size(); ++i)
        if (rep[graph.mode_class[i]] < 0) rep[graph.mode_class[i]] = (int)i;
    for (int c = 0; c < graph.mode_class_count; ++c)
        out << "node " << c << " cells=" << shape_str(graph.nodes[rep[c]]) << "\n";
    std::set<std::pair<int, int>> seen;
    for (const TransitionEdge& e : graph.edges) {
        int cf = graph.mode_class[e.from], ct = graph.mode_class[e.to];
        if (seen.insert({cf, ct}).second)
            out << "edge " << cf << " " << ct << " disp=" << to_string(e.disp) << "\n";
    }
    return out.str();
}

}  // namespace mrs
