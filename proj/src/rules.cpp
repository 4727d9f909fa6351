#include "mrs/rules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mrs {

void validate_rule(const Rule& rule, int k) {
    auto check_set = [&](const std::vector<Offset>& set, const char* which) {
        for (Offset o : set) {
            if (is_zero(o)) throw MrsError("rule " + rule.name + ": zero offset in " + which);
            if (max_norm(o) > k)
                throw MrsError("rule " + rule.name + ": offset " + to_string(o) + " exceeds radius " +
                               std::to_string(k));
        }
    };
    check_set(rule.cm, "C_m");
    check_set(rule.cw, "C_w");
    check_set(rule.ce, "C_e");
    std::vector<Offset> all;
    all.insert(all.end(), rule.cm.begin(), rule.cm.end());
    all.insert(all.end(), rule.cw.begin(), rule.cw.end());
    all.insert(all.end(), rule.ce.begin(), rule.ce.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw MrsError("rule " + rule.name + ": C_m/C_w/C_e not pairwise disjoint");
    Offset out = rule.output;
    int nonzero = (out.x != 0) + (out.y != 0) + (out.z != 0);
    if (max_norm(out) > 1 || nonzero > 2)
        throw MrsError("rule " + rule.name + ": output " + to_string(out) + " not a single move");
}

namespace {

// An output is "an output with movement" only if the commanded move is
// locally possible: destination and swept cells empty interior cells and a
// support in place. All of it is visible within the k-neighborhood. Outputs
// whose move is blocked fall through to later rules.
bool output_realizable(const Observation& obs, Offset o) {
    int nonzero = (o.x != 0) + (o.y != 0) + (o.z != 0);
    if (max_norm(o) != 1 || nonzero > 2) return false;
    if (obs.at(o) != CellKind::Empty) return false;
    if (nonzero == 1) {
        // sliding: side-adjacent occupied supports a and a+o
        for (Offset a : kAxisOffsets) {
            Offset b = a + o;
            if (is_zero(b) || max_norm(b) > obs.k()) continue;
            if (obs.at(a) == CellKind::Module && obs.at(b) == CellKind::Module) return true;
        }
        return false;
    }
    // rotation: pivot one unit component, transit the other
    Offset u{o.x, 0, 0}, v{0, o.y, o.z};
    if (o.x == 0) {
        u = {0, o.y, 0};
        v = {0, 0, o.z};
    } else if (o.y == 0) {
        v = {0, 0, o.z};
    } else {
        v = {0, o.y, 0};
    }
    if (obs.at(u) == CellKind::Module && obs.at(v) == CellKind::Empty) return true;
    if (obs.at(v) == CellKind::Module && obs.at(u) == CellKind::Empty) return true;
    return false;
}

// rule matches under R iff R(obs).modules == C_m exactly and C_w/C_e hold as
// subsets; all checks go through R^-1 so no rotated observation is built.
bool rule_matches(const Observation& obs, const Rule& rule, const Rot& rinv) {
    if (obs.module_count() != (int)rule.cm.size()) return false;
    for (Offset c : rule.cm)
        if (obs.at(rinv(c)) != CellKind::Module) return false;
    for (Offset c : rule.cw)
        if (obs.at(rinv(c)) != CellKind::Wall) return false;
    for (Offset c : rule.ce)
        if (obs.at(rinv(c)) != CellKind::Empty) return false;
    return output_realizable(obs, rinv(rule.output));
}

MatchResult make_result(const Rule& rule, bool is_norm, int rule_index, int rot_index, const Rot& rinv) {
    MatchResult r;
    r.matched = true;
    r.is_norm = is_norm;
    r.rule_index = rule_index;
    r.rotation_index = rot_index;
    r.output = rinv(rule.output);
    r.rule_name = rule.name;
    return r;
}

}  // namespace

MatchResult match_rule_detailed(const Observation& obs, const RuleTable& table,
                                const std::vector<Rot>& rotation_order) {
    std::vector<Rot> inverses(rotation_order.size());
    for (size_t i = 0; i < rotation_order.size(); ++i) inverses[i] = inverse(rotation_order[i]);
    // normalization rules take priority: they rescue exceptional initial
    // placements whose main-rule continuation is blocked by walls, and their
    // guards keep them inert on sweep-reachable states
    for (int pass = 0; pass < 2; ++pass) {
        const auto& rules = pass == 0 ? table.norm_rules : table.rules;
        for (size_t ri = 0; ri < rules.size(); ++ri) {
            if (is_zero(rules[ri].output)) continue;  // no-op rows never count as a match
            for (size_t gi = 0; gi < rotation_order.size(); ++gi)
                if (rule_matches(obs, rules[ri], inverses[gi]))
                    return make_result(rules[ri], pass == 0, (int)ri, (int)gi, inverses[gi]);
        }
    }
    return {};
}

std::vector<MatchResult> match_rule_all(const Observation& obs, const RuleTable& table,
                                        const std::vector<Rot>& rotation_order) {
    std::vector<MatchResult> out;
    for (int pass = 0; pass < 2; ++pass) {
        const auto& rules = pass == 0 ? table.norm_rules : table.rules;
        for (size_t ri = 0; ri < rules.size(); ++ri) {
            if (is_zero(rules[ri].output)) continue;
            for (size_t gi = 0; gi < rotation_order.size(); ++gi) {
                Rot rinv = inverse(rotation_order[gi]);
                if (rule_matches(obs, rules[ri], rinv))
                    out.push_back(make_result(rules[ri], pass == 0, (int)ri, (int)gi, rinv));
            }
        }
    }
    return out;
}

Offset match_rule(const Observation& obs, const RuleTable& table, CompassMode mode) {
    return match_rule_detailed(obs, table, rotation_group(mode)).output;
}

// ---- parsing ----------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Offset> parse_offset_set(const std::string& body, int line) {
    std::vector<Offset> out;
    std::string stripped;
    for (char c : body)
        if (!std::isspace((unsigned char)c)) stripped += c;
    if (stripped.empty()) return out;
    // split on ');' boundaries: entries look like (x,y,z)
    size_t i = 0;
    while (i < stripped.size()) {
        if (stripped[i] != '(') throw ParseError(line, "expected '(' in offset set");
        size_t close = stripped.find(')', i);
        if (close == std::string::npos) throw ParseError(line, "unterminated offset");
        Vec3 v;
        if (!parse_vec3(stripped.substr(i, close - i + 1), v))
            throw ParseError(line, "bad offset " + stripped.substr(i, close - i + 1));
        out.push_back(v);
        i = close + 1;
        if (i < stripped.size()) {
            if (stripped[i] != ';') throw ParseError(line, "expected ';' between offsets");
            ++i;
        }
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw ParseError(line, "duplicate offset in set");
    return out;
}

// extracts the {...} body following the given marker letter
std::string take_braced(const std::string& text, size_t& pos, char marker, int line) {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    if (pos >= text.size() || text[pos] != marker)
        throw ParseError(line, std::string("expected ") + marker + "{...}");
    ++pos;
    if (pos >= text.size() || text[pos] != '{') throw ParseError(line, "expected '{'");
    size_t close = text.find('}', pos);
    if (close == std::string::npos) throw ParseError(line, "unterminated '{'");
    std::string body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    return body;
}

}  // namespace

RuleTable parse_table(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    RuleTable table;
    bool saw_magic = false, saw_mode = false, saw_modules = false, saw_k = false;

    while (std::getline(in, raw)) {
        ++line;
        std::string s = strip(raw);
        if (s.empty() || s[0] == '#') continue;
        if (!saw_magic) {
            if (s != "mrs-table v1") throw ParseError(line, "expected 'mrs-table v1'");
            saw_magic = true;
            continue;
        }
        if (s.rfind("mode:", 0) == 0) {
            if (!parse_compass_mode(strip(s.substr(5)), table.mode))
                throw ParseError(line, "unknown mode (compass|vertical|none)");
            saw_mode = true;
            continue;
        }
        if (s.rfind("modules:", 0) == 0) {
            table.module_count = std::atoi(strip(s.substr(8)).c_str());
            if (table.module_count < 1) throw ParseError(line, "modules must be positive");
            saw_modules = true;
            continue;
        }
        if (s.rfind("k:", 0) == 0) {
            table.k = std::atoi(strip(s.substr(2)).c_str());
            if (table.k < 1) throw ParseError(line, "k must be >= 1");
            saw_k = true;
            continue;
        }
        if (s.rfind("rule", 0) == 0) {
            if (!saw_mode || !saw_modules || !saw_k)
                throw ParseError(line, "rule before complete header");
            size_t pos = 4;
            while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
            size_t name_end = pos;
            while (name_end < s.size() && !std::isspace((unsigned char)s[name_end])) ++name_end;
            Rule rule;
            rule.name = s.substr(pos, name_end - pos);
            if (rule.name.empty()) throw ParseError(line, "rule needs a name");
            pos = name_end;
            while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
            if (s.compare(pos, 4, "norm") == 0 &&
                (pos + 4 == s.size() || std::isspace((unsigned char)s[pos + 4]))) {
                rule.norm = true;
                pos += 4;
            }
            rule.cm = parse_offset_set(take_braced(s, pos, 'M', line), line);
            rule.cw = parse_offset_set(take_braced(s, pos, 'W', line), line);
            rule.ce = parse_offset_set(take_braced(s, pos, 'E', line), line);
            while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
            if (s.compare(pos, 2, "->") != 0) throw ParseError(line, "expected '->'");
            pos += 2;
            Vec3 out;
            if (!parse_vec3(strip(s.substr(pos)), out)) throw ParseError(line, "bad output offset");
            rule.output = out;
            try {
                validate_rule(rule, table.k);
            } catch (const MrsError& e) {
                throw ParseError(line, e.what());
            }
            (rule.norm ? table.norm_rules : table.rules).push_back(std::move(rule));
            continue;
        }
        throw ParseError(line, "unrecognized line: " + s);
    }
    if (!saw_magic) throw ParseError(line, "empty table file");
    if (!saw_mode || !saw_modules || !saw_k) throw ParseError(line, "incomplete header");
    return table;
}

std::string serialize_table(const RuleTable& table) {
    std::ostringstream out;
    out << "mrs-table v1\n";
    out << "mode: " << to_string(table.mode) << "\n";
    out << "modules: " << table.module_count << "\n";
    out << "k: " << table.k << "\n";
    auto emit_set = [&](const std::vector<Offset>& set) {
        for (size_t i = 0; i < set.size(); ++i) out << (i ? ";" : "") << to_string(set[i]);
    };
    auto emit = [&](const Rule& r) {
        out << "rule " << r.name;
        if (r.norm) out << " norm";
        out << " M{";
        emit_set(r.cm);
        out << "} W{";
        emit_set(r.cw);
        out << "} E{";
        emit_set(r.ce);
        out << "} -> " << to_string(r.output) << "\n";
    };
    for (const Rule& r : table.rules) emit(r);
    for (const Rule& r : table.norm_rules) emit(r);
    return out.str();
}

}  // namespace mrs
