#include "mrs/vec.hpp"

#include <cctype>
#include <cstdio>

namespace mrs {

std::string to_string(Vec3 v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "(%d,%d,%d)", v.x, v.y, v.z);
    return buf;
}

bool parse_vec3(const std::string& text, Vec3& out) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto parse_int = [&](int& value) {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        size_t digits = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == digits) return false;
        value = std::atoi(text.substr(start, i - start).c_str());
        return true;
    };
    skip_ws();
    bool parens = i < text.size() && text[i] == '(';
    if (parens) ++i;
    int coords[3];
    for (int c = 0; c < 3; ++c) {
        if (!parse_int(coords[c])) return false;
        skip_ws();
        if (c < 2) {
            if (i >= text.size() || text[i] != ',') return false;
            ++i;
        }
    }
    if (parens) {
        if (i >= text.size() || text[i] != ')') return false;
        ++i;
    }
    skip_ws();
    if (i != text.size()) return false;
    out = {coords[0], coords[1], coords[2]};
    return true;
}

}  // namespace mrs
