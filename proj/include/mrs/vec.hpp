#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace mrs {

// Integer lattice vector. Used both for absolute cells and relative offsets.
struct Vec3 {
    int x = 0;
    int y = 0;
    int z = 0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(Vec3 a, Vec3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend constexpr bool operator!=(Vec3 a, Vec3 b) { return !(a == b); }
    // Lexicographic order (x, then y, then z); anchors and trace output rely on it.
    friend constexpr bool operator<(Vec3 a, Vec3 b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
};

using Cell = Vec3;
using Offset = Vec3;

inline constexpr std::array<Offset, 6> kAxisOffsets = {{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
}};

inline constexpr int max_norm(Vec3 v) {
    int m = std::abs(v.x);
    if (std::abs(v.y) > m) m = std::abs(v.y);
    if (std::abs(v.z) > m) m = std::abs(v.z);
    return m;
}

inline constexpr int l1_norm(Vec3 v) { return std::abs(v.x) + std::abs(v.y) + std::abs(v.z); }

inline constexpr bool is_unit(Vec3 v) { return l1_norm(v) == 1 && max_norm(v) == 1; }

inline constexpr int dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline constexpr bool is_zero(Vec3 v) { return v.x == 0 && v.y == 0 && v.z == 0; }

// "(x,y,z)" without spaces.
std::string to_string(Vec3 v);

// Parses "(x,y,z)" or "x,y,z"; whitespace tolerated. Returns false on malformed input.
bool parse_vec3(const std::string& text, Vec3& out);

struct Vec3Hash {
    size_t operator()(Vec3 v) const {
        uint64_t h = (uint64_t)(uint32_t)v.x;
        h = h * 0x9e3779b97f4a7c15ull + (uint32_t)v.y;
        h = h * 0x9e3779b97f4a7c15ull + (uint32_t)v.z;
        return (size_t)(h ^ (h >> 32));
    }
};

}  // namespace mrs
