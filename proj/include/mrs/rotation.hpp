#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mrs/vec.hpp"

namespace mrs {

// Signed-permutation transform with determinant +1 (a proper rotation of the
// cubic lattice). axis[i] / sign[i] give the image of basis vector e_i.
struct Rot {
    std::array<int8_t, 3> axis = {0, 1, 2};
    std::array<int8_t, 3> sign = {1, 1, 1};

    constexpr Vec3 operator()(Vec3 v) const {
        int out[3] = {0, 0, 0};
        const int in[3] = {v.x, v.y, v.z};
        for (int i = 0; i < 3; ++i) out[axis[i]] = sign[i] * in[i];
        return {out[0], out[1], out[2]};
    }

    friend bool operator==(const Rot& a, const Rot& b) { return a.axis == b.axis && a.sign == b.sign; }
    friend bool operator!=(const Rot& a, const Rot& b) { return !(a == b); }
};

inline constexpr Rot kIdentityRot{};

// (a*b)(v) == a(b(v))
Rot compose(const Rot& a, const Rot& b);
Rot inverse(const Rot& r);
int determinant(const Rot& r);

bool is_identity(const Rot& r);

// The 24 proper rotations of the cube, in a fixed documented order: sorted by
// the encoding (axis[0], sign[0], axis[1], sign[1], axis[2], sign[2]) with
// '+' before '-'. The identity is first. Rule matching iterates rotations in
// this order, so the order is part of the deterministic selection policy.
const std::vector<Rot>& all_rotations();

// The 4 rotations about the z axis (z axis fixed, positively), same ordering
// convention: identity, 180deg, 90deg, 270deg.
const std::vector<Rot>& z_rotations();

// Compact deterministic id of a rotation: its index in all_rotations().
int rotation_index(const Rot& r);

}  // namespace mrs
