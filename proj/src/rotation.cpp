#include "mrs/rotation.hpp"

#include <algorithm>

#include "mrs/grid.hpp"

namespace mrs {

Rot compose(const Rot& a, const Rot& b) {
    // (a*b)(e_i) = a(sign_b[i] * e_{axis_b[i]})
    Rot r;
    for (int i = 0; i < 3; ++i) {
        r.axis[i] = a.axis[b.axis[i]];
        r.sign[i] = (int8_t)(a.sign[b.axis[i]] * b.sign[i]);
    }
    return r;
}

Rot inverse(const Rot& r) {
    Rot inv;
    for (int i = 0; i < 3; ++i) {
        inv.axis[r.axis[i]] = (int8_t)i;
        inv.sign[r.axis[i]] = r.sign[i];
    }
    return inv;
}

int determinant(const Rot& r) {
    // sign of the permutation times product of signs
    int perm_sign = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (r.axis[i] > r.axis[j]) perm_sign = -perm_sign;
    return perm_sign * r.sign[0] * r.sign[1] * r.sign[2];
}

bool is_identity(const Rot& r) { return r == kIdentityRot; }

namespace {

uint32_t encode(const Rot& r) {
    // '+' encodes below '-' so the identity sorts first
    uint32_t code = 0;
    for (int i = 0; i < 3; ++i) code = code * 8 + (uint32_t)r.axis[i] * 2 + (r.sign[i] > 0 ? 0 : 1);
    return code;
}

std::vector<Rot> make_all() {
    std::vector<Rot> rots;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms)
        for (int s = 0; s < 8; ++s) {
            Rot r;
            for (int i = 0; i < 3; ++i) {
                r.axis[i] = (int8_t)p[i];
                r.sign[i] = (int8_t)((s >> i) & 1 ? -1 : 1);
            }
            if (determinant(r) == 1) rots.push_back(r);
        }
    std::sort(rots.begin(), rots.end(), [](const Rot& a, const Rot& b) { return encode(a) < encode(b); });
    if (rots.size() != 24 || !is_identity(rots[0])) throw MrsError("rotation group construction failed");
    return rots;
}

std::vector<Rot> make_z() {
    std::vector<Rot> rots;
    for (const Rot& r : make_all())
        if (r.axis[2] == 2 && r.sign[2] == 1) rots.push_back(r);
    if (rots.size() != 4) throw MrsError("z rotation group construction failed");
    return rots;
}

}  // namespace

const std::vector<Rot>& all_rotations() {
    static const std::vector<Rot> rots = make_all();
    return rots;
}

const std::vector<Rot>& z_rotations() {
    static const std::vector<Rot> rots = make_z();
    return rots;
}

int rotation_index(const Rot& r) {
    const auto& all = all_rotations();
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == r) return (int)i;
    return -1;
}

}  // namespace mrs
