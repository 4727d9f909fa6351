#include "mrs/observation.hpp"

namespace mrs {

const char* to_string(CompassMode mode) {
    switch (mode) {
        case CompassMode::CommonCompass: return "compass";
        case CompassMode::VerticalAxis: return "vertical";
        case CompassMode::NoCompass: return "none";
    }
    return "?";
}

bool parse_compass_mode(const std::string& s, CompassMode& out) {
    if (s == "compass") out = CompassMode::CommonCompass;
    else if (s == "vertical") out = CompassMode::VerticalAxis;
    else if (s == "none") out = CompassMode::NoCompass;
    else return false;
    return true;
}

const std::vector<Rot>& rotation_group(CompassMode mode) {
    static const std::vector<Rot> identity_only = {kIdentityRot};
    switch (mode) {
        case CompassMode::CommonCompass: return identity_only;
        case CompassMode::VerticalAxis: return z_rotations();
        case CompassMode::NoCompass: return all_rotations();
    }
    return identity_only;
}

Observation::Observation(int k) : k_(k) {
    if (k < 1) throw MrsError("observation radius must be >= 1");
    int n = 2 * k + 1;
    states_.assign((size_t)n * n * n, CellKind::Empty);
}

void Observation::set(Offset o, CellKind s) {
    CellKind& slot = states_[index(o)];
    if (slot == CellKind::Module) --module_count_;
    slot = s;
    if (s == CellKind::Module) ++module_count_;
}

std::vector<Offset> Observation::offsets_of(CellKind kind) const {
    std::vector<Offset> out;
    for (int x = -k_; x <= k_; ++x)
        for (int y = -k_; y <= k_; ++y)
            for (int z = -k_; z <= k_; ++z) {
                Offset o{x, y, z};
                if (is_zero(o)) continue;
                if (at(o) == kind) out.push_back(o);
            }
    return out;
}

Observation observe(const Configuration& cfg, const Field& field, Cell observer, const Rot& frame, int k) {
    if (!occupied(cfg, observer)) throw MrsError("observer not in configuration");
    Observation obs(k);
    Rot inv = inverse(frame);
    for (int x = -k; x <= k; ++x)
        for (int y = -k; y <= k; ++y)
            for (int z = -k; z <= k; ++z) {
                Offset world{x, y, z};
                if (is_zero(world)) continue;
                Cell c = observer + world;
                CellKind kind = CellKind::Empty;
                if (occupied(cfg, c)) kind = CellKind::Module;
                else if (!field.contains(c)) kind = CellKind::Wall;
                if (kind != CellKind::Empty) obs.set(inv(world), kind);
            }
    return obs;
}

Observation rotate_observation(const Observation& obs, const Rot& r) {
    Observation out(obs.k());
    int k = obs.k();
    for (int x = -k; x <= k; ++x)
        for (int y = -k; y <= k; ++y)
            for (int z = -k; z <= k; ++z) {
                Offset o{x, y, z};
                if (is_zero(o)) continue;
                CellKind kind = obs.at(o);
                if (kind != CellKind::Empty) out.set(r(o), kind);
            }
    return out;
}

}  // namespace mrs
