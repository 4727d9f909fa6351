#pragma once

#include <cstdint>
#include <vector>

#include "mrs/grid.hpp"
#include "mrs/rotation.hpp"
#include "mrs/vec.hpp"

namespace mrs {

// Degree of agreement on the coordinate system.
enum class CompassMode : uint8_t {
    CommonCompass,  // all three axes shared; rule matching uses identity only
    VerticalAxis,   // only z shared; matching searches the 4 z rotations
    NoCompass,      // nothing shared; matching searches all 24 rotations
};

const char* to_string(CompassMode mode);
bool parse_compass_mode(const std::string& s, CompassMode& out);

// Rotations a module may apply when comparing its observation against a rule.
const std::vector<Rot>& rotation_group(CompassMode mode);

enum class CellKind : uint8_t { Empty = 0, Module = 1, Wall = 2 };

// Classification of the (2k+1)^3 - 1 cells around a module, in the module's
// local frame. The origin (the observer itself) is excluded.
class Observation {
public:
    Observation(int k);

    int k() const { return k_; }
    int module_count() const { return module_count_; }

    CellKind at(Offset o) const { return states_[index(o)]; }
    void set(Offset o, CellKind s);

    // Offsets of a given kind, sorted (origin never included).
    std::vector<Offset> offsets_of(CellKind kind) const;

    friend bool operator==(const Observation& a, const Observation& b) {
        return a.k_ == b.k_ && a.states_ == b.states_;
    }

private:
    size_t index(Offset o) const {
        int n = 2 * k_ + 1;
        return (size_t)((o.x + k_) * n + (o.y + k_)) * n + (o.z + k_);
    }
    int k_;
    int module_count_ = 0;
    std::vector<CellKind> states_;
};

// Observation of cfg/field from `observer`, through `frame` (frame maps the
// module's local coordinates to world coordinates; stored offsets are
// frame-inverse images of world offsets). Throws if observer not in cfg.
Observation observe(const Configuration& cfg, const Field& field, Cell observer, const Rot& frame, int k);

// Elementwise rotation of every offset set; k preserved.
Observation rotate_observation(const Observation& obs, const Rot& r);

}  // namespace mrs
