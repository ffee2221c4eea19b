#pragma once

#include "wpvol/rational.hpp"

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpvol {

enum class BoundaryKind { Geodesic, Cusp, Cone };

// One boundary component: a geodesic of length l > 0, a cusp, or a cone point
// of angle theta in (0, 2*pi).  Cone angles may optionally carry an exact
// representation theta = (p/q)*pi, used by the exact evaluation paths.
struct BoundaryLabel {
    BoundaryKind kind = BoundaryKind::Cusp;
    double magnitude = 0.0; // length (Geodesic) or angle in radians (Cone)
    std::optional<Rational> pi_multiple; // theta / pi, cones only

    static BoundaryLabel geodesic(double length) {
        if (!(length > 0.0)) throw std::invalid_argument("geodesic length must be positive");
        return {BoundaryKind::Geodesic, length, std::nullopt};
    }
    static BoundaryLabel cusp() { return {BoundaryKind::Cusp, 0.0, std::nullopt}; }
    static BoundaryLabel cone(double theta) {
        if (!(theta > 0.0) || !(theta < 2.0 * std::numbers::pi))
            throw std::invalid_argument("cone angle must lie in (0, 2*pi)");
        return {BoundaryKind::Cone, theta, std::nullopt};
    }
    /// Cone of angle (p/q)*pi, kept exactly.
    static BoundaryLabel cone_pi(const Rational& multiple) {
        if (multiple <= 0 || multiple >= 2)
            throw std::invalid_argument("cone angle multiple must lie in (0, 2)");
        BoundaryLabel l{BoundaryKind::Cone, multiple.get_d() * std::numbers::pi, multiple};
        return l;
    }

    bool is_cone() const { return kind == BoundaryKind::Cone; }
    bool is_cusp() const { return kind == BoundaryKind::Cusp; }
    bool is_geodesic() const { return kind == BoundaryKind::Geodesic; }

    std::string str() const;
};

using Labels = std::vector<BoundaryLabel>;

inline std::string BoundaryLabel::str() const {
    switch (kind) {
    case BoundaryKind::Cusp: return "cusp";
    case BoundaryKind::Geodesic: return "geodesic(" + std::to_string(magnitude) + ")";
    case BoundaryKind::Cone:
        if (pi_multiple) return "cone(" + pi_multiple->get_str() + "*pi)";
        return "cone(" + std::to_string(magnitude) + ")";
    }
    return "?";
}

} // namespace wpvol
