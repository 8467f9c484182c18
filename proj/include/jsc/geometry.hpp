#pragma once

#include <cmath>
#include <numbers>

namespace jsc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    /// Angle of the vector in (-pi, pi].
    double bearing() const { return std::atan2(y, x); }
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Wraps an angle to (-pi, pi].
inline double wrap_pi(double a) {
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a <= 0.0) a += 2.0 * kPi;
    return a - kPi;
}

/// Wraps an angle to [0, 2*pi).
inline double wrap_two_pi(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

/// Angular interval [lo, hi] traversed counter-clockwise from lo; may wrap
/// through pi. An isotropic interval contains every angle.
struct AngleInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool isotropic = true;

    static AngleInterval all() { return {0.0, 0.0, true}; }
    static AngleInterval span(double lo, double hi) { return {lo, hi, false}; }

    bool contains(double psi) const {
        if (isotropic) return true;
        const double width = wrap_two_pi(hi - lo);
        return wrap_two_pi(psi - lo) <= width;
    }

    AngleInterval rotated(double by) const {
        if (isotropic) return *this;
        return {wrap_pi(lo + by), wrap_pi(hi + by), false};
    }
};

}  // namespace jsc
