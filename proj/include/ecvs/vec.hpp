#pragma once

#include <cmath>

namespace ecvs {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double xv, double yv, double zv) : x(xv), y(yv), z(zv) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    constexpr double norm2() const { return dot(*this); }
    Vec3 normalized() const { return *this / norm(); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Unit quaternion rotation.
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    static constexpr Quat identity() { return {}; }

    static Quat from_axis_angle(const Vec3& axis, double angle) {
        const Vec3 a = axis.normalized();
        const double s = std::sin(angle / 2);
        return {std::cos(angle / 2), a.x * s, a.y * s, a.z * s};
    }

    /// Shortest-arc rotation taking unit vector `from` onto unit vector `to`.
    static Quat from_unit_vectors(const Vec3& from, const Vec3& to) {
        const double c = from.dot(to);
        if (c > 1.0 - 1e-14) {
            return identity();
        }
        if (c < -1.0 + 1e-14) {
            // 180 degrees about any axis orthogonal to `from`
            Vec3 ortho = std::abs(from.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
            ortho = (ortho - from * ortho.dot(from)).normalized();
            return {0.0, ortho.x, ortho.y, ortho.z};
        }
        const Vec3 axis = from.cross(to);
        const double s = std::sqrt((1.0 + c) * 2.0);
        return Quat{s / 2.0, axis.x / s, axis.y / s, axis.z / s}.normalized();
    }

    Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quat conjugate() const { return {w, -x, -y, -z}; }

    Quat normalized() const {
        const double n = std::sqrt(w * w + x * x + y * y + z * z);
        return {w / n, x / n, y / n, z / n};
    }

    Vec3 rotate(const Vec3& v) const {
        const Vec3 q{x, y, z};
        const Vec3 t = 2.0 * q.cross(v);
        return v + w * t + q.cross(t);
    }
};

}  // namespace ecvs
