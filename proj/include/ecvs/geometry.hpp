#pragma once

#include <string>
#include <vector>

#include "ecvs/vec.hpp"

namespace ecvs {

enum class Solid { tetrahedron, cube, octahedron, dodecahedron, icosahedron };

enum class ChannelKind { adjacent, semi_adjacent, cross, opposite };

/// Which feature of the solid is rotated to the north pole (the fill hole).
enum class PoleAlignment { face, vertex };

std::string to_string(Solid s);
std::string to_string(ChannelKind k);
Solid solid_from_string(const std::string& name);
ChannelKind channel_kind_from_string(const std::string& name);

int solid_face_count(Solid s);
int solid_edge_count(Solid s);
int rotational_order(Solid s);

/// One electrode: a convex spherical polygon, faces of the solid inset by
/// half the gap along each edge's great circle. A direction p is on the
/// plate iff dot(p, edge_normal) >= inset_sin for every edge.
struct Plate {
    std::vector<Vec3> corners;       // mitered inset corners, unit sphere, CCW from outside
    std::vector<Vec3> edge_normals;  // one per original face edge, interior side positive
    Vec3 center;                     // face center direction
    double inset_sin = 0.0;

    bool contains(const Vec3& unit_dir) const;
    /// Spherical-excess area of the corner loop, scaled by radius^2.
    double area(double radius = 1.0) const;
};

struct Channel {
    int transmit = 0;
    int receive = 0;  // transmit < receive
    ChannelKind kind = ChannelKind::adjacent;
};

struct SensorLayout {
    Solid solid = Solid::octahedron;
    double tank_radius = 1.0;
    double gap_width = 0.0;
    Quat orientation;  // rotation from the canonical solid frame

    std::vector<Vec3> vertices;          // oriented unit vertices of the solid
    std::vector<std::vector<int>> faces; // vertex loops, CCW from outside
    std::vector<Plate> plates;           // one per face
    std::vector<Channel> channels;       // all N(N-1)/2 pairs, transmit < receive

    int plate_count() const { return static_cast<int>(plates.size()); }
    int channel_count() const { return static_cast<int>(channels.size()); }
    int channel_index(int transmit, int receive) const;
    /// Plate covering the given direction, or -1 for gap/shield.
    int plate_at(const Vec3& unit_dir) const;
};

/// Build a layout by projecting the solid's faces onto the tank sphere and
/// insetting every face edge by gap_width/2 along the surface. Throws
/// std::invalid_argument if the gap leaves some plate with no area.
SensorLayout generate_layout(Solid solid, double tank_radius, double gap_width,
                             PoleAlignment pole = PoleAlignment::face,
                             const Quat& extra_rotation = Quat::identity());

std::vector<Channel> enumerate_channels(const SensorLayout& layout);
ChannelKind classify_channel(const SensorLayout& layout, int transmit, int receive);

/// Midpoint of each adjacent-plate shared edge arc (one per solid edge).
std::vector<Vec3> singularity_points(const SensorLayout& layout);

/// The full rotation group of the oriented solid (size = rotational_order).
std::vector<Quat> rotation_group(const SensorLayout& layout);

/// Plate permutation induced by a rotation in the layout's symmetry group:
/// result[i] = index of the plate whose center equals rot(center of plate i).
std::vector<int> plate_permutation(const SensorLayout& layout, const Quat& rot);

}  // namespace ecvs
