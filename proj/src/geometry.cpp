#include "ecvs/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace ecvs {
namespace {

constexpr double kGeomEps = 1e-9;

std::vector<Vec3> canonical_vertices(Solid s) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v;
    switch (s) {
        case Solid::tetrahedron:
            v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
            break;
        case Solid::cube:
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
            break;
        case Solid::octahedron:
            v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
            break;
        case Solid::dodecahedron:
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    v.push_back({0, s1 / phi, s2 * phi});
                    v.push_back({s1 / phi, s2 * phi, 0});
                    v.push_back({s2 * phi, 0, s1 / phi});
                }
            break;
        case Solid::icosahedron:
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    v.push_back({0, double(s1), s2 * phi});
                    v.push_back({double(s1), s2 * phi, 0});
                    v.push_back({s2 * phi, 0, double(s1)});
                }
            break;
    }
    for (auto& p : v) p = p.normalized();
    return v;
}

// Faces as support planes of the convex hull: every plane through >= 3
// vertices with all the others strictly on one side.
std::vector<std::vector<int>> detect_faces(const std::vector<Vec3>& v) {
    const int nv = static_cast<int>(v.size());
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> faces;
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            for (int c = b + 1; c < nv; ++c) {
                Vec3 n = (v[b] - v[a]).cross(v[c] - v[a]);
                if (n.norm() < kGeomEps) continue;
                n = n.normalized();
                double d = n.dot(v[a]);
                if (d < 0) {
                    n = -n;
                    d = -d;
                }
                if (d < kGeomEps) continue;  // plane through the origin is not a face
                bool support = true;
                std::vector<int> members;
                for (int k = 0; k < nv; ++k) {
                    const double s = n.dot(v[k]) - d;
                    if (s > kGeomEps) {
                        support = false;
                        break;
                    }
                    if (s > -kGeomEps) members.push_back(k);
                }
                if (!support || members.size() < 3) continue;
                std::sort(members.begin(), members.end());
                if (seen.insert(members).second) {
                    // order CCW around the centroid, viewed from outside
                    Vec3 centroid{0, 0, 0};
                    for (int m : members) centroid += v[m];
                    centroid = centroid / double(members.size());
                    const Vec3 t0 = (v[members[0]] - centroid).normalized();
                    const Vec3 t1 = n.cross(t0);
                    std::sort(members.begin(), members.end(), [&](int p, int q) {
                        const Vec3 dp = v[p] - centroid;
                        const Vec3 dq = v[q] - centroid;
                        return std::atan2(dp.dot(t1), dp.dot(t0)) <
                               std::atan2(dq.dot(t1), dq.dot(t0));
                    });
                    faces.push_back(members);
                }
            }
        }
    }
    return faces;
}

Vec3 face_center(const std::vector<Vec3>& v, const std::vector<int>& face) {
    Vec3 c{0, 0, 0};
    for (int i : face) c += v[i];
    return c.normalized();
}

// Deterministic pick: the direction with the largest z (ties: x, then y).
Vec3 top_direction(const std::vector<Vec3>& dirs) {
    Vec3 best = dirs[0];
    for (const Vec3& d : dirs) {
        if (d.z > best.z + kGeomEps) {
            best = d;
        } else if (d.z > best.z - kGeomEps) {
            if (d.x > best.x + kGeomEps ||
                (d.x > best.x - kGeomEps && d.y > best.y + kGeomEps)) {
                best = d;
            }
        }
    }
    return best;
}

int shared_vertex_count(const std::vector<int>& fa, const std::vector<int>& fb) {
    int n = 0;
    for (int a : fa)
        for (int b : fb)
            if (a == b) ++n;
    return n;
}

Plate build_plate(const std::vector<Vec3>& verts, const std::vector<int>& face,
                  double inset_sin) {
    Plate plate;
    plate.inset_sin = inset_sin;
    plate.center = face_center(verts, face);
    const int k = static_cast<int>(face.size());
    for (int e = 0; e < k; ++e) {
        const Vec3& a = verts[face[e]];
        const Vec3& b = verts[face[(e + 1) % k]];
        Vec3 n = a.cross(b).normalized();
        if (n.dot(plate.center) < 0) n = -n;
        plate.edge_normals.push_back(n);
    }
    // mitered corner near original vertex face[e]: intersection of the offset
    // small circles of edge e-1 and edge e
    for (int e = 0; e < k; ++e) {
        const Vec3& n1 = plate.edge_normals[(e + k - 1) % k];
        const Vec3& n2 = plate.edge_normals[e];
        const double g = n1.dot(n2);
        const double s = inset_sin;
        const double a = s / (1.0 + g);
        const Vec3 m = n1.cross(n2);
        const double m2 = m.norm2();
        const double c2 = (1.0 - 2.0 * a * s) / m2;
        const double c = std::sqrt(std::max(c2, 0.0));
        Vec3 corner = a * (n1 + n2) + c * m;
        if (corner.dot(verts[face[e]]) < 0) corner = a * (n1 + n2) - c * m;
        plate.corners.push_back(corner.normalized());
    }
    return plate;
}

}  // namespace

std::string to_string(Solid s) {
    switch (s) {
        case Solid::tetrahedron: return "tetrahedron";
        case Solid::cube: return "cube";
        case Solid::octahedron: return "octahedron";
        case Solid::dodecahedron: return "dodecahedron";
        case Solid::icosahedron: return "icosahedron";
    }
    return "?";
}

std::string to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::adjacent: return "adjacent";
        case ChannelKind::semi_adjacent: return "semi_adjacent";
        case ChannelKind::cross: return "cross";
        case ChannelKind::opposite: return "opposite";
    }
    return "?";
}

Solid solid_from_string(const std::string& name) {
    for (Solid s : {Solid::tetrahedron, Solid::cube, Solid::octahedron, Solid::dodecahedron,
                    Solid::icosahedron}) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown solid: " + name);
}

ChannelKind channel_kind_from_string(const std::string& name) {
    for (ChannelKind k : {ChannelKind::adjacent, ChannelKind::semi_adjacent, ChannelKind::cross,
                          ChannelKind::opposite}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown channel kind: " + name);
}

int solid_face_count(Solid s) {
    switch (s) {
        case Solid::tetrahedron: return 4;
        case Solid::cube: return 6;
        case Solid::octahedron: return 8;
        case Solid::dodecahedron: return 12;
        case Solid::icosahedron: return 20;
    }
    return 0;
}

int solid_edge_count(Solid s) {
    switch (s) {
        case Solid::tetrahedron: return 6;
        case Solid::cube: return 12;
        case Solid::octahedron: return 12;
        case Solid::dodecahedron: return 30;
        case Solid::icosahedron: return 30;
    }
    return 0;
}

int rotational_order(Solid s) {
    switch (s) {
        case Solid::tetrahedron: return 12;
        case Solid::cube: return 24;
        case Solid::octahedron: return 24;
        case Solid::dodecahedron: return 60;
        case Solid::icosahedron: return 60;
    }
    return 0;
}

bool Plate::contains(const Vec3& unit_dir) const {
    for (const Vec3& n : edge_normals) {
        if (unit_dir.dot(n) < inset_sin) return false;
    }
    return true;
}

double Plate::area(double radius) const {
    // sum of interior angles minus (k-2)*pi
    const int k = static_cast<int>(corners.size());
    double angle_sum = 0.0;
    for (int i = 0; i < k; ++i) {
        const Vec3& p = corners[i];
        const Vec3& a = corners[(i + k - 1) % k];
        const Vec3& b = corners[(i + 1) % k];
        const Vec3 ta = (a - p * p.dot(a)).normalized();
        const Vec3 tb = (b - p * p.dot(b)).normalized();
        angle_sum += std::acos(std::clamp(ta.dot(tb), -1.0, 1.0));
    }
    return (angle_sum - (k - 2) * M_PI) * radius * radius;
}

int SensorLayout::channel_index(int transmit, int receive) const {
    if (transmit > receive) std::swap(transmit, receive);
    for (size_t i = 0; i < channels.size(); ++i) {
        if (channels[i].transmit == transmit && channels[i].receive == receive)
            return static_cast<int>(i);
    }
    return -1;
}

int SensorLayout::plate_at(const Vec3& unit_dir) const {
    for (size_t i = 0; i < plates.size(); ++i) {
        if (plates[i].contains(unit_dir)) return static_cast<int>(i);
    }
    return -1;
}

SensorLayout generate_layout(Solid solid, double tank_radius, double gap_width,
                             PoleAlignment pole, const Quat& extra_rotation) {
    if (!(tank_radius > 0)) throw std::invalid_argument("tank_radius must be positive");
    if (gap_width < 0) throw std::invalid_argument("gap_width must be non-negative");

    std::vector<Vec3> verts = canonical_vertices(solid);
    std::vector<std::vector<int>> faces = detect_faces(verts);

    Quat rot;
    if (pole == PoleAlignment::face) {
        std::vector<Vec3> centers;
        for (const auto& f : faces) centers.push_back(face_center(verts, f));
        rot = Quat::from_unit_vectors(top_direction(centers), Vec3{0, 0, 1});
    } else {
        rot = Quat::from_unit_vectors(top_direction(verts), Vec3{0, 0, 1});
    }
    rot = (extra_rotation * rot).normalized();
    for (auto& v : verts) v = rot.rotate(v);

    SensorLayout layout;
    layout.solid = solid;
    layout.tank_radius = tank_radius;
    layout.gap_width = gap_width;
    layout.orientation = rot;
    layout.vertices = verts;
    layout.faces = faces;

    const double inset_angle = gap_width / (2.0 * tank_radius);
    const double inset_sin = std::sin(inset_angle);
    for (const auto& face : faces) {
        // spherical inradius check: the inset must leave interior
        const Vec3 c = face_center(verts, face);
        Plate p = build_plate(verts, face, inset_sin);
        for (const Vec3& n : p.edge_normals) {
            if (std::asin(std::clamp(c.dot(n), -1.0, 1.0)) <= inset_angle + kGeomEps) {
                throw std::invalid_argument("gap_width too large: plate has no area");
            }
        }
        layout.plates.push_back(std::move(p));
    }

    const int n = layout.plate_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Channel ch;
            ch.transmit = i;
            ch.receive = j;
            const int shared = shared_vertex_count(faces[i], faces[j]);
            if (shared >= 2) {
                ch.kind = ChannelKind::adjacent;
            } else if (shared == 1) {
                ch.kind = ChannelKind::semi_adjacent;
            } else if ((layout.plates[i].center + layout.plates[j].center).norm() < kGeomEps) {
                ch.kind = ChannelKind::opposite;
            } else {
                ch.kind = ChannelKind::cross;
            }
            layout.channels.push_back(ch);
        }
    }
    return layout;
}

std::vector<Channel> enumerate_channels(const SensorLayout& layout) { return layout.channels; }

ChannelKind classify_channel(const SensorLayout& layout, int transmit, int receive) {
    const int idx = layout.channel_index(transmit, receive);
    if (idx < 0) throw std::invalid_argument("invalid channel plate indices");
    return layout.channels[idx].kind;
}

std::vector<Vec3> singularity_points(const SensorLayout& layout) {
    std::vector<Vec3> pts;
    const auto& faces = layout.faces;
    for (size_t i = 0; i < faces.size(); ++i) {
        for (size_t j = i + 1; j < faces.size(); ++j) {
            std::vector<int> shared;
            for (int a : faces[i])
                for (int b : faces[j])
                    if (a == b) shared.push_back(a);
            if (shared.size() == 2) {
                pts.push_back((layout.vertices[shared[0]] + layout.vertices[shared[1]]).normalized());
            }
        }
    }
    return pts;
}

std::vector<Quat> rotation_group(const SensorLayout& layout) {
    const auto& verts = layout.vertices;
    const auto& faces = layout.faces;

    auto maps_vertices = [&](const Quat& q) {
        for (const Vec3& v : verts) {
            const Vec3 r = q.rotate(v);
            bool found = false;
            for (const Vec3& w : verts) {
                if ((r - w).norm() < 1e-7) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };

    // candidates: map the (face 0, corner) flag onto every (face, corner) flag
    const Vec3 c0 = face_center(verts, faces[0]);
    const Vec3 v0 = verts[faces[0][0]];
    const Vec3 t0 = (v0 - c0 * c0.dot(v0)).normalized();
    std::vector<Quat> group;
    for (const auto& face : faces) {
        const Vec3 cf = face_center(verts, face);
        const Quat q1 = Quat::from_unit_vectors(c0, cf);
        for (int corner : face) {
            const Vec3 w = verts[corner];
            const Vec3 tw = (w - cf * cf.dot(w)).normalized();
            const Vec3 t0r = q1.rotate(t0);
            // twist about cf aligning t0r with tw
            const double cosang = std::clamp(t0r.dot(tw), -1.0, 1.0);
            double ang = std::acos(cosang);
            if (cf.dot(t0r.cross(tw)) < 0) ang = -ang;
            const Quat q = (Quat::from_axis_angle(cf, ang) * q1).normalized();
            if (maps_vertices(q)) {
                bool dup = false;
                for (const Quat& g : group) {
                    const double d = std::min(
                        std::abs(g.w - q.w) + std::abs(g.x - q.x) + std::abs(g.y - q.y) +
                            std::abs(g.z - q.z),
                        std::abs(g.w + q.w) + std::abs(g.x + q.x) + std::abs(g.y + q.y) +
                            std::abs(g.z + q.z));
                    if (d < 1e-7) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) group.push_back(q);
            }
        }
    }
    return group;
}

std::vector<int> plate_permutation(const SensorLayout& layout, const Quat& rot) {
    std::vector<int> perm(layout.plate_count(), -1);
    for (int i = 0; i < layout.plate_count(); ++i) {
        const Vec3 r = rot.rotate(layout.plates[i].center);
        for (int j = 0; j < layout.plate_count(); ++j) {
            if ((r - layout.plates[j].center).norm() < 1e-7) {
                perm[i] = j;
                break;
            }
        }
        if (perm[i] < 0) throw std::invalid_argument("rotation is not in the layout's symmetry group");
    }
    return perm;
}

}  // namespace ecvs
