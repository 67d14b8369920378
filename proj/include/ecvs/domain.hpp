#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecvs/vec.hpp"

namespace ecvs {

struct GridShape {
    int nx = 0, ny = 0, nz = 0;
    std::size_t cells() const { return std::size_t(nx) * ny * nz; }
    bool operator==(const GridShape&) const = default;
};

/// Cubic voxel grid spanning [-R, R]^3 with the tank sphere inscribed.
/// Voxel (i,j,k) center: -R + (i+0.5)*voxel_size per axis; x fastest in memory.
struct VoxelDomain {
    GridShape shape;
    double voxel_size = 0.0;
    double tank_radius = 0.0;
    double eps_gas = 1.0;
    double eps_liquid = 2.2;
    std::vector<std::uint8_t> inside;  // voxel center within the tank sphere
    std::vector<double> liquid;       // liquid fraction in [0,1], 0 outside mask

    std::size_t index(int i, int j, int k) const {
        return std::size_t(i) + std::size_t(shape.nx) * (std::size_t(j) + std::size_t(shape.ny) * k);
    }
    Vec3 center(int i, int j, int k) const {
        return {-tank_radius + (i + 0.5) * voxel_size,
                -tank_radius + (j + 0.5) * voxel_size,
                -tank_radius + (k + 0.5) * voxel_size};
    }
    double eps_at(std::size_t c) const { return eps_gas + liquid[c] * (eps_liquid - eps_gas); }
    std::size_t inside_count() const;
};

enum class FillKind { uniform, stratified, ball, annular };

std::string to_string(FillKind k);
FillKind fill_kind_from_string(const std::string& name);

struct FillScenario {
    FillKind kind = FillKind::uniform;
    double fill_fraction = 0.0;   // uniform/stratified/annular
    double tilt = 0.0;            // stratified: rotation of the gravity axis about x, radians
    Vec3 ball_center{0, 0, 0};    // ball
    double ball_radius = 0.0;     // ball
    double shell_thickness = -1;  // annular; <0 derives the shell from fill_fraction
    double eps_gas = 1.0;
    double eps_liquid = 2.2;

    static FillScenario uniform(double fraction);
    static FillScenario stratified(double fraction, double tilt_rad = 0.0);
    static FillScenario ball(const Vec3& center, double radius);
    static FillScenario annular(double fraction);

    std::string describe() const;
};

/// Height (from the tank bottom, in [0, 2R]) of the spherical cap holding the
/// given volume fraction: solves pi h^2 (3R - h) / 3 = f * 4/3 pi R^3.
double cap_height_for_fraction(double fraction, double tank_radius);

/// Liquid fractions by 4x4x4 subsampling of each voxel against the scenario
/// region, restricted to the tank interior.
VoxelDomain rasterize(const FillScenario& scenario, GridShape shape, double tank_radius);

double volume_fraction_of(const VoxelDomain& domain);

/// Monotone ladder of stratified/uniform/annular scenarios from empty to full.
std::vector<std::pair<double, VoxelDomain>> fill_sweep(FillKind kind, int steps, double tilt_rad,
                                                       GridShape shape, double tank_radius,
                                                       double eps_gas = 1.0,
                                                       double eps_liquid = 2.2);

/// Ball positions along +z to -z, centers spanning [-(R-rb), R-rb].
std::vector<std::pair<double, VoxelDomain>> ball_sweep(int steps, double ball_radius,
                                                       GridShape shape, double tank_radius,
                                                       double eps_gas = 1.0,
                                                       double eps_liquid = 2.2);

void save_domain(const VoxelDomain& domain, const std::string& path);
VoxelDomain load_domain(const std::string& path);

}  // namespace ecvs
