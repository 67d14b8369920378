#include "ecvs/domain.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ecvs {
namespace {

constexpr int kSubsamples = 4;

struct Region {
    // returns true if the point (tank frame, meters) is liquid
    virtual bool contains(const Vec3& p) const = 0;
    virtual ~Region() = default;
};

struct HalfSpace final : Region {
    Vec3 up;
    double level;
    bool contains(const Vec3& p) const override { return p.dot(up) <= level; }
};

struct Ball final : Region {
    Vec3 center;
    double r2;
    bool contains(const Vec3& p) const override { return (p - center).norm2() <= r2; }
};

struct Shell final : Region {
    double inner2;  // squared inner radius of the annular shell
    bool contains(const Vec3& p) const override { return p.norm2() >= inner2; }
};

}  // namespace

std::size_t VoxelDomain::inside_count() const {
    std::size_t n = 0;
    for (std::uint8_t m : inside) n += m;
    return n;
}

std::string to_string(FillKind k) {
    switch (k) {
        case FillKind::uniform: return "uniform";
        case FillKind::stratified: return "stratified";
        case FillKind::ball: return "ball";
        case FillKind::annular: return "annular";
    }
    return "?";
}

FillKind fill_kind_from_string(const std::string& name) {
    for (FillKind k : {FillKind::uniform, FillKind::stratified, FillKind::ball, FillKind::annular}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown fill kind: " + name);
}

FillScenario FillScenario::uniform(double fraction) {
    FillScenario s;
    s.kind = FillKind::uniform;
    s.fill_fraction = fraction;
    return s;
}

FillScenario FillScenario::stratified(double fraction, double tilt_rad) {
    FillScenario s;
    s.kind = FillKind::stratified;
    s.fill_fraction = fraction;
    s.tilt = tilt_rad;
    return s;
}

FillScenario FillScenario::ball(const Vec3& center, double radius) {
    FillScenario s;
    s.kind = FillKind::ball;
    s.ball_center = center;
    s.ball_radius = radius;
    return s;
}

FillScenario FillScenario::annular(double fraction) {
    FillScenario s;
    s.kind = FillKind::annular;
    s.fill_fraction = fraction;
    return s;
}

std::string FillScenario::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    switch (kind) {
        case FillKind::uniform:
        case FillKind::annular:
            os << " f=" << fill_fraction;
            break;
        case FillKind::stratified:
            os << " f=" << fill_fraction << " tilt=" << tilt;
            break;
        case FillKind::ball:
            os << " c=(" << ball_center.x << "," << ball_center.y << "," << ball_center.z
               << ") r=" << ball_radius;
            break;
    }
    return os.str();
}

double cap_height_for_fraction(double fraction, double tank_radius) {
    if (fraction <= 0.0) return 0.0;
    if (fraction >= 1.0) return 2.0 * tank_radius;
    // bisection on the monotone cap-volume fraction h^2 (3R-h) / (4R^3)
    double lo = 0.0, hi = 2.0 * tank_radius;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = mid * mid * (3.0 * tank_radius - mid) / (4.0 * tank_radius * tank_radius * tank_radius);
        (f < fraction ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

VoxelDomain rasterize(const FillScenario& scenario, GridShape shape, double tank_radius) {
    if (shape.nx < 2 || shape.ny < 2 || shape.nz < 2)
        throw std::invalid_argument("grid too small");
    if (!(tank_radius > 0)) throw std::invalid_argument("tank_radius must be positive");
    if (scenario.fill_fraction < 0 || scenario.fill_fraction > 1)
        throw std::invalid_argument("fill_fraction out of [0,1]");

    VoxelDomain d;
    d.shape = shape;
    d.tank_radius = tank_radius;
    d.voxel_size = 2.0 * tank_radius / shape.nx;
    d.eps_gas = scenario.eps_gas;
    d.eps_liquid = scenario.eps_liquid;
    d.inside.assign(shape.cells(), 0);
    d.liquid.assign(shape.cells(), 0.0);

    std::unique_ptr<Region> region;
    double uniform_value = -1.0;
    switch (scenario.kind) {
        case FillKind::uniform:
            uniform_value = scenario.fill_fraction;
            break;
        case FillKind::stratified: {
            auto hs = std::make_unique<HalfSpace>();
            hs->up = Vec3{0, -std::sin(scenario.tilt), std::cos(scenario.tilt)};
            hs->level = -tank_radius + cap_height_for_fraction(scenario.fill_fraction, tank_radius);
            region = std::move(hs);
            break;
        }
        case FillKind::ball: {
            if (scenario.ball_radius < 0) throw std::invalid_argument("ball_radius must be >= 0");
            if (scenario.ball_center.norm() + scenario.ball_radius > tank_radius + 1e-12)
                throw std::invalid_argument("ball extends outside the tank");
            auto b = std::make_unique<Ball>();
            b->center = scenario.ball_center;
            b->r2 = scenario.ball_radius * scenario.ball_radius;
            region = std::move(b);
            break;
        }
        case FillKind::annular: {
            double t = scenario.shell_thickness;
            if (t < 0) {
                // shell holding fill_fraction of the tank volume
                t = tank_radius * (1.0 - std::cbrt(1.0 - scenario.fill_fraction));
            }
            if (t > tank_radius + 1e-12) throw std::invalid_argument("shell thicker than tank radius");
            auto s = std::make_unique<Shell>();
            const double ri = tank_radius - t;
            s->inner2 = ri * ri;
            region = std::move(s);
            break;
        }
    }

    const double h = d.voxel_size;
    const double r2 = tank_radius * tank_radius;
    for (int k = 0; k < shape.nz; ++k) {
        for (int j = 0; j < shape.ny; ++j) {
            for (int i = 0; i < shape.nx; ++i) {
                const std::size_t c = d.index(i, j, k);
                const Vec3 p = d.center(i, j, k);
                if (p.norm2() >= r2) continue;
                d.inside[c] = 1;
                if (uniform_value >= 0) {
                    d.liquid[c] = uniform_value;
                    continue;
                }
                int in_tank = 0, in_liquid = 0;
                for (int a = 0; a < kSubsamples; ++a) {
                    for (int b = 0; b < kSubsamples; ++b) {
                        for (int cc = 0; cc < kSubsamples; ++cc) {
                            const Vec3 s = p + Vec3{((a + 0.5) / kSubsamples - 0.5) * h,
                                                    ((b + 0.5) / kSubsamples - 0.5) * h,
                                                    ((cc + 0.5) / kSubsamples - 0.5) * h};
                            if (s.norm2() >= r2) continue;
                            ++in_tank;
                            if (region->contains(s)) ++in_liquid;
                        }
                    }
                }
                d.liquid[c] = in_tank > 0 ? double(in_liquid) / in_tank
                                          : (region->contains(p) ? 1.0 : 0.0);
            }
        }
    }
    return d;
}

double volume_fraction_of(const VoxelDomain& domain) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t c = 0; c < domain.inside.size(); ++c) {
        if (domain.inside[c]) {
            sum += domain.liquid[c];
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("domain has an empty tank mask");
    return sum / double(count);
}

std::vector<std::pair<double, VoxelDomain>> fill_sweep(FillKind kind, int steps, double tilt_rad,
                                                       GridShape shape, double tank_radius,
                                                       double eps_gas, double eps_liquid) {
    if (steps < 2) throw std::invalid_argument("fill_sweep requires steps >= 2");
    if (kind == FillKind::ball) throw std::invalid_argument("use ball_sweep for ball scenarios");
    std::vector<std::pair<double, VoxelDomain>> out;
    out.reserve(steps);
    for (int s = 0; s < steps; ++s) {
        const double f = double(s) / (steps - 1);
        FillScenario sc;
        sc.kind = kind;
        sc.fill_fraction = f;
        sc.tilt = tilt_rad;
        sc.eps_gas = eps_gas;
        sc.eps_liquid = eps_liquid;
        out.emplace_back(f, rasterize(sc, shape, tank_radius));
    }
    return out;
}

std::vector<std::pair<double, VoxelDomain>> ball_sweep(int steps, double ball_radius,
                                                       GridShape shape, double tank_radius,
                                                       double eps_gas, double eps_liquid) {
    if (steps < 2) throw std::invalid_argument("ball_sweep requires steps >= 2");
    if (!(ball_radius > 0) || ball_radius >= tank_radius)
        throw std::invalid_argument("ball_radius must be in (0, tank_radius)");
    const double zmax = tank_radius - ball_radius;
    std::vector<std::pair<double, VoxelDomain>> out;
    out.reserve(steps);
    for (int s = 0; s < steps; ++s) {
        const double z = zmax - 2.0 * zmax * s / (steps - 1);
        FillScenario sc = FillScenario::ball({0, 0, z}, ball_radius);
        sc.eps_gas = eps_gas;
        sc.eps_liquid = eps_liquid;
        out.emplace_back(z, rasterize(sc, shape, tank_radius));
    }
    return out;
}

void save_domain(const VoxelDomain& d, const std::string& path) {
    nlohmann::json header = {
        {"nx", d.shape.nx},     {"ny", d.shape.ny},           {"nz", d.shape.nz},
        {"voxel_size", d.voxel_size}, {"tank_radius", d.tank_radius},
        {"eps_gas", d.eps_gas}, {"eps_liquid", d.eps_liquid},
        {"dtype", "float64-le"}, {"order", "x-fastest"},
    };
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << header.dump() << '\n';
    os.write(reinterpret_cast<const char*>(d.liquid.data()),
             std::streamsize(d.liquid.size() * sizeof(double)));
    if (!os) throw std::runtime_error("write failed: " + path);
}

VoxelDomain load_domain(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::string line;
    std::getline(is, line);
    const nlohmann::json header = nlohmann::json::parse(line);
    VoxelDomain d;
    d.shape = {header.at("nx").get<int>(), header.at("ny").get<int>(), header.at("nz").get<int>()};
    d.voxel_size = header.at("voxel_size").get<double>();
    d.tank_radius = header.at("tank_radius").get<double>();
    d.eps_gas = header.at("eps_gas").get<double>();
    d.eps_liquid = header.at("eps_liquid").get<double>();
    d.liquid.resize(d.shape.cells());
    is.read(reinterpret_cast<char*>(d.liquid.data()),
            std::streamsize(d.liquid.size() * sizeof(double)));
    if (!is) throw std::runtime_error("truncated domain file: " + path);
    d.inside.assign(d.shape.cells(), 0);
    const double r2 = d.tank_radius * d.tank_radius;
    for (int k = 0; k < d.shape.nz; ++k)
        for (int j = 0; j < d.shape.ny; ++j)
            for (int i = 0; i < d.shape.nx; ++i) {
                if (d.center(i, j, k).norm2() < r2) d.inside[d.index(i, j, k)] = 1;
            }
    return d;
}

}  // namespace ecvs
