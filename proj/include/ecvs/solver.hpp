#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecvs/domain.hpp"
#include "ecvs/geometry.hpp"

namespace ecvs {

inline constexpr double kEps0 = 8.8541878128e-12;  // F/m

struct SolveOptions {
    double tol = 1e-8;       // relative residual
    int max_iter = 20000;
    int threads = 0;         // 0 = hardware concurrency (multi-excitation calls only)
};

class SolverError : public std::runtime_error {
  public:
    SolverError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}
    double residual;
    int iterations;
};

/// One Dirichlet boundary crossing: the interior cell, the axis direction of
/// the outside neighbor, the fractional distance to the shield sphere, and
/// the boundary potential applied there for this excitation.
struct BoundaryCrossing {
    std::size_t cell;
    std::uint8_t dir;  // 0..5: +x,-x,+y,-y,+z,-z
    double t_over_h;   // in (0,1]
    double value;
};

struct PotentialField {
    GridShape shape;
    double voxel_size = 0.0;
    std::vector<double> phi;  // full grid; interior solution, zero elsewhere
    int excited_plate = -1;
    int iterations = 0;
    double residual = 0.0;
    std::shared_ptr<const std::vector<BoundaryCrossing>> boundary;
};

struct VectorField {
    GridShape shape;
    double voxel_size = 0.0;
    std::vector<double> x, y, z;
};

struct CapacitanceSet {
    std::vector<Channel> channels;
    std::vector<double> values;  // mutual capacitance per channel, in units eps0 * tank_radius
    double tank_radius = 0.0;
    double max_residual = 0.0;
    int max_iterations = 0;
    double max_reciprocity_error = 0.0;  // relative |Cij - Cji| / Cij before symmetrizing
    std::string scenario;
    std::string layout_hash;
    std::string domain_hash;
};

/// Finite-difference solver for div(eps grad phi) = 0 on the voxel grid.
/// Dirichlet conditions are applied where the grid leaves the tank sphere:
/// the crossing point of each cut face is classified against the plate
/// regions (3x3 patch subsampling for fractional coverage at plate edges),
/// unclassified directions are the grounded shield. Interior faces use
/// harmonic permittivity averaging; boundary faces are distance-weighted.
class ExcitationSolver {
  public:
    ExcitationSolver(const VoxelDomain& domain, const SensorLayout& layout);

    PotentialField solve(int plate, const SolveOptions& opts = {}) const;

    /// Charges induced on each plate (entries 0..N-1) and the shield (entry N),
    /// in coulombs for the 1 V excitation of the given field.
    std::vector<double> plate_charges(const PotentialField& field) const;

    int plate_count() const { return plate_count_; }
    const VoxelDomain& domain() const { return domain_; }

  private:
    friend CapacitanceSet capacitance_set(const VoxelDomain&, const SensorLayout&,
                                          const SolveOptions&);
    VoxelDomain domain_;
    int plate_count_ = 0;
    std::size_t cells_ = 0;
    std::vector<double> diag_;                  // full grid, 1 outside mask
    std::vector<double> cond_[3];               // face conductances to +axis neighbor
    std::vector<std::size_t> bf_cell_;          // boundary faces
    std::vector<std::uint8_t> bf_dir_;
    std::vector<double> bf_t_;                  // t/h
    std::vector<double> bf_cond_;               // eps * h / t (dimensionless eps scale)
    std::vector<double> bf_weights_;            // nfaces x plate_count, plate coverage
    std::vector<double> interior_;              // 1 inside mask else 0
};

PotentialField solve_excitation(const VoxelDomain& domain, const SensorLayout& layout, int plate,
                                const SolveOptions& opts = {});

/// Gauss-surface charge of one plate from a solved field (coulombs).
double plate_charge(const PotentialField& field, const VoxelDomain& domain,
                    const SensorLayout& layout, int plate);

/// All mutual capacitances: one excitation per plate, C_ij = -Q_j with plate i
/// at 1 V, both directions averaged. Values are stored in eps0*tank_radius units.
CapacitanceSet capacitance_set(const VoxelDomain& domain, const SensorLayout& layout,
                               const SolveOptions& opts = {});

/// zeta = -grad(phi) by central differences, distance-weighted at boundary cells.
VectorField electric_response(const PotentialField& field, const VoxelDomain& domain);

/// Synthetic concentric-electrode solve (inner sphere at 1 V, sphere at
/// tank_radius grounded) used by the solver verification suite.
struct ConcentricResult {
    double capacitance_over_eps0 = 0.0;  // C / eps0, meters
    PotentialField field;
};
ConcentricResult solve_concentric_spheres(double inner_radius, double outer_radius, int grid_n,
                                          double eps_r = 1.0, const SolveOptions& opts = {});

}  // namespace ecvs
