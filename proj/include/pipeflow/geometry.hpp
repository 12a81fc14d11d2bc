#pragma once

#include <optional>

namespace pipeflow {

// Cylindrical pipe geometry in SI units. Derived perimeters and cross-section
// areas refer to the medium core (inner) and the wall annulus (outer).
struct PipeGeometry {
    double length = 0.0;        // l [m]
    double inner_radius = 0.0;  // R_m [m]
    double outer_radius = 0.0;  // R_w [m]

    double perimeter_inner() const;   // U_m = 2 pi R_m
    double perimeter_outer() const;   // U_w = 2 pi R_w
    double area_medium() const;       // A_m = pi R_m^2
    double area_wall() const;         // A_w = pi (R_w^2 - R_m^2)

    void validate() const;  // throws std::invalid_argument
};

struct MaterialProperties {
    double rho_m = 0.0;     // medium density [kg/m^3]
    double cp_m = 0.0;      // medium heat capacity [J/(kg K)]
    double rho_w = 0.0;     // wall density [kg/m^3]
    double cp_w = 0.0;      // wall heat capacity [J/(kg K)]
    double lambda_w = 0.0;  // wall conductivity [W/(m K)]

    void validate() const;
};

// Convective coefficients. alpha_wa may be zero to model a perfectly
// insulated outer surface (h3 = 0), which the analytic oracles rely on.
struct HeatTransferSpec {
    double alpha_mw = 0.0;  // medium->wall [W/(m^2 K)]
    double alpha_wa = 0.0;  // wall->ambient [W/(m^2 K)]
    // Optional affine velocity dependence alpha_mw(v) = alpha_mw0 + alpha_mw1 * v.
    std::optional<double> alpha_mw0;
    std::optional<double> alpha_mw1;
    double epsilon = 1.0;   // correction factor of the adapted delay model

    bool has_affine() const { return alpha_mw0.has_value(); }
    void validate() const;
};

// Every lumped coefficient used by the model family. h1, h2 couple medium and
// wall, h3 couples wall and ambient, h4 is the lumped medium->ambient loss.
struct DerivedCoefficients {
    double rbar_m = 0.0;        // mean radius weighting the medium-side flux [m]
    double rbar_w = 0.0;        // mean radius weighting the ambient-side flux [m]
    double bar_alpha_mw = 0.0;  // conduction-corrected medium->wall coefficient
    double bar_alpha_wa = 0.0;  // conduction-corrected wall->ambient coefficient
    double alpha_ma = 0.0;      // overall medium->ambient coefficient
    double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0;  // [1/s]
};

// Mean radii of the stationary radial conduction profile; exact in the
// stationary regime by construction.
struct MeanRadii {
    double rbar_m;
    double rbar_w;
};
MeanRadii mean_radii(const PipeGeometry& geom);

// Series combination of convection and wall conduction:
// 1/bar_alpha = 1/alpha + rbar/lambda_w.
struct OverallCoefficients {
    double bar_alpha_mw;
    double bar_alpha_wa;
};
OverallCoefficients overall_coefficients(const PipeGeometry& geom,
                                         const MaterialProperties& mat,
                                         const HeatTransferSpec& ht);

// Overall medium->ambient coefficient across the full wall:
// 1/alpha_ma = 1/alpha_mw + 1/alpha_wa + (R_m/lambda_w) ln(R_w/R_m).
double alpha_ma(const PipeGeometry& geom, const MaterialProperties& mat,
                const HeatTransferSpec& ht);

// All derived coefficients for a parameter set. When velocity is supplied the
// affine pair must be present and alpha_mw(v) = alpha_mw0 + alpha_mw1 * v is
// used for h1 and h2.
DerivedCoefficients h_parameters(const PipeGeometry& geom,
                                 const MaterialProperties& mat,
                                 const HeatTransferSpec& ht,
                                 std::optional<double> velocity = {});

// Immutable bundle shared by every model. Coefficients are derived once at
// construction; affine-velocity mode re-derives h1, h2 per query.
struct PipeParameters {
    PipeGeometry geometry;
    MaterialProperties material;
    HeatTransferSpec heat;
    DerivedCoefficients coeff;

    static PipeParameters make(const PipeGeometry& geom,
                               const MaterialProperties& mat,
                               const HeatTransferSpec& ht);

    bool affine() const { return heat.has_affine(); }

    // Coefficients at a given velocity; identical to coeff unless affine.
    DerivedCoefficients at_velocity(double v) const;
};

}  // namespace pipeflow
