#include "pipeflow/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pipeflow {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument(what);
}

}  // namespace

double PipeGeometry::perimeter_inner() const {
    return 2.0 * std::numbers::pi * inner_radius;
}

double PipeGeometry::perimeter_outer() const {
    return 2.0 * std::numbers::pi * outer_radius;
}

double PipeGeometry::area_medium() const {
    return std::numbers::pi * inner_radius * inner_radius;
}

double PipeGeometry::area_wall() const {
    return std::numbers::pi * (outer_radius * outer_radius - inner_radius * inner_radius);
}

void PipeGeometry::validate() const {
    if (!(length > 0.0)) fail("pipe length must be positive");
    if (!(inner_radius > 0.0)) fail("inner radius must be positive");
    if (!(outer_radius > inner_radius))
        fail("outer radius must exceed inner radius");
}

void MaterialProperties::validate() const {
    if (!(rho_m > 0.0) || !(cp_m > 0.0))
        fail("medium density and heat capacity must be positive");
    if (!(rho_w > 0.0) || !(cp_w > 0.0))
        fail("wall density and heat capacity must be positive");
    if (!(lambda_w > 0.0)) fail("wall conductivity must be positive");
}

void HeatTransferSpec::validate() const {
    if (!(alpha_mw > 0.0)) fail("alpha_mw must be positive");
    if (!(alpha_wa >= 0.0)) fail("alpha_wa must be non-negative");
    if (alpha_mw0.has_value() != alpha_mw1.has_value())
        fail("affine velocity dependence needs both alpha_mw0 and alpha_mw1");
    if (alpha_mw0 && !(*alpha_mw0 > 0.0))
        fail("alpha_mw0 must be positive");
    if (alpha_mw1 && !(*alpha_mw1 >= 0.0))
        fail("alpha_mw1 must be non-negative");
    if (!(epsilon > 0.0)) fail("epsilon must be positive");
}

MeanRadii mean_radii(const PipeGeometry& geom) {
    geom.validate();
    const double rm = geom.inner_radius;
    const double rw = geom.outer_radius;
    const double ratio = rw * rw / (rw * rw - rm * rm);
    const double lg = std::log(rw / rm);
    MeanRadii r;
    r.rbar_m = rm * (ratio * lg - 0.5);
    r.rbar_w = rm * (-(rm * rm) / (rw * rw - rm * rm) * lg + 0.5);
    return r;
}

OverallCoefficients overall_coefficients(const PipeGeometry& geom,
                                         const MaterialProperties& mat,
                                         const HeatTransferSpec& ht) {
    mat.validate();
    ht.validate();
    const MeanRadii r = mean_radii(geom);
    OverallCoefficients oc;
    oc.bar_alpha_mw = 1.0 / (1.0 / ht.alpha_mw + r.rbar_m / mat.lambda_w);
    oc.bar_alpha_wa = ht.alpha_wa > 0.0
        ? 1.0 / (1.0 / ht.alpha_wa + r.rbar_w / mat.lambda_w)
        : 0.0;
    return oc;
}

double alpha_ma(const PipeGeometry& geom, const MaterialProperties& mat,
                const HeatTransferSpec& ht) {
    geom.validate();
    mat.validate();
    ht.validate();
    if (ht.alpha_wa == 0.0) return 0.0;
    const double cond = geom.inner_radius / mat.lambda_w *
                        std::log(geom.outer_radius / geom.inner_radius);
    return 1.0 / (1.0 / ht.alpha_mw + 1.0 / ht.alpha_wa + cond);
}

DerivedCoefficients h_parameters(const PipeGeometry& geom,
                                 const MaterialProperties& mat,
                                 const HeatTransferSpec& ht,
                                 std::optional<double> velocity) {
    geom.validate();
    mat.validate();
    ht.validate();

    HeatTransferSpec eff = ht;
    if (velocity) {
        if (!ht.has_affine())
            fail("velocity-dependent coefficients need alpha_mw0 and alpha_mw1");
        if (!(*velocity > 0.0)) fail("velocity must be positive");
        eff.alpha_mw = *ht.alpha_mw0 + *ht.alpha_mw1 * *velocity;
    }

    const MeanRadii r = mean_radii(geom);
    const OverallCoefficients oc = overall_coefficients(geom, mat, eff);

    DerivedCoefficients c;
    c.rbar_m = r.rbar_m;
    c.rbar_w = r.rbar_w;
    c.bar_alpha_mw = oc.bar_alpha_mw;
    c.bar_alpha_wa = oc.bar_alpha_wa;
    c.alpha_ma = alpha_ma(geom, mat, eff);

    const double um = geom.perimeter_inner();
    const double uw = geom.perimeter_outer();
    const double am = geom.area_medium();
    const double aw = geom.area_wall();

    c.h1 = um / am * oc.bar_alpha_mw / (mat.rho_m * mat.cp_m);
    c.h2 = um / aw * oc.bar_alpha_mw / (mat.rho_w * mat.cp_w);
    c.h3 = uw / aw * oc.bar_alpha_wa / (mat.rho_w * mat.cp_w);
    c.h4 = uw / am * c.alpha_ma / (mat.rho_m * mat.cp_m);
    return c;
}

PipeParameters PipeParameters::make(const PipeGeometry& geom,
                                    const MaterialProperties& mat,
                                    const HeatTransferSpec& ht) {
    PipeParameters p;
    p.geometry = geom;
    p.material = mat;
    p.heat = ht;
    // Affine mode derives the velocity-independent coefficients at alpha_mw0
    // so that coeff is always fully populated; h1, h2 are re-derived per query.
    if (ht.has_affine()) {
        HeatTransferSpec base = ht;
        base.alpha_mw = *ht.alpha_mw0;
        p.coeff = h_parameters(geom, mat, base);
    } else {
        p.coeff = h_parameters(geom, mat, ht);
    }
    return p;
}

DerivedCoefficients PipeParameters::at_velocity(double v) const {
    if (!affine()) return coeff;
    return h_parameters(geometry, material, heat, v);
}

}  // namespace pipeflow
