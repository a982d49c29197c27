#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "veer/branched.hpp"
#include "veer/polyalg.hpp"
#include "veer/rootiso.hpp"

namespace veer {

class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FiberedFace {
    int b1 = 0;
    std::vector<std::vector<long>> rays;  // one ray for b1 = 1, two for b1 = 2
    std::vector<long> norms;              // Alexander norms of the rays (b1 = 2)
    /// Point of the norm-one face, t in [0, 1].
    std::vector<double> param(double t) const;
};

/// Classes of all vertex-simple directed cycles of the dual graph.
std::vector<Exponent> gamma_cycle_classes(const VeeringTriangulation& v, const DualGraph& g, const HomologyData& h,
                                          std::size_t limit = 5'000'000);

FiberedFace fibered_cone(const VeeringTriangulation& v, const HomologyData& h);

struct DilatationReport {
    int b1 = 0;
    std::optional<RootEnclosure> lambda;      // b1 = 1
    std::optional<RootEnclosure> normalized;  // b1 = 1
    int chi = 0;                              // b1 = 1
    double value = 0;                         // normalized dilatation or face minimum
    long gcd_norms = 0;                       // b1 = 2
    double t = 0;                             // face minimizer (b1 = 2)
    double oracle = 0;                        // sampling estimate (b1 = 2)
    std::string method;
    std::vector<std::string> notes;
};

struct DilatationOptions {
    double eps = 1e-12;
    int cyclotomic_order = 120;
    int oracle_grid = 64;
    /// Relative disagreement with the sampling oracle that triggers a warning.
    double oracle_tolerance = 1e-3;
};

DilatationReport dilatation_b1(const VeeringTriangulation& v, const DilatationOptions& opt = {});
DilatationReport min_dilatation_b2(const VeeringTriangulation& v, const DilatationOptions& opt = {});
/// Face minimum for an explicit taut polynomial in two variables; the Alexander polynomial supplies the norm.
DilatationReport min_dilatation_face(const LaurentPoly& taut, const LaurentPoly& alexander, const FiberedFace& face,
                                     const DilatationOptions& opt = {});

/// c1 x dT/dx + c2 y dT/dy for the face direction c = |r1| r2 - |r2| r1.
LaurentPoly critical_polynomial(const LaurentPoly& taut, const FiberedFace& face);
/// Integral class on the ray through the center of the face.
std::vector<long> face_midpoint(const FiberedFace& face);
/// Exact test that the largest root of the taut specialization at the mid-ray is critical.
bool midpoint_is_critical(const LaurentPoly& taut, const FiberedFace& face);

/// Largest real root of sum c_g u^(g.a) with real exponents, for u > 1; NaN if none.
double largest_root_real_exponents(const LaurentPoly& p, const std::vector<double>& a);

struct FaceSample {
    double t;
    double value;
};

struct FaceSampleResult {
    std::vector<FaceSample> grid;
    double grid_min = 0;
    double grid_argmin = 0;
    double t_min = 0;  // refined by golden section inside the convex bracket
    double p_min = 0;
    bool convex = false;
    bool boundary_blowup = false;
};

/// Independent oracle: P at integral classes on rational rays of the face.
FaceSampleResult face_sample_min(const LaurentPoly& taut, const LaurentPoly& alexander, const FiberedFace& face,
                                 int grid);
FaceSampleResult face_sample_min(const VeeringTriangulation& v, int grid);

/// P at the integral class a.
double normalized_at_class(const LaurentPoly& taut, const LaurentPoly& alexander, const std::vector<long>& a);

}  // namespace veer
