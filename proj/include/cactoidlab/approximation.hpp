#pragma once

#include <string>
#include <vector>

#include "cactoidlab/cactoid.hpp"
#include "cactoidlab/gh.hpp"

namespace cactoidlab {

struct PipelineConfig {
    enum class Orientability { orientable, non_orientable, free_choice };

    int refine = 0;        // mesh refinement of the geodesic samples
    int sample_size = 0;   // 0: full correspondence, else net size per side
    Orientability target = Orientability::free_choice;
};

struct CertificateRecord {
    int n = 0;
    Rational gh_upper_bound = 0;   // certified by an explicit correspondence
    Rational net_radius_built = 0;
    Rational net_radius_target = 0;
    SurfaceInvariants inv;
};

struct ConvergenceCertificate {
    MainTheoremCertificate main;
    std::vector<CertificateRecord> records;
};

// Keeps the m largest-diameter pieces plus whatever pieces and trees the
// incidence tree needs to connect them; everything else collapses to its
// attachment point. The grouping is recomputed.
CactoidGraph truncate(const CactoidGraph& g, int m);

// Cuts tree twigs shorter than eps/n (eps = min piece diameter) that carry
// no attachment point, and drops sub-threshold single-attachment trees.
CactoidGraph prune_and_finitize(const CactoidGraph& g, int n);

// Replaces every tree edge by a thin sphere piece (disc when the tree lies
// in the tracked boundary) of matching diameter, and inserts a 1/n-size
// separator piece at every wedge point shared by more than two objects.
// Output has pieces only and every wedge point joins exactly two pieces.
CactoidGraph inflate_to_surfaces(const CactoidGraph& g, int n);

// Triangulated realization of one class: base sphere or cross-cap mesh,
// plus handles for the reduced connectivity, plus one puncture per
// boundary circle. Measured invariants are asserted against the class.
TriSurface class_mesh(const SurfaceInvariants& cls, const Rational& diameter,
                      const std::string& prefix);

struct Realization {
    TriSurface surface;
    CertificateRecord record;
    FiniteMetricSpace target;  // geodesic sample of the glued limit space
};

// Folds the wedge tree (boundary wedges as 1/n arc gluings, interior
// wedges as 1/n-girth tubes), applies one handle per history step, and
// certifies a GH upper bound to the target quotient by an explicit
// correspondence. Throws when the certificate fails or the orientability
// target is infeasible.
Realization realize_surface(const CactoidGraph& g, const GluingHistory& h, int n,
                            int c_target, const PipelineConfig& cfg);

ConvergenceCertificate run_pipeline(const CactoidGraph& g, const GluingHistory& h,
                                    const std::vector<int>& schedule, int c_target,
                                    const PipelineConfig& cfg);

std::string certificate_csv(const ConvergenceCertificate& cert);

}  // namespace cactoidlab
