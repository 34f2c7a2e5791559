#pragma once

#include <string>
#include <vector>

#include "mvdef/harrison.hpp"
#include "mvdef/miniversal.hpp"

namespace mvdef {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int N = 24;        // window for cohomology tables
    int margin = 4;    // stability re-check at N + margin
    int maxWeight = 11;
    bool gauge = true; // greedy primitive adjustment in the base construction
    unsigned seed = 20240817;
};

// The six top-level checks, in order: cohomology table stability,
// non-vanishing brackets and the triple product, the deformation base with
// exact constants, intermediate relation sets, algebraic property suites,
// and the symmetric-cohomology cross-validation.
std::vector<CheckResult> acceptance_battery(const VerifyOptions& opt);

// dim H^q_(g) for the vector-field algebra over a degree range, at window N.
std::vector<int> l1_dim_row(int N, int q, int gmin, int gmax);

// Expected relation generators with the exact constants, normalized.
std::vector<Polynomial> expected_l1_generators(const PolyRing& R);
std::vector<Polynomial> expected_l1_step2_generators(const PolyRing& R);

// Zero-locus fallback: the ideal cuts out two transverse parabolas in the
// (x,z)-plane and a cuspidal cubic in the (x,y)-plane.
bool variety_decomposition_ok(const PolyRing& R, const std::vector<Polynomial>& gens,
                              std::string* why = nullptr);

// Sample presentations for the symmetric-cohomology checks.
AlgebraPresentation truncated_polynomial_presentation(int order); // K[t]/(t^order)
AlgebraPresentation fat_point_presentation();                     // K[x,y]/(x2,xy,y2)

} // namespace mvdef
