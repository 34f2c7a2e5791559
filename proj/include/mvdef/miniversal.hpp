#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "mvdef/cohomology.hpp"
#include "mvdef/polynomial.hpp"

namespace mvdef {

// Reduced comultiplication of a dual monomial: all splittings into two
// nonunit factors, coefficient 1 each.
std::vector<std::pair<Exponents, Exponents>> comultiply(const Exponents& m);

bool coalgebra_cocommutative(const Exponents& m);
bool coalgebra_coassociative(const Exponents& m);

// Input data for the inductive base construction. Dual variables are
// one-to-one with the chosen degree-homogeneous H^2 representatives; their
// weights are the representatives' internal degrees. h3_dim[g] bounds the
// number of independent obstruction classes of weight g (dim H^3_(g));
// weights absent from the map are treated as 0.
struct MiniversalSetup {
    const GradedLieAlgebra* L = nullptr;
    PolyRing ring;                  // dual variables with weights
    std::vector<Cochain> reps;      // alpha on single variables
    std::map<int, int> h3_dim;
    int maxWeight = 11;
    bool gauge = true;              // greedy primitive adjustment
    // solve window per dual-vector polynomial degree (index d-1); empty for
    // finite-dimensional algebras without windowing
    std::vector<int> degree_windows;
    int class_window = 0;           // 0 = no window
};

struct ObstructionRecord {
    int step = 0;
    int weight = 0;
    Polynomial candidate;           // dual vector over the ring's monomials
    std::vector<Rational> cls;      // obstruction class, scaled by 1/2
};

struct GaugeRecord {
    int step = 0;
    Polynomial primitive;           // alive vector whose value was shifted
    int rep = 0;                    // index of the H^2 representative added
    Rational amount;
    Polynomial candidate;           // candidate whose class got cancelled
};

struct MiniversalResult {
    PolyRing ring;
    std::vector<Polynomial> generators;              // final, normalized
    std::vector<std::vector<Polynomial>> snapshots;  // after each step
    std::vector<ObstructionRecord> log;
    std::vector<GaugeRecord> gauges;
    Rational obstruction_scale = Rational(1) / 2;    // applied to logged classes
    int steps = 0;
};

MiniversalResult run_miniversal(const MiniversalSetup& setup);

// Setup for the vector-field algebra with a = d(mu_2), b = d(mu_3),
// c = d(mu_4) as representatives and windows deep enough for five steps.
// Owns the backing algebra; keep it alive while running.
struct L1Miniversal {
    GradedLieAlgebra L;
    MiniversalSetup setup;

    MiniversalResult run() {
        setup.L = &L; // self-reference, refreshed in case the holder moved
        return run_miniversal(setup);
    }
};
L1Miniversal l1_miniversal_setup(int maxWeight = 11, bool gauge = true,
                                 int classWindow = 24);

// mu_k as an adjoint 2-cochain of the backing algebra (values verified to
// stay inside it).
Cochain l1_dmu(const GradedLieAlgebra& L, int k, int window);

// True iff the cocycle z is not a coboundary, decided against the image of
// the degree-(2,g) differential. Throws if z is not a cocycle.
bool class_nonzero(const GradedLieAlgebra& L, const Cochain& z,
                   std::optional<int> window);

// <b,b,b>: the class of [b, g] with delta g = [b, b] (canonical primitive).
// Returns the cochain [b, g] at out_window; requires [b, b] to be a
// coboundary.
Cochain triple_massey(const GradedLieAlgebra& L, const Cochain& b,
                      std::optional<int> solve_window, std::optional<int> out_window);

Cochain truncate_cochain(const GradedLieAlgebra& L, const Cochain& c, int window);

} // namespace mvdef
