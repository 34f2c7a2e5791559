#pragma once

#include <optional>

#include "mvdef/cochain.hpp"

namespace mvdef {

// One graded cohomology component H^q_(g)(L;L) with enough data to project
// cocycles onto their classes: proj = [columns of delta_{q-1} | representative
// coordinates]; the class of a cocycle is the tail of the canonical solution.
struct CohomologySpace {
    int arity = 0;
    int degree = 0;
    int dimension = 0;
    ComponentBasis basis;
    std::vector<Cochain> reps;
    Matrix proj;
    int image_cols = 0;

    std::vector<Rational> class_coords(const SparseVec& solved) const;
};

CohomologySpace cohomology(const GradedLieAlgebra& L, int q, int g,
                           std::optional<int> window = std::nullopt);
// dim H^q_(g) without representative extraction (rank computations only).
int cohomology_dim(const GradedLieAlgebra& L, int q, int g,
                   std::optional<int> window = std::nullopt);

// H^q_(g) of the untruncated algebra of polynomial vector fields x^{i+1}d/dx,
// computed as the window-N quotient complex over a backing truncation large
// enough that no boundary artifacts reach the window.
int l1_cohomology_dim(int N, int q, int g);
CohomologySpace l1_cohomology(int N, int q, int g);
GradedLieAlgebra l1_backing(int N, int g); // truncation at N + max(g,0) + 1

// Class coordinates of z in the given space; nullopt when z is not a cocycle.
// A zero class is an all-zero coordinate vector.
std::optional<std::vector<Rational>> class_of(const GradedLieAlgebra& L,
                                              const CohomologySpace& H, const Cochain& z);
bool is_coboundary(const GradedLieAlgebra& L, const CohomologySpace& H, const Cochain& z);

// Swap in hand-picked representatives (must be cocycles with independent
// classes spanning the component); throws otherwise.
void replace_representatives(const GradedLieAlgebra& L, CohomologySpace& H,
                             std::vector<Cochain> reps);

// The graded Lie algebra L + Hom(H^2, L) with Hom an abelian ideal and
// [(l1,f1),(l2,f2)] = ([l1,l2], a -> rep_a(l1,l2) + [f1(a),l2] + [l1,f2(a)]).
GradedLieAlgebra infinitesimal_bracket(const GradedLieAlgebra& L,
                                       const std::vector<CohomologySpace>& H2);

// Order-1 part of a bracket family, split into graded cocycles with their
// classes in H^2_(g).
struct DeformationDifferential {
    int degree;
    Cochain cocycle;
    std::vector<Rational> class_coords;
};
std::vector<DeformationDifferential> deformation_differential(const FormalBracketFamily& F);

} // namespace mvdef
