#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvdef/matrix.hpp"
#include "mvdef/polynomial.hpp"

namespace mvdef {

// Finite-dimensional local commutative associative unital algebra over the
// rationals, given by a symmetric multiplication table on a fixed basis.
// labels[unit] is the unit; the remaining basis elements span the maximal
// ideal. The augmentation sends the unit to 1 and the ideal to 0.
struct LocalAlgebra {
    std::string name;
    std::vector<std::string> labels;
    int unit = 0;
    std::map<std::pair<int, int>, SparseVec> table; // key (i<=j)

    int dim() const { return (int)labels.size(); }
    SparseVec product(int i, int j) const;
    SparseVec product(const SparseVec& x, const SparseVec& y) const;
    Rational aug(int i) const { return Rational(i == unit ? 1 : 0); }
};

// violations of commutativity bookkeeping, associativity, unitality, and
// nilpotency of the ideal; empty means valid.
std::vector<std::string> check_local_algebra(const LocalAlgebra& A);

// Symmetric 2-functional A x A -> K, keyed on basis pairs (i<=j).
using SymFunctional = std::map<std::pair<int, int>, Rational>;

// Complex 0 -> Hom(A,K) -d1-> Hom(S^2 A,K) -d2-> Hom(A^3,K) with K-action
// through the augmentation:
//   d1 psi(a,b) = eps(a) psi(b) - psi(ab) + eps(b) psi(a)
//   d2 phi(a,b,c) = eps(a) phi(b,c) - phi(ab,c) + phi(a,bc) - eps(c) phi(a,b)
Matrix harrison_d1_matrix(const LocalAlgebra& A);
Matrix harrison_d2_matrix(const LocalAlgebra& A);

// Ordered basis of symmetric pairs (i<=j) used as rows of d1 / columns of d2.
std::vector<std::pair<int, int>> sym_pair_basis(int n);

int harrison_h1_dim(const LocalAlgebra& A); // = dim of derivations A -> K

struct HarrisonH2 {
    int dimension = 0;
    std::vector<SymFunctional> reps;
};
HarrisonH2 harrison_h2(const LocalAlgebra& A);

// Quotient presentation K[x_1..x_n]/I with weighted variables; monomials of
// weight above `truncation` are part of the ideal by convention.
struct AlgebraPresentation {
    std::string name;
    PolyRing ring;
    std::vector<Polynomial> gens;
    int truncation = 0;
};

std::vector<std::string> check_presentation(const AlgebraPresentation& P);

struct PresentationH2 {
    int dimension = 0;
    std::vector<Polynomial> reps; // generators of I modulo m*I, per weight
};
// dim I/(m*I) computed weight by weight up to the truncation order.
PresentationH2 presentation_h2(const AlgebraPresentation& P);

// The quotient algebra as a multiplication table; basis = canonical
// complement monomials of the ideal, weight by weight.
LocalAlgebra algebra_of(const AlgebraPresentation& P);

// Square-zero extension B = A + K*theta with
//   (a1,m1)(a2,m2) = (a1 a2, eps(a1) m2 + eps(a2) m1 + phi(a1,a2)).
// phi must satisfy d2 phi = 0; the unit of B is restored by the coboundary
// shift psi(1) = phi(1,1).
LocalAlgebra extension_from_cocycle(const LocalAlgebra& A, const SymFunctional& phi);

// structural equality of multiplication tables under a basis relabeling
// given by perm (index in A -> index in B).
bool tables_match(const LocalAlgebra& A, const LocalAlgebra& B,
                  const std::vector<int>& perm);

} // namespace mvdef
