#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvdef/rational.hpp"

namespace mvdef {

using Exponents = std::vector<int>;

// Variables with positive integer weights; monomial weight = dot(exponents,
// weights), polynomial degree = sum of exponents.
struct PolyRing {
    std::vector<std::string> vars;
    std::vector<int> weights;

    int nvars() const { return (int)vars.size(); }
    int weight(const Exponents& e) const;
    std::optional<int> var_index(const std::string& name) const;
};

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b); // a | b componentwise
Exponents exp_quotient(const Exponents& b, const Exponents& a);

// Monomial order used for leading terms: lower total degree first, ties
// broken reverse-lexicographically (higher exponent on a later variable
// wins). The leading monomial of a polynomial is its minimum.
bool monomial_less(const Exponents& a, const Exponents& b);

struct Polynomial {
    std::map<Exponents, Rational> terms; // zero coefficients never stored

    static Polynomial monomial(const Exponents& e, const Rational& c = 1);
    bool is_zero() const { return terms.empty(); }
    void add_term(const Exponents& e, const Rational& c);
    Polynomial& axpy(const Rational& c, const Polynomial& other);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Exponents& e, const Rational& c = 1) const;
    Polynomial multiply(const Polynomial& other) const;
    bool operator==(const Polynomial& o) const = default;
};

// nullopt for the zero polynomial.
std::optional<Exponents> leading_monomial(const Polynomial& p);
Rational coeff_of(const Polynomial& p, const Exponents& e);

// weight of a weight-homogeneous polynomial; nullopt if mixed or zero.
std::optional<int> homogeneous_weight(const PolyRing& R, const Polynomial& p);

// substitute `value` for variable `var` (other variables pass through).
Polynomial substitute(const Polynomial& p, int var, const Polynomial& value,
                      int nvars);

// remainder of f under repeated leading-monomial reduction by gens.
Polynomial reduce_modulo(const Polynomial& f, const std::vector<Polynomial>& gens);

// Inter-reduce a generating set: each generator reduced modulo the others,
// zero generators dropped, leading coefficients scaled to 1, result sorted
// by (weight, leading monomial). Ideal membership up to the given weight cap
// is preserved (checked by ideal_components_agree in tests).
std::vector<Polynomial> normalize_relations(const PolyRing& R,
                                            std::vector<Polynomial> gens);

// dimensions of the weight-w homogeneous components of the ideal generated
// by gens, for w = 0..maxWeight.
std::vector<int> ideal_component_dims(const PolyRing& R,
                                      const std::vector<Polynomial>& gens,
                                      int maxWeight);

// all exponent vectors of exact weight w.
std::vector<Exponents> monomials_of_weight(const PolyRing& R, int w);

std::string monomial_to_string(const PolyRing& R, const Exponents& e);
std::string poly_to_string(const PolyRing& R, const Polynomial& p);

} // namespace mvdef
