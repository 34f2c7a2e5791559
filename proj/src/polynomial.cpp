#include "mvdef/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mvdef/matrix.hpp"

namespace mvdef {

int PolyRing::weight(const Exponents& e) const {
    int w = 0;
    for (int i = 0; i < (int)e.size() && i < (int)weights.size(); ++i) w += e[i] * weights[i];
    return w;
}

std::optional<int> PolyRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_quotient(const Exponents& b, const Exponents& a) {
    Exponents q(b.size());
    for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

bool monomial_less(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms[e] = c;
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Polynomial& Polynomial::axpy(const Rational& c, const Polynomial& other) {
    if (c != 0)
        for (const auto& [e, v] : other.terms) add_term(e, c * v);
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out;
    if (c != 0)
        for (const auto& [e, v] : terms) out.terms[e] = c * v;
    return out;
}

Polynomial Polynomial::times_monomial(const Exponents& e, const Rational& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms) {
        Exponents p(m.size());
        for (size_t i = 0; i < m.size(); ++i) p[i] = m[i] + e[i];
        out.terms[p] = c * v;
    }
    return out;
}

Polynomial Polynomial::multiply(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [e, c] : other.terms) out.axpy(1, times_monomial(e, c));
    return out;
}

std::optional<Exponents> leading_monomial(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    const Exponents* best = nullptr;
    for (const auto& [e, c] : p.terms)
        if (!best || monomial_less(e, *best)) best = &e;
    return *best;
}

Rational coeff_of(const Polynomial& p, const Exponents& e) {
    auto it = p.terms.find(e);
    return it == p.terms.end() ? Rational(0) : it->second;
}

std::optional<int> homogeneous_weight(const PolyRing& R, const Polynomial& p) {
    std::optional<int> w;
    for (const auto& [e, c] : p.terms) {
        int we = R.weight(e);
        if (!w) w = we;
        else if (*w != we) return std::nullopt;
    }
    return w;
}

Polynomial substitute(const Polynomial& p, int var, const Polynomial& value, int nvars) {
    Polynomial out;
    for (const auto& [e, c] : p.terms) {
        Exponents rest = e;
        int k = rest[var];
        rest[var] = 0;
        Polynomial term = Polynomial::monomial(rest, c);
        for (int i = 0; i < k; ++i) term = term.multiply(value);
        out.axpy(1, term);
    }
    (void)nvars;
    return out;
}

Polynomial reduce_modulo(const Polynomial& f, const std::vector<Polynomial>& gens) {
    Polynomial r = f;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : gens) {
            auto lg = leading_monomial(g);
            if (!lg) continue;
            Rational lc = coeff_of(g, *lg);
            for (const auto& [e, c] : r.terms) {
                if (!divides(*lg, e)) continue;
                r.axpy(-c / lc, g.times_monomial(exp_quotient(e, *lg)));
                changed = true;
                break; // iterator invalidated
            }
            if (changed) break;
        }
    }
    return r;
}

std::vector<Polynomial> normalize_relations(const PolyRing& R, std::vector<Polynomial> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Polynomial& p) { return p.is_zero(); }),
               gens.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            Polynomial r = reduce_modulo(gens[i], others);
            if (!(r == gens[i])) {
                changed = true;
                if (r.is_zero()) {
                    gens.erase(gens.begin() + i);
                    break;
                }
                gens[i] = std::move(r);
            }
        }
    }
    for (auto& g : gens) {
        auto lg = leading_monomial(g);
        Rational lc = coeff_of(g, *lg);
        if (lc != 1) g = g.scaled(Rational(1) / lc);
    }
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        int wa = homogeneous_weight(R, a).value_or(0), wb = homogeneous_weight(R, b).value_or(0);
        if (wa != wb) return wa < wb;
        return monomial_less(*leading_monomial(a), *leading_monomial(b));
    });
    return gens;
}

std::vector<Exponents> monomials_of_weight(const PolyRing& R, int w) {
    std::vector<Exponents> out;
    Exponents cur(R.nvars(), 0);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == R.nvars()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        if (var == R.nvars() - 1) {
            if (rem % R.weights[var] == 0) {
                cur[var] = rem / R.weights[var];
                out.push_back(cur);
                cur[var] = 0;
            }
            return;
        }
        for (int k = 0; k * R.weights[var] <= rem; ++k) {
            cur[var] = k;
            self(self, var + 1, rem - k * R.weights[var]);
        }
        cur[var] = 0;
    };
    rec(rec, 0, w);
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
}

std::vector<int> ideal_component_dims(const PolyRing& R, const std::vector<Polynomial>& gens,
                                      int maxWeight) {
    std::vector<int> dims(maxWeight + 1, 0);
    for (int w = 0; w <= maxWeight; ++w) {
        std::vector<Exponents> mons = monomials_of_weight(R, w);
        std::map<Exponents, int> col;
        for (int i = 0; i < (int)mons.size(); ++i) col[mons[i]] = i;
        std::vector<SparseVec> rows;
        for (const auto& g : gens) {
            auto wg = homogeneous_weight(R, g);
            if (!wg || *wg > w) continue;
            for (const auto& p : monomials_of_weight(R, w - *wg)) {
                Polynomial prod = g.times_monomial(p);
                SparseVec row;
                for (const auto& [e, c] : prod.terms) row.emplace_back(col.at(e), c);
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                rows.push_back(std::move(row));
            }
        }
        dims[w] = rows.empty() ? 0 : rank(Matrix::from_rows((int)mons.size(), std::move(rows)));
    }
    return dims;
}

std::string monomial_to_string(const PolyRing& R, const Exponents& e) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < (int)e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << R.vars[i];
        if (e[i] > 1) os << "^" << e[i];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

std::string poly_to_string(const PolyRing& R, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<Exponents> mons;
    for (const auto& [e, c] : p.terms) mons.push_back(e);
    std::sort(mons.begin(), mons.end(), monomial_less);
    std::ostringstream os;
    bool first = true;
    for (const auto& e : mons) {
        Rational c = p.terms.at(e);
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit_coeff = (a == 1) && total_degree(e) > 0;
        if (!unit_coeff) os << rat_to_string(a);
        if (total_degree(e) > 0) {
            if (!unit_coeff) os << "*";
            os << monomial_to_string(R, e);
        }
        first = false;
    }
    return os.str();
}

} // namespace mvdef
