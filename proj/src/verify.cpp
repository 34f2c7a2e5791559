#include "mvdef/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "mvdef/harrison.hpp"

namespace mvdef {

std::vector<int> l1_dim_row(int N, int q, int gmin, int gmax) {
    std::vector<int> row;
    for (int g = gmin; g <= gmax; ++g) row.push_back(l1_cohomology_dim(N, q, g));
    return row;
}

namespace {

Exponents exps(int a, int b, int c) { return {a, b, c}; }

Rational sign(int k) { return ((k % 2) + 2) % 2 ? Rational(-1) : Rational(1); }

std::string row_str(const std::vector<int>& r) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

Cochain random_cochain(std::mt19937& rng, const ComponentBasis& basis) {
    std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
    Cochain c;
    c.arity = basis.arity;
    c.degree = basis.degree;
    for (const auto& e : basis.elems) {
        if (coin(rng) == 0) continue;
        int v = val(rng);
        if (v != 0) c.coeff[e] = v;
    }
    return c;
}

bool cochain_eq(const Cochain& a, const Cochain& b) {
    Cochain d = a;
    d.axpy(-1, b);
    return d.is_zero();
}

} // namespace

std::vector<Polynomial> expected_l1_generators(const PolyRing& R) {
    const Rational A = rat(-814, 845), B = rat(476, 975), D = rat(864, 2197);
    Polynomial F1 = Polynomial::monomial(exps(0, 1, 1));
    Polynomial F2 = Polynomial::monomial(exps(0, 0, 2));
    F2.add_term(exps(2, 0, 1), A);
    F2.add_term(exps(1, 2, 0), B);
    F2.add_term(exps(4, 0, 0), B * D);
    Polynomial F3 = Polynomial::monomial(exps(0, 3, 0));
    F3.add_term(exps(3, 1, 0), D);
    return normalize_relations(R, {F1, F2, F3});
}

std::vector<Polynomial> expected_l1_step2_generators(const PolyRing& R) {
    const Rational A = rat(-814, 845), B = rat(476, 975);
    Polynomial F1 = Polynomial::monomial(exps(0, 1, 1));
    Polynomial F2 = Polynomial::monomial(exps(0, 0, 2));
    F2.add_term(exps(2, 0, 1), A);
    F2.add_term(exps(1, 2, 0), B);
    Polynomial F3 = Polynomial::monomial(exps(0, 3, 0));
    return normalize_relations(R, {F1, F2, F3});
}

bool variety_decomposition_ok(const PolyRing& R, const std::vector<Polynomial>& gens,
                              std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (gens.size() != 3) return fail("expected exactly three generators");
    for (const auto& g : gens) {
        auto w = homogeneous_weight(R, g);
        if (!w) return fail("generator is not weight-homogeneous");
        if (*w < 7 || *w > 9) return fail("generator outside weights 7..9");
    }
    const Polynomial &F1 = gens[0], &F2 = gens[1], &F3 = gens[2];
    if (!(F1 == Polynomial::monomial(exps(0, 1, 1)))) return fail("first generator is not y*z");
    // cusp component: F3 = y*(y^2 + D*x^3), D nonzero
    if (coeff_of(F3, exps(0, 3, 0)) != 1) return fail("third generator not monic in y^3");
    Rational D = coeff_of(F3, exps(3, 1, 0));
    if (D == 0) return fail("cusp coefficient vanishes");
    if ((int)F3.terms.size() != 2) return fail("third generator has extra terms");
    // plane y = 0: F2 restricts to z^2 + A x^2 z + C x^4 with distinct roots
    Polynomial F2y0 = substitute(F2, 1, Polynomial(), R.nvars());
    Rational A = coeff_of(F2y0, exps(2, 0, 1));
    Rational C = coeff_of(F2y0, exps(4, 0, 0));
    if (coeff_of(F2y0, exps(0, 0, 2)) != 1) return fail("second generator not monic in z^2");
    if ((int)F2y0.terms.size() != (2 + (A != 0) + (C != 0)) - 1)
        return fail("unexpected terms in the z-plane restriction");
    if (A * A == 4 * C) return fail("parabola branches coincide (A^2 = 4C)");
    // C must factor as B*D with B the x*y^2 coefficient
    Rational B = coeff_of(F2, exps(1, 2, 0));
    if (C != B * D) return fail("quartic coefficient is not B*D");
    // plane z = 0: F2 must vanish on the cusp, i.e. reduce to zero mod F3
    Polynomial F2z0 = substitute(F2, 2, Polynomial(), R.nvars());
    Polynomial cusp = Polynomial::monomial(exps(0, 2, 0));
    cusp.add_term(exps(3, 0, 0), D);
    if (!reduce_modulo(F2z0, {cusp}).is_zero())
        return fail("second generator does not vanish on the cusp");
    if (why) *why = "";
    return true;
}

AlgebraPresentation truncated_polynomial_presentation(int order) {
    AlgebraPresentation P;
    P.name = "K[t]/(t^" + std::to_string(order) + ")";
    P.ring = PolyRing{{"t"}, {1}};
    P.gens = {Polynomial::monomial({order})};
    P.truncation = order;
    return P;
}

AlgebraPresentation fat_point_presentation() {
    AlgebraPresentation P;
    P.name = "K[x,y]/(x^2,x*y,y^2)";
    P.ring = PolyRing{{"x", "y"}, {1, 1}};
    P.gens = {Polynomial::monomial({2, 0}), Polynomial::monomial({1, 1}),
              Polynomial::monomial({0, 2})};
    P.truncation = 2;
    return P;
}

namespace {

CheckResult check_dimension_table(const VerifyOptions& opt) {
    CheckResult r{"cohomology dimension table", false, ""};
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> exp2 = {0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0};
    std::vector<int> exp3 = {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0};
    std::ostringstream os;
    bool ok = true;
    for (int q : {2, 3}) {
        const auto& expect = q == 2 ? exp2 : exp3;
        std::vector<int> a = l1_dim_row(opt.N, q, 1, 12);
        std::vector<int> b = l1_dim_row(opt.N + opt.margin, q, 1, 12);
        os << "H^" << q << " at " << opt.N << ": " << row_str(a) << ", at "
           << opt.N + opt.margin << ": " << row_str(b) << "; ";
        if (a != expect || b != expect) ok = false;
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    os << secs << "s";
    r.pass = ok && secs < 300;
    if (ok && secs >= 300) os << " (over the 5 minute budget)";
    r.detail = os.str();
    return r;
}

CheckResult check_nonvanishing() {
    CheckResult r{"non-vanishing brackets and triple product", false, ""};
    const int repW = 38, solveW = 31, outW = 24;
    GradedLieAlgebra L = l1_truncated(repW + 8);
    Cochain a = l1_dmu(L, 2, repW), b = l1_dmu(L, 3, repW), c = l1_dmu(L, 4, repW);
    std::ostringstream os;
    bool ok = true;
    const char* names[] = {"d(mu_2)", "d(mu_3)", "d(mu_4)"};
    const Cochain* reps[] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        bool nz = class_nonzero(L, truncate_cochain(L, *reps[i], outW), outW);
        os << names[i] << (nz ? " non-coboundary; " : " IS a coboundary; ");
        ok = ok && nz;
    }
    bool bc = class_nonzero(L, cochain_bracket(L, b, c, outW), outW);
    bool cc = class_nonzero(L, cochain_bracket(L, c, c, outW), outW);
    bool bbb = class_nonzero(L, triple_massey(L, b, solveW, outW), outW);
    os << "[b,c] " << (bc ? "!= 0" : "== 0") << ", [c,c] " << (cc ? "!= 0" : "== 0")
       << ", <b,b,b> " << (bbb ? "!= 0" : "== 0");
    r.pass = ok && bc && cc && bbb;
    r.detail = os.str();
    return r;
}

CheckResult check_base(const MiniversalResult& res, bool engine_ok,
                       const std::string& engine_err) {
    CheckResult r{"deformation base generators", false, ""};
    if (!engine_ok) {
        r.detail = "construction failed: " + engine_err;
        return r;
    }
    std::vector<Polynomial> expect = expected_l1_generators(res.ring);
    std::ostringstream os;
    for (const auto& g : res.generators) os << poly_to_string(res.ring, g) << "; ";
    if (res.generators == expect) {
        r.pass = true;
        os << "exact match";
    } else {
        std::string why;
        r.pass = variety_decomposition_ok(res.ring, res.generators, &why);
        os << (r.pass ? "constant mismatch but zero locus verified"
                      : "mismatch: " + why);
    }
    r.detail = os.str();
    return r;
}

CheckResult check_snapshots(const MiniversalResult& res, bool engine_ok,
                            const std::string& engine_err) {
    CheckResult r{"intermediate relation sets", false, ""};
    if (!engine_ok) {
        r.detail = "construction failed: " + engine_err;
        return r;
    }
    std::ostringstream os;
    Polynomial yz = Polynomial::monomial(exps(0, 1, 1));
    Polynomial z2 = Polynomial::monomial(exps(0, 0, 2));
    std::vector<Polynomial> step1 = normalize_relations(res.ring, {yz, z2});
    std::vector<Polynomial> step2 = expected_l1_step2_generators(res.ring);
    bool ok1 = res.snapshots.size() >= 1 && res.snapshots[0] == step1;
    bool ok2 = res.snapshots.size() >= 2 && res.snapshots[1] == step2;
    os << "step 1 " << (ok1 ? "ok" : "MISMATCH") << "; step 2 " << (ok2 ? "ok" : "MISMATCH");
    if (!ok1 && res.snapshots.size() >= 1) {
        os << " [got:";
        for (const auto& g : res.snapshots[0]) os << " " << poly_to_string(res.ring, g) << ";";
        os << "]";
    }
    if (!ok2 && res.snapshots.size() >= 2) {
        os << " [got:";
        for (const auto& g : res.snapshots[1]) os << " " << poly_to_string(res.ring, g) << ";";
        os << "]";
    }
    r.pass = ok1 && ok2;
    r.detail = os.str();
    return r;
}

bool dgla_identities(std::mt19937& rng, std::ostringstream& os) {
    GradedLieAlgebra L = l1_truncated(9);
    std::uniform_int_distribution<int> arity(1, 3), deg(0, 3);
    int pairs = 0, triples = 0;
    while (pairs < 100 || triples < 100) {
        ComponentBasis ba = cochain_basis(L, arity(rng), deg(rng));
        ComponentBasis bb = cochain_basis(L, arity(rng), deg(rng));
        ComponentBasis bc = cochain_basis(L, arity(rng), deg(rng));
        Cochain a = random_cochain(rng, ba), b = random_cochain(rng, bb),
                c = random_cochain(rng, bc);
        int pa = a.arity - 1, pb = b.arity - 1, pc = c.arity - 1;
        // antisymmetry: [a,b] + (-1)^{|a||b|}[b,a] = 0
        Cochain anti = cochain_bracket(L, a, b);
        anti.axpy(sign(pa * pb), cochain_bracket(L, b, a));
        if (!anti.is_zero()) {
            os << "antisymmetry failed (arities " << a.arity << "," << b.arity << ")";
            return false;
        }
        // Leibniz: delta[a,b] = [delta a, b] + (-1)^{|a|}[a, delta b]
        Cochain leib = apply_differential(L, cochain_bracket(L, a, b));
        leib.axpy(-1, cochain_bracket(L, apply_differential(L, a), b));
        leib.axpy(-sign(pa), cochain_bracket(L, a, apply_differential(L, b)));
        if (!leib.is_zero()) {
            os << "Leibniz failed (arities " << a.arity << "," << b.arity << ")";
            return false;
        }
        ++pairs;
        // graded Jacobi
        Cochain jac = cochain_bracket(L, cochain_bracket(L, a, b), c);
        jac.axpy(sign(pa * (pb + pc)), cochain_bracket(L, cochain_bracket(L, b, c), a));
        jac.axpy(sign(pc * (pa + pb)), cochain_bracket(L, cochain_bracket(L, c, a), b));
        if (!jac.is_zero()) {
            os << "Jacobi failed (arities " << a.arity << "," << b.arity << "," << c.arity
               << ")";
            return false;
        }
        ++triples;
    }
    os << pairs << " random pairs and " << triples << " triples ok; ";
    return true;
}

CheckResult check_properties(const VerifyOptions& opt, bool engine_ok,
                             const std::string& engine_err) {
    CheckResult r{"algebraic property suites", false, ""};
    std::ostringstream os;
    // delta^2 = 0 on full and window components
    GradedLieAlgebra Lf = l1_truncated(14);
    for (int q : {1, 2})
        for (int g = 1; g <= 6; ++g)
            if (!differential_matrix(Lf, q + 1, g).multiply(differential_matrix(Lf, q, g))
                     .is_zero()) {
                r.detail = "delta^2 != 0 on the full complex";
                return r;
            }
    GradedLieAlgebra Lw = l1_truncated(20);
    for (int q : {1, 2})
        for (int g = 1; g <= 6; ++g)
            if (!differential_matrix(Lw, q + 1, g, 10)
                     .multiply(differential_matrix(Lw, q, g, 10))
                     .is_zero()) {
                r.detail = "delta^2 != 0 on a window component";
                return r;
            }
    os << "delta^2 = 0; ";
    std::mt19937 rng(opt.seed);
    if (!dgla_identities(rng, os)) {
        r.detail = os.str();
        return r;
    }
    // Jacobi for the truncations and the three bracket families
    for (int N : {8, 16}) {
        if (!check_jacobi(l1_truncated(N)).empty()) {
            r.detail = "Jacobi fails for the plain truncation";
            return r;
        }
        for (int id = 1; id <= 3; ++id)
            for (const Rational& t : {rat(0), rat(1), rat(-2), rat(5, 3)})
                if (!check_jacobi(deformation_family(id, t, N)).empty()) {
                    std::ostringstream e;
                    e << "Jacobi fails for family " << id << " at t=" << rat_to_string(t)
                      << ", N=" << N;
                    r.detail = e.str();
                    return r;
                }
    }
    os << "Jacobi for 3 families x {0,1,-2,5/3} x {8,16}; ";
    // coalgebra laws on every monomial up to the weight cap
    PolyRing R{{"x", "y", "z"}, {2, 3, 4}};
    for (int w = 0; w <= opt.maxWeight; ++w)
        for (const auto& m : monomials_of_weight(R, w))
            if (!coalgebra_cocommutative(m) || !coalgebra_coassociative(m)) {
                r.detail = "coalgebra law fails on a monomial";
                return r;
            }
    os << "coalgebra laws up to weight " << opt.maxWeight << "; ";
    // the defining-equation, stabilization, and generator-bound invariants
    // are hard assertions inside the inductive construction
    if (!engine_ok) {
        r.detail = os.str() + "construction invariants FAILED: " + engine_err;
        return r;
    }
    os << "step invariants held during the base construction";
    r.pass = true;
    r.detail = os.str();
    return r;
}

CheckResult check_harrison() {
    CheckResult r{"symmetric cohomology cross-validation", false, ""};
    std::ostringstream os;
    struct Case {
        AlgebraPresentation P;
        int h1, h2;
    };
    std::vector<Case> cases = {{truncated_polynomial_presentation(3), 1, 1},
                               {fat_point_presentation(), 2, 3},
                               {truncated_polynomial_presentation(4), 1, 1}};
    for (const auto& cse : cases) {
        LocalAlgebra A = algebra_of(cse.P);
        int via_complex = harrison_h2(A).dimension;
        int via_presentation = presentation_h2(cse.P).dimension;
        int h1 = harrison_h1_dim(A);
        os << cse.P.name << ": H1=" << h1 << ", H2=" << via_complex << "/"
           << via_presentation << "; ";
        if (via_complex != via_presentation || via_complex != cse.h2 || h1 != cse.h1) {
            r.detail = os.str() + "disagreement";
            return r;
        }
    }
    // square-zero extension of K[t]/(t^2) by phi(t,t)=1 is K[t]/(t^3)
    LocalAlgebra A2 = algebra_of(truncated_polynomial_presentation(2));
    SymFunctional phi;
    phi[{1, 1}] = 1; // basis of A2 is (1, t)
    LocalAlgebra B = extension_from_cocycle(A2, phi);
    LocalAlgebra A3 = algebra_of(truncated_polynomial_presentation(3));
    bool ext_ok = tables_match(B, A3, {0, 1, 2});
    os << "extension of K[t]/(t^2) " << (ext_ok ? "matches" : "DOES NOT match")
       << " K[t]/(t^3)";
    r.pass = ext_ok;
    r.detail = os.str();
    return r;
}

} // namespace

std::vector<CheckResult> acceptance_battery(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_dimension_table(opt));
    out.push_back(check_nonvanishing());
    MiniversalResult res;
    bool engine_ok = false;
    std::string engine_err;
    try {
        L1Miniversal mv = l1_miniversal_setup(opt.maxWeight, opt.gauge, opt.N);
        res = mv.run();
        engine_ok = true;
    } catch (const std::exception& e) {
        engine_err = e.what();
    }
    out.push_back(check_base(res, engine_ok, engine_err));
    out.push_back(check_snapshots(res, engine_ok, engine_err));
    out.push_back(check_properties(opt, engine_ok, engine_err));
    out.push_back(check_harrison());
    return out;
}

} // namespace mvdef
