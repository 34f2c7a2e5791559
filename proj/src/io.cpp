#include "mvdef/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mvdef {

namespace {

Rational parse_rat_or_throw(const std::string& s) {
    auto r = rat_parse(s);
    if (!r) throw std::runtime_error("malformed rational: " + s);
    return *r;
}

Json sparsevec_to_json(const std::vector<std::string>& labels, const SparseVec& v) {
    Json out = Json::object();
    for (const auto& [i, c] : v) out[labels[i]] = rat_to_string(c);
    return out;
}

SparseVec sparsevec_from_json(const std::vector<std::string>& labels, const Json& j) {
    SparseVec v;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int idx = -1;
        for (int i = 0; i < (int)labels.size(); ++i)
            if (labels[i] == it.key()) idx = i;
        if (idx < 0) throw std::runtime_error("unknown basis label: " + it.key());
        Rational c = parse_rat_or_throw(it.value().get<std::string>());
        if (c != 0) v.emplace_back(idx, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::pair<int, int> label_pair(const std::vector<std::string>& labels, const Json& e,
                               const char* lk, const char* rk) {
    auto find = [&](const std::string& s) {
        for (int i = 0; i < (int)labels.size(); ++i)
            if (labels[i] == s) return i;
        throw std::runtime_error("unknown basis label: " + s);
    };
    return {find(e.at(lk).get<std::string>()), find(e.at(rk).get<std::string>())};
}

} // namespace

InputKind input_kind(const Json& j) {
    std::string k = j.at("kind").get<std::string>();
    if (k == "graded-lie-algebra") return InputKind::Algebra;
    if (k == "presentation") return InputKind::Presentation;
    if (k == "local-algebra") return InputKind::LocalAlgebra;
    throw std::runtime_error("unknown document kind: " + k);
}

Json algebra_to_json(const GradedLieAlgebra& L) {
    Json j;
    j["kind"] = "graded-lie-algebra";
    j["name"] = L.name;
    j["basis"] = L.labels;
    j["degrees"] = L.degrees;
    Json brackets = Json::array();
    for (const auto& [key, v] : L.table) {
        Json e;
        e["left"] = L.labels[key.first];
        e["right"] = L.labels[key.second];
        e["value"] = sparsevec_to_json(L.labels, v);
        brackets.push_back(std::move(e));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

GradedLieAlgebra algebra_from_json(const Json& j) {
    GradedLieAlgebra L;
    L.name = j.at("name").get<std::string>();
    L.labels = j.at("basis").get<std::vector<std::string>>();
    L.degrees = j.at("degrees").get<std::vector<int>>();
    if (L.labels.size() != L.degrees.size())
        throw std::runtime_error("basis and degrees must have the same length");
    for (const auto& e : j.at("brackets")) {
        auto [i, k] = label_pair(L.labels, e, "left", "right");
        if (i >= k) throw std::runtime_error("bracket entries must have left < right");
        SparseVec v = sparsevec_from_json(L.labels, e.at("value"));
        if (!v.empty()) L.table[{i, k}] = std::move(v);
    }
    return L;
}

Json polynomial_to_json(const PolyRing& R, const Polynomial& p) {
    Json terms = Json::array();
    std::vector<Exponents> mons;
    for (const auto& [e, c] : p.terms) mons.push_back(e);
    std::sort(mons.begin(), mons.end(), monomial_less);
    for (const auto& e : mons) {
        Json t;
        t["coeff"] = rat_to_string(p.terms.at(e));
        t["exponents"] = e;
        terms.push_back(std::move(t));
    }
    (void)R;
    return terms;
}

Polynomial polynomial_from_json(const PolyRing& R, const Json& j) {
    Polynomial p;
    for (const auto& t : j) {
        Exponents e = t.at("exponents").get<Exponents>();
        if ((int)e.size() != R.nvars())
            throw std::runtime_error("exponent vector length differs from variable count");
        p.add_term(e, parse_rat_or_throw(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json presentation_to_json(const AlgebraPresentation& P) {
    Json j;
    j["kind"] = "presentation";
    j["name"] = P.name;
    j["variables"] = P.ring.vars;
    j["weights"] = P.ring.weights;
    j["truncation"] = P.truncation;
    Json gens = Json::array();
    for (const auto& g : P.gens) gens.push_back(polynomial_to_json(P.ring, g));
    j["generators"] = std::move(gens);
    return j;
}

AlgebraPresentation presentation_from_json(const Json& j) {
    AlgebraPresentation P;
    P.name = j.at("name").get<std::string>();
    P.ring.vars = j.at("variables").get<std::vector<std::string>>();
    P.ring.weights = j.at("weights").get<std::vector<int>>();
    if (P.ring.vars.size() != P.ring.weights.size())
        throw std::runtime_error("variables and weights must have the same length");
    P.truncation = j.at("truncation").get<int>();
    for (const auto& g : j.at("generators"))
        P.gens.push_back(polynomial_from_json(P.ring, g));
    return P;
}

Json local_algebra_to_json(const LocalAlgebra& A) {
    Json j;
    j["kind"] = "local-algebra";
    j["name"] = A.name;
    j["basis"] = A.labels;
    j["unit"] = A.labels[A.unit];
    Json products = Json::array();
    for (const auto& [key, v] : A.table) {
        Json e;
        e["left"] = A.labels[key.first];
        e["right"] = A.labels[key.second];
        e["value"] = sparsevec_to_json(A.labels, v);
        products.push_back(std::move(e));
    }
    j["products"] = std::move(products);
    return j;
}

LocalAlgebra local_algebra_from_json(const Json& j) {
    LocalAlgebra A;
    A.name = j.at("name").get<std::string>();
    A.labels = j.at("basis").get<std::vector<std::string>>();
    std::string unit = j.at("unit").get<std::string>();
    A.unit = -1;
    for (int i = 0; i < A.dim(); ++i)
        if (A.labels[i] == unit) A.unit = i;
    if (A.unit < 0) throw std::runtime_error("unit label not in basis");
    for (const auto& e : j.at("products")) {
        auto [i, k] = label_pair(A.labels, e, "left", "right");
        if (i > k) std::swap(i, k);
        A.table[{i, k}] = sparsevec_from_json(A.labels, e.at("value"));
    }
    return A;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << dump_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace mvdef
