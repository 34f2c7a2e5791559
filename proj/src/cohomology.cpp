#include "mvdef/cohomology.hpp"

#include <stdexcept>

namespace mvdef {

std::vector<Rational> CohomologySpace::class_coords(const SparseVec& solved) const {
    std::vector<Rational> out(dimension, Rational(0));
    for (const auto& [i, v] : solved)
        if (i >= image_cols) out[i - image_cols] = v;
    return out;
}

namespace {

Matrix projection_matrix(const ComponentBasis& basis, const Matrix& image,
                         const std::vector<Cochain>& reps) {
    std::vector<SparseVec> cols;
    for (int c = 0; c < image.cols(); ++c) cols.push_back(image.column(c));
    for (const auto& r : reps) cols.push_back(basis.coordinates(r));
    return Matrix::from_columns(basis.dim(), cols);
}

} // namespace

CohomologySpace cohomology(const GradedLieAlgebra& L, int q, int g, std::optional<int> window) {
    CohomologySpace H;
    H.arity = q;
    H.degree = g;
    H.basis = cochain_basis(L, q, g, window);
    Matrix d_out = differential_matrix(L, q, g, window);
    Matrix d_in = q > 0 ? differential_matrix(L, q - 1, g, window)
                        : Matrix(H.basis.dim(), 0);
    std::vector<SparseVec> kernel = kernel_basis(d_out);

    // representatives: kernel vectors independent modulo the image, found by
    // pivoting [image | kernel]
    std::vector<SparseVec> cols;
    for (int c = 0; c < d_in.cols(); ++c) cols.push_back(d_in.column(c));
    const int img_block = (int)cols.size();
    for (const auto& k : kernel) cols.push_back(k);
    RrefResult red = rref(Matrix::from_columns(H.basis.dim(), cols));
    for (int p : red.pivots)
        if (p >= img_block) H.reps.push_back(H.basis.cochain(kernel[p - img_block]));

    H.dimension = (int)H.reps.size();
    H.image_cols = d_in.cols();
    H.proj = projection_matrix(H.basis, d_in, H.reps);
    return H;
}

int cohomology_dim(const GradedLieAlgebra& L, int q, int g, std::optional<int> window) {
    Matrix d_out = differential_matrix(L, q, g, window);
    int dim_kernel = d_out.cols() - rank(d_out);
    int rank_in = q > 0 ? rank(differential_matrix(L, q - 1, g, window)) : 0;
    return dim_kernel - rank_in;
}

GradedLieAlgebra l1_backing(int N, int g) { return l1_truncated(N + std::max(g, 0) + 1); }

int l1_cohomology_dim(int N, int q, int g) {
    return cohomology_dim(l1_backing(N, g), q, g, N);
}

CohomologySpace l1_cohomology(int N, int q, int g) {
    return cohomology(l1_backing(N, g), q, g, N);
}

std::optional<std::vector<Rational>> class_of(const GradedLieAlgebra& L,
                                              const CohomologySpace& H, const Cochain& z) {
    if (z.arity != H.arity || z.degree != H.degree)
        throw std::invalid_argument("class_of: cochain component mismatch");
    if (!apply_differential(L, z, H.basis.window).is_zero()) return std::nullopt;
    auto x = solve(H.proj, H.basis.coordinates(z));
    if (!x)
        throw std::runtime_error("class_of: cocycle outside image+representatives span");
    return H.class_coords(*x);
}

bool is_coboundary(const GradedLieAlgebra& L, const CohomologySpace& H, const Cochain& z) {
    auto c = class_of(L, H, z);
    if (!c) throw std::invalid_argument("is_coboundary: not a cocycle");
    for (const auto& v : *c)
        if (v != 0) return false;
    return true;
}

void replace_representatives(const GradedLieAlgebra& L, CohomologySpace& H,
                             std::vector<Cochain> reps) {
    if ((int)reps.size() != H.dimension)
        throw std::invalid_argument("replace_representatives: wrong count");
    for (const auto& r : reps) {
        if (r.arity != H.arity || r.degree != H.degree)
            throw std::invalid_argument("replace_representatives: component mismatch");
        if (!apply_differential(L, r, H.basis.window).is_zero())
            throw std::invalid_argument("replace_representatives: not a cocycle");
    }
    // keep only the old image block from H.proj
    std::vector<SparseVec> cols;
    for (int c = 0; c < H.image_cols; ++c) cols.push_back(H.proj.column(c));
    int image_rank = rank(Matrix::from_columns(H.basis.dim(), cols));
    for (const auto& r : reps) cols.push_back(H.basis.coordinates(r));
    Matrix proj = Matrix::from_columns(H.basis.dim(), cols);
    if (rank(proj) != image_rank + (int)reps.size())
        throw std::invalid_argument("replace_representatives: classes not independent");
    H.reps = std::move(reps);
    H.proj = std::move(proj);
}

GradedLieAlgebra infinitesimal_bracket(const GradedLieAlgebra& L,
                                       const std::vector<CohomologySpace>& H2) {
    GradedLieAlgebra E;
    E.name = L.name + "+hom(H2,L)";
    E.labels = L.labels;
    E.degrees = L.degrees;
    const int n = L.dim();

    struct HomElem { int space, rep, j; };
    std::vector<HomElem> hom;
    for (int s = 0; s < (int)H2.size(); ++s)
        for (int r = 0; r < H2[s].dimension; ++r)
            for (int j = 0; j < n; ++j) {
                hom.push_back({s, r, j});
                E.labels.push_back("f" + std::to_string(s) + "_" + std::to_string(r) +
                                   "[" + L.labels[j] + "]");
                E.degrees.push_back(L.degrees[j] + H2[s].degree);
            }
    auto hom_index = [&](int s, int r, int j) {
        int base = 0;
        for (int t = 0; t < s; ++t) base += H2[t].dimension * n;
        return n + base + r * n + j;
    };

    for (const auto& [key, v] : L.table) E.table.emplace(key, v);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Hom component of [e_i, e_j]: alpha -> rep_alpha(e_i, e_j)
            for (int s = 0; s < (int)H2.size(); ++s)
                for (int r = 0; r < H2[s].dimension; ++r) {
                    auto it = H2[s].reps[r].coeff.lower_bound({{i, j}, 0});
                    for (; it != H2[s].reps[r].coeff.end() && it->first.first == Tuple{i, j}; ++it)
                        E.table[{i, j}].emplace_back(hom_index(s, r, it->first.second), it->second);
                }
        }
    for (int i = 0; i < n; ++i)
        for (const auto& h : hom) {
            // [e_i, f(alpha -> e_j)] = f(alpha -> [e_i, e_j])
            SparseVec br = L.bracket(i, h.j);
            if (br.empty()) continue;
            SparseVec v;
            for (const auto& [k, c] : br) v.emplace_back(hom_index(h.space, h.rep, k), c);
            E.table[{i, hom_index(h.space, h.rep, h.j)}] = v;
        }
    // normalize: sort each entry's target list
    for (auto& [key, v] : E.table)
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return E;
}

std::vector<DeformationDifferential> deformation_differential(const FormalBracketFamily& F) {
    std::vector<DeformationDifferential> out;
    for (const auto& part : F.linear_parts()) {
        DeformationDifferential d;
        d.degree = part.degree;
        d.cocycle.arity = 2;
        d.cocycle.degree = part.degree;
        for (const auto& [key, v] : part.terms)
            for (const auto& [k, c] : v)
                d.cocycle.add_term({key.first, key.second}, k, c);
        CohomologySpace H = cohomology(F.base, 2, part.degree);
        auto cls = class_of(F.base, H, d.cocycle);
        if (!cls)
            throw std::runtime_error("deformation_differential: order-1 part is not a cocycle");
        d.class_coords = *cls;
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace mvdef
