#include "wittkit/equivariant.hpp"
#include "wittkit/errors.hpp"

#include <algorithm>
#include <map>

namespace wittkit {

namespace {

FieldMatrix zero_matrix(const NumberField& K, std::size_t rows, std::size_t cols) {
    return FieldMatrix(rows, std::vector<FieldElement>(cols, FieldElement::zero(K)));
}

FieldMatrix multiply(const NumberField& K, const FieldMatrix& a, const FieldMatrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    FieldMatrix c = zero_matrix(K, a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

FieldMatrix apply_sigma(const FieldAutomorphism& s, const FieldMatrix& a) {
    FieldMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x = s(x);
    return out;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const auto& p = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / p[c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * p[j];
        }
        ++rank;
    }
    return rank;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool satisfies_equivariance(const GaloisAction& action, const EquivariantObject& x) {
    const std::size_t m = x.underlying.size();
    if (x.u.size() != m) return false;
    for (std::size_t a = 0; a < m; ++a) {
        if (x.u[a].size() != m) return false;
        for (std::size_t b = 0; b < m; ++b)
            if (!x.u[a][b].is_zero() && x.underlying[a] != action.perm(x.underlying[b])) return false;
    }
    FieldMatrix lhs = multiply(action.field(), x.u, apply_sigma(action.sigma(), x.u));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            FieldElement expected = a == b ? action.gamma(x.underlying[a]) : FieldElement::zero(action.field());
            if (lhs[a][b] != expected) return false;
        }
    return true;
}

std::vector<EquivariantSimple> equivariant_simples(const GaloisAction& action) {
    if (action.sigma().order() != 2) throw InvariantViolation("equivariantization needs σ of order exactly 2");
    const NumberField& K = action.field();
    const FieldElement one = FieldElement::one(K), zero = FieldElement::zero(K);
    std::vector<EquivariantSimple> out;
    for (int g = 0; g < action.order(); ++g) {
        const int tg = action.perm(g);
        if (tg < g) continue;
        EquivariantSimple s;
        if (tg != g) {
            s.underlying = {g, tg};
            s.u = {{zero, action.gamma(g)}, {one, zero}};
            s.end_type = EndType::Complex;
            s.end_dim = 2;
            s.label = action.name(g) + "+" + action.name(tg);
        } else {
            NormSolution sol = solve_norm_equation(action.sigma(), action.gamma(g));
            if (sol.u) {
                s.underlying = {g};
                s.u = {{*sol.u}};
                s.end_type = EndType::Real;
                s.end_dim = 1;
                s.label = action.name(g);
            } else {
                s.underlying = {g, g};
                s.u = {{zero, action.gamma(g)}, {one, zero}};
                s.end_type = EndType::Quaternionic;
                s.end_dim = 4;
                s.label = action.name(g) + "+" + action.name(g);
            }
        }
        if (!satisfies_equivariance(action, s)) throw InvariantViolation("equivariant structure fails u∘T(u) = γ for " + s.label);
        out.push_back(std::move(s));
    }
    return out;
}

int equivariant_hom_dim(const GaloisAction& action, const EquivariantObject& x, const EquivariantObject& y) {
    const NumberField& K = action.field();
    const int deg = K.degree();
    const std::size_t mx = x.underlying.size(), my = y.underlying.size();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < my; ++a)
        for (std::size_t b = 0; b < mx; ++b)
            if (y.underlying[a] == x.underlying[b]) slots.emplace_back(a, b);
    if (slots.empty()) return 0;
    // Columns: images of the Q-basis of Hom_B(X, Y) under f ↦ f∘u_X − u_Y∘T(f).
    const std::size_t unknowns = slots.size() * static_cast<std::size_t>(deg);
    std::vector<std::vector<Rational>> m(my * mx * static_cast<std::size_t>(deg), std::vector<Rational>(unknowns));
    std::size_t col = 0;
    for (const auto& [a, b] : slots)
        for (int r = 0; r < deg; ++r, ++col) {
            FieldMatrix f = zero_matrix(K, my, mx);
            std::vector<Rational> basis(static_cast<std::size_t>(deg));
            basis[static_cast<std::size_t>(r)] = 1;
            f[a][b] = FieldElement(K, basis);
            FieldMatrix lhs = multiply(K, f, x.u);
            FieldMatrix rhs = multiply(K, y.u, apply_sigma(action.sigma(), f));
            std::size_t row = 0;
            for (std::size_t i = 0; i < my; ++i)
                for (std::size_t j = 0; j < mx; ++j) {
                    FieldElement d = lhs[i][j] - rhs[i][j];
                    for (int k = 0; k < deg; ++k) m[row++][col] = d.coeffs()[static_cast<std::size_t>(k)];
                }
        }
    const int dim_q = static_cast<int>(unknowns) - rational_rank(std::move(m));
    const int fixed_degree = deg / 2;
    if (dim_q % fixed_degree != 0) throw InvariantViolation("equivariant hom space is not a vector space over the fixed field");
    return dim_q / fixed_degree;
}

EquivariantObject equivariant_tensor(const GaloisAction& action, const EquivariantObject& x, const EquivariantObject& y) {
    const NumberField& K = action.field();
    const FiniteGroup& G = action.base().group();
    const std::size_t mx = x.underlying.size(), my = y.underlying.size();
    EquivariantObject z;
    for (std::size_t a = 0; a < mx; ++a)
        for (std::size_t b = 0; b < my; ++b) z.underlying.push_back(G.mul(x.underlying[a], y.underlying[b]));
    z.u = zero_matrix(K, mx * my, mx * my);
    for (std::size_t a = 0; a < mx; ++a)
        for (std::size_t b = 0; b < my; ++b)
            for (std::size_t c = 0; c < mx; ++c) {
                if (x.u[a][c].is_zero()) continue;
                for (std::size_t d = 0; d < my; ++d) {
                    if (y.u[b][d].is_zero()) continue;
                    z.u[a * my + b][c * my + d] = x.u[a][c] * y.u[b][d] / action.J(x.underlying[c], y.underlying[d]);
                }
            }
    if (!satisfies_equivariance(action, z)) throw InvariantViolation("tensor product structure fails u∘T(u) = γ");
    return z;
}

std::vector<std::pair<int, int>> equivariant_tensor_decompose(const GaloisAction& action,
                                                              const std::vector<EquivariantSimple>& simples,
                                                              const EquivariantObject& x, const EquivariantObject& y) {
    EquivariantObject z = equivariant_tensor(action, x, y);
    std::vector<std::pair<int, int>> out;
    std::vector<int> accounted;
    for (std::size_t s = 0; s < simples.size(); ++s) {
        const int h = equivariant_hom_dim(action, simples[s], z);
        if (h % simples[s].end_dim != 0) throw InvariantViolation("hom dimension not divisible by end dimension");
        const int mult = h / simples[s].end_dim;
        if (mult == 0) continue;
        out.emplace_back(static_cast<int>(s), mult);
        for (int r = 0; r < mult; ++r)
            accounted.insert(accounted.end(), simples[s].underlying.begin(), simples[s].underlying.end());
    }
    if (sorted(accounted) != sorted(z.underlying)) throw InvariantViolation("tensor decomposition does not conserve the underlying object");
    return out;
}

FusionRing equivariant_fusion_ring(const GaloisAction& action, const std::vector<EquivariantSimple>& simples) {
    const std::size_t r = simples.size();
    const FiniteGroup& G = action.base().group();
    std::vector<std::string> labels;
    std::vector<EndData> end;
    int unit = -1;
    std::vector<int> owner(static_cast<std::size_t>(action.order()), -1);
    for (std::size_t s = 0; s < r; ++s) {
        labels.push_back(simples[s].label);
        switch (simples[s].end_type) {
            case EndType::Real: end.push_back({1, 1, 1}); break;
            case EndType::Complex: end.push_back({2, 2, 1}); break;
            case EndType::Quaternionic: end.push_back({4, 1, 2}); break;
        }
        for (int g : simples[s].underlying) owner[static_cast<std::size_t>(g)] = static_cast<int>(s);
        if (simples[s].underlying == std::vector<int>{G.identity()}) unit = static_cast<int>(s);
    }
    if (unit < 0) throw InvariantViolation("no simple lies over the unit object");
    std::vector<int> dual;
    for (std::size_t s = 0; s < r; ++s) dual.push_back(owner[static_cast<std::size_t>(G.inverse(simples[s].underlying[0]))]);
    std::vector<std::vector<std::vector<int>>> N(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (const auto& [k, mult] : equivariant_tensor_decompose(action, simples, simples[i], simples[j]))
                N[i][j][static_cast<std::size_t>(k)] = mult;
    return FusionRing(std::move(labels), std::move(N), unit, std::move(dual), std::move(end));
}

GradingDecomposition grading_decomposition(const GaloisAction& action, const std::vector<EquivariantSimple>& simples) {
    const FiniteGroup& G = action.base().group();
    std::vector<int> gens;
    for (const auto& s : simples)
        for (int x : s.underlying)
            for (int y : s.underlying) gens.push_back(G.mul(x, G.inverse(y)));
    Subgroup h0 = subgroup_generated_by(G, gens);
    std::vector<int> coset(static_cast<std::size_t>(G.order()), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (coset[static_cast<std::size_t>(g)] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int x : h0.elements) coset[static_cast<std::size_t>(G.mul(g, x))] = id;
    }
    const std::size_t q = reps.size();
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) table[a][b] = coset[static_cast<std::size_t>(G.mul(reps[a], reps[b]))];
    GradingDecomposition out{h0, FiniteGroup::from_table(table, G.label() + "/H0"), {}, std::vector<std::vector<int>>(q)};
    for (std::size_t s = 0; s < simples.size(); ++s) {
        const int d = coset[static_cast<std::size_t>(simples[s].underlying[0])];
        for (int x : simples[s].underlying)
            if (coset[static_cast<std::size_t>(x)] != d) throw NotGraded("simple " + simples[s].label + " straddles two components");
        out.degree.push_back(d);
        out.components[static_cast<std::size_t>(d)].push_back(static_cast<int>(s));
    }
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = 0; j < simples.size(); ++j) {
            const int expected = out.group.mul(out.degree[i], out.degree[j]);
            for (const auto& [k, mult] : equivariant_tensor_decompose(action, simples, simples[i], simples[j]))
                if (out.degree[static_cast<std::size_t>(k)] != expected)
                    throw NotGraded(simples[i].label + " ⊗ " + simples[j].label + " meets " + simples[static_cast<std::size_t>(k)].label +
                                    " outside the expected component");
        }
    return out;
}

}  // namespace wittkit
