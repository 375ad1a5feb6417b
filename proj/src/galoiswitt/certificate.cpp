#include "wittkit/errors.hpp"
#include "wittkit/galoiswitt.hpp"

#include <algorithm>
#include <functional>

namespace wittkit {

namespace {

std::string located(const CheckResult& r) {
    std::string s = r.detail;
    if (!r.where.empty()) {
        s += " at (";
        for (std::size_t i = 0; i < r.where.size(); ++i) s += (i ? "," : "") + std::to_string(r.where[i]);
        s += ")";
    }
    return s;
}

}  // namespace

WittCertificate real_witt_certificate(const GaloisAction& fixture) {
    WittCertificate cert;
    cert.not_mechanized = {
        "classification of all real fusion 1-categories S with FPdim(Z(S)) = 4 (the case analysis showing C is not a "
        "Drinfeld center)",
        "identification of the centers of the two quaternionic categories Q+ and Q- quoted from the literature",
    };
    const auto& base = fixture.base();
    std::vector<EquivariantSimple> simples;
    std::optional<FusionRing> ring;

    // Each step returns (ok, detail); the run stops at the first failure.
    std::vector<std::pair<const char*, std::function<std::pair<bool, std::string>()>>> steps;
    steps.emplace_back("pentagon", [&] {
        auto r = check_pentagon(base);
        return std::make_pair(r.ok, r.ok ? std::string("trivial associator is a 3-cocycle") : located(r));
    });
    steps.emplace_back("hexagons", [&] {
        auto r = check_hexagons(base);
        return std::make_pair(r.ok, r.ok ? std::string("both hexagon identities hold") : located(r));
    });
    steps.emplace_back("non-degenerate", [&] {
        auto z = muger_center(base);
        return std::make_pair(z.is_trivial(), "Muger center " + z.to_string());
    });
    steps.emplace_back("double centralizer", [&] {
        auto r = double_centralizer_check(base);
        return std::make_pair(r.ok, "C(C(H)) = H for " + std::to_string(r.subgroups_checked) + " subgroups" +
                                        (r.counterexample ? ", fails at " + r.counterexample->to_string() : ""));
    });
    steps.emplace_back("action coherence", [&] {
        auto r = check_action_coherence(fixture);
        return std::make_pair(r.ok, r.ok ? std::string("tensorator, braiding, gamma monoidality, gamma_T = σ(gamma)") : located(r));
    });
    steps.emplace_back("uT(u) = -Id on H", [&] {
        simples = equivariant_simples(fixture);
        auto it = std::find_if(simples.begin(), simples.end(),
                               [](const EquivariantSimple& s) { return s.end_type == EndType::Quaternionic; });
        if (it == simples.end()) return std::make_pair(false, std::string("no quaternionic simple"));
        const NumberField& K = fixture.field();
        const auto& u = it->u;
        const auto& s = fixture.sigma();
        bool ok = true;
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                FieldElement v = u[a][0] * s(u[0][b]) + u[a][1] * s(u[1][b]);
                ok = ok && v == (a == b ? -FieldElement::one(K) : FieldElement::zero(K));
            }
        return std::make_pair(ok, "u = [[" + u[0][0].to_string() + "," + u[0][1].to_string() + "],[" + u[1][0].to_string() +
                                      "," + u[1][1].to_string() + "]] on " + it->label);
    });
    steps.emplace_back("simples REAL/COMPLEX/QUATERNIONIC", [&] {
        std::vector<EndType> types;
        std::string detail;
        bool ok = simples.size() == 3;
        for (const auto& s : simples) {
            types.push_back(s.end_type);
            const int e = equivariant_hom_dim(fixture, s, s);
            ok = ok && e == s.end_dim;
            detail += (detail.empty() ? "" : ", ") + s.label + " " + to_string(s.end_type) + " End dim " + std::to_string(e);
        }
        std::sort(types.begin(), types.end());
        ok = ok && types == std::vector<EndType>{EndType::Real, EndType::Complex, EndType::Quaternionic};
        return std::make_pair(ok, detail);
    });
    steps.emplace_back("FPdim = 4", [&] {
        ring = equivariant_fusion_ring(fixture, simples);
        auto ax = check_fusion_axioms(*ring);
        if (!ax.ok) return std::make_pair(false, "fusion axioms: " + located(ax));
        AlgebraicReal d = fpdim_category(*ring);
        return std::make_pair(d == AlgebraicReal(4), "FPdim = " + d.to_string());
    });
    steps.emplace_back("Z/2 grading over SVect_H", [&] {
        auto gd = grading_decomposition(fixture, simples);
        if (gd.group.order() != 2) return std::make_pair(false, "grading group of order " + std::to_string(gd.group.order()));
        const auto& trivial = gd.components[0];
        std::string detail = "trivial component {";
        for (int s : trivial) detail += " " + simples[static_cast<std::size_t>(s)].label;
        detail += " }";
        // SVect_H: a real unit and one quaternionic simple X with X ⊗ X = 4·unit.
        bool ok = trivial.size() == 2 && gd.components[1].size() == 1;
        if (ok) {
            const int unit = ring->unit();
            const int x = trivial[0] == unit ? trivial[1] : trivial[0];
            ok = simples[static_cast<std::size_t>(x)].end_type == EndType::Quaternionic && ring->N(x, x, unit) == 4;
            for (int k = 0; k < ring->rank(); ++k)
                if (k != unit) ok = ok && ring->N(x, x, k) == 0;
            detail += ", " + ring->label(x) + " ⊗ " + ring->label(x) + " = 4·" + ring->label(unit);
        }
        return std::make_pair(ok, detail);
    });

    for (auto& [name, run] : steps) {
        CertificateCheck c{name, false, {}};
        try {
            auto [ok, detail] = run();
            c.ok = ok;
            c.detail = detail;
        } catch (const Error& e) {
            c.detail = e.what();
        }
        cert.checks.push_back(c);
        if (!c.ok) {
            cert.failed = name;
            break;
        }
    }
    return cert;
}

}  // namespace wittkit
