#include "wittkit/cli.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace wittkit::cli {

namespace {

// Input problems that are not JSON syntax errors become usage errors.
template <class F>
auto load(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const UsageError&) {
        throw;
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string join(const std::vector<AbelianGroupStructure>& gs) {
    std::string s;
    for (const auto& g : gs) s += (s.empty() ? "" : ", ") + g.to_string();
    return s;
}

std::string labelled(const std::vector<int>& where, const std::function<std::string(int)>& name) {
    std::string s = "(";
    for (std::size_t i = 0; i < where.size(); ++i) s += (i ? "," : "") + name(where[i]);
    return s + ")";
}

std::string check_detail(const CheckResult& r, const std::string& pass) {
    if (r.ok) return pass;
    std::string s = r.detail;
    if (!r.where.empty()) {
        s += " at (";
        for (std::size_t i = 0; i < r.where.size(); ++i) s += (i ? "," : "") + std::to_string(r.where[i]);
        s += ")";
    }
    return s;
}

NumberField field_arg(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') {
        Source src = Source::from_text(spec, "field");
        return parse_field(src, src.root());
    }
    return field_from_name(spec);
}

CohomologyOptions cohomology_options(const ScenarioOptions& o) {
    CohomologyOptions c;
    c.work_budget = o.work_budget;
    return c;
}

void appendix_a(const ScenarioOptions& o, ScenarioReport& rep) {
    GaloisAction action = load([&] {
        if (!o.input) return GaloisAction::appendix_a();
        ParsedObject obj = parse_input(*o.input);
        if (!std::holds_alternative<GaloisAction>(obj)) throw UsageError("appendix-a expects an action file, got a " + kind(obj));
        return std::get<GaloisAction>(obj);
    });
    WittCertificate cert = real_witt_certificate(action);
    for (const auto& c : cert.checks) rep.add(c.name, c.ok, c.detail);
    for (const auto& n : cert.not_mechanized) rep.notes.push_back("NOT MECHANIZED: " + n);
    rep.payload = to_json(action);
}

void lemma_5_3(const ScenarioOptions& o, ScenarioReport& rep) {
    if (o.tower < 1) throw UsageError("--tower must be at least 1");
    if (o.max_degree < 1) throw UsageError("--max-degree must be at least 1");
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    std::vector<ModuleMap> tower;
    GModule m = GModule::cyclic_action(c2, 4, -1, "mu4");
    for (int i = 0; i < o.tower; ++i) {
        tower.push_back(doubling_step(m));
        m = tower.back().target();
    }
    rep.notes.push_back("C2 acting by inversion on mu_4 ⊂ ... ⊂ mu_" + std::to_string(4 << o.tower));
    for (int n = 1; n <= o.max_degree; ++n) {
        const std::string name = "H^" + std::to_string(n) + " stabilized";
        try {
            StabilizedCohomology s = stabilized_cohomology(2, tower, n, cohomology_options(o));
            const AbelianGroupStructure expected = n % 2 == 0 ? AbelianGroupStructure{{Integer(2)}, 0} : AbelianGroupStructure{};
            rep.add(name, s.value == expected,
                    s.value.to_string() + " (expected " + expected.to_string() + "; levels " + join(s.level_groups) + ")");
        } catch (const NotStabilized& e) {
            rep.add(name, false, e.what());
        }
    }
}

void example_1_6(const ScenarioOptions& o, ScenarioReport& rep) {
    const NumberField k = load([&] { return field_arg(o.base); });
    const NumberField K = load([&] { return field_arg(o.ext); });
    TensorDecomposition dec = tensor_decompose(k, K, o.height_bound);
    rep.notes.push_back("K = " + K.label() + " = Q[x]/(" + K.min_poly().to_string() + ") over " + k.label());
    rep.add("factors multiply back", factors_multiply_back(dec), std::to_string(dec.components.size()) + " factors");
    int total = 0, unit = 0;
    const FieldElement theta = FieldElement::generator(K);
    for (const auto& c : dec.components) {
        total += c.degree_over_K;
        if (c.root && *c.root == theta) ++unit;
    }
    const int expected = k == K ? 1 : K.degree();
    rep.add("degrees sum to [K:k]", total == expected, std::to_string(total) + " = " + std::to_string(expected));
    rep.add("unit component", unit == 1, std::to_string(unit) + " factor(s) x - θ");
    std::string degrees;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        const auto& c = dec.components[i];
        degrees += (degrees.empty() ? "" : ", ") + std::to_string(c.degree_over_K);
        std::string detail = factor_string(c.factor) + "; " + c.certificate;
        bool ok = true;
        if (c.root) {
            // K[x]/(x - r) ≅ K via x ↦ r needs f(r) = 0.
            FieldElement v = FieldElement::zero(K), p = FieldElement::one(K);
            for (const auto& a : K.min_poly().coeffs()) {
                v += p * a;
                p *= *c.root;
            }
            ok = v.is_zero() || k == K;
            detail += "; ≅ K via x ↦ " + c.root->to_string();
        } else {
            detail += "; field of degree " + std::to_string(c.field.degree()) + " over Q";
        }
        rep.add("component " + std::to_string(i), ok, detail);
    }
    rep.notes.push_back("degrees over K: [" + degrees + "]");
    if (dec.galois_group) {
        const int n = dec.galois_group->order();
        CheckResult r = verify_action_formula(dec);
        rep.add("action formula", r.ok,
                check_detail(r, std::to_string(n * n * n) + " triples (α,β,γ) on a basis of " + std::to_string(K.degree())));
    } else {
        rep.skip("action formula", "extension is not Galois");
    }
}

CochainClass default_class(const GModule& m, const ScenarioOptions& o) {
    if (m.group() == FiniteGroup::cyclic(2) && m == GModule::cyclic_action(m.group(), 4, -1)) return c2_generator_class().class4();
    CohomologyGroup h = bar_cohomology(m, 4, cohomology_options(o));
    return h.representatives.empty() ? CochainClass::zero(m, 4) : h.representatives.front();
}

void report_triviality(const std::string& name, const CochainClass& c, const ScenarioOptions& o, ScenarioReport& rep) {
    TrivialityResult t = tower_triviality(c, o.depth, cohomology_options(o));
    rep.add(name, true, to_string(t.verdict) + " at level " + std::to_string(t.level) + " (levels " + join(t.level_groups) + ")");
    if (t.verdict != TrivialityVerdict::Trivial) return;
    CochainClass level = c;
    for (int i = 0; i < t.level; ++i) level = inflate_coefficients(level, doubling_step(level.module()));
    if (!t.witness) {
        rep.add(name + " witness", level.cochain().is_zero(), "degree 0");
        return;
    }
    rep.add(name + " witness", coboundary(*t.witness) == level.cochain(), "d(witness) equals the class at level " + std::to_string(t.level));
}

void witt_family(const ScenarioOptions& o, ScenarioReport& rep) {
    if (o.depth < 1) throw UsageError("--depth must be at least 1");
    const FiniteGroup g = load([&] { return group_from_name(o.gamma); });
    const GModule m = load([&] { return module_from_name(g, o.coeff); });
    CochainClass c = load([&] {
        if (!o.cocycle) return default_class(m, o);
        Source src = Source::from_file(*o.cocycle);
        const Json& root = src.root();
        if (root.is_object() && root.contains("cocycle")) {
            ParsedObject obj = parse_input(src);
            auto cc = std::get<CochainClass>(obj);
            if (cc.module() != m) throw UsageError("cocycle file module differs from --coeff");
            return cc;
        }
        return parse_cocycle(src, m, 4, root);
    });
    WittFamilyClass a(c);
    rep.add("4-cocycle", true, "verified on " + g.label() + " with values in " + o.coeff);
    CohomologyGroup h = bar_cohomology(m, 4, cohomology_options(o));
    std::string coords;
    for (const auto& x : h.coordinates(c)) coords += (coords.empty() ? "" : ",") + x.get_str();
    rep.notes.push_back("H^4 = " + h.structure.to_string() + ", class = [" + coords + "]");
    rep.payload = to_json(c);
    if (!o.check_trivial) return;
    report_triviality("triviality", c, o, rep);
    report_triviality("square triviality", witt_class_product(a, a).class4(), o, rep);
}

void cohomology(const ScenarioOptions& o, ScenarioReport& rep) {
    const GModule m = load([&] {
        if (o.input) {
            ParsedObject obj = parse_input(*o.input);
            if (!std::holds_alternative<GModule>(obj)) throw UsageError("cohomology expects a module file, got a " + kind(obj));
            return std::get<GModule>(obj);
        }
        return module_from_name(group_from_name(o.gamma), o.coeff);
    });
    const auto gen = m.group().cyclic_generator();
    for (int n = 0; n <= o.max_degree; ++n) {
        CohomologyGroup h = bar_cohomology(m, n, cohomology_options(o));
        const std::string name = "H^" + std::to_string(n);
        if (gen && m.group().cyclic_factors().size() == 1) {
            AbelianGroupStructure c = cyclic_cohomology(m.group().order(), m, n, cohomology_options(o));
            rep.add(name, c == h.structure, h.structure.to_string() + " (bar) vs " + c.to_string() + " (periodic)");
        } else {
            rep.add(name, true, h.structure.to_string());
        }
    }
    rep.payload = to_json(m);
}

void center(const ScenarioOptions& o, ScenarioReport& rep) {
    std::optional<FiniteGroup> a;
    PointedBraidedCategory cat = load([&] {
        if (o.input) {
            ParsedObject obj = parse_input(*o.input);
            if (auto* c = std::get_if<PointedBraidedCategory>(&obj)) return *c;
            if (auto* g = std::get_if<FiniteGroup>(&obj)) {
                a = *g;
                return drinfeld_center_pointed(*g, field_arg(o.field));
            }
            throw UsageError("center expects a group or category file, got a " + kind(obj));
        }
        a = group_from_name(o.gamma);
        return drinfeld_center_pointed(*a, field_arg(o.field));
    });
    rep.notes.push_back("order " + std::to_string(cat.order()) + " over " + cat.field().label());
    CheckResult p = check_pentagon(cat);
    rep.add("pentagon", p.ok, check_detail(p, "associator is a 3-cocycle"));
    if (!cat.has_braiding()) {
        rep.skip("hexagons", "no braiding");
    } else {
        CheckResult h = check_hexagons(cat);
        rep.add("hexagons", h.ok, check_detail(h, "both hexagon identities hold"));
        Subgroup z = muger_center(cat);
        rep.add("non-degenerate", z.is_trivial(), "Muger center " + z.to_string());
        if (z.is_trivial()) {
            DoubleCentralizerResult d = double_centralizer_check(cat);
            rep.add("double centralizer", d.ok,
                    std::to_string(d.subgroups_checked) + " subgroups" +
                        (d.counterexample ? ", fails at " + d.counterexample->to_string() : ""));
        } else {
            rep.skip("double centralizer", "degenerate category");
        }
    }
    if (a) {
        const bool sq = fpdim_center_square_check(FusionRing::group_ring(*a), FusionRing::from_pointed(cat));
        rep.add("FPdim(Z(C)) = FPdim(C)^2", sq, std::to_string(cat.order()) + " = " + std::to_string(a->order()) + "^2");
    }
    rep.payload = to_json(cat);
}

FusionRing appendix_ring() {
    // I, K, H with K⊗K = 2I + H, K⊗H = H⊗K = 2K, H⊗H = 4I.
    std::vector<std::vector<std::vector<int>>> N(3, std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
    for (int i = 0; i < 3; ++i) N[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = N[static_cast<std::size_t>(i)][0][static_cast<std::size_t>(i)] = 1;
    N[1][1] = {2, 0, 1};
    N[1][2] = {0, 2, 0};
    N[2][1] = {0, 2, 0};
    N[2][2] = {4, 0, 0};
    return FusionRing({"I", "K", "H"}, N, 0, {0, 1, 2}, {{1, 1, 1}, {2, 2, 1}, {4, 1, 2}});
}

void check_ring(const std::string& name, const FusionRing& ring, ScenarioReport& rep) {
    CheckResult ax = check_fusion_axioms(ring);
    rep.add(name + " axioms", ax.ok, check_detail(ax, "unit, associativity, duality"));
    if (!ax.ok) return;
    if (ring.galois_nontrivial()) {
        rep.skip(name + " FPdim", "Galois-nontrivial ring");
        return;
    }
    rep.add(name + " FPdim", true, fpdim_category(ring).to_string());
    CheckResult mult = check_fpdim_multiplicative(ring);
    rep.add(name + " FPdim multiplicative", mult.ok, check_detail(mult, "FPdim(i)·FPdim(j) = Σ N FPdim(k)"));
}

void fusion_check(const ScenarioOptions& o, ScenarioReport& rep) {
    if (o.input) {
        FusionRing ring = load([&] {
            ParsedObject obj = parse_input(*o.input);
            if (!std::holds_alternative<FusionRing>(obj)) throw UsageError("fusion-check expects a ring file, got a " + kind(obj));
            return std::get<FusionRing>(obj);
        });
        check_ring("ring", ring, rep);
        rep.payload = to_json(ring);
        return;
    }
    check_ring("fibonacci", FusionRing::fibonacci(), rep);
    check_ring("appendix", appendix_ring(), rep);
    check_ring("Z/2", FusionRing::group_ring(FiniteGroup::cyclic(2)), rep);
    check_ring("Z/2 x Z/2", FusionRing::group_ring(FiniteGroup::product({2, 2})), rep);
    check_ring("Z(Vect(Z/3))", FusionRing::from_pointed(drinfeld_center_pointed(FiniteGroup::cyclic(3), NumberField::cyclotomic(3))), rep);
}

void grading_check(const ScenarioOptions& o, ScenarioReport& rep) {
    if (!o.input) throw UsageError("grading-check needs a skeleton file");
    GradedSkeleton skel = load([&] {
        ParsedObject obj = parse_input(*o.input);
        if (!std::holds_alternative<GradedSkeleton>(obj)) throw UsageError("grading-check expects a skeleton file, got a " + kind(obj));
        return std::get<GradedSkeleton>(obj);
    });
    CheckResult r = galois_grading_check(skel);
    auto name = [&](int i) { return skel.objects[static_cast<std::size_t>(i)].label; };
    rep.add("galois grading", r.ok,
            r.ok ? std::to_string(skel.objects.size()) + " objects over a group of order " + std::to_string(skel.group.order())
                 : r.detail + " at " + labelled(r.where, name));
    rep.payload = to_json(skel);
}

const std::map<std::string, std::function<void(const ScenarioOptions&, ScenarioReport&)>>& registry() {
    static const std::map<std::string, std::function<void(const ScenarioOptions&, ScenarioReport&)>> r{
        {"appendix-a", appendix_a},   {"lemma-5-3", lemma_5_3}, {"example-1-6", example_1_6},
        {"witt-family", witt_family}, {"cohomology", cohomology}, {"center", center},
        {"fusion-check", fusion_check}, {"grading-check", grading_check},
    };
    return r;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "?";
}

void ScenarioReport::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void ScenarioReport::skip(std::string name, std::string detail) {
    checks.push_back({std::move(name), Status::Skip, std::move(detail)});
}

int ScenarioReport::exit_code() const {
    for (const auto& c : checks)
        if (c.status == Status::Fail) return 1;
    return 0;
}

std::string ScenarioReport::to_text() const {
    std::ostringstream out;
    out << "scenario " << scenario << "\n";
    for (const auto& c : checks) {
        out << "  " << to_string(c.status) << "  " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    for (const auto& n : notes) out << "  note: " << n << "\n";
    out << (exit_code() == 0 ? "OK" : "FAILED") << "\n";
    return out.str();
}

Json ScenarioReport::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks)
        checks_json.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    Json out{{"scenario", scenario}, {"checks", checks_json}, {"notes", notes}, {"exit_code", exit_code()}};
    if (payload) out["payload"] = *payload;
    return out;
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, v] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts) {
    auto it = registry().find(name);
    if (it == registry().end()) throw UsageError("unknown scenario \"" + name + "\"");
    ScenarioReport rep;
    rep.scenario = name;
    try {
        it->second(opts, rep);
    } catch (const ParseError&) {
        throw;
    } catch (const UsageError&) {
        throw;
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const Error& e) {
        rep.add("error", false, e.what());
    }
    return rep;
}

}  // namespace wittkit::cli
