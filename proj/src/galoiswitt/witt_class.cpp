#include "wittkit/errors.hpp"
#include "wittkit/galoiswitt.hpp"

namespace wittkit {

WittFamilyClass::WittFamilyClass(CochainClass class4) : class4_(std::move(class4)) {
    if (class4_.degree() != 4)
        throw ShapeMismatch("Witt family class needs a 4-cocycle, got degree " + std::to_string(class4_.degree()));
}

WittFamilyClass witt_class_product(const WittFamilyClass& a, const WittFamilyClass& b) {
    if (a.galois_group() != b.galois_group()) throw ShapeMismatch("Witt classes over different Galois groups");
    if (a.coefficient_module() != b.coefficient_module()) throw ShapeMismatch("Witt classes with different coefficients");
    return WittFamilyClass(add_classes(a.class4(), b.class4()));
}

WittFamilyClass witt_class_inflate(const WittFamilyClass& a, const std::optional<ModuleMap>& coefficients,
                                   const std::optional<GroupHom>& surjection) {
    CochainClass c = a.class4();
    if (coefficients) c = inflate_coefficients(c, *coefficients);
    if (surjection) c = inflate_group(c, *surjection);
    return WittFamilyClass(std::move(c));
}

std::string to_string(TrivialityVerdict v) {
    switch (v) {
        case TrivialityVerdict::Trivial: return "Trivial";
        case TrivialityVerdict::NontrivialUpTo: return "NontrivialUpTo";
        case TrivialityVerdict::StabilizedNontrivial: return "StabilizedNontrivial";
    }
    return "?";
}

TrivialityResult tower_triviality(const CochainClass& c, int depth, const CohomologyOptions& opts) {
    if (depth < 1) throw InvariantViolation("tower depth must be at least 1");
    const bool cyclic = c.group().cyclic_generator().has_value();
    TrivialityResult res;
    CochainClass current = c;
    for (int level = 0; level <= depth; ++level) {
        if (level > 0) current = inflate_coefficients(current, doubling_step(current.module()));
        res.level_groups.push_back(bar_cohomology(current.module(), current.degree(), opts).structure);
        res.level = level;
        CoboundaryResult cb = is_coboundary(current, opts);
        if (cb.is_coboundary) {
            res.verdict = TrivialityVerdict::Trivial;
            res.witness = cb.witness;
            return res;
        }
    }
    const auto n = res.level_groups.size();
    res.verdict = cyclic && res.level_groups[n - 1] == res.level_groups[n - 2] ? TrivialityVerdict::StabilizedNontrivial
                                                                             : TrivialityVerdict::NontrivialUpTo;
    return res;
}

TrivialityResult witt_class_is_trivial(const WittFamilyClass& a, int depth, const CohomologyOptions& opts) {
    return tower_triviality(a.class4(), depth, opts);
}

WittFamilyClass c2_generator_class() {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    GModule mu4 = GModule::cyclic_action(c2, 4, -1, "mu4");
    Cochain f = Cochain::from_function(mu4, 4, [](const std::vector<int>& t) {
        for (int g : t)
            if (g != 1) return std::vector<Integer>{0};
        return std::vector<Integer>{2};
    });
    return WittFamilyClass(CochainClass(std::move(f)));
}

void GradedSkeleton::validate() const {
    const int n = static_cast<int>(objects.size());
    if (unit < 0 || unit >= n) throw InvariantViolation("skeleton unit out of range");
    for (const auto& o : objects)
        if (o.galois_degree < 0 || o.galois_degree >= group.order())
            throw InvariantViolation("galois degree of " + o.label + " is not a group element");
    if (objects[static_cast<std::size_t>(unit)].galois_degree != group.identity())
        throw InvariantViolation("the unit must have trivial galois degree");
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            auto it = fusion_support.find({c, d});
            if (it == fusion_support.end() || it->second.empty())
                throw InvariantViolation("empty fusion support for " + objects[static_cast<std::size_t>(c)].label + " □ " +
                                         objects[static_cast<std::size_t>(d)].label);
            for (int e : it->second)
                if (e < 0 || e >= n) throw InvariantViolation("fusion support names an unknown object");
        }
}

GradedSkeleton GradedSkeleton::from_group(const FiniteGroup& g, const std::string& prefix) {
    GradedSkeleton s{g, {}, g.identity(), {}};
    for (int a = 0; a < g.order(); ++a) s.objects.push_back({prefix + std::to_string(a), a});
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) s.fusion_support[{a, b}] = {g.mul(a, b)};
    return s;
}

CheckResult galois_grading_check(const GradedSkeleton& skel) {
    const FiniteGroup& G = skel.group;
    const int n = static_cast<int>(skel.objects.size());
    auto deg = [&](int i) { return skel.objects[static_cast<std::size_t>(i)].galois_degree; };
    if (deg(skel.unit) != G.identity()) return CheckResult::fail({skel.unit}, "unit has nontrivial galois degree");
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            auto it = skel.fusion_support.find({c, d});
            if (it == skel.fusion_support.end() || it->second.empty()) return CheckResult::fail({c, d}, "empty fusion support");
            for (int e : it->second)
                if (deg(e) != G.mul(deg(c), deg(d))) return CheckResult::fail({c, d, e}, "g_E != g_C·g_D");
        }
    return CheckResult::pass();
}

}  // namespace wittkit
