#include "wittkit/errors.hpp"
#include "wittkit/pointedcat.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace wittkit {

namespace {

constexpr int kMaxPointedOrder = 64;

std::vector<int> digits_of(int x, const std::vector<int>& radices) {
    std::vector<int> d;
    for (int m : radices) {
        d.push_back(x % m);
        x /= m;
    }
    return d;
}

}  // namespace

PointedBraidedCategory::PointedBraidedCategory(FiniteGroup group, NumberField field, const Table3& associator,
                                               const std::optional<Table2>& braiding, std::string label)
    : group_(std::move(group)), field_(std::move(field)), label_(std::move(label)) {
    const int n = group_.order();
    if (n > kMaxPointedOrder) throw InvariantViolation("pointed categories are limited to order 64");
    if (braiding && !group_.is_abelian()) throw InvariantViolation("braided pointed data needs an abelian group");
    auto checked = [&](FieldElement x, const char* what) {
        if (x.field() != field_) throw InvariantViolation(std::string(what) + " entry lies in a different field");
        if (x.is_zero()) throw InvariantViolation(std::string(what) + " entry is zero");
        return x;
    };
    associator_.reserve(static_cast<std::size_t>(n * n * n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                associator_.push_back(associator ? checked(associator(g, h, k), "associator") : FieldElement::one(field_));
    if (braiding) {
        braiding_.reserve(static_cast<std::size_t>(n * n));
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) braiding_.push_back(checked((*braiding)(g, h), "braiding"));
    }
}

const FieldElement& PointedBraidedCategory::omega(int g, int h, int k) const {
    const int n = order();
    return associator_[static_cast<std::size_t>((g * n + h) * n + k)];
}

const FieldElement& PointedBraidedCategory::c(int g, int h) const {
    if (braiding_.empty()) throw InvariantViolation("category has no braiding");
    return braiding_[static_cast<std::size_t>(g * order() + h)];
}

FieldElement PointedBraidedCategory::double_braiding(int g, int h) const { return c(g, h) * c(h, g); }

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

std::string Subgroup::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? "," : "") << elements[i];
    os << "}";
    return os.str();
}

namespace {

std::uint64_t closure(const FiniteGroup& g, std::uint64_t mask) {
    mask |= std::uint64_t{1} << g.identity();
    for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < g.order(); ++a) {
            if (!(mask >> a & 1)) continue;
            for (int b = 0; b < g.order(); ++b) {
                if (!(mask >> b & 1)) continue;
                const int p = g.mul(a, b);
                if (!(mask >> p & 1)) {
                    mask |= std::uint64_t{1} << p;
                    grew = true;
                }
            }
        }
    }
    return mask;
}

Subgroup from_mask(const FiniteGroup& g, std::uint64_t mask) {
    Subgroup s;
    for (int a = 0; a < g.order(); ++a)
        if (mask >> a & 1) s.elements.push_back(a);
    return s;
}

// Tables written as exponents of a primitive N-th root of unity ζ, so the
// identities become sums mod N. Empty when some entry is not a power of ζ.
struct RootExponents {
    long N = 1;
    std::vector<long> omega, c;
};

std::optional<RootExponents> root_exponents(const PointedBraidedCategory& cat) {
    const NumberField& k = cat.field();
    RootExponents r;
    r.N = k.known_root_of_unity_order();
    std::vector<FieldElement> powers;
    for (long e = 0; e < r.N; ++e) powers.push_back(FieldElement::root_of_unity(k, static_cast<int>(r.N), e));
    std::vector<std::pair<FieldElement, long>> seen;
    auto exponent = [&](const FieldElement& x) -> std::optional<long> {
        for (const auto& [v, e] : seen)
            if (v == x) return e;
        for (long e = 0; e < r.N; ++e)
            if (powers[static_cast<std::size_t>(e)] == x) {
                seen.emplace_back(x, e);
                return e;
            }
        return std::nullopt;
    };
    const int n = cat.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            for (int l = 0; l < n; ++l) {
                auto e = exponent(cat.omega(g, h, l));
                if (!e) return std::nullopt;
                r.omega.push_back(*e);
            }
            if (cat.has_braiding()) {
                auto e = exponent(cat.c(g, h));
                if (!e) return std::nullopt;
                r.c.push_back(*e);
            }
        }
    return r;
}

}  // namespace

Subgroup subgroup_generated_by(const FiniteGroup& g, const std::vector<int>& gens) {
    if (g.order() > kMaxPointedOrder) throw InvariantViolation("subgroup enumeration is limited to order 64");
    std::uint64_t mask = 0;
    for (int x : gens) mask |= std::uint64_t{1} << x;
    return from_mask(g, closure(g, mask));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    if (g.order() > kMaxPointedOrder) throw InvariantViolation("subgroup enumeration is limited to order 64");
    std::set<std::uint64_t> seen{closure(g, 0)};
    std::vector<std::uint64_t> frontier{closure(g, 0)};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto m : frontier)
            for (int a = 0; a < g.order(); ++a) {
                if (m >> a & 1) continue;
                auto grown = closure(g, m | std::uint64_t{1} << a);
                if (seen.insert(grown).second) next.push_back(grown);
            }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (auto m : seen) out.push_back(from_mask(g, m));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

CheckResult check_pentagon(const PointedBraidedCategory& cat) {
    const FiniteGroup& G = cat.group();
    const int n = cat.order();
    if (auto r = root_exponents(cat)) {
        auto w = [&](int g, int h, int k) { return r->omega[static_cast<std::size_t>((g * n + h) * n + k)]; };
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const long d = w(h, k, l) + w(g, G.mul(h, k), l) + w(g, h, k) - w(G.mul(g, h), k, l) - w(g, h, G.mul(k, l));
                        if (d % r->N != 0) return CheckResult::fail({g, h, k, l}, "pentagon (3-cocycle) identity fails");
                    }
        return CheckResult::pass();
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    FieldElement lhs = cat.omega(h, k, l) * cat.omega(g, G.mul(h, k), l) * cat.omega(g, h, k);
                    FieldElement rhs = cat.omega(G.mul(g, h), k, l) * cat.omega(g, h, G.mul(k, l));
                    if (lhs != rhs) return CheckResult::fail({g, h, k, l}, "pentagon (3-cocycle) identity fails");
                }
    return CheckResult::pass();
}

CheckResult check_hexagons(const PointedBraidedCategory& cat) {
    if (!cat.has_braiding()) return CheckResult::fail({}, "category has no braiding");
    if (!cat.group().is_abelian()) return CheckResult::fail({}, "group is not abelian");
    const FiniteGroup& G = cat.group();
    const int n = cat.order();
    if (auto r = root_exponents(cat)) {
        auto w = [&](int g, int h, int k) { return r->omega[static_cast<std::size_t>((g * n + h) * n + k)]; };
        auto br = [&](int g, int h) { return r->c[static_cast<std::size_t>(g * n + h)]; };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if ((w(b, c, a) + br(a, G.mul(b, c)) + w(a, b, c) - br(a, c) - w(b, a, c) - br(a, b)) % r->N != 0)
                        return CheckResult::fail({a, b, c}, "first hexagon identity fails");
                    if ((br(G.mul(a, b), c) + w(a, c, b) - br(a, c) - br(b, c) - w(c, a, b) - w(a, b, c)) % r->N != 0)
                        return CheckResult::fail({a, b, c}, "second hexagon identity fails");
                }
        return CheckResult::pass();
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                FieldElement l1 = cat.omega(b, c, a) * cat.c(a, G.mul(b, c)) * cat.omega(a, b, c);
                FieldElement r1 = cat.c(a, c) * cat.omega(b, a, c) * cat.c(a, b);
                if (l1 != r1) return CheckResult::fail({a, b, c}, "first hexagon identity fails");
                // Second hexagon with inverses cleared: multiply through by ω(c,a,b)ω(a,b,c)ω(a,c,b).
                FieldElement l2 = cat.c(G.mul(a, b), c) * cat.omega(a, c, b);
                FieldElement r2 = cat.c(a, c) * cat.c(b, c) * cat.omega(c, a, b) * cat.omega(a, b, c);
                if (l2 != r2) return CheckResult::fail({a, b, c}, "second hexagon identity fails");
            }
    return CheckResult::pass();
}

PointedBraidedCategory drinfeld_center_pointed(const FiniteGroup& a, const NumberField& field) {
    const auto& radices = a.cyclic_factors();
    if (a.order() > 1 && radices.empty())
        throw InvariantViolation("drinfeld_center_pointed needs a group built from cyclic factors");
    int exponent = 1;
    for (int m : radices) exponent = std::lcm(exponent, m);
    if (exponent > 1) {
        if (field.known_root_of_unity_order() % exponent != 0)
            throw InsufficientRoots("field " + field.label() + " does not contain the roots of unity of order " +
                                    std::to_string(exponent) + " needed for the characters of " + a.label());
    }
    std::vector<int> doubled = radices;
    doubled.insert(doubled.end(), radices.begin(), radices.end());
    FiniteGroup center = FiniteGroup::product(doubled);
    const int n = a.order();
    auto braiding = [&](int x, int y) {
        // x = (g, χ), y = (h, ψ); value χ(h)
        auto chi = digits_of(x / n, radices);
        auto h = digits_of(y % n, radices);
        long e = 0;
        for (std::size_t i = 0; i < radices.size(); ++i) e += static_cast<long>(chi[i]) * h[i] * (exponent / radices[i]);
        return FieldElement::root_of_unity(field, exponent, e % exponent);
    };
    return PointedBraidedCategory(center, field, nullptr, PointedBraidedCategory::Table2(braiding),
                                  "Z(Vect(" + a.label() + "))");
}

Subgroup centralizer(const PointedBraidedCategory& cat, const Subgroup& h) {
    Subgroup out;
    for (int g = 0; g < cat.order(); ++g) {
        bool ok = true;
        for (int x : h.elements)
            if (!cat.double_braiding(g, x).is_one()) { ok = false; break; }
        if (ok) out.elements.push_back(g);
    }
    return out;
}

Subgroup muger_center(const PointedBraidedCategory& cat) {
    Subgroup all;
    for (int g = 0; g < cat.order(); ++g) all.elements.push_back(g);
    return centralizer(cat, all);
}

bool is_nondegenerate(const PointedBraidedCategory& cat) { return muger_center(cat).is_trivial(); }

DoubleCentralizerResult double_centralizer_check(const PointedBraidedCategory& cat) {
    if (!is_nondegenerate(cat))
        throw DegenerateInput("double centralizer check needs a non-degenerate braided category; Muger center is " +
                              muger_center(cat).to_string());
    DoubleCentralizerResult res;
    for (const auto& h : all_subgroups(cat.group())) {
        ++res.subgroups_checked;
        if (centralizer(cat, centralizer(cat, h)) != h) {
            res.ok = false;
            res.counterexample = h;
            return res;
        }
    }
    return res;
}

}  // namespace wittkit
