#include "wittkit/errors.hpp"
#include "wittkit/groupcoh.hpp"

#include <numeric>

namespace wittkit {

FiniteGroup FiniteGroup::build(int order, std::vector<int> table, std::vector<int> factors, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->order = order;
    impl->table = std::move(table);
    impl->cyclic_factors = std::move(factors);
    impl->label = std::move(label);
    impl->identity = -1;
    for (int e = 0; e < order && impl->identity < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < order && ok; ++g)
            ok = impl->table[static_cast<std::size_t>(e * order + g)] == g &&
                 impl->table[static_cast<std::size_t>(g * order + e)] == g;
        if (ok) impl->identity = e;
    }
    if (impl->identity < 0) throw InvariantViolation("group table has no identity");
    impl->inverse.assign(static_cast<std::size_t>(order), -1);
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h)
            if (impl->table[static_cast<std::size_t>(g * order + h)] == impl->identity &&
                impl->table[static_cast<std::size_t>(h * order + g)] == impl->identity) {
                impl->inverse[static_cast<std::size_t>(g)] = h;
                break;
            }
    for (int g = 0; g < order; ++g)
        if (impl->inverse[static_cast<std::size_t>(g)] < 0)
            throw InvariantViolation("group element " + std::to_string(g) + " has no inverse");
    return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw InvariantViolation("cyclic group order must be positive");
    std::vector<int> t(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a * m + b)] = (a + b) % m;
    return build(m, std::move(t), m == 1 ? std::vector<int>{} : std::vector<int>{m}, "C" + std::to_string(m));
}

FiniteGroup FiniteGroup::product(const std::vector<int>& orders) {
    int n = 1;
    std::string label;
    for (int m : orders) {
        if (m < 1) throw InvariantViolation("cyclic factor order must be positive");
        n *= m;
        label += (label.empty() ? "" : "xC") + std::to_string(m);
    }
    if (n > 4096) throw InvariantViolation("product group too large");
    auto digits = [&](int x) {
        std::vector<int> d;
        for (int m : orders) { d.push_back(x % m); x /= m; }
        return d;
    };
    std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = digits(b);
            int idx = 0, stride = 1;
            for (std::size_t i = 0; i < orders.size(); ++i) {
                idx += ((da[i] + db[i]) % orders[i]) * stride;
                stride *= orders[i];
            }
            t[static_cast<std::size_t>(a * n + b)] = idx;
        }
    }
    std::vector<int> factors;
    for (int m : orders) if (m > 1) factors.push_back(m);
    return build(n, std::move(t), factors, orders.empty() ? "C1" : "C" + label);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int a = g.order(), b = h.order(), n = a * b;
    std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[static_cast<std::size_t>(x * n + y)] = g.mul(x % a, y % a) + a * h.mul(x / a, y / a);
    auto known = [](const FiniteGroup& x) { return x.order() == 1 || !x.cyclic_factors().empty(); };
    std::vector<int> factors;
    if (known(g) && known(h)) {
        factors = g.cyclic_factors();
        factors.insert(factors.end(), h.cyclic_factors().begin(), h.cyclic_factors().end());
    }
    return build(n, std::move(t), factors, g.label() + "x" + h.label());
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string label) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw InvariantViolation("empty group table");
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(n * n));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw InvariantViolation("group table is not square");
        for (int v : row) {
            if (v < 0 || v >= n) throw InvariantViolation("group table entry out of range");
            t.push_back(v);
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int l = t[static_cast<std::size_t>(t[static_cast<std::size_t>(a * n + b)] * n + c)];
                const int r = t[static_cast<std::size_t>(a * n + t[static_cast<std::size_t>(b * n + c)])];
                if (l != r)
                    throw InvariantViolation("group table not associative at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
            }
    return build(n, std::move(t), {}, std::move(label));
}

int FiniteGroup::power(int g, long e) const {
    const long ord = element_order(g);
    e %= ord;
    if (e < 0) e += ord;
    int r = identity();
    for (long i = 0; i < e; ++i) r = mul(r, g);
    return r;
}

int FiniteGroup::element_order(int g) const {
    int k = 1, x = g;
    while (x != identity()) { x = mul(x, g); ++k; }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<int> FiniteGroup::cyclic_generator() const {
    for (int g = 0; g < order(); ++g)
        if (element_order(g) == order()) return g;
    return std::nullopt;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order()));
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
    return t;
}

bool FiniteGroup::operator==(const FiniteGroup& o) const {
    return impl_ == o.impl_ || (impl_->order == o.impl_->order && impl_->table == o.impl_->table);
}

void GroupHom::verify(bool require_surjective) const {
    if (static_cast<int>(images.size()) != source.order())
        throw NotHomomorphism("homomorphism table has the wrong length");
    for (int v : images)
        if (v < 0 || v >= target.order()) throw NotHomomorphism("homomorphism image out of range");
    for (int a = 0; a < source.order(); ++a)
        for (int b = 0; b < source.order(); ++b)
            if (images[static_cast<std::size_t>(source.mul(a, b))] !=
                target.mul(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]))
                throw NotHomomorphism("p(ab) != p(a)p(b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (require_surjective) {
        std::vector<bool> hit(static_cast<std::size_t>(target.order()), false);
        for (int v : images) hit[static_cast<std::size_t>(v)] = true;
        for (bool h : hit)
            if (!h) throw NotHomomorphism("map is not surjective");
    }
}

}  // namespace wittkit
