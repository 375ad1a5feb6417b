#include "wittkit/errors.hpp"
#include "wittkit/groupcoh.hpp"

namespace wittkit {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long to_ll(const Integer& x) {
    if (!x.fits_slong_p()) throw InvariantViolation("matrix entry does not fit in a machine integer");
    return x.get_si();
}

/// Elements used as cochain arguments: all of them, or the non-identity ones.
std::vector<int> argument_elements(const FiniteGroup& g, bool normalized) {
    std::vector<int> e;
    for (int x = 0; x < g.order(); ++x)
        if (!normalized || x != g.identity()) e.push_back(x);
    return e;
}

std::vector<Integer> repeated_factors(const GModule& m, std::size_t tuples) {
    std::vector<Integer> f;
    f.reserve(tuples * m.rank());
    for (std::size_t t = 0; t < tuples; ++t) f.insert(f.end(), m.factors().begin(), m.factors().end());
    return f;
}

void check_budget(const GModule& m, int n, const CohomologyOptions& opts) {
    const std::size_t need = ipow(static_cast<std::size_t>(m.group().order()), n + 1) * std::max<std::size_t>(1, m.rank());
    if (need > opts.work_budget) throw BudgetExceeded(need, opts.work_budget, "bar complex |G|^(n+1)*rank");
}

linalg::Options linalg_options(const CohomologyOptions& opts) { return {opts.work_budget, opts.force_integer}; }

/// Coordinates of a cochain in the (normalized or full) cochain group.
std::vector<Integer> flatten(const Cochain& c, bool normalized) {
    const auto elems = argument_elements(c.group(), normalized);
    const std::size_t base = elems.size(), r = c.module().rank();
    const std::size_t count = ipow(base, c.degree());
    std::vector<Integer> v(count * r);
    std::vector<int> tuple(static_cast<std::size_t>(c.degree()));
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t x = t;
        for (int i = c.degree() - 1; i >= 0; --i) {
            tuple[static_cast<std::size_t>(i)] = elems[x % base];
            x /= base;
        }
        const auto& val = c.at(tuple);
        for (std::size_t j = 0; j < r; ++j) v[t * r + j] = val[j];
    }
    return v;
}

Cochain unflatten(const GModule& m, int n, const std::vector<Integer>& v, bool normalized) {
    const auto elems = argument_elements(m.group(), normalized);
    std::vector<long> pos(static_cast<std::size_t>(m.group().order()), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[static_cast<std::size_t>(elems[i])] = static_cast<long>(i);
    const std::size_t r = m.rank(), base = elems.size();
    return Cochain::from_function(m, n, [&](const std::vector<int>& tuple) {
        std::size_t idx = 0;
        for (int g : tuple) {
            if (pos[static_cast<std::size_t>(g)] < 0) return std::vector<Integer>(r, 0);
            idx = idx * base + static_cast<std::size_t>(pos[static_cast<std::size_t>(g)]);
        }
        return std::vector<Integer>(v.begin() + static_cast<std::ptrdiff_t>(idx * r),
                                    v.begin() + static_cast<std::ptrdiff_t>((idx + 1) * r));
    });
}

}  // namespace

Cochain::Cochain(GModule module, int degree, std::vector<std::vector<Integer>> values)
    : module_(std::move(module)), degree_(degree), values_(std::move(values)) {
    if (degree < 0) throw ShapeMismatch("cochain degree must be nonnegative");
    if (values_.size() != ipow(static_cast<std::size_t>(module_.group().order()), degree))
        throw ShapeMismatch("cochain needs one value per tuple");
    for (auto& v : values_) {
        if (v.size() != module_.rank()) throw ShapeMismatch("cochain value has the wrong rank");
        module_.reduce(v);
    }
}

Cochain Cochain::zero(const GModule& module, int degree) {
    return Cochain(module, degree,
                   std::vector<std::vector<Integer>>(ipow(static_cast<std::size_t>(module.group().order()), degree),
                                                     std::vector<Integer>(module.rank(), 0)));
}

Cochain Cochain::from_function(const GModule& module, int degree,
                               const std::function<std::vector<Integer>(const std::vector<int>&)>& f) {
    const std::size_t n = static_cast<std::size_t>(module.group().order());
    const std::size_t count = ipow(n, degree);
    std::vector<std::vector<Integer>> vals(count);
    std::vector<int> tuple(static_cast<std::size_t>(degree));
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t x = t;
        for (int i = degree - 1; i >= 0; --i) {
            tuple[static_cast<std::size_t>(i)] = static_cast<int>(x % n);
            x /= n;
        }
        vals[t] = f(tuple);
    }
    return Cochain(module, degree, std::move(vals));
}

std::size_t Cochain::tuple_index(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != degree_) throw ShapeMismatch("tuple length differs from cochain degree");
    const std::size_t n = static_cast<std::size_t>(group().order());
    std::size_t idx = 0;
    for (int g : tuple) {
        if (g < 0 || g >= group().order()) throw ShapeMismatch("tuple entry is not a group element");
        idx = idx * n + static_cast<std::size_t>(g);
    }
    return idx;
}

std::vector<int> Cochain::tuple_at(std::size_t index) const {
    const std::size_t n = static_cast<std::size_t>(group().order());
    std::vector<int> t(static_cast<std::size_t>(degree_));
    for (int i = degree_ - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(index % n);
        index /= n;
    }
    return t;
}

bool Cochain::is_zero() const {
    for (const auto& v : values_)
        for (const auto& x : v)
            if (sgn(x) != 0) return false;
    return true;
}

bool Cochain::is_normalized() const {
    for (std::size_t t = 0; t < values_.size(); ++t) {
        auto tuple = tuple_at(t);
        bool has_id = false;
        for (int g : tuple) has_id = has_id || g == group().identity();
        if (!has_id) continue;
        for (const auto& x : values_[t])
            if (sgn(x) != 0) return false;
    }
    return true;
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.module_ == b.module_ && a.values_ == b.values_;
}

Cochain coboundary(const Cochain& f) {
    const GModule& m = f.module();
    const FiniteGroup& g = m.group();
    const int n = f.degree();
    const std::size_t r = m.rank();
    return Cochain::from_function(m, n + 1, [&](const std::vector<int>& t) {
        std::vector<int> sub(t.begin() + 1, t.end());
        std::vector<Integer> acc = m.apply(t[0], f.at(sub));
        for (int i = 1; i <= n; ++i) {
            std::vector<int> merged;
            for (int j = 0; j < n + 1; ++j) {
                if (j == i - 1) {
                    merged.push_back(g.mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j) + 1]));
                    ++j;
                } else {
                    merged.push_back(t[static_cast<std::size_t>(j)]);
                }
            }
            const auto& v = f.at(merged);
            for (std::size_t k = 0; k < r; ++k) acc[k] += (i % 2 ? -1 : 1) * v[k];
        }
        std::vector<int> head(t.begin(), t.end() - 1);
        const auto& v = f.at(head);
        for (std::size_t k = 0; k < r; ++k) acc[k] += ((n + 1) % 2 ? -1 : 1) * v[k];
        return acc;
    });
}

CochainClass::CochainClass(Cochain c) : c_(std::move(c)) {
    if (!coboundary(c_).is_zero()) throw InvariantViolation("bar differential nonzero");
}

linalg::SparseIntMatrix bar_differential(const GModule& m, int n, bool normalized) {
    const FiniteGroup& g = m.group();
    const auto elems = argument_elements(g, normalized);
    std::vector<long> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[static_cast<std::size_t>(elems[i])] = static_cast<long>(i);
    const std::size_t base = elems.size(), r = m.rank();
    const std::size_t rows_t = ipow(base, n + 1), cols_t = ipow(base, n);
    linalg::SparseIntMatrix d;
    d.rows = rows_t * r;
    d.cols = cols_t * r;
    std::vector<std::vector<long long>> act(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x)
        for (const auto& row : m.action(x))
            for (const auto& v : row) act[static_cast<std::size_t>(x)].push_back(to_ll(v));
    std::vector<std::size_t> t(static_cast<std::size_t>(n) + 1);
    auto index_of = [&](const std::vector<std::size_t>& p) {
        std::size_t idx = 0;
        for (std::size_t v : p) idx = idx * base + v;
        return idx;
    };
    std::vector<std::size_t> scratch;
    for (std::size_t row_t = 0; row_t < rows_t; ++row_t) {
        std::size_t x = row_t;
        for (int i = n; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = x % base;
            x /= base;
        }
        // g_1 · f(g_2, ..., g_{n+1})
        scratch.assign(t.begin() + 1, t.end());
        const std::size_t c0 = index_of(scratch);
        const auto& a = act[static_cast<std::size_t>(elems[t[0]])];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) d.add(row_t * r + i, c0 * r + j, a[i * r + j]);
        for (int i = 1; i <= n; ++i) {
            const int prod = g.mul(elems[t[static_cast<std::size_t>(i) - 1]], elems[t[static_cast<std::size_t>(i)]]);
            if (pos[static_cast<std::size_t>(prod)] < 0) continue;
            scratch.clear();
            for (int j = 0; j <= n; ++j) {
                if (j == i - 1) {
                    scratch.push_back(static_cast<std::size_t>(pos[static_cast<std::size_t>(prod)]));
                    ++j;
                } else {
                    scratch.push_back(t[static_cast<std::size_t>(j)]);
                }
            }
            const std::size_t c = index_of(scratch);
            for (std::size_t k = 0; k < r; ++k) d.add(row_t * r + k, c * r + k, i % 2 ? -1 : 1);
        }
        scratch.assign(t.begin(), t.end() - 1);
        const std::size_t cl = index_of(scratch);
        for (std::size_t k = 0; k < r; ++k) d.add(row_t * r + k, cl * r + k, (n + 1) % 2 ? -1 : 1);
    }
    return d;
}

CohomologyGroup bar_cohomology(const GModule& m, int n, const CohomologyOptions& opts) {
    if (n < 0) throw ShapeMismatch("cohomological degree must be nonnegative");
    check_budget(m, n, opts);
    const std::size_t base = static_cast<std::size_t>(m.group().order()) - 1;
    const auto mid = repeated_factors(m, ipow(base, n));
    const auto out = repeated_factors(m, ipow(base, n + 1));
    auto d_out = bar_differential(m, n, true);
    linalg::SparseIntMatrix d_in;
    if (n > 0) {
        d_in = bar_differential(m, n - 1, true);
    } else {
        d_in.rows = mid.size();
        d_in.cols = 0;
    }
    auto sq = linalg::subquotient(mid, out, d_out, d_in, linalg_options(opts));
    CohomologyGroup res;
    res.structure = sq.structure;
    for (const auto& gen : sq.generators) res.representatives.emplace_back(unflatten(m, n, gen, true));
    auto coords = sq.coordinates;
    GModule mod = m;
    res.coordinates = [coords, mod, n](const CochainClass& c) {
        if (c.module() != mod || c.degree() != n) throw ShapeMismatch("cocycle does not belong to this cohomology group");
        if (!c.cochain().is_normalized()) throw InvariantViolation("cocycle is not normalized");
        return coords(flatten(c.cochain(), true));
    };
    return res;
}

AbelianGroupStructure cyclic_cohomology(int m, const GModule& module, int n, const CohomologyOptions& opts) {
    const FiniteGroup& g = module.group();
    if (g.order() != m) throw ShapeMismatch("module group order differs from m");
    auto gen = g.cyclic_generator();
    if (!gen) throw ShapeMismatch("cyclic_cohomology needs a cyclic group");
    const std::size_t r = module.rank();
    linalg::SparseIntMatrix diff, norm;
    diff.rows = diff.cols = norm.rows = norm.cols = r;
    const auto& a = module.action(*gen);
    std::vector<std::vector<Integer>> nsum(r, std::vector<Integer>(r, 0));
    int x = g.identity();
    for (int i = 0; i < m; ++i) {
        const auto& ax = module.action(x);
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = 0; q < r; ++q) nsum[p][q] += ax[p][q];
        x = g.mul(x, *gen);
    }
    for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) {
            diff.add(p, q, to_ll(a[p][q]) - (p == q ? 1 : 0));
            norm.add(p, q, to_ll(nsum[p][q]));
        }
    const auto& f = module.factors();
    linalg::SparseIntMatrix zero;
    zero.rows = r;
    zero.cols = 0;
    const auto lo = linalg_options(opts);
    if (n < 0) throw ShapeMismatch("cohomological degree must be nonnegative");
    if (n == 0) return linalg::subquotient(f, f, diff, zero, lo).structure;
    if (n % 2 == 1) return linalg::subquotient(f, f, norm, diff, lo).structure;
    return linalg::subquotient(f, f, diff, norm, lo).structure;
}

CoboundaryResult is_coboundary(const CochainClass& c, const CohomologyOptions& opts) {
    const int n = c.degree();
    CoboundaryResult res;
    if (n == 0) {
        res.is_coboundary = c.cochain().is_zero();
        return res;
    }
    const GModule& m = c.module();
    check_budget(m, n, opts);
    const bool normalized = c.cochain().is_normalized();
    const std::size_t base = static_cast<std::size_t>(m.group().order()) - (normalized ? 1 : 0);
    const auto src = repeated_factors(m, ipow(base, n - 1));
    const auto dst = repeated_factors(m, ipow(base, n));
    auto d = bar_differential(m, n - 1, normalized);
    auto sol = linalg::solve_presented(src, dst, d, flatten(c.cochain(), normalized), linalg_options(opts));
    if (!sol) return res;
    Cochain b = unflatten(m, n - 1, *sol, normalized);
    if (!(coboundary(b) == c.cochain())) throw InvariantViolation("coboundary witness does not reproduce the cocycle");
    res.is_coboundary = true;
    res.witness = std::move(b);
    return res;
}

CochainClass inflate_coefficients(const CochainClass& c, const ModuleMap& embedding) {
    if (embedding.source() != c.module()) throw ShapeMismatch("embedding source is not the cocycle's module");
    std::vector<std::vector<Integer>> vals;
    for (const auto& v : c.cochain().values()) vals.push_back(embedding(v));
    return CochainClass(Cochain(embedding.target(), c.degree(), std::move(vals)));
}

CochainClass inflate_group(const CochainClass& c, const GroupHom& p) {
    p.verify(true);
    if (p.target != c.group()) throw NotHomomorphism("surjection target is not the cocycle's group");
    GModule pulled = GModule::pullback(c.module(), p);
    const Cochain& f = c.cochain();
    return CochainClass(Cochain::from_function(pulled, c.degree(), [&](const std::vector<int>& t) {
        std::vector<int> image;
        for (int g : t) image.push_back(p.images[static_cast<std::size_t>(g)]);
        return f.at(image);
    }));
}

CochainClass add_classes(const CochainClass& a, const CochainClass& b) {
    if (a.degree() != b.degree()) throw ShapeMismatch("cannot add classes of different degrees");
    if (a.module() != b.module()) throw ShapeMismatch("cannot add classes with different coefficient modules");
    std::vector<std::vector<Integer>> vals = a.cochain().values();
    for (std::size_t t = 0; t < vals.size(); ++t)
        for (std::size_t j = 0; j < vals[t].size(); ++j) vals[t][j] += b.cochain().at(t)[j];
    return CochainClass(Cochain(a.module(), a.degree(), std::move(vals)));
}

StabilizedCohomology stabilized_cohomology(int m, const std::vector<ModuleMap>& tower, int n,
                                           const CohomologyOptions& opts) {
    if (tower.empty()) throw InvariantViolation("stabilization needs at least two levels");
    std::vector<GModule> levels{tower.front().source()};
    for (std::size_t i = 0; i < tower.size(); ++i) {
        if (tower[i].source() != levels.back()) throw ShapeMismatch("tower maps are not composable");
        const GModule& next = tower[i].target();
        if (levels.back().is_finite() && next.is_finite() && next.cardinality() < 2 * levels.back().cardinality())
            throw InvariantViolation("tower step must at least double the coefficient order");
        levels.push_back(next);
    }
    for (const auto& lv : levels) {
        if (lv.group().order() != m || !lv.group().cyclic_generator())
            throw ShapeMismatch("tower modules must live over the cyclic group of order m");
    }
    StabilizedCohomology res;
    std::vector<CohomologyGroup> hs;
    for (const auto& lv : levels) {
        hs.push_back(bar_cohomology(lv, n, opts));
        res.level_groups.push_back(hs.back().structure);
    }
    std::vector<CochainClass> pushed = hs.front().representatives;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0)
            for (auto& c : pushed) c = inflate_coefficients(c, tower[i - 1]);
        std::vector<Integer> ambient = hs[i].structure.invariant_factors;
        ambient.resize(ambient.size() + hs[i].structure.free_rank, 0);
        std::vector<std::vector<Integer>> coords;
        for (const auto& c : pushed) coords.push_back(hs[i].coordinates(c));
        res.level_images.push_back(linalg::generated_subgroup(ambient, coords));
    }
    if (n == 0) {
        res.value = res.level_groups.back();
        return res;
    }
    const std::size_t L = res.level_images.size();
    if (res.level_images[L - 1] != res.level_images[L - 2])
        throw NotStabilized("image of the first level changes between the last two levels: " +
                            res.level_images[L - 2].to_string() + " vs " + res.level_images[L - 1].to_string());
    res.value = res.level_images.back();
    return res;
}

}  // namespace wittkit
