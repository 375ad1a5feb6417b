#include "wittkit/errors.hpp"
#include "wittkit/groupcoh.hpp"

#include <algorithm>

namespace wittkit {

namespace {

bool congruent(const Integer& a, const Integer& b, const Integer& modulus) {
    if (sgn(modulus) == 0) return a == b;
    return mpz_congruent_p(a.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    IntMatrix c(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

/// Does the matrix send every relation f_j e_j of the source into the target relations?
bool respects_relations(const IntMatrix& a, const std::vector<Integer>& src, const std::vector<Integer>& dst) {
    for (std::size_t j = 0; j < src.size(); ++j) {
        if (sgn(src[j]) == 0) continue;
        for (std::size_t i = 0; i < dst.size(); ++i)
            if (!congruent(a[i][j] * src[j], 0, dst[i])) return false;
    }
    return true;
}

bool congruent_matrices(const IntMatrix& a, const IntMatrix& b, const std::vector<Integer>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!congruent(a[i][j], b[i][j], rows[i])) return false;
    return true;
}

void check_shape(const IntMatrix& a, std::size_t rows, std::size_t cols, const char* what) {
    if (a.size() != rows) throw ShapeMismatch(std::string(what) + ": wrong number of rows");
    for (const auto& r : a)
        if (r.size() != cols) throw ShapeMismatch(std::string(what) + ": wrong number of columns");
}

}  // namespace

GModule::GModule(FiniteGroup group, std::vector<Integer> factors, std::vector<IntMatrix> action, std::string label) {
    const std::size_t r = factors.size();
    for (const auto& f : factors)
        if (sgn(f) < 0) throw InvariantViolation("invariant factors must be nonnegative");
    if (action.size() != static_cast<std::size_t>(group.order()))
        throw InvariantViolation("action must give one matrix per group element");
    for (auto& a : action) {
        check_shape(a, r, r, "action matrix");
        for (std::size_t i = 0; i < r; ++i)
            for (auto& x : a[i])
                if (sgn(factors[i]) != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), factors[i].get_mpz_t());
        if (!respects_relations(a, factors, factors))
            throw InvariantViolation("action matrix does not respect the module relations");
    }
    IntMatrix id(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    if (!congruent_matrices(action[static_cast<std::size_t>(group.identity())], id, factors))
        throw InvariantViolation("identity does not act trivially");
    for (int g = 0; g < group.order(); ++g)
        for (int h = 0; h < group.order(); ++h)
            if (!congruent_matrices(multiply(action[static_cast<std::size_t>(g)], action[static_cast<std::size_t>(h)]),
                                    action[static_cast<std::size_t>(group.mul(g, h))], factors))
                throw InvariantViolation("action(g)·action(h) != action(gh) at (" + std::to_string(g) + "," +
                                         std::to_string(h) + ")");
    auto impl = std::make_shared<Impl>(Impl{std::move(group), std::move(factors), std::move(action), std::move(label)});
    impl_ = std::move(impl);
}

GModule GModule::trivial(const FiniteGroup& group, std::vector<Integer> factors, std::string label) {
    const std::size_t r = factors.size();
    IntMatrix id(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    return GModule(group, std::move(factors), std::vector<IntMatrix>(static_cast<std::size_t>(group.order()), id),
                   std::move(label));
}

GModule GModule::scalar_action(const FiniteGroup& group, const Integer& n, const std::vector<long>& exponents,
                               std::string label) {
    std::vector<IntMatrix> act;
    for (long e : exponents) act.push_back(IntMatrix{{Integer(e)}});
    return GModule(group, {n}, std::move(act), std::move(label));
}

GModule GModule::cyclic_action(const FiniteGroup& cyclic, const Integer& n, long a, std::string label) {
    auto gen = cyclic.cyclic_generator();
    if (!gen) throw InvariantViolation("cyclic_action needs a cyclic group");
    std::vector<long> exps(static_cast<std::size_t>(cyclic.order()), 1);
    Integer x = 1;
    int g = cyclic.identity();
    for (int j = 0; j < cyclic.order(); ++j) {
        Integer r = x;
        if (sgn(n) != 0) mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        if (!r.fits_slong_p()) throw InvariantViolation("action exponent too large");
        exps[static_cast<std::size_t>(g)] = r.get_si();
        x *= a;
        g = cyclic.mul(g, *gen);
    }
    return scalar_action(cyclic, n, exps, std::move(label));
}

GModule GModule::pullback(const GModule& m, const GroupHom& hom) {
    hom.verify(false);
    if (hom.target != m.group()) throw ShapeMismatch("pullback: homomorphism target is not the module's group");
    std::vector<IntMatrix> act;
    for (int g = 0; g < hom.source.order(); ++g) act.push_back(m.action(hom.images[static_cast<std::size_t>(g)]));
    return GModule(hom.source, m.factors(), std::move(act), m.label());
}

bool GModule::is_finite() const {
    for (const auto& f : impl_->factors)
        if (sgn(f) == 0) return false;
    return true;
}

Integer GModule::cardinality() const {
    if (!is_finite()) throw InvariantViolation("module is infinite");
    Integer n = 1;
    for (const auto& f : impl_->factors) n *= f;
    return n;
}

std::vector<Integer> GModule::apply(int g, const std::vector<Integer>& x) const {
    const auto& a = action(g);
    std::vector<Integer> y(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) y[i] += a[i][j] * x[j];
    reduce(y);
    return y;
}

bool GModule::operator==(const GModule& o) const {
    if (impl_ == o.impl_) return true;
    if (group() != o.group() || factors() != o.factors()) return false;
    for (int g = 0; g < group().order(); ++g)
        if (!congruent_matrices(action(g), o.action(g), factors())) return false;
    return true;
}

ModuleMap::ModuleMap(GModule source, GModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    check_shape(matrix_, target_.rank(), source_.rank(), "module map");
    if (source_.group() != target_.group()) throw ShapeMismatch("module map between modules over different groups");
    if (!respects_relations(matrix_, source_.factors(), target_.factors()))
        throw InvariantViolation("module map does not respect relations");
    for (int g = 0; g < source_.group().order(); ++g)
        if (!congruent_matrices(multiply(matrix_, source_.action(g)), multiply(target_.action(g), matrix_),
                                target_.factors()))
            throw NotEquivariant("module map does not commute with the action of element " + std::to_string(g));
}

ModuleMap ModuleMap::identity(const GModule& m) {
    IntMatrix id(m.rank(), std::vector<Integer>(m.rank(), 0));
    for (std::size_t i = 0; i < m.rank(); ++i) id[i][i] = 1;
    return ModuleMap(m, m, id);
}

ModuleMap ModuleMap::scaling(const GModule& source, const GModule& target, const Integer& c) {
    IntMatrix a(target.rank(), std::vector<Integer>(source.rank(), 0));
    for (std::size_t i = 0; i < std::min(source.rank(), target.rank()); ++i) a[i][i] = c;
    return ModuleMap(source, target, a);
}

std::vector<Integer> ModuleMap::operator()(const std::vector<Integer>& x) const {
    std::vector<Integer> y(target_.rank(), 0);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += matrix_[i][j] * x[j];
    target_.reduce(y);
    return y;
}

ModuleMap ModuleMap::after(const ModuleMap& first) const {
    if (first.target() != source_) throw ShapeMismatch("module maps are not composable");
    return ModuleMap(first.source(), target_, multiply(matrix_, first.matrix()));
}

ModuleMap doubling_step(const GModule& m) {
    if (!m.is_finite()) throw InvariantViolation("doubling tower needs a finite coefficient module");
    std::vector<Integer> f;
    for (const auto& x : m.factors()) f.push_back(2 * x);
    std::vector<IntMatrix> act;
    for (int g = 0; g < m.group().order(); ++g) {
        IntMatrix a = m.action(g);
        // Keep signed representatives so that inversion stays inversion.
        for (std::size_t i = 0; i < a.size(); ++i)
            for (auto& x : a[i])
                if (2 * x > m.factors()[i]) x -= m.factors()[i];
        act.push_back(std::move(a));
    }
    GModule next(m.group(), f, std::move(act), m.label().empty() ? std::string{} : m.label() + "*2");
    return ModuleMap::scaling(m, next, 2);
}

}  // namespace wittkit
