#pragma once

#include "wittkit/linalg.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wittkit {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Finite group given by its multiplication table. Elements are indices
/// 0..order-1.
class FiniteGroup {
public:
    static FiniteGroup trivial();
    /// C_m with element j = σ^j.
    static FiniteGroup cyclic(int m);
    /// Z/m_1 × ... × Z/m_r; element index is the mixed-radix number with the
    /// first factor varying fastest.
    static FiniteGroup product(const std::vector<int>& cyclic_orders);
    /// G × H with index g + |G|·h.
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
    /// Validates identity, inverses and associativity; throws InvariantViolation.
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string label = "table");

    int order() const { return impl_->order; }
    int identity() const { return impl_->identity; }
    int mul(int a, int b) const { return impl_->table[static_cast<std::size_t>(a * impl_->order + b)]; }
    int inverse(int a) const { return impl_->inverse[static_cast<std::size_t>(a)]; }
    int power(int g, long e) const;
    int element_order(int g) const;
    const std::string& label() const { return impl_->label; }
    /// Orders of the cyclic factors for groups built by cyclic/product; empty otherwise.
    const std::vector<int>& cyclic_factors() const { return impl_->cyclic_factors; }
    bool is_abelian() const;
    /// Smallest-index element generating the group, when the group is cyclic.
    std::optional<int> cyclic_generator() const;
    std::vector<std::vector<int>> table() const;

    bool operator==(const FiniteGroup& o) const;
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
    struct Impl {
        int order = 1;
        int identity = 0;
        std::vector<int> table;
        std::vector<int> inverse;
        std::vector<int> cyclic_factors;
        std::string label;
    };
    explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static FiniteGroup build(int order, std::vector<int> table, std::vector<int> factors, std::string label);
    std::shared_ptr<const Impl> impl_;
};

/// Group homomorphism G' -> G given by the image of every element.
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> images;
    /// Throws NotHomomorphism unless this is a homomorphism (and onto, if requested).
    void verify(bool require_surjective) const;
};

/// Finitely generated abelian group ⊕ Z/f_i (f_i = 0 meaning Z) with a
/// G-action by integer matrices; column j of action(g) is the image of e_j.
class GModule {
public:
    /// Validates the relations and the action law; throws InvariantViolation.
    GModule(FiniteGroup group, std::vector<Integer> factors, std::vector<IntMatrix> action, std::string label = {});
    static GModule trivial(const FiniteGroup& group, std::vector<Integer> factors, std::string label = {});
    /// Z/n (n = 0 for Z) on which g acts by multiplication by exponents[g].
    static GModule scalar_action(const FiniteGroup& group, const Integer& n, const std::vector<long>& exponents,
                                 std::string label = {});
    /// Z/n over a cyclic group whose generator acts by multiplication by a.
    static GModule cyclic_action(const FiniteGroup& cyclic, const Integer& n, long a, std::string label = {});
    /// Same abelian group with G' acting through hom: G' -> G.
    static GModule pullback(const GModule& m, const GroupHom& hom);

    const FiniteGroup& group() const { return impl_->group; }
    const std::vector<Integer>& factors() const { return impl_->factors; }
    std::size_t rank() const { return impl_->factors.size(); }
    const IntMatrix& action(int g) const { return impl_->action[static_cast<std::size_t>(g)]; }
    const std::string& label() const { return impl_->label; }
    bool is_finite() const;
    /// Order of the group when finite.
    Integer cardinality() const;

    std::vector<Integer> apply(int g, const std::vector<Integer>& x) const;
    void reduce(std::vector<Integer>& x) const { linalg::reduce_into(x, impl_->factors); }

    bool operator==(const GModule& o) const;
    bool operator!=(const GModule& o) const { return !(*this == o); }

private:
    struct Impl {
        FiniteGroup group;
        std::vector<Integer> factors;
        std::vector<IntMatrix> action;
        std::string label;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Homomorphism of G-modules M -> M' given by an integer matrix
/// (rows = rank of M', column j = image of e_j).
class ModuleMap {
public:
    /// Throws InvariantViolation if the matrix does not respect relations,
    /// NotEquivariant if it does not commute with the actions.
    ModuleMap(GModule source, GModule target, IntMatrix matrix);
    static ModuleMap identity(const GModule& m);
    /// Z/n -> Z/(c·n) on every coordinate by multiplication with c.
    static ModuleMap scaling(const GModule& source, const GModule& target, const Integer& c);

    const GModule& source() const { return source_; }
    const GModule& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }
    std::vector<Integer> operator()(const std::vector<Integer>& x) const;
    /// (this ∘ first)
    ModuleMap after(const ModuleMap& first) const;

private:
    GModule source_, target_;
    IntMatrix matrix_;
};

/// Inhomogeneous n-cochain: a module element for every n-tuple of group
/// elements. Tuples are indexed lexicographically with g_1 most significant.
class Cochain {
public:
    Cochain(GModule module, int degree, std::vector<std::vector<Integer>> values);
    static Cochain zero(const GModule& module, int degree);
    static Cochain from_function(const GModule& module, int degree,
                                 const std::function<std::vector<Integer>(const std::vector<int>&)>& f);

    const GModule& module() const { return module_; }
    const FiniteGroup& group() const { return module_.group(); }
    int degree() const { return degree_; }
    std::size_t tuple_count() const { return values_.size(); }
    const std::vector<Integer>& at(std::size_t index) const { return values_[index]; }
    const std::vector<Integer>& at(const std::vector<int>& tuple) const { return values_[tuple_index(tuple)]; }
    const std::vector<std::vector<Integer>>& values() const { return values_; }
    std::size_t tuple_index(const std::vector<int>& tuple) const;
    std::vector<int> tuple_at(std::size_t index) const;

    bool is_zero() const;
    /// Vanishes whenever some argument is the identity.
    bool is_normalized() const;
    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    GModule module_;
    int degree_;
    std::vector<std::vector<Integer>> values_;
};

/// (df)(g_1..g_{n+1}) = g_1·f(g_2..) + Σ (-1)^i f(..g_i g_{i+1}..) + (-1)^{n+1} f(g_1..g_n).
Cochain coboundary(const Cochain& f);

/// A cochain whose coboundary has been verified to vanish.
class CochainClass {
public:
    /// Throws InvariantViolation("bar differential nonzero") for a non-cocycle.
    explicit CochainClass(Cochain c);
    static CochainClass zero(const GModule& m, int degree) { return CochainClass(Cochain::zero(m, degree)); }

    const Cochain& cochain() const { return c_; }
    const GModule& module() const { return c_.module(); }
    const FiniteGroup& group() const { return c_.group(); }
    int degree() const { return c_.degree(); }
    friend bool operator==(const CochainClass& a, const CochainClass& b) { return a.c_ == b.c_; }

private:
    Cochain c_;
};

struct CohomologyOptions {
    std::size_t work_budget = 10'000'000;
    bool force_integer = false;
};

/// Differential d^n of the bar complex as an integer matrix on cochain
/// coordinates (tuple index · rank + coordinate). The normalized complex uses
/// only tuples of non-identity elements.
linalg::SparseIntMatrix bar_differential(const GModule& m, int n, bool normalized);

struct CohomologyGroup {
    AbelianGroupStructure structure;
    /// Normalized representative cocycles, one per canonical generator.
    std::vector<CochainClass> representatives;
    /// Class of a normalized cocycle in canonical coordinates.
    std::function<std::vector<Integer>(const CochainClass&)> coordinates;
};

/// H^n(G; M) from the normalized bar complex. Throws BudgetExceeded when
/// |G|^{n+1}·rank or a working matrix exceeds the budget.
CohomologyGroup bar_cohomology(const GModule& m, int n, const CohomologyOptions& opts = {});

/// H^n(C_m; M) from the periodic resolution (σ-1, N). The module's group must be cyclic of order m.
AbelianGroupStructure cyclic_cohomology(int m, const GModule& module, int n, const CohomologyOptions& opts = {});

struct CoboundaryResult {
    bool is_coboundary = false;
    /// (n-1)-cochain b with d b = c, verified; absent in degree 0.
    std::optional<Cochain> witness;
};

CoboundaryResult is_coboundary(const CochainClass& c, const CohomologyOptions& opts = {});

CochainClass inflate_coefficients(const CochainClass& c, const ModuleMap& embedding);
/// Pullback along a surjection p: G' -> G; throws NotHomomorphism.
CochainClass inflate_group(const CochainClass& c, const GroupHom& p);
/// Pointwise sum; throws ShapeMismatch on different modules or degrees.
CochainClass add_classes(const CochainClass& a, const CochainClass& b);

struct StabilizedCohomology {
    /// Image of the first level in the last level.
    AbelianGroupStructure value;
    std::vector<AbelianGroupStructure> level_groups;
    /// Image of level 1 in each level.
    std::vector<AbelianGroupStructure> level_images;
};

/// Cohomology of C_m along a tower of coefficient embeddings M_1 -> M_2 -> ...
/// Throws NotStabilized when the images of level 1 in the last two levels differ.
StabilizedCohomology stabilized_cohomology(int m, const std::vector<ModuleMap>& tower, int n,
                                           const CohomologyOptions& opts = {});

/// Next level of a coefficient-doubling tower: every factor doubled, the same
/// action matrices, and the ×2 embedding. Requires a finite module.
ModuleMap doubling_step(const GModule& m);

}  // namespace wittkit
