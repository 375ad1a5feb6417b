#pragma once

#include "wittkit/fusionring.hpp"
#include "wittkit/numfield.hpp"
#include "wittkit/pointedcat.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace wittkit {

using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Order-2 Galois action on a pointed braided category: a σ-semilinear
/// autoequivalence T (permutation π of the simples, tensorator
/// J(g,h): T(g)⊗T(h) → T(gh)) and a monoidal isomorphism γ: T² ⇒ Id.
class GaloisAction {
public:
    using Table2 = std::function<FieldElement(int, int)>;
    using Table1 = std::function<FieldElement(int)>;

    /// Throws InvariantViolation unless σ has order 2 on the base field, π is
    /// an involutive group automorphism and every table entry is nonzero.
    GaloisAction(PointedBraidedCategory base, FieldAutomorphism sigma, std::vector<int> perm, const Table2& J,
                 const Table1& gamma, std::vector<std::string> names = {});

    /// Z(Vect(Z/2)) over Q(i), T swapping E and M, J = (−1)^{il}, γ = (−1)^{ij},
    /// σ = complex conjugation. Other cyclotomic fields are accepted; fields
    /// without the needed roots of unity raise InsufficientRoots.
    static GaloisAction appendix_a(const NumberField& field = NumberField::cyclotomic(4));
    /// Same base and T with J ≡ 1 (not braided).
    static GaloisAction appendix_a_untwisted();

    const PointedBraidedCategory& base() const { return base_; }
    const FieldAutomorphism& sigma() const { return sigma_; }
    const NumberField& field() const { return base_.field(); }
    int order() const { return base_.order(); }
    int perm(int g) const { return perm_[static_cast<std::size_t>(g)]; }
    const FieldElement& J(int g, int h) const { return J_[static_cast<std::size_t>(g * order() + h)]; }
    const FieldElement& gamma(int g) const { return gamma_[static_cast<std::size_t>(g)]; }
    const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }

private:
    PointedBraidedCategory base_;
    FieldAutomorphism sigma_;
    std::vector<int> perm_;
    std::vector<FieldElement> J_;
    std::vector<FieldElement> gamma_;
    std::vector<std::string> names_;
};

/// (a) J is a σ-semilinear tensor structure, (b) T is braided,
/// (c) γ is monoidal for the T² tensorator, (d) γ_{T(g)} = σ(γ_g).
CheckResult check_action_coherence(const GaloisAction& action);

/// Tensorator of T∘T: σ(J(g,h))·J(π g, π h), row-major over (g,h).
std::vector<FieldElement> t_squared_tensorator(const GaloisAction& action);

enum class EndType { Real, Complex, Quaternionic };
std::string to_string(EndType t);

/// Object of the base with an equivariant structure u: T(X) → X. Components
/// are listed in `underlying`; u[a][b] is the scalar from T(x_b) to x_a.
struct EquivariantObject {
    std::vector<int> underlying;
    FieldMatrix u;
};

struct EquivariantSimple : EquivariantObject {
    EndType end_type = EndType::Real;
    int end_dim = 1;
    std::string label;
};

/// u ∘ T(u) = γ_X as matrices.
bool satisfies_equivariance(const GaloisAction& action, const EquivariantObject& x);

/// One simple per T-orbit, orbits ordered by least element. Throws
/// InvariantViolation unless σ has order 2, ObstructionUndecidable when a
/// norm equation cannot be settled exactly.
std::vector<EquivariantSimple> equivariant_simples(const GaloisAction& action);

/// Dimension over the σ-fixed field of the equivariant morphisms X → Y.
int equivariant_hom_dim(const GaloisAction& action, const EquivariantObject& x, const EquivariantObject& y);

/// X ⊗ Y with structure (u_X ⊗ u_Y)∘J⁻¹.
EquivariantObject equivariant_tensor(const GaloisAction& action, const EquivariantObject& x, const EquivariantObject& y);

/// Multiplicity of each simple (by index into `simples`) in X ⊗ Y; zero
/// multiplicities are omitted. Throws InvariantViolation if the result does
/// not account for the whole underlying object.
std::vector<std::pair<int, int>> equivariant_tensor_decompose(const GaloisAction& action,
                                                              const std::vector<EquivariantSimple>& simples,
                                                              const EquivariantObject& x, const EquivariantObject& y);

/// Fusion ring of the equivariantization with endomorphism data
/// REAL (1,1,1), COMPLEX (2,2,1), QUATERNIONIC (4,1,2).
FusionRing equivariant_fusion_ring(const GaloisAction& action, const std::vector<EquivariantSimple>& simples);

struct GradingDecomposition {
    /// Subgroup of the base group generated by x·y⁻¹ over pairs in one support.
    Subgroup trivial_support;
    /// Quotient of the base group by `trivial_support`, one element per coset.
    FiniteGroup group;
    /// degree[s] = coset of simple s.
    std::vector<int> degree;
    /// components[c] = simples of degree c.
    std::vector<std::vector<int>> components;
};

/// Throws NotGraded if some tensor product leaves the expected component.
GradingDecomposition grading_decomposition(const GaloisAction& action, const std::vector<EquivariantSimple>& simples);

/// Solution of u·σ(u) = γ for γ in the σ-fixed field, or nullopt when γ is
/// provably not a norm; `certificate` explains the decision.
struct NormSolution {
    std::optional<FieldElement> u;
    std::string certificate;
};
NormSolution solve_norm_equation(const FieldAutomorphism& sigma, const FieldElement& gamma);

}  // namespace wittkit
