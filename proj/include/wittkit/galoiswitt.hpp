#pragma once

#include "wittkit/equivariant.hpp"
#include "wittkit/groupcoh.hpp"
#include "wittkit/numfield.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wittkit {

/// Polynomial over a number field, coefficients from degree 0 upwards.
using FieldPolynomial = std::vector<FieldElement>;
std::string factor_string(const FieldPolynomial& p);

struct TensorComponent {
    /// K[x]/(factor) as an absolute number field.
    NumberField field;
    int degree_over_K;
    FieldPolynomial factor;
    /// Root of a linear factor; the component is K via x ↦ root.
    std::optional<FieldElement> root;
    /// How the factor was found (automorphism, exact root, or the
    /// non-square certificate of a quadratic's discriminant).
    std::string certificate;
};

/// K ⊗_k K ≅ K[x]/(f) ≅ ∏ K[x]/(f_i).
struct TensorDecomposition {
    NumberField base;
    NumberField extension;
    std::vector<TensorComponent> components;
    /// Index of the component of the unit, i.e. of the factor x − θ.
    int unit_component = 0;
    /// When every factor is linear: Γ with element γ ↔ component γ.
    std::optional<FiniteGroup> galois_group;
    std::vector<FieldAutomorphism> automorphisms;
};

/// Supports k = Q or k = K. Throws UnfactoredRemainder for a leftover
/// factor of degree ≥ 3 and propagates Inconclusive from sqrt_in_field.
TensorDecomposition tensor_decompose(const NumberField& k, const NumberField& K,
                                     long height_bound = kDefaultHeightBound);

/// Multiplies the factors back together and compares with f over K.
bool factors_multiply_back(const TensorDecomposition& dec);

/// (α,β)·c_γ = α(c_{α⁻¹γβ}) on the image of a ⊗ b ↦ (a·γ(b))_γ, for all
/// α, β, γ and basis elements a, b.
CheckResult verify_action_formula(const TensorDecomposition& dec);

/// Degree-4 cocycle on Γ valued in a module of roots of unity.
class WittFamilyClass {
public:
    /// Throws ShapeMismatch unless the class has degree 4.
    explicit WittFamilyClass(CochainClass class4);

    const FiniteGroup& galois_group() const { return class4_.group(); }
    const GModule& coefficient_module() const { return class4_.module(); }
    const CochainClass& class4() const { return class4_; }

private:
    CochainClass class4_;
};

/// Throws ShapeMismatch for different groups or modules.
WittFamilyClass witt_class_product(const WittFamilyClass& a, const WittFamilyClass& b);

/// Coefficient embedding, then pullback along the group surjection.
WittFamilyClass witt_class_inflate(const WittFamilyClass& a, const std::optional<ModuleMap>& coefficients,
                                   const std::optional<GroupHom>& surjection);

enum class TrivialityVerdict { Trivial, NontrivialUpTo, StabilizedNontrivial };
std::string to_string(TrivialityVerdict v);

struct TrivialityResult {
    TrivialityVerdict verdict = TrivialityVerdict::NontrivialUpTo;
    /// Trivial: level where the class became a coboundary. Otherwise the last level tested.
    int level = 0;
    /// Cochain at `level` whose coboundary is the inflated class.
    std::optional<Cochain> witness;
    std::vector<AbelianGroupStructure> level_groups;
};

/// Tests the class at every level 0..depth of the coefficient-doubling tower.
/// A class that never becomes a coboundary is StabilizedNontrivial when Γ is
/// cyclic and the last two levels have equal cohomology groups, otherwise
/// NontrivialUpTo. Throws BudgetExceeded.
TrivialityResult tower_triviality(const CochainClass& c, int depth, const CohomologyOptions& opts = {});
TrivialityResult witt_class_is_trivial(const WittFamilyClass& a, int depth, const CohomologyOptions& opts = {});

/// The 4-cocycle on C_2 = Gal(Q(i)/Q) with values in μ_4 (σ acting by
/// inversion) representing the generator of H⁴ ≅ Z/2.
WittFamilyClass c2_generator_class();

struct GradedSkeleton {
    struct Object {
        std::string label;
        int galois_degree;
    };
    FiniteGroup group;
    std::vector<Object> objects;
    int unit = 0;
    std::map<std::pair<int, int>, std::set<int>> fusion_support;

    /// Throws InvariantViolation for an empty support, an unknown object or a
    /// unit outside the identity degree.
    void validate() const;
    /// Objects V_g with V_a·V_b = {V_ab}.
    static GradedSkeleton from_group(const FiniteGroup& g, const std::string& prefix = "V");
};

/// g_E = g_C·g_D for every E in the support of C□D.
CheckResult galois_grading_check(const GradedSkeleton& skel);

struct CertificateCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct WittCertificate {
    std::vector<CertificateCheck> checks;
    /// Name of the first failing check; later checks are not run.
    std::optional<std::string> failed;
    std::vector<std::string> not_mechanized;
    bool ok() const { return !failed; }
};

/// Runs the full pipeline for the real Witt class example on the given action
/// (the built-in fixture by default).
WittCertificate real_witt_certificate(const GaloisAction& fixture = GaloisAction::appendix_a());

}  // namespace wittkit
