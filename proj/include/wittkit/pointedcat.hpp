#pragma once

#include "wittkit/groupcoh.hpp"
#include "wittkit/numfield.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wittkit {

/// Outcome of an exhaustive identity check; `where` holds the
/// lexicographically least failing argument tuple.
struct CheckResult {
    bool ok = true;
    std::vector<int> where;
    std::string detail;
    explicit operator bool() const { return ok; }
    static CheckResult pass() { return {}; }
    static CheckResult fail(std::vector<int> where, std::string detail) { return {false, std::move(where), std::move(detail)}; }
};

/// Pointed fusion category Vect_K(A) with associator ω and optional braiding c,
/// stored as dense scalar tables.
class PointedBraidedCategory {
public:
    using Table3 = std::function<FieldElement(int, int, int)>;
    using Table2 = std::function<FieldElement(int, int)>;

    /// Omitted tables default to 1. Throws InvariantViolation on zero entries,
    /// a non-abelian group with braiding, or order > 64.
    PointedBraidedCategory(FiniteGroup group, NumberField field, const Table3& associator,
                           const std::optional<Table2>& braiding, std::string label = {});

    const FiniteGroup& group() const { return group_; }
    const NumberField& field() const { return field_; }
    const std::string& label() const { return label_; }
    int order() const { return group_.order(); }
    bool has_braiding() const { return !braiding_.empty(); }
    const FieldElement& omega(int g, int h, int k) const;
    const FieldElement& c(int g, int h) const;
    /// c(g,h)·c(h,g)
    FieldElement double_braiding(int g, int h) const;

private:
    FiniteGroup group_;
    NumberField field_;
    std::vector<FieldElement> associator_;
    std::vector<FieldElement> braiding_;
    std::string label_;
};

/// Subgroup of a finite group as a sorted list of element indices.
struct Subgroup {
    std::vector<int> elements;
    bool operator==(const Subgroup& o) const = default;
    bool contains(int g) const;
    bool is_trivial() const { return elements.size() == 1; }
    std::string to_string() const;
};

/// All subgroups (order ≤ 64), sorted by size then elements.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
/// Smallest subgroup containing the given elements.
Subgroup subgroup_generated_by(const FiniteGroup& g, const std::vector<int>& gens);

CheckResult check_pentagon(const PointedBraidedCategory& cat);
CheckResult check_hexagons(const PointedBraidedCategory& cat);

/// Z(Vect_K(A)) on A × Â (Â identified with A through the standard pairing of
/// cyclic factors; index (g, χ) = g + |A|·χ), trivial associator, braiding
/// ((g,χ),(h,ψ)) ↦ χ(h). Throws InsufficientRoots unless the exponent of A
/// divides the field's cyclotomic order.
PointedBraidedCategory drinfeld_center_pointed(const FiniteGroup& a, const NumberField& field);

Subgroup centralizer(const PointedBraidedCategory& cat, const Subgroup& h);
Subgroup muger_center(const PointedBraidedCategory& cat);
bool is_nondegenerate(const PointedBraidedCategory& cat);

struct DoubleCentralizerResult {
    bool ok = true;
    std::size_t subgroups_checked = 0;
    std::optional<Subgroup> counterexample;
};

/// Checks centralizer(centralizer(H)) = H for every subgroup; DegenerateInput
/// when the category is degenerate.
DoubleCentralizerResult double_centralizer_check(const PointedBraidedCategory& cat);

}  // namespace wittkit
