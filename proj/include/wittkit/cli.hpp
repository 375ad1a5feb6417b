#pragma once

#include "wittkit/equivariant.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/fusionring.hpp"
#include "wittkit/galoiswitt.hpp"
#include "wittkit/groupcoh.hpp"
#include "wittkit/numfield.hpp"
#include "wittkit/pointedcat.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wittkit::cli {

using Json = nlohmann::ordered_json;

/// Bad flags or inputs that parse but do not describe a valid object.
class UsageError : public Error {
public:
    using Error::Error;
};

/// JSON text with enough bookkeeping to report line numbers.
class Source {
public:
    /// Throws ParseError on malformed JSON.
    static Source from_text(std::string text, std::string name = "<input>");
    static Source from_file(const std::string& path);

    const Json& root() const { return root_; }
    const std::string& name() const { return name_; }
    /// Line of the first occurrence of "key" in the text (1 if absent).
    std::size_t line_of(const std::string& key) const;
    [[noreturn]] void fail(const std::string& key, const std::string& reason) const;

private:
    std::string name_;
    std::string text_;
    Json root_;
};

FiniteGroup parse_group(const Source& src, const Json& j);
/// {"cyclotomic": n}, {"minpoly": [c0, ..., 1]} or a name such as "Q", "Q(i)",
/// "Q(zeta8)", "Q(sqrt2)", "Q(cbrt2)".
NumberField parse_field(const Source& src, const Json& j);
NumberField field_from_name(const std::string& name);
/// A rational ("p/q" or a number), a coefficient list in the power basis, or
/// {"zeta": n, "power": k}.
FieldElement parse_element(const Source& src, const NumberField& field, const Json& j);
GModule parse_module(const Source& src, const FiniteGroup& g, const Json& j);
/// {"g1,...,gn": [coords]}; missing tuples are zero. Throws InvariantViolation
/// for a non-cocycle.
CochainClass parse_cocycle(const Source& src, const GModule& m, int degree, const Json& values);
PointedBraidedCategory parse_category(const Source& src, const Json& j);
/// "scalar_auto" is "conj", an integer k (ζ ↦ ζ^k) or the image of the generator.
GaloisAction parse_action(const Source& src, const PointedBraidedCategory& base, const Json& j);
FusionRing parse_ring(const Source& src, const Json& j);
GradedSkeleton parse_skeleton(const Source& src, const Json& j);

/// "C<m>" or products "C2xC3".
FiniteGroup group_from_name(const std::string& name);
/// "mu<n>:inv", "mu<n>:triv" or "mu<n>:<a>" over a cyclic group.
GModule module_from_name(const FiniteGroup& g, const std::string& spec);

using ParsedObject = std::variant<FiniteGroup, GModule, CochainClass, PointedBraidedCategory, GaloisAction, FusionRing,
                                  GradedSkeleton>;

/// Detects the object type from its keys; all type invariants run here.
ParsedObject parse_input(const Source& src);
ParsedObject parse_input(const std::string& path);
std::string kind(const ParsedObject& obj);

Json to_json(const FiniteGroup& g);
Json to_json(const NumberField& f);
Json to_json(const FieldElement& x);
Json to_json(const GModule& m);
Json to_json(const CochainClass& c);
Json to_json(const PointedBraidedCategory& cat);
Json to_json(const GaloisAction& action);
Json to_json(const FusionRing& ring);
Json to_json(const GradedSkeleton& skel);
Json to_json(const ParsedObject& obj);

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct ReportCheck {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<ReportCheck> checks;
    std::vector<std::string> notes;
    /// Object produced by the scenario, in input-file format.
    std::optional<Json> payload;

    void add(std::string name, bool ok, std::string detail = {});
    void skip(std::string name, std::string detail = {});
    int exit_code() const;
    std::string to_text() const;
    Json to_json() const;
};

struct ScenarioOptions {
    std::optional<std::string> input;
    std::string base = "Q";
    std::string ext = "Q(i)";
    std::string gamma = "C2";
    std::string coeff = "mu4:inv";
    std::optional<std::string> cocycle;
    std::string field = "Q(i)";
    bool check_trivial = false;
    int depth = 4;
    int tower = 3;
    int max_degree = 6;
    std::size_t work_budget = CohomologyOptions{}.work_budget;
    long height_bound = kDefaultHeightBound;
};

const std::vector<std::string>& scenario_names();

/// Throws UsageError for an unknown scenario or invalid inputs, ParseError
/// for malformed files and BudgetExceeded from the computations. Other
/// library errors become FAIL checks.
ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts);

}  // namespace wittkit::cli
