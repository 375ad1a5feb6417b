#include "wittkit/cli.hpp"

#include <doctest.h>

using namespace wittkit;
using namespace wittkit::cli;

namespace {

std::string data(const std::string& name) { return std::string(WITTKIT_TEST_DATA) + "/" + name; }

ParsedObject parse_text(const std::string& text) { return parse_input(Source::from_text(text)); }

// to_json, then parse, then to_json again.
void round_trip(const ParsedObject& obj) {
    const Json first = to_json(obj);
    ParsedObject back = parse_text(first.dump(2));
    CHECK(back.index() == obj.index());
    CHECK(to_json(back) == first);
}

int count(const ScenarioReport& r, Status s) {
    int n = 0;
    for (const auto& c : r.checks) n += c.status == s;
    return n;
}

}  // namespace

TEST_CASE("parsing groups, fields and elements") {
    ParsedObject g = parse_text(R"({"cyclic": 2})");
    REQUIRE(std::holds_alternative<FiniteGroup>(g));
    CHECK(std::get<FiniteGroup>(g) == FiniteGroup::cyclic(2));
    CHECK(std::get<FiniteGroup>(parse_text(R"({"product": [2, 2]})")).order() == 4);
    CHECK(std::get<FiniteGroup>(parse_text(R"("C2xC3")")).order() == 6);

    CHECK(group_from_name("C4") == FiniteGroup::cyclic(4));
    CHECK_THROWS_AS(group_from_name("D4"), UsageError);
    CHECK(field_from_name("Q(i)") == NumberField::cyclotomic(4));
    CHECK(field_from_name("Q(zeta8)").degree() == 4);
    CHECK(field_from_name("Q(cbrt2)").degree() == 3);

    Source s = Source::from_text(R"({"x": "1/2", "y": [0, 1], "z": {"zeta": 4, "power": 3}})");
    const NumberField qi = NumberField::cyclotomic(4);
    CHECK(parse_element(s, qi, s.root().at("x")) == FieldElement(qi, Rational(1, 2)));
    CHECK(parse_element(s, qi, s.root().at("y")) == FieldElement::generator(qi));
    CHECK(parse_element(s, qi, s.root().at("z")) == -FieldElement::generator(qi));

    GModule m = module_from_name(FiniteGroup::cyclic(2), "mu4:inv");
    CHECK(m == GModule::cyclic_action(FiniteGroup::cyclic(2), 4, -1));
    CHECK_THROWS_AS(module_from_name(FiniteGroup::cyclic(2), "mu4:bogus"), UsageError);
}

TEST_CASE("parsing shipped data files") {
    ParsedObject a = parse_input(data("action_appendix.json"));
    REQUIRE(std::holds_alternative<GaloisAction>(a));
    const GaloisAction& act = std::get<GaloisAction>(a);
    CHECK(check_action_coherence(act).ok);
    const GaloisAction ref = GaloisAction::appendix_a();
    for (int x = 0; x < 4; ++x) {
        CHECK(act.gamma(x) == ref.gamma(x));
        CHECK(act.perm(x) == ref.perm(x));
        for (int y = 0; y < 4; ++y) CHECK(act.J(x, y) == ref.J(x, y));
    }
    CHECK(std::holds_alternative<GaloisAction>(parse_text(R"({"builtin": "appendix-a"})")));

    // cocycle files hold bare values; the module comes from the command line
    const GModule mu4 = module_from_name(FiniteGroup::cyclic(2), "mu4:inv");
    Source cs = Source::from_file(data("cocycle_c2_mu4.json"));
    CHECK(parse_cocycle(cs, mu4, 4, cs.root()) == c2_generator_class().class4());

    CHECK(std::holds_alternative<GModule>(parse_input(data("module_c2_z8_inv.json"))));
    FusionRing fib = std::get<FusionRing>(parse_input(data("fibonacci.json")));
    CHECK(fib.rank() == 2);
    CHECK(fib.N(1, 1, 1) == 1);
    FusionRing app = std::get<FusionRing>(parse_input(data("appendix_ring.json")));
    CHECK(fpdim_category(app) == AlgebraicReal(4));

    GradedSkeleton ok = std::get<GradedSkeleton>(parse_input(data("skeleton_c2.json")));
    CHECK(galois_grading_check(ok).ok);
    GradedSkeleton bad = std::get<GradedSkeleton>(parse_input(data("skeleton_corrupt.json")));
    CHECK(!galois_grading_check(bad).ok);

    GaloisAction plus = std::get<GaloisAction>(parse_input(data("action_gamma_em_plus.json")));
    CHECK(!check_action_coherence(plus).ok);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_input(data("malformed.json"));
        FAIL("malformed input parsed");
    } catch (const ParseError& e) {
        CHECK(e.line() > 1);
        CHECK(std::string(e.what()).find("malformed JSON") != std::string::npos);
    }
    try {
        parse_text("{\n  \"cyclic\": 2,\n  \"oops\": \n}");
        FAIL("malformed input parsed");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_text(R"({"hello": 1})"), ParseError);
    CHECK_THROWS_AS(parse_text(R"({"builtin": "other"})"), ParseError);
    CHECK_THROWS_AS(Source::from_file(data("no_such_file.json")), Error);
}

TEST_CASE("type invariants run at parse time") {
    const GModule mu4 = module_from_name(FiniteGroup::cyclic(2), "mu4:inv");
    Source cs = Source::from_file(data("cocycle_not_closed.json"));
    try {
        parse_cocycle(cs, mu4, 4, cs.root());
        FAIL("non-cocycle accepted");
    } catch (const InvariantViolation& e) {
        CHECK(std::string(e.what()).find("bar differential nonzero") != std::string::npos);
    }
    // σ of order 3 is not a Galois action of order 2
    CHECK_THROWS_AS(parse_text(R"({"category": {"center_of": {"cyclic": 2}, "field": {"cyclotomic": 4}},
                                   "perm": [0, 1, 1, 3], "scalar_auto": "conj"})"),
                    Error);
    CHECK_THROWS_AS(parse_text(R"({"group": {"cyclic": 2}, "factors": [8], "action": {"1": [[2]]}})"), InvariantViolation);
    CHECK_THROWS_AS(parse_text(R"({"group": {"cyclic": 2}, "module": {"factors": [4], "action": {"1": [[-1]]}},
                                   "degree": 2, "cocycle": {"1,1": [1]}})"),
                    InvariantViolation);
}

TEST_CASE("to_json round trips every object type") {
    round_trip(FiniteGroup::cyclic(5));
    round_trip(FiniteGroup::product({2, 4}));
    round_trip(GModule::cyclic_action(FiniteGroup::cyclic(4), 8, 3));
    round_trip(GModule::trivial(FiniteGroup::product({2, 2}), {0, 2}));
    round_trip(c2_generator_class().class4());
    round_trip(bar_cohomology(GModule::trivial(FiniteGroup::cyclic(3), {3}), 2).representatives.at(0));
    round_trip(drinfeld_center_pointed(FiniteGroup::cyclic(2), NumberField::cyclotomic(4)));
    round_trip(drinfeld_center_pointed(FiniteGroup::cyclic(3), NumberField::cyclotomic(3)));
    round_trip(GaloisAction::appendix_a());
    round_trip(GaloisAction::appendix_a(NumberField::cyclotomic(8)));
    round_trip(FusionRing::fibonacci());
    round_trip(FusionRing::group_ring(FiniteGroup::cyclic(3)));
    round_trip(GradedSkeleton::from_group(FiniteGroup::product({2, 2})));

    // numeric labels must not be read back as indices
    FusionRing swapped({"1", "0"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, 0, {0, 1});
    FusionRing back = std::get<FusionRing>(parse_text(to_json(swapped).dump()));
    CHECK(back.unit() == 0);
    CHECK(back.N(1, 1, 0) == 1);
    CHECK(back.N(0, 1, 1) == 1);
}

TEST_CASE("scenario reports") {
    ScenarioOptions o;
    ScenarioReport a = run_scenario("appendix-a", o);
    CHECK(a.checks.size() == 9);
    CHECK(count(a, Status::Pass) == 9);
    CHECK(a.exit_code() == 0);
    REQUIRE(a.payload);
    CHECK(std::holds_alternative<GaloisAction>(parse_text(a.payload->dump())));

    o.input = data("action_gamma_em_plus.json");
    ScenarioReport p = run_scenario("appendix-a", o);
    CHECK(p.exit_code() == 1);
    CHECK(p.checks.back().name == "action coherence");
    CHECK(p.checks.back().status == Status::Fail);

    ScenarioOptions e;
    e.ext = "Q(cbrt2)";
    ScenarioReport d = run_scenario("example-1-6", e);
    CHECK(d.exit_code() == 0);
    CHECK(count(d, Status::Skip) == 1);

    ScenarioOptions w;
    w.check_trivial = true;
    w.depth = 2;
    ScenarioReport wf = run_scenario("witt-family", w);
    CHECK(wf.exit_code() == 0);
    CHECK(wf.to_text().find("StabilizedNontrivial") != std::string::npos);

    CHECK_THROWS_AS(run_scenario("nope", o), UsageError);
    ScenarioOptions g;
    CHECK_THROWS_AS(run_scenario("grading-check", g), UsageError);
    ScenarioOptions budget;
    budget.work_budget = 10;
    CHECK_THROWS_AS(run_scenario("lemma-5-3", budget), BudgetExceeded);

    ScenarioReport mixed;
    mixed.add("a", true);
    mixed.skip("b");
    CHECK(mixed.exit_code() == 0);
    mixed.add("c", false, "broken");
    CHECK(mixed.exit_code() == 1);
    const Json j = mixed.to_json();
    CHECK(j.at("checks").size() == 3);
}

TEST_CASE("reports are deterministic") {
    ScenarioOptions o;
    o.max_degree = 4;
    CHECK(run_scenario("lemma-5-3", o).to_text() == run_scenario("lemma-5-3", o).to_text());
    CHECK(run_scenario("center", o).to_json() == run_scenario("center", o).to_json());
}
