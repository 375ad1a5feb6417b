#include "wittkit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace wittkit::cli {

namespace {

std::string rational_string(const Rational& r) { return r.get_str(); }

std::string strip(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

bool parse_int(const std::string& s, long& out) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    try {
        out = std::stol(s);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

Rational parse_rational(const Source& src, const std::string& key, const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        std::string s = strip(j.get<std::string>());
        Rational r;
        const auto slash = s.find('/');
        auto digits = [](const std::string& t, bool sign) {
            std::size_t i = sign && !t.empty() && (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
            return true;
        };
        const bool ok = slash == std::string::npos ? digits(s, true)
                                                   : digits(s.substr(0, slash), true) && digits(s.substr(slash + 1), false);
        if (!ok) src.fail(key, "not a rational: \"" + s + "\"");
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        if (r.set_str(s, 10) != 0 || r.get_den() == 0) src.fail(key, "not a rational: \"" + s + "\"");
        r.canonicalize();
        return r;
    }
    src.fail(key, "expected an integer or a \"p/q\" string");
}

long get_int(const Source& src, const Json& j, const std::string& key) {
    if (!j.is_number_integer()) src.fail(key, "expected an integer for \"" + key + "\"");
    return static_cast<long>(j.get<long long>());
}

const Json& require(const Source& src, const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) src.fail(key, "missing key \"" + key + "\"");
    return j.at(key);
}

std::vector<int> parse_tuple(const Source& src, const std::string& key, std::size_t arity,
                             const std::function<int(const std::string&)>& resolve) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(resolve(strip(part)));
    if (key.empty()) out.clear();
    if (out.size() != arity)
        src.fail(key, "key \"" + key + "\" needs " + std::to_string(arity) + " comma-separated entries");
    return out;
}

std::function<int(const std::string&)> index_resolver(const Source& src, int order,
                                                      const std::vector<std::string>& labels = {}) {
    return [&src, order, labels](const std::string& tok) {
        auto it = std::find(labels.begin(), labels.end(), tok);
        if (it != labels.end()) return static_cast<int>(it - labels.begin());
        long v;
        if (!parse_int(tok, v)) src.fail(tok, "unknown element \"" + tok + "\"");
        if (v < 0 || v >= order) src.fail(tok, "index " + tok + " out of range");
        return static_cast<int>(v);
    };
}

std::string tuple_key(const std::vector<int>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s;
}

Json integer_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Integer parse_integer(const Source& src, const std::string& key, const Json& j) {
    Rational r = parse_rational(src, key, j);
    if (r.get_den() != 1) src.fail(key, "expected an integer");
    return r.get_num();
}

}  // namespace

Source Source::from_text(std::string text, std::string name) {
    Source s;
    s.name_ = std::move(name);
    s.text_ = std::move(text);
    try {
        s.root_ = Json::parse(s.text_);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, s.text_.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(s.text_.begin(), s.text_.begin() + static_cast<long>(upto), '\n'));
        throw ParseError(line, s.name_ + ": malformed JSON");
    }
    return s;
}

Source Source::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str(), path);
}

std::size_t Source::line_of(const std::string& key) const {
    const auto pos = text_.find("\"" + key + "\"");
    if (pos == std::string::npos) return 1;
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n'));
}

void Source::fail(const std::string& key, const std::string& reason) const {
    throw ParseError(line_of(key), name_ + ": " + reason);
}

FiniteGroup group_from_name(const std::string& name) {
    std::vector<int> orders;
    std::stringstream ss(strip(name));
    std::string part;
    while (std::getline(ss, part, 'x')) {
        long m;
        if (part.size() < 2 || part[0] != 'C' || !parse_int(part.substr(1), m) || m < 1)
            throw UsageError("unknown group \"" + name + "\" (expected C<m> or C<m>xC<n>)");
        orders.push_back(static_cast<int>(m));
    }
    if (orders.empty()) throw UsageError("empty group name");
    return orders.size() == 1 ? FiniteGroup::cyclic(orders[0]) : FiniteGroup::product(orders);
}

GModule module_from_name(const FiniteGroup& g, const std::string& spec) {
    const std::string s = strip(spec);
    const auto colon = s.find(':');
    long n;
    if (s.rfind("mu", 0) != 0 || colon == std::string::npos || !parse_int(s.substr(2, colon - 2), n) || n < 1)
        throw UsageError("unknown coefficient module \"" + spec + "\" (expected mu<n>:inv|triv|<a>)");
    const std::string act = s.substr(colon + 1);
    long a;
    if (act == "inv")
        a = -1;
    else if (act == "triv")
        a = 1;
    else if (!parse_int(act, a))
        throw UsageError("unknown action \"" + act + "\"");
    if (!g.cyclic_generator()) throw UsageError("coefficient shorthand needs a cyclic group");
    return GModule::cyclic_action(g, Integer(n), a, s);
}

NumberField field_from_name(const std::string& raw) {
    std::string s = strip(raw);
    if (s == "Q") return NumberField::rationals();
    if (s.size() < 4 || s.rfind("Q(", 0) != 0 || s.back() != ')') throw UsageError("unknown field \"" + raw + "\"");
    std::string inner = s.substr(2, s.size() - 3);
    if (inner == "i") return NumberField::cyclotomic(4);
    auto arg = [&](const std::string& prefix, long& v) {
        if (inner.rfind(prefix, 0) != 0) return false;
        std::string rest = inner.substr(prefix.size());
        if (!rest.empty() && rest.front() == '_') rest.erase(0, 1);
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        return parse_int(rest, v);
    };
    long v;
    if (arg("zeta", v) && v >= 1) return NumberField::cyclotomic(static_cast<int>(v));
    if (arg("sqrt", v))
        return NumberField::from_min_poly(Polynomial(std::vector<Rational>{Rational(-v), 0, 1}), "Q(sqrt" + std::to_string(v) + ")");
    if (arg("cbrt", v))
        return NumberField::from_min_poly(Polynomial(std::vector<Rational>{Rational(-v), 0, 0, 1}),
                                          "Q(cbrt" + std::to_string(v) + ")");
    throw UsageError("unknown field \"" + raw + "\"");
}

FiniteGroup parse_group(const Source& src, const Json& j) {
    if (j.is_string()) {
        try {
            return group_from_name(j.get<std::string>());
        } catch (const UsageError& e) {
            src.fail(j.get<std::string>(), e.what());
        }
    }
    if (!j.is_object()) src.fail("group", "a group is {\"cyclic\": m}, {\"product\": [...]} or {\"table\": [[...]]}");
    if (j.contains("cyclic")) {
        const long m = get_int(src, j.at("cyclic"), "cyclic");
        if (m < 1) src.fail("cyclic", "cyclic order must be positive");
        return FiniteGroup::cyclic(static_cast<int>(m));
    }
    if (j.contains("product")) {
        std::vector<int> orders;
        for (const auto& m : j.at("product")) orders.push_back(static_cast<int>(get_int(src, m, "product")));
        return FiniteGroup::product(orders);
    }
    if (j.contains("table")) {
        std::vector<std::vector<int>> t;
        const Json& rows = j.at("table");
        if (!rows.is_array()) src.fail("table", "table must be an array of rows");
        for (const auto& row : rows) {
            if (!row.is_array()) src.fail("table", "table must be an array of rows");
            std::vector<int> r;
            for (const auto& x : row) r.push_back(static_cast<int>(get_int(src, x, "table")));
            t.push_back(std::move(r));
        }
        return FiniteGroup::from_table(std::move(t), j.value("label", std::string("table")));
    }
    src.fail("group", "a group is {\"cyclic\": m}, {\"product\": [...]} or {\"table\": [[...]]}");
}

NumberField parse_field(const Source& src, const Json& j) {
    if (j.is_string()) {
        try {
            return field_from_name(j.get<std::string>());
        } catch (const UsageError& e) {
            src.fail(j.get<std::string>(), e.what());
        }
    }
    if (j.is_object() && j.contains("cyclotomic")) {
        const long n = get_int(src, j.at("cyclotomic"), "cyclotomic");
        if (n < 1) src.fail("cyclotomic", "cyclotomic order must be positive");
        return NumberField::cyclotomic(static_cast<int>(n));
    }
    if (j.is_object() && j.contains("minpoly")) {
        std::vector<Rational> c;
        for (const auto& x : j.at("minpoly")) c.push_back(parse_rational(src, "minpoly", x));
        if (c.size() < 2 || c.back() != 1) src.fail("minpoly", "minimal polynomial must be monic of degree ≥ 1");
        return NumberField::from_min_poly(Polynomial(std::move(c)), j.value("label", std::string()));
    }
    src.fail("field", "a field is {\"cyclotomic\": n}, {\"minpoly\": [...]} or a name like \"Q(i)\"");
}

FieldElement parse_element(const Source& src, const NumberField& field, const Json& j) {
    if (j.is_array()) {
        if (static_cast<int>(j.size()) > field.degree()) src.fail("", "element has more coordinates than the field degree");
        std::vector<Rational> c;
        for (const auto& x : j) c.push_back(parse_rational(src, "", x));
        c.resize(static_cast<std::size_t>(field.degree()), Rational(0));
        return FieldElement(field, std::move(c));
    }
    if (j.is_object() && j.contains("zeta")) {
        const long n = get_int(src, j.at("zeta"), "zeta");
        const long k = j.contains("power") ? get_int(src, j.at("power"), "power") : 1;
        return FieldElement::root_of_unity(field, static_cast<int>(n), k);
    }
    return FieldElement(field, parse_rational(src, "", j));
}

GModule parse_module(const Source& src, const FiniteGroup& g, const Json& j) {
    if (j.is_string()) {
        try {
            return module_from_name(g, j.get<std::string>());
        } catch (const UsageError& e) {
            src.fail(j.get<std::string>(), e.what());
        }
    }
    std::vector<Integer> factors;
    for (const auto& f : require(src, j, "factors")) factors.push_back(parse_integer(src, "factors", f));
    const std::size_t r = factors.size();
    std::vector<IntMatrix> action;
    for (int e = 0; e < g.order(); ++e) {
        IntMatrix id(r, std::vector<Integer>(r, 0));
        for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
        action.push_back(std::move(id));
    }
    if (j.contains("action")) {
        for (const auto& [key, mat] : j.at("action").items()) {
            const int e = index_resolver(src, g.order())(strip(key));
            if (!mat.is_array() || mat.size() != r) src.fail(key, "action matrix must be " + std::to_string(r) + "×" + std::to_string(r));
            for (std::size_t a = 0; a < r; ++a) {
                if (!mat[a].is_array() || mat[a].size() != r)
                    src.fail(key, "action matrix must be " + std::to_string(r) + "×" + std::to_string(r));
                for (std::size_t b = 0; b < r; ++b) action[static_cast<std::size_t>(e)][a][b] = parse_integer(src, key, mat[a][b]);
            }
        }
    }
    return GModule(g, std::move(factors), std::move(action), j.value("label", std::string()));
}

CochainClass parse_cocycle(const Source& src, const GModule& m, int degree, const Json& values) {
    if (!values.is_object()) src.fail("cocycle", "cocycle must map \"g1,...,gn\" to coordinate vectors");
    std::map<std::vector<int>, std::vector<Integer>> table;
    const auto resolve = index_resolver(src, m.group().order());
    for (const auto& [key, vec] : values.items()) {
        auto t = parse_tuple(src, strip(key), static_cast<std::size_t>(degree), resolve);
        if (!vec.is_array() || vec.size() != m.rank())
            src.fail(key, "value of \"" + key + "\" needs " + std::to_string(m.rank()) + " coordinates");
        std::vector<Integer> v;
        for (const auto& x : vec) v.push_back(parse_integer(src, key, x));
        table[t] = std::move(v);
    }
    Cochain c = Cochain::from_function(m, degree, [&](const std::vector<int>& t) {
        auto it = table.find(t);
        return it == table.end() ? std::vector<Integer>(m.rank(), 0) : it->second;
    });
    return CochainClass(std::move(c));
}

PointedBraidedCategory parse_category(const Source& src, const Json& j) {
    if (!j.is_object()) src.fail("category", "category must be an object");
    const NumberField field = parse_field(src, require(src, j, "field"));
    if (j.contains("center_of")) return drinfeld_center_pointed(parse_group(src, j.at("center_of")), field);
    const FiniteGroup g = parse_group(src, require(src, j, "group"));
    const int n = g.order();
    const auto resolve = index_resolver(src, n);
    std::map<std::vector<int>, FieldElement> assoc, braid;
    if (j.contains("associator"))
        for (const auto& [key, v] : j.at("associator").items())
            assoc.insert_or_assign(parse_tuple(src, strip(key), 3, resolve), parse_element(src, field, v));
    const bool braided = !j.contains("braiding") ? g.is_abelian() : !j.at("braiding").is_null();
    if (braided && j.contains("braiding"))
        for (const auto& [key, v] : j.at("braiding").items())
            braid.insert_or_assign(parse_tuple(src, strip(key), 2, resolve), parse_element(src, field, v));
    const FieldElement one = FieldElement::one(field);
    auto omega = [&](int a, int b, int c) {
        auto it = assoc.find({a, b, c});
        return it == assoc.end() ? one : it->second;
    };
    std::optional<PointedBraidedCategory::Table2> c;
    if (braided)
        c = [&](int a, int b) {
            auto it = braid.find({a, b});
            return it == braid.end() ? one : it->second;
        };
    return PointedBraidedCategory(g, field, omega, c, j.value("label", std::string()));
}

GaloisAction parse_action(const Source& src, const PointedBraidedCategory& base, const Json& j) {
    const NumberField& K = base.field();
    const int n = base.order();
    std::vector<int> perm;
    for (const auto& p : require(src, j, "perm")) perm.push_back(static_cast<int>(get_int(src, p, "perm")));
    const Json& sa = require(src, j, "scalar_auto");
    FieldElement image = FieldElement::generator(K);
    if (sa.is_string() && (sa == "conj" || sa == "identity")) {
        if (sa == "conj") {
            if (!K.cyclotomic_order()) src.fail("scalar_auto", "\"conj\" needs a cyclotomic field");
            image = image.pow(*K.cyclotomic_order() - 1);
        }
    } else if (sa.is_number_integer()) {
        if (!K.cyclotomic_order()) src.fail("scalar_auto", "an exponent needs a cyclotomic field");
        image = image.pow(get_int(src, sa, "scalar_auto"));
    } else {
        image = parse_element(src, K, sa);
    }
    FieldAutomorphism sigma(K, image);
    const auto resolve = index_resolver(src, n);
    const FieldElement one = FieldElement::one(K);
    std::map<std::vector<int>, FieldElement> J, gamma;
    if (j.contains("J"))
        for (const auto& [key, v] : j.at("J").items())
            J.insert_or_assign(parse_tuple(src, strip(key), 2, resolve), parse_element(src, K, v));
    if (j.contains("gamma"))
        for (const auto& [key, v] : j.at("gamma").items())
            gamma.insert_or_assign(parse_tuple(src, strip(key), 1, resolve), parse_element(src, K, v));
    std::vector<std::string> names;
    if (j.contains("names"))
        for (const auto& s : j.at("names")) names.push_back(s.get<std::string>());
    return GaloisAction(
        base, sigma, perm,
        [&](int a, int b) {
            auto it = J.find({a, b});
            return it == J.end() ? one : it->second;
        },
        [&](int a) {
            auto it = gamma.find({a});
            return it == gamma.end() ? one : it->second;
        },
        names);
}

FusionRing parse_ring(const Source& src, const Json& j) {
    std::vector<std::string> labels;
    for (const auto& b : require(src, j, "basis")) labels.push_back(b.get<std::string>());
    const int r = static_cast<int>(labels.size());
    if (r == 0) src.fail("basis", "empty basis");
    const auto resolve = index_resolver(src, r, labels);
    std::vector<std::vector<std::vector<int>>> N(static_cast<std::size_t>(r),
                                                 std::vector<std::vector<int>>(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0)));
    for (const auto& [key, row] : require(src, j, "N").items()) {
        auto ij = parse_tuple(src, strip(key), 2, resolve);
        if (!row.is_object()) src.fail(key, "N entries map \"k\" to multiplicities");
        for (const auto& [k, mult] : row.items()) {
            const long m = get_int(src, mult, key);
            if (m < 0) src.fail(key, "negative multiplicity");
            N[static_cast<std::size_t>(ij[0])][static_cast<std::size_t>(ij[1])][static_cast<std::size_t>(resolve(strip(k)))] =
                static_cast<int>(m);
        }
    }
    const Json& u = require(src, j, "unit");
    const int unit = u.is_string() ? resolve(u.get<std::string>()) : static_cast<int>(get_int(src, u, "unit"));
    std::vector<int> dual;
    for (const auto& d : require(src, j, "dual")) dual.push_back(d.is_string() ? resolve(d.get<std::string>()) : static_cast<int>(get_int(src, d, "dual")));
    std::vector<EndData> end;
    if (j.contains("end"))
        for (const auto& e : j.at("end"))
            end.push_back({static_cast<int>(get_int(src, e.value("dim", Json(1)), "dim")),
                           static_cast<int>(get_int(src, e.value("k", Json(1)), "k")),
                           static_cast<int>(get_int(src, e.value("n", Json(1)), "n"))});
    return FusionRing(labels, N, unit, dual, end, j.value("galois_nontrivial", false));
}

GradedSkeleton parse_skeleton(const Source& src, const Json& j) {
    const FiniteGroup g = parse_group(src, require(src, j, "group"));
    if (j.contains("from_group")) {
        auto s = GradedSkeleton::from_group(g, j.at("from_group").get<std::string>());
        s.validate();
        return s;
    }
    GradedSkeleton s{g, {}, 0, {}};
    std::vector<std::string> labels;
    for (const auto& o : require(src, j, "objects")) {
        const std::string label = require(src, o, "label").get<std::string>();
        const long d = get_int(src, require(src, o, "degree"), "degree");
        s.objects.push_back({label, static_cast<int>(d)});
        labels.push_back(label);
    }
    const auto resolve = index_resolver(src, static_cast<int>(labels.size()), labels);
    const Json& u = require(src, j, "unit");
    s.unit = u.is_string() ? resolve(u.get<std::string>()) : static_cast<int>(get_int(src, u, "unit"));
    for (const auto& [key, targets] : require(src, j, "support").items()) {
        auto cd = parse_tuple(src, strip(key), 2, resolve);
        std::set<int> out;
        for (const auto& t : targets) out.insert(t.is_string() ? resolve(t.get<std::string>()) : static_cast<int>(get_int(src, t, key)));
        s.fusion_support[{cd[0], cd[1]}] = std::move(out);
    }
    s.validate();
    return s;
}

ParsedObject parse_input(const Source& src) {
    const Json& j = src.root();
    if (j.is_object() && j.contains("builtin")) {
        if (j.at("builtin") != "appendix-a") src.fail("builtin", "the only built-in fixture is \"appendix-a\"");
        return GaloisAction::appendix_a();
    }
    if (j.is_object() && j.contains("perm")) return parse_action(src, parse_category(src, require(src, j, "category")), j);
    if (j.is_object() && j.contains("cocycle")) {
        FiniteGroup g = parse_group(src, require(src, j, "group"));
        GModule m = parse_module(src, g, require(src, j, "module"));
        const long n = get_int(src, require(src, j, "degree"), "degree");
        if (n < 0) src.fail("degree", "negative degree");
        return parse_cocycle(src, m, static_cast<int>(n), j.at("cocycle"));
    }
    if (j.is_object() && (j.contains("objects") || j.contains("from_group"))) return parse_skeleton(src, j);
    if (j.is_object() && (j.contains("basis") || j.contains("N"))) return parse_ring(src, j);
    if (j.is_object() && j.contains("factors")) return parse_module(src, parse_group(src, require(src, j, "group")), j);
    if (j.is_object() && (j.contains("associator") || j.contains("braiding") || j.contains("center_of") || j.contains("field")))
        return parse_category(src, j);
    if (j.is_string() || (j.is_object() && (j.contains("cyclic") || j.contains("table") || j.contains("product"))))
        return parse_group(src, j);
    throw ParseError(1, src.name() + ": unrecognized input (expected a group, module, cocycle, category, action, ring or skeleton)");
}

ParsedObject parse_input(const std::string& path) { return parse_input(Source::from_file(path)); }

std::string kind(const ParsedObject& obj) {
    static const char* names[] = {"group", "module", "cocycle", "category", "action", "ring", "skeleton"};
    return names[obj.index()];
}

Json to_json(const FiniteGroup& g) {
    const auto& f = g.cyclic_factors();
    if (f.size() == 1) return Json{{"cyclic", f[0]}};
    if (f.size() > 1) return Json{{"product", f}};
    if (g.order() == 1) return Json{{"cyclic", 1}};
    return Json{{"table", g.table()}};
}

Json to_json(const NumberField& f) {
    if (f.degree() == 1 && f.min_poly() == Polynomial(std::vector<Rational>{0, 1})) return "Q";
    if (f.cyclotomic_order()) return Json{{"cyclotomic", *f.cyclotomic_order()}};
    Json c = Json::array();
    for (const auto& x : f.min_poly().coeffs()) c.push_back(rational_string(x));
    return Json{{"minpoly", c}};
}

Json to_json(const FieldElement& x) {
    if (x.is_rational()) return rational_string(x.coeffs()[0]);
    Json c = Json::array();
    for (const auto& q : x.coeffs()) c.push_back(rational_string(q));
    return c;
}

Json to_json(const GModule& m) {
    Json factors = Json::array();
    for (const auto& f : m.factors()) factors.push_back(integer_json(f));
    Json action = Json::object();
    for (int g = 0; g < m.group().order(); ++g) {
        Json mat = Json::array();
        for (const auto& row : m.action(g)) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(integer_json(x));
            mat.push_back(r);
        }
        action[std::to_string(g)] = mat;
    }
    return Json{{"group", to_json(m.group())}, {"factors", factors}, {"action", action}};
}

Json to_json(const CochainClass& c) {
    const Cochain& f = c.cochain();
    Json values = Json::object();
    for (std::size_t i = 0; i < f.tuple_count(); ++i) {
        bool zero = true;
        for (const auto& x : f.at(i)) zero = zero && x == 0;
        if (zero) continue;
        Json v = Json::array();
        for (const auto& x : f.at(i)) v.push_back(integer_json(x));
        values[tuple_key(f.tuple_at(i))] = v;
    }
    Json m = to_json(c.module());
    m.erase("group");
    return Json{{"group", to_json(c.group())}, {"module", m}, {"degree", c.degree()}, {"cocycle", values}};
}

Json to_json(const PointedBraidedCategory& cat) {
    const int n = cat.order();
    Json assoc = Json::object();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (!cat.omega(a, b, c).is_one()) assoc[tuple_key({a, b, c})] = to_json(cat.omega(a, b, c));
    Json out{{"group", to_json(cat.group())}, {"field", to_json(cat.field())}, {"associator", assoc}};
    if (cat.has_braiding()) {
        Json braid = Json::object();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!cat.c(a, b).is_one()) braid[tuple_key({a, b})] = to_json(cat.c(a, b));
        out["braiding"] = braid;
    } else {
        out["braiding"] = nullptr;
    }
    return out;
}

Json to_json(const GaloisAction& action) {
    const int n = action.order();
    Json perm = Json::array(), J = Json::object(), gamma = Json::object(), names = Json::array();
    for (int g = 0; g < n; ++g) {
        perm.push_back(action.perm(g));
        names.push_back(action.name(g));
        if (!action.gamma(g).is_one()) gamma[std::to_string(g)] = to_json(action.gamma(g));
        for (int h = 0; h < n; ++h)
            if (!action.J(g, h).is_one()) J[tuple_key({g, h})] = to_json(action.J(g, h));
    }
    Json sa = Json::array();
    for (const auto& q : action.sigma().image_of_generator().coeffs()) sa.push_back(rational_string(q));
    return Json{{"category", to_json(action.base())}, {"perm", perm},  {"scalar_auto", sa},
                {"J", J},                             {"gamma", gamma}, {"names", names}};
}

// Labels rather than indices: basis labels such as "1" would shadow index 1.
Json to_json(const FusionRing& ring) {
    const int r = ring.rank();
    Json N = Json::object(), dual = Json::array(), end = Json::array();
    for (int i = 0; i < r; ++i) {
        dual.push_back(ring.label(ring.dual(i)));
        end.push_back(Json{{"dim", ring.end(i).dim}, {"k", ring.end(i).k}, {"n", ring.end(i).n}});
        for (int j = 0; j < r; ++j) {
            Json row = Json::object();
            for (int k = 0; k < r; ++k)
                if (ring.N(i, j, k) != 0) row[ring.label(k)] = ring.N(i, j, k);
            if (!row.empty()) N[ring.label(i) + "," + ring.label(j)] = row;
        }
    }
    Json out{{"basis", ring.labels()}, {"N", N}, {"unit", ring.label(ring.unit())}, {"dual", dual}, {"end", end}};
    if (ring.galois_nontrivial()) out["galois_nontrivial"] = true;
    return out;
}

Json to_json(const GradedSkeleton& skel) {
    Json objects = Json::array(), support = Json::object();
    auto label = [&](int i) { return skel.objects[static_cast<std::size_t>(i)].label; };
    for (const auto& o : skel.objects) objects.push_back(Json{{"label", o.label}, {"degree", o.galois_degree}});
    for (const auto& [cd, es] : skel.fusion_support) {
        Json targets = Json::array();
        for (int e : es) targets.push_back(label(e));
        support[label(cd.first) + "," + label(cd.second)] = targets;
    }
    return Json{{"group", to_json(skel.group)}, {"objects", objects}, {"unit", label(skel.unit)}, {"support", support}};
}

Json to_json(const ParsedObject& obj) {
    return std::visit([](const auto& x) { return to_json(x); }, obj);
}

}  // namespace wittkit::cli
