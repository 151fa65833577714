#include "sl2wt/io.hpp"

#include <cctype>
#include <cstdio>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace sl2wt {

using json = nlohmann::json;

namespace {

std::string strip(const std::string& text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

json rat_json(const Rational& x) { return json::array({to_int64(numer(x)), to_int64(denom(x))}); }

Rational rat_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("rational must be [num, den]");
    std::int64_t d = j[1].get<std::int64_t>();
    if (d == 0) throw ParseError("zero denominator");
    return make_rational(j[0].get<std::int64_t>(), d);
}

json weight_j(const Weight& w) { return json{{"a", rat_json(w.a)}, {"b", rat_json(w.b)}}; }

Weight weight_from(const json& j) {
    if (j.is_string()) return parse_weight(j.get<std::string>());
    if (j.is_number_integer()) return Weight(Rational(j.get<std::int64_t>()));
    if (!j.is_object() || !j.contains("a")) throw ParseError("weight must be {\"a\":[n,d],\"b\":[n,d]}");
    Weight w(rat_from(j.at("a")));
    if (j.contains("b")) w.b = rat_from(j.at("b"));
    return w;
}

json c_label_j(const SimpleCLabel& x) {
    json base{{"type", x.is_typical() ? "E" : "D+"}, {"r", x.r}, {"s", x.s}};
    if (x.is_typical()) base["lam"] = weight_j(x.lam);
    return json{{"cat", "C"}, {"flow", x.flow}, {"base", base}};
}

json a_label_j(const SimpleALabel& x) {
    return json{{"cat", "A"}, {"r", x.r}, {"s", x.s}, {"flow", x.flow}, {"lam", weight_j(x.lam)}};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad label: ") + e.what());
    }
}

std::int64_t flow_of(const std::smatch& m, std::size_t i) {
    return m[i].matched ? std::stoll(m[i].str()) : 0;
}

template <class L>
json layers_j(const Layers<L>& layers, json (*f)(const L&)) {
    json out = json::array();
    for (const auto& layer : layers) {
        json l = json::array();
        for (const auto& x : layer) l.push_back(f(x));
        out.push_back(l);
    }
    return out;
}

json c_object_j(const AdmissibleLevel& level, const CObject& x) {
    using Tag = CObject::Tag;
    json j{{"cat", "C"}};
    switch (x.tag) {
    case Tag::Simple: j["tag"] = "Simple"; j["label"] = c_label_j(x.label); break;
    case Tag::Eminus: j["tag"] = "Eminus"; break;
    case Tag::Eplus: j["tag"] = "Eplus"; break;
    case Tag::Lr0: j["tag"] = "Lr0"; break;
    case Tag::Dminus: j["tag"] = "Dminus"; break;
    case Tag::Projective: j["tag"] = "Projective"; break;
    case Tag::VacuumExtensionA: j["tag"] = "VacuumExtensionA"; break;
    case Tag::DirectSum: {
        j["tag"] = "DirectSum";
        json parts = json::array();
        for (const auto& p : x.parts) parts.push_back(c_object_j(level, p));
        j["parts"] = parts;
        return j;
    }
    }
    if (x.tag != Tag::Simple) {
        if (x.tag != Tag::VacuumExtensionA) j["r"] = x.r;
        if (x.tag != Tag::VacuumExtensionA && x.tag != Tag::Lr0) j["s"] = x.s;
        j["flow"] = x.flow;
    }
    j["layers"] = layers_j<SimpleCLabel>(loewy_C(level, x), c_label_j);
    return j;
}

json a_object_j(const AdmissibleLevel& level, const AObject& x) {
    using Tag = AObject::Tag;
    json j{{"cat", "A"}};
    switch (x.tag) {
    case Tag::SimpleA: j["tag"] = "Simple"; j["label"] = a_label_j(x.label); break;
    case Tag::R:
        j["tag"] = "R"; j["r"] = x.r; j["s"] = x.s; j["lam"] = weight_j(x.lam); j["flow"] = x.flow;
        break;
    case Tag::M: j["tag"] = "M"; j["r"] = x.r; j["s"] = x.s; j["flow"] = x.flow; break;
    case Tag::N: j["tag"] = "N"; break;
    case Tag::DirectSum: {
        j["tag"] = "DirectSum";
        json parts = json::array();
        for (const auto& p : x.parts) parts.push_back(a_object_j(level, p));
        j["parts"] = parts;
        return j;
    }
    }
    j["layers"] = layers_j<SimpleALabel>(loewy_A(level, x), a_label_j);
    return j;
}

template <class L>
json groth_j(const Groth<L>& g, json (*f)(const L&)) {
    json out = json::array();
    for (const auto& [x, c] : g.terms()) out.push_back(json{{"label", f(x)}, {"mult", c}});
    return out;
}

json mult_j(const MultiplicityCheck& m) {
    return json{{"label", c_label_j(m.label)}, {"expected", m.expected}, {"got_clr", m.got_clr},
                {"got_cor", m.got_cor}, {"pass", m.pass}};
}

}  // namespace

bool is_a_label_text(const std::string& text) {
    std::string s = strip(text);
    if (!s.empty() && s[0] == '{') {
        json j = parse_json(s);
        return j.is_object() && j.value("cat", "") == "A";
    }
    return s.rfind("M(", 0) == 0;
}

SimpleCLabel parse_c_label(const AdmissibleLevel& level, const std::string& text) {
    std::string s = strip(text);
    if (!s.empty() && s[0] == '{') {
        json j = parse_json(s);
        return guarded([&] {
            if (j.value("cat", "C") != "C") throw ParseError("expected a C label");
            const json& b = j.at("base");
            std::string type = b.at("type").get<std::string>();
            RawCLabel raw;
            raw.flow = j.value("flow", std::int64_t{0});
            raw.r = b.at("r").get<int>();
            raw.s = b.value("s", 0);
            if (type == "D+") raw.kind = RawCLabel::Kind::DPlus;
            else if (type == "D-") raw.kind = RawCLabel::Kind::DMinus;
            else if (type == "L") raw.kind = RawCLabel::Kind::L;
            else if (type == "E") {
                raw.kind = RawCLabel::Kind::E;
                raw.lam = weight_from(b.at("lam"));
            } else {
                throw ParseError("unknown base type '" + type + "'");
            }
            return canonicalize_simple(level, raw);
        });
    }
    static const std::regex d_re(R"(^(D\+|D-)\((-?\d+),(-?\d+)\)(?:@(-?\d+))?$)");
    static const std::regex l_re(R"(^L\((-?\d+)\)(?:@(-?\d+))?$)");
    static const std::regex e_re(R"(^E\(([^;()]+);(-?\d+),(-?\d+)\)(?:@(-?\d+))?$)");
    std::smatch m;
    if (std::regex_match(s, m, d_re)) {
        auto kind = m[1].str() == "D+" ? RawCLabel::Kind::DPlus : RawCLabel::Kind::DMinus;
        return canonicalize_simple(level, RawCLabel{kind, std::stoi(m[2].str()), std::stoi(m[3].str()), {}, flow_of(m, 4)});
    }
    if (std::regex_match(s, m, l_re))
        return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::L, std::stoi(m[1].str()), 0, {}, flow_of(m, 2)});
    if (std::regex_match(s, m, e_re))
        return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::E, std::stoi(m[2].str()), std::stoi(m[3].str()),
                                                    parse_weight(m[1].str()), flow_of(m, 4)});
    throw ParseError("cannot read C label '" + text + "'");
}

SimpleALabel parse_a_label(const AdmissibleLevel& level, const std::string& text) {
    std::string s = strip(text);
    if (!s.empty() && s[0] == '{') {
        json j = parse_json(s);
        return guarded([&] {
            if (j.value("cat", "A") != "A") throw ParseError("expected an A label");
            return a_label(level, j.at("r").get<int>(), j.at("s").get<int>(), j.at("flow").get<std::int64_t>(),
                           weight_from(j.at("lam")));
        });
    }
    static const std::regex a_re(R"(^M\((-?\d+),(-?\d+)\)xPi\((-?\d+);([^()]+)\)$)");
    std::smatch m;
    if (std::regex_match(s, m, a_re))
        return a_label(level, std::stoi(m[1].str()), std::stoi(m[2].str()), std::stoll(m[3].str()),
                       parse_weight(m[4].str()));
    throw ParseError("cannot read A label '" + text + "'");
}

std::string to_json(const Weight& w) { return weight_j(w).dump(); }
Weight weight_from_json(const std::string& text) { return guarded([&] { return weight_from(parse_json(text)); }); }
std::string to_json(const SimpleCLabel& x) { return c_label_j(x).dump(); }
std::string to_json(const SimpleALabel& x) { return a_label_j(x).dump(); }
std::string to_json(const AdmissibleLevel& level, const CObject& x) { return c_object_j(level, x).dump(); }
std::string to_json(const AdmissibleLevel& level, const AObject& x) { return a_object_j(level, x).dump(); }
std::string to_json(const GrothC& x) { return groth_j<SimpleCLabel>(x, c_label_j).dump(); }
std::string to_json(const GrothA& x) { return groth_j<SimpleALabel>(x, a_label_j).dump(); }

std::string to_json(const Report& rep) {
    json j;
    j["level"] = to_string(rep.level);
    json f = json::array(), e = json::array();
    for (const auto& a : rep.step1.factors) f.push_back(a_label_j(a));
    for (const auto& a : rep.step1.expected) e.push_back(a_label_j(a));
    j["step1"] = json{{"factors", f}, {"expected", e}, {"all_local", rep.step1.all_local},
                      {"matches", rep.step1.matches}, {"unit_induction", rep.step1.unit_induction},
                      {"pass", rep.step1.pass}};
    json t = json::array(), a = json::array();
    for (const auto& m : rep.step2.typical_multiplicity_checks) t.push_back(mult_j(m));
    for (const auto& m : rep.step2.atypical_multiplicity_checks) a.push_back(mult_j(m));
    j["step2"] = json{{"typical_multiplicity_checks", t}, {"atypical_multiplicity_checks", a},
                      {"pass", rep.step2.pass}};
    json d = json::array();
    for (const auto& c : rep.step3.duality_checks) d.push_back(json{{"label", c_label_j(c.label)}, {"pass", c.pass}});
    j["step3"] = json{{"duality_checks", d}, {"pass", rep.step3.pass}};
    j["step4"] = json{{"witness", a_label_j(rep.step4.z)}, {"exponent", weight_j(rep.step4.exponent)},
                      {"pass", rep.step4.pass}};
    j["verdict"] = rep.verdict;
    return j.dump(2);
}

template <class L>
static std::string diagram(const Layers<L>& layers) {
    std::ostringstream out;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (i > 0) out << "    |\n";
        out << "  ";
        for (std::size_t j = 0; j < layers[i].size(); ++j) out << (j ? "   " : "") << to_string(layers[i][j]);
        out << "\n";
    }
    return out.str();
}

std::string loewy_diagram(const LayersA& layers) { return diagram(layers); }
std::string loewy_diagram(const LayersC& layers) { return diagram(layers); }

static const char* verdict_word(bool ok) { return ok ? "PASS" : "FAIL"; }

template <class C>
static std::size_t passed(const C& checks) {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

std::string render_report(const Report& rep) {
    std::ostringstream out;
    out << "level " << to_string(rep.level) << "  (k = " << to_string(rep.level.k) << ", c = "
        << to_string(rep.level.c) << ")\n";
    out << "step 1 " << verdict_word(rep.step1.pass) << "  N factors:";
    for (const auto& a : rep.step1.factors) out << " " << to_string(a);
    out << (rep.step1.all_local ? "  (all local)" : "  (non-local factor)") << "\n";
    out << "step 2 " << verdict_word(rep.step2.pass) << "  atypical "
        << passed(rep.step2.atypical_multiplicity_checks) << "/" << rep.step2.atypical_multiplicity_checks.size()
        << ", typical " << passed(rep.step2.typical_multiplicity_checks) << "/"
        << rep.step2.typical_multiplicity_checks.size() << "\n";
    for (const auto* group : {&rep.step2.atypical_multiplicity_checks, &rep.step2.typical_multiplicity_checks})
        for (const auto& m : *group)
            if (!m.pass)
                out << "    " << to_string(m.label) << ": expected " << m.expected << ", got " << m.got_clr << " / "
                    << m.got_cor << "\n";
    out << "step 3 " << verdict_word(rep.step3.pass) << "  duality square " << passed(rep.step3.duality_checks) << "/"
        << rep.step3.duality_checks.size() << "\n";
    for (const auto& c : rep.step3.duality_checks)
        if (!c.pass) out << "    " << to_string(c.label) << "\n";
    out << "step 4 " << verdict_word(rep.step4.pass) << "  witness " << to_string(rep.step4.z) << ", exponent "
        << to_string(rep.step4.exponent) << "\n";
    out << "verdict " << (rep.verdict ? "true" : "false") << "\n";
    return out.str();
}

std::string kac_table_text(const AdmissibleLevel& level) {
    std::ostringstream out;
    out << "level " << to_string(level) << "  t = " << to_string(level.t) << "  k = " << to_string(level.k)
        << "  c = " << to_string(level.c) << "\n";
    out << "  r  s  lambda        Delta         nu            h\n";
    for (int r = 1; r < level.u; ++r) {
        for (int s = 0; s <= level.v; ++s) {
            KacData d = kac_data(level, r, s);
            char buf[160];
            std::snprintf(buf, sizeof buf, "%3d%3d  %-13s %-13s %-13s %s\n", r, s, to_string(d.lambda_rs).c_str(),
                          to_string(d.delta_rs).c_str(), to_string(d.nu_rs).c_str(),
                          d.h_rs ? to_string(*d.h_rs).c_str() : "-");
            out << buf;
        }
    }
    return out.str();
}

std::string kac_table_json(const AdmissibleLevel& level) {
    json rows = json::array();
    for (int r = 1; r < level.u; ++r) {
        for (int s = 0; s <= level.v; ++s) {
            KacData d = kac_data(level, r, s);
            json row{{"r", r}, {"s", s}, {"lambda", rat_json(d.lambda_rs)}, {"delta", rat_json(d.delta_rs)},
                     {"nu", rat_json(d.nu_rs)}};
            if (d.h_rs) row["h"] = rat_json(*d.h_rs);
            rows.push_back(row);
        }
    }
    return json{{"level", to_string(level)}, {"t", rat_json(level.t)}, {"k", rat_json(level.k)},
                {"c", rat_json(level.c)}, {"table", rows}}
        .dump(2);
}

}  // namespace sl2wt
