#include "petalkit/json_io.hpp"

#include <stdexcept>

namespace petalkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

int get_int(const json& j, const char* ctx) {
    if (!j.is_number_integer()) bad(std::string(ctx) + " must be an integer");
    return j.get<int>();
}

std::vector<int> get_int_vec(const json& j, const char* ctx) {
    if (!j.is_array()) bad(std::string(ctx) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(get_int(e, ctx));
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object()) bad("expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

}  // namespace

json to_json(const braid::BraidWord& w) {
    json letters = json::array();
    for (const auto& l : w.letters()) letters.push_back({l.index, l.sign});
    return json{{"strands", w.strands()}, {"letters", std::move(letters)}};
}

braid::BraidWord braid_from_json(const json& j) {
    int strands = get_int(field(j, "strands"), "strands");
    const json& letters = field(j, "letters");
    if (!letters.is_array()) bad("letters must be an array");
    std::vector<braid::Letter> ls;
    ls.reserve(letters.size());
    for (const auto& e : letters) {
        if (!e.is_array() || e.size() != 2) bad("each letter must be [index, sign]");
        int idx = get_int(e[0], "letter index");
        int sgn = get_int(e[1], "letter sign");
        if (sgn != 1 && sgn != -1) bad("letter sign must be 1 or -1");
        ls.push_back({idx, sgn});
    }
    try {
        return braid::BraidWord(strands, std::move(ls));
    } catch (const std::exception& e) {
        bad(e.what());
    }
}

json to_json(const braid::CanonicalBraid& cb) {
    json factors = json::array();
    for (const auto& f : cb.factors) factors.push_back(f.image());
    return json{{"strands", cb.strands}, {"inf", cb.inf}, {"factors", std::move(factors)}};
}

braid::CanonicalBraid canonical_from_json(const json& j) {
    braid::CanonicalBraid cb;
    cb.strands = get_int(field(j, "strands"), "strands");
    cb.inf = get_int(field(j, "inf"), "inf");
    const json& factors = field(j, "factors");
    if (!factors.is_array()) bad("factors must be an array");
    for (const auto& f : factors) {
        try {
            cb.factors.emplace_back(get_int_vec(f, "factor entry"));
        } catch (const std::invalid_argument& e) {
            bad(e.what());
        }
        if (cb.factors.back().n() != cb.strands) bad("factor size != strands");
    }
    return cb;
}

json to_json(const grid::GridDiagram& gd) {
    return json{{"size", gd.size}, {"x", gd.x_rows}, {"o", gd.o_rows}};
}

grid::GridDiagram grid_from_json(const json& j) {
    grid::GridDiagram gd;
    gd.size = get_int(field(j, "size"), "size");
    gd.x_rows = get_int_vec(field(j, "x"), "x entry");
    gd.o_rows = get_int_vec(field(j, "o"), "o entry");
    if (!grid::grid_valid(gd)) bad("not a valid knot grid diagram");
    return gd;
}

json to_json(const grid::PDCode& pd) {
    json crossings = json::array();
    for (const auto& c : pd.crossings)
        crossings.push_back({c.a, c.b, c.c, c.d, c.sign > 0 ? "+" : "-"});
    return json{{"crossings", std::move(crossings)}};
}

grid::PDCode pd_from_json(const json& j) {
    grid::PDCode pd;
    const json& crossings = field(j, "crossings");
    if (!crossings.is_array()) bad("crossings must be an array");
    for (const auto& e : crossings) {
        if (!e.is_array() || e.size() != 5) bad("each crossing must be [a,b,c,d,sign]");
        grid::PDCrossing c;
        c.a = get_int(e[0], "crossing label");
        c.b = get_int(e[1], "crossing label");
        c.c = get_int(e[2], "crossing label");
        c.d = get_int(e[3], "crossing label");
        if (!e[4].is_string()) bad("crossing sign must be \"+\" or \"-\"");
        std::string s = e[4].get<std::string>();
        if (s == "+") c.sign = 1;
        else if (s == "-") c.sign = -1;
        else bad("crossing sign must be \"+\" or \"-\"");
        pd.crossings.push_back(c);
    }
    try {
        grid::validate_pd(pd);
    } catch (const std::exception& e) {
        bad(e.what());
    }
    return pd;
}

json to_json(const petal::PetalPermutation& pp) {
    return json{{"levels", pp.levels}};
}

petal::PetalPermutation petal_from_json(const json& j) {
    petal::PetalPermutation pp{get_int_vec(field(j, "levels"), "level")};
    if (!petal::petal_valid(pp)) bad("not a valid petal permutation");
    return pp;
}

json to_json(const invariants::LaurentPoly& p, const std::string& var) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
    return json{{"var", var}, {"terms", std::move(terms)}};
}

invariants::LaurentPoly laurent_from_json(const json& j, std::string* var) {
    const json& v = field(j, "var");
    if (!v.is_string()) bad("var must be a string");
    std::string vs = v.get<std::string>();
    if (vs != "t" && vs != "A") bad("var must be \"t\" or \"A\"");
    if (var) *var = vs;
    const json& terms = field(j, "terms");
    if (!terms.is_array()) bad("terms must be an array");
    invariants::LaurentPoly p;
    for (const auto& e : terms) {
        if (!e.is_array() || e.size() != 2) bad("each term must be [exponent, coefficient]");
        int exp = get_int(e[0], "term exponent");
        if (!e[1].is_number_integer()) bad("term coefficient must be an integer");
        long long coeff = e[1].get<long long>();
        p += invariants::LaurentPoly::term(coeff, exp);
    }
    return p;
}

std::string dump_line(const json& j) { return j.dump(); }

}  // namespace petalkit::io
