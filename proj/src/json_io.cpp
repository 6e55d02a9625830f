#include "mahlerkit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace mahlerkit::io {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as \"num/den\" string or integer, got " + j.dump());
}

json to_json(const UniPoly<Rational>& p) {
    json arr = json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
    return arr;
}

UniPoly<Rational> poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a polynomial as a JSON array");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return UniPoly<Rational>(std::move(c));
}

json to_json(const Cyclo& c) {
    json coeffs = json::array();
    for (const auto& a : c.coords()) coeffs.push_back(to_json(a));
    return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return Cyclo(rational_from_json(j));
    long d = j.at("conductor").get<long>();
    return Cyclo::from_poly(d, poly_from_json(j.at("coeffs")));
}

json to_json(const TruncSeries<Rational>& s) {
    json coeffs = json::array();
    for (long i = 0; i <= s.order(); ++i) coeffs.push_back(to_json(s.coeff(i)));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncSeries<Rational> series_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
    long order = j.at("order").get<long>();
    if (order != static_cast<long>(c.size()) - 1)
        throw std::invalid_argument("series order does not match coefficient count");
    return TruncSeries<Rational>(std::move(c));
}

json to_json(const TruncSeries<Cyclo>& s) {
    json coeffs = json::array();
    for (long i = 0; i <= s.order(); ++i) coeffs.push_back(to_json(s.coeff(i)));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const LRSSpec& s) {
    json rec = json::array(), init = json::array();
    for (const auto& c : s.rec) rec.push_back(to_json(c));
    for (const auto& c : s.init) init.push_back(to_json(c));
    return json{{"rec", rec}, {"init", init}};
}

LRSSpec lrs_from_json(const json& j) {
    LRSSpec s;
    for (const auto& e : j.at("rec")) s.rec.push_back(rational_from_json(e));
    for (const auto& e : j.at("init")) s.init.push_back(rational_from_json(e));
    if (s.rec.size() != s.init.size())
        throw std::invalid_argument("LRS init length must equal recurrence order");
    return s;
}

json to_json(const EventuallyPeriodic& e) {
    json pre = json::array(), per = json::array();
    for (const auto& c : e.pre) pre.push_back(to_json(c));
    for (const auto& c : e.per) per.push_back(to_json(c));
    return json{{"pre", pre}, {"per", per}};
}

EventuallyPeriodic chi_from_json(const json& j) {
    EventuallyPeriodic e;
    for (const auto& x : j.at("pre")) e.pre.push_back(rational_from_json(x));
    for (const auto& x : j.at("per")) e.per.push_back(rational_from_json(x));
    if (e.per.empty()) throw std::invalid_argument("eventually periodic: empty period");
    return e;
}

json to_json(const LinRep& r) {
    json u = json::array(), v = json::array(), mats = json::array();
    for (const auto& c : r.u) u.push_back(to_json(c));
    for (const auto& c : r.v) v.push_back(to_json(c));
    for (const auto& m : r.mats) {
        json rows = json::array();
        for (long i = 0; i < r.dim; ++i) {
            json row = json::array();
            for (long j2 = 0; j2 < r.dim; ++j2)
                row.push_back(to_json(m[static_cast<size_t>(i * r.dim + j2)]));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    return json{{"k", r.k}, {"u", u}, {"mats", mats}, {"v", v}};
}

LinRep linrep_from_json(const json& j) {
    LinRep r;
    r.k = j.at("k").get<long>();
    for (const auto& e : j.at("u")) r.u.push_back(rational_from_json(e));
    for (const auto& e : j.at("v")) r.v.push_back(rational_from_json(e));
    r.dim = static_cast<long>(r.u.size());
    if (r.dim < 1 || static_cast<long>(r.v.size()) != r.dim)
        throw std::invalid_argument("linrep: u and v must have equal positive length");
    const json& mats = j.at("mats");
    if (static_cast<long>(mats.size()) != r.k)
        throw std::invalid_argument("linrep: need one matrix per digit");
    for (const auto& m : mats) {
        std::vector<Rational> flat;
        if (static_cast<long>(m.size()) != r.dim)
            throw std::invalid_argument("linrep: matrix row count mismatch");
        for (const auto& row : m) {
            if (static_cast<long>(row.size()) != r.dim)
                throw std::invalid_argument("linrep: matrix column count mismatch");
            for (const auto& e : row) flat.push_back(rational_from_json(e));
        }
        r.mats.push_back(std::move(flat));
    }
    return r;
}

json to_json(const MultiplicativeDecomposition& d) {
    return json{{"p", d.p}, {"g", to_json(d.g)}, {"r", d.r}, {"chi", to_json(d.chi)}};
}

MultiplicativeDecomposition decomposition_from_json(const json& j) {
    MultiplicativeDecomposition d;
    d.p = j.at("p").get<long>();
    d.g = lrs_from_json(j.at("g"));
    d.r = j.at("r").get<long>();
    d.chi = chi_from_json(j.at("chi"));
    return d;
}

json to_json(const MahlerEquation<Rational>& eq) {
    json coeffs = json::array();
    for (const auto& c : eq.coeffs) coeffs.push_back(to_json(c));
    return json{{"k", eq.k}, {"coeffs", coeffs}, {"inhom", to_json(eq.inhom)}};
}

MahlerEquation<Rational> equation_from_json(const json& j) {
    MahlerEquation<Rational> eq;
    eq.k = j.at("k").get<long>();
    if (eq.k < 2) throw std::invalid_argument("equation: k must be >= 2");
    for (const auto& c : j.at("coeffs")) eq.coeffs.push_back(poly_from_json(c));
    if (j.contains("inhom")) eq.inhom = poly_from_json(j.at("inhom"));
    return eq;
}

json to_json(const OrePoly<Rational>& op) {
    json coeffs = json::array();
    for (long i = 0; i <= op.degree(); ++i)
        coeffs.push_back(json{{"num", to_json(op.coeff(i).num())},
                              {"den", to_json(op.coeff(i).den())}});
    return json{{"k", op.base()}, {"coeffs", coeffs}};
}

OrePoly<Rational> ore_from_json(const json& j) {
    long k = j.at("k").get<long>();
    std::vector<FracPoly<Rational>> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.emplace_back(poly_from_json(c.at("num")), poly_from_json(c.at("den")));
    return OrePoly<Rational>(k, std::move(coeffs));
}

namespace {

const char* builtin_name(Builtin b) {
    switch (b) {
    case Builtin::Identity: return "identity";
    case Builtin::One: return "one";
    case Builtin::TwoAdicPower: return "two_adic_power";
    case Builtin::OddPart: return "odd_part";
    case Builtin::PrincipalChar: return "principal_char";
    case Builtin::QuadResChar: return "quad_res_char";
    }
    throw std::logic_error("unreachable");
}

Builtin builtin_from_name(const std::string& s) {
    if (s == "identity") return Builtin::Identity;
    if (s == "one") return Builtin::One;
    if (s == "two_adic_power") return Builtin::TwoAdicPower;
    if (s == "odd_part") return Builtin::OddPart;
    if (s == "principal_char") return Builtin::PrincipalChar;
    if (s == "quad_res_char") return Builtin::QuadResChar;
    throw std::invalid_argument("unknown builtin sequence '" + s + "'");
}

struct SpecToJson {
    json operator()(const ExplicitValues& e) const {
        json vals = json::array();
        for (const auto& v : e.values) vals.push_back(to_json(v));
        return json{{"type", "values"}, {"values", vals}, {"offset", e.offset}};
    }
    json operator()(const RationalSpec& r) const {
        return json{{"type", "rational"}, {"num", to_json(r.num)}, {"den", to_json(r.den)}};
    }
    json operator()(const LinRep& r) const {
        return json{{"type", "linrep"}, {"rep", to_json(r)}};
    }
    json operator()(const LRSSpec& s) const {
        return json{{"type", "lrs"}, {"lrs", to_json(s)}};
    }
    json operator()(const MultiplicativeDecomposition& d) const {
        return json{{"type", "decomposition"}, {"dec", to_json(d)}};
    }
    json operator()(const BuiltinSpec& b) const {
        json out{{"type", "builtin"}, {"name", builtin_name(b.which)}};
        if (b.which == Builtin::PrincipalChar || b.which == Builtin::QuadResChar)
            out["modulus"] = b.modulus;
        return out;
    }
};

} // namespace

json to_json(const SequenceSpec& spec) { return std::visit(SpecToJson{}, spec.source); }

SequenceSpec spec_from_json(const json& j) {
    if (j.contains("values") && !j.contains("type")) {
        ExplicitValues e;
        for (const auto& v : j.at("values")) e.values.push_back(rational_from_json(v));
        e.offset = j.value("offset", 1);
        if (e.offset != 0 && e.offset != 1)
            throw std::invalid_argument("sequence offset must be 0 or 1");
        return SequenceSpec{e};
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "values") {
        ExplicitValues e;
        for (const auto& v : j.at("values")) e.values.push_back(rational_from_json(v));
        e.offset = j.value("offset", 1);
        return SequenceSpec{e};
    }
    if (type == "rational") {
        RationalSpec r{poly_from_json(j.at("num")), poly_from_json(j.at("den"))};
        if (r.den.coeff(0).is_zero()) throw std::invalid_argument("rational spec: Q(0) = 0");
        return SequenceSpec{r};
    }
    if (type == "linrep") return SequenceSpec{linrep_from_json(j.at("rep"))};
    if (type == "lrs") return SequenceSpec{lrs_from_json(j.at("lrs"))};
    if (type == "decomposition") return SequenceSpec{decomposition_from_json(j.at("dec"))};
    if (type == "builtin") {
        BuiltinSpec b;
        b.which = builtin_from_name(j.at("name").get<std::string>());
        b.modulus = j.value("modulus", 1L);
        return SequenceSpec{b};
    }
    throw std::invalid_argument("unknown sequence spec type '" + type + "'");
}

json to_json(const NegligibilityCertificate& cert) {
    json orders = json::array();
    for (auto [d, m] : cert.cyclotomic_factors) orders.push_back(json::array({d, m}));
    return json{{"negligible", cert.negligible},
                {"orders", orders},
                {"xPower", cert.x_power},
                {"residual", to_json(cert.residual)},
                {"unit", to_json(cert.unit)}};
}

SequenceSpec parse_sequence_text(const std::string& text) {
    size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') {
        try {
            return spec_from_json(json::parse(text));
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("sequence file: ") + e.what());
        }
    }
    // b-file: two whitespace-separated columns, indices contiguous ascending.
    std::istringstream in(text);
    std::string line;
    ExplicitValues e;
    bool have_first = false;
    long long expect = 0;
    while (std::getline(in, line)) {
        size_t h = line.find_first_not_of(" \t\r");
        if (h == std::string::npos || line[h] == '#') continue;
        std::istringstream ls(line.substr(h));
        long long idx;
        std::string val;
        if (!(ls >> idx >> val))
            throw std::invalid_argument("b-file: malformed line '" + line + "'");
        if (!have_first) {
            if (idx != 0 && idx != 1)
                throw std::invalid_argument("b-file: first index must be 0 or 1");
            e.offset = static_cast<long>(idx);
            expect = idx;
            have_first = true;
        }
        if (idx != expect)
            throw std::invalid_argument("b-file: indices must be contiguous ascending at line '" + line + "'");
        e.values.push_back(Rational::parse(val));
        ++expect;
    }
    if (!have_first) throw std::invalid_argument("sequence file: no data lines");
    return SequenceSpec{e};
}

SequenceSpec load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sequence file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sequence_text(ss.str());
}

} // namespace mahlerkit::io
