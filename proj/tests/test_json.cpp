#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mahlerkit/json_io.hpp"

using namespace mahlerkit;
namespace io = mahlerkit::io;

namespace {

UniPoly<Rational> P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly<Rational>(std::move(c));
}

} // namespace

TEST_CASE("scalar and polynomial round trips") {
    CHECK(io::rational_from_json(io::to_json(Rational(-3, 7))) == Rational(-3, 7));
    CHECK(io::rational_from_json(io::json(5)) == Rational(5));
    CHECK_THROWS_AS(io::rational_from_json(io::json(1.5)), std::invalid_argument);

    UniPoly<Rational> p = P({1, 0, -2});
    CHECK(io::poly_from_json(io::to_json(p)) == p);
    CHECK(io::to_json(p).dump() == "[\"1\",\"0\",\"-2\"]");
    CHECK(io::poly_from_json(io::json::parse("[1,1]")) == P({1, 1}));

    Cyclo z = Cyclo::zeta(5) + Cyclo(Rational(1, 2));
    CHECK(io::cyclo_from_json(io::to_json(z)) == z);
    CHECK(io::cyclo_from_json(io::to_json(Cyclo(Rational(2, 3)))) == Cyclo(Rational(2, 3)));
}

TEST_CASE("series, equation, operator, linrep round trips") {
    TruncSeries<Rational> s = rational_to_series(P({0, 1}), P({1, -1, -1}), 12);
    CHECK(io::series_from_json(io::to_json(s)) == s);

    MahlerEquation<Rational> eq{2, {P({1, -1}), P({-1, 0, 1})}, P({0, 3})};
    auto eq2 = io::equation_from_json(io::to_json(eq));
    CHECK(eq2.k == eq.k);
    CHECK(eq2.coeffs == eq.coeffs);
    CHECK(eq2.inhom == eq.inhom);

    OrePoly<Rational> op(2, {FracPoly<Rational>(P({1}), P({1, -1})), FracPoly<Rational>(P({2}))});
    CHECK(io::ore_from_json(io::to_json(op)) == op);

    LRSSpec lrs{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    CHECK(io::lrs_from_json(io::to_json(lrs)) == lrs);

    EventuallyPeriodic chi{{Rational(7)}, {Rational(0), Rational(1)}};
    CHECK(io::chi_from_json(io::to_json(chi)) == chi);

    MultiplicativeDecomposition dec{2, lrs, 1, chi};
    CHECK(io::decomposition_from_json(io::to_json(dec)) == dec);

    LinRep rep;
    rep.k = 2;
    rep.dim = 2;
    rep.u = {Rational(0), Rational(1)};
    rep.mats = {{Rational(1), Rational(0), Rational(0), Rational(1)},
                {Rational(1), Rational(0), Rational(1), Rational(1)}};
    rep.v = {Rational(1), Rational(0)};
    LinRep rep2 = io::linrep_from_json(io::to_json(rep));
    CHECK(rep2.k == rep.k);
    CHECK(rep2.u == rep.u);
    CHECK(rep2.mats == rep.mats);
    CHECK(rep2.v == rep.v);
    for (long n = 0; n < 40; ++n) CHECK(rep2.eval(n) == rep.eval(n));
}

TEST_CASE("sequence specs round trip and evaluate identically") {
    LinRep digit_sum;
    digit_sum.k = 2;
    digit_sum.dim = 2;
    digit_sum.u = {Rational(0), Rational(1)};
    digit_sum.mats = {{Rational(1), Rational(0), Rational(0), Rational(1)},
                      {Rational(1), Rational(0), Rational(1), Rational(1)}};
    digit_sum.v = {Rational(1), Rational(0)};
    std::vector<SequenceSpec> specs = {
        SequenceSpec{ExplicitValues{{Rational(1), Rational(2), Rational(3)}, 1}},
        SequenceSpec{RationalSpec{P({0, 1}), P({1, -1, -1})}},
        SequenceSpec{BuiltinSpec{Builtin::OddPart, 1}},
        SequenceSpec{BuiltinSpec{Builtin::PrincipalChar, 6}},
        SequenceSpec{BuiltinSpec{Builtin::QuadResChar, 7}},
        SequenceSpec{digit_sum},
        SequenceSpec{LRSSpec{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}},
        SequenceSpec{MultiplicativeDecomposition{
            2, LRSSpec{{Rational(2)}, {Rational(1)}}, 0,
            EventuallyPeriodic{{}, {Rational(1), Rational(0)}}}},
    };
    for (const auto& spec : specs) {
        SequenceSpec back = io::spec_from_json(io::to_json(spec));
        long n = std::holds_alternative<ExplicitValues>(spec.source) ? 3 : 20;
        CHECK(spec.values(n) == back.values(n));
    }
}

TEST_CASE("sequence files: values object and b-file") {
    SequenceSpec s1 = io::parse_sequence_text(R"({"values": [1, 1, 3, 1], "offset": 1})");
    CHECK(s1.values(4) == std::vector<Rational>{Rational(0), Rational(1), Rational(1),
                                                Rational(3), Rational(1)});

    SequenceSpec s2 = io::parse_sequence_text("# OEIS style\n1 1\n2 1\n3 3\n4 1\n");
    CHECK(s2.values(4) == s1.values(4));

    SequenceSpec s3 = io::parse_sequence_text("0 0\n1 1\n2 2\n3 3\n");
    CHECK(s3.values(3) == std::vector<Rational>{Rational(0), Rational(1), Rational(2),
                                                Rational(3)});

    CHECK_THROWS_AS(io::parse_sequence_text("1 1\n3 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_sequence_text(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_sequence_text("{\"values\": [1,2], \"offset\": 5}"),
                    std::invalid_argument);

    // Rationals in b-files.
    SequenceSpec s4 = io::parse_sequence_text("1 1/2\n2 -3/4\n");
    CHECK(s4.values(2) == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(-3, 4)});
}

TEST_CASE("negligibility certificate serialization shape") {
    auto cert = factor_negligible(P({1, 1}), 2);
    io::json j = io::to_json(cert);
    CHECK(j["negligible"] == true);
    CHECK(j["orders"].dump() == "[[2,1]]");
}
