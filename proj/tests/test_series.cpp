#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mahlerkit/seqspec.hpp"
#include "mahlerkit/series.hpp"

using namespace mahlerkit;

namespace {

UniPoly<Rational> P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly<Rational>(std::move(c));
}

TruncSeries<Rational> S(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return TruncSeries<Rational>(std::move(c));
}

TruncSeries<Rational> random_series(std::mt19937_64& rng, long order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 11) - 5);
    return TruncSeries<Rational>(std::move(c));
}

} // namespace

TEST_CASE("truncation bookkeeping") {
    TruncSeries<Rational> f = S({1, 2, 3});
    CHECK(f.order() == 2);
    CHECK_THROWS_AS(f.coeff(3), std::out_of_range);
    CHECK((f + S({1, 1})).order() == 1); // min of provable orders
    CHECK(series_mul(f, S({1, 1})).order() == 1);
    CHECK(series_mul_poly(P({1, 1}), f).order() == 2);
    CHECK(f.take(1) == S({1, 2}));
    CHECK(f.take(-1).empty());
}

TEST_CASE("cartier selects arithmetic progressions") {
    // x + x^2 + x^3, l=2, r=1 -> 1 + x  (g(1), g(3)).
    CHECK(cartier(S({0, 1, 1, 1}), 2, 1) == S({1, 1}));
    TruncSeries<Rational> g = S({4, 5, 6, 7});
    CHECK(cartier(g, 1, 0) == g);
    CHECK_THROWS_AS(cartier(g, 2, 2), std::invalid_argument);
    // Order can go empty on short input.
    CHECK(cartier(S({1}), 3, 2).empty());
}

TEST_CASE("cartier composition law with matching orders") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        TruncSeries<Rational> g = random_series(rng, 30 + static_cast<long>(rng() % 20));
        long l2 = 2 + static_cast<long>(rng() % 3), r2 = static_cast<long>(rng() % l2);
        long l1 = 2 + static_cast<long>(rng() % 3), r1 = static_cast<long>(rng() % l1);
        TruncSeries<Rational> lhs = cartier(cartier(g, l2, r2), l1, r1);
        TruncSeries<Rational> rhs = cartier(g, l1 * l2, l2 * r1 + r2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mahler substitution and the cartier round trip") {
    CHECK(mahler_subst(S({1, 1}), 2) == S({1, 0, 1}));
    TruncSeries<Rational> g = S({3, 1, 4, 1, 5});
    CHECK(mahler_subst(g, 1) == g);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 30; ++t) {
        long l = 2 + static_cast<long>(rng() % 4);
        TruncSeries<Rational> f = random_series(rng, 20);
        CHECK(cartier(mahler_subst(f, l), l, 0) == f);
    }
    CHECK(mahler_subst_to(g, 3, 10) == S({3, 0, 0, 1, 0, 0, 4, 0, 0, 1, 0}));
}

TEST_CASE("series twist by roots of unity") {
    TruncSeries<Rational> f = S({0, 1, 1});
    Cyclo z3 = Cyclo::zeta(3);
    TruncSeries<Cyclo> t = twist_series(f, z3, 0);
    CHECK(t == promote_series(f));
    // x + x^2 -> z3 x + z3^2 x^2.
    TruncSeries<Cyclo> t1 = twist_series(f, z3, 1);
    CHECK(t1.coeff(1) == z3);
    CHECK(t1.coeff(2) == z3.pow(2));
    // sum over j of twists of x + x^2 + x^3 picks out 3 x^3.
    TruncSeries<Rational> g = S({0, 1, 1, 1});
    TruncSeries<Cyclo> acc = TruncSeries<Cyclo>::zero(3);
    for (long j = 0; j < 3; ++j) acc = acc + twist_series(g, z3, j);
    CHECK(acc.coeff(0).is_zero());
    CHECK(acc.coeff(1).is_zero());
    CHECK(acc.coeff(2).is_zero());
    CHECK(acc.coeff(3) == Cyclo(3));
}

TEST_CASE("infinite product truncation") {
    CHECK(infinite_product_truncated(UniPoly<Rational>::one(), 2, 9) ==
          TruncSeries<Rational>::from_poly(UniPoly<Rational>::one(), 9));
    // (1-x)(1-x^2)(1-x^4) through x^7.
    CHECK(infinite_product_truncated(P({1, -1}), 2, 7) ==
          S({1, -1, -1, 1, -1, 1, 1, -1}));
    CHECK_THROWS_AS(infinite_product_truncated(P({0, 1}), 2, 4), std::invalid_argument);

    // Functional equation D(x) = P0(x) D(x^k) to the provable order.
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> c(static_cast<size_t>(rng() % 4) + 2);
        c[0] = Rational(1);
        for (size_t i = 1; i < c.size(); ++i) c[i] = Rational(static_cast<long>(rng() % 7) - 3);
        UniPoly<Rational> p0(std::move(c));
        long k = 2 + static_cast<long>(rng() % 2);
        long n = 40;
        TruncSeries<Rational> d = infinite_product_truncated(p0, k, n);
        TruncSeries<Rational> rhs = series_mul_poly(p0, mahler_subst_to(d, k, n));
        CHECK(d == rhs.take(d.order()));
    }
}

TEST_CASE("rational series expansion") {
    CHECK(rational_to_series(UniPoly<Rational>::one(), P({1, -1}), 5) == S({1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(rational_to_series(UniPoly<Rational>::one(), P({0, 1}), 5),
                    std::invalid_argument);
    // Fibonacci generating series x/(1 - x - x^2).
    TruncSeries<Rational> fib = rational_to_series(P({0, 1}), P({1, -1, -1}), 10);
    CHECK(fib == S({0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
}

TEST_CASE("built-in sequence generators") {
    SequenceSpec odd{BuiltinSpec{Builtin::OddPart, 1}};
    CHECK(spec_to_series(odd, 8) == S({0, 1, 1, 3, 1, 5, 3, 7, 1}));
    SequenceSpec tap{BuiltinSpec{Builtin::TwoAdicPower, 1}};
    CHECK(spec_to_series(tap, 6) == S({0, 1, 2, 1, 4, 1, 2}));
    SequenceSpec pc{BuiltinSpec{Builtin::PrincipalChar, 4}};
    CHECK(spec_to_series(pc, 6) == S({0, 1, 0, 1, 0, 1, 0}));
    SequenceSpec qr{BuiltinSpec{Builtin::QuadResChar, 5}};
    CHECK(spec_to_series(qr, 6) == S({0, 1, -1, -1, 1, 0, 1}));
    SequenceSpec fib{RationalSpec{P({0, 1}), P({1, -1, -1})}};
    CHECK(spec_to_series(fib, 6) == S({0, 1, 1, 2, 3, 5, 8}));
    SequenceSpec vals{ExplicitValues{{Rational(7), Rational(8)}, 1}};
    CHECK(spec_to_series(vals, 2) == S({0, 7, 8}));
    CHECK_THROWS_AS(spec_to_series(vals, 5), std::invalid_argument);
}

TEST_CASE("truncation soundness: longer inputs refine, never change") {
    std::mt19937_64 rng(10);
    SequenceSpec fib{RationalSpec{P({0, 1}), P({1, -1, -1})}};
    TruncSeries<Rational> small = spec_to_series(fib, 20);
    TruncSeries<Rational> big = spec_to_series(fib, 40);
    for (int t = 0; t < 30; ++t) {
        long l = 2 + static_cast<long>(rng() % 3), r = static_cast<long>(rng() % l);
        TruncSeries<Rational> a = cartier(small, l, r);
        TruncSeries<Rational> b = cartier(big, l, r);
        CHECK(b.take(a.order()) == a);
        TruncSeries<Rational> ma = series_mul(small, a);
        TruncSeries<Rational> mb = series_mul(big, b);
        CHECK(mb.take(ma.order()) == ma);
    }
}
