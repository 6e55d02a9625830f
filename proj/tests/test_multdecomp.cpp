#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "mahlerkit/linrep.hpp"
#include "mahlerkit/multdecomp.hpp"

using namespace mahlerkit;

namespace {

std::vector<Rational> V(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Rational> builtin_from_1(Builtin b, long n, long modulus = 1) {
    return SequenceSpec{BuiltinSpec{b, modulus}}.values_from_1(n);
}

const EventuallyPeriodic kOddIndicator{{}, {Rational(1), Rational(0)}};

} // namespace

TEST_CASE("multiplicativity report") {
    auto rep = check_multiplicative(builtin_from_1(Builtin::Identity, 500));
    CHECK(rep.multiplicative);
    CHECK(rep.bad_primes.empty());

    auto rep2 = check_multiplicative(builtin_from_1(Builtin::OddPart, 500));
    CHECK(rep2.multiplicative);
    // f(2^i) = 1 = f(2)^i: the ladder at 2 is completely multiplicative here.
    CHECK(rep2.bad_primes.empty());
    CHECK(std::find(rep2.completely_multiplicative_primes.begin(),
                    rep2.completely_multiplicative_primes.end(),
                    2) != rep2.completely_multiplicative_primes.end());

    auto rep3 = check_multiplicative(builtin_from_1(Builtin::TwoAdicPower, 500));
    CHECK(rep3.multiplicative);
    CHECK(rep3.bad_primes.empty());

    // sigma(n) would fail complete-multiplicativity at every prime; a sequence
    // with f(4) != f(2)^2 lands 2 in bad_primes.
    std::vector<Rational> vals = builtin_from_1(Builtin::One, 100);
    vals[3] = Rational(5); // f(4) = 5 breaks the ladder but no coprime pair
    auto rep4 = check_multiplicative(vals);
    CHECK(std::find(rep4.bad_primes.begin(), rep4.bad_primes.end(), 2) != rep4.bad_primes.end());

    // Non-multiplicative input produces a coprime counterexample.
    std::vector<Rational> bad = builtin_from_1(Builtin::One, 50);
    bad[5] = Rational(3); // f(6) = 3 != f(2) f(3)
    auto rep5 = check_multiplicative(bad);
    CHECK_FALSE(rep5.multiplicative);
    CHECK(std::gcd(rep5.counter_m, rep5.counter_n) == 1);

    CHECK(completely_multiplicative_at(builtin_from_1(Builtin::Identity, 100), 3));
    CHECK(completely_multiplicative_at(builtin_from_1(Builtin::TwoAdicPower, 100), 3));
    // The broken-ladder sequence above is not completely multiplicative at 2.
    CHECK_FALSE(completely_multiplicative_at(vals, 2));
}

TEST_CASE("canonical examples decompose exactly") {
    auto dec = canonicalize(decompose(builtin_from_1(Builtin::OddPart, 3000), 2)).dec;
    CHECK(dec.p == 2);
    CHECK(dec.r == 1);
    CHECK(dec.g == LRSSpec{{Rational(1)}, {Rational(1)}});
    CHECK(dec.chi == kOddIndicator);

    auto dec2 = canonicalize(decompose(builtin_from_1(Builtin::TwoAdicPower, 3000), 2)).dec;
    CHECK(dec2.p == 2);
    CHECK(dec2.r == 0);
    CHECK(dec2.g == LRSSpec{{Rational(2)}, {Rational(1)}});
    CHECK(dec2.chi == kOddIndicator);

    // Non-prime-power base routes through the LRS branch with p = 2:
    // f(n) = n gives r = 1, chi = 1, g(i) = 2^i.
    auto dec3 = canonicalize(decompose(builtin_from_1(Builtin::Identity, 500), 6)).dec;
    CHECK(dec3.p == 2);
    CHECK(dec3.r == 1);
    CHECK(dec3.g == LRSSpec{{Rational(2)}, {Rational(1)}});
    CHECK(dec3.chi == kOddIndicator);

    // Prime override for the non-prime-power branch.
    auto dec4 = canonicalize(decompose(builtin_from_1(Builtin::Identity, 500), 6, 3)).dec;
    CHECK(dec4.p == 3);
    CHECK(dec4.g == LRSSpec{{Rational(3)}, {Rational(1)}});
}

TEST_CASE("decompose rejects bad input") {
    std::vector<Rational> bad = builtin_from_1(Builtin::One, 60);
    bad[5] = Rational(3);
    CHECK_THROWS_AS(decompose(bad, 2), DecomposeError);

    // Fibonacci is multiplicative-looking nowhere; the checker fires first.
    CHECK_THROWS_AS(decompose(V({1, 1, 2, 3, 5, 8, 13, 21}), 2), DecomposeError);
}

TEST_CASE("synthesize evaluates the canonical form") {
    // (p=2, g = 1, r = 0, chi = odd indicator): f(2^i m) = 1 for all n.
    MultiplicativeDecomposition ones{2, LRSSpec{{Rational(1)}, {Rational(1)}}, 0, kOddIndicator};
    CHECK(synthesize(ones, 10) == V({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));

    // g(i) = i + 1 gives f(n) = val_2(n) + 1.
    MultiplicativeDecomposition valp{
        2, LRSSpec{{Rational(2), Rational(-1)}, {Rational(1), Rational(2)}}, 0, kOddIndicator};
    std::vector<Rational> vals = synthesize(valp, 32);
    for (long n = 1; n <= 32; ++n)
        CHECK(vals[static_cast<size_t>(n - 1)] == Rational(val_p(n, 2) + 1));

    // (p=3, g = 1, r=2, chi = quadratic-residue character mod 5 vanishing on
    // multiples of 3): spot values f(1) = 1, f(2) = 4 chi(2) = -4.
    SequenceSpec qr{BuiltinSpec{Builtin::QuadResChar, 5}};
    std::vector<Rational> chi_vals;
    for (long n = 1; n <= 120; ++n)
        chi_vals.push_back(n % 3 == 0 ? Rational(0) : qr.values(n)[static_cast<size_t>(n)]);
    auto chi = detect_eventually_periodic(chi_vals, static_cast<long>(chi_vals.size()) / 2);
    REQUIRE(chi);
    MultiplicativeDecomposition qr_dec{3, LRSSpec{{Rational(1)}, {Rational(1)}}, 2, *chi};
    std::vector<Rational> f = synthesize(qr_dec, 10);
    CHECK(f[0] == Rational(1));
    CHECK(f[1] == Rational(-4));
    auto rep = check_multiplicative(f);
    CHECK(rep.multiplicative);
}

TEST_CASE("every synthesized sequence is multiplicative and p-regular at small dimension") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 8; ++t) {
        long p = (t % 2 == 0) ? 2 : 3;
        MultiplicativeDecomposition dec;
        dec.p = p;
        dec.r = static_cast<long>(rng() % 2);
        dec.g = LRSSpec{{Rational(static_cast<long>(rng() % 3) + 1)}, {Rational(1)}};
        SequenceSpec pc{BuiltinSpec{Builtin::PrincipalChar, 4}};
        std::vector<Rational> chi_vals;
        for (long n = 1; n <= 64; ++n)
            chi_vals.push_back(n % p == 0 ? Rational(0)
                                          : pc.values(n)[static_cast<size_t>(n)]);
        dec.chi = *detect_eventually_periodic(chi_vals, static_cast<long>(chi_vals.size()) / 2);

        std::vector<Rational> f = synthesize(dec, 2000);
        CHECK(check_multiplicative(f).multiplicative);

        std::vector<Rational> f0 = f;
        f0.insert(f0.begin(), Rational(0));
        auto guess = kernel_guess(f0, p, dec.g.order() + static_cast<long>(dec.chi.per.size()) + 2);
        CHECK(std::holds_alternative<KernelGuess>(guess));
    }
}

TEST_CASE("canonicalize fixes scaling and flags the degenerate regime") {
    // Non-normalized chi (no vanishing at multiples of p) canonicalizes to the
    // same synthesized sequence.
    MultiplicativeDecomposition messy{2, LRSSpec{{Rational(1)}, {Rational(1)}}, 1,
                                      EventuallyPeriodic{{}, {Rational(1)}}};
    auto canon = canonicalize(messy);
    CHECK(canon.unique);
    CHECK(canon.dec.chi == kOddIndicator);
    CHECK(synthesize(canon.dec, 200) == synthesize(messy, 200));
    // Fixed point.
    auto twice = canonicalize(canon.dec);
    CHECK(twice.dec == canon.dec);

    // Scaled g with compensating chi: canonical g(0) = 1 restored.
    MultiplicativeDecomposition scaled{2, LRSSpec{{Rational(1)}, {Rational(3)}}, 0,
                                       EventuallyPeriodic{{}, {Rational(1, 3), Rational(0)}}};
    auto fixed = canonicalize(scaled);
    CHECK(fixed.dec.g.at(0) == Rational(1));
    CHECK(synthesize(fixed.dec, 100) == synthesize(scaled, 100));

    // Eventually zero off p: flagged as non-unique.
    MultiplicativeDecomposition degen{2, LRSSpec{{Rational(2)}, {Rational(1)}}, 0,
                                      EventuallyPeriodic{{Rational(1)}, {Rational(0)}}};
    CHECK_FALSE(canonicalize(degen).unique);
}

TEST_CASE("round trip on random decompositions") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 6; ++t) {
        long p = (t % 2 == 0) ? 2 : 3;
        MultiplicativeDecomposition dec;
        dec.p = p;
        dec.r = static_cast<long>(rng() % 3);
        long ord = 1 + static_cast<long>(rng() % 2);
        dec.g.rec.resize(static_cast<size_t>(ord));
        dec.g.init.resize(static_cast<size_t>(ord));
        for (auto& c : dec.g.rec) c = Rational(static_cast<long>(rng() % 5) - 2);
        if (dec.g.rec.back().is_zero()) dec.g.rec.back() = Rational(1);
        dec.g.init[0] = Rational(1);
        for (size_t i = 1; i < dec.g.init.size(); ++i)
            dec.g.init[i] = Rational(static_cast<long>(rng() % 5) - 2);
        SequenceSpec pc{BuiltinSpec{Builtin::PrincipalChar, 1 + static_cast<long>(rng() % 6)}};
        std::vector<Rational> chi_vals;
        for (long n = 1; n <= 200; ++n)
            chi_vals.push_back(n % p == 0 ? Rational(0)
                                          : pc.values(n)[static_cast<size_t>(n)]);
        dec.chi = *detect_eventually_periodic(chi_vals, static_cast<long>(chi_vals.size()) / 2);

        std::vector<Rational> f = synthesize(dec, 3000);
        auto back = canonicalize(decompose(f, p));
        CHECK(back.dec == canonicalize(dec).dec);
    }
}

TEST_CASE("gq support and rationality") {
    for (long q : {3L, 5L}) {
        for (Builtin b : {Builtin::One, Builtin::Identity, Builtin::OddPart,
                          Builtin::TwoAdicPower}) {
            SequenceSpec spec{BuiltinSpec{b, 1}};
            auto rep = gq_series(spec, q, 150);
            CHECK(rep.supported_on_q_squared);
            CHECK(rep.coefficients_rational);
            // Coefficient oracle: q f(q^2 m) - q f(q) f(q m) at exponent q^2 m.
            std::vector<Rational> f = spec.values(150);
            for (long e = 0; e <= 150; ++e) {
                Cyclo expect(0);
                if (e % (q * q) == 0 && e > 0) {
                    long m = e / (q * q);
                    expect = Cyclo(Rational(q) * f[static_cast<size_t>(q * q * m)] -
                                   Rational(q) * f[static_cast<size_t>(q)] *
                                       f[static_cast<size_t>(q * m)]);
                }
                CHECK(rep.series.coeff(e) == expect);
            }
        }
    }
    // Completely multiplicative f: G_q vanishes identically.
    auto rep = gq_series(SequenceSpec{BuiltinSpec{Builtin::Identity, 1}}, 3, 120);
    CHECK(rep.series.is_zero_on_range());
}

TEST_CASE("h series dual computation") {
    for (long q : {3L, 5L}) {
        SequenceSpec spec{BuiltinSpec{Builtin::OddPart, 1}};
        TruncSeries<Cyclo> h = h_series(spec, q, 100); // throws on mismatch
        // f = 1: H = sum_m q x^{qm+1}.
        TruncSeries<Cyclo> ones = h_series(SequenceSpec{BuiltinSpec{Builtin::One, 1}}, q, 60);
        for (long e = 0; e <= 60; ++e)
            CHECK(ones.coeff(e) == (e % q == 1 ? Cyclo(q) : Cyclo(0)));
    }
    // f = 0.
    SequenceSpec zero{ExplicitValues{std::vector<Rational>(80, Rational(0)), 1}};
    CHECK(h_series(zero, 3, 60).is_zero_on_range());
}

TEST_CASE("unit root averaging") {
    CHECK(unit_root_avg_check(SequenceSpec{BuiltinSpec{Builtin::Identity, 1}}, 3, 300).holds);
    CHECK(unit_root_avg_check(SequenceSpec{BuiltinSpec{Builtin::One, 1}}, 5, 200).holds);
    // 2^{val_2} is completely multiplicative at 3 (f(3n) = f(n) = f(3) f(n)).
    CHECK(unit_root_avg_check(SequenceSpec{BuiltinSpec{Builtin::TwoAdicPower, 1}}, 3, 200).holds);
    // n/2^{val_2} at q=3 as well, but a sequence that is not completely
    // multiplicative at q must fail: 2^{val_2} at... q must be odd, so use a
    // handcrafted f with f(3) f(3) != f(9).
    std::vector<Rational> vals = SequenceSpec{BuiltinSpec{Builtin::One, 1}}.values(100);
    vals[9] = Rational(7);
    SequenceSpec crafted{ExplicitValues{{vals.begin() + 1, vals.end()}, 1}};
    auto res = unit_root_avg_check(crafted, 3, 99);
    CHECK_FALSE(res.holds);
    CHECK(res.fails_at == 9);
}

TEST_CASE("averaging holds wherever complete multiplicativity does") {
    std::vector<SequenceSpec> corpus = {
        SequenceSpec{BuiltinSpec{Builtin::One, 1}},
        SequenceSpec{BuiltinSpec{Builtin::Identity, 1}},
        SequenceSpec{BuiltinSpec{Builtin::TwoAdicPower, 1}},
        SequenceSpec{BuiltinSpec{Builtin::OddPart, 1}},
        SequenceSpec{BuiltinSpec{Builtin::PrincipalChar, 4}},
        SequenceSpec{BuiltinSpec{Builtin::QuadResChar, 5}},
    };
    const long n = 200;
    for (const auto& spec : corpus) {
        std::vector<Rational> f = spec.values_from_1(n);
        for (long q : {3L, 5L, 7L}) {
            if (!completely_multiplicative_at(f, q)) continue;
            CHECK(unit_root_avg_check(spec, q, n).holds);
        }
    }
}

TEST_CASE("coprimality probe") {
    UniPoly<Rational> one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    auto rep = coprimality_probe(one_minus_x, 5, 2, 3, 3);
    CHECK(rep.ok);

    UniPoly<Rational> two_factors =
        one_minus_x * UniPoly<Rational>(std::vector<Rational>{Rational(2), Rational(-1)});
    CHECK(coprimality_probe(two_factors, 5, 3, 2, 2).ok);

    // P = x: the gcd is a power of x, which is the allowed exception.
    CHECK(coprimality_probe(UniPoly<Rational>::monomial(1, Rational(1)), 5, 2, 2, 2).ok);
}
