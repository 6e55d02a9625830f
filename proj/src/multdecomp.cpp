#include "mahlerkit/multdecomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mahlerkit {

namespace {

// values_from_1[n - 1] = f(n)
const Rational& at1(const std::vector<Rational>& v, long long n) {
    return v[static_cast<size_t>(n - 1)];
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::optional<long> single_prime_base(long k) {
    for (long p = 2; p <= k; ++p) {
        if (k % p != 0) continue;
        long m = k;
        while (m % p == 0) m /= p;
        return m == 1 ? std::optional<long>(p) : std::nullopt;
    }
    return std::nullopt;
}

} // namespace

MultiplicativityReport check_multiplicative(const std::vector<Rational>& f) {
    const long n_top = static_cast<long>(f.size());
    if (n_top < 2) throw std::invalid_argument("check_multiplicative: need values up to N >= 2");
    MultiplicativityReport rep;
    rep.bound = n_top;
    rep.multiplicative = true;
    for (long m = 1; m * m <= n_top && rep.multiplicative; ++m) {
        for (long n = m; m * n <= n_top; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (at1(f, static_cast<long long>(m) * n) != at1(f, m) * at1(f, n)) {
                rep.multiplicative = false;
                rep.counter_m = m;
                rep.counter_n = n;
                break;
            }
        }
    }
    for (long q = 2; q * q <= n_top; ++q) {
        if (!is_prime(q)) continue;
        bool bad = false;
        for (long long pw = static_cast<long long>(q) * q; pw <= n_top; pw *= q) {
            if (at1(f, pw) != at1(f, q) * at1(f, pw / q)) { bad = true; break; }
        }
        (bad ? rep.bad_primes : rep.completely_multiplicative_primes).push_back(q);
    }
    return rep;
}

bool completely_multiplicative_at(const std::vector<Rational>& f, long q) {
    const long n_top = static_cast<long>(f.size());
    if (q < 2 || q > n_top) throw std::invalid_argument("completely_multiplicative_at: bad q");
    for (long n = 1; static_cast<long long>(q) * n <= n_top; ++n)
        if (at1(f, static_cast<long long>(q) * n) != at1(f, q) * at1(f, n)) return false;
    return true;
}

std::vector<Rational> synthesize(const MultiplicativeDecomposition& dec, long n) {
    // One ladder evaluation of g covers every valuation that occurs.
    long max_i = 0;
    long long pw = 1;
    while (pw <= n / dec.p) { pw *= dec.p; ++max_i; }
    std::vector<Rational> g_vals = dec.g.values(max_i + 1);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n));
    for (long long v = 1; v <= n; ++v) {
        long i = 0;
        long long m = v;
        while (m % dec.p == 0) { m /= dec.p; ++i; }
        out.push_back(g_vals[static_cast<size_t>(i)] *
                      Rational(static_cast<long>(m)).pow(dec.r) * dec.chi.chi(m));
    }
    return out;
}

namespace {

// Minimal recurrence presentation of g from its own values.
LRSSpec minimal_lrs(const LRSSpec& g) {
    long len = std::max<long>(4 * g.order() + 12, 16);
    return berlekamp_massey(g.values(len)).spec;
}

// Minimal eventually periodic presentation of chi with chi(n) = 0 for p | n.
// The preperiod cap keeps a trailing zero-run from shadowing the true period.
EventuallyPeriodic normalize_chi(const EventuallyPeriodic& chi, long p) {
    long span = 2 * p * (static_cast<long>(chi.pre.size()) +
                         2 * std::max<long>(1, static_cast<long>(chi.per.size()))) + 16;
    std::vector<Rational> vals;
    vals.reserve(static_cast<size_t>(span));
    for (long n = 1; n <= span; ++n)
        vals.push_back(n % p == 0 ? Rational(0) : chi.chi(n));
    auto ep = detect_eventually_periodic(vals, span / 2);
    if (!ep) throw std::logic_error("normalize_chi: normalized stream failed to re-detect");
    return *ep;
}

} // namespace

MultiplicativeDecomposition decompose(const std::vector<Rational>& f, long k,
                                      std::optional<long> p_override, long r_max) {
    if (k < 2) throw std::invalid_argument("decompose: k must be >= 2");
    const long n_top = static_cast<long>(f.size());
    if (n_top < 4) throw std::invalid_argument("decompose: need more values");

    MultiplicativityReport rep = check_multiplicative(f);
    if (!rep.multiplicative)
        throw DecomposeError("decompose: input not multiplicative, counterexample (" +
                             std::to_string(rep.counter_m) + ", " +
                             std::to_string(rep.counter_n) + ")");

    bool all_zero = true;
    for (const auto& x : f)
        if (!x.is_zero()) { all_zero = false; break; }

    std::optional<long> base_prime = single_prime_base(k);
    MultiplicativeDecomposition dec;

    if (all_zero) {
        dec.p = base_prime.value_or(p_override.value_or(2));
        dec.g = LRSSpec{{Rational(0)}, {Rational(1)}}; // g(0) = 1, then zero
        dec.r = 0;
        dec.chi = EventuallyPeriodic{{}, {Rational(0)}};
        return dec;
    }
    if (at1(f, 1) != Rational(1))
        throw DecomposeError("decompose: f(1) != 1 for a nonzero multiplicative sequence");

    if (base_prime) {
        // k = p^e: the canonical prime is forced.
        const long p = *base_prime;
        dec.p = p;
        std::vector<Rational> ladder;
        for (long long pw = 1; pw <= n_top; pw *= p) ladder.push_back(at1(f, pw));
        dec.g = berlekamp_massey(ladder).spec;
        if (dec.g.order() == 0) dec.g = LRSSpec{{Rational(1)}, {Rational(1)}};

        std::vector<Rational> h;
        h.reserve(static_cast<size_t>(n_top));
        for (long n = 1; n <= n_top; ++n)
            h.push_back(n % p == 0 ? Rational(0) : at1(f, n));
        auto pp = power_periodic_decompose(h, r_max);
        if (!pp)
            throw DecomposeError("decompose: off-p part is not n^r times an eventually periodic function within bounds");
        dec.r = pp->r;
        dec.chi = normalize_chi(pp->chi, p);
    } else {
        // k has two distinct prime divisors: f must be an LRS (the rational
        // route), decomposed as f(n) = n^r chi(n) and re-expressed at p.
        const long p = p_override.value_or(2);
        if (!is_prime(p)) throw std::invalid_argument("decompose: p_override must be prime");
        dec.p = p;
        auto bm = berlekamp_massey(f);
        if (!bm.unique || 4 * bm.spec.order() > n_top)
            throw DecomposeError("decompose: sequence does not look like an LRS within bounds");
        auto pp = power_periodic_decompose(f, r_max);
        if (!pp)
            throw DecomposeError("decompose: no n^r chi(n) form within bounds");
        dec.r = pp->r;
        const EventuallyPeriodic& chi_full = pp->chi;
        // g(i) = p^{r i} chi(p^i), an LRS: geometric times eventually periodic.
        long count = 4 * (static_cast<long>(chi_full.pre.size()) +
                          static_cast<long>(chi_full.per.size())) + 16;
        std::vector<Rational> g_vals;
        Rational pr = Rational(p).pow(dec.r);
        Rational acc(1);
        long long pw = 1;
        for (long i = 0; i < count; ++i) {
            g_vals.push_back(acc * chi_full.chi(pw));
            acc *= pr;
            if (pw > (1LL << 40)) break; // enough ladder evidence collected
            pw *= p;
        }
        dec.g = berlekamp_massey(g_vals).spec;
        dec.chi = normalize_chi(chi_full, p);
    }

    std::vector<Rational> back = synthesize(dec, n_top);
    for (long n = 1; n <= n_top; ++n) {
        if (at1(back, n) != at1(f, n))
            throw DecomposeError("decompose: re-synthesis mismatch at n = " + std::to_string(n));
    }
    return dec;
}

CanonicalDecomposition canonicalize(const MultiplicativeDecomposition& dec) {
    CanonicalDecomposition out;
    out.dec.p = dec.p;
    out.dec.r = dec.r;

    LRSSpec g = dec.g;
    EventuallyPeriodic chi = dec.chi;
    Rational g0 = g.order() == 0 ? Rational(0) : g.at(0);
    if (g0 != Rational(1) && !g0.is_zero()) {
        // Rescale: (g / c, c * chi) leaves the synthesized sequence unchanged.
        for (auto& x : g.init) x /= g0;
        for (auto& x : chi.pre) x *= g0;
        for (auto& x : chi.per) x *= g0;
    } else if (g.order() == 0) {
        g = LRSSpec{{Rational(0)}, {Rational(1)}};
    }
    out.dec.g = minimal_lrs(g);
    out.dec.chi = normalize_chi(chi, dec.p);
    out.unique = !out.dec.chi.eventually_zero();
    return out;
}

GqReport gq_series(const SequenceSpec& spec, long q, long n) {
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("gq_series: q must be an odd prime");
    if (q > n) throw std::invalid_argument("gq_series: order too small to read f(q)");
    TruncSeries<Rational> f = spec_to_series(spec, n);
    const Cyclo omega = Cyclo::zeta(q);
    TruncSeries<Cyclo> acc = TruncSeries<Cyclo>::zero(n);
    for (long j = 0; j < q; ++j) acc = acc + twist_series(f, omega, j);
    Rational fq = f.coeff(q);
    TruncSeries<Cyclo> sub = promote_series(mahler_subst_to(f, q, n));
    GqReport rep;
    rep.series = acc - sub * Cyclo(fq * Rational(q));
    for (long e = 0; e <= rep.series.order(); ++e) {
        const Cyclo& c = rep.series.coeff(e);
        if (c.is_zero()) continue;
        if (!c.is_rational()) rep.coefficients_rational = false;
        if (e % (q * q) != 0) {
            rep.supported_on_q_squared = false;
            if (rep.first_violation < 0) rep.first_violation = e;
        }
    }
    return rep;
}

TruncSeries<Cyclo> h_series(const SequenceSpec& spec, long q, long n) {
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("h_series: q must be an odd prime");
    TruncSeries<Rational> f = spec_to_series(spec, n);
    const Cyclo omega = Cyclo::zeta(q);
    TruncSeries<Cyclo> acc = TruncSeries<Cyclo>::zero(n);
    for (long j = 0; j < q; ++j)
        acc = acc + twist_series(f, omega, j) * omega.pow(-j);
    // Independent route: q f(qm+1) at exponent qm+1, zero elsewhere.
    TruncSeries<Cyclo> direct = TruncSeries<Cyclo>::zero(n);
    {
        std::vector<Cyclo> d(static_cast<size_t>(n) + 1, Cyclo(0));
        for (long e = 1; e <= n; ++e)
            if (e % q == 1) d[static_cast<size_t>(e)] = Cyclo(f.coeff(e) * Rational(q));
        direct = TruncSeries<Cyclo>(std::move(d));
    }
    if (!(acc == direct))
        throw std::logic_error("h_series: twisted sum disagrees with the direct formula");
    return acc;
}

AvgCheckResult unit_root_avg_check(const SequenceSpec& spec, long q, long n) {
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("unit_root_avg_check: q must be an odd prime");
    if (q > n) throw std::invalid_argument("unit_root_avg_check: order too small to read f(q)");
    TruncSeries<Rational> f = spec_to_series(spec, n);
    const Cyclo omega = Cyclo::zeta(q);
    TruncSeries<Cyclo> lhs = TruncSeries<Cyclo>::zero(n);
    for (long j = 0; j < q; ++j) lhs = lhs + twist_series(f, omega, j);
    TruncSeries<Cyclo> rhs =
        promote_series(mahler_subst_to(f, q, n)) * Cyclo(f.coeff(q) * Rational(q));
    for (long e = 0; e <= n; ++e)
        if (lhs.coeff(e) != rhs.coeff(e)) return {false, e};
    return {true, -1};
}

CoprimalityReport coprimality_probe(const UniPoly<Rational>& p, long q, long k,
                                    long i_max, long n_max) {
    if (p.is_zero()) throw std::invalid_argument("coprimality_probe: zero polynomial");
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("coprimality_probe: q must be an odd prime");
    CoprimalityReport rep;
    const Cyclo omega = Cyclo::zeta(q);
    const UniPoly<Cyclo> pc = promote(p);
    long long pw = 1;
    for (long i = 0; i <= i_max; ++i, pw *= k) {
        UniPoly<Cyclo> a = pc.compose_power(static_cast<long>(pw));
        for (long j = 1; j <= q - 1; ++j) {
            UniPoly<Cyclo> tw = twist_poly(pc, omega, j);
            for (long n = 0; n <= n_max; ++n) {
                UniPoly<Cyclo> b = tw.compose_power(n);
                UniPoly<Cyclo> g = poly_gcd(a, b);
                bool power_of_x = true;
                for (long e = 0; e < g.degree(); ++e)
                    if (!g.coeff(e).is_zero()) { power_of_x = false; break; }
                if (!power_of_x) {
                    rep.ok = false;
                    rep.violations.push_back({i, n, j, "deg " + std::to_string(g.degree())});
                }
            }
        }
    }
    return rep;
}

} // namespace mahlerkit
