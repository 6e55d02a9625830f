#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahlerkit/cyclotomic.hpp"
#include "mahlerkit/decomp.hpp"
#include "mahlerkit/seqspec.hpp"
#include "mahlerkit/series.hpp"

namespace mahlerkit {

struct MultiplicativityReport {
    long bound = 0;
    bool multiplicative = false;
    long counter_m = 0, counter_n = 0; // coprime counterexample when found
    // Ladder behavior of primes q with q^2 <= bound: q is "bad" when
    // f(q^i) != f(q) f(q^{i-1}) for some i >= 2 within bound.
    std::vector<long> bad_primes;
    std::vector<long> completely_multiplicative_primes;
};

// Exhaustive check over coprime pairs with m*n <= N; values are f(1..N).
MultiplicativityReport check_multiplicative(const std::vector<Rational>& values_from_1);

// f(q n) = f(q) f(n) for all q n <= N, including multiples of q.
bool completely_multiplicative_at(const std::vector<Rational>& values_from_1, long q);

struct DecomposeError : std::runtime_error {
    explicit DecomposeError(const std::string& what) : std::runtime_error(what) {}
};

// Decomposition of a multiplicative sequence per the canonical form. For a
// prime power k = p^e the prime is forced; otherwise the sequence must be an
// LRS and the prime defaults to 2 (p_override picks another). The result is
// re-synthesized and compared against the full input range; a mismatch
// throws DecomposeError. r_max bounds the exponent search in n^r chi(n).
MultiplicativeDecomposition decompose(const std::vector<Rational>& values_from_1, long k,
                                      std::optional<long> p_override = std::nullopt,
                                      long r_max = 8);

// f(1..N) from the canonical form.
std::vector<Rational> synthesize(const MultiplicativeDecomposition& dec, long n);

struct CanonicalDecomposition {
    MultiplicativeDecomposition dec;
    // False when f vanishes off p eventually: the (r, chi) pair is then not
    // unique and the canonical form is one valid choice.
    bool unique = true;
};

// Enforces g(0) = 1, chi vanishing on multiples of p, and minimal
// (recurrence, preperiod, period) presentations.
CanonicalDecomposition canonicalize(const MultiplicativeDecomposition& dec);

struct GqReport {
    TruncSeries<Cyclo> series;
    bool supported_on_q_squared = true;
    long first_violation = -1;
    bool coefficients_rational = true;
};

// G_q(x) = sum_{j=0}^{q-1} F(omega^j x) - q f(q) F(x^q) over Q(zeta_q), with
// the support report: for multiplicative f all nonzero coefficients sit at
// exponents divisible by q^2.
GqReport gq_series(const SequenceSpec& spec, long q, long n);

// H = sum_j omega^{-j} F(omega^j x), computed both by twisting and by the
// direct formula sum_m q f(qm+1) x^{qm+1}; disagreement throws
// std::logic_error since it falsifies the arithmetic.
TruncSeries<Cyclo> h_series(const SequenceSpec& spec, long q, long n);

struct AvgCheckResult {
    bool holds = true;
    long fails_at = -1;
};

// Exact check of sum_{j=0}^{q-1} F(omega^j x) = q f(q) F(x^q) to order N.
AvgCheckResult unit_root_avg_check(const SequenceSpec& spec, long q, long n);

struct CoprimalityViolation {
    long i, n, j;
    std::string gcd;
};

struct CoprimalityReport {
    bool ok = true;
    std::vector<CoprimalityViolation> violations;
};

// For P with rational roots only: gcd over Q(zeta_q) of P(x^{k^i}) and
// P(omega^j x^n) must be a power of x for 0 <= i <= i_max, 0 <= n <= n_max,
// 1 <= j <= q-1.
CoprimalityReport coprimality_probe(const UniPoly<Rational>& p, long q, long k,
                                    long i_max, long n_max);

} // namespace mahlerkit
