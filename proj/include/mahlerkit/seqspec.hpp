#pragma once

#include <variant>
#include <vector>

#include "mahlerkit/decomp.hpp"
#include "mahlerkit/linrep.hpp"
#include "mahlerkit/lrs.hpp"
#include "mahlerkit/series.hpp"
#include "mahlerkit/unipoly.hpp"

namespace mahlerkit {

// Built-in sequence generators. Multiplicative generators put 0 at n = 0;
// multiplicativity logic ignores f(0) throughout.
enum class Builtin {
    Identity,       // f(n) = n
    One,            // f(n) = 1 for n >= 1, f(0) = 1
    TwoAdicPower,   // f(n) = 2^{val_2(n)}, f(0) = 0
    OddPart,        // f(n) = n / 2^{val_2(n)}, f(0) = 0
    PrincipalChar,  // f(n) = [gcd(n, modulus) = 1]
    QuadResChar     // Legendre symbol (n | modulus), modulus an odd prime
};

struct ExplicitValues {
    std::vector<Rational> values;
    long offset = 1; // values[0] is f(offset); entries below offset are 0
};

struct RationalSpec {
    UniPoly<Rational> num, den; // den(0) != 0
};

struct BuiltinSpec {
    Builtin which = Builtin::One;
    long modulus = 1; // for the character generators
};

// Any sequence source that can produce f(0..N) exactly for any N.
struct SequenceSpec {
    std::variant<ExplicitValues, RationalSpec, LinRep, LRSSpec,
                 MultiplicativeDecomposition, BuiltinSpec>
        source;

    // f(0..n) inclusive.
    std::vector<Rational> values(long n) const;
    // f(1..n) inclusive.
    std::vector<Rational> values_from_1(long n) const;
};

TruncSeries<Rational> spec_to_series(const SequenceSpec& spec, long n);

long val_p(long long n, long p);
int legendre_symbol(long long n, long p);

} // namespace mahlerkit
