#include "mahlerkit/seqspec.hpp"

#include <numeric>
#include <stdexcept>

namespace mahlerkit {

long val_p(long long n, long p) {
    if (n == 0) throw std::invalid_argument("val_p: undefined at 0");
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

int legendre_symbol(long long n, long p) {
    long long a = n % p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler's criterion with exact modular exponentiation.
    long long result = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

Rational MultiplicativeDecomposition::eval(long long n) const {
    if (n < 1) throw std::invalid_argument("MultiplicativeDecomposition: n must be >= 1");
    long i = val_p(n, p);
    long long m = n;
    for (long t = 0; t < i; ++t) m /= p;
    return g.at(i) * Rational(static_cast<long>(m)).pow(r) * chi.chi(m);
}

namespace {

struct ValueVisitor {
    long n;

    std::vector<Rational> operator()(const ExplicitValues& e) const {
        std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
        for (size_t i = 0; i < e.values.size(); ++i) {
            long long idx = e.offset + static_cast<long long>(i);
            if (idx > n) break;
            out[static_cast<size_t>(idx)] = e.values[i];
        }
        // Every spec must produce f(0..N); explicit lists must cover the range.
        if (e.offset + static_cast<long long>(e.values.size()) - 1 < n)
            throw std::invalid_argument("SequenceSpec: explicit values too short for requested order");
        return out;
    }

    std::vector<Rational> operator()(const RationalSpec& r) const {
        return rational_to_series(r.num, r.den, n).coeffs();
    }

    std::vector<Rational> operator()(const LinRep& rep) const {
        return rep.eval_range(n);
    }

    std::vector<Rational> operator()(const LRSSpec& s) const {
        return s.values(n + 1);
    }

    std::vector<Rational> operator()(const MultiplicativeDecomposition& d) const {
        std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
        for (long long m = 1; m <= n; ++m) out[static_cast<size_t>(m)] = d.eval(m);
        return out;
    }

    std::vector<Rational> operator()(const BuiltinSpec& b) const {
        std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
        for (long long m = 0; m <= n; ++m) {
            switch (b.which) {
            case Builtin::Identity:
                out[static_cast<size_t>(m)] = Rational(static_cast<long>(m));
                break;
            case Builtin::One:
                out[static_cast<size_t>(m)] = Rational(1);
                break;
            case Builtin::TwoAdicPower:
                out[static_cast<size_t>(m)] =
                    m == 0 ? Rational(0) : Rational(1L << val_p(m, 2));
                break;
            case Builtin::OddPart:
                out[static_cast<size_t>(m)] =
                    m == 0 ? Rational(0)
                           : Rational(static_cast<long>(m >> val_p(m, 2)));
                break;
            case Builtin::PrincipalChar:
                if (b.modulus < 1) throw std::invalid_argument("PrincipalChar: bad modulus");
                out[static_cast<size_t>(m)] =
                    Rational(std::gcd(m, static_cast<long long>(b.modulus)) == 1 ? 1 : 0);
                break;
            case Builtin::QuadResChar:
                if (b.modulus < 3 || b.modulus % 2 == 0)
                    throw std::invalid_argument("QuadResChar: modulus must be an odd prime");
                out[static_cast<size_t>(m)] = Rational(legendre_symbol(m, b.modulus));
                break;
            }
        }
        return out;
    }
};

} // namespace

std::vector<Rational> SequenceSpec::values(long n) const {
    if (n < 0) throw std::invalid_argument("SequenceSpec: negative order");
    return std::visit(ValueVisitor{n}, source);
}

std::vector<Rational> SequenceSpec::values_from_1(long n) const {
    std::vector<Rational> v = values(n);
    v.erase(v.begin());
    return v;
}

TruncSeries<Rational> spec_to_series(const SequenceSpec& spec, long n) {
    return TruncSeries<Rational>(spec.values(n));
}

} // namespace mahlerkit
