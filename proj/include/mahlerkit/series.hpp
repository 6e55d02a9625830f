#pragma once

#include <stdexcept>
#include <vector>

#include "mahlerkit/cyclotomic.hpp"
#include "mahlerkit/unipoly.hpp"

namespace mahlerkit {

// Truncated formal power series: coefficients for exponents 0..order are
// known exactly; anything beyond is unknown, not zero. Every operation
// propagates the provable truncation order conservatively. An empty series
// (order == -1, no known coefficients) can arise from Cartier sections of
// short inputs.
template <class K>
class TruncSeries {
public:
    TruncSeries() = default; // empty, order -1
    explicit TruncSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {}

    static TruncSeries zero(long order) {
        return TruncSeries(std::vector<K>(static_cast<size_t>(order) + 1, K(0)));
    }
    static TruncSeries from_poly(const UniPoly<K>& p, long order) {
        TruncSeries s = zero(order);
        for (long i = 0; i <= p.degree() && i <= order; ++i) s.c_[i] = p.coeff(i);
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    bool empty() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    const K& coeff(long n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("TruncSeries: coefficient beyond provable order");
        return c_[static_cast<size_t>(n)];
    }

    bool is_zero_on_range() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }

    TruncSeries take(long new_order) const {
        if (new_order >= order()) return *this;
        if (new_order < 0) return TruncSeries();
        std::vector<K> out(c_.begin(), c_.begin() + new_order + 1);
        return TruncSeries(std::move(out));
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    // Known to min of the two orders.
    TruncSeries operator+(const TruncSeries& o) const {
        long n = std::min(order(), o.order());
        if (n < 0) return TruncSeries();
        TruncSeries r = zero(n);
        for (long i = 0; i <= n; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }

    TruncSeries operator*(const K& a) const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x *= a;
        return r;
    }

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

private:
    std::vector<K> c_;
};

// Full series product, provable to min of the two orders.
template <class K>
TruncSeries<K> series_mul(const TruncSeries<K>& f, const TruncSeries<K>& g) {
    long n = std::min(f.order(), g.order());
    if (n < 0) return TruncSeries<K>();
    std::vector<K> out(static_cast<size_t>(n) + 1, K(0));
    for (long i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (long j = 0; i + j <= n; ++j) out[i + j] += f.coeff(i) * g.coeff(j);
    }
    return TruncSeries<K>(std::move(out));
}

// Polynomial times series: exact for the polynomial side, so the result is
// provable to the series' order.
template <class K>
TruncSeries<K> series_mul_poly(const UniPoly<K>& p, const TruncSeries<K>& g) {
    long n = g.order();
    if (n < 0) return TruncSeries<K>();
    std::vector<K> out(static_cast<size_t>(n) + 1, K(0));
    for (long i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        for (long j = 0; i + j <= n; ++j) out[i + j] += p.coeff(i) * g.coeff(j);
    }
    return TruncSeries<K>(std::move(out));
}

// Cartier operator: coefficient at n is g(l*n + r); order floor((N - r)/l).
template <class K>
TruncSeries<K> cartier(const TruncSeries<K>& g, long l, long r) {
    if (l < 1 || r < 0 || r >= l) throw std::invalid_argument("cartier: residue out of range");
    std::vector<K> out;
    for (long n = 0; l * n + r <= g.order(); ++n) out.push_back(g.coeff(l * n + r));
    return TruncSeries<K>(std::move(out));
}

// Mahler substitution G(x) -> G(x^m); order N*m.
template <class K>
TruncSeries<K> mahler_subst(const TruncSeries<K>& g, long m) {
    if (m < 1) throw std::invalid_argument("mahler_subst: m must be >= 1");
    if (g.empty() || m == 1) return g;
    std::vector<K> out(static_cast<size_t>(g.order()) * m + 1, K(0));
    for (long n = 0; n <= g.order(); ++n) out[static_cast<size_t>(n) * m] = g.coeff(n);
    return TruncSeries<K>(std::move(out));
}

// G(x^m) truncated at `target` without materializing the full blow-up;
// requires g known to floor(target/m).
template <class K>
TruncSeries<K> mahler_subst_to(const TruncSeries<K>& g, long m, long target) {
    if (m < 1) throw std::invalid_argument("mahler_subst_to: m must be >= 1");
    if (target < 0) return TruncSeries<K>();
    if (g.order() < target / m)
        throw std::invalid_argument("mahler_subst_to: input truncation too short");
    std::vector<K> out(static_cast<size_t>(target) + 1, K(0));
    for (long n = 0; static_cast<long long>(n) * m <= target; ++n)
        out[static_cast<size_t>(n) * m] = g.coeff(n);
    return TruncSeries<K>(std::move(out));
}

// Coefficient at n multiplied by omega^{j*n}; same order.
template <class K>
TruncSeries<K> twist_series(const TruncSeries<K>& g, const K& omega, long j) {
    if (g.empty()) return g;
    K step = omega.pow(j);
    K w(1);
    std::vector<K> out;
    out.reserve(static_cast<size_t>(g.order()) + 1);
    for (long n = 0; n <= g.order(); ++n) {
        out.push_back(g.coeff(n) * w);
        w *= step;
    }
    return TruncSeries<K>(std::move(out));
}

inline TruncSeries<Cyclo> promote_series(const TruncSeries<Rational>& g) {
    std::vector<Cyclo> out;
    out.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) out.emplace_back(c);
    return TruncSeries<Cyclo>(std::move(out));
}

inline TruncSeries<Cyclo> twist_series(const TruncSeries<Rational>& g, const Cyclo& omega, long j) {
    return twist_series(promote_series(g), omega, j);
}

// prod_{j>=0} P0(x^{k^j}) mod x^{N+1}; factors with k^j > N contribute 1.
// Requires P0(0) = 1.
template <class K>
TruncSeries<K> infinite_product_truncated(const UniPoly<K>& p0, long k, long n) {
    if (k < 2) throw std::invalid_argument("infinite_product_truncated: k must be >= 2");
    if (p0.coeff(0) != K(1))
        throw std::invalid_argument("infinite_product_truncated: P0(0) must be 1");
    TruncSeries<K> acc = TruncSeries<K>::from_poly(UniPoly<K>::one(), n);
    for (long pw = 1; pw <= n; pw *= k) {
        acc = series_mul_poly(p0.compose_power(pw), acc);
        if (pw > n / k) break; // next power would overflow past N anyway
    }
    return acc;
}

// Power series expansion of P/Q to the requested order; Q(0) != 0.
template <class K>
TruncSeries<K> rational_to_series(const UniPoly<K>& p, const UniPoly<K>& q, long n) {
    if (q.coeff(0).is_zero())
        throw std::invalid_argument("rational_to_series: Q(0) = 0");
    if (n < 0) return TruncSeries<K>();
    const K q0 = q.coeff(0);
    std::vector<K> out(static_cast<size_t>(n) + 1, K(0));
    for (long m = 0; m <= n; ++m) {
        K acc = p.coeff(m);
        for (long i = 1; i <= std::min<long>(m, q.degree()); ++i)
            acc -= q.coeff(i) * out[m - i];
        out[m] = acc / q0;
    }
    return TruncSeries<K>(std::move(out));
}

} // namespace mahlerkit
