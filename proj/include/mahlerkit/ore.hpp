#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mahlerkit/series.hpp"
#include "mahlerkit/seqspec.hpp"
#include "mahlerkit/unipoly.hpp"

namespace mahlerkit {

// Element of K(x): reduced fraction with monic denominator.
template <class K>
class FracPoly {
public:
    FracPoly() : num_(), den_(UniPoly<K>::one()) {}
    explicit FracPoly(UniPoly<K> num) : num_(std::move(num)), den_(UniPoly<K>::one()) {}
    FracPoly(UniPoly<K> num, UniPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("FracPoly: zero denominator");
        reduce();
    }
    static FracPoly constant(const K& a) { return FracPoly(UniPoly<K>::constant(a)); }

    const UniPoly<K>& num() const { return num_; }
    const UniPoly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == UniPoly<K>::one(); }

    FracPoly operator-() const { return FracPoly(-num_, den_, nullptr); }
    FracPoly operator+(const FracPoly& o) const {
        return FracPoly(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    FracPoly operator-(const FracPoly& o) const { return *this + (-o); }
    FracPoly operator*(const FracPoly& o) const {
        return FracPoly(num_ * o.num_, den_ * o.den_);
    }
    FracPoly operator/(const FracPoly& o) const {
        if (o.is_zero()) throw std::invalid_argument("FracPoly: division by zero");
        return FracPoly(num_ * o.den_, den_ * o.num_);
    }
    bool operator==(const FracPoly& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FracPoly& o) const { return !(*this == o); }

    // Substitute x^m for x in both numerator and denominator.
    FracPoly compose_power(long m) const {
        return FracPoly(num_.compose_power(m), den_.compose_power(m));
    }

private:
    FracPoly(UniPoly<K> num, UniPoly<K> den, std::nullptr_t)
        : num_(std::move(num)), den_(std::move(den)) {}
    void reduce() {
        if (num_.is_zero()) { den_ = UniPoly<K>::one(); return; }
        UniPoly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divmod(num_, g).first;
            den_ = poly_divmod(den_, g).first;
        }
        K lc = den_.leading();
        if (lc != K(1)) {
            num_ = num_ / lc;
            den_ = den_ / lc;
        }
    }
    UniPoly<K> num_, den_;
};

// Skew polynomial in the Mahler operator M_k, coefficients in K(x) written on
// the left: f = sum_i c_i(x) M_k^i, with M_k r(x) = r(x^k) M_k. Degree of the
// zero operator is -1 (standing in for -infinity).
template <class K>
class OrePoly {
public:
    explicit OrePoly(long k) : k_(k) { check_base(); }
    OrePoly(long k, std::vector<FracPoly<K>> coeffs) : k_(k), c_(std::move(coeffs)) {
        check_base();
        trim();
    }
    static OrePoly one(long k) { return OrePoly(k, {FracPoly<K>::constant(K(1))}); }
    static OrePoly monomial(long k, long deg, FracPoly<K> coeff) {
        std::vector<FracPoly<K>> c(static_cast<size_t>(deg) + 1);
        c.back() = std::move(coeff);
        return OrePoly(k, std::move(c));
    }

    long base() const { return k_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FracPoly<K>>& coeffs() const { return c_; }
    FracPoly<K> coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return FracPoly<K>();
        return c_[static_cast<size_t>(i)];
    }

    OrePoly operator-() const {
        OrePoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    OrePoly operator+(const OrePoly& o) const {
        require_same_base(o);
        std::vector<FracPoly<K>> out(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) out[i] = out[i] + o.c_[i];
        return OrePoly(k_, std::move(out));
    }
    OrePoly operator-(const OrePoly& o) const { return *this + (-o); }

    bool operator==(const OrePoly& o) const { return k_ == o.k_ && c_ == o.c_; }

private:
    void check_base() const {
        if (k_ < 2) throw std::invalid_argument("OrePoly: base must be >= 2");
    }
    void require_same_base(const OrePoly& o) const {
        if (k_ != o.k_) throw std::invalid_argument("OrePoly: base mismatch");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    long k_;
    std::vector<FracPoly<K>> c_;
};

// M_k^i r(x) = r(x^{k^i}) M_k^i.
template <class K>
FracPoly<K> mahler_sigma(const FracPoly<K>& r, long k, long i) {
    long long pw = 1;
    for (long t = 0; t < i; ++t) pw *= k;
    return r.compose_power(static_cast<long>(pw));
}

template <class K>
OrePoly<K> ore_mul(const OrePoly<K>& f, const OrePoly<K>& g) {
    if (f.base() != g.base()) throw std::invalid_argument("ore_mul: base mismatch");
    if (f.is_zero() || g.is_zero()) return OrePoly<K>(f.base());
    std::vector<FracPoly<K>> out(static_cast<size_t>(f.degree() + g.degree()) + 1);
    for (long i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (long j = 0; j <= g.degree(); ++j) {
            if (g.coeff(j).is_zero()) continue;
            out[static_cast<size_t>(i + j)] =
                out[static_cast<size_t>(i + j)] + f.coeff(i) * mahler_sigma(g.coeff(j), f.base(), i);
        }
    }
    return OrePoly<K>(f.base(), std::move(out));
}

// Left division: f = q*g + r with deg r < deg g; unique for this convention.
template <class K>
std::pair<OrePoly<K>, OrePoly<K>> ore_divmod(const OrePoly<K>& f, const OrePoly<K>& g) {
    if (g.is_zero()) throw std::invalid_argument("ore_divmod: division by zero operator");
    if (f.base() != g.base()) throw std::invalid_argument("ore_divmod: base mismatch");
    const long k = f.base();
    OrePoly<K> q(k), r = f;
    const long dg = g.degree();
    while (!r.is_zero() && r.degree() >= dg) {
        long t = r.degree() - dg;
        // Cancel the top term: (c M^t)(b_m M^m) = c * sigma^t(b_m) M^{t+m}.
        FracPoly<K> c = r.coeff(r.degree()) / mahler_sigma(g.coeff(dg), k, t);
        OrePoly<K> m = OrePoly<K>::monomial(k, t, std::move(c));
        q = q + m;
        r = r - ore_mul(m, g);
    }
    return {q, r};
}

// Multiply through by the lcm of the coefficient denominators: returns
// (c, c*f) where c is the monic lcm and c*f has polynomial coefficients.
template <class K>
std::pair<UniPoly<K>, OrePoly<K>> clear_denominators(const OrePoly<K>& f) {
    UniPoly<K> c = UniPoly<K>::one();
    for (long i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        c = poly_lcm(c, f.coeff(i).den());
    }
    std::vector<FracPoly<K>> out(static_cast<size_t>(f.degree()) + 1);
    for (long i = 0; i <= f.degree(); ++i)
        out[static_cast<size_t>(i)] = FracPoly<K>(c) * f.coeff(i);
    return {c, OrePoly<K>(f.base(), std::move(out))};
}

// sum_i P_i(x) F(x^{k^i}), truncation tracked; coefficients must be
// polynomial (clear denominators first).
template <class K>
TruncSeries<K> apply_operator(const OrePoly<K>& f, const TruncSeries<K>& series) {
    long i_min = -1;
    for (long i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        if (!f.coeff(i).is_polynomial())
            throw std::invalid_argument("apply_operator: fractional coefficients present");
        if (i_min < 0) i_min = i;
    }
    if (series.order() < 0) return TruncSeries<K>();
    if (i_min < 0) return TruncSeries<K>::zero(series.order());
    long long pw = 1;
    for (long t = 0; t < i_min; ++t) pw *= f.base();
    // Term i is provable to order N * k^i, so the sum is provable to
    // N * k^{i_min}.
    const long target = static_cast<long>(series.order() * pw);
    TruncSeries<K> acc = TruncSeries<K>::zero(target);
    long long pj = 1;
    for (long i = 0; i <= f.degree(); ++i, pj *= f.base()) {
        if (f.coeff(i).is_zero()) continue;
        TruncSeries<K> term = mahler_subst_to(series, static_cast<long>(pj), target);
        acc = acc + series_mul_poly(f.coeff(i).num(), term);
    }
    return acc;
}

struct MinimalOperator {
    OrePoly<Rational> op;      // coprime polynomial coefficients
    FracPoly<Rational> rhs;    // M F = rhs, verified to verified_order
    long verified_order = 0;
};

// Guessing with verification: among operators with deg_{M_k} <= d_m and
// polynomial coefficient degrees <= d_x, finds one of minimal M_k-degree
// (ties broken by minimal uniform coefficient degree, then the canonical
// reduced-echelon kernel vector) with M F equal to a rational function of
// numerator degree <= d_r, verified to the supplied order. Returns
// nullopt when no candidate within bounds verifies.
std::optional<MinimalOperator>
minimal_inhomogeneous_operator(const SequenceSpec& spec, long k, long d_m, long d_x,
                               long d_r, long order);

} // namespace mahlerkit
