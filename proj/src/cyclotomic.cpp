#include "mahlerkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace mahlerkit {

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

namespace {

std::mutex g_cyclo_mutex;
std::map<long, UniPoly<Rational>> g_cyclo_cache;

UniPoly<Rational> x_pow_minus_one(long n) {
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[0] = Rational(-1);
    c.back() = Rational(1);
    return UniPoly<Rational>(std::move(c));
}

// Assumes the cache mutex is held.
const UniPoly<Rational>& cyclotomic_locked(long d) {
    auto it = g_cyclo_cache.find(d);
    if (it != g_cyclo_cache.end()) return it->second;
    UniPoly<Rational> p = x_pow_minus_one(d);
    for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [q, r] = poly_divmod(p, cyclotomic_locked(e));
        if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
        p = std::move(q);
    }
    return g_cyclo_cache.emplace(d, std::move(p)).first->second;
}

} // namespace

const UniPoly<Rational>& cyclotomic_poly(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(d);
}

std::vector<long> orders_with_phi_at_most(long bound) {
    std::vector<long> out;
    if (bound < 1) return out;
    // phi(d) >= sqrt(d/2) for all d, so phi(d) <= bound implies d <= 2*bound^2.
    long limit = 2 * bound * bound + 1;
    if (limit < 10000) {
        for (long d = 1; d <= limit; ++d)
            if (euler_phi(d) <= bound) out.push_back(d);
        return out;
    }
    std::vector<long> phi(static_cast<size_t>(limit) + 1);
    for (long i = 0; i <= limit; ++i) phi[i] = i;
    for (long p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue; // not prime
        for (long m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
    }
    for (long d = 1; d <= limit; ++d)
        if (phi[d] <= bound) out.push_back(d);
    return out;
}

mpz_class cyclotomic_value_at(long d, long t) {
    mpz_class num = 1, den = 1;
    for (long e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = moebius(e);
        if (mu == 0) continue;
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(t),
                      static_cast<unsigned long>(d / e));
        v -= 1;
        if (mu > 0) num *= v; else den *= v;
    }
    if (den == 0) throw std::invalid_argument("cyclotomic_value_at: t is a root of unity factor");
    return num / den;
}

// --- Cyclo ---

Cyclo Cyclo::zeta(long d) {
    if (d < 1) throw std::invalid_argument("Cyclo::zeta: d must be positive");
    return from_poly(d, UniPoly<Rational>::x());
}

Cyclo Cyclo::from_poly(long d, const UniPoly<Rational>& a) {
    const UniPoly<Rational>& phi_d = cyclotomic_poly(d);
    UniPoly<Rational> r = poly_divmod(a, phi_d).second;
    std::vector<Rational> c(static_cast<size_t>(euler_phi(d)), Rational(0));
    for (long i = 0; i <= r.degree(); ++i) c[static_cast<size_t>(i)] = r.coeff(i);
    return Cyclo(d, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const auto& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclo::to_rational() const {
    if (!is_rational()) throw std::invalid_argument("Cyclo: element is not rational");
    return c_[0];
}

Cyclo Cyclo::embed(long m) const {
    if (m == d_) return *this;
    if (m % d_ != 0) throw std::invalid_argument("Cyclo::embed: conductor must divide target");
    // zeta_d = zeta_m^{m/d}
    return from_poly(m, to_poly().compose_power(m / d_));
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
    if (a.d_ == b.d_) return;
    long l = std::lcm(a.d_, b.d_);
    a = a.embed(l);
    b = b.embed(l);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    align(a, b);
    return from_poly(a.d_, a.to_poly() * b.to_poly());
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::invalid_argument("Cyclo: inverse of zero");
    // Phi_d is irreducible over Q, so any nonzero residue is invertible.
    auto [g, u, v] = poly_xgcd(to_poly(), cyclotomic_poly(d_));
    (void)v;
    if (g.degree() != 0) throw std::logic_error("Cyclo: xgcd against Phi_d not constant");
    return from_poly(d_, u / g.coeff(0));
}

Cyclo Cyclo::operator/(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    align(a, b);
    return a * b.inverse();
}

bool Cyclo::operator==(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace mahlerkit
