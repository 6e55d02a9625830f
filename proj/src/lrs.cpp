#include "mahlerkit/lrs.hpp"

#include <numeric>
#include <stdexcept>

namespace mahlerkit {

std::vector<Rational> LRSSpec::values(long count) const {
    if (rec.size() != init.size())
        throw std::invalid_argument("LRSSpec: init length must equal order");
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    for (long n = 0; n < count; ++n) {
        if (n < order()) {
            out.push_back(init[static_cast<size_t>(n)]);
        } else {
            Rational acc(0);
            for (long i = 1; i <= order(); ++i)
                acc += rec[static_cast<size_t>(i - 1)] * out[static_cast<size_t>(n - i)];
            out.push_back(acc);
        }
    }
    return out;
}

Rational LRSSpec::at(long n) const {
    return values(n + 1).back();
}

BerlekampMasseyResult berlekamp_massey(const std::vector<Rational>& s) {
    const long n_vals = static_cast<long>(s.size());
    // Connection polynomial C with c_0 = 1; recurrence coefficients are -c_i.
    std::vector<Rational> c{Rational(1)}, b{Rational(1)};
    long len = 0, m = 1;
    Rational bb(1);
    for (long n = 0; n < n_vals; ++n) {
        Rational delta = s[static_cast<size_t>(n)];
        for (long i = 1; i <= len; ++i)
            delta += c[static_cast<size_t>(i)] * s[static_cast<size_t>(n - i)];
        if (delta.is_zero()) {
            ++m;
        } else if (2 * len <= n) {
            std::vector<Rational> t = c;
            Rational coef = delta / bb;
            if (static_cast<long>(c.size()) < static_cast<long>(b.size()) + m)
                c.resize(b.size() + static_cast<size_t>(m), Rational(0));
            for (size_t i = 0; i < b.size(); ++i)
                c[i + static_cast<size_t>(m)] -= coef * b[i];
            len = n + 1 - len;
            b = std::move(t);
            bb = delta;
            m = 1;
        } else {
            Rational coef = delta / bb;
            if (static_cast<long>(c.size()) < static_cast<long>(b.size()) + m)
                c.resize(b.size() + static_cast<size_t>(m), Rational(0));
            for (size_t i = 0; i < b.size(); ++i)
                c[i + static_cast<size_t>(m)] -= coef * b[i];
            ++m;
        }
    }
    LRSSpec spec;
    spec.rec.reserve(static_cast<size_t>(len));
    for (long i = 1; i <= len; ++i)
        spec.rec.push_back(-c[static_cast<size_t>(i)]);
    spec.init.assign(s.begin(), s.begin() + len);
    return {std::move(spec), 2 * len <= n_vals};
}

Rational EventuallyPeriodic::at(long long i) const {
    if (i < 0) throw std::invalid_argument("EventuallyPeriodic: negative index");
    if (i < static_cast<long long>(pre.size())) return pre[static_cast<size_t>(i)];
    if (per.empty()) throw std::invalid_argument("EventuallyPeriodic: empty period");
    return per[static_cast<size_t>((i - pre.size()) % per.size())];
}

std::vector<Rational> EventuallyPeriodic::stream(long count) const {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(at(i));
    return out;
}

bool EventuallyPeriodic::eventually_zero() const {
    for (const auto& v : per)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<EventuallyPeriodic> detect_eventually_periodic(const std::vector<Rational>& v,
                                                             long max_pre) {
    if (v.empty()) throw std::invalid_argument("detect_eventually_periodic: empty input");
    const long len = static_cast<long>(v.size());
    for (long per = 1; 2 * per <= len; ++per) {
        // Last mismatch position determines the minimal preperiod for this
        // period length; scanning from the top aborts quickly when invalid.
        long pre = 0;
        for (long i = len - per - 1; i >= 0; --i) {
            if (v[static_cast<size_t>(i)] != v[static_cast<size_t>(i + per)]) {
                pre = i + 1;
                break;
            }
        }
        if (len - pre < 2 * per) continue;
        if (max_pre >= 0 && pre > max_pre) continue;
        EventuallyPeriodic ep;
        ep.pre.assign(v.begin(), v.begin() + pre);
        ep.per.assign(v.begin() + pre, v.begin() + pre + per);
        return ep;
    }
    return std::nullopt;
}

std::optional<PowerPeriodicDecomposition>
power_periodic_decompose(const std::vector<Rational>& h, long r_max) {
    if (h.empty()) throw std::invalid_argument("power_periodic_decompose: empty input");
    // The periodic regime must explain at least half the data; otherwise any
    // stream whose last two entries agree would "detect" at r = 0.
    const long max_pre = static_cast<long>(h.size()) / 2;
    std::vector<Rational> q = h;
    for (long r = 0; r <= r_max; ++r) {
        if (r > 0)
            for (size_t i = 0; i < q.size(); ++i)
                q[i] = h[i] / Rational(static_cast<long>(i) + 1).pow(r);
        if (auto ep = detect_eventually_periodic(q, max_pre))
            return PowerPeriodicDecomposition{r, std::move(*ep)};
    }
    return std::nullopt;
}

ChiClassification classify_mult_ev_periodic(const EventuallyPeriodic& chi, long range) {
    if (range < 2) throw std::invalid_argument("classify_mult_ev_periodic: range too small");
    for (long m = 1; m <= range; ++m) {
        for (long n = m; m * n <= range; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (chi.chi(static_cast<long long>(m) * n) != chi.chi(m) * chi.chi(n))
                return {ChiClass::NotMultiplicative, m, n};
        }
    }
    if (chi.eventually_zero()) return {ChiClass::EventuallyZero, 0, 0};
    // Multiplicative and not eventually zero: the dichotomy forces pure
    // periodicity, checked here on the stored preperiod.
    const long per = static_cast<long>(chi.per.size());
    for (long i = 0; i < static_cast<long>(chi.pre.size()); ++i) {
        if (chi.at(i) != chi.at(i + per))
            throw std::logic_error("classify_mult_ev_periodic: classification dichotomy violated");
    }
    return {ChiClass::Periodic, 0, 0};
}

} // namespace mahlerkit
