#include "mahlerkit/ore.hpp"
#include "mahlerkit/linalg.hpp"

#include <stdexcept>

namespace mahlerkit {

std::optional<MinimalOperator>
minimal_inhomogeneous_operator(const SequenceSpec& spec, long k, long d_m, long d_x,
                               long d_r, long order) {
    if (k < 2) throw std::invalid_argument("minimal_inhomogeneous_operator: k must be >= 2");
    if (d_m < 0 || d_x < 0 || d_r < 0)
        throw std::invalid_argument("minimal_inhomogeneous_operator: negative bounds");
    const long max_unknowns = (d_m + 1) * (d_x + 1);
    if (order < d_r + max_unknowns + 8)
        throw std::invalid_argument("minimal_inhomogeneous_operator: insufficient truncation");

    const std::vector<Rational> f = spec.values(order);
    const TruncSeries<Rational> series(f);

    // Search B = sum b_i(x) M_k^i with polynomial coefficients and
    // B F = U, deg U <= d_r: linear in the b_i once the low-degree window is
    // dropped. Coefficient of x^e in x^t F(x^{k^i}) is f((e - t) / k^i).
    for (long m = 0; m <= d_m; ++m) {
        long long pw_top = 1;
        for (long t = 0; t < m; ++t) pw_top *= k;
        if (pw_top > order) break; // M_k^m already sees nothing below the order
        for (long dxc = 0; dxc <= d_x; ++dxc) {
            const long cols = (m + 1) * (dxc + 1);
            QMat a;
            a.reserve(static_cast<size_t>(order - d_r));
            for (long e = d_r + 1; e <= order; ++e) {
                QVec row(static_cast<size_t>(cols), Rational(0));
                long long pw = 1;
                for (long i = 0; i <= m; ++i, pw *= k) {
                    for (long t = 0; t <= dxc; ++t) {
                        long long rem = e - t;
                        if (rem >= 0 && rem % pw == 0)
                            row[static_cast<size_t>(i * (dxc + 1) + t)] =
                                f[static_cast<size_t>(rem / pw)];
                    }
                }
                a.push_back(std::move(row));
            }
            std::optional<QVec> x = nullspace_vector(a, cols);
            if (!x) continue;

            std::vector<FracPoly<Rational>> bc(static_cast<size_t>(m) + 1);
            for (long i = 0; i <= m; ++i) {
                std::vector<Rational> cf(static_cast<size_t>(dxc) + 1, Rational(0));
                for (long t = 0; t <= dxc; ++t)
                    cf[static_cast<size_t>(t)] = (*x)[static_cast<size_t>(i * (dxc + 1) + t)];
                bc[static_cast<size_t>(i)] = FracPoly<Rational>(UniPoly<Rational>(std::move(cf)));
            }
            OrePoly<Rational> b(k, std::move(bc));
            if (b.is_zero()) continue;
            if (b.degree() != m) continue; // a lower M_k-degree pass owns this one

            TruncSeries<Rational> bf = apply_operator(b, series).take(order);
            UniPoly<Rational> u;
            {
                std::vector<Rational> uc;
                for (long e = 0; e <= std::min<long>(d_r, bf.order()); ++e)
                    uc.push_back(bf.coeff(e));
                u = UniPoly<Rational>(std::move(uc));
            }

            // Normalize to coprime polynomial coefficients; the leftover
            // scalar is fixed by making the lowest nonzero coefficient of the
            // lowest-index coefficient equal to 1.
            UniPoly<Rational> g;
            for (long i = 0; i <= b.degree(); ++i) g = poly_gcd(g, b.coeff(i).num());
            std::vector<FracPoly<Rational>> mc(static_cast<size_t>(b.degree()) + 1);
            for (long i = 0; i <= b.degree(); ++i)
                mc[static_cast<size_t>(i)] =
                    FracPoly<Rational>(poly_divmod(b.coeff(i).num(), g).first);
            OrePoly<Rational> op(k, std::move(mc));
            long i_low = 0;
            while (op.coeff(i_low).is_zero()) ++i_low;
            Rational c = op.coeff(i_low).num().low_coeff();
            {
                std::vector<FracPoly<Rational>> sc(static_cast<size_t>(op.degree()) + 1);
                for (long i = 0; i <= op.degree(); ++i)
                    sc[static_cast<size_t>(i)] =
                        FracPoly<Rational>(op.coeff(i).num() / c);
                op = OrePoly<Rational>(k, std::move(sc));
            }
            FracPoly<Rational> rhs(u, g * c);
            if (rhs.den().coeff(0).is_zero()) continue; // not a power series identity

            TruncSeries<Rational> lhs = apply_operator(op, series).take(order);
            TruncSeries<Rational> rhs_series = rational_to_series(rhs.num(), rhs.den(), lhs.order());
            if (!(lhs == rhs_series.take(lhs.order()))) continue;

            return MinimalOperator{std::move(op), std::move(rhs), lhs.order()};
        }
    }
    return std::nullopt;
}

} // namespace mahlerkit
