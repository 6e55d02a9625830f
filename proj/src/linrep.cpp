#include "mahlerkit/linrep.hpp"
#include "mahlerkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mahlerkit {

namespace {

QVec row_times_mat(const QVec& w, const std::vector<Rational>& mat, long d) {
    QVec out(static_cast<size_t>(d), Rational(0));
    for (long t = 0; t < d; ++t) {
        if (w[static_cast<size_t>(t)].is_zero()) continue;
        for (long c = 0; c < d; ++c)
            out[static_cast<size_t>(c)] +=
                w[static_cast<size_t>(t)] * mat[static_cast<size_t>(t * d + c)];
    }
    return out;
}

Rational dot(const QVec& a, const QVec& b) {
    Rational acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

} // namespace

Rational LinRep::eval(long long n) const {
    if (n < 0) throw std::invalid_argument("LinRep::eval: negative index");
    std::vector<long> digits;
    for (long long m = n; m > 0; m /= k) digits.push_back(static_cast<long>(m % k));
    QVec w = u;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        w = row_times_mat(w, mats[static_cast<size_t>(*it)], dim);
    return dot(w, v);
}

std::vector<Rational> LinRep::eval_range(long long n_max) const {
    std::vector<Rational> out(static_cast<size_t>(n_max) + 1, Rational(0));
    out[0] = dot(u, v);
    // Depth-first over digit strings without leading zeros; each node shares
    // the partial product u * A(prefix).
    struct Frame { long long n; QVec w; };
    std::vector<Frame> stack;
    for (long j = k - 1; j >= 1; --j) {
        if (j <= n_max)
            stack.push_back({j, row_times_mat(u, mats[static_cast<size_t>(j)], dim)});
    }
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        out[static_cast<size_t>(f.n)] = dot(f.w, v);
        for (long j = k - 1; j >= 0; --j) {
            long long child = f.n * k + j;
            if (child <= n_max)
                stack.push_back({child, row_times_mat(f.w, mats[static_cast<size_t>(j)], dim)});
        }
    }
    return out;
}

namespace {

struct KernelNode {
    long e;
    long long r;
};

// Number of n >= 0 with k^e * n + r <= N.
long avail_len(long long n_top, long long pw, long long r) {
    if (r > n_top) return 0;
    return static_cast<long>((n_top - r) / pw) + 1;
}

QVec node_values(const std::vector<Rational>& f, long long pw, long long r, long len) {
    QVec out;
    out.reserve(static_cast<size_t>(len));
    for (long n = 0; n < len; ++n)
        out.push_back(f[static_cast<size_t>(pw * n + r)]);
    return out;
}

} // namespace

KernelGuessResult kernel_guess(const std::vector<Rational>& values, long k, long max_dim) {
    if (k < 2) throw std::invalid_argument("kernel_guess: k must be >= 2");
    if (max_dim < 1) throw std::invalid_argument("kernel_guess: max_dim must be >= 1");
    const long long n_top = static_cast<long long>(values.size()) - 1;
    if (n_top < 3) throw std::invalid_argument("kernel_guess: N too small");

    bool all_zero = true;
    for (const auto& x : values)
        if (!x.is_zero()) { all_zero = false; break; }
    if (all_zero) {
        LinRep rep;
        rep.k = k;
        rep.dim = 1;
        rep.u = {Rational(1)};
        rep.v = {Rational(0)};
        rep.mats.assign(static_cast<size_t>(k), {Rational(1)});
        return KernelGuess{std::move(rep), static_cast<long>(n_top), {{0, 0}}};
    }

    std::vector<KernelNode> basis_nodes{{0, 0}};
    std::vector<QVec> basis_vecs{values};
    std::vector<long> pivot_rows{0};
    {
        // First pivot: first nonzero entry of f.
        long p = 0;
        while (values[static_cast<size_t>(p)].is_zero()) ++p;
        pivot_rows[0] = p;
    }
    // coords[t][j] = coordinates of the digit-j child of basis element t.
    std::vector<std::vector<QVec>> coords;

    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long t : frontier) {
            const KernelNode parent = basis_nodes[static_cast<size_t>(t)];
            if (static_cast<long>(coords.size()) <= t) coords.resize(static_cast<size_t>(t) + 1);
            coords[static_cast<size_t>(t)].assign(static_cast<size_t>(k), QVec{});
            long long pw_parent = 1;
            for (long i = 0; i < parent.e; ++i) pw_parent *= k;
            const long long pw_child = pw_parent * k;
            for (long j = 0; j < k; ++j) {
                const long long r_child = parent.r + static_cast<long long>(j) * pw_parent;
                long len = avail_len(n_top, pw_child, r_child);
                long dim = static_cast<long>(basis_vecs.size());
                for (const auto& bv : basis_vecs)
                    len = std::min(len, static_cast<long>(bv.size()));
                if (len < 2 * (dim + 1))
                    throw std::invalid_argument("kernel_guess: N too small for safe elimination");
                QVec child = node_values(values, pw_child, r_child, len);

                // Candidate coordinates from the pivot rows, then verified on
                // the full shared range.
                QMat a(pivot_rows.size(), QVec(static_cast<size_t>(dim), Rational(0)));
                QVec b(pivot_rows.size(), Rational(0));
                bool pivots_ok = true;
                for (size_t s = 0; s < pivot_rows.size(); ++s) {
                    if (pivot_rows[s] >= len) { pivots_ok = false; break; }
                    for (long c = 0; c < dim; ++c)
                        a[s][static_cast<size_t>(c)] =
                            basis_vecs[static_cast<size_t>(c)][static_cast<size_t>(pivot_rows[s])];
                    b[s] = child[static_cast<size_t>(pivot_rows[s])];
                }
                if (!pivots_ok)
                    throw std::invalid_argument("kernel_guess: N too small for safe elimination");
                std::optional<QVec> x = solve_linear(a, b);
                bool dependent = false;
                if (x) {
                    dependent = true;
                    for (long i = 0; i < len; ++i) {
                        Rational acc(0);
                        for (long c = 0; c < dim; ++c)
                            acc += (*x)[static_cast<size_t>(c)] *
                                   basis_vecs[static_cast<size_t>(c)][static_cast<size_t>(i)];
                        if (acc != child[static_cast<size_t>(i)]) { dependent = false; break; }
                    }
                }
                if (dependent) {
                    coords[static_cast<size_t>(t)][static_cast<size_t>(j)] = std::move(*x);
                    continue;
                }
                if (dim >= max_dim)
                    return NoRepWithinBounds{"kernel rank exceeds max_dim"};
                basis_nodes.push_back({parent.e + 1, r_child});
                basis_vecs.push_back(node_values(values, pw_child, r_child,
                                                 avail_len(n_top, pw_child, r_child)));
                next.push_back(static_cast<long>(basis_nodes.size()) - 1);
                QVec unit(static_cast<size_t>(dim) + 1, Rational(0));
                unit.back() = Rational(1);
                coords[static_cast<size_t>(t)][static_cast<size_t>(j)] = std::move(unit);
                // Refresh pivot rows on the shared range.
                {
                    long shared = len;
                    QMat m(basis_vecs.size());
                    for (size_t c = 0; c < basis_vecs.size(); ++c)
                        m[c] = QVec(basis_vecs[c].begin(), basis_vecs[c].begin() + shared);
                    pivot_rows = rref(m);
                    if (static_cast<long>(pivot_rows.size()) != static_cast<long>(basis_vecs.size()))
                        throw std::logic_error("kernel_guess: basis lost rank");
                }
            }
        }
        frontier = std::move(next);
    }

    const long d = static_cast<long>(basis_vecs.size());
    LinRep rep;
    rep.k = k;
    rep.dim = d;
    rep.u.assign(static_cast<size_t>(d), Rational(0));
    for (long c = 0; c < d; ++c) rep.u[static_cast<size_t>(c)] = basis_vecs[static_cast<size_t>(c)][0];
    rep.v.assign(static_cast<size_t>(d), Rational(0));
    rep.v[0] = Rational(1);
    rep.mats.assign(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(d * d), Rational(0)));
    for (long t = 0; t < d; ++t) {
        for (long j = 0; j < k; ++j) {
            const QVec& co = coords[static_cast<size_t>(t)][static_cast<size_t>(j)];
            // A(j) = B_j^T for the kernel relation s_t(k n + j) = sum_c B_j[t][c] s_c(n).
            for (size_t c = 0; c < co.size(); ++c)
                rep.mats[static_cast<size_t>(j)][c * static_cast<size_t>(d) + static_cast<size_t>(t)] = co[c];
        }
    }

    std::vector<Rational> predicted = rep.eval_range(n_top);
    for (long long n = 0; n <= n_top; ++n) {
        if (predicted[static_cast<size_t>(n)] != values[static_cast<size_t>(n)])
            return NoRepWithinBounds{"self-verification failed at n = " + std::to_string(n)};
    }

    std::vector<std::pair<long, long long>> nodes;
    for (const auto& nd : basis_nodes) nodes.emplace_back(nd.e, nd.r);
    return KernelGuess{std::move(rep), static_cast<long>(n_top), std::move(nodes)};
}

KernelGuessResult subsequence_ap(const std::vector<Rational>& values, long a, long b,
                                 long k, long max_dim) {
    if (a < 1 || b < 0 || b >= a) throw std::invalid_argument("subsequence_ap: need a >= 1, 0 <= b < a");
    std::vector<Rational> g;
    for (long long n = 0; a * n + b < static_cast<long long>(values.size()); ++n)
        g.push_back(values[static_cast<size_t>(a * n + b)]);
    return kernel_guess(g, k, max_dim);
}

AutomaticProbe is_automatic_probe(const std::vector<Rational>& values, long k, long max_size) {
    const long long n_top = static_cast<long long>(values.size()) - 1;
    const long min_overlap = 4;
    std::vector<KernelNode> reps{{0, 0}};
    std::vector<QVec> rep_vecs{values};
    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long t : frontier) {
            const KernelNode parent = reps[static_cast<size_t>(t)];
            long long pw_parent = 1;
            for (long i = 0; i < parent.e; ++i) pw_parent *= k;
            for (long j = 0; j < k; ++j) {
                const long long r_child = parent.r + static_cast<long long>(j) * pw_parent;
                const long long pw_child = pw_parent * k;
                long len = avail_len(n_top, pw_child, r_child);
                if (len < min_overlap) return {false, 0};
                QVec child = node_values(values, pw_child, r_child, len);
                bool seen = false;
                for (const QVec& rv : rep_vecs) {
                    long overlap = std::min<long>(len, static_cast<long>(rv.size()));
                    if (overlap < min_overlap) return {false, 0};
                    bool eq = true;
                    for (long i = 0; i < overlap; ++i)
                        if (rv[static_cast<size_t>(i)] != child[static_cast<size_t>(i)]) { eq = false; break; }
                    if (eq) { seen = true; break; }
                }
                if (seen) continue;
                if (static_cast<long>(reps.size()) >= max_size) return {false, 0};
                reps.push_back({parent.e + 1, r_child});
                rep_vecs.push_back(std::move(child));
                next.push_back(static_cast<long>(reps.size()) - 1);
            }
        }
        frontier = std::move(next);
    }
    return {true, static_cast<long>(reps.size())};
}

} // namespace mahlerkit
