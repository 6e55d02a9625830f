#include "mahlerkit/linalg.hpp"

namespace mahlerkit {

std::vector<long> rref(QMat& m) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long sel = -1;
        for (long i = row; i < rows; ++i) {
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(sel)]);
        Rational inv = Rational(1) / m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (long j = col; j < cols; ++j)
            m[static_cast<size_t>(row)][static_cast<size_t>(j)] *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == row) continue;
            Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (long j = col; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    QMat aug(rows, QVec(cols + 1, Rational(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<long> pivots = rref(aug);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == static_cast<long>(cols)) return std::nullopt; // 0 = 1 row
    QVec x(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug[r][cols];
    return x;
}

std::optional<QVec> nullspace_vector(const QMat& a, long cols) {
    QMat m = a;
    if (m.empty()) {
        // No constraints: e_0 spans a line of the full space.
        if (cols == 0) return std::nullopt;
        QVec x(static_cast<size_t>(cols), Rational(0));
        x[0] = Rational(1);
        return x;
    }
    std::vector<long> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    long free_col = -1;
    for (long j = 0; j < cols; ++j) {
        if (!is_pivot[static_cast<size_t>(j)]) {
            free_col = j;
            break;
        }
    }
    if (free_col < 0) return std::nullopt;
    QVec x(static_cast<size_t>(cols), Rational(0));
    x[static_cast<size_t>(free_col)] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = -m[r][static_cast<size_t>(free_col)];
    return x;
}

} // namespace mahlerkit
