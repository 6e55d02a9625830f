#pragma once

#include <optional>
#include <vector>

#include "mahlerkit/rational.hpp"

namespace mahlerkit {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row major

// Reduced row echelon form in place; returns pivot column per row rank order.
std::vector<long> rref(QMat& m);

// Solves A x = b exactly; nullopt when inconsistent. A is rows x cols.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

// Canonical nullspace vector of A x = 0: the RREF basis vector attached to
// the first free column; nullopt when the kernel is trivial.
std::optional<QVec> nullspace_vector(const QMat& a, long cols);

} // namespace mahlerkit
