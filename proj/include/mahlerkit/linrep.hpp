#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mahlerkit/rational.hpp"

namespace mahlerkit {

// Base-k linear representation (u, A_0..A_{k-1}, v): writing n in base k
// most-significant digit first as n_l ... n_0,
//   f(n) = u * A(n_l) * A(n_{l-1}) * ... * A(n_0) * v,
// and f(0) = u * v (empty digit string).
struct LinRep {
    long k = 2;
    long dim = 0;
    std::vector<Rational> u;               // 1 x d
    std::vector<std::vector<Rational>> mats; // k matrices, row-major d x d
    std::vector<Rational> v;               // d x 1

    Rational eval(long long n) const;
    // f(0..n_max) in one pass over the digit tree.
    std::vector<Rational> eval_range(long long n_max) const;
};

struct NoRepWithinBounds {
    std::string reason;
};

struct KernelGuess {
    LinRep rep;
    long verified_n = 0; // rep matches the data for all n <= verified_n
    // Kernel basis bookkeeping: (e, r) index pairs of the chosen module
    // generators, parallel to the basis dimension.
    std::vector<std::pair<long, long long>> basis_nodes;
};

using KernelGuessResult = std::variant<KernelGuess, NoRepWithinBounds>;

// Guesses a base-k linear representation from f(0..N) (values[n] = f(n)) by
// breadth-first kernel closure with exact elimination. Self-verifies on the
// whole range. Throws std::invalid_argument when N is too small to decide
// dependencies safely.
KernelGuessResult kernel_guess(const std::vector<Rational>& values, long k, long max_dim);

// Representation of n -> f(a*n + b), built by evaluating and re-guessing.
KernelGuessResult subsequence_ap(const std::vector<Rational>& values, long a, long b,
                                 long k, long max_dim);

struct AutomaticProbe {
    bool closed = false;
    long kernel_size = 0; // meaningful when closed
};

// Collects distinct kernel sequences breadth-first, comparing value vectors
// on the shared index range; reports the count when the kernel closes within
// max_size, otherwise ExceedsHorizon (closed = false).
AutomaticProbe is_automatic_probe(const std::vector<Rational>& values, long k, long max_size);

} // namespace mahlerkit
