#pragma once

#include <optional>
#include <vector>

#include "coherent/rational.hpp"

namespace coherent::linalg {

using RatMat = std::vector<std::vector<Rat>>;
using IntMat = std::vector<std::vector<Int>>;

// Rank by exact fraction-preserving Gaussian elimination (destructive).
int rank(RatMat m);

// Particular solution of A x = b over the rationals, free variables set to
// zero; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(RatMat a, std::vector<Rat> b);

// Basis of { x : A x = 0 }, one vector per free column of the RREF.
std::vector<std::vector<Rat>> nullspace(RatMat a);

// Rows spanning { y : y^T A = 0 }, scaled to integers with content 1.
IntMat integer_left_nullspace(const RatMat& a);

// Integer solution of Y k = c (diagonalization by unimodular row and column
// operations, i.e. a Smith-style reduction); nullopt when no integer
// solution exists.
std::optional<std::vector<Int>> solve_integer(IntMat y, std::vector<Int> c);

}
