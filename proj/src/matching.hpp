#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "exponent.hpp"

namespace hartogs {

// Permutations are stored as sigma[j] = index picked for slot j, so the
// divisibility condition reads: a[sigma[j]] / b[j] natural for every j.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);
Perm compose_perm(const Perm& outer, const Perm& inner); // (outer o inner)[j] = outer[inner[j]]

// Enumeration result for { sigma : a_sigma / b in N^n }.
struct MatchingSet {
    std::uint64_t total = 0;              // exact count of admissible permutations
    std::vector<Perm> sigmas;             // lexicographically ordered, at most `cap`
    bool truncated = false;               // total exceeded cap
};

// compat[i][j]: may slot j use index i.
using CompatMatrix = std::vector<std::vector<bool>>;

CompatMatrix divisibility_matrix(const ExponentVec& a, const ExponentVec& b);

// All perfect matchings of an n x n compatibility matrix, enumerated in
// lexicographic order with matching-feasibility pruning (no factorial scan).
// The visitor may return false to stop early.
void for_each_matching(const CompatMatrix& compat, const std::function<bool(const Perm&)>& visit);

std::uint64_t count_matchings(const CompatMatrix& compat);

MatchingSet perm_matchings(const ExponentVec& a, const ExponentVec& b, std::size_t cap = 10000);

// Lexicographically smallest admissible sigma, if any.
std::optional<Perm> first_matching(const ExponentVec& a, const ExponentVec& b);

// Permutations fixing an exponent vector (only equal exponents may swap).
bool perm_fixes(const ExponentVec& p, const Perm& sigma);

} // namespace hartogs
