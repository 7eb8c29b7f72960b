#include "matching.hpp"

#include "errors.hpp"

namespace hartogs {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm inverse_perm(const Perm& p) {
    Perm inv(p.size());
    for (size_t j = 0; j < p.size(); ++j) inv[p[j]] = static_cast<int>(j);
    return inv;
}

Perm compose_perm(const Perm& outer, const Perm& inner) {
    Perm c(inner.size());
    for (size_t j = 0; j < inner.size(); ++j) c[j] = outer[inner[j]];
    return c;
}

CompatMatrix divisibility_matrix(const ExponentVec& a, const ExponentVec& b) {
    if (a.size() != b.size())
        throw Error(Errc::dimension_mismatch, "vectors must have equal length");
    const int n = static_cast<int>(a.size());
    CompatMatrix m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = is_nat(ext_ratio(a[i], b[j]));
    return m;
}

namespace {

// Kuhn augmenting-path matching over rows `free_rows`, columns `free_cols`.
struct Feasibility {
    const CompatMatrix& compat;
    std::vector<int> match_col; // col -> row or -1

    explicit Feasibility(const CompatMatrix& c) : compat(c) {}

    bool try_row(int row, const std::vector<bool>& col_used, std::vector<bool>& seen) {
        const int n = static_cast<int>(compat.size());
        for (int col = 0; col < n; ++col) {
            if (col_used[col] || seen[col] || !compat[row][col]) continue;
            seen[col] = true;
            if (match_col[col] < 0 || try_row(match_col[col], col_used, seen)) {
                match_col[col] = row;
                return true;
            }
        }
        return false;
    }

    // Can every row outside `row_used` be matched into columns outside `col_used`?
    bool complete(const std::vector<bool>& row_used, const std::vector<bool>& col_used) {
        const int n = static_cast<int>(compat.size());
        match_col.assign(n, -1);
        for (int row = 0; row < n; ++row) {
            if (row_used[row]) continue;
            std::vector<bool> seen(n, false);
            if (!try_row(row, col_used, seen)) return false;
        }
        return true;
    }
};

void enumerate(const CompatMatrix& compat, int slot, Perm& sigma,
               std::vector<bool>& row_used, std::vector<bool>& col_used,
               bool& stopped, const std::function<bool(const Perm&)>& visit) {
    const int n = static_cast<int>(compat.size());
    if (stopped) return;
    if (slot == n) {
        if (!visit(sigma)) stopped = true;
        return;
    }
    col_used[slot] = true;
    for (int row = 0; row < n && !stopped; ++row) {
        if (row_used[row] || !compat[row][slot]) continue;
        row_used[row] = true;
        Feasibility f(compat);
        if (f.complete(row_used, col_used)) {
            sigma[slot] = row;
            enumerate(compat, slot + 1, sigma, row_used, col_used, stopped, visit);
        }
        row_used[row] = false;
    }
    col_used[slot] = false;
}

} // namespace

void for_each_matching(const CompatMatrix& compat, const std::function<bool(const Perm&)>& visit) {
    const int n = static_cast<int>(compat.size());
    if (n == 0) return;
    Perm sigma(n, -1);
    std::vector<bool> row_used(n, false), col_used(n, false);
    bool stopped = false;
    enumerate(compat, 0, sigma, row_used, col_used, stopped, visit);
}

std::uint64_t count_matchings(const CompatMatrix& compat) {
    const int n = static_cast<int>(compat.size());
    if (n == 0) return 0;
    if (n > 24) throw Error(Errc::internal, "matching count limited to n <= 24");
    // Permanent by subset DP: dp[mask] = matchings of the first popcount(mask)
    // slots into the row set `mask`.
    std::vector<std::uint64_t> dp(std::size_t(1) << n, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (dp[mask] == 0) continue;
        int slot = __builtin_popcount(mask);
        if (slot == n) continue;
        for (int row = 0; row < n; ++row) {
            if ((mask >> row) & 1) continue;
            if (compat[row][slot]) dp[mask | (1u << row)] += dp[mask];
        }
    }
    return dp[(std::size_t(1) << n) - 1];
}

MatchingSet perm_matchings(const ExponentVec& a, const ExponentVec& b, std::size_t cap) {
    CompatMatrix compat = divisibility_matrix(a, b);
    MatchingSet out;
    out.total = count_matchings(compat);
    out.truncated = out.total > cap;
    out.sigmas.reserve(static_cast<size_t>(std::min<std::uint64_t>(out.total, cap)));
    for_each_matching(compat, [&](const Perm& sigma) {
        out.sigmas.push_back(sigma);
        return out.sigmas.size() < cap;
    });
    return out;
}

std::optional<Perm> first_matching(const ExponentVec& a, const ExponentVec& b) {
    CompatMatrix compat = divisibility_matrix(a, b);
    std::optional<Perm> found;
    for_each_matching(compat, [&](const Perm& sigma) {
        found = sigma;
        return false;
    });
    return found;
}

bool perm_fixes(const ExponentVec& p, const Perm& sigma) {
    if (sigma.size() != p.size()) return false;
    std::vector<bool> hit(p.size(), false);
    for (size_t j = 0; j < p.size(); ++j) {
        int i = sigma[j];
        if (i < 0 || i >= static_cast<int>(p.size()) || hit[i]) return false;
        hit[i] = true;
        if (!(p[i] == p[j])) return false;
    }
    return true;
}

} // namespace hartogs
