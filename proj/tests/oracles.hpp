#pragma once

#include <random>
#include <vector>

#include <array>
#include <numeric>
#include <optional>
#include <set>

#include "kodsum/integer.hpp"
#include "kodsum/matrix.hpp"
#include "kodsum/torusbundle.hpp"

namespace testing {

using kodsum::BigInt;
using kodsum::Int;
using kodsum::Matrix;

// Determinant by cofactor expansion, exact for the small sizes used here.
inline BigInt det_oracle(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const BigInt term = m[0][c] * det_oracle(minor);
        total += (c % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}.
inline std::vector<BigInt> minors_oracle(const Matrix<Int>& M) {
    std::vector<BigInt> factors;
    BigInt prev = 1;
    const std::size_t n = std::min(M.rows(), M.cols());
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(M.rows(), k, 0, cur, rs);
        subsets(M.cols(), k, 0, cur, cs);
        BigInt g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = M(r[i], c[j]);
                const BigInt d = det_oracle(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        if (g == 0)
            break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

inline Matrix<Int> random_matrix(std::mt19937& rng, std::size_t max_rows, std::size_t max_cols, Int bound) {
    std::uniform_int_distribution<std::size_t> rdist(1, max_rows), cdist(1, max_cols);
    std::uniform_int_distribution<Int> e(-bound, bound);
    Matrix<Int> M(rdist(rng), cdist(rng));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            M(i, j) = e(rng);
    return M;
}


/// Membership of v in the subgroup of Z^2 spanned by gens. Full-rank
/// lattices of index N contain N Z^2, so the question is settled by a
/// search in (Z/N)^2; lower ranks are handled along the spanning line.
inline bool in_lattice(const std::vector<kodsum::Vec2>& gens, kodsum::Vec2 v) {
    Int index = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            index = std::gcd(index, gens[i].x * gens[j].y - gens[i].y * gens[j].x);
    if (index != 0) {
        const Int N = std::abs(index);
        const auto md = [N](Int a) { return ((a % N) + N) % N; };
        std::set<std::pair<Int, Int>> seen{{0, 0}};
        std::vector<std::pair<Int, Int>> todo{{0, 0}};
        while (!todo.empty()) {
            const auto [x, y] = todo.back();
            todo.pop_back();
            for (const auto& g : gens) {
                const std::pair<Int, Int> n{md(x + g.x), md(y + g.y)};
                if (seen.insert(n).second)
                    todo.push_back(n);
            }
        }
        return seen.count({md(v.x), md(v.y)}) > 0;
    }
    // Rank <= 1: every generator is a multiple of one primitive direction u.
    std::optional<kodsum::Vec2> u;
    for (const auto& g : gens)
        if (g.x != 0 || g.y != 0) {
            const Int c = std::gcd(g.x, g.y);
            u = kodsum::Vec2{g.x / c, g.y / c};
            break;
        }
    if (!u)
        return v.x == 0 && v.y == 0;
    const auto multiple = [&u](kodsum::Vec2 w) -> std::optional<Int> {
        if (w.x * u->y - w.y * u->x != 0)
            return std::nullopt;
        return u->x != 0 ? w.x / u->x : w.y / u->y;
    };
    Int step = 0;
    for (const auto& g : gens)
        step = std::gcd(step, *multiple(g));
    const auto mv = multiple(v);
    return mv && *mv % step == 0;
}

/// Translation (numerators over 2) of p -> A^-1 tau A tau p on the four
/// points of (1/2 Z / Z)^2, tau(x, y) = (x + 1/2, y). Empty if the map is
/// not a translation there.
inline std::optional<std::array<Int, 2>> involution_oracle(const kodsum::SL2Z& A) {
    const auto m2 = [](Int a) { return ((a % 2) + 2) % 2; };
    std::optional<std::array<Int, 2>> t;
    for (Int x = 0; x < 2; ++x)
        for (Int y = 0; y < 2; ++y) {
            Int px = m2(x + 1), py = y;                                    // tau
            Int qx = m2(A.a() * px + A.b() * py), qy = m2(A.c() * px + A.d() * py); // A
            qx = m2(qx + 1);                                               // tau
            const Int rx = m2(A.d() * qx - A.b() * qy), ry = m2(-A.c() * qx + A.a() * qy); // A^-1
            const std::array<Int, 2> d{m2(rx - x), m2(ry - y)};
            if (t && *t != d)
                return std::nullopt;
            t = d;
        }
    return t;
}

/// The table entry a glued bundle must land in, read off with the gcd
/// rule: for M([[-1,delta],[0,-1]], [[1,zeta],[0,1]]; (j+2x, 0)) take
/// z = gcd, p = zeta/z, r = delta/z; the result is M((-1)^p I, (-1)^q N^z;
/// (j, 0)), and M(-I, -A) = M(-I, A). For M([[-1,delta],[0,-1]],
/// [[-1,zeta],[0,-1]]; (0,1)) take r = -delta/z and the signs (-1)^(p+r),
/// (-1)^(q+s). A twist (1,0) dies against M(-I, N^z) when z is odd.
/// delta = zeta = 0 is M(-I, +-I), identified with M(I, -I) by swapping
/// the base generators.
inline kodsum::FamilyTag table_rule(const kodsum::TorusBundle& b) {
    using kodsum::DomainError;
    using kodsum::Pattern;
    const auto& A = b.A();
    const auto& B = b.B();
    if (A.a() != -1 || A.c() != 0 || A.d() != -1 || B.c() != 0 || B.a() != B.d())
        throw DomainError("bundle is not in a glued shape");
    const Int delta = A.b(), zeta = B.b();
    const Int z = std::gcd(delta, zeta);
    const auto even_odd = [z](Pattern even, Pattern odd) {
        return z % 2 == 0 ? kodsum::FamilyTag{even, z / 2} : kodsum::FamilyTag{odd, (z - 1) / 2};
    };
    if (B.a() == 1) {
        if (b.v().y != 0)
            throw DomainError("even-form bundle with a twist off the first axis");
        const Int j = ((b.v().x % 2) + 2) % 2;
        if (z == 0)
            return {j == 0 ? Pattern::I_Nz_00 : Pattern::I_Nz_10, 0};
        const Int p = zeta / z;
        if (p % 2 != 0) {
            if (z % 2 != 0)
                return {Pattern::mI_N2y1_00, (z - 1) / 2};
            return {j == 0 ? Pattern::mI_N2y_00 : Pattern::mI_N2y_10, z / 2};
        }
        return {j == 0 ? Pattern::I_Nz_00 : Pattern::I_Nz_10, z};
    }
    if (!(b.v() == kodsum::Vec2{0, 1}))
        throw DomainError("odd-form bundle without twist (0,1)");
    if (z == 0)
        return {Pattern::I_N2y_01, 0};
    const Int p = zeta / z, r = -delta / z;
    if ((p + r) % 2 != 0)
        return even_odd(Pattern::mI_N2y_01, Pattern::mI_N2y1_01);
    return even_odd(Pattern::I_N2y_01, Pattern::I_N2y1_01);
}

/// The families printed in the two gluing tables for {j, k}.
inline std::set<kodsum::Pattern> table_patterns(Int j, Int k) {
    using kodsum::Pattern;
    if (j + k == 0)
        return {Pattern::I_Nz_00, Pattern::mI_N2y_00, Pattern::I_N2y_01, Pattern::mI_N2y_01};
    if (j + k == 1)
        return {Pattern::mI_N2y1_00, Pattern::mI_N2y1_01};
    return {Pattern::I_Nz_10, Pattern::mI_N2y_10, Pattern::I_N2y1_01};
}

} // namespace testing
