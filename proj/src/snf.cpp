#include "kodsum/snf.hpp"

#include <utility>

namespace kodsum {

Matrix<BigInt> to_big(const Matrix<Int>& M) {
    Matrix<BigInt> out(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            out(i, j) = BigInt(static_cast<long>(M(i, j)));
    return out;
}

std::vector<BigInt> SmithForm::invariant_factors() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i)
        if (D(i, i) != 0)
            out.push_back(D(i, i));
    return out;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

namespace {

class SmithReducer {
  public:
    explicit SmithReducer(const Matrix<BigInt>& M)
        : D_(M), U_(Matrix<BigInt>::identity(M.rows())), V_(Matrix<BigInt>::identity(M.cols())) {}

    SmithForm run() {
        const std::size_t n = std::min(D_.rows(), D_.cols());
        for (std::size_t t = 0; t < n; ++t) {
            if (!move_pivot(t))
                break;
            while (!clear_cross(t)) {
            }
            if (D_(t, t) < 0) {
                D_.negate_row(t);
                U_.negate_row(t);
            }
        }
        enforce_divisibility(n);
        return {std::move(D_), std::move(U_), std::move(V_)};
    }

  private:
    void row_add(std::size_t dst, std::size_t src, const BigInt& f) {
        D_.add_row(dst, src, f);
        U_.add_row(dst, src, f);
    }
    void col_add(std::size_t dst, std::size_t src, const BigInt& f) {
        D_.add_col(dst, src, f);
        V_.add_col(dst, src, f);
    }
    void row_swap(std::size_t a, std::size_t b) {
        D_.swap_rows(a, b);
        U_.swap_rows(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        D_.swap_cols(a, b);
        V_.swap_cols(a, b);
    }

    // Brings the smallest nonzero entry of the trailing block to (t,t).
    bool move_pivot(std::size_t t) {
        bool found = false;
        std::size_t bi = t, bj = t;
        BigInt best;
        for (std::size_t i = t; i < D_.rows(); ++i)
            for (std::size_t j = t; j < D_.cols(); ++j) {
                if (D_(i, j) == 0)
                    continue;
                BigInt a = abs(D_(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        if (!found)
            return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    // One sweep of the pivot row and column; true once both are clear.
    bool clear_cross(std::size_t t) {
        for (std::size_t i = t + 1; i < D_.rows(); ++i) {
            if (D_(i, t) == 0)
                continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), D_(i, t).get_mpz_t(), D_(t, t).get_mpz_t());
            row_add(i, t, -q);
            if (D_(i, t) != 0) {
                row_swap(t, i);
                return false;
            }
        }
        for (std::size_t j = t + 1; j < D_.cols(); ++j) {
            if (D_(t, j) == 0)
                continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), D_(t, j).get_mpz_t(), D_(t, t).get_mpz_t());
            col_add(j, t, -q);
            if (D_(t, j) != 0) {
                col_swap(t, j);
                return false;
            }
        }
        return true;
    }

    // Replace diag(a, b) by diag(gcd, lcm) until d1 | d2 | ... holds.
    void enforce_divisibility(std::size_t n) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const BigInt a = D_(i, i);
                const BigInt b = D_(i + 1, i + 1);
                if (a == 0 && b == 0)
                    continue;
                if (a == 0) {
                    row_swap(i, i + 1);
                    col_swap(i, i + 1);
                    changed = true;
                    continue;
                }
                if (b % a == 0)
                    continue;
                // Column i += column i+1 puts b below a; then reduce the 2x2 block.
                col_add(i, i + 1, BigInt(1));
                while (!clear_cross(i)) {
                }
                if (D_(i, i) < 0) {
                    D_.negate_row(i);
                    U_.negate_row(i);
                }
                if (D_(i + 1, i + 1) < 0) {
                    D_.negate_row(i + 1);
                    U_.negate_row(i + 1);
                }
                changed = true;
            }
        }
    }

    Matrix<BigInt> D_;
    Matrix<BigInt> U_;
    Matrix<BigInt> V_;
};

} // namespace

SmithForm snf(const Matrix<BigInt>& M) { return SmithReducer(M).run(); }

SmithForm snf(const Matrix<Int>& M) { return snf(to_big(M)); }

BigInt determinant(const Matrix<BigInt>& M) {
    if (M.rows() != M.cols())
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0)
        return 1;
    Matrix<BigInt> a = M;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace kodsum
