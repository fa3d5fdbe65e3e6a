#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace critgraph {

template <typename Scalar> using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar> using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar> struct PackingSolution {
    Scalar value;
    DenseVector<Scalar> primal; ///< optimal y
    DenseVector<Scalar> dual;   ///< one multiplier per row of A, feasible for the covering dual
};

/// Solves  max c.y  subject to  A y <= b,  y >= 0  with b >= 0.
///
/// Dense tableau simplex started from the slack basis, entering and leaving
/// variables chosen by Bland's rule, so it terminates on degenerate problems.
/// With an exact Scalar the returned optimum and multipliers are exact. Throws
/// std::domain_error when the problem is unbounded.
template <typename Scalar>
PackingSolution<Scalar> solve_packing_lp(const DenseMatrix<Scalar> &A, const DenseVector<Scalar> &b,
                                         const DenseVector<Scalar> &c) {
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    if (b.size() != m || c.size() != n) throw std::invalid_argument("LP dimension mismatch");
    for (Eigen::Index i = 0; i < m; ++i)
        if (b(i) < Scalar(0)) throw std::invalid_argument("packing LP needs a non-negative right-hand side");

    // Columns: n structural, m slack, 1 rhs. Last row holds reduced costs
    // c_B B^-1 a_j - c_j; optimal when none is negative.
    const Eigen::Index width = n + m + 1;
    DenseMatrix<Scalar> t = DenseMatrix<Scalar>::Constant(m + 1, width, Scalar(0));
    t.topLeftCorner(m, n) = A;
    for (Eigen::Index i = 0; i < m; ++i) {
        t(i, n + i) = Scalar(1);
        t(i, width - 1) = b(i);
    }
    for (Eigen::Index j = 0; j < n; ++j) t(m, j) = -c(j);

    std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

    for (;;) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n + m; ++j)
            if (t(m, j) < Scalar(0)) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        Eigen::Index leave = -1;
        Scalar best_ratio(0);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (!(t(i, enter) > Scalar(0))) continue;
            Scalar ratio = t(i, width - 1) / t(i, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::domain_error("packing LP is unbounded");

        Scalar pivot = t(leave, enter);
        for (Eigen::Index j = 0; j < width; ++j) t(leave, j) /= pivot;
        for (Eigen::Index i = 0; i <= m; ++i) {
            if (i == leave) continue;
            Scalar f = t(i, enter);
            if (f == Scalar(0)) continue;
            for (Eigen::Index j = 0; j < width; ++j)
                if (t(leave, j) != Scalar(0)) t(i, j) -= f * t(leave, j);
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    PackingSolution<Scalar> out;
    out.value = t(m, width - 1);
    out.primal = DenseVector<Scalar>::Constant(n, Scalar(0));
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::Index v = basis[static_cast<std::size_t>(i)];
        if (v < n) out.primal(v) = t(i, width - 1);
    }
    out.dual.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) out.dual(i) = t(m, n + i);
    return out;
}

} // namespace critgraph
