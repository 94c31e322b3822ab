#pragma once

#include "mahler/rational.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

using MatrixIndex = Eigen::Index;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntRowVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

namespace detail {

inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination: division was not exact");
    return q;
}

}  // namespace detail

// Row-wise denominator clearing: row i is scaled by the lcm of its entries'
// denominators (recorded in row_scales), which preserves rank and row space
// up to positive scaling.
inline IntMatrix clear_denominators_rowwise(const RationalMatrix& m,
                                            std::vector<Int>* row_scales = nullptr) {
    IntMatrix out(m.rows(), m.cols());
    if (row_scales) row_scales->assign(static_cast<std::size_t>(m.rows()), Int(1));
    for (MatrixIndex i = 0; i < m.rows(); ++i) {
        Int scale = 1;
        for (MatrixIndex j = 0; j < m.cols(); ++j)
            scale = boost::multiprecision::lcm(scale, denominator(m(i, j)));
        for (MatrixIndex j = 0; j < m.cols(); ++j)
            out(i, j) = numerator(m(i, j)) * (scale / denominator(m(i, j)));
        if (row_scales) (*row_scales)[static_cast<std::size_t>(i)] = scale;
    }
    return out;
}

// One-step fraction-free (Bareiss) row elimination. Pivot is the first
// nonzero entry in the current column; every update
//   row_i := (pivot * row_i - m(i,c) * row_pivot) / prev
// divides exactly, keeping entries equal to minors of the input matrix.
// When `transform` is non-null it receives the same row operations starting
// from the identity, so rows of it beyond the returned rank are integer left
// null vectors of the input. Returns the rank.
inline MatrixIndex bareiss_eliminate(IntMatrix& m, IntMatrix* transform = nullptr) {
    const MatrixIndex rows = m.rows();
    const MatrixIndex cols = m.cols();
    if (transform) {
        transform->resize(rows, rows);
        transform->setZero();
        for (MatrixIndex i = 0; i < rows; ++i) (*transform)(i, i) = 1;
    }
    Int prev = 1;
    MatrixIndex rank = 0;
    for (MatrixIndex c = 0; c < cols && rank < rows; ++c) {
        MatrixIndex pivot_row = -1;
        for (MatrixIndex i = rank; i < rows; ++i) {
            if (m(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != rank) {
            m.row(rank).swap(m.row(pivot_row));
            if (transform) transform->row(rank).swap(transform->row(pivot_row));
        }
        const Int pivot = m(rank, c);
        for (MatrixIndex i = rank + 1; i < rows; ++i) {
            const Int factor = m(i, c);
            for (MatrixIndex j = c + 1; j < cols; ++j)
                m(i, j) = detail::exact_div(pivot * m(i, j) - factor * m(rank, j), prev);
            m(i, c) = 0;
            if (transform)
                for (MatrixIndex j = 0; j < rows; ++j)
                    (*transform)(i, j) =
                        detail::exact_div(pivot * (*transform)(i, j) - factor * (*transform)(rank, j), prev);
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

inline MatrixIndex bareiss_rank(IntMatrix m) { return bareiss_eliminate(m); }

// Exact rank over the rationals.
inline MatrixIndex exact_rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntMatrix cleared = clear_denominators_rowwise(m);
    return bareiss_eliminate(cleared);
}

// Divides by the content and flips sign so the first nonzero entry is
// positive; the all-zero vector is left alone.
inline void normalize_integer_vector(IntRowVector& v) {
    Int content = 0;
    for (MatrixIndex i = 0; i < v.size(); ++i)
        content = boost::multiprecision::gcd(content, v(i));
    if (content == 0) return;
    for (MatrixIndex i = 0; i < v.size(); ++i) v(i) /= content;
    for (MatrixIndex i = 0; i < v.size(); ++i) {
        if (v(i) == 0) continue;
        if (v(i) < 0)
            for (MatrixIndex j = i; j < v.size(); ++j) v(j) = -v(j);
        break;
    }
}

// Deterministic integer left null vector q with q * m = 0, taken from the
// last non-pivot row of the elimination transform; nullopt when m has full
// row rank.
inline std::optional<IntRowVector> left_null_vector(const RationalMatrix& m) {
    if (m.rows() == 0) return std::nullopt;
    std::vector<Int> scales;
    IntMatrix cleared = clear_denominators_rowwise(m, &scales);
    IntMatrix transform;
    const MatrixIndex rank = bareiss_eliminate(cleared, &transform);
    if (rank == m.rows()) return std::nullopt;
    IntRowVector q = transform.row(m.rows() - 1);
    for (MatrixIndex i = 0; i < q.size(); ++i) q(i) *= scales[static_cast<std::size_t>(i)];
    normalize_integer_vector(q);
    return q;
}

// Dump format: header "rows cols", then one row per line, entries as
// rational literals separated by single spaces.
inline std::string dump_matrix(const RationalMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (MatrixIndex i = 0; i < m.rows(); ++i) {
        for (MatrixIndex j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << format_rational(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace mahler
