#pragma once

#include "mahler/equation.hpp"
#include "mahler/matrix.hpp"
#include "mahler/series.hpp"

#include <optional>
#include <stdexcept>

namespace mahler {

struct HankelDimensions {
    long kappa = 0;
    long H = 0;
    MatrixIndex rows = 0;  // 1 + kappa
    MatrixIndex cols = 0;  // 1 + H + kappa*(k^d + ... + k + 1)
    long max_prefix_index = 0;
};

// The column count uses (k^{d+1}-1)/(k-1) computed as the integer geometric
// sum k^d + ... + k + 1, never by division.
inline HankelDimensions hankel_dimensions(const MahlerEquation& eq,
                                          std::optional<long> kappa_override = std::nullopt) {
    require_valid(eq);
    HankelDimensions dims;
    dims.kappa = kappa_override ? *kappa_override : kappa(eq);
    dims.H = eq.max_coefficient_degree();
    Int geometric = 0;
    Int power = 1;
    for (int i = 0; i <= eq.d(); ++i) {
        geometric += power;
        power *= eq.k;
    }
    const Int cols = 1 + Int(dims.H) + Int(dims.kappa) * geometric;
    if (cols > Int(1) << 28)
        throw std::length_error("Hankel matrix would have " + cols.str() + " columns");
    dims.rows = static_cast<MatrixIndex>(dims.kappa + 1);
    dims.cols = static_cast<MatrixIndex>(to_long(cols));
    dims.max_prefix_index = static_cast<long>(dims.rows - 1 + dims.cols - 1);
    return dims;
}

// The (1+kappa) x (1+H+kappa(k^{d+1}-1)/(k-1)) matrix with entry(i,j) =
// f(i+j-2) under 1-based indexing.
inline RationalMatrix build_hankel(const SeriesPrefix& prefix, const MahlerEquation& eq,
                                   std::optional<long> kappa_override = std::nullopt) {
    const HankelDimensions dims = hankel_dimensions(eq, kappa_override);
    if (prefix.max_index() < dims.max_prefix_index)
        throw std::invalid_argument("prefix too short: Hankel matrix needs f(0.." +
                                    std::to_string(dims.max_prefix_index) + "), prefix has " +
                                    std::to_string(prefix.coeffs.size()) + " term(s)");
    RationalMatrix m(dims.rows, dims.cols);
    for (MatrixIndex i = 0; i < dims.rows; ++i)
        for (MatrixIndex j = 0; j < dims.cols; ++j)
            m(i, j) = prefix.coeffs[static_cast<std::size_t>(i + j)];
    return m;
}

}  // namespace mahler
