#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace algshift {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& q)
{
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// In-place Gaussian elimination to row echelon form; returns the pivot columns, left to right.
inline std::vector<std::size_t> row_echelon(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pr, c), m(row, c));
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RationalMatrix m) { return row_echelon(m).size(); }

} // namespace algshift
