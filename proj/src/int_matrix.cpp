#include "sandgraph/int_matrix.hpp"

#include <stdexcept>

namespace sandgraph {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::without_row(std::size_t drop) const {
    if (drop >= rows_) throw std::out_of_range("row index out of range");
    IntMatrix m(rows_ - 1, cols_);
    for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
        if (i == drop) continue;
        for (std::size_t j = 0; j < cols_; ++j) m.at(ii, j) = at(i, j);
        ++ii;
    }
    return m;
}

IntMatrix IntMatrix::without_column(std::size_t drop) const {
    if (drop >= cols_) throw std::out_of_range("column index out of range");
    IntMatrix m(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
            if (j == drop) continue;
            m.at(i, jj++) = at(i, j);
        }
    return m;
}

IntMatrix IntMatrix::without_row_and_column(std::size_t i, std::size_t j) const {
    return without_row(i).without_column(j);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in multiply");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

} // namespace sandgraph
