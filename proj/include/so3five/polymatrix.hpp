#ifndef SO3FIVE_POLYMATRIX_HPP
#define SO3FIVE_POLYMATRIX_HPP

#include <initializer_list>
#include <vector>

#include "so3five/multipoly.hpp"

namespace so3five {

// Dense matrix of polynomials, row major. All entries share one
// environment; field constants embed as degree-0 polynomials.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, EnvPtr env);

    static PolyMatrix identity(std::size_t n, EnvPtr env);
    static PolyMatrix zero(std::size_t rows, std::size_t cols, EnvPtr env) {
        return PolyMatrix(rows, cols, std::move(env));
    }
    // Constant matrix over the empty environment from row-major scalars.
    static PolyMatrix from_scalars(std::size_t rows, std::size_t cols,
                                   std::initializer_list<QSqrt3> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const EnvPtr& env() const { return env_; }

    const MultiPoly& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, MultiPoly value);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator!=(const PolyMatrix& x, const PolyMatrix& y) {
        return !(x == y);
    }

    PolyMatrix scaled(const QSqrt3& s) const;
    PolyMatrix scaled(const MultiPoly& s) const;
    PolyMatrix transpose() const;
    MultiPoly trace() const;

    // AB - BA.
    friend PolyMatrix commutator(const PolyMatrix& x, const PolyMatrix& y) {
        return x * y - y * x;
    }

    // Exact determinant by cofactor expansion along the first row.
    // Square matrices only, and capped at 8x8: everything this library
    // computes is at most 5x5, and cofactor expansion above that is a bug.
    MultiPoly det() const;

    // Rebuild all entries over another environment (variables mapped by
    // name); used to embed constant matrices into symbolic computations.
    PolyMatrix with_env(const EnvPtr& target) const;

private:
    MultiPoly& entry(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const MultiPoly& entry(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    PolyMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;

    std::size_t rows_;
    std::size_t cols_;
    EnvPtr env_;
    std::vector<MultiPoly> data_;
};

} // namespace so3five

#endif
