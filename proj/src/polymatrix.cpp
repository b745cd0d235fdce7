#include "so3five/polymatrix.hpp"

namespace so3five {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, EnvPtr env)
    : rows_(rows), cols_(cols), env_(std::move(env)) {
    if (rows_ == 0 || cols_ == 0) {
        throw ShapeError("matrix dimensions must be positive");
    }
    data_.assign(rows_ * cols_, MultiPoly::zero(env_));
}

PolyMatrix PolyMatrix::identity(std::size_t n, EnvPtr env) {
    PolyMatrix m(n, n, std::move(env));
    for (std::size_t i = 0; i < n; ++i) {
        m.entry(i, i) = MultiPoly::constant(m.env_, QSqrt3::one());
    }
    return m;
}

PolyMatrix PolyMatrix::from_scalars(std::size_t rows, std::size_t cols,
                                    std::initializer_list<QSqrt3> entries) {
    if (entries.size() != rows * cols) {
        throw ShapeError("scalar initializer has wrong length");
    }
    PolyMatrix m(rows, cols, const_env());
    std::size_t i = 0;
    for (const auto& value : entries) {
        m.data_[i++] = MultiPoly::constant(m.env_, value);
    }
    return m;
}

const MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw ShapeError("matrix index out of range");
    }
    return entry(r, c);
}

void PolyMatrix::set(std::size_t r, std::size_t c, MultiPoly value) {
    if (r >= rows_ || c >= cols_) {
        throw ShapeError("matrix index out of range");
    }
    if (!same_env(value.env(), env_)) {
        throw EnvError("entry environment does not match matrix");
    }
    entry(r, c) = std::move(value);
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out = *this;
    for (auto& p : out.data_) {
        p = -p;
    }
    return out;
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
        throw ShapeError("matrix addition shape mismatch");
    }
    PolyMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += y.data_[i];
    }
    return out;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
        throw ShapeError("matrix subtraction shape mismatch");
    }
    PolyMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= y.data_[i];
    }
    return out;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.cols_ != y.rows_) {
        throw ShapeError("matrix product shape mismatch");
    }
    if (!same_env(x.env_, y.env_)) {
        throw EnvError("matrix product environment mismatch");
    }
    PolyMatrix out(x.rows_, y.cols_, x.env_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const MultiPoly& xik = x.entry(i, k);
            if (xik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < y.cols_; ++j) {
                const MultiPoly& ykj = y.entry(k, j);
                if (!ykj.is_zero()) {
                    out.entry(i, j) += xik * ykj;
                }
            }
        }
    }
    return out;
}

bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_ || !same_env(x.env_, y.env_)) {
        return false;
    }
    return x.data_ == y.data_;
}

PolyMatrix PolyMatrix::scaled(const QSqrt3& s) const {
    PolyMatrix out = *this;
    for (auto& p : out.data_) {
        p = p.scaled(s);
    }
    return out;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& s) const {
    PolyMatrix out = *this;
    for (auto& p : out.data_) {
        p = p * s;
    }
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, env_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out.entry(j, i) = entry(i, j);
        }
    }
    return out;
}

MultiPoly PolyMatrix::trace() const {
    if (!is_square()) {
        throw ShapeError("trace of non-square matrix");
    }
    MultiPoly t = MultiPoly::zero(env_);
    for (std::size_t i = 0; i < rows_; ++i) {
        t += entry(i, i);
    }
    return t;
}

PolyMatrix PolyMatrix::minor_matrix(std::size_t drop_row, std::size_t drop_col) const {
    PolyMatrix out(rows_ - 1, cols_ - 1, env_);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == drop_row) {
            continue;
        }
        std::size_t c = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == drop_col) {
                continue;
            }
            out.entry(r, c) = entry(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

MultiPoly PolyMatrix::det() const {
    if (!is_square()) {
        throw ShapeError("determinant of non-square matrix");
    }
    if (rows_ > 8) {
        throw ShapeError("determinant capped at 8x8");
    }
    if (rows_ == 1) {
        return entry(0, 0);
    }
    MultiPoly acc = MultiPoly::zero(env_);
    for (std::size_t j = 0; j < cols_; ++j) {
        const MultiPoly& pivot = entry(0, j);
        if (pivot.is_zero()) {
            continue;
        }
        MultiPoly cof = pivot * minor_matrix(0, j).det();
        if (j % 2 == 0) {
            acc += cof;
        } else {
            acc -= cof;
        }
    }
    return acc;
}

PolyMatrix PolyMatrix::with_env(const EnvPtr& target) const {
    PolyMatrix out(rows_, cols_, target);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = data_[i].with_env(target);
    }
    return out;
}

} // namespace so3five
