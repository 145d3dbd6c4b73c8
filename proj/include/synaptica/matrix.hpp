#ifndef SYNAPTICA_MATRIX_HPP
#define SYNAPTICA_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace synaptica {

/// Dense square real matrix, row-major. Small and value-semantic; this is
/// the computational substrate of the symmetric-matrix model, not a general
/// linear-algebra library.
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(std::size_t n, double fill = 0.0)
        : n_(n), a_(n * n, fill) {
        if (n == 0) throw std::invalid_argument("Matrix: dim must be >= 1");
    }

    Matrix(std::size_t n, std::vector<double> entries)
        : n_(n), a_(std::move(entries)) {
        if (n == 0) throw std::invalid_argument("Matrix: dim must be >= 1");
        if (a_.size() != n * n)
            throw std::invalid_argument("Matrix: entry count != dim^2");
    }

    /// Nested-list constructor for tests: Matrix{{1,2},{2,1}}.
    Matrix(std::initializer_list<std::initializer_list<double>> rows) {
        n_ = rows.size();
        if (n_ == 0) throw std::invalid_argument("Matrix: dim must be >= 1");
        a_.reserve(n_ * n_);
        for (auto& r : rows) {
            if (r.size() != n_)
                throw std::invalid_argument("Matrix: ragged rows");
            for (double v : r) a_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diag(std::vector<double> d) {
        Matrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<double>& entries() const { return a_; }
    std::vector<double>& entries() { return a_; }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(double s) {
        for (double& v : a_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= -1.0; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_dim(b);
        const std::size_t n = a.n_;
        Matrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    double asymmetry() const {
        double m = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    bool is_symmetric(double atol) const { return asymmetry() <= atol; }

    Matrix symmetrized() const {
        Matrix s(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
        return s;
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    void check_dim(const Matrix& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("Matrix: dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<double> a_;
};

} // namespace synaptica

#endif
