#include "motzkin/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "motzkin/polyring.hpp"

namespace motzkin {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw std::invalid_argument("PolyMatrix: dimension must be >= 1");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
    return m;
}

PolyMatrix PolyMatrix::complement(std::size_t row, std::size_t col) const {
    if (n_ < 2) throw std::invalid_argument("PolyMatrix::complement of a 1x1 matrix");
    PolyMatrix out(n_ - 1);
    for (std::size_t i = 0, oi = 0; i < n_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, oj = 0; j < n_; ++j) {
            if (j == col) continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

std::vector<Poly> PolyMatrix::left_apply(const std::vector<Poly>& v) const {
    if (v.size() != n_) throw std::invalid_argument("PolyMatrix::left_apply: size mismatch");
    std::vector<Poly> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            const Poly& m = (*this)(i, j);
            if (!m.is_zero()) out[j] += v[i] * m;
        }
    }
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("PolyMatrix: size mismatch");
    PolyMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Poly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("PolyMatrix: size mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
}

bool PolyMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

Poly det_laplace(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n > 20) throw std::invalid_argument("det_laplace: dimension too large");
    // minor[mask] = determinant of the bottom rows (n - popcount(mask) .. n-1)
    // restricted to the columns in mask. Built bottom-up.
    std::vector<Poly> minor(std::size_t{1} << n);
    minor[0] = Poly(1);
    for (std::size_t mask = 1; mask < minor.size(); ++mask) {
        const int cols = __builtin_popcountll(mask);
        const std::size_t row = n - static_cast<std::size_t>(cols);
        Poly acc;
        int position = 0;  // rank of column j within mask, for the sign
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const Poly& entry = m(row, j);
            const std::size_t rest = mask & ~(std::size_t{1} << j);
            if (!entry.is_zero() && !minor[rest].is_zero()) {
                Poly term = entry * minor[rest];
                if (position % 2 == 0) acc += term;
                else acc -= term;
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return minor.back();
}

Poly det_bareiss(const PolyMatrix& input) {
    const std::size_t n = input.dim();
    PolyMatrix a = input;
    Poly previous(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Poly();
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = exact_div(num, previous);
            }
            a(i, k) = Poly();
        }
        previous = a(k, k);
    }
    Poly d = a(n - 1, n - 1);
    return negate ? -d : d;
}

Poly det(const PolyMatrix& m) { return m.dim() <= 8 ? det_laplace(m) : det_bareiss(m); }

}  // namespace motzkin
