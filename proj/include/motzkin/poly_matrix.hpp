#pragma once

#include <cstddef>
#include <vector>

#include "motzkin/poly.hpp"

namespace motzkin {

/// Dense square matrix of polynomial entries.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n);
    static PolyMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Poly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    /// The matrix with row `row` and column `col` removed (dim >= 2).
    PolyMatrix complement(std::size_t row, std::size_t col) const;
    /// Row vector times matrix: (v M)_j = sum_i v_i M_ij.
    std::vector<Poly> left_apply(const std::vector<Poly>& v) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator-() const;

    bool is_symmetric() const;
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    std::size_t n_;
    std::vector<Poly> a_;
};

/// Exact determinant: Laplace expansion (memoized over column subsets) for
/// dimension <= 8, fraction-free Bareiss elimination above.
Poly det(const PolyMatrix& m);
Poly det_laplace(const PolyMatrix& m);
Poly det_bareiss(const PolyMatrix& m);

}  // namespace motzkin
