#include "spherevf/linalg.hpp"

namespace spherevf::linalg {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i) {
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Vec primitive_integer_form(Vec v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    Integer g = 0;
    for (auto& x : v) {
        x *= Rational(l);
        g = gcd(g, x.get_num());
    }
    if (g == 0) return v;
    int lead_sign = 0;
    for (const auto& x : v) {
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    }
    Rational scale = make_rational(lead_sign < 0 ? -g : g, 1);
    for (auto& x : v) x /= scale;
    return v;
}

std::vector<Vec> nullspace(Matrix m) {
    const int n = m.cols;
    std::vector<int> pivot_cols = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(primitive_integer_form(std::move(v)));
    }
    return basis;
}

std::optional<Vec> solve(Matrix m, Vec b) {
    if (static_cast<int>(b.size()) != m.rows) return std::nullopt;
    Matrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == m.cols) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    Vec x(m.cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
    return x;
}

}  // namespace spherevf::linalg
