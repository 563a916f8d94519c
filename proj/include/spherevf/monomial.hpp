#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "spherevf/errors.hpp"

namespace spherevf {

/// Exponent vector of a power product. The length is the ambient variable
/// count and is fixed per polynomial ring; mixing lengths is a usage error.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int var_count) : e_(var_count, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    int var_count() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_constant() const { return degree() == 0; }

    bool divides(const Monomial& other) const {
        if (e_.size() != other.e_.size()) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_same(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    /// Quotient of power products; *this must be divisible by o.
    Monomial operator/(const Monomial& o) const {
        check_same(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw InternalInconsistencyError("monomial quotient with negative exponent");
        }
        return r;
    }

    bool operator==(const Monomial& o) const = default;

    /// Graded lexicographic compare; this is the canonical storage order of
    /// polynomial terms (and the default division order).
    std::strong_ordering operator<=>(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da <=> db;
        // same degree: lexicographic on exponents, higher first-variable
        // power sorts *later* so that map iteration ascends to the leader
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] != o.e_[i]) return e_[i] <=> o.e_[i];
        }
        return std::strong_ordering::equal;
    }

    static Monomial unit(int var_count, int var, int power = 1) {
        Monomial m(var_count);
        m.e_[var] = power;
        return m;
    }

private:
    void check_same(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw DimensionMismatchError("monomial variable counts differ");
    }

    std::vector<int> e_;
};

}  // namespace spherevf
