#include "spherevf/univariate.hpp"

#include <algorithm>
#include <set>

namespace spherevf::uni {

UPoly normalized(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational evaluate(const UPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
    return normalized(std::move(d));
}

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return normalized(std::move(r));
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return normalized(std::move(r));
}

UPoly scale(UPoly p, const Rational& c) {
    if (c == 0) return {};
    for (auto& x : p) x *= c;
    return p;
}

UPoly rem(UPoly a, const UPoly& b) {
    if (b.empty()) throw DivisionByZeroError("univariate remainder by zero");
    a = normalized(std::move(a));
    while (degree(a) >= degree(b)) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = normalized(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

UPoly exact_div(UPoly a, const UPoly& b) {
    if (b.empty()) throw DivisionByZeroError("univariate division by zero");
    a = normalized(std::move(a));
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (degree(a) >= degree(b)) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = normalized(std::move(a));
    }
    if (!a.empty()) throw InternalInconsistencyError("univariate division not exact");
    return normalized(std::move(q));
}

UPoly gcd(UPoly a, UPoly b) {
    a = normalized(std::move(a));
    b = normalized(std::move(b));
    while (!b.empty()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

UPoly squarefree_part(const UPoly& p) {
    if (degree(p) <= 1) return p;
    UPoly g = gcd(p, derivative(p));
    if (degree(g) == 0) return p;
    return exact_div(p, g);
}

int root_multiplicity(const UPoly& p, const Rational& r) {
    if (p.empty()) throw DivisionByZeroError("root multiplicity in zero polynomial");
    UPoly q = p;
    int m = 0;
    while (!q.empty() && evaluate(q, r) == 0) {
        q = deflate(q, r);
        ++m;
    }
    return m;
}

UPoly deflate(const UPoly& p, const Rational& r) {
    // synthetic division by (x - r)
    UPoly q(p.size() >= 1 ? p.size() - 1 : 0, Rational(0));
    Rational carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    if (p[0] + carry * r != 0) throw InternalInconsistencyError("deflation at a non-root");
    return normalized(std::move(q));
}

namespace {

constexpr unsigned long kDivisorIterationCap = 3'000'000UL;

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    if (n == 0) throw InternalInconsistencyError("divisors of zero requested");
    std::vector<Integer> small, large;
    Integer d = 1;
    unsigned long iters = 0;
    while (d * d <= n) {
        if (++iters > kDivisorIterationCap)
            throw RootSearchOverflow("divisor enumeration exceeded iteration cap");
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
        ++d;
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p_in) {
    UPoly p = normalized(p_in);
    if (p.empty()) throw DivisionByZeroError("rational roots of zero polynomial");
    std::set<Rational> roots;
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        p.erase(p.begin(), p.begin() + static_cast<long>(low));
    }
    if (degree(p) >= 1) {
        // clear to a primitive integer polynomial
        Integer l = 1;
        for (const auto& c : p) l = lcm(l, c.get_den());
        std::vector<Integer> ip;
        Integer content = 0;
        for (const auto& c : p) {
            Rational v = c * Rational(l);
            ip.push_back(v.get_num());
            content = gcd(content, v.get_num());
        }
        for (auto& c : ip) c /= content;
        const Integer a0 = ip.front(), an = ip.back();
        for (const Integer& num : positive_divisors(a0)) {
            for (const Integer& den : positive_divisors(an)) {
                for (int s : {1, -1}) {
                    Rational cand = make_rational(s * num, den);
                    if (evaluate(p, cand) == 0) roots.insert(cand);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

int count_distinct_real_roots(const UPoly& p_in) {
    UPoly p = normalized(p_in);
    if (degree(p) <= 0) return 0;
    std::vector<UPoly> chain{p, derivative(p)};
    while (!chain.back().empty() && degree(chain.back()) >= 0) {
        UPoly r = rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](int at_minus_inf) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            if (q.empty()) continue;
            int s = sgn(q.back());
            if (at_minus_inf && degree(q) % 2 == 1) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return variations(1) - variations(0);
}

}  // namespace spherevf::uni
