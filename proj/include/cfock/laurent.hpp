#pragma once

// Finite-support Laurent data. One mode convention everywhere:
//   A(z) = sum_k A_k z^{-k-1},  coeffs maps k -> A_k.
// So 1/z is {0:1}, z^{-2} is {1:1} and the constant term sits at k = -1.

#include "cfock/scalar.hpp"

#include <map>

namespace cfock {

class Laurent {
  public:
    Laurent() = default;

    static Laurent single(int k, const Scalar& c) {
        Laurent r;
        add_term(r.c_, k, c);
        return r;
    }
    // lambda * z^{-1}
    static Laurent over_z(const Scalar& lambda) { return single(0, lambda); }

    bool is_zero() const { return c_.empty(); }

    Scalar at(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Scalar(0) : it->second;
    }

    const std::map<int, Scalar>& coeffs() const { return c_; }

    // p = max(0, max{k : A_k != 0}): the pole order parameter. With the
    // convention above, the coefficient of z^{n-1} is the entry at k = -n.
    int p_degree() const {
        if (c_.empty()) return 0;
        int m = c_.rbegin()->first;
        return m > 0 ? m : 0;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [k, c] : o.c_) add_term(c_, k, c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (b * Scalar(-1)); }

    friend Laurent operator*(const Laurent& a, const Scalar& s) {
        Laurent r;
        for (const auto& [k, c] : a.c_) add_term(r.c_, k, Scalar(c * s));
        return r;
    }

    // z^{-j-1} * z^{-k-1} = z^{-(j+k+1)-1}: product support is the sumset + 1.
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [j, cj] : a.c_)
            for (const auto& [k, ck] : b.c_) add_term(r.c_, j + k + 1, Scalar(cj * ck));
        return r;
    }

    // d/dz: the entry A_k (coefficient of z^{-k-1}) contributes (-k-1) A_k
    // at index k+1; the constant term (k = -1) drops out.
    Laurent derivative() const {
        Laurent r;
        for (const auto& [k, c] : c_) add_term(r.c_, k + 1, Scalar(c * (-k - 1)));
        return r;
    }

    bool operator==(const Laurent&) const = default;

  private:
    std::map<int, Scalar> c_;
};

}  // namespace cfock
