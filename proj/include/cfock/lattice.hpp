#pragma once

// The lattice vertex superalgebra F_{-1} = V_{Z beta} with <beta,beta> = -1:
// Heisenberg modes beta(n) with [beta(n),beta(m)] = -n delta_{n+m,0} and the
// exponential operator modes (e^{pm beta})_n. e^{pm beta} is odd.

#include "cfock/half.hpp"
#include "cfock/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cfock {

struct LatticeMonomial {
    int m = 0;                // lattice charge: the e^{m beta} factor
    std::vector<int> parts;   // beta(-n) factors, n >= 1, weakly decreasing

    int degree() const {
        int d = 0;
        for (int p : parts) d += p;
        return d;
    }
    int beta_zero() const { return -m; }  // <beta, m beta> eigenvalue of beta(0)
    int parity() const { return ((m % 2) + 2) % 2; }

    friend std::strong_ordering operator<=>(const LatticeMonomial& a, const LatticeMonomial& b) {
        if (auto c = a.m <=> b.m; c != 0) return c;
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.parts <=> b.parts;
    }
    friend bool operator==(const LatticeMonomial& a, const LatticeMonomial& b) {
        return a.m == b.m && a.parts == b.parts;
    }
};

using LatticeVector = std::map<LatticeMonomial, Scalar>;

std::string to_string(const LatticeMonomial& m);

LatticeVector beta_apply(int n, const LatticeVector& v);

namespace detail {
// Two-cocycle on Z beta. The sign-sensitive affine relation suite pins the
// choice: eps(a beta, b beta) = (-1)^{ab}. Trivial kept for the tests that
// document why it is wrong.
enum class Cocycle { Standard, Trivial };

void expbeta_apply_mono(int eps, int n, const LatticeMonomial& mono, const Scalar& coef,
                        LatticeVector& out, Cocycle cocycle);
}  // namespace detail

// The mode (e^{sign beta})_n of Y(e^{sign beta}, z) = sum_l (e^{sign beta})_l z^{-l-1}.
LatticeVector expbeta_apply(int sign, int n, const LatticeVector& v);

// All monomials of heisenberg degree <= max_degree (fixed charge if given).
std::vector<LatticeMonomial> lattice_basis(int max_degree,
                                           std::optional<int> charge = std::nullopt);

}  // namespace cfock
