#pragma once

// Fermionic Fock space F for the Clifford algebra
//   {Psi^+(r), Psi^-(s)} = delta_{r+s,0},  {Psi^pm, Psi^pm} = 0,
// r,s in Z+1/2. Basis monomials are Psi^+ factors (modes strictly
// decreasing) followed by Psi^- factors, applied to the vacuum.

#include "cfock/half.hpp"
#include "cfock/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cfock {

enum class Sign { Plus, Minus };

inline Sign other(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

enum class SubspaceTag { F, Tilde, Bar };

struct FermionMonomial {
    // r-values of the factors Psi^{+}(-r) / Psi^{-}(-r); each r > 0,
    // strictly decreasing within a block.
    std::vector<Half> plus;
    std::vector<Half> minus;

    int charge() const { return static_cast<int>(plus.size()) - static_cast<int>(minus.size()); }
    Half weight() const {
        Half w;
        for (Half r : plus) w += r;
        for (Half r : minus) w += r;
        return w;
    }
    int parity() const { return static_cast<int>((plus.size() + minus.size()) % 2); }
    bool is_vacuum() const { return plus.empty() && minus.empty(); }

    bool in_tag(SubspaceTag t) const;

    // (charge, weight, blocks): deterministic enumeration order.
    friend std::strong_ordering operator<=>(const FermionMonomial& a, const FermionMonomial& b) {
        if (auto c = a.charge() <=> b.charge(); c != 0) return c;
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        if (auto c = a.plus <=> b.plus; c != 0) return c;
        return a.minus <=> b.minus;
    }
    friend bool operator==(const FermionMonomial& a, const FermionMonomial& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

using FockVector = std::map<FermionMonomial, Scalar>;

std::string to_string(const FermionMonomial& m);
std::string to_string(const FockVector& v);

// Applies Psi^{sign}(r) to a single monomial: result is (c, m') with
// c in {-1,0,+1}, all anticommutation signs relative to the canonical order.
std::pair<int, FermionMonomial> psi_apply_mono(Sign sign, Half r, const FermionMonomial& m);

FockVector psi_apply(Sign sign, Half r, const FockVector& v);

struct FockGrade {
    int charge;
    Half weight;
    std::set<SubspaceTag> tags;
};
FockGrade fock_grade(const FermionMonomial& m);

// All monomials of the tagged subspace with weight <= max_weight (and the
// given charge, when supplied), sorted by the monomial order.
std::vector<FermionMonomial> fock_basis(SubspaceTag tag, Half max_weight,
                                        std::optional<int> charge = std::nullopt);

}  // namespace cfock
