#include "cfock/fock.hpp"

#include <algorithm>

namespace cfock {

bool FermionMonomial::in_tag(SubspaceTag t) const {
    switch (t) {
        case SubspaceTag::F:
            return true;
        case SubspaceTag::Tilde:
            // Ker Psi^-(1/2): no Psi^+(-1/2) factor.
            return plus.empty() || plus.back() >= Half(3);
        case SubspaceTag::Bar:
            return (plus.empty() || plus.back() >= Half(3)) &&
                   (minus.empty() || minus.back() >= Half(3));
    }
    return false;
}

std::string to_string(const FermionMonomial& m) {
    if (m.is_vacuum()) return "1";
    std::string s;
    for (Half r : m.plus) s += "P+(-" + to_string(r) + ")";
    for (Half r : m.minus) s += "P-(-" + to_string(r) + ")";
    return s;
}

std::string to_string(const FockVector& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : v) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*" + to_string(m);
    }
    return s;
}

namespace {

// Inserts r into a strictly decreasing block; returns the number of factors
// passed, or -1 on a Pauli collision.
int insert_mode(std::vector<Half>& block, Half r) {
    auto it = block.begin();
    int passed = 0;
    while (it != block.end() && *it > r) {
        ++it;
        ++passed;
    }
    if (it != block.end() && *it == r) return -1;
    block.insert(it, r);
    return passed;
}

// Removes r; returns its index, or -1 when absent.
int remove_mode(std::vector<Half>& block, Half r) {
    auto it = std::find(block.begin(), block.end(), r);
    if (it == block.end()) return -1;
    int idx = static_cast<int>(it - block.begin());
    block.erase(it);
    return idx;
}

}  // namespace

std::pair<int, FermionMonomial> psi_apply_mono(Sign sign, Half r, const FermionMonomial& m) {
    FermionMonomial out = m;
    if (r.x2 < 0) {
        // creation Psi^{sign}(-rho), rho = -r
        Half rho = -r;
        if (sign == Sign::Plus) {
            int passed = insert_mode(out.plus, rho);
            if (passed < 0) return {0, {}};
            return {passed % 2 == 0 ? 1 : -1, out};
        }
        int passed = insert_mode(out.minus, rho);
        if (passed < 0) return {0, {}};
        passed += static_cast<int>(out.plus.size());
        return {passed % 2 == 0 ? 1 : -1, out};
    }
    // annihilation: Psi^{sign}(r) pairs with Psi^{-sign}(-r); same-sign
    // factors are passed with a sign flip each.
    if (sign == Sign::Plus) {
        // pairs inside the minus block, after passing the whole plus block
        int idx = remove_mode(out.minus, r);
        if (idx < 0) return {0, {}};
        int passed = static_cast<int>(out.plus.size()) + idx;
        return {passed % 2 == 0 ? 1 : -1, out};
    }
    int idx = remove_mode(out.plus, r);
    if (idx < 0) return {0, {}};
    return {idx % 2 == 0 ? 1 : -1, out};
}

FockVector psi_apply(Sign sign, Half r, const FockVector& v) {
    FockVector out;
    for (const auto& [m, c] : v) {
        auto [s, m2] = psi_apply_mono(sign, r, m);
        if (s != 0) add_term(out, m2, Scalar(c * s));
    }
    return out;
}

FockGrade fock_grade(const FermionMonomial& m) {
    FockGrade g{m.charge(), m.weight(), {SubspaceTag::F}};
    if (m.in_tag(SubspaceTag::Tilde)) g.tags.insert(SubspaceTag::Tilde);
    if (m.in_tag(SubspaceTag::Bar)) g.tags.insert(SubspaceTag::Bar);
    return g;
}

namespace {

// Distinct mode lists with entries >= min_r and sum <= budget, built
// increasing and reversed afterwards into the canonical decreasing order.
void enumerate_block(Half min_r, Half budget, std::vector<Half>& cur,
                     std::vector<std::vector<Half>>& out) {
    out.push_back(cur);
    for (int x2 = min_r.x2; x2 <= budget.x2; x2 += 2) {
        cur.push_back(Half(x2));
        enumerate_block(Half(x2 + 2), Half(budget.x2 - x2), cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Half>> blocks_up_to(Half min_r, Half budget) {
    std::vector<std::vector<Half>> out;
    std::vector<Half> cur;
    enumerate_block(min_r, budget, cur, out);
    for (auto& b : out) std::reverse(b.begin(), b.end());
    return out;
}

}  // namespace

std::vector<FermionMonomial> fock_basis(SubspaceTag tag, Half max_weight,
                                        std::optional<int> charge) {
    Half plus_min = tag == SubspaceTag::F ? Half(1) : Half(3);
    Half minus_min = tag == SubspaceTag::Bar ? Half(3) : Half(1);
    std::vector<FermionMonomial> out;
    if (max_weight.x2 < 0) return out;
    for (const auto& pb : blocks_up_to(plus_min, max_weight)) {
        Half wp;
        for (Half r : pb) wp += r;
        for (const auto& mb : blocks_up_to(minus_min, max_weight - wp)) {
            FermionMonomial m{pb, mb};
            if (charge && m.charge() != *charge) continue;
            out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cfock
