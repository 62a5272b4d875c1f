#pragma once

// The Lie superalgebra A with odd generators G^pm(r) and central even
// generators S(n), T(n), acting on twisted Fock modules. Every module kind
// reduces to an effective pair (chi^+, chi^-) acting through
//   G^pm(r) = -(r+1/2) Psi^pm(r) + sum_k chi^pm_k Psi^pm(r-k),
// the mode expansion of dPsi^pm(z) + chi^pm(z) Psi^pm(z).

#include "cfock/fock.hpp"
#include "cfock/half.hpp"
#include "cfock/laurent.hpp"
#include "cfock/scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cfock {

struct CarrierViolation : std::runtime_error {
    explicit CarrierViolation(const std::string& what) : std::runtime_error(what) {}
};

class ModuleSpec {
  public:
    enum class Kind { Full, Tilde, Bar };

    static ModuleSpec full(Laurent chi_plus, Laurent chi_minus);
    static ModuleSpec tilde(Laurent chi);
    static ModuleSpec bar(int m, int n);  // chi^+ = -m/z, chi^- = -n/z

    Kind kind() const { return kind_; }
    const Laurent& chi_plus() const { return chi_plus_; }
    const Laurent& chi_minus() const { return chi_minus_; }
    int bar_m() const { return bar_m_; }
    int bar_n() const { return bar_n_; }

    // The invariant carrier subspace:
    //   Full      -> all of F
    //   Tilde     -> Ker Psi^-(1/2): no Psi^+(-1/2) factor
    //   Bar(m,n)  -> no Psi^+(-m-1/2) and no Psi^-(-n-1/2) factor
    bool carrier_contains(const FermionMonomial& m) const;
    void require_carrier(const FockVector& v) const;

    std::vector<FermionMonomial> carrier_basis(Half max_weight,
                                               std::optional<int> charge = std::nullopt) const;

    std::string describe() const;

  private:
    Kind kind_ = Kind::Full;
    Laurent chi_plus_, chi_minus_;
    int bar_m_ = 0, bar_n_ = 0;
};

// T(z) = (chi^+ - chi^-)/2 and S(z) = (2 chi^+ chi^- + d chi^+ + d chi^-)/4
// as Laurent data; the scalars below read them off under S(z) = sum S(n) z^{-n-2},
// T(z) = sum T(n) z^{-n-1}.
struct ScalarFields {
    Laurent t_series;
    Laurent s_series;
};
ScalarFields scalar_fields(const ModuleSpec& spec);

Scalar t_mode(const ModuleSpec& spec, int n);
Scalar s_mode(const ModuleSpec& spec, int n);

// G^{sign}(r) on v; throws CarrierViolation when v leaves the spec's carrier.
FockVector a_apply_g(Sign sign, Half r, const ModuleSpec& spec, const FockVector& v);

struct AGenerator {
    enum class Type { GPlus, GMinus, S, T };
    Type type;
    Half r;  // for GPlus/GMinus
    int n = 0;  // for S/T

    static AGenerator gplus(Half r) { return {Type::GPlus, r, 0}; }
    static AGenerator gminus(Half r) { return {Type::GMinus, r, 0}; }
    static AGenerator s(int n) { return {Type::S, Half(0), n}; }
    static AGenerator t(int n) { return {Type::T, Half(0), n}; }
};

FockVector a_apply(const AGenerator& gen, const ModuleSpec& spec, const FockVector& v);

struct RelationViolation {
    std::string relation;
    std::string witness;
};

struct RelationReport {
    bool pass = true;
    long checks = 0;
    std::vector<RelationViolation> violations;
    void record(bool ok, const std::string& rel, const std::string& wit) {
        ++checks;
        if (!ok) {
            pass = false;
            if (violations.size() < 32) violations.push_back({rel, wit});
        }
    }
};

// Verifies, on every carrier basis vector of weight <= weight_bound and all
// half-integer modes |r|,|s| <= mode_bound (|n| <= mode_bound for S,T):
//   {G+(r),G-(s)} = 2 S(r+s) + (r-s) T(r+s) - (r^2 - 1/4) delta_{r+s,0}
//   {G+,G+} = {G-,G-} = 0,   [S(n),G] = [T(n),G] = 0.
RelationReport a_relation_check(const ModuleSpec& spec, Half mode_bound, Half weight_bound);

}  // namespace cfock
