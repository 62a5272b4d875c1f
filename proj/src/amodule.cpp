#include "cfock/amodule.hpp"

#include <algorithm>

namespace cfock {

ModuleSpec ModuleSpec::full(Laurent chi_plus, Laurent chi_minus) {
    ModuleSpec s;
    s.kind_ = Kind::Full;
    s.chi_plus_ = std::move(chi_plus);
    s.chi_minus_ = std::move(chi_minus);
    return s;
}

ModuleSpec ModuleSpec::tilde(Laurent chi) {
    ModuleSpec s;
    s.kind_ = Kind::Tilde;
    s.chi_minus_ = std::move(chi);
    return s;
}

ModuleSpec ModuleSpec::bar(int m, int n) {
    ModuleSpec s;
    s.kind_ = Kind::Bar;
    s.bar_m_ = m;
    s.bar_n_ = n;
    s.chi_plus_ = Laurent::over_z(Scalar(-m));
    s.chi_minus_ = Laurent::over_z(Scalar(-n));
    return s;
}

bool ModuleSpec::carrier_contains(const FermionMonomial& m) const {
    switch (kind_) {
        case Kind::Full:
            return true;
        case Kind::Tilde:
            return m.in_tag(SubspaceTag::Tilde);
        case Kind::Bar: {
            // the kernel description of Bar(m,n): the exterior algebra on
            // Psi^+(-i-1/2), i != m, and Psi^-(-j-1/2), j != n
            Half ex_plus = Half(2 * bar_m_ + 1);
            Half ex_minus = Half(2 * bar_n_ + 1);
            if (std::find(m.plus.begin(), m.plus.end(), ex_plus) != m.plus.end()) return false;
            if (std::find(m.minus.begin(), m.minus.end(), ex_minus) != m.minus.end()) return false;
            return true;
        }
    }
    return false;
}

void ModuleSpec::require_carrier(const FockVector& v) const {
    for (const auto& [m, c] : v)
        if (!carrier_contains(m))
            throw CarrierViolation("monomial " + to_string(m) + " outside carrier of " + describe());
}

std::vector<FermionMonomial> ModuleSpec::carrier_basis(Half max_weight,
                                                       std::optional<int> charge) const {
    auto all = fock_basis(SubspaceTag::F, max_weight, charge);
    std::vector<FermionMonomial> out;
    for (auto& m : all)
        if (carrier_contains(m)) out.push_back(std::move(m));
    return out;
}

std::string ModuleSpec::describe() const {
    switch (kind_) {
        case Kind::Full:
            return "Full";
        case Kind::Tilde:
            return "Tilde";
        case Kind::Bar:
            return "Bar(" + std::to_string(bar_m_) + "," + std::to_string(bar_n_) + ")";
    }
    return "?";
}

ScalarFields scalar_fields(const ModuleSpec& spec) {
    const Laurent& cp = spec.chi_plus();
    const Laurent& cm = spec.chi_minus();
    ScalarFields f;
    f.t_series = (cp - cm) * Scalar(1, 2);
    f.s_series = (cp * cm * Scalar(2) + cp.derivative() + cm.derivative()) * Scalar(1, 4);
    return f;
}

Scalar t_mode(const ModuleSpec& spec, int n) { return scalar_fields(spec).t_series.at(n); }

// S(z) = sum S(n) z^{-n-2}: the coefficient of z^{-n-2} sits at Laurent index n+1.
Scalar s_mode(const ModuleSpec& spec, int n) { return scalar_fields(spec).s_series.at(n + 1); }

FockVector a_apply_g(Sign sign, Half r, const ModuleSpec& spec, const FockVector& v) {
    spec.require_carrier(v);
    const Laurent& chi = sign == Sign::Plus ? spec.chi_plus() : spec.chi_minus();
    FockVector out;
    // -(r+1/2) Psi(r)
    Scalar lead = Scalar(-(r.x2 + 1), 2);
    if (lead != 0) axpy(out, lead, psi_apply(sign, r, v));
    for (const auto& [k, c] : chi.coeffs()) axpy(out, c, psi_apply(sign, r - k, v));
    return out;
}

FockVector a_apply(const AGenerator& gen, const ModuleSpec& spec, const FockVector& v) {
    switch (gen.type) {
        case AGenerator::Type::GPlus:
            return a_apply_g(Sign::Plus, gen.r, spec, v);
        case AGenerator::Type::GMinus:
            return a_apply_g(Sign::Minus, gen.r, spec, v);
        case AGenerator::Type::S: {
            spec.require_carrier(v);
            FockVector out;
            axpy(out, s_mode(spec, gen.n), v);
            return out;
        }
        case AGenerator::Type::T: {
            spec.require_carrier(v);
            FockVector out;
            axpy(out, t_mode(spec, gen.n), v);
            return out;
        }
    }
    return {};
}

namespace {

bool equal(const FockVector& a, const FockVector& b) { return a == b; }

FockVector scaled(const FockVector& v, const Scalar& c) {
    FockVector out;
    axpy(out, c, v);
    return out;
}

}  // namespace

RelationReport a_relation_check(const ModuleSpec& spec, Half mode_bound, Half weight_bound) {
    RelationReport rep;
    auto basis = spec.carrier_basis(weight_bound);

    std::vector<Half> modes;
    for (int x2 = -mode_bound.x2; x2 <= mode_bound.x2; x2 += 2)
        if (x2 % 2 != 0) modes.push_back(Half(x2));

    for (const auto& mono : basis) {
        FockVector v{{mono, Scalar(1)}};
        std::string wit = spec.describe() + " on " + to_string(mono);

        for (Half r : modes) {
            FockVector gp_r = a_apply_g(Sign::Plus, r, spec, v);
            FockVector gm_r = a_apply_g(Sign::Minus, r, spec, v);
            for (Half s : modes) {
                // {G+(r), G-(s)} = 2S(r+s) + (r-s)T(r+s) - (r^2-1/4) delta
                FockVector lhs = a_apply_g(Sign::Plus, r, spec, a_apply_g(Sign::Minus, s, spec, v));
                axpy(lhs, Scalar(1), a_apply_g(Sign::Minus, s, spec, gp_r));
                Half n = r + s;  // integral for half-integer r, s
                int nn = n.as_int();
                Scalar rhs_c = Scalar(2) * s_mode(spec, nn);
                rhs_c += Scalar(r.x2 - s.x2, 2) * t_mode(spec, nn);
                if (n.x2 == 0) rhs_c -= Scalar(r.x2 * r.x2 - 1, 4);
                rep.record(equal(lhs, scaled(v, rhs_c)),
                           "{G+(" + to_string(r) + "),G-(" + to_string(s) + ")}", wit);

                // {G+,G+} = 0 and {G-,G-} = 0
                FockVector pp = a_apply_g(Sign::Plus, s, spec, gp_r);
                axpy(pp, Scalar(1), a_apply_g(Sign::Plus, r, spec,
                                              a_apply_g(Sign::Plus, s, spec, v)));
                rep.record(pp.empty(), "{G+(" + to_string(r) + "),G+(" + to_string(s) + ")}", wit);
                FockVector mm = a_apply_g(Sign::Minus, s, spec, gm_r);
                axpy(mm, Scalar(1), a_apply_g(Sign::Minus, r, spec,
                                              a_apply_g(Sign::Minus, s, spec, v)));
                rep.record(mm.empty(), "{G-(" + to_string(r) + "),G-(" + to_string(s) + ")}", wit);
            }

            // centrality of S and T against G^pm(r)
            for (int n = -(mode_bound.x2 / 2) - 1; n <= mode_bound.x2 / 2 + 1; ++n) {
                for (auto type : {AGenerator::Type::S, AGenerator::Type::T}) {
                    AGenerator cen{type, Half(0), n};
                    FockVector c1 = a_apply(cen, spec, gp_r);
                    FockVector c2 = a_apply_g(Sign::Plus, r, spec, a_apply(cen, spec, v));
                    rep.record(equal(c1, c2), "[S/T,G+] central", wit);
                    FockVector c3 = a_apply(cen, spec, gm_r);
                    FockVector c4 = a_apply_g(Sign::Minus, r, spec, a_apply(cen, spec, v));
                    rep.record(equal(c3, c4), "[S/T,G-] central", wit);
                }
            }
        }
    }
    return rep;
}

}  // namespace cfock
