#include "yh/invariants.hpp"

#include "yh/hecke.hpp"
#include "yh/parallel.hpp"

namespace yh {

namespace {

const RatFun kU = RatFun::symbol(SYM_U);
const RatFun kZ = RatFun::symbol(SYM_Z);
const RatFun kQ = RatFun::symbol(SYM_Q);
const RatFun kZeta = RatFun::symbol(SYM_ZETA);
const RatFun kE = RatFun::symbol(SYM_E);

// Case bindings with E pinned to the solution value, both inside the bound
// expressions and as a binding of its own.
Bindings pinned_bindings(const Bindings& raw, const ESolution& sol) {
    RatFun e{e_value(sol)};
    Bindings e_only{{SYM_E, e}};
    Bindings out;
    for (const auto& [s, v] : raw) out.emplace(s, substitute(v, e_only));
    out[SYM_E] = e;
    return out;
}

}  // namespace

RatFun lambda_h() { return (kZeta + 1 - kQ) / (kQ * kZeta); }

RatFun lambda_y(const RatFun& e) { return (kZ + (RatFun(1) - kU) * e) / (kU * kZ); }

SqrtExt d_h() {
    RatFun lam = lambda_h();
    return SqrtExt(RatFun(0), (kZeta * lam).inverse(), lam);
}

SqrtExt d_y(const RatFun& e) {
    RatFun lam = lambda_y(e);
    return SqrtExt(RatFun(0), (kZ * lam).inverse(), lam);
}

InvariantValue homflypt(const BraidWord& alpha) {
    int eps = epsilon(alpha);
    RatFun lam = lambda_h();
    RatFun trace = ocneanu_trace(h_from_braid(alpha));
    SqrtExt value = d_h().pow(alpha.n - 1) * SqrtExt::root(lam).pow(eps) *
                    SqrtExt::scalar(trace, lam);
    return InvariantValue{value, alpha.n, eps};
}

InvariantValue delta_s(const BraidWord& alpha, const ESolution& sol) {
    int eps = epsilon(alpha);
    RatFun e{e_value(sol)};
    RatFun lam = lambda_y(e);
    FramingCharacter chr = FramingCharacter::specialized(sol);
    RatFun trace = juyumaya_trace(y_from_braid(alpha, sol.d), chr);
    SqrtExt value = d_y(e).pow(alpha.n - 1) * SqrtExt::root(lam).pow(eps) *
                    SqrtExt::scalar(trace, lam);
    return InvariantValue{value, alpha.n, eps};
}

SqrtExt substitute_value(const SqrtExt& v, const Bindings& bindings) {
    return SqrtExt(substitute(v.even(), bindings), substitute(v.odd(), bindings),
                   substitute(v.radicand(), bindings));
}

bool branch_equal(const SqrtExt& p, const SqrtExt& delta, const RatFun& zeta_value,
                  const RatFun& z_value) {
    if (!ratfun_eq(p.even(), delta.even())) return false;
    if (p.odd().is_zero() && delta.odd().is_zero()) return true;
    // same square class: (zeta sqrt(lambda_H))^2 = (z sqrt(lambda_Y))^2
    if (!ratfun_eq(zeta_value * zeta_value * p.radicand(),
                   z_value * z_value * delta.radicand()))
        return false;
    return ratfun_eq(p.odd() * z_value, delta.odd() * zeta_value);
}

bool invariants_equal(const SqrtExt& p, const SqrtExt& delta, const Bindings& bindings) {
    return branch_equal(substitute_value(p, bindings), substitute_value(delta, bindings),
                        substitute(kZeta, bindings), substitute(kZ, bindings));
}

CaseSpec case_spec(int case_id) {
    RatFun half{Rational(1, 2)};
    RatFun w = (RatFun(1) - kE + kU + kU * kE) * half;
    switch (case_id) {
        case 1:
            return {1, {{SYM_Q, RatFun(1)}, {SYM_ZETA, kZ}, {SYM_U, RatFun(1)}}, false};
        case 2:
            return {2, {{SYM_Q, RatFun(1)}, {SYM_ZETA, -kZ}, {SYM_U, RatFun(1)}}, false};
        case 3:
            return {3, {{SYM_ZETA, kQ}, {SYM_U, RatFun(1)}, {SYM_Z, RatFun(1)}}, false};
        case 4:
            return {4, {{SYM_ZETA, kQ}, {SYM_U, RatFun(1)}, {SYM_Z, RatFun(-1)}}, false};
        case 5:
            return {5, {{SYM_ZETA, RatFun(-1)}, {SYM_U, RatFun(1)}, {SYM_Z, RatFun(1)}}, false};
        case 6:
            return {6, {{SYM_ZETA, RatFun(-1)}, {SYM_U, RatFun(1)}, {SYM_Z, RatFun(-1)}}, false};
        case 7:
            return {7, {{SYM_Q, RatFun(1)}, {SYM_ZETA, kE}, {SYM_Z, -kE}}, false};
        case 8:
            return {8, {{SYM_Q, RatFun(1)}, {SYM_ZETA, -kE}, {SYM_Z, -kE}}, false};
        case 9:
            return {9, {{SYM_ZETA, kQ}, {SYM_Z, RatFun(-1)}}, true};
        case 10:
            return {10, {{SYM_ZETA, kQ}, {SYM_Z, kU}}, true};
        case 11:
            return {11, {{SYM_ZETA, RatFun(-1)}, {SYM_Z, RatFun(-1)}}, true};
        case 12:
            return {12, {{SYM_ZETA, RatFun(-1)}, {SYM_Z, kU}}, true};
        case 13:
            return {13, {{SYM_Q, kU}, {SYM_ZETA, kZ}}, true};
        case 14:
            return {14, {{SYM_Q, RatFun::symbol(SYM_U, -1)}, {SYM_ZETA, -kZ / kU}}, true};
        case 15:
            return {15, {{SYM_Q, -kU}, {SYM_ZETA, -w}, {SYM_Z, w}}, false};
        case 16:
            return {16,
                    {{SYM_Q, -RatFun::symbol(SYM_U, -1)}, {SYM_ZETA, -w / kU}, {SYM_Z, w}},
                    false};
        default:
            throw DomainError("case number must be between 1 and 16");
    }
}

RatioStatus ratio_check(const BraidWord& alpha, const Bindings& raw,
                        const ESolution& sol) {
    try {
        Bindings bindings = pinned_bindings(raw, sol);
        RatFun tau = ocneanu_trace(h_from_braid(alpha));
        FramingCharacter chr = FramingCharacter::specialized(sol);
        RatFun tr = juyumaya_trace(y_from_braid(alpha, sol.d), chr);
        RatFun tau_b = substitute(tau, bindings);
        RatFun tr_b = substitute(tr, bindings);
        RatFun zeta_b = substitute(kZeta, bindings);
        RatFun z_b = substitute(kZ, bindings);
        if (tr_b.is_zero() || zeta_b.is_zero() || z_b.is_zero())
            return RatioStatus::ZeroDenominator;
        int eps = epsilon(alpha);
        // tau z^eps = tr zeta^eps, cleared of negative powers
        RatFun lhs = eps >= 0 ? tau_b * z_b.pow(eps) : tau_b * zeta_b.pow(-eps);
        RatFun rhs = eps >= 0 ? tr_b * zeta_b.pow(eps) : tr_b * z_b.pow(-eps);
        return ratfun_eq(lhs, rhs) ? RatioStatus::Equal : RatioStatus::Unequal;
    } catch (const DomainError&) {
        return RatioStatus::ZeroDenominator;
    }
}

namespace {

CompareReport compare_impl(const std::vector<BraidWord>& corpus, int case_id,
                           const Bindings& raw, bool needs_singleton,
                           const ESolution& sol) {
    if (needs_singleton && sol.subset.size() != 1)
        throw DomainError("this case requires a singleton subset");
    Bindings bindings = pinned_bindings(raw, sol);
    RatFun zeta_b = substitute(RatFun::symbol(SYM_ZETA), bindings);
    RatFun z_b = substitute(RatFun::symbol(SYM_Z), bindings);
    RatFun e{e_value(sol)};

    CompareReport report{case_id, true, -1, false, {}};
    report.d_equal = branch_equal(substitute_value(d_h(), bindings),
                                  substitute_value(d_y(e), bindings), zeta_b, z_b);
    report.rows.resize(corpus.size());
    parallel_for(corpus.size(), [&](std::size_t i) {
        const BraidWord& alpha = corpus[i];
        InvariantValue p = homflypt(alpha);
        InvariantValue dl = delta_s(alpha, sol);
        SqrtExt p_b = substitute_value(p.value, bindings);
        SqrtExt dl_b = substitute_value(dl.value, bindings);
        bool equal = branch_equal(p_b, dl_b, zeta_b, z_b);
        report.rows[i] = CompareRow{render_braid(alpha), alpha.n, p.eps, equal,
                                    std::move(p_b), std::move(dl_b)};
    });
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        if (!report.rows[i].equal) {
            report.all_equal = false;
            report.first_unequal = static_cast<int>(i);
            break;
        }
    }
    return report;
}

}  // namespace

CompareReport compare(const std::vector<BraidWord>& corpus, const CaseSpec& cs,
                      const ESolution& sol) {
    return compare_impl(corpus, cs.case_id, cs.bindings, cs.needs_singleton, sol);
}

CompareReport compare(const std::vector<BraidWord>& corpus, const Bindings& raw,
                      const ESolution& sol) {
    return compare_impl(corpus, 0, raw, false, sol);
}

ScalarDiagnostic scalar_diagnostic(const Bindings& raw, const ESolution& sol) {
    Bindings bindings = pinned_bindings(raw, sol);
    RatFun zeta_b = substitute(kZeta, bindings);
    RatFun z_b = substitute(kZ, bindings);
    RatFun e{e_value(sol)};

    ScalarDiagnostic diag{};
    // (u zeta + z^2 - u E z + E z) q = u zeta (zeta + 1)
    RatFun lhs = (kU * kZeta + kZ * kZ - kU * kE * kZ + kE * kZ) * kQ;
    RatFun rhs = kU * kZeta * (kZeta + 1);
    diag.eq_1a = ratfun_eq(substitute(lhs, bindings), substitute(rhs, bindings));
    diag.d_equal = branch_equal(substitute_value(d_h(), bindings),
                                substitute_value(d_y(e), bindings), zeta_b, z_b);

    BraidWord unlink2 = parse_braid("", 2);
    diag.unlink2_equal = branch_equal(
        substitute_value(homflypt(unlink2).value, bindings),
        substitute_value(delta_s(unlink2, sol).value, bindings), zeta_b, z_b);

    BraidWord unknot = parse_braid("-1", 2);
    diag.unknot_equal = branch_equal(
        substitute_value(homflypt(unknot).value, bindings),
        substitute_value(delta_s(unknot, sol).value, bindings), zeta_b, z_b);
    return diag;
}

}  // namespace yh
