#pragma once

#include <string>
#include <vector>

#include "yh/braid.hpp"
#include "yh/esystem.hpp"
#include "yh/sqrtext.hpp"
#include "yh/yokonuma.hpp"

namespace yh {

// The rescaling data of the two trace normalizations:
//   lambda_H = (zeta + 1 - q) / (q zeta),  D_H = 1 / (zeta sqrt(lambda_H)),
//   lambda_Y = (z + (1 - u) E) / (u z),    D_Y = 1 / (z sqrt(lambda_Y)).
// E enters lambda_Y as a rational function so callers can keep it symbolic
// or pin it to the value of a chosen solution.
RatFun lambda_h();
RatFun lambda_y(const RatFun& e);
SqrtExt d_h();
SqrtExt d_y(const RatFun& e);

// An invariant of the closure of a braid on n strands with exponent sum eps:
// value = D^{n-1} (sqrt(lambda))^eps tr(image of the braid).
struct InvariantValue {
    SqrtExt value;
    int n;
    int eps;
};

// The two-variable invariant from the H_n(q) trace, symbolic in q, zeta.
InvariantValue homflypt(const BraidWord& alpha);

// The invariant from the Y_{d,n}(u) trace with the character of sol,
// symbolic in u, z; E is pinned to e_value(sol).
InvariantValue delta_s(const BraidWord& alpha, const ESolution& sol);

// Substitutes bindings into even, odd and radicand parts.
SqrtExt substitute_value(const SqrtExt& v, const Bindings& bindings);

// Equality of a + b sqrt(lambda_H) and a' + b' sqrt(lambda_Y) after the
// branches are identified through zeta sqrt(lambda_H) = z sqrt(lambda_Y):
// even parts match, and either both odd parts vanish or the radicands lie in
// the same square class with b z = b' zeta. All inputs are already bound.
bool branch_equal(const SqrtExt& p, const SqrtExt& delta, const RatFun& zeta_value,
                  const RatFun& z_value);

// branch_equal after applying the bindings to both values.
bool invariants_equal(const SqrtExt& p, const SqrtExt& delta, const Bindings& bindings);

// One column of the parameter table: the substitutions that specialize
// (q, zeta, u, z) so that the two invariants can be compared. Values may
// mention the free symbols of the case and E (pinned later from a solution).
struct CaseSpec {
    int case_id;
    Bindings bindings;
    bool needs_singleton;  // the case demands E = 1
};
CaseSpec case_spec(int case_id);  // 1..16

enum class RatioStatus { Equal, Unequal, ZeroDenominator };

// Checks tau(pi(alpha)) / tr(delta(alpha)) = (zeta / z)^{eps(alpha)} under the
// bindings (E pinned to e_value(sol)), by cross-multiplication so no inverses
// are formed.
RatioStatus ratio_check(const BraidWord& alpha, const Bindings& bindings,
                        const ESolution& sol);

struct CompareRow {
    std::string braid;
    int n;
    int eps;
    bool equal;
    SqrtExt p;      // both stored with the case bindings applied
    SqrtExt delta;
};

struct CompareReport {
    int case_id;  // 0 when raw bindings were supplied
    bool all_equal;
    int first_unequal;  // row index, or -1
    bool d_equal;       // D_H = D_Y under the bindings
    std::vector<CompareRow> rows;
};

// Evaluates both invariants for every corpus braid under the case bindings
// (with E pinned to e_value(sol)) and tests equality row by row.
CompareReport compare(const std::vector<BraidWord>& corpus, const CaseSpec& cs,
                      const ESolution& sol);
CompareReport compare(const std::vector<BraidWord>& corpus, const Bindings& raw,
                      const ESolution& sol);

// Why no scalar c(n) can relate the two invariants away from the table: the
// 2-strand identity braid forces c = D_Y/D_H while the unknot as sigma_1^{-1}
// forces c = 1, so both hold only where D_H = D_Y.
struct ScalarDiagnostic {
    bool eq_1a;           // the polynomial identity equivalent to D_H = D_Y
    bool d_equal;         // D_H = D_Y as formal square-root expressions
    bool unlink2_equal;   // P = Delta on the closure of the identity 2-braid
    bool unknot_equal;    // P = Delta on the closure of sigma_1^{-1}
};
ScalarDiagnostic scalar_diagnostic(const Bindings& bindings, const ESolution& sol);

}  // namespace yh
