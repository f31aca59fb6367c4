#pragma once

// Closed-form generating functions G(l; y) = sum_k N(l; k) y^k for linear
// feedback functions l.

#include "dbgf/core.hpp"
#include "dbgf/cycles.hpp"
#include "dbgf/poly.hpp"

namespace dbgf {

/// 2^{-n} * prod over Fibonacci cycles of p_d(y). Requires a zero constant.
IntPolynomial g_linear(const LinearSpec& spec);

/// Same product taken over an already computed cycle profile.
IntPolynomial g_from_profile(int n, const CycleProfile& profile);

/// Constant-one case via y^{2^{n-1}} G(1 + l; 1/y). Requires constant = 1.
IntPolynomial g_complement(const LinearSpec& spec);

/// Dispatches on the constant term.
IntPolynomial g_any_linear(const LinearSpec& spec);

/// Zero function from necklace counts, no state walk; any n >= 2.
IntPolynomial g_zero(int n);

/// 2^{-n} ((1+y)^{2^{n-1}} - (1-y)^{2^{n-1}}): the maximal-period case.
IntPolynomial g_fryers(int n);

}  // namespace dbgf
