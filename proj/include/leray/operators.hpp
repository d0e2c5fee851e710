#pragma once

#include <vector>

#include "leray/field.hpp"
#include "leray/symbols.hpp"

namespace leray {

// Which inner operator nonlinear_W applies to its second argument before the
// tensor product. The default pairs the inverse (1 - a^2 L2)^{-1} with the
// forward (1 - a^2 L2); the alternate form pairs it with (1 + a^2 L2).
enum class WForm { OneMinusAlphaL2, OnePlusAlphaL2 };

// Mode-wise multiplication by -|xi|^gamma / g(|xi|). Rejects gamma <= 0
// combined with a nonzero zero-mode amplitude (singular symbol at xi = 0);
// for gamma > 0 the zero mode is multiplied by 0.
SpectralField apply_multiplier(const SpectralField& f, const SymbolSpec& s);

// Mode-wise multiplication by exp(-t |xi|^gamma / g(|xi|)), t >= 0.
SpectralField semigroup_apply(const SpectralField& f, double t, const SymbolSpec& s);

// Mode-wise multiplication by 1 + alpha^2 |xi|^{gamma2} / g2(|xi|), the
// spectral form of (1 - alpha^2 L2).
SpectralField helmholtz_forward(const SpectralField& f, double alpha, const SymbolSpec& s2);

// Mode-wise multiplication by 1 / (1 + alpha^2 |xi|^{gamma2} / g2(|xi|));
// identity for alpha = 0, norm non-increasing.
SpectralField helmholtz_inverse(const SpectralField& f, double alpha, const SymbolSpec& s2);

// Hodge projection onto divergence-free fields: uhat -> uhat - k (k.uhat)/|k|^2
// per mode k != 0; the zero mode is unchanged. Idempotent.
SpectralField leray_project(const SpectralField& f);

// Keep-mode predicate of the 2/3-rule dealiasing mask (|k_d| <= floor(N/3)
// per axis).
std::vector<char> dealias_mask(const TorusGrid& grid);
void apply_dealias(SpectralField& f);
void apply_dealias(SpectralTensorField& T);

// Entry (i, j) is the dealiased spectral product of component i of u and
// component j of v; the product is formed in physical space with inputs and
// output truncated to the 2/3 mask.
SpectralTensorField tensor_product(const SpectralField& u, const SpectralField& v);

// (div T)_i at mode k: i * sum_j xi_j That_{ji}(k), the contraction matching
// div(u (x) v) = (u . grad) v for divergence-free u.
SpectralField divergence(const SpectralTensorField& T);

// W(u, v) = P (1 - alpha^2 L2)^{-1} div(u (x) Bv) with B per WForm.
// Output is divergence-free.
SpectralField nonlinear_W(const SpectralField& u, const SpectralField& v, double alpha,
                          const SymbolSpec& s2, WForm form = WForm::OneMinusAlphaL2);

// L2 inner product L^n sum conj(uhat).vhat (real part).
double inner_product_l2(const SpectralField& u, const SpectralField& v);

}  // namespace leray
