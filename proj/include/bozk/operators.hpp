#pragma once

#include "bozk/fft.hpp"

namespace bozk {

inline double sgn(double a) { return a > 0 ? 1.0 : (a < 0 ? -1.0 : 0.0); }

// dispersion relation: u_hat evolves by exp(i t omega)
inline double omega(double xi, double eta) { return xi * eta * eta - xi * std::abs(xi); }

RealField hilbert_x(const RealField& f);

enum class FracKind { J, Jx, Jy, D, Dx };
Symbol fractional_symbol(FracKind kind, double z);
RealField fractional_op(const RealField& f, FracKind kind, double z);
SpectrumField fractional_op(const SpectrumField& F, FracKind kind, double z);

// exp(i t omega - t mu (xi^2+eta^2)); the Nyquist average is taken on the
// exponent, so composition laws hold exactly on every coefficient.
std::vector<cplx> propagator_table(const Grid2D& g, double t, double mu);
SpectrumField propagate(const SpectrumField& F, double t, double mu);

double smoothing_ratio(const RealField& phi, double mu, double t, double lambda);

}  // namespace bozk
