#pragma once

#include <functional>

#include "bozk/grid.hpp"

namespace bozk {

// Coefficients approximate the continuum transform:
//   F(xi,eta) = dx dy * sum_j exp(-i(xi x_j + eta y_j)) f_j
SpectrumField forward(const RealField& f);
// Inverse of forward; the imaginary residue is discarded.
RealField inverse(const SpectrumField& F);
// Complex-valued inverse, for checks on realness.
std::vector<cplx> inverse_complex(const SpectrumField& F);

using Symbol = std::function<cplx(double xi, double eta)>;

// Symbol sampled on the grid, FFT ordered.  On a Nyquist row/column the
// value is the mean over the +K and -K representatives.
std::vector<cplx> tabulate(const Grid2D& g, const Symbol& m);

// Multiply by a tabulated symbol, then make the self-paired Nyquist
// coefficients real.  Throws on non-finite table entries.
SpectrumField apply_table(const SpectrumField& F, const std::vector<cplx>& m);
SpectrumField apply_multiplier(const SpectrumField& F, const Symbol& m);

void project_nyquist_real(SpectrumField& F);

// 2/3 rule: keep 3|m| < nx and 3|n| < ny, so products of kept modes never
// alias back onto kept modes.
std::vector<double> dealias_mask(const Grid2D& g);
SpectrumField dealias(const SpectrumField& F);

}  // namespace bozk
