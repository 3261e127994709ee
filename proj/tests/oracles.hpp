#pragma once

// Test-only reference implementations, independent of the library's
// evaluation path (no Laurent series, no q-series, no matrix chains).

#include "structsums/lattice.hpp"

namespace structsums::oracle {

/// E_n(z) by direct lattice summation in the Eisenstein iterated ordering:
/// inner rows Sum_m (u + m)^(-n) evaluated in closed form via cot/csc
/// derivative jets, outer sum over rows until geometric convergence.
/// z must not be a lattice point.
cplx eisenstein_direct(const Lattice& lattice, int n, cplx z);

/// S_n by the same row-analytic summation (origin term excluded).
cplx lattice_sum_direct(const Lattice& lattice, int n);

/// S_n by plain truncated double summation over the square index window
/// |m1|, |m2| <= window. Only meaningful for n >= 5 or so, where the series
/// converges absolutely fast enough.
cplx lattice_sum_window(const Lattice& lattice, int n, int window);

/// E_n(z) by plain truncated double summation over the square index window.
cplx eisenstein_window(const Lattice& lattice, int n, cplx z, int window);

} // namespace structsums::oracle
