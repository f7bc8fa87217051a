#pragma once

// Numerical contract constants shared across the library.
namespace qmono::tol {

// Internal contracts: states and operators handed between modules.
inline constexpr double kUnitNorm = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTraceOne = 1e-10;

// Ingestion accepts small user-side drift and renormalizes exactly.
inline constexpr double kIngestNorm = 1e-6;

// Eigenvalues of a PSD operator may dip this far below zero before the
// operator is rejected. Anything in [kPsdFloor, 0) counts as exactly zero
// when forming determinants, so rank-deficient marginals give G = 0.
inline constexpr double kPsdFloor = -1e-10;

// Numerical rank threshold, relative to the trace.
inline constexpr double kRankRel = 1e-12;

// An ensemble must reproduce its density matrix to this operator norm.
inline constexpr double kReconstruction = 1e-8;

// Column orthonormality of ensemble mixing matrices.
inline constexpr double kOrthonormal = 1e-10;

}  // namespace qmono::tol
