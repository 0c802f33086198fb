#pragma once

// Single source for every verification threshold. The CLI reports use these
// same constants, so command-line checks and library tests cannot drift.

namespace curvkit::tol {

// Symmetry-identity checks on constructed tensors, relative to the sup norm.
inline constexpr double kSymmetryRel = 1e-12;

// Singular values sigma <= kRankCutoffRel * sigma_max count as zero wherever
// a numerical rank is taken.
inline constexpr double kRankCutoffRel = 1e-9;

// Symmetric-form ingest: absolute deviation allowed between mirrored entries.
inline constexpr double kFormSymmetryAbs = 1e-14;

// JSON tensor ingest: reject when the symmetry violation exceeds this times
// the largest entry magnitude.
inline constexpr double kIngestSymmetryRel = 1e-9;

// JSON tensor writer drops entries at or below this magnitude.
inline constexpr double kWriterDropAbs = 1e-14;

// Adjointness checks (skew/self) for the curvature-derived operators.
inline constexpr double kAdjointRel = 1e-12;

// Exact-path realization round trip, and the CLI `realize --verify` gate.
inline constexpr double kRoundTripExactRel = 1e-12;
inline constexpr double kRealizeVerifyRel = 1e-10;

// Finite-difference oracle agreement at the default step.
inline constexpr double kFdRel = 1e-6;
inline constexpr double kFdDefaultStep = 1e-3;

// Default relative residual target for the decomposition solver.
inline constexpr double kDecomposeResidual = 1e-6;

// Orthonormality slack for skew-operator input planes.
inline constexpr double kOrthonormalAbs = 1e-10;

// Reject sampled directions with |g(x,x)| below this before normalizing.
inline constexpr double kNullConeGuard = 1e-6;

}  // namespace curvkit::tol
