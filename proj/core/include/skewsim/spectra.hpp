#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewsim/graph.hpp"

namespace skewsim {

/// Dense skew-adjacency matrix: entry (u,v) is +1 and (v,u) is -1 for each
/// arc u -> v, all other entries 0. Skew-symmetric with zero diagonal.
struct SkewAdjacency {
  std::int32_t n = 0;
  std::vector<double> entries;  // row-major n*n

  double at(std::int32_t i, std::int32_t j) const {
    return entries[static_cast<std::size_t>(i) * n + j];
  }
};

/// The n real numbers lambda_1 <= ... <= lambda_n such that the eigenvalues
/// of the skew-adjacency matrix are i*lambda_k (equivalently the spectrum of
/// the Hermitian matrix -iS). Symmetric about zero up to solver tolerance.
struct SkewSpectrum {
  std::vector<double> values;  // ascending
};

SkewAdjacency skew_adjacency(const OrientedGraph& g);

/// Spectrum via the real symmetric PSD matrix -S^2 (= S S^T): its eigenvalues
/// are computed by the symmetric eigensolver, tiny negatives in [-tol, 0]
/// are clamped to zero, square roots are taken, and signs are assigned by
/// pairing consecutive (near-)equal roots as one +/- pair; an unpaired
/// residue (odd n) is zero. Default tol is 1e-10 * n * max|entry of -S^2|.
/// Throws NumericError if the eigensolver fails to converge or produces an
/// eigenvalue below -tol.
SkewSpectrum skew_spectrum(const SkewAdjacency& S,
                           std::optional<double> tol = std::nullopt);

/// Sum of absolute values of the spectrum (the skew energy; equals the
/// nuclear norm of S).
double skew_energy(const SkewSpectrum& spec);

/// Every value divided by scale (> 0, else ParameterError); order preserved.
SkewSpectrum normalized_spectrum(const SkewSpectrum& spec, double scale);

}  // namespace skewsim
