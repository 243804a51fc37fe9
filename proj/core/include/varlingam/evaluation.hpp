#pragma once

#include <cstdint>
#include <vector>

#include "varlingam/data_matrix.hpp"

namespace varlingam {

enum class NoiseFamily { uniform, laplace, mixed };

/// Generating model behind a synthetic sample. b0_true holds instantaneous
/// effects, lagged_true[tau-1] the effects at lag tau, both with entry (i, j)
/// the effect of j on i. b0_true permuted by order_true is strictly lower
/// triangular, and the lag structure is rescaled to a stable process.
struct GroundTruth {
    Matrix b0_true;
    std::vector<Matrix> lagged_true;
    CausalOrder order_true;
    NoiseFamily noise_family = NoiseFamily::uniform;
};

struct SyntheticSample {
    DataMatrix data;
    GroundTruth truth;
};

/// Draws a random causal model and simulates it. Edges appear with the given
/// probability, coefficient magnitudes are uniform in [0.3, 0.9] with random
/// sign, lag matrices are rescaled so the companion spectral radius is at most
/// 0.9, noise is i.i.d. non-Gaussian with unit variance, and the first 200
/// steps are discarded as burn-in. The same seed always reproduces the same
/// sample bit for bit.
SyntheticSample generate_synthetic(int m, Index n, int p, double density,
                                   NoiseFamily noise_family, std::uint64_t seed);

/// Maps a coefficient matrix to its 0/1 edge pattern (diagonal forced to 0).
Matrix support(const Matrix& a);

/// Structural Hamming distance between two directed edge patterns: the number
/// of single-edge insertions, deletions, and reversals turning one into the
/// other, where a reversed edge costs 1. Entries are read as edge/no-edge;
/// diagonals are ignored.
int shd(const Matrix& truth, const Matrix& est);

/// Directed-edge F1 score: harmonic mean of precision and recall, where an
/// estimated edge counts only if its direction matches. Two empty graphs score
/// 1; an empty estimate against a nonempty truth scores 0.
double f1(const Matrix& truth, const Matrix& est);

}  // namespace varlingam
