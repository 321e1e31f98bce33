#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "chromkit/graph.hpp"
#include "chromkit/kernels.hpp"
#include "chromkit/rational.hpp"

namespace chromkit {

class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EigenMethod { automatic, dense, iterative };

const char* to_string(EigenMethod m) noexcept;

struct SpectralOptions {
    double tol = 1e-9;                 // relative to d
    EigenMethod method = EigenMethod::automatic;
    std::size_t dense_threshold = 400; // automatic: dense up to this many vertices
    std::size_t max_iterations = 4000;
    std::uint64_t seed = 0x5eed;       // Lanczos start vector
};

/// Second largest absolute adjacency eigenvalue of a regular multigraph,
/// one copy of the Perron value d excluded.
struct SpectralReport {
    std::size_t d = 0;
    std::size_t num_vertices = 0;
    double lambda = 0.0;         // max(|top|, |bottom|)
    double top = 0.0;            // largest eigenvalue after removing one copy of d
    double bottom = 0.0;         // smallest eigenvalue
    EigenMethod method = EigenMethod::dense;
    double residual = 0.0;       // an eigenvalue lies within `residual` of each reported value
    bool disconnected = false;
    std::size_t iterations = 0;
};

/// Multiplicity-weighted adjacency matrix.
kernels::CsrMatrix adjacency_matrix(const LabeledMultigraph& g);

/// Throws SpectralError for non-regular input or when Lanczos does not
/// reach tol * d within the iteration budget.
SpectralReport lambda2(const LabeledMultigraph& g, const SpectralOptions& options = {});

/// Eigenvalues sum_{s in S} cos(2 pi j s / l), j = 0..l-1, of the circulant
/// with connection set S. S must be symmetric (s and l-s together) and avoid 0.
std::vector<double> circulant_spectrum(std::size_t l, std::span<const std::size_t> connection_set);

/// Circulant graph: i -- i+s for each s in S (s = l/2 contributes one edge per pair).
LabeledMultigraph circulant_graph(std::size_t l, std::span<const std::size_t> connection_set);

/// e(B, B') = number of (b, b') in B x B' joined by an edge, with multiplicity,
/// so edges inside B n B' count twice.
std::uint64_t edge_count_between(const LabeledMultigraph& g, std::span<const Vertex> b, std::span<const Vertex> bp);

struct EmlCheck {
    std::uint64_t edges = 0;      // e(B, B')
    double expected = 0.0;        // d |B||B'| / l
    double deviation = 0.0;       // |e - expected|
    double bound = 0.0;           // (lambda + slack) sqrt(|B||B'|)
    bool holds = false;
};

/// Mixing lemma |e(B,B') - d|B||B'|/l| <= lambda sqrt(|B||B'|), with `slack`
/// added to lambda (use the eigensolver residual).
EmlCheck eml_check(const LabeledMultigraph& g, std::size_t d, std::span<const Vertex> b, std::span<const Vertex> bp,
                   double lambda, double slack = 0.0);

/// Per-label spectral reports; holds iff each class has lambda + residual <= d / (n + 2).
struct MixingCertificate {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t num_vertices = 0;
    std::vector<Label> labels;
    std::vector<SpectralReport> reports;
    Rational threshold;  // d / (n + 2)
    bool holds = false;
};

/// Throws SpectralError when label classes are not regular of one common degree.
MixingCertificate mixing_certificate(const LabeledMultigraph& labeled, std::size_t n,
                                     const SpectralOptions& options = {});

/// d l / ((n+1)^2 (n+2)), exact.
Rational cor_bound(std::size_t l, std::size_t d, std::size_t n);

}  // namespace chromkit
