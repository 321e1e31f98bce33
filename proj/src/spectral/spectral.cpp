#include "chromkit/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "chromkit/rng.hpp"

namespace chromkit {

const char* to_string(EigenMethod m) noexcept {
    switch (m) {
        case EigenMethod::automatic: return "automatic";
        case EigenMethod::dense: return "dense";
        case EigenMethod::iterative: return "iterative";
    }
    return "automatic";
}

kernels::CsrMatrix adjacency_matrix(const LabeledMultigraph& g) {
    kernels::CsrMatrix a;
    a.rows = g.num_vertices();
    a.row_ptr.assign(a.rows + 1, 0);
    std::vector<std::pair<Vertex, double>> row;
    for (Vertex v = 0; v < a.rows; ++v) {
        row.clear();
        for (const auto& inc : g.incident(v)) row.emplace_back(inc.neighbor, 1.0);
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < row.size();) {
            std::size_t j = i;
            double w = 0.0;
            while (j < row.size() && row[j].first == row[i].first) w += row[j++].second;
            a.col.push_back(row[i].first);
            a.val.push_back(w);
            i = j;
        }
        a.row_ptr[v + 1] = static_cast<std::uint32_t>(a.col.size());
    }
    return a;
}

namespace {

SpectralReport dense_lambda(const LabeledMultigraph& g, std::size_t d) {
    const auto n = static_cast<Eigen::Index>(g.num_vertices());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        a(e.u, e.v) += 1.0;
        a(e.v, e.u) += 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw SpectralError("dense eigensolver failed");
    const auto& evals = solver.eigenvalues();
    SpectralReport r;
    r.method = EigenMethod::dense;
    r.d = d;
    r.num_vertices = g.num_vertices();
    // Ascending order: the last entry is the Perron value d.
    if (n >= 2) {
        r.top = evals(n - 2);
        r.bottom = evals(0);
        r.lambda = std::max(std::abs(r.top), std::abs(r.bottom));
    }
    const Eigen::MatrixXd residual = a * solver.eigenvectors() - solver.eigenvectors() * evals.asDiagonal();
    r.residual = n == 0 ? 0.0 : residual.colwise().norm().maxCoeff();
    r.iterations = 0;
    return r;
}

SpectralReport lanczos_lambda(const LabeledMultigraph& g, std::size_t d, const SpectralOptions& options) {
    const std::size_t n = g.num_vertices();
    SpectralReport r;
    r.method = EigenMethod::iterative;
    r.d = d;
    r.num_vertices = n;
    if (n < 2) return r;

    const auto a = adjacency_matrix(g);
    const double scale = d == 0 ? 1.0 : static_cast<double>(d);
    const double target = options.tol * scale;
    const std::vector<double> ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const std::size_t max_steps = std::min(n - 1, options.max_iterations);

    // Work in the complement of the constant vector, the Perron eigenvector.
    std::vector<std::vector<double>> basis;
    std::vector<double> v(n);
    Rng rng(options.seed);
    for (auto& x : v) x = 2.0 * rng.uniform() - 1.0;
    kernels::axpy(-kernels::dot(v, ones), ones, v);
    kernels::scale(1.0 / std::sqrt(kernels::dot(v, v)), v);
    basis.push_back(v);

    std::vector<double> alpha, beta;
    std::vector<double> w(n);
    std::size_t next_check = std::min<std::size_t>(20, max_steps);
    for (std::size_t j = 0; j < max_steps; ++j) {
        const auto& vj = basis[j];
        kernels::spmv(a, vj, w);
        const double aj = kernels::dot(w, vj);
        kernels::axpy(-aj, vj, w);
        if (j > 0) kernels::axpy(-beta[j - 1], basis[j - 1], w);
        for (int pass = 0; pass < 2; ++pass) {
            kernels::axpy(-kernels::dot(w, ones), ones, w);
            for (const auto& b : basis) kernels::axpy(-kernels::dot(w, b), b, w);
        }
        const double bj = std::sqrt(kernels::dot(w, w));
        alpha.push_back(aj);

        const bool exhausted = j + 1 == max_steps;
        const bool invariant = bj <= 1e-12 * scale;
        if (j + 1 >= next_check || exhausted || invariant) {
            const auto m = static_cast<Eigen::Index>(alpha.size());
            Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
            Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1))
                                        : Eigen::VectorXd();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> t;
            t.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            if (t.info() != Eigen::Success) throw SpectralError("tridiagonal eigensolver failed");
            const double res_bottom = std::abs(bj * t.eigenvectors()(m - 1, 0));
            const double res_top = std::abs(bj * t.eigenvectors()(m - 1, m - 1));
            r.top = t.eigenvalues()(m - 1);
            r.bottom = t.eigenvalues()(0);
            r.residual = std::max(res_top, res_bottom);
            r.iterations = alpha.size();
            if (r.residual <= target || invariant || alpha.size() == n - 1) {
                r.lambda = std::max(std::abs(r.top), std::abs(r.bottom));
                return r;
            }
            if (exhausted) break;
            next_check = j + 1 + std::max<std::size_t>(10, (j + 1) / 5);
        }
        beta.push_back(bj);
        kernels::scale(1.0 / bj, w);
        basis.push_back(w);
    }
    throw SpectralError("Lanczos did not converge to tol within " + std::to_string(max_steps) +
                        " iterations (residual " + std::to_string(r.residual) + ")");
}

}  // namespace

SpectralReport lambda2(const LabeledMultigraph& g, const SpectralOptions& options) {
    const auto d = regular_degree(g);
    if (!d) throw SpectralError("lambda2: graph is not regular");
    EigenMethod method = options.method;
    if (method == EigenMethod::automatic) {
        method = g.num_vertices() <= options.dense_threshold ? EigenMethod::dense : EigenMethod::iterative;
    }
    SpectralReport r = method == EigenMethod::dense ? dense_lambda(g, *d) : lanczos_lambda(g, *d, options);
    r.disconnected = connected_components(g).count > 1;
    return r;
}

namespace {

void check_connection_set(std::size_t l, std::span<const std::size_t> s) {
    std::vector<std::size_t> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("circulant: repeated offset");
    }
    for (auto x : sorted) {
        if (x == 0 || x >= l) throw std::invalid_argument("circulant: offsets must lie in 1..l-1");
        if (!std::binary_search(sorted.begin(), sorted.end(), l - x)) {
            throw std::invalid_argument("circulant: connection set is not symmetric");
        }
    }
}

}  // namespace

std::vector<double> circulant_spectrum(std::size_t l, std::span<const std::size_t> connection_set) {
    check_connection_set(l, connection_set);
    std::vector<double> out(l, 0.0);
    for (std::size_t j = 0; j < l; ++j) {
        double sum = 0.0;
        for (auto s : connection_set) {
            // Reduce j*s mod l first so the angle stays in [0, 2pi).
            const auto phase = static_cast<double>((j * s) % l);
            sum += std::cos(2.0 * std::numbers::pi * phase / static_cast<double>(l));
        }
        out[j] = sum;
    }
    return out;
}

LabeledMultigraph circulant_graph(std::size_t l, std::span<const std::size_t> connection_set) {
    check_connection_set(l, connection_set);
    std::vector<Edge> edges;
    for (auto s : connection_set) {
        if (2 * s > l) continue;  // covered by l - s
        for (Vertex i = 0; i < l; ++i) {
            const auto j = static_cast<Vertex>((i + s) % l);
            if (2 * s == l && j < i) continue;
            edges.push_back({i, j, 0});
        }
    }
    return {l, std::move(edges)};
}

std::uint64_t edge_count_between(const LabeledMultigraph& g, std::span<const Vertex> b, std::span<const Vertex> bp) {
    std::vector<char> in_b(g.num_vertices(), 0), in_bp(g.num_vertices(), 0);
    for (auto v : b) in_b.at(v) = 1;
    for (auto v : bp) in_bp.at(v) = 1;
    std::uint64_t count = 0;
    for (const auto& e : g.edges()) count += (in_b[e.u] && in_bp[e.v]) + (in_b[e.v] && in_bp[e.u]);
    return count;
}

EmlCheck eml_check(const LabeledMultigraph& g, std::size_t d, std::span<const Vertex> b, std::span<const Vertex> bp,
                   double lambda, double slack) {
    auto distinct = [&](std::span<const Vertex> s) {
        std::vector<char> mark(g.num_vertices(), 0);
        std::size_t c = 0;
        for (auto v : s) c += !std::exchange(mark.at(v), 1);
        return c;
    };
    EmlCheck out;
    const double nb = static_cast<double>(distinct(b));
    const double nbp = static_cast<double>(distinct(bp));
    out.edges = edge_count_between(g, b, bp);
    out.expected = g.num_vertices() == 0 ? 0.0 : static_cast<double>(d) * nb * nbp / static_cast<double>(g.num_vertices());
    out.deviation = std::abs(static_cast<double>(out.edges) - out.expected);
    out.bound = (lambda + slack) * std::sqrt(nb * nbp);
    out.holds = out.deviation <= out.bound + 1e-12 * std::max(1.0, out.expected);
    return out;
}

MixingCertificate mixing_certificate(const LabeledMultigraph& labeled, std::size_t n, const SpectralOptions& options) {
    MixingCertificate cert;
    cert.n = n;
    cert.num_vertices = labeled.num_vertices();
    cert.labels = labeled.labels();
    if (cert.labels.empty()) throw SpectralError("mixing_certificate: no label classes");
    std::vector<LabeledMultigraph> classes;
    for (auto j : cert.labels) {
        classes.push_back(labeled.label_class(j));
        const auto d = regular_degree(classes.back());
        if (!d) throw SpectralError("mixing_certificate: label class " + std::to_string(j) + " is not regular");
        if (classes.size() == 1) {
            cert.d = *d;
        } else if (*d != cert.d) {
            throw SpectralError("mixing_certificate: label classes have unequal degrees (" + std::to_string(cert.d) +
                                " vs " + std::to_string(*d) + ")");
        }
    }
    std::vector<std::future<SpectralReport>> jobs;
    for (const auto& c : classes) jobs.push_back(std::async(std::launch::async, [&c, &options] { return lambda2(c, options); }));
    for (auto& job : jobs) cert.reports.push_back(job.get());
    cert.threshold = Rational(static_cast<std::int64_t>(cert.d), static_cast<std::int64_t>(n + 2));
    cert.holds = std::all_of(cert.reports.begin(), cert.reports.end(), [&](const SpectralReport& r) {
        return (r.lambda + r.residual) * static_cast<double>(n + 2) <= static_cast<double>(cert.d);
    });
    return cert;
}

Rational cor_bound(std::size_t l, std::size_t d, std::size_t n) {
    if (l == 0 || d == 0 || n == 0) throw std::invalid_argument("cor_bound: inputs must be positive");
    return {static_cast<std::int64_t>(d * l), static_cast<std::int64_t>((n + 1) * (n + 1) * (n + 2))};
}

}  // namespace chromkit
