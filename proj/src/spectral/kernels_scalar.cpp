#include "chromkit/kernels.hpp"

namespace chromkit::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void spmv(const CsrMatrix& a, const double* x, double* y) {
    for (std::size_t r = 0; r < a.rows; ++r) {
        double sum = 0.0;
        for (std::uint32_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) sum += a.val[k] * x[a.col[k]];
        y[r] = sum;
    }
}

}  // namespace chromkit::kernels::scalar
