#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chromkit::kernels {

/// Vector kernels behind the Lanczos solver. The scalar backend is the
/// reference; the AVX2+FMA backend is selected at first use when the CPU
/// supports it, unless CHROMKIT_SIMD=scalar is set in the environment.
enum class Backend { scalar, avx2 };

const char* to_string(Backend b) noexcept;
bool supported(Backend b) noexcept;
Backend active_backend() noexcept;
/// Throws std::runtime_error if the backend is not supported on this CPU.
void set_backend(Backend b);

/// Square matrix in compressed sparse row form.
struct CsrMatrix {
    std::size_t rows = 0;
    std::vector<std::uint32_t> row_ptr{0};
    std::vector<std::uint32_t> col;
    std::vector<double> val;
};

double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);  // y += alpha x
void scale(double alpha, std::span<double> x);
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);  // y = A x

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void spmv(const CsrMatrix& a, const double* x, double* y);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void spmv(const CsrMatrix& a, const double* x, double* y);
}  // namespace avx2

}  // namespace chromkit::kernels
