#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chromkit/kernels.hpp"

namespace chromkit::kernels {

namespace {

struct Table {
    Backend backend;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
    void (*spmv)(const CsrMatrix&, const double*, double*);
};

constexpr Table kScalar{Backend::scalar, scalar::dot, scalar::axpy, scalar::scale, scalar::spmv};
constexpr Table kAvx2{Backend::avx2, avx2::dot, avx2::axpy, avx2::scale, avx2::spmv};

const Table* initial_table() {
    const char* env = std::getenv("CHROMKIT_SIMD");
    if (env && std::string_view(env) == "scalar") return &kScalar;
    return supported(Backend::avx2) ? &kAvx2 : &kScalar;
}

const Table*& table() {
    static const Table* current = initial_table();
    return current;
}

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("kernel: vector length mismatch");
}

}  // namespace

const char* to_string(Backend b) noexcept { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool supported(Backend b) noexcept {
    if (b == Backend::scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend active_backend() noexcept { return table()->backend; }

void set_backend(Backend b) {
    if (!supported(b)) throw std::runtime_error(std::string("SIMD backend not supported: ") + to_string(b));
    table() = b == Backend::avx2 ? &kAvx2 : &kScalar;
}

double dot(std::span<const double> a, std::span<const double> b) {
    check_sizes(a.size(), b.size());
    return table()->dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    check_sizes(x.size(), y.size());
    table()->axpy(alpha, x.data(), y.data(), x.size());
}

void scale(double alpha, std::span<double> x) { table()->scale(alpha, x.data(), x.size()); }

void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y) {
    check_sizes(a.rows, x.size());
    check_sizes(a.rows, y.size());
    table()->spmv(a, x.data(), y.data());
}

}  // namespace chromkit::kernels
