#include "varkg/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace varkg {

DenseMatrix CsrMatrix::to_dense() const {
    DenseMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) d(i, cols[e]) += values[e];
    }
    return d;
}

namespace kernels {

namespace {
int g_threads = 1;
}

void set_num_threads(int threads) {
    g_threads = std::max(1, threads);
    omp_set_num_threads(g_threads);
}

int num_threads() { return g_threads; }

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c;
    g_threads > 1 ? omp::matmul(a, b, c) : serial::matmul(a, b, c);
    return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c;
    g_threads > 1 ? omp::matmul_tn(a, b, c) : serial::matmul_tn(a, b, c);
    return c;
}

DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c;
    g_threads > 1 ? omp::matmul_nt(a, b, c) : serial::matmul_nt(a, b, c);
    return c;
}

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x) {
    DenseMatrix y;
    g_threads > 1 ? omp::spmm(a, x, y) : serial::spmm(a, x, y);
    return y;
}

}  // namespace kernels
}  // namespace varkg
