#include <cstdint>
#include <stdexcept>

#include "varkg/kernels.hpp"

// Same loop bodies as kernels_serial.cpp with the outer (output-row) loop
// distributed. Keep the two files in sync: equality tests compare them bit
// for bit.

namespace varkg::kernels::omp {

void matmul(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    c = DenseMatrix(a.rows(), b.cols());
    if (c.empty()) return;
    const auto n = static_cast<std::int64_t>(a.rows());
    const std::size_t k = a.cols(), m = b.cols();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        double* ci = &c(static_cast<std::size_t>(i), 0);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = a(static_cast<std::size_t>(i), p);
            const double* bp = b.row(p).data();
            for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
        }
    }
}

void matmul_tn(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matmul_tn: row count mismatch");
    c = DenseMatrix(a.cols(), b.cols());
    if (c.empty()) return;
    const std::size_t n = a.rows(), m = b.cols();
    const auto p = static_cast<std::int64_t>(a.cols());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < p; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        double* ci = &c(ii, 0);
        for (std::size_t r = 0; r < n; ++r) {
            const double ari = a(r, ii);
            const double* br = b.row(r).data();
            for (std::size_t j = 0; j < m; ++j) ci[j] += ari * br[j];
        }
    }
}

void matmul_nt(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matmul_nt: column count mismatch");
    c = DenseMatrix(a.rows(), b.rows());
    if (c.empty()) return;
    const auto n = static_cast<std::int64_t>(a.rows());
    const std::size_t k = a.cols(), m = b.rows();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        const double* ai = a.row(ii).data();
        for (std::size_t j = 0; j < m; ++j) {
            const double* bj = b.row(j).data();
            double s = 0.0;
            for (std::size_t q = 0; q < k; ++q) s += ai[q] * bj[q];
            c(ii, j) = s;
        }
    }
}

void spmm(const CsrMatrix& a, const DenseMatrix& x, DenseMatrix& y) {
    if (a.n != x.rows()) throw std::invalid_argument("spmm: dimension mismatch");
    y = DenseMatrix(a.n, x.cols());
    if (y.empty()) return;
    const std::size_t m = x.cols();
    const auto n = static_cast<std::int64_t>(a.n);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        double* yi = &y(ii, 0);
        for (std::size_t e = a.offsets[ii]; e < a.offsets[ii + 1]; ++e) {
            const double w = a.values[e];
            const double* xr = x.row(a.cols[e]).data();
            for (std::size_t j = 0; j < m; ++j) yi[j] += w * xr[j];
        }
    }
}

}  // namespace varkg::kernels::omp
