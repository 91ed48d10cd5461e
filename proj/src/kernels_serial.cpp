#include <stdexcept>

#include "varkg/kernels.hpp"

namespace varkg::kernels::serial {

void matmul(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    c = DenseMatrix(a.rows(), b.cols());
    if (c.empty()) return;
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double* ci = &c(i, 0);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = a(i, p);
            const double* bp = b.row(p).data();
            for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
        }
    }
}

void matmul_tn(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matmul_tn: row count mismatch");
    c = DenseMatrix(a.cols(), b.cols());
    if (c.empty()) return;
    const std::size_t n = a.rows(), p = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < p; ++i) {
        double* ci = &c(i, 0);
        for (std::size_t r = 0; r < n; ++r) {
            const double ari = a(r, i);
            const double* br = b.row(r).data();
            for (std::size_t j = 0; j < m; ++j) ci[j] += ari * br[j];
        }
    }
}

void matmul_nt(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matmul_nt: column count mismatch");
    c = DenseMatrix(a.rows(), b.rows());
    if (c.empty()) return;
    const std::size_t n = a.rows(), k = a.cols(), m = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.row(i).data();
        for (std::size_t j = 0; j < m; ++j) {
            const double* bj = b.row(j).data();
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            c(i, j) = s;
        }
    }
}

void spmm(const CsrMatrix& a, const DenseMatrix& x, DenseMatrix& y) {
    if (a.n != x.rows()) throw std::invalid_argument("spmm: dimension mismatch");
    y = DenseMatrix(a.n, x.cols());
    if (y.empty()) return;
    const std::size_t m = x.cols();
    for (std::size_t i = 0; i < a.n; ++i) {
        double* yi = &y(i, 0);
        for (std::size_t e = a.offsets[i]; e < a.offsets[i + 1]; ++e) {
            const double w = a.values[e];
            const double* xr = x.row(a.cols[e]).data();
            for (std::size_t j = 0; j < m; ++j) yi[j] += w * xr[j];
        }
    }
}

}  // namespace varkg::kernels::serial
