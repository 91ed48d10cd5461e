#pragma once

// Dense and sparse products used by the GNN layers.
//
// Each kernel exists twice: a plain serial loop nest (the reference) and an
// OpenMP version that splits the *output rows* across threads. Both use the
// same per-element summation order, so results are bitwise identical for any
// thread count; tests assert exact equality.

#include <cstdint>
#include <vector>

#include "varkg/dense_matrix.hpp"

namespace varkg {

/** Square sparse matrix in compressed-row form. Column indices sorted per row. */
struct CsrMatrix {
    std::size_t n = 0;
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> cols;
    std::vector<double> values;

    DenseMatrix to_dense() const;
};

namespace kernels {

namespace serial {
void matmul(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);     // c = a b
void matmul_tn(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);  // c = a^T b
void matmul_nt(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);  // c = a b^T
void spmm(const CsrMatrix& a, const DenseMatrix& x, DenseMatrix& y);         // y = a x
}  // namespace serial

namespace omp {
void matmul(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);
void matmul_tn(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);
void matmul_nt(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);
void spmm(const CsrMatrix& a, const DenseMatrix& x, DenseMatrix& y);
}  // namespace omp

/** Thread count for the dispatching wrappers below; 1 selects the serial path. */
void set_num_threads(int threads);
int num_threads();

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x);

}  // namespace kernels
}  // namespace varkg
