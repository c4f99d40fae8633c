#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tricorr {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. The workhorse for all operator algebra;
/// dimensions stay at or below 16 so everything is plain O(n^3) code.
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    static CMatrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conjugate() const;
    cplx trace() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    /// max entrywise |a_ij|
    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);

/// Kronecker product, a's indices outer.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// max |m - m^dagger| entrywise
double hermiticity_residual(const CMatrix& m);

struct EigenSystem {
    std::vector<double> values;  // descending
    CMatrix vectors;             // columns, orthonormal
};

/// Cyclic Jacobi eigensolver for Hermitian matrices (dim <= 16).
/// Converges when the off-diagonal Frobenius norm drops below 1e-13.
/// Throws std::invalid_argument if the input is not Hermitian within 1e-10.
EigenSystem hermitian_eigen(const CMatrix& m);

/// exp(i*H) for Hermitian H, via eigendecomposition; result is unitary.
CMatrix exp_i_hermitian(const CMatrix& h);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to zero first.
CMatrix sqrt_psd(const CMatrix& m);

}  // namespace tricorr
