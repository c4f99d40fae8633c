#pragma once

#include <initializer_list>
#include <vector>

#include "tricorr/cmatrix.hpp"

namespace tricorr {

/// Ordered set of qubit positions. Qubit 0 is the leftmost tensor factor,
/// i.e. the most significant bit of the computational-basis index.
struct SubsystemSet {
    std::vector<int> indices;  // strictly increasing

    SubsystemSet() = default;
    SubsystemSet(std::initializer_list<int> qs) : indices(qs) {}
    explicit SubsystemSet(std::vector<int> qs) : indices(std::move(qs)) {}

    std::size_t size() const { return indices.size(); }
    bool contains(int q) const;

    /// Throws std::invalid_argument unless indices are strictly increasing
    /// and all below n_qubits.
    void validate(int n_qubits) const;

    /// Complement within an n-qubit register.
    SubsystemSet complement(int n_qubits) const;
};

class PureState {
  public:
    /// Validates unit norm (squared norm within 1e-12 of 1).
    PureState(int n_qubits, std::vector<cplx> amp);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amp_.size(); }
    const std::vector<cplx>& amp() const { return amp_; }
    cplx operator[](std::size_t i) const { return amp_[i]; }

    CMatrix density() const;

    /// Computational basis ket |bits...>, e.g. basis({1,0,1}) = |101>.
    static PureState basis(std::initializer_list<int> bits);
    static PureState from_unnormalized(int n_qubits, std::vector<cplx> amp);

  private:
    int n_qubits_;
    std::vector<cplx> amp_;
};

class DensityMatrix {
  public:
    /// Validates Hermiticity (1e-10), eigenvalues >= -1e-10, unit trace (1e-10).
    DensityMatrix(int n_qubits, CMatrix mat);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return mat_.rows(); }
    const CMatrix& mat() const { return mat_; }

    static DensityMatrix from_pure(const PureState& psi);

  private:
    int n_qubits_;
    CMatrix mat_;
};

/// Reduced state on the kept qubits, in the induced ordering.
/// keep must be a nonempty proper subset.
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSet& keep);

/// Relabels qubits: qubit q of the result is qubit perm[q] of the input.
DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& perm);

/// op acts on the qubits in `where` (in increasing order), identity elsewhere.
CMatrix embed_operator(const CMatrix& op, const SubsystemSet& where, int n_qubits);

namespace detail {
// Raw-matrix versions used on hot paths; callers maintain the invariants.
CMatrix ptrace(const CMatrix& m, int n_qubits, const std::vector<int>& keep);
CMatrix permute(const CMatrix& m, int n_qubits, const std::vector<int>& perm);
std::vector<cplx> permute_vector(const std::vector<cplx>& v, int n_qubits,
                                 const std::vector<int>& perm);
}  // namespace detail

PureState ghz_state();
PureState w_state();
/// Dicke state of 3 qubits with k excitations (k = 0..3).
PureState dicke3(int k);
PureState tensor_pure(const PureState& a, const PureState& b);

}  // namespace tricorr
