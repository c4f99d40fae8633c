#include "tricorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tricorr {

bool SubsystemSet::contains(int q) const {
    return std::binary_search(indices.begin(), indices.end(), q);
}

void SubsystemSet::validate(int n_qubits) const {
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= n_qubits)
            throw std::invalid_argument("SubsystemSet: qubit index out of range");
        if (k > 0 && indices[k] <= indices[k - 1])
            throw std::invalid_argument("SubsystemSet: indices must be strictly increasing");
    }
}

SubsystemSet SubsystemSet::complement(int n_qubits) const {
    SubsystemSet c;
    for (int q = 0; q < n_qubits; ++q)
        if (!contains(q)) c.indices.push_back(q);
    return c;
}

PureState::PureState(int n_qubits, std::vector<cplx> amp) : n_qubits_(n_qubits), amp_(std::move(amp)) {
    if (n_qubits_ < 1 || amp_.size() != (std::size_t{1} << n_qubits_))
        throw std::invalid_argument("PureState: amplitude length must be 2^n");
    double n2 = 0.0;
    for (const auto& a : amp_) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-12) throw std::invalid_argument("PureState: not unit norm");
}

CMatrix PureState::density() const {
    CMatrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) m(i, j) = amp_[i] * std::conj(amp_[j]);
    return m;
}

PureState PureState::basis(std::initializer_list<int> bits) {
    const int n = static_cast<int>(bits.size());
    std::size_t idx = 0;
    for (int b : bits) idx = (idx << 1) | static_cast<std::size_t>(b & 1);
    std::vector<cplx> amp(std::size_t{1} << n, 0.0);
    amp[idx] = 1.0;
    return PureState(n, std::move(amp));
}

PureState PureState::from_unnormalized(int n_qubits, std::vector<cplx> amp) {
    double n2 = 0.0;
    for (const auto& a : amp) n2 += std::norm(a);
    if (n2 <= 0.0) throw std::invalid_argument("PureState: zero vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amp) a *= inv;
    return PureState(n_qubits, std::move(amp));
}

DensityMatrix::DensityMatrix(int n_qubits, CMatrix mat) : n_qubits_(n_qubits), mat_(std::move(mat)) {
    if (n_qubits_ < 1 || n_qubits_ > 4) throw std::invalid_argument("DensityMatrix: n_qubits must be 1..4");
    const std::size_t d = std::size_t{1} << n_qubits_;
    if (mat_.rows() != d || mat_.cols() != d)
        throw std::invalid_argument("DensityMatrix: dimension must be 2^n x 2^n");
    if (!mat_.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
    if (hermiticity_residual(mat_) > 1e-10)
        throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
    if (std::abs(mat_.trace() - cplx(1.0, 0.0)) > 1e-10)
        throw std::invalid_argument("DensityMatrix: trace not 1 within 1e-10");
    const auto es = hermitian_eigen(mat_);
    if (es.values.back() < -1e-10)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue below -1e-10");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(psi.n_qubits(), psi.density());
}

namespace detail {

CMatrix ptrace(const CMatrix& m, int n_qubits, const std::vector<int>& keep) {
    const int nk = static_cast<int>(keep.size());
    const int nt = n_qubits - nk;
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t dt = std::size_t{1} << nt;
    // shift of qubit q within the full index (qubit 0 = MSB)
    auto shift = [n_qubits](int q) { return n_qubits - 1 - q; };

    CMatrix r(dk, dk);
    for (std::size_t a = 0; a < dk; ++a)
        for (std::size_t b = 0; b < dk; ++b) {
            std::size_t base_a = 0, base_b = 0;
            for (int k = 0; k < nk; ++k) {
                base_a |= ((a >> (nk - 1 - k)) & 1u) << shift(keep[k]);
                base_b |= ((b >> (nk - 1 - k)) & 1u) << shift(keep[k]);
            }
            cplx s = 0.0;
            for (std::size_t e = 0; e < dt; ++e) {
                std::size_t env = 0;
                for (int k = 0; k < nt; ++k) env |= ((e >> (nt - 1 - k)) & 1u) << shift(traced[k]);
                s += m(base_a | env, base_b | env);
            }
            r(a, b) = s;
        }
    return r;
}

CMatrix permute(const CMatrix& m, int n_qubits, const std::vector<int>& perm) {
    const std::size_t d = std::size_t{1} << n_qubits;
    auto map_index = [&](std::size_t i) {
        std::size_t j = 0;
        for (int q = 0; q < n_qubits; ++q) {
            const std::size_t bit = (i >> (n_qubits - 1 - perm[q])) & 1u;
            j |= bit << (n_qubits - 1 - q);
        }
        return j;
    };
    CMatrix r(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(map_index(i), map_index(j)) = m(i, j);
    return r;
}

std::vector<cplx> permute_vector(const std::vector<cplx>& v, int n_qubits, const std::vector<int>& perm) {
    const std::size_t d = std::size_t{1} << n_qubits;
    std::vector<cplx> r(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t j = 0;
        for (int q = 0; q < n_qubits; ++q) {
            const std::size_t bit = (i >> (n_qubits - 1 - perm[q])) & 1u;
            j |= bit << (n_qubits - 1 - q);
        }
        r[j] = v[i];
    }
    return r;
}

}  // namespace detail

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSet& keep) {
    keep.validate(rho.n_qubits());
    if (keep.indices.empty() || keep.size() == static_cast<std::size_t>(rho.n_qubits()))
        throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
    CMatrix r = detail::ptrace(rho.mat(), rho.n_qubits(), keep.indices);
    return DensityMatrix(static_cast<int>(keep.size()), std::move(r));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& perm) {
    if (perm.size() != static_cast<std::size_t>(rho.n_qubits()))
        throw std::invalid_argument("permute_qubits: permutation length mismatch");
    std::vector<int> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= rho.n_qubits() || seen[p]++)
            throw std::invalid_argument("permute_qubits: not a permutation");
    }
    return DensityMatrix(rho.n_qubits(), detail::permute(rho.mat(), rho.n_qubits(), perm));
}

CMatrix embed_operator(const CMatrix& op, const SubsystemSet& where, int n_qubits) {
    where.validate(n_qubits);
    const int nw = static_cast<int>(where.size());
    if (op.rows() != (std::size_t{1} << nw) || op.cols() != op.rows())
        throw std::invalid_argument("embed_operator: operator dimension mismatch");
    const std::size_t d = std::size_t{1} << n_qubits;
    auto sub_index = [&](std::size_t full) {
        std::size_t s = 0;
        for (int k = 0; k < nw; ++k)
            s |= ((full >> (n_qubits - 1 - where.indices[k])) & 1u) << (nw - 1 - k);
        return s;
    };
    std::size_t rest_mask = d - 1;
    for (int k = 0; k < nw; ++k) rest_mask &= ~(std::size_t{1} << (n_qubits - 1 - where.indices[k]));

    CMatrix r(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if ((i & rest_mask) != (j & rest_mask)) continue;
            r(i, j) = op(sub_index(i), sub_index(j));
        }
    return r;
}

PureState ghz_state() {
    std::vector<cplx> amp(8, 0.0);
    amp[0] = amp[7] = 1.0 / std::sqrt(2.0);
    return PureState(3, std::move(amp));
}

PureState w_state() {
    std::vector<cplx> amp(8, 0.0);
    amp[4] = amp[2] = amp[1] = 1.0 / std::sqrt(3.0);  // |100>, |010>, |001>
    return PureState(3, std::move(amp));
}

PureState dicke3(int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("dicke3: k must be 0..3");
    std::vector<cplx> amp(8, 0.0);
    int count = 0;
    for (int i = 0; i < 8; ++i)
        if (__builtin_popcount(static_cast<unsigned>(i)) == k) ++count;
    for (int i = 0; i < 8; ++i)
        if (__builtin_popcount(static_cast<unsigned>(i)) == k) amp[i] = 1.0 / std::sqrt(double(count));
    return PureState(3, std::move(amp));
}

PureState tensor_pure(const PureState& a, const PureState& b) {
    std::vector<cplx> amp(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) amp[i * b.dim() + j] = a[i] * b[j];
    return PureState(a.n_qubits() + b.n_qubits(), std::move(amp));
}

}  // namespace tricorr
