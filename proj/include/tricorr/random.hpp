#pragma once

#include <cstdint>

#include "tricorr/cmatrix.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

/// Deterministic random stream. Substreams derived from (seed, index) are
/// statistically independent, so parallel workers never share state.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {
        // decorrelate trivially close seeds
        next_u64();
        next_u64();
    }

    static RandomStream derive(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double gaussian();  // N(0, 1), Box-Muller (portable across stdlibs)
    cplx gaussian_cplx();

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed unitary via Gram-Schmidt of a complex Ginibre matrix.
CMatrix haar_random_unitary(std::size_t dim, RandomStream& rs);

PureState random_pure_state(int n_qubits, RandomStream& rs);

/// rho = G G^dag / tr(G G^dag) with G a (2^n x rank) Ginibre matrix.
DensityMatrix random_density_matrix(int n_qubits, int rank, RandomStream& rs);

/// Random vector in the symmetric (Dicke) subspace of 3 qubits.
PureState random_symmetric_pure3(RandomStream& rs);

/// Mixture of n_components random symmetric pure states with random weights.
DensityMatrix random_symmetric_mixed3(int n_components, RandomStream& rs);

}  // namespace tricorr
