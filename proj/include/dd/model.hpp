#pragma once

#include <vector>

#include "dd/pauli.hpp"

namespace dd {

enum class CouplingRange { NearestNeighbor, CubicDecay };
enum class Frame { Lab, Rotating };

/// Spin-1/2 chain with open boundaries:
///   sum_i linear_i Z_i / 2 + sum couplings J (XX + YY + alpha ZZ)
/// with nearest-neighbor weights or 1/(j-i)^3 decay. In the rotating frame
/// the linear terms are the chemical shifts delta_i; with all of them zero
/// only the bilinear part remains.
struct SpinChainParams {
  int n_qubits = 2;
  double coupling_j = 1.0;
  double alpha = 1.0;
  std::vector<double> linear_terms;  // empty = all zero
  CouplingRange coupling_range = CouplingRange::NearestNeighbor;
  Frame frame = Frame::Rotating;
};

PauliSum build_hamiltonian(const SpinChainParams& p);

/// max |eigenvalue| via dense Hermitian diagonalization
double spectral_norm(const PauliSum& h);

/// kappa * T_c; < 1 is the (pessimistic) convergence guideline
double convergence_ratio(const PauliSum& h, double cycle_time);

}  // namespace dd
