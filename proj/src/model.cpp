#include "dd/model.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace dd {

PauliSum build_hamiltonian(const SpinChainParams& p) {
  if (p.n_qubits < 2) throw ParameterError("spin chain needs at least 2 qubits");
  if (!p.linear_terms.empty() && static_cast<int>(p.linear_terms.size()) != p.n_qubits)
    throw ParameterError("linear_terms must have one entry per qubit");
  const int n = p.n_qubits;
  PauliSum h(n);
  for (int i = 1; i <= n && !p.linear_terms.empty(); ++i) {
    double w = p.linear_terms[i - 1];
    if (w != 0.0) h.add_term(PauliString(n, {{i, Pauli::Z}}), w / 2.0);
  }
  auto add_bond = [&](int i, int j, double w) {
    h.add_term(PauliString(n, {{i, Pauli::X}, {j, Pauli::X}}), w);
    h.add_term(PauliString(n, {{i, Pauli::Y}, {j, Pauli::Y}}), w);
    h.add_term(PauliString(n, {{i, Pauli::Z}, {j, Pauli::Z}}), p.alpha * w);
  };
  if (p.coupling_range == CouplingRange::NearestNeighbor) {
    for (int i = 1; i < n; ++i) add_bond(i, i + 1, p.coupling_j);
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        double r = static_cast<double>(j - i);
        add_bond(i, j, p.coupling_j / (r * r * r));
      }
  }
  return h;
}

double spectral_norm(const PauliSum& h) {
  if (!h.is_hermitian()) throw DomainError("spectral_norm requires a Hermitian sum");
  if (h.empty()) return 0.0;
  Eigen::MatrixXcd m = to_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
}

double convergence_ratio(const PauliSum& h, double cycle_time) {
  if (cycle_time <= 0) throw ParameterError("cycle time must be positive");
  return spectral_norm(h) * cycle_time;
}

}  // namespace dd
