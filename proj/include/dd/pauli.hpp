#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dd/errors.hpp"

namespace dd {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// An N-qubit Pauli string i^phase * (L_1 x L_2 x ... x L_N), stored as X/Z
/// bitmasks (site i <-> bit i-1) with the phase tracked as an exponent of i
/// mod 4. A "bare" string has phase exponent 0; bare strings with letter Y
/// carry no hidden factor (Y itself, not iXZ).
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp = 0);
  /// from 1-based (site, letter) pairs
  PauliString(int n_qubits, const std::vector<std::pair<int, Pauli>>& letters);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_exp() const { return phase_; }
  Complex phase() const;

  Pauli letter(int site) const;  // 1-based
  int weight() const;            // number of non-identity sites
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_bare() const { return phase_ == 0; }
  PauliString bare() const { return PauliString(n_, x_, z_); }
  PauliString adjoint() const;

  bool commutes_with(const PauliString& other) const;

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_ && phase_ == o.phase_;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }
  /// ordering ignores phase (bare-key order)
  bool operator<(const PauliString& o) const {
    if (x_ != o.x_) return x_ < o.x_;
    return z_ < o.z_;
  }

  /// "Y1 X2 Z3" (identity sites omitted; plain "I" for the identity string)
  std::string str() const;
  static PauliString parse(int n_qubits, const std::string& text);

  Eigen::MatrixXcd matrix() const;

 private:
  int n_;
  std::uint64_t x_ = 0, z_ = 0;
  std::uint8_t phase_ = 0;
};

PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

/// Weighted sum of bare Pauli strings; string phases are folded into the
/// complex coefficients. Coefficients below kPruneTol are dropped.
class PauliSum {
 public:
  static constexpr double kPruneTol = 1e-12;
  using Key = std::pair<std::uint64_t, std::uint64_t>;  // (x, z)
  using TermMap = std::map<Key, Complex>;

  explicit PauliSum(int n_qubits);
  PauliSum(const PauliString& s, Complex coeff = 1.0);

  int n_qubits() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Complex coefficient(const PauliString& s) const;
  void add_term(const PauliString& s, Complex coeff);

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(Complex c);

  double norm_inf() const;  // max |coefficient|
  bool is_hermitian(double tol = kPruneTol) const;
  PauliSum adjoint() const;

  std::string str(double unit_scale = 1.0, const std::string& unit_label = {}) const;
  static PauliSum parse(int n_qubits, const std::string& text,
                        const std::map<std::string, double>& units = {});

 private:
  void check_same_size(const PauliSum& o) const;

  int n_;
  TermMap terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(PauliSum a, Complex c);
PauliSum operator*(Complex c, PauliSum a);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// g^dagger h g for a Pauli string g; flips the sign of anticommuting terms.
PauliSum conjugate(const PauliSum& h, const PauliString& g);

bool equals_zero(const PauliSum& h, double tol);

/// Dense 2^N x 2^N matrix; site 1 is the least significant tensor factor.
/// N above the cap raises ResourceError.
Eigen::MatrixXcd to_matrix(const PauliSum& h, int max_qubits = 12);

}  // namespace dd
