#include "dd/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dd {

namespace {

const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_qubits(int n) {
  if (n < 1 || n > PauliString::kMaxQubits)
    throw ParameterError("qubit count must be in [1, 64], got " + std::to_string(n));
}

Eigen::Matrix2cd letter_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

PauliString::PauliString(int n_qubits) : n_(n_qubits) { check_qubits(n_qubits); }

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp)
    : n_(n_qubits), x_(x_mask), z_(z_mask), phase_(static_cast<std::uint8_t>(((phase_exp % 4) + 4) % 4)) {
  check_qubits(n_qubits);
  std::uint64_t valid = (n_qubits == 64) ? ~0ull : ((1ull << n_qubits) - 1);
  if ((x_ | z_) & ~valid) throw ParameterError("Pauli mask exceeds qubit count");
}

PauliString::PauliString(int n_qubits, const std::vector<std::pair<int, Pauli>>& letters)
    : n_(n_qubits) {
  check_qubits(n_qubits);
  for (auto [site, p] : letters) {
    if (site < 1 || site > n_qubits)
      throw ParameterError("site " + std::to_string(site) + " outside 1.." + std::to_string(n_qubits));
    std::uint64_t b = 1ull << (site - 1);
    switch (p) {
      case Pauli::I: break;
      case Pauli::X: x_ |= b; break;
      case Pauli::Y: x_ |= b; z_ |= b; break;
      case Pauli::Z: z_ |= b; break;
    }
  }
}

Complex PauliString::phase() const { return kPhases[phase_]; }

Pauli PauliString::letter(int site) const {
  std::uint64_t b = 1ull << (site - 1);
  bool x = x_ & b, z = z_ & b;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

int PauliString::weight() const { return popcount(x_ | z_); }

PauliString PauliString::adjoint() const {
  // bare strings are Hermitian; conjugate the phase
  return PauliString(n_, x_, z_, (4 - phase_) % 4);
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) throw DimensionError("qubit count mismatch in commutes_with");
  return ((popcount(x_ & other.z_) + popcount(z_ & other.x_)) & 1) == 0;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("qubit count mismatch in multiply");
  std::uint64_t x = a.x_mask() ^ b.x_mask();
  std::uint64_t z = a.z_mask() ^ b.z_mask();
  // with letters written as i^{|x&z|} X^x Z^z, the product phase picks up
  // (-1)^{z_a & x_b} from commuting Z^{z_a} past X^{x_b}
  int ga = popcount(a.x_mask() & a.z_mask());
  int gb = popcount(b.x_mask() & b.z_mask());
  int g = popcount(x & z);
  int p = a.phase_exp() + b.phase_exp() + ga + gb + 2 * popcount(a.z_mask() & b.x_mask()) - g;
  return PauliString(a.n_qubits(), x, z, p);
}

std::string PauliString::str() const {
  std::ostringstream os;
  switch (phase_) {
    case 0: break;
    case 1: os << "i·"; break;
    case 2: os << "-"; break;
    case 3: os << "-i·"; break;
  }
  if (is_identity()) {
    os << "I";
    return os.str();
  }
  bool first = true;
  for (int s = 1; s <= n_; ++s) {
    Pauli p = letter(s);
    if (p == Pauli::I) continue;
    if (!first) os << ' ';
    os << "IXYZ"[static_cast<int>(p)] << s;
    first = false;
  }
  return os.str();
}

PauliString PauliString::parse(int n_qubits, const std::string& text) {
  std::vector<std::pair<int, Pauli>> letters;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (text.substr(i) == "I") return PauliString(n_qubits);
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    Pauli p;
    if (c == 'X') p = Pauli::X;
    else if (c == 'Y') p = Pauli::Y;
    else if (c == 'Z') p = Pauli::Z;
    else throw ParameterError("bad Pauli letter '" + std::string(1, c) + "' in \"" + text + "\"");
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw ParameterError("missing site index in \"" + text + "\"");
    letters.emplace_back(std::stoi(text.substr(i, j - i)), p);
    i = j;
  }
  return PauliString(n_qubits, letters);
}

Eigen::MatrixXcd PauliString::matrix() const {
  if (n_ > 12) throw ResourceError("dense matrix cap exceeded");
  Eigen::Index d = Eigen::Index(1) << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int s = 1; s <= n_; ++s) {
    Eigen::Matrix2cd lm = letter_matrix(letter(s));
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    // site s becomes the next-more-significant factor
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = lm(r, c) * m;
    m = std::move(next);
  }
  (void)d;
  return phase() * m;
}

// ---------------------------------------------------------------------------

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) { check_qubits(n_qubits); }

PauliSum::PauliSum(const PauliString& s, Complex coeff) : n_(s.n_qubits()) {
  add_term(s, coeff);
}

void PauliSum::check_same_size(const PauliSum& o) const {
  if (n_ != o.n_) throw DimensionError("qubit count mismatch between PauliSums");
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find({s.x_mask(), s.z_mask()});
  if (it == terms_.end()) return {0, 0};
  return it->second * s.phase();  // coefficient relative to the given (phased) string
}

void PauliSum::add_term(const PauliString& s, Complex coeff) {
  if (s.n_qubits() != n_) throw DimensionError("qubit count mismatch in add_term");
  Key k{s.x_mask(), s.z_mask()};
  Complex v = terms_[k] + coeff * s.phase();
  if (std::abs(v) <= kPruneTol)
    terms_.erase(k);
  else
    terms_[k] = v;
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  check_same_size(o);
  for (const auto& [k, c] : o.terms_) {
    Complex v = terms_[k] + c;
    if (std::abs(v) <= kPruneTol)
      terms_.erase(k);
    else
      terms_[k] = v;
  }
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  check_same_size(o);
  for (const auto& [k, c] : o.terms_) {
    Complex v = terms_[k] - c;
    if (std::abs(v) <= kPruneTol)
      terms_.erase(k);
    else
      terms_[k] = v;
  }
  return *this;
}

PauliSum& PauliSum::operator*=(Complex c) {
  if (std::abs(c) <= kPruneTol) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

double PauliSum::norm_inf() const {
  double m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [k, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

PauliSum PauliSum::adjoint() const {
  PauliSum r(n_);
  for (const auto& [k, c] : terms_) r.terms_[k] = std::conj(c);
  return r;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(PauliSum a, Complex c) { return a *= c; }
PauliSum operator*(Complex c, PauliSum a) { return a *= c; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("qubit count mismatch in product");
  PauliSum r(a.n_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    PauliString sa(a.n_qubits(), ka.first, ka.second);
    for (const auto& [kb, cb] : b.terms()) {
      PauliString sb(b.n_qubits(), kb.first, kb.second);
      PauliString p = multiply(sa, sb);
      r.add_term(p.bare(), ca * cb * p.phase());
    }
  }
  return r;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("qubit count mismatch in commutator");
  PauliSum r(a.n_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    PauliString sa(a.n_qubits(), ka.first, ka.second);
    for (const auto& [kb, cb] : b.terms()) {
      PauliString sb(b.n_qubits(), kb.first, kb.second);
      if (sa.commutes_with(sb)) continue;  // ab == ba cancels in [a,b]
      PauliString p = multiply(sa, sb);
      r.add_term(p.bare(), 2.0 * ca * cb * p.phase());
    }
  }
  return r;
}

PauliSum conjugate(const PauliSum& h, const PauliString& g) {
  if (h.n_qubits() != g.n_qubits()) throw DimensionError("qubit count mismatch in conjugate");
  PauliSum r(h.n_qubits());
  for (const auto& [k, c] : h.terms()) {
    PauliString s(h.n_qubits(), k.first, k.second);
    r.add_term(s, s.commutes_with(g) ? c : -c);
  }
  return r;
}

bool equals_zero(const PauliSum& h, double tol) {
  if (tol < 0) throw ParameterError("tolerance must be non-negative");
  return h.norm_inf() <= tol;
}

Eigen::MatrixXcd to_matrix(const PauliSum& h, int max_qubits) {
  if (h.n_qubits() > max_qubits)
    throw ResourceError("dense matrix cap (" + std::to_string(max_qubits) + " qubits) exceeded");
  Eigen::Index d = Eigen::Index(1) << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [k, c] : h.terms()) {
    PauliString s(h.n_qubits(), k.first, k.second);
    m += c * s.matrix();
  }
  return m;
}

std::string PauliSum::str(double unit_scale, const std::string& unit_label) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Complex v = c / unit_scale;
    char buf[64];
    if (std::abs(v.imag()) <= 1e-14 * std::max(1.0, std::abs(v.real()))) {
      std::snprintf(buf, sizeof buf, "%+.12g", v.real());
    } else {
      std::snprintf(buf, sizeof buf, "(%+.12g%+.12gi)", v.real(), v.imag());
    }
    if (!first) os << "  ";
    os << buf;
    if (!unit_label.empty()) os << "·" << unit_label;
    os << " · " << PauliString(n_, k.first, k.second).str();
    first = false;
  }
  return os.str();
}

PauliSum PauliSum::parse(int n_qubits, const std::string& text,
                         const std::map<std::string, double>& units) {
  PauliSum r(n_qubits);
  std::string t = text;
  if (t == "0" || t.empty()) return r;
  // terms separated by two-or-more spaces; each "coeff[·unit] · string"
  std::vector<std::string> chunks;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t sep = t.find("  ", pos);
    if (sep == std::string::npos) {
      chunks.push_back(t.substr(pos));
      break;
    }
    chunks.push_back(t.substr(pos, sep - pos));
    pos = t.find_first_not_of(' ', sep);
  }
  for (const auto& chunk : chunks) {
    if (chunk.empty()) continue;
    std::size_t dot = chunk.rfind("· ");
    if (dot == std::string::npos) throw ParameterError("bad term \"" + chunk + "\"");
    std::string head = chunk.substr(0, dot);
    std::string tail = chunk.substr(dot + 3);  // "· " is 3 bytes (UTF-8 dot)
    // strip trailing separator dot+space from head; split head into number and unit
    while (!head.empty() && (head.back() == ' ')) head.pop_back();
    double scale = 1.0;
    std::size_t udot = head.find("·");
    std::string num = head;
    if (udot != std::string::npos) {
      num = head.substr(0, udot);
      std::string unit = head.substr(udot + 2);  // UTF-8 "·" is 2 bytes
      auto it = units.find(unit);
      if (it == units.end()) throw ParameterError("unknown unit \"" + unit + "\"");
      scale = it->second;
    }
    Complex coeff;
    if (!num.empty() && num.front() == '(') {
      double re = 0, im = 0;
      if (std::sscanf(num.c_str(), "(%lf%lfi)", &re, &im) != 2)
        throw ParameterError("bad complex coefficient \"" + num + "\"");
      coeff = Complex(re, im);
    } else {
      coeff = Complex(std::stod(num), 0);
    }
    r.add_term(PauliString::parse(n_qubits, tail), coeff * scale);
  }
  return r;
}

}  // namespace dd
