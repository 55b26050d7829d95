#pragma once

#include <algorithm>
#include <complex>
#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace corr {

// Element of G u {0}: either the absorbing letter 0, or a group element.
// For mu_N the payload is a single residue mod N; for a free abelian group
// it is one integer exponent per generator symbol.
struct GroupElement {
  bool zero = false;
  std::vector<long> e;

  static GroupElement make_zero() { return GroupElement{true, {}}; }

  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    // zero sorts first
    if (a.zero != b.zero) return a.zero ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.e.size() != b.e.size()) return a.e.size() <=> b.e.size();
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
 public:
  enum class Kind { MuN, FreeAbelian };

  static GroupSpec mu(long N) {
    if (N < 1) throw std::invalid_argument("mu_N requires N >= 1");
    GroupSpec g;
    g.kind_ = Kind::MuN;
    g.N_ = N;
    return g;
  }

  static GroupSpec free_abelian(const std::vector<std::string>& symbols) {
    if (symbols.empty()) throw std::invalid_argument("free abelian group needs symbols");
    GroupSpec g;
    g.kind_ = Kind::FreeAbelian;
    g.symbols_ = symbols;
    return g;
  }

  static GroupSpec free_abelian(int rank) {
    std::vector<std::string> syms;
    for (int i = 0; i < rank; ++i) syms.push_back(std::string(1, char('a' + i)));
    return free_abelian(syms);
  }

  Kind kind() const { return kind_; }
  long N() const { return N_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  size_t rank() const { return kind_ == Kind::MuN ? 1 : symbols_.size(); }

  GroupElement zero() const { return GroupElement::make_zero(); }

  GroupElement identity() const { return GroupElement{false, std::vector<long>(rank(), 0)}; }

  bool is_identity(const GroupElement& a) const {
    return !a.zero && std::all_of(a.e.begin(), a.e.end(), [](long x) { return x == 0; });
  }

  GroupElement element(std::vector<long> exps) const {
    if (exps.size() != rank()) throw std::invalid_argument("exponent size mismatch");
    GroupElement g{false, std::move(exps)};
    normalize(g);
    return g;
  }

  // 0 is absorbing: 0 * a = 0.
  GroupElement mul(const GroupElement& a, const GroupElement& b) const {
    if (a.zero || b.zero) return zero();
    GroupElement r{false, std::vector<long>(rank())};
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    normalize(r);
    return r;
  }

  GroupElement inverse(const GroupElement& a) const {
    if (a.zero) throw std::domain_error("0 has no inverse");
    GroupElement r{false, std::vector<long>(rank())};
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = -a.e[i];
    normalize(r);
    return r;
  }

  GroupElement pow(const GroupElement& a, long k) const {
    if (a.zero) {
      if (k <= 0) throw std::domain_error("0^k undefined for k <= 0");
      return zero();
    }
    GroupElement r{false, std::vector<long>(rank())};
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] * k;
    normalize(r);
    return r;
  }

  GroupElement div(const GroupElement& a, const GroupElement& b) const {
    return mul(a, inverse(b));
  }

  // All l-th roots, as a multiset.  The zero letter contributes l copies of
  // itself.  A nonzero element has either l roots or none (mu_N: l | N and
  // l | residue; free abelian: every exponent divisible by l, single root).
  std::vector<GroupElement> lth_roots(const GroupElement& a, long l) const {
    if (l < 1) throw std::invalid_argument("l >= 1 required");
    std::vector<GroupElement> out;
    if (a.zero) {
      out.assign(l, zero());
      return out;
    }
    if (kind_ == Kind::MuN) {
      if (N_ % l != 0) return out;
      long r = a.e[0];
      if (r % l != 0) return out;
      for (long j = 0; j < l; ++j) out.push_back(element({r / l + j * (N_ / l)}));
    } else {
      std::vector<long> exps(rank());
      for (size_t i = 0; i < rank(); ++i) {
        if (a.e[i] % l != 0) return out;
        exps[i] = a.e[i] / l;
      }
      out.push_back(element(std::move(exps)));
    }
    return out;
  }

  bool divisible(const GroupElement& a, long l) const {
    if (a.zero) return true;
    if (kind_ == Kind::MuN) return N_ % l == 0 && a.e[0] % l == 0;
    return std::all_of(a.e.begin(), a.e.end(), [l](long x) { return x % l == 0; });
  }

  std::vector<GroupElement> all_elements() const {
    if (kind_ != Kind::MuN) throw std::domain_error("cannot enumerate an infinite group");
    std::vector<GroupElement> out;
    for (long k = 0; k < N_; ++k) out.push_back(element({k}));
    return out;
  }

  // mu_N embeds on the unit circle; a free abelian group needs a value per symbol.
  std::complex<double> embed(const GroupElement& a,
                             const std::map<std::string, std::complex<double>>& assign = {}) const {
    if (a.zero) throw std::domain_error("0 does not embed as a group element");
    if (kind_ == Kind::MuN) {
      double t = 2.0 * 3.14159265358979323846 * double(a.e[0]) / double(N_);
      return {std::cos(t), std::sin(t)};
    }
    std::complex<double> v = 1.0;
    for (size_t i = 0; i < rank(); ++i) {
      auto it = assign.find(symbols_[i]);
      if (it == assign.end()) throw std::invalid_argument("missing value for symbol " + symbols_[i]);
      v *= std::pow(it->second, double(a.e[i]));
    }
    return v;
  }

  std::string print(const GroupElement& a) const {
    if (a.zero) return "0";
    if (is_identity(a)) return "1";
    if (kind_ == Kind::MuN) {
      if (a.e[0] == 1) return "w";
      return "w^" + std::to_string(a.e[0]);
    }
    std::string s;
    for (size_t i = 0; i < rank(); ++i) {
      if (a.e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += symbols_[i];
      if (a.e[i] != 1) s += "^" + std::to_string(a.e[i]);
    }
    return s;
  }

  GroupElement parse(const std::string& str) const {
    std::string s = strip(str);
    if (s == "0") return zero();
    if (s == "1") return identity();
    std::vector<long> exps(rank(), 0);
    size_t pos = 0;
    while (pos < s.size()) {
      size_t star = s.find('*', pos);
      std::string tok = strip(s.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
      pos = star == std::string::npos ? s.size() : star + 1;
      if (tok.empty()) throw std::invalid_argument("bad element: '" + str + "'");
      std::string sym = tok;
      long exp = 1;
      size_t caret = tok.find('^');
      if (caret != std::string::npos) {
        sym = strip(tok.substr(0, caret));
        exp = std::stol(strip(tok.substr(caret + 1)));
      }
      size_t idx = symbol_index(sym);
      exps[idx] += exp;
    }
    return element(std::move(exps));
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind_ == b.kind_ && a.N_ == b.N_ && a.symbols_ == b.symbols_;
  }

 private:
  void normalize(GroupElement& g) const {
    if (kind_ == Kind::MuN) {
      g.e[0] %= N_;
      if (g.e[0] < 0) g.e[0] += N_;
    }
  }

  size_t symbol_index(const std::string& sym) const {
    if (kind_ == Kind::MuN) {
      if (sym == "w") return 0;
      throw std::invalid_argument("unknown symbol '" + sym + "' in mu_N");
    }
    for (size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == sym) return i;
    throw std::invalid_argument("unknown symbol '" + sym + "'");
  }

  static std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  }

  Kind kind_ = Kind::MuN;
  long N_ = 1;
  std::vector<std::string> symbols_;
};

}  // namespace corr
