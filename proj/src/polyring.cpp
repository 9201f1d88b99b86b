#include "schmidt/polyring.hpp"

#include <algorithm>
#include <stdexcept>

#include "schmidt/arith.hpp"

namespace schmidt {

  namespace {

    Coeff inv_mod(Coeff a, unsigned p) {
      // p is prime: a^(p-2)
      std::uint64_t r = 1, b = a % p;
      for (unsigned e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
          r = r * b % p;
        }
        b = b * b % p;
      }
      return static_cast<Coeff>(r);
    }

    void require_same_modulus(PolyModP const& a, PolyModP const& b) {
      if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("polynomials over different moduli");
      }
    }

    constexpr std::size_t kMaxFieldSize = std::size_t{1} << 20;

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PolyModP
  ////////////////////////////////////////////////////////////////////////

  PolyModP::PolyModP(unsigned p) : p_(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("PolyModP: modulus must be prime");
    }
  }

  PolyModP::PolyModP(unsigned p, std::vector<Coeff> coeffs)
      : PolyModP(p) {
    c_ = std::move(coeffs);
    for (auto& c : c_) {
      c %= p_;
    }
    trim();
  }

  PolyModP PolyModP::monomial(unsigned p, std::size_t degree, Coeff c) {
    std::vector<Coeff> v(degree + 1, 0);
    v[degree] = c;
    return PolyModP(p, std::move(v));
  }

  void PolyModP::trim() {
    while (!c_.empty() && c_.back() == 0) {
      c_.pop_back();
    }
  }

  Coeff PolyModP::eval(Coeff x) const noexcept {
    std::uint64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r = (r * x + *it) % p_;
    }
    return static_cast<Coeff>(r);
  }

  std::string PolyModP::to_string() const {
    if (c_.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      if (i == 0) {
        out += std::to_string(c_[i]);
        continue;
      }
      if (c_[i] != 1) {
        out += std::to_string(c_[i]) + "*";
      }
      out += "x";
      if (i > 1) {
        out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  PolyModP operator+(PolyModP const& a, PolyModP const& b) {
    require_same_modulus(a, b);
    std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    }
    return PolyModP(a.p_, std::move(v));
  }

  PolyModP operator-(PolyModP const& a, PolyModP const& b) {
    require_same_modulus(a, b);
    std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
    }
    return PolyModP(a.p_, std::move(v));
  }

  PolyModP operator*(PolyModP const& a, PolyModP const& b) {
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) {
      return PolyModP(a.p_);
    }
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
      }
    }
    return PolyModP(a.p_, std::vector<Coeff>(acc.begin(), acc.end()));
  }

  std::pair<PolyModP, PolyModP> divmod(PolyModP const& a, PolyModP const& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) {
      throw std::domain_error("polynomial division by zero");
    }
    unsigned const     p = a.p_;
    std::vector<Coeff> r = a.c_;
    int const          db = b.degree();
    std::vector<Coeff> quot(
        a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
    Coeff const lead_inv = inv_mod(b.c_.back(), p);
    for (int d = a.degree(); d >= db; --d) {
      Coeff c = r[d];
      if (c == 0) {
        continue;
      }
      Coeff f = static_cast<Coeff>(std::uint64_t{c} * lead_inv % p);
      quot[d - db] = f;
      for (int i = 0; i <= db; ++i) {
        std::uint64_t sub = std::uint64_t{f} * b.c_[i] % p;
        r[d - db + i]     = static_cast<Coeff>((r[d - db + i] + p - sub) % p);
      }
    }
    return {PolyModP(p, std::move(quot)), PolyModP(p, std::move(r))};
  }

  PolyModP operator%(PolyModP const& a, PolyModP const& b) {
    return divmod(a, b).second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization of (x^q - 1)/(x - 1)
  ////////////////////////////////////////////////////////////////////////

  PolyModP cyclotomic_quotient(unsigned p, unsigned q) {
    return PolyModP(p, std::vector<Coeff>(q, 1));
  }

  namespace {

    // Monic polynomial of the given degree whose lower coefficients are the
    // base-p digits of index.
    PolyModP monic_from_index(unsigned p, unsigned degree, std::size_t index) {
      std::vector<Coeff> v(degree + 1, 0);
      for (unsigned i = 0; i < degree; ++i) {
        v[i] = static_cast<Coeff>(index % p);
        index /= p;
      }
      v[degree] = 1;
      return PolyModP(p, std::move(v));
    }

    bool is_irreducible(PolyModP const& f) {
      unsigned const p = f.modulus();
      int const      n = f.degree();
      for (int d = 1; 2 * d <= n; ++d) {
        std::size_t count = ipow(p, static_cast<unsigned>(d));
        for (std::size_t i = 0; i < count; ++i) {
          if ((f % monic_from_index(p, static_cast<unsigned>(d), i)).is_zero()) {
            return false;
          }
        }
      }
      return n >= 1;
    }

    void require_distinct_primes(unsigned p, unsigned q) {
      if (p == q || !is_prime(p) || !is_prime(q)) {
        throw std::invalid_argument("p and q must be distinct primes");
      }
    }

  }  // namespace

  std::vector<PolyModP> cyclotomic_factors(unsigned p, unsigned q) {
    require_distinct_primes(p, q);
    unsigned const u     = multiplicative_order(p, q);
    std::size_t    count = ipow(p, u);
    if (count > kMaxFieldSize) {
      throw std::invalid_argument("residue field too large: p^u = "
                                  + std::to_string(count));
    }
    PolyModP const        phi = cyclotomic_quotient(p, q);
    std::vector<PolyModP> out;
    for (std::size_t i = 0; i < count; ++i) {
      PolyModP cand = monic_from_index(p, u, i);
      if ((phi % cand).is_zero() && is_irreducible(cand)) {
        out.push_back(std::move(cand));
      }
    }
    PolyModP product(p, {1});
    for (auto const& f : out) {
      product = product * f;
    }
    if (product != phi || out.size() * u != q - 1) {
      throw std::logic_error("cyclotomic_factors: factorization incomplete");
    }
    return out;
  }

  ResidueRing build_residue_ring(unsigned p, unsigned q) {
    return ResidueRing(p, q, cyclotomic_factors(p, q).front());
  }

  ////////////////////////////////////////////////////////////////////////
  // ResidueRing
  ////////////////////////////////////////////////////////////////////////

  ResidueRing::ResidueRing(unsigned p, unsigned q, PolyModP psi)
      : p_(p), q_(q), psi_(std::move(psi)), u_(0), size_(0) {
    require_distinct_primes(p, q);
    if (psi_.modulus() != p || !psi_.is_monic() || psi_.degree() < 1) {
      throw std::invalid_argument("psi must be a monic polynomial over Z_p");
    }
    u_ = static_cast<unsigned>(psi_.degree());
    if (u_ != multiplicative_order(p, q)) {
      throw std::invalid_argument("deg psi differs from the order of p mod q");
    }
    size_ = ipow(p, u_);
    if (size_ > kMaxFieldSize) {
      throw std::invalid_argument("residue field too large");
    }
    if (!(cyclotomic_quotient(p, q) % psi_).is_zero()) {
      throw std::invalid_argument("psi does not divide (x^q - 1)/(x - 1)");
    }
    if (!is_irreducible(psi_)) {
      throw std::invalid_argument("psi is not irreducible");
    }
    ResidueElem xr = x();
    for (unsigned k = 1; k < q; ++k) {
      if (pow(xr, k) == one()) {
        throw std::invalid_argument("x has order below q");
      }
    }
    if (pow(xr, q) != one()) {
      throw std::invalid_argument("x^q != 1");
    }
  }

  void ResidueRing::check(ResidueElem const& a) const {
    if (a.rep().modulus() != p_ || a.rep().degree() >= static_cast<int>(u_)) {
      throw std::invalid_argument("element does not belong to this ring");
    }
  }

  ResidueElem ResidueRing::zero() const {
    return ResidueElem(PolyModP(p_));
  }

  ResidueElem ResidueRing::one() const {
    return ResidueElem(PolyModP(p_, {1}));
  }

  ResidueElem ResidueRing::x() const {
    return reduce(PolyModP::monomial(p_, 1));
  }

  ResidueElem ResidueRing::reduce(PolyModP const& f) const {
    if (f.modulus() != p_) {
      throw std::invalid_argument("reduce: wrong modulus");
    }
    return ResidueElem(f % psi_);
  }

  ResidueElem ResidueRing::element(std::size_t index) const {
    if (index >= size_) {
      throw std::out_of_range("residue element index out of range");
    }
    std::vector<Coeff> v(u_);
    for (unsigned i = 0; i < u_; ++i) {
      v[i] = static_cast<Coeff>(index % p_);
      index /= p_;
    }
    return ResidueElem(PolyModP(p_, std::move(v)));
  }

  std::size_t ResidueRing::index(ResidueElem const& a) const {
    check(a);
    std::size_t r = 0;
    auto const& c = a.rep().coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      r = r * p_ + *it;
    }
    return r;
  }

  ResidueElem ResidueRing::add(ResidueElem const& a, ResidueElem const& b) const {
    check(a);
    check(b);
    return ResidueElem(a.rep() + b.rep());
  }

  ResidueElem ResidueRing::sub(ResidueElem const& a, ResidueElem const& b) const {
    check(a);
    check(b);
    return ResidueElem(a.rep() - b.rep());
  }

  ResidueElem ResidueRing::mul(ResidueElem const& a, ResidueElem const& b) const {
    check(a);
    check(b);
    return reduce(a.rep() * b.rep());
  }

  ResidueElem ResidueRing::pow(ResidueElem const& a, std::uint64_t k) const {
    ResidueElem r = one(), base = a;
    for (; k > 0; k >>= 1) {
      if (k & 1) {
        r = mul(r, base);
      }
      base = mul(base, base);
    }
    return r;
  }

  ResidueElem ResidueRing::inverse(ResidueElem const& a) const {
    check(a);
    if (a.is_zero()) {
      throw std::domain_error("inverse of zero in the residue field");
    }
    // Invariant: s * a = r (mod psi) for both rows.
    PolyModP r0 = psi_, r1 = a.rep();
    PolyModP s0(p_), s1(p_, {1});
    while (!r1.is_zero()) {
      auto [quot, rem] = divmod(r0, r1);
      PolyModP s2      = s0 - quot * s1;
      r0               = std::move(r1);
      r1               = std::move(rem);
      s0               = std::move(s1);
      s1               = std::move(s2);
    }
    // r0 is a nonzero constant since psi is irreducible.
    Coeff c = inv_mod(r0.coeff(0), p_);
    return reduce(s0 * PolyModP(p_, {c}));
  }

  ResidueElem ResidueRing::substitute_power(ResidueElem const& f,
                                            std::uint64_t      n) const {
    check(f);
    ResidueElem xn  = pow(x(), n);
    ResidueElem acc = zero();
    auto const& c   = f.rep().coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = add(mul(acc, xn), ResidueElem(PolyModP(p_, {*it})));
    }
    return acc;
  }

  ResidueElem ResidueRing::x_minus_one_inverse() const {
    return inverse(sub(x(), one()));
  }

}  // namespace schmidt
