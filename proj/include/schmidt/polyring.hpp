#pragma once

// Polynomials over Z_p and the residue field Z_p[x]/(psi), where psi is a
// monic irreducible factor of x^(q-1) + ... + x + 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace schmidt {

  using Coeff = std::uint32_t;

  // Coefficients lowest degree first, no trailing zeros; the zero
  // polynomial has no coefficients.
  class PolyModP {
   public:
    explicit PolyModP(unsigned p);
    PolyModP(unsigned p, std::vector<Coeff> coeffs);

    static PolyModP monomial(unsigned p, std::size_t degree, Coeff c = 1);

    unsigned modulus() const noexcept {
      return p_;
    }
    // -1 for the zero polynomial.
    int degree() const noexcept {
      return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const noexcept {
      return c_.empty();
    }
    bool is_monic() const noexcept {
      return !c_.empty() && c_.back() == 1;
    }
    std::vector<Coeff> const& coeffs() const noexcept {
      return c_;
    }
    Coeff coeff(std::size_t i) const noexcept {
      return i < c_.size() ? c_[i] : 0;
    }
    Coeff eval(Coeff x) const noexcept;

    // "c0 + c1*x + c2*x^2", zero terms dropped, unit coefficients elided.
    std::string to_string() const;

    friend PolyModP operator+(PolyModP const& a, PolyModP const& b);
    friend PolyModP operator-(PolyModP const& a, PolyModP const& b);
    friend PolyModP operator*(PolyModP const& a, PolyModP const& b);
    friend PolyModP operator%(PolyModP const& a, PolyModP const& b);

    // {quotient, remainder}; throws on division by zero.
    friend std::pair<PolyModP, PolyModP> divmod(PolyModP const& a,
                                                PolyModP const& b);

    bool operator==(PolyModP const&) const = default;

   private:
    void trim();

    unsigned           p_;
    std::vector<Coeff> c_;
  };

  // An element of the residue field, represented by its remainder of
  // degree < u. Elements carry no ring pointer; ResidueRing methods check
  // the representation.
  class ResidueElem {
   public:
    explicit ResidueElem(PolyModP rep) : rep_(std::move(rep)) {}

    PolyModP const& rep() const noexcept {
      return rep_;
    }
    bool is_zero() const noexcept {
      return rep_.is_zero();
    }
    std::string to_string() const {
      return rep_.to_string();
    }
    bool operator==(ResidueElem const&) const = default;

   private:
    PolyModP rep_;
  };

  class ResidueRing {
   public:
    // Validates every ring invariant for the given psi.
    ResidueRing(unsigned p, unsigned q, PolyModP psi);

    unsigned p() const noexcept {
      return p_;
    }
    unsigned q() const noexcept {
      return q_;
    }
    // deg psi, which is also the multiplicative order of p mod q.
    unsigned u() const noexcept {
      return u_;
    }
    PolyModP const& psi() const noexcept {
      return psi_;
    }
    // p^u
    std::size_t size() const noexcept {
      return size_;
    }

    ResidueElem zero() const;
    ResidueElem one() const;
    ResidueElem x() const;
    ResidueElem reduce(PolyModP const& f) const;

    // Elements are numbered by sum c_i p^i over their coefficients.
    ResidueElem element(std::size_t index) const;
    std::size_t index(ResidueElem const& a) const;

    ResidueElem add(ResidueElem const& a, ResidueElem const& b) const;
    ResidueElem sub(ResidueElem const& a, ResidueElem const& b) const;
    ResidueElem mul(ResidueElem const& a, ResidueElem const& b) const;
    ResidueElem pow(ResidueElem const& a, std::uint64_t k) const;
    // Extended Euclid; throws std::domain_error for zero.
    ResidueElem inverse(ResidueElem const& a) const;

    // f(x^n) reduced mod psi.
    ResidueElem substitute_power(ResidueElem const& f, std::uint64_t n) const;

    // (x - 1)^-1; exists because psi(1) != 0.
    ResidueElem x_minus_one_inverse() const;

    bool operator==(ResidueRing const& o) const {
      return p_ == o.p_ && q_ == o.q_ && psi_ == o.psi_;
    }

   private:
    void check(ResidueElem const& a) const;

    unsigned    p_;
    unsigned    q_;
    PolyModP    psi_;
    unsigned    u_;
    std::size_t size_;
  };

  // (x^q - 1)/(x - 1) over Z_p.
  PolyModP cyclotomic_quotient(unsigned p, unsigned q);

  // The monic irreducible factors of (x^q - 1)/(x - 1) over Z_p, all of
  // degree ord_q(p), ordered by their element index sum c_i p^i.
  std::vector<PolyModP> cyclotomic_factors(unsigned p, unsigned q);

  // Ring built from the first factor returned by cyclotomic_factors. Throws
  // std::invalid_argument unless p and q are distinct primes.
  ResidueRing build_residue_ring(unsigned p, unsigned q);

}  // namespace schmidt
