#pragma once

// Miller–Moreno groups M(p, q, v) and a catalog of small comparison groups.

#include <string>
#include <string_view>
#include <vector>

#include "schmidt/group.hpp"
#include "schmidt/polyring.hpp"

namespace schmidt {

  struct MMGroupSpec {
    unsigned    p;
    unsigned    q;
    unsigned    v;
    ResidueRing ring;

    // Throws std::invalid_argument for p == q, non-primes or v == 0.
    static MMGroupSpec make(unsigned p, unsigned q, unsigned v);
    static MMGroupSpec make(unsigned p, unsigned q, unsigned v, ResidueRing ring);

    std::size_t q_power() const;  // q^v
    std::size_t order() const;    // p^u q^v
  };

  struct ConstructOptions {
    std::size_t max_order = 2000;
    // Above this order the "every proper subgroup is abelian" check is
    // skipped with a warning.
    std::size_t subgroup_check_cap = 200;
  };

  // Elements are pairs (f, n) in Z_p[x]/(psi) x Z_{q^v} with index
  // n * p^u + index(f), multiplied as
  //   (f1, n1)(f2, n2) = (f1 x^n2 + f2, n1 + n2).
  struct MillerMorenoGroup {
    MMGroupSpec spec;
    Group       group;
    // b = (0, 1), of order q^v.
    Elem b;
    // (f, n) -> (0, n): the idempotent endomorphism onto <b> with kernel G'.
    GroupHom                 projection_onto_b;
    std::vector<std::string> warnings;

    Elem encode(std::size_t f_index, std::size_t n) const;
    std::pair<std::size_t, std::size_t> decode(Elem g) const;
  };

  // Builds the group and verifies its structure: G' = {(f, 0)} elementary
  // abelian of order p^u, G'' = 1, Z(G) = {(0, n) : q | n}, b of order q^v,
  // non-nilpotent, and (up to subgroup_check_cap) every proper subgroup
  // abelian. Throws std::logic_error if a check fails.
  MillerMorenoGroup miller_moreno(MMGroupSpec const&      spec,
                                  ConstructOptions const& opts = {});

  struct CatalogEntry {
    std::string name;
    Group       group;
    std::string provenance;
  };

  // Stable names: C1..C24, C2xC2, C3xC3, C2xC4, C2xC2xC2, S3, D4, Q8, D5, D6,
  // A4, Dic3, S4, SL23, C3:C4.
  std::vector<std::string> catalog_names();
  CatalogEntry             catalog_entry(std::string_view name);
  Group                    catalog(std::string_view name);

  // Every catalog group of order at most max_order, in catalog_names order.
  std::vector<CatalogEntry> catalog_up_to(std::size_t max_order);

}  // namespace schmidt
