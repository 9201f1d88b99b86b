#pragma once

// Finite semigroups as multiplication tables, invariant fingerprints and
// isomorphism search.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace schmidt {

  class FiniteSemigroup {
   public:
    using Index = std::uint32_t;

    // Checks closure, and associativity: every triple when k <= 200, a fixed
    // pseudo-random sample of triples above that. Throws std::invalid_argument.
    FiniteSemigroup(std::size_t k, std::vector<Index> table);

    // The elements listed in `indices`, renumbered 0..m-1 in that order.
    // Throws if they are not closed under the product.
    static FiniteSemigroup restrict(FiniteSemigroup const& s,
                                    std::span<Index const> indices);

    std::size_t size() const noexcept {
      return k_;
    }
    Index mul(Index a, Index b) const noexcept {
      return table_[a * k_ + b];
    }
    std::vector<Index> const& table() const noexcept {
      return table_;
    }
    bool is_idempotent(Index a) const noexcept {
      return mul(a, a) == a;
    }
    // a^e for e >= 1.
    Index power(Index a, std::size_t e) const noexcept;

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    std::size_t        k_;
    std::vector<Index> table_;
  };

  struct ElementFingerprint {
    bool          idempotent;
    // The cyclic subsemigroup of a: a^(index + period) = a^index, minimal.
    std::uint32_t index;
    std::uint32_t period;
    // |a S| and |S a|
    std::uint32_t left_image;
    std::uint32_t right_image;

    auto operator<=>(ElementFingerprint const&) const = default;
  };

  struct Fingerprint {
    std::vector<ElementFingerprint> per_element;
    // per_element, sorted
    std::vector<ElementFingerprint> multiset;

    // Semigroup-level comparison: the multisets only.
    bool operator==(Fingerprint const& o) const {
      return multiset == o.multiset;
    }
  };

  Fingerprint fingerprint(FiniteSemigroup const& s);

  // An isomorphism phi: S1 -> S2 as an index array, phi[anchor->first] ==
  // anchor->second when given. Backtracks over images of a generating set of
  // S1 chosen in order of fingerprint rarity; every assignment is closed
  // under products before the next choice.
  std::optional<std::vector<FiniteSemigroup::Index>>
  find_isomorphism(FiniteSemigroup const& s1,
                   FiniteSemigroup const& s2,
                   std::optional<std::pair<FiniteSemigroup::Index,
                                           FiniteSemigroup::Index>> anchor
                   = std::nullopt);

  // (Z_m, *), which is End(C_m) with k acting as g -> g^k.
  FiniteSemigroup cyclic_monoid_model(std::size_t m);

}  // namespace schmidt
