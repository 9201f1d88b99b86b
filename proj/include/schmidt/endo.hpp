#pragma once

// End(G) by brute force: enumeration, composition table, idempotents and the
// stabilizer subsemigroups of an element.
//
// Composition is left to right: compose(s, t) is "apply s, then t".

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schmidt/group.hpp"
#include "schmidt/semigroup.hpp"

namespace schmidt {

  struct EndoOptions {
    std::size_t max_group_order = 60;
    std::size_t max_monoid_size = 5000;
    // Worker threads for the enumeration; the result does not depend on it.
    unsigned threads = 1;
  };

  class EndoMonoid {
   public:
    using Index = std::uint32_t;

    // Throws CapExceeded when |G| or |End(G)| exceeds the options' caps.
    static EndoMonoid enumerate(Group const& g, EndoOptions const& opts = {});

    // From an explicit list of endomorphisms closed under composition and
    // containing the zero and identity maps (used by oracles in tests).
    static EndoMonoid from_maps(Group const& g, std::vector<std::vector<Elem>> maps);

    Group const& group() const noexcept {
      return group_;
    }
    std::size_t size() const noexcept {
      return maps_.size();
    }
    std::vector<Elem> const& map(Index i) const {
      return maps_.at(i);
    }
    std::vector<std::vector<Elem>> const& maps() const noexcept {
      return maps_;
    }
    Index compose(Index s, Index t) const noexcept {
      return comp_[s * maps_.size() + t];
    }
    bool is_auto(Index i) const noexcept {
      return is_auto_[i] != 0;
    }
    bool is_idempotent(Index i) const noexcept {
      return compose(i, i) == i;
    }
    Index zero() const noexcept {
      return zero_;
    }
    Index identity() const noexcept {
      return identity_;
    }
    // s^e for e >= 1
    Index power(Index s, std::size_t e) const noexcept;

    std::optional<Index> index_of(std::span<Elem const> map) const;

    std::vector<Index> automorphisms() const;
    std::vector<Index> proper() const;

    FiniteSemigroup semigroup() const;

   private:
    EndoMonoid(Group g, std::vector<std::vector<Elem>> maps);

    Group                          group_;
    std::vector<std::vector<Elem>> maps_;
    std::vector<Index>             comp_;
    std::vector<char>              is_auto_;
    Index                          zero_;
    Index                          identity_;
  };

  using EndoIndex = EndoMonoid::Index;

  // Idempotents other than zero and identity.
  std::vector<EndoIndex> idempotents_I0(EndoMonoid const& m);

  // {y idempotent : xy = y, yx = x}; throws std::invalid_argument unless x is
  // idempotent.
  std::vector<EndoIndex> bracket_class(EndoMonoid const& m, EndoIndex x);

  struct StabilizerSets {
    std::vector<EndoIndex> K;  // y in End: yx = xy = y
    std::vector<EndoIndex> V;  // y in Aut: yx = x
    std::vector<EndoIndex> D;  // y in Aut: yx = xy = x
    std::vector<EndoIndex> H;  // y in End: xy = y, yx = 0
  };

  StabilizerSets stabilizer_sets(EndoMonoid const& m, EndoIndex x);

  struct ImageKernel {
    Subgroup image;
    Subgroup kernel;
  };

  // For idempotent maps also checks G = Ker x Im with Ker normal and
  // Ker ∩ Im trivial; throws std::logic_error otherwise.
  ImageKernel image_kernel(Group const& g, std::span<Elem const> map);

  // Indices of the inner automorphisms, sorted, without repeats.
  std::vector<EndoIndex> inner_subgroup(EndoMonoid const& m);

  // Index of the inner automorphism h -> g^-1 h g.
  EndoIndex inner_index(EndoMonoid const& m, Elem g);

  // The automorphisms in `elems` as an abstract group under composition;
  // element i of the result is elems[i]. Throws if they are not a group.
  Group automorphism_subgroup(EndoMonoid const& m, std::span<EndoIndex const> elems);

}  // namespace schmidt
