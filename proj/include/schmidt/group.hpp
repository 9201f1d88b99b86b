#pragma once

// Finite groups given by Cayley tables, and the subgroup machinery built on
// top of them.
//
// Elements are dense indices 0..n-1. Maps act on the right and compose left
// to right: for maps s and t, (g)(st) = ((g)s)t.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace schmidt {

  using Elem = std::uint32_t;

  inline constexpr Elem kNoElem = static_cast<Elem>(-1);

  class GroupError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A configured size cap would be exceeded.
  class CapExceeded : public GroupError {
   public:
    using GroupError::GroupError;
  };

  class Group;

  // Checks every group axiom on an n x n product table (row g, column h holds
  // g*h) and infers the identity. Throws GroupError naming the first failure.
  Group validate_group(std::vector<std::vector<Elem>> const& rows);
  Group validate_group(std::size_t n, std::vector<Elem> flat);

  // Same as validate_group but skips the O(n^3) associativity scan. Only for
  // tables whose associativity is inherited, e.g. composition of bijections.
  Group group_from_closed_table(std::size_t n, std::vector<Elem> flat);

  class Group {
   public:
    // The trivial group.
    Group();

    std::size_t order() const noexcept {
      return n_;
    }
    Elem identity() const noexcept {
      return identity_;
    }
    Elem mul(Elem a, Elem b) const noexcept {
      return table_[a * n_ + b];
    }
    Elem inv(Elem a) const noexcept {
      return inverse_[a];
    }
    std::span<Elem const> row(Elem a) const noexcept {
      return {table_.data() + a * n_, n_};
    }
    std::vector<Elem> const& flat_table() const noexcept {
      return table_;
    }
    std::vector<std::vector<Elem>> rows() const;

    // a^k for any integer k.
    Elem pow(Elem a, std::int64_t k) const noexcept;

    bool operator==(Group const&) const = default;

   private:
    Group(std::size_t n, std::vector<Elem> table, Elem identity);

    friend Group validate_group(std::size_t, std::vector<Elem>);
    friend Group group_from_closed_table(std::size_t, std::vector<Elem>);

    std::size_t       n_;
    Elem              identity_;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
  };

  // A sorted set of element indices of some parent group. The free functions
  // below only ever produce genuine subgroups; Subgroup::checked validates
  // arbitrary input.
  class Subgroup {
   public:
    Subgroup() = default;
    explicit Subgroup(std::vector<Elem> elements);

    static Subgroup checked(Group const& g, std::vector<Elem> elements);

    std::size_t order() const noexcept {
      return elems_.size();
    }
    bool                     contains(Elem a) const noexcept;
    std::vector<Elem> const& elements() const noexcept {
      return elems_;
    }
    auto begin() const noexcept {
      return elems_.begin();
    }
    auto end() const noexcept {
      return elems_.end();
    }
    bool is_subset_of(Subgroup const& other) const;

    auto operator<=>(Subgroup const&) const = default;

   private:
    std::vector<Elem> elems_;
  };

  // A map between groups, stored as the image of each source element.
  struct GroupHom {
    std::vector<Elem> images;

    Elem operator()(Elem a) const noexcept {
      return images[a];
    }
    std::size_t size() const noexcept {
      return images.size();
    }
    bool operator==(GroupHom const&) const = default;
  };

  bool is_homomorphism(Group const&       src,
                       Group const&       dst,
                       std::span<Elem const> images);

  // Apply `first`, then `second`.
  GroupHom then(GroupHom const& first, GroupHom const& second);

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  unsigned element_order(Group const& g, Elem a);
  std::vector<unsigned> element_orders(Group const& g);

  // [a, b] = a^-1 b^-1 a b
  inline Elem commutator(Group const& g, Elem a, Elem b) {
    return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
  }

  bool is_abelian(Group const& g);
  bool is_abelian(Group const& g, Subgroup const& h);

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  Subgroup whole_group(Group const& g);
  Subgroup trivial_subgroup(Group const& g);

  Subgroup subgroup_generated(Group const& g, std::span<Elem const> seeds);
  Subgroup cyclic_subgroup(Group const& g, Elem a);

  Subgroup centralizer(Group const& g, Subgroup const& h);
  Subgroup centralizer(Group const& g, Elem a);
  Subgroup center(Group const& g);
  Subgroup normalizer(Group const& g, Subgroup const& h);
  bool     is_normal(Group const& g, Subgroup const& h);

  // depth 1 gives G', depth 2 gives G''.
  Subgroup derived_subgroup(Group const& g, int depth = 1);

  // Some Sylow r-subgroup; {e} when r does not divide |G|.
  Subgroup sylow_subgroup(Group const& g, unsigned r);

  // All distinct conjugates of h.
  std::vector<Subgroup> conjugates(Group const& g, Subgroup const& h);

  bool is_nilpotent(Group const& g);

  // H^g = g^-1 H g
  Subgroup conjugate(Group const& g, Subgroup const& h, Elem by);

  // Sorted set {a*b : a in A, b in B}.
  std::vector<Elem> product_set(Group const&          g,
                                std::span<Elem const> a,
                                std::span<Elem const> b);

  // h as a standalone group; element i of the result is h.elements()[i].
  Group induced_group(Group const& g, Subgroup const& h);

  // Every subgroup of g, sorted. Throws GroupError when |G| > max_order.
  std::vector<Subgroup> all_subgroups(Group const& g,
                                      std::size_t  max_order = 200);

  // Greedy: each step adds the element that enlarges the generated subgroup
  // the most (lowest index on ties).
  std::vector<Elem> generating_sequence(Group const& g);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Group cyclic_group(std::size_t n);

  // Pair (a, b) has index a * |B| + b.
  Group direct_product(Group const& a, Group const& b);

  // Elements are pairs (n, h) with index n * |H| + h and product
  //   (n1, h1)(n2, h2) = ((n1)action[h2] * n2, h1 h2).
  // action[h] must be an automorphism of N and h -> action[h] a
  // homomorphism in the left-to-right composition order.
  Group semidirect_product(Group const&                 n,
                           Group const&                 h,
                           std::vector<GroupHom> const& action);

  struct Quotient {
    Group    group;
    GroupHom projection;
  };

  // Cosets are numbered by their least element. Throws if n is not normal.
  Quotient quotient(Group const& g, Subgroup const& n);

  // h -> g^-1 h g
  GroupHom inner_automorphism(Group const& g, Elem by);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism search
  ////////////////////////////////////////////////////////////////////////

  enum class HomKind { any, isomorphism };

  // Backtracking over the images of a generating sequence of the source.
  // Each generator may only go to an element whose order divides (or, for
  // isomorphisms, equals) its own; a partial assignment is extended to the
  // subgroup generated so far and dropped on the first inconsistency.
  class HomomorphismSearch {
   public:
    HomomorphismSearch(Group const& src, Group const& dst, HomKind kind);

    std::vector<Elem> const& generators() const noexcept {
      return gens_;
    }
    // Admissible images of the i-th generator.
    std::vector<Elem> const& candidates(std::size_t i) const {
      return cands_.at(i);
    }

    // Calls visit(images) for every homomorphism found, in increasing order
    // of the generator-image tuple. Stops early when visit returns false.
    // When first_image is set only that image of the first generator is
    // explored. Returns false iff stopped early.
    bool run(std::function<bool(std::span<Elem const>)> const& visit,
             std::optional<Elem> first_image = std::nullopt) const;

   private:
    Group const*                   src_;
    Group const*                   dst_;
    HomKind                        kind_;
    std::vector<Elem>              gens_;
    std::vector<std::vector<Elem>> cands_;
  };

  std::optional<GroupHom> find_group_isomorphism(Group const& a,
                                                 Group const& b);

}  // namespace schmidt
