#pragma once

// Closed-form model of the endomorphisms of M(p, q, v): proper endomorphisms
// as pairs [n; f] and automorphisms as triplets [n; a; b], with n in Z_{q^v}
// and f, a, b in Z_p[x]/(psi).
//
// Products (left to right):
//   [n; f] [m; g]     = [nm; g]
//   [n; a; b] [m; f]  = [nm; f]
//   [m; f] [n; a; b]  = [nm; a (x-1)^-1 + b f(x^n)]
// A product of two triplets has no closed form here and is not provided.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/construct.hpp"
#include "schmidt/endo.hpp"
#include "schmidt/polyring.hpp"

namespace schmidt {

  // Pairs with q | n are all the zero map; they are stored with f = 0.
  struct SymbolicProperEndo {
    std::uint64_t n;
    ResidueElem   f;

    bool operator==(SymbolicProperEndo const&) const = default;
  };

  struct SymbolicAuto {
    std::uint64_t n;  // q does not divide n
    ResidueElem   a;
    ResidueElem   b;  // nonzero

    bool operator==(SymbolicAuto const&) const = default;
  };

  SymbolicProperEndo make_pair(MMGroupSpec const& spec, std::uint64_t n, ResidueElem f);
  // Throws std::invalid_argument when q | n or b == 0.
  SymbolicAuto make_triplet(MMGroupSpec const& spec,
                            std::uint64_t      n,
                            ResidueElem        a,
                            ResidueElem        b);

  SymbolicProperEndo compose_pairs(MMGroupSpec const&        spec,
                                   SymbolicProperEndo const& e1,
                                   SymbolicProperEndo const& e2);
  SymbolicProperEndo compose_auto_pair(MMGroupSpec const&        spec,
                                       SymbolicAuto const&       z,
                                       SymbolicProperEndo const& e);
  SymbolicProperEndo compose_pair_auto(MMGroupSpec const&        spec,
                                       SymbolicProperEndo const& e,
                                       SymbolicAuto const&       z);

  // "[n; f]" and "[n; a; b]" with polynomials in x.
  std::string to_string(SymbolicProperEndo const& e);
  std::string to_string(SymbolicAuto const& z);

  // Every triplet of the model, ordered by (n, index(a), index(b)).
  std::vector<SymbolicAuto> all_triplets(MMGroupSpec const& spec);

  class SymbolicModel {
   public:
    using Index = std::uint32_t;

    // Enumerates the canonical pairs ordered by (n, index(f)), builds the
    // product table and checks closure, associativity and that [0; 0] is a
    // two-sided zero. Throws std::logic_error on a failed check.
    static SymbolicModel build(MMGroupSpec const& spec);

    MMGroupSpec const& spec() const noexcept {
      return spec_;
    }
    std::size_t size() const noexcept {
      return elems_.size();
    }
    SymbolicProperEndo const& elem(Index i) const {
      return elems_.at(i);
    }
    std::vector<SymbolicProperEndo> const& elems() const noexcept {
      return elems_;
    }
    Index compose(Index a, Index b) const noexcept {
      return comp_[a * elems_.size() + b];
    }
    Index index_of(SymbolicProperEndo const& e) const;

    // [1; 0]
    Index distinguished() const noexcept {
      return distinguished_;
    }
    Index zero() const noexcept {
      return zero_;
    }

    FiniteSemigroup semigroup() const;

    // Triplets z with z [1; 0] = [1; 0], and those that also satisfy
    // [1; 0] z = [1; 0].
    std::vector<SymbolicAuto> v_triplets() const;
    std::vector<SymbolicAuto> d_triplets() const;

   private:
    explicit SymbolicModel(MMGroupSpec spec) : spec_(std::move(spec)) {}

    MMGroupSpec                     spec_;
    std::vector<SymbolicProperEndo> elems_;
    std::vector<Index>              comp_;
    Index                           distinguished_ = 0;
    Index                           zero_          = 0;
  };

  // p^u (q^v - q^(v-1)) + q^(v-1)
  std::size_t expected_proper_count(MMGroupSpec const& spec);

  struct ModelMatch {
    // Proper endomorphisms of the monoid, in increasing index order.
    std::vector<EndoIndex> proper;
    // bijection[i] is the model index matched with proper[i].
    std::vector<SymbolicModel::Index> bijection;
  };

  // An isomorphism from the proper endomorphisms of m onto the model that
  // sends `anchor` (an index into m) to [1; 0]. Throws std::runtime_error if
  // none exists.
  ModelMatch match_with_bruteforce(EndoMonoid const&    m,
                                   SymbolicModel const& model,
                                   EndoIndex            anchor);

}  // namespace schmidt
