#pragma once

// Two independent ways to recognise Schmidt groups: the subgroup-lattice
// definition, and the eight-property test on End(G).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/endo.hpp"
#include "schmidt/group.hpp"

namespace schmidt {

  struct SchmidtParams {
    unsigned p;
    unsigned q;
    unsigned v;

    auto operator<=>(SchmidtParams const&) const = default;
  };

  std::string to_string(SchmidtParams const& params);

  struct SchmidtVerdict {
    bool                         is_schmidt = false;
    bool                         is_miller_moreno = false;
    std::optional<SchmidtParams> params;
    // Why the group fails: a non-nilpotent (or non-abelian) proper subgroup,
    // or a note such as "nilpotent".
    std::string witness;
  };

  struct OracleOptions {
    std::size_t max_subgroup_order = 200;
  };

  // Non-nilpotent with every proper subgroup nilpotent. When true, p is the
  // prime dividing |G'| and q^v = |G : G'|. Throws CapExceeded above the cap.
  SchmidtVerdict brute_is_schmidt(Group const& g, OracleOptions const& opts = {});

  // Non-abelian with every proper subgroup abelian.
  bool brute_is_miller_moreno(Group const& g, OracleOptions const& opts = {});

  inline constexpr std::array<char const*, 8> kPropertyNames = {
      "K(x) = End(C(q^v))",
      "H(x) = {0}",
      "I0 = [x]",
      "|I0| = p^u",
      "End \\ Aut = union of K(y)",
      "z in all K(y) iff z^v = 0",
      "D(x) is a p'-group",
      "Sylow p-subgroups of V(x) elementary abelian of order p^u",
  };

  struct CandidateResult {
    EndoIndex                  x;
    std::array<bool, 8>        props{};
    std::array<std::string, 8> witnesses;

    bool passes() const;
  };

  struct CharacterizationReport {
    std::size_t                  group_order = 0;
    std::size_t                  end_size    = 0;
    std::size_t                  aut_size    = 0;
    std::vector<EndoIndex>       idempotents;
    std::optional<SchmidtParams> params;
    unsigned                     u        = 0;
    bool                         inferred = false;
    // Parameter sets considered during inference, in the order tried.
    std::vector<SchmidtParams>   tried;
    // One row per x in I0, evaluated against `params`.
    std::vector<CandidateResult> candidates;
    bool                         verdict = false;
    std::string                  diagnostic;
  };

  struct CheckOptions {
    EndoOptions endo;
    // Every Sylow p-subgroup of V(x) is examined when |V(x)| is at most this.
    std::size_t all_sylow_cap = 5000;
  };

  // Evaluates the eight properties for every x in I0. Without params they are
  // inferred per x from |Im x| = q^v (Im x cyclic) and |I0| = p^u with
  // u = ord_q(p); candidate sets are tried in (q, v, p) order and the first
  // that passes for some x wins.
  CharacterizationReport check_characterization(Group const&                        g,
                                                std::optional<SchmidtParams> const& params,
                                                CheckOptions const& opts = {});
  CharacterizationReport check_characterization(EndoMonoid const&                   m,
                                                std::optional<SchmidtParams> const& params,
                                                CheckOptions const& opts = {});

  struct AgreementRow {
    std::string                  name;
    std::size_t                  order = 0;
    SchmidtVerdict               oracle;
    bool                         end_verdict = false;
    std::optional<SchmidtParams> end_params;
    bool                         agree = false;
    std::string                  note;
  };

  struct NamedGroup {
    std::string name;
    Group       group;
  };

  // For each group: the lattice oracle's verdict (with its parameters) must
  // match the End-based verdict, and for Schmidt groups inference must
  // recover the same parameters.
  std::vector<AgreementRow> oracle_agreement(std::vector<NamedGroup> const& groups,
                                             CheckOptions const&            opts = {});

  // Clauses on P = H x| <d> for primes p != q and |d| = q^v.
  struct SplitClauses {
    bool nonabelian;          // a
    bool nonnilpotent;        // a'
    bool split;               // b: H a normal p-group, <d> of order q^v, P = H<d>, H ∩ <d> = 1
    bool d_q_central;         // c
    bool h_abelian;           // d
    bool centralizer_central; // d': C_H(d) in Z(P)
    bool every_h_generates;   // e: <h, d> = P for h in H \ 1
    bool outside_generates;   // e': <h, d> = P for h in H \ C_H(d)

    bool miller_moreno_form() const {
      return nonabelian && split && d_q_central && h_abelian && every_h_generates;
    }
    bool schmidt_form() const {
      return nonnilpotent && split && d_q_central && centralizer_central
             && outside_generates;
    }
  };

  SplitClauses split_clauses(Group const&    g,
                             Subgroup const& h,
                             Elem            d,
                             unsigned        p,
                             unsigned        q,
                             unsigned        v);

}  // namespace schmidt
