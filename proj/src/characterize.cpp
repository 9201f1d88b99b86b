#include "schmidt/characterize.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <stdexcept>

#include "schmidt/arith.hpp"
#include "schmidt/semigroup.hpp"

namespace schmidt {

  std::string to_string(SchmidtParams const& params) {
    return "(" + std::to_string(params.p) + "," + std::to_string(params.q) + ","
           + std::to_string(params.v) + ")";
  }

  namespace {

    bool is_cyclic(Group const& g, Subgroup const& h) {
      return std::any_of(h.begin(), h.end(),
                         [&](Elem a) { return element_order(g, a) == h.order(); });
    }

    bool is_p_group(std::size_t n, unsigned p) {
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    }

    struct LatticeScan {
      bool        all_nilpotent = true;
      bool        all_abelian   = true;
      std::string non_nilpotent;
      std::string non_abelian;
    };

    LatticeScan scan_proper_subgroups(Group const& g, OracleOptions const& opts) {
      LatticeScan out;
      for (auto const& h : all_subgroups(g, opts.max_subgroup_order)) {
        if (h.order() == g.order()) {
          continue;
        }
        if (out.all_abelian && !is_abelian(g, h)) {
          out.all_abelian = false;
          out.non_abelian = "non-abelian proper subgroup of order " + std::to_string(h.order());
        }
        if (out.all_nilpotent && !is_nilpotent(induced_group(g, h))) {
          out.all_nilpotent = false;
          out.non_nilpotent
              = "non-nilpotent proper subgroup of order " + std::to_string(h.order());
        }
        if (!out.all_nilpotent && !out.all_abelian) {
          break;
        }
      }
      return out;
    }

  }  // namespace

  SchmidtVerdict brute_is_schmidt(Group const& g, OracleOptions const& opts) {
    SchmidtVerdict out;
    auto           scan = scan_proper_subgroups(g, opts);
    out.is_miller_moreno = !is_abelian(g) && scan.all_abelian;
    if (is_nilpotent(g)) {
      out.witness = "nilpotent";
      return out;
    }
    if (!scan.all_nilpotent) {
      out.witness = scan.non_nilpotent;
      return out;
    }
    out.is_schmidt = true;

    auto derived = derived_subgroup(g);
    auto pp      = as_prime_power(derived.order());
    auto qq      = as_prime_power(g.order() / derived.order());
    if (!pp || !qq || pp->prime == qq->prime) {
      throw std::logic_error("Schmidt group with unexpected derived subgroup");
    }
    auto quot = quotient(g, derived);
    if (!is_cyclic(quot.group, whole_group(quot.group))) {
      throw std::logic_error("Schmidt group with non-cyclic abelianization");
    }
    out.params = SchmidtParams{static_cast<unsigned>(pp->prime),
                               static_cast<unsigned>(qq->prime), qq->exponent};
    return out;
  }

  bool brute_is_miller_moreno(Group const& g, OracleOptions const& opts) {
    if (is_abelian(g)) {
      return false;
    }
    return scan_proper_subgroups(g, opts).all_abelian;
  }

  bool CandidateResult::passes() const {
    return std::all_of(props.begin(), props.end(), [](bool b) { return b; });
  }

  namespace {

    using IndexSet = std::vector<EndoIndex>;

    struct Shared {
      EndoMonoid const*           m;
      IndexSet                    idempotents;
      std::vector<StabilizerSets> stab;  // parallel to idempotents
      IndexSet                    proper;
      IndexSet                    k_union;
      IndexSet                    k_meet;
    };

    Shared prepare(EndoMonoid const& m) {
      Shared s{&m, idempotents_I0(m), {}, m.proper(), {}, {}};
      std::vector<int> hits(m.size(), 0);
      for (auto y : s.idempotents) {
        s.stab.push_back(stabilizer_sets(m, y));
        for (auto z : s.stab.back().K) {
          ++hits[z];
        }
      }
      for (EndoIndex z = 0; z < m.size(); ++z) {
        if (hits[z] > 0) {
          s.k_union.push_back(z);
        }
        if (hits[z] == static_cast<int>(s.idempotents.size())) {
          s.k_meet.push_back(z);
        }
      }
      return s;
    }

    bool elementary_abelian(Group const& g, Subgroup const& h, unsigned p) {
      if (!is_abelian(g, h)) {
        return false;
      }
      return std::all_of(h.begin(), h.end(), [&](Elem a) {
        return a == g.identity() || element_order(g, a) == p;
      });
    }

    CandidateResult evaluate(Shared const&        s,
                             std::size_t          slot,
                             SchmidtParams const& prm,
                             CheckOptions const&  opts) {
      EndoMonoid const& m = *s.m;
      CandidateResult   r;
      r.x                  = s.idempotents[slot];
      auto const&       st = s.stab[slot];
      unsigned const    u  = multiplicative_order(prm.p, prm.q);
      std::size_t const pu = ipow(prm.p, u), qv = ipow(prm.q, prm.v);

      // 1
      if (st.K.size() != qv) {
        r.witnesses[0] = "|K(x)| = " + std::to_string(st.K.size()) + ", expected "
                         + std::to_string(qv);
      } else {
        auto k = FiniteSemigroup::restrict(m.semigroup(), st.K);
        r.props[0] = find_isomorphism(k, cyclic_monoid_model(qv)).has_value();
        if (!r.props[0]) {
          r.witnesses[0] = "K(x) not isomorphic to (Z_" + std::to_string(qv) + ", *)";
        }
      }
      // 2
      r.props[1] = st.H.size() == 1 && st.H[0] == m.zero();
      if (!r.props[1]) {
        r.witnesses[1] = "|H(x)| = " + std::to_string(st.H.size());
      }
      // 3
      auto bracket = bracket_class(m, r.x);
      r.props[2]   = bracket == s.idempotents;
      if (!r.props[2]) {
        r.witnesses[2] = "|[x]| = " + std::to_string(bracket.size()) + ", |I0| = "
                         + std::to_string(s.idempotents.size());
      }
      // 4
      r.props[3] = s.idempotents.size() == pu;
      if (!r.props[3]) {
        r.witnesses[3] = "|I0| = " + std::to_string(s.idempotents.size()) + ", p^u = "
                         + std::to_string(pu);
      }
      // 5
      r.props[4] = s.k_union == s.proper;
      if (!r.props[4]) {
        r.witnesses[4] = "union of K(y) has " + std::to_string(s.k_union.size())
                         + " elements, End \\ Aut has " + std::to_string(s.proper.size());
      }
      // 6
      r.props[5] = true;
      for (EndoIndex z = 0; z < m.size(); ++z) {
        bool in_meet = std::binary_search(s.k_meet.begin(), s.k_meet.end(), z);
        bool nil     = m.power(z, prm.v) == m.zero();
        if (in_meet != nil) {
          r.props[5]     = false;
          r.witnesses[5] = "endomorphism #" + std::to_string(z)
                           + (in_meet ? " lies in every K(y) but z^v != 0"
                                      : " has z^v = 0 but lies outside some K(y)");
          break;
        }
      }
      // 7
      r.props[6] = st.D.size() % prm.p != 0;
      if (!r.props[6]) {
        r.witnesses[6] = "|D(x)| = " + std::to_string(st.D.size());
      }
      // 8
      auto vg  = automorphism_subgroup(m, st.V);
      auto syl = sylow_subgroup(vg, prm.p);
      if (syl.order() != pu) {
        r.witnesses[7] = "Sylow " + std::to_string(prm.p) + "-subgroup of V(x) has order "
                         + std::to_string(syl.order());
      } else if (!elementary_abelian(vg, syl, prm.p)) {
        r.witnesses[7] = "Sylow " + std::to_string(prm.p)
                         + "-subgroup of V(x) is not elementary abelian";
      } else {
        r.props[7] = true;
        if (vg.order() <= opts.all_sylow_cap) {
          for (auto const& c : conjugates(vg, syl)) {
            if (!elementary_abelian(vg, c, prm.p)) {
              r.props[7]     = false;
              r.witnesses[7] = "a conjugate Sylow subgroup is not elementary abelian";
              break;
            }
          }
        }
      }
      return r;
    }

    bool valid_params(SchmidtParams const& prm) {
      return is_prime(prm.p) && is_prime(prm.q) && prm.p != prm.q && prm.v >= 1;
    }

    std::vector<SchmidtParams> infer(Shared const& s) {
      EndoMonoid const& m = *s.m;
      auto pp = as_prime_power(s.idempotents.size());
      if (!pp) {
        return {};
      }
      std::set<SchmidtParams> found;
      for (auto x : s.idempotents) {
        auto ik = image_kernel(m.group(), m.map(x));
        auto qq = as_prime_power(ik.image.order());
        if (!qq || qq->prime == pp->prime || !is_cyclic(m.group(), ik.image)) {
          continue;
        }
        if (multiplicative_order(pp->prime, qq->prime) != pp->exponent) {
          continue;
        }
        found.insert({static_cast<unsigned>(pp->prime), static_cast<unsigned>(qq->prime),
                      qq->exponent});
      }
      std::vector<SchmidtParams> out(found.begin(), found.end());
      std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return std::tie(a.q, a.v, a.p) < std::tie(b.q, b.v, b.p);
      });
      return out;
    }

    std::vector<CandidateResult> evaluate_all(Shared const&        s,
                                              SchmidtParams const& prm,
                                              CheckOptions const&  opts) {
      std::vector<CandidateResult> rows;
      for (std::size_t i = 0; i < s.idempotents.size(); ++i) {
        rows.push_back(evaluate(s, i, prm, opts));
      }
      return rows;
    }

  }  // namespace

  CharacterizationReport check_characterization(Group const&                        g,
                                                std::optional<SchmidtParams> const& params,
                                                CheckOptions const&                 opts) {
    return check_characterization(EndoMonoid::enumerate(g, opts.endo), params, opts);
  }

  CharacterizationReport check_characterization(EndoMonoid const&                   m,
                                                std::optional<SchmidtParams> const& params,
                                                CheckOptions const&                 opts) {
    CharacterizationReport rep;
    rep.group_order = m.group().order();
    rep.end_size    = m.size();
    rep.aut_size    = m.automorphisms().size();
    Shared s        = prepare(m);
    rep.idempotents = s.idempotents;

    auto finish = [&](SchmidtParams const& prm, std::vector<CandidateResult> rows) {
      rep.params     = prm;
      rep.u          = multiplicative_order(prm.p, prm.q);
      rep.candidates = std::move(rows);
      rep.verdict    = std::any_of(rep.candidates.begin(), rep.candidates.end(),
                                   [](auto const& r) { return r.passes(); });
    };

    if (params) {
      if (!valid_params(*params)) {
        throw std::invalid_argument("p and q must be distinct primes and v >= 1");
      }
      rep.tried = {*params};
      finish(*params, evaluate_all(s, *params, opts));
      if (s.idempotents.empty()) {
        rep.diagnostic = "no idempotents other than 0 and 1";
      }
      return rep;
    }

    rep.inferred = true;
    rep.tried    = infer(s);
    if (rep.tried.empty()) {
      rep.diagnostic = s.idempotents.empty()
                           ? "no idempotents other than 0 and 1"
                           : "no consistent parameters: need |I0| = p^u with u = ord_q(p) "
                             "and a cyclic image of order q^v";
      return rep;
    }
    std::optional<std::vector<CandidateResult>> first;
    for (auto const& prm : rep.tried) {
      auto rows = evaluate_all(s, prm, opts);
      if (std::any_of(rows.begin(), rows.end(), [](auto const& r) { return r.passes(); })) {
        finish(prm, std::move(rows));
        return rep;
      }
      if (!first) {
        first = std::move(rows);
      }
    }
    finish(rep.tried.front(), std::move(*first));
    return rep;
  }

  std::vector<AgreementRow> oracle_agreement(std::vector<NamedGroup> const& groups,
                                             CheckOptions const&            opts) {
    std::vector<AgreementRow> out;
    for (auto const& [name, g] : groups) {
      AgreementRow row;
      row.name   = name;
      row.order  = g.order();
      row.oracle = brute_is_schmidt(g);
      auto m     = EndoMonoid::enumerate(g, opts.endo);
      auto inferred = check_characterization(m, std::nullopt, opts);
      if (inferred.verdict) {
        row.end_params = inferred.params;
      }
      if (row.oracle.is_schmidt) {
        auto given      = check_characterization(m, row.oracle.params, opts);
        row.end_verdict = given.verdict;
        row.agree       = given.verdict && inferred.verdict
                    && inferred.params == row.oracle.params;
        if (!given.verdict) {
          row.note = "properties fail with the oracle's parameters";
        } else if (!inferred.verdict) {
          row.note = "parameter inference failed";
        } else if (!row.agree) {
          row.note = "inferred " + to_string(*inferred.params) + ", oracle "
                     + to_string(*row.oracle.params);
        }
      } else {
        row.end_verdict = inferred.verdict;
        row.agree       = !inferred.verdict;
        if (!row.agree) {
          row.note = "properties hold with " + to_string(*inferred.params)
                     + " for a non-Schmidt group";
        }
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  SplitClauses split_clauses(Group const&    g,
                             Subgroup const& h,
                             Elem            d,
                             unsigned        p,
                             unsigned        q,
                             unsigned        v) {
    SplitClauses c{};
    c.nonabelian   = !is_abelian(g);
    c.nonnilpotent = !is_nilpotent(g);

    std::size_t const qv = ipow(q, v);
    auto              dc = cyclic_subgroup(g, d);
    std::vector<Elem> meet;
    std::set_intersection(h.begin(), h.end(), dc.begin(), dc.end(), std::back_inserter(meet));
    c.split = p != q && is_p_group(h.order(), p) && is_normal(g, h) && dc.order() == qv
              && meet.size() == 1 && h.order() * qv == g.order();

    auto z          = center(g);
    c.d_q_central   = z.contains(g.pow(d, q));
    c.h_abelian     = is_abelian(g, h);
    auto cent       = centralizer(g, d);
    c.centralizer_central = std::all_of(h.begin(), h.end(), [&](Elem a) {
      return !cent.contains(a) || z.contains(a);
    });

    auto generates = [&](Elem a) {
      std::array<Elem, 2> seeds{a, d};
      return subgroup_generated(g, seeds).order() == g.order();
    };
    c.every_h_generates = std::all_of(h.begin(), h.end(), [&](Elem a) {
      return a == g.identity() || generates(a);
    });
    c.outside_generates = std::all_of(h.begin(), h.end(), [&](Elem a) {
      return cent.contains(a) || generates(a);
    });
    return c;
  }

}  // namespace schmidt
