#include "schmidt/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "schmidt/arith.hpp"

namespace schmidt {

  ////////////////////////////////////////////////////////////////////////
  // MMGroupSpec
  ////////////////////////////////////////////////////////////////////////

  MMGroupSpec MMGroupSpec::make(unsigned p, unsigned q, unsigned v) {
    if (p == q || !is_prime(p) || !is_prime(q)) {
      throw std::invalid_argument("p and q must be distinct primes");
    }
    return make(p, q, v, build_residue_ring(p, q));
  }

  MMGroupSpec
  MMGroupSpec::make(unsigned p, unsigned q, unsigned v, ResidueRing ring) {
    if (p == q || !is_prime(p) || !is_prime(q)) {
      throw std::invalid_argument("p and q must be distinct primes");
    }
    if (v == 0) {
      throw std::invalid_argument("v must be at least 1");
    }
    if (ring.p() != p || ring.q() != q) {
      throw std::invalid_argument("residue ring built for other primes");
    }
    if (v > 40) {
      throw std::invalid_argument("v too large");
    }
    return MMGroupSpec{p, q, v, std::move(ring)};
  }

  std::size_t MMGroupSpec::q_power() const {
    return ipow(q, v);
  }

  std::size_t MMGroupSpec::order() const {
    return ring.size() * q_power();
  }

  ////////////////////////////////////////////////////////////////////////
  // Miller–Moreno groups
  ////////////////////////////////////////////////////////////////////////

  Elem MillerMorenoGroup::encode(std::size_t f_index, std::size_t n) const {
    return static_cast<Elem>(n * spec.ring.size() + f_index);
  }

  std::pair<std::size_t, std::size_t> MillerMorenoGroup::decode(Elem g) const {
    return {g % spec.ring.size(), g / spec.ring.size()};
  }

  namespace {

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw std::logic_error("miller_moreno: postcondition failed: " + what);
      }
    }

  }  // namespace

  MillerMorenoGroup miller_moreno(MMGroupSpec const&      spec,
                                  ConstructOptions const& opts) {
    ResidueRing const& ring = spec.ring;
    std::size_t const  P = ring.size(), Q = spec.q_power(), n = P * Q;
    if (n > opts.max_order) {
      throw CapExceeded("group order " + std::to_string(n)
                                  + " exceeds cap "
                                  + std::to_string(opts.max_order));
    }

    // twist[k][f] = index(f * x^k), plus[f][g] = index(f + g)
    std::vector<std::vector<std::size_t>> twist(spec.q, std::vector<std::size_t>(P));
    std::vector<std::size_t>              plus(P * P);
    for (std::size_t f = 0; f < P; ++f) {
      ResidueElem fe = ring.element(f);
      for (unsigned k = 0; k < spec.q; ++k) {
        twist[k][f] = ring.index(ring.mul(fe, ring.pow(ring.x(), k)));
      }
      for (std::size_t g = 0; g < P; ++g) {
        plus[f * P + g] = ring.index(ring.add(fe, ring.element(g)));
      }
    }

    std::vector<Elem> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t f1 = a % P, n1 = a / P;
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t f2 = b % P, n2 = b / P;
        std::size_t f  = plus[twist[n2 % spec.q][f1] * P + f2];
        flat[a * n + b] = static_cast<Elem>(((n1 + n2) % Q) * P + f);
      }
    }

    MillerMorenoGroup out{
        spec,
        n <= opts.subgroup_check_cap ? validate_group(n, std::move(flat))
                                     : group_from_closed_table(n, std::move(flat)),
        0,
        {},
        {}};
    Group const& g = out.group;
    out.b          = out.encode(0, 1 % Q);
    out.projection_onto_b.images.resize(n);
    for (Elem a = 0; a < n; ++a) {
      out.projection_onto_b.images[a] = out.encode(0, out.decode(a).second);
    }

    std::vector<Elem> derived_expected, center_expected;
    for (std::size_t f = 0; f < P; ++f) {
      derived_expected.push_back(out.encode(f, 0));
    }
    for (std::size_t k = 0; k < Q; k += spec.q) {
      center_expected.push_back(out.encode(0, k));
    }
    Subgroup derived = derived_subgroup(g, 1);
    require(derived == Subgroup(derived_expected), "G' = {(f, 0)}");
    require(is_abelian(g, derived), "G' abelian");
    for (Elem a : derived) {
      require(a == g.identity() || element_order(g, a) == spec.p,
              "G' elementary abelian");
    }
    require(derived_subgroup(g, 2).order() == 1, "G'' trivial");
    require(center(g) == Subgroup(center_expected), "Z(G) = <b^q>");
    require(element_order(g, out.b) == Q, "b has order q^v");
    require(!is_nilpotent(g), "G non-nilpotent");
    require(is_homomorphism(g, g, out.projection_onto_b.images),
            "projection onto <b> is an endomorphism");

    if (n <= opts.subgroup_check_cap) {
      for (auto const& h : all_subgroups(g, opts.subgroup_check_cap)) {
        if (h.order() < n) {
          require(is_abelian(g, h), "every proper subgroup abelian");
        }
      }
    } else {
      out.warnings.push_back("order " + std::to_string(n)
                             + " above subgroup check cap; proper subgroups "
                               "not verified abelian");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Perm = std::vector<Elem>;

    // Closure of the generators under composition, sorted lexicographically
    // so the identity permutation is element 0. g*h applies g first.
    Group permutation_group(std::vector<Perm> const& gens) {
      std::size_t const degree = gens.front().size();
      Perm              id(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        id[i] = static_cast<Elem>(i);
      }
      auto compose = [](Perm const& g, Perm const& h) {
        Perm r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
          r[i] = h[g[i]];
        }
        return r;
      };
      std::map<Perm, Elem> seen{{id, 0}};
      std::vector<Perm>    todo{id};
      while (!todo.empty()) {
        Perm g = std::move(todo.back());
        todo.pop_back();
        for (auto const& s : gens) {
          Perm h = compose(g, s);
          if (seen.emplace(h, 0).second) {
            todo.push_back(std::move(h));
          }
        }
      }
      std::vector<Perm> elems;
      Elem              i = 0;
      for (auto& [perm, idx] : seen) {
        idx = i++;
        elems.push_back(perm);
      }
      std::size_t const n = elems.size();
      std::vector<Elem> flat(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          flat[a * n + b] = seen.at(compose(elems[a], elems[b]));
        }
      }
      return validate_group(n, std::move(flat));
    }

    // Element (sign, unit) with index 4 * sign + unit; units 1, i, j, k.
    Group quaternion_group() {
      // unit_mul[a][b] = {sign, unit} of e_a e_b
      static constexpr int unit_mul[4][4][2] = {
          {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
          {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
          {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
          {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
      };
      std::vector<Elem> flat(64);
      for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
          auto const& m    = unit_mul[a % 4][b % 4];
          int         sign = (a / 4 + b / 4 + m[0]) % 2;
          flat[a * 8 + b]  = static_cast<Elem>(4 * sign + m[1]);
        }
      }
      return validate_group(8, std::move(flat));
    }

    // <a, x | a^6, x^2 = a^3, x^-1 a x = a^-1>, element a^i x^j at 2i + j.
    Group dicyclic12() {
      std::vector<Elem> flat(144);
      for (int s = 0; s < 12; ++s) {
        for (int t = 0; t < 12; ++t) {
          int i = s / 2, j = s % 2, k = t / 2, l = t % 2;
          int e = i + (j == 0 ? k : -k);
          int x = j + l;
          if (x == 2) {
            e += 3;
            x = 0;
          }
          e               = ((e % 6) + 6) % 6;
          flat[s * 12 + t] = static_cast<Elem>(2 * e + x);
        }
      }
      return validate_group(12, std::move(flat));
    }

    // Powers of one automorphism of n, as an action of C_m.
    std::vector<GroupHom> cyclic_action(Group const& n, GroupHom const& gen, std::size_t m) {
      std::vector<GroupHom> act;
      GroupHom              cur{std::vector<Elem>(n.order())};
      for (Elem a = 0; a < n.order(); ++a) {
        cur.images[a] = a;
      }
      for (std::size_t k = 0; k < m; ++k) {
        act.push_back(cur);
        cur = then(cur, gen);
      }
      return act;
    }

    Group build_sl23() {
      Group q8 = quaternion_group();
      // i -> j -> k -> i, signs kept.
      GroupHom sigma{std::vector<Elem>(8)};
      for (Elem a = 0; a < 8; ++a) {
        Elem unit       = a % 4;
        sigma.images[a] = (a / 4) * 4 + (unit == 0 ? 0 : unit % 3 + 1);
      }
      return semidirect_product(q8, cyclic_group(3), cyclic_action(q8, sigma, 3));
    }

    Group build_c3_c4() {
      Group    c3 = cyclic_group(3);
      GroupHom inversion{{0, 2, 1}};
      return semidirect_product(c3, cyclic_group(4), cyclic_action(c3, inversion, 4));
    }

    Perm rotation(std::size_t n) {
      Perm r(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = static_cast<Elem>((i + 1) % n);
      }
      return r;
    }

    Perm reflection(std::size_t n) {
      Perm s(n);
      for (std::size_t i = 0; i < n; ++i) {
        s[i] = static_cast<Elem>((n - i) % n);
      }
      return s;
    }

    Group dihedral(std::size_t n) {
      return permutation_group({rotation(n), reflection(n)});
    }

    struct Recipe {
      std::string                  name;
      std::string                  provenance;
      std::function<Group()>       build;
    };

    std::vector<Recipe> const& recipes() {
      static std::vector<Recipe> const all = [] {
        std::vector<Recipe> r;
        for (std::size_t n = 1; n <= 24; ++n) {
          r.push_back({"C" + std::to_string(n),
                       "integers mod " + std::to_string(n) + " under addition",
                       [n] { return cyclic_group(n); }});
        }
        r.push_back({"C2xC2", "direct product C2 x C2",
                     [] { return direct_product(cyclic_group(2), cyclic_group(2)); }});
        r.push_back({"C3xC3", "direct product C3 x C3",
                     [] { return direct_product(cyclic_group(3), cyclic_group(3)); }});
        r.push_back({"C2xC4", "direct product C2 x C4",
                     [] { return direct_product(cyclic_group(2), cyclic_group(4)); }});
        r.push_back({"C2xC2xC2", "direct product C2 x C2 x C2", [] {
                       return direct_product(
                           direct_product(cyclic_group(2), cyclic_group(2)),
                           cyclic_group(2));
                     }});
        r.push_back({"S3", "permutations of 3 points generated by (0 1 2), (0 1)",
                     [] { return permutation_group({{1, 2, 0}, {1, 0, 2}}); }});
        r.push_back({"D4", "symmetries of a square acting on its 4 vertices",
                     [] { return dihedral(4); }});
        r.push_back({"Q8", "quaternion units {+-1, +-i, +-j, +-k}",
                     [] { return quaternion_group(); }});
        r.push_back({"D5", "symmetries of a pentagon acting on its 5 vertices",
                     [] { return dihedral(5); }});
        r.push_back({"D6", "symmetries of a hexagon acting on its 6 vertices",
                     [] { return dihedral(6); }});
        r.push_back({"A4", "even permutations of 4 points generated by (0 1 2), "
                           "(0 1)(2 3)",
                     [] { return permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}); }});
        r.push_back({"Dic3", "<a, x | a^6, x^2 = a^3, x^-1 a x = a^-1>",
                     [] { return dicyclic12(); }});
        r.push_back({"S4", "permutations of 4 points generated by (0 1 2 3), (0 1)",
                     [] { return permutation_group({{1, 2, 3, 0}, {1, 0, 2, 3}}); }});
        r.push_back({"SL23", "Q8 x| C3, the generator cycling i -> j -> k",
                     [] { return build_sl23(); }});
        r.push_back({"C3:C4", "C3 x| C4, the generator of C4 inverting C3",
                     [] { return build_c3_c4(); }});
        return r;
      }();
      return all;
    }

  }  // namespace

  std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (auto const& r : recipes()) {
      out.push_back(r.name);
    }
    return out;
  }

  CatalogEntry catalog_entry(std::string_view name) {
    for (auto const& r : recipes()) {
      if (r.name == name) {
        return {r.name, r.build(), r.provenance};
      }
    }
    throw std::invalid_argument("unknown catalog group: " + std::string(name));
  }

  Group catalog(std::string_view name) {
    return catalog_entry(name).group;
  }

  std::vector<CatalogEntry> catalog_up_to(std::size_t max_order) {
    std::vector<CatalogEntry> out;
    for (auto const& r : recipes()) {
      Group g = r.build();
      if (g.order() <= max_order) {
        out.push_back({r.name, std::move(g), r.provenance});
      }
    }
    return out;
  }

}  // namespace schmidt
