#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "schmidt/arith.hpp"
#include "schmidt/json_export.hpp"
#include "schmidt/symbolic.hpp"

using namespace schmidt;

namespace {

  struct Fixture {
    MMGroupSpec spec;
    ResidueElem zero, one, x, xp1;

    explicit Fixture(unsigned p, unsigned q, unsigned v)
        : spec(MMGroupSpec::make(p, q, v)),
          zero(spec.ring.zero()),
          one(spec.ring.one()),
          x(spec.ring.x()),
          xp1(spec.ring.add(spec.ring.x(), spec.ring.one())) {}
  };

  std::size_t pu(MMGroupSpec const& s) {
    return ipow(s.p, multiplicative_order(s.p, s.q));
  }

  EndoIndex projection_index(EndoMonoid const& m, MillerMorenoGroup const& g) {
    auto idx = m.index_of(g.projection_onto_b.images);
    REQUIRE(idx.has_value());
    return *idx;
  }

}  // namespace

TEST_CASE("composition examples in (2,3,1)") {
  Fixture f(2, 3, 1);
  auto const& s = f.spec;
  CHECK(compose_pairs(s, make_pair(s, 2, f.x), make_pair(s, 2, f.xp1)) == make_pair(s, 1, f.xp1));
  CHECK(compose_auto_pair(s, make_triplet(s, 2, f.zero, f.one), make_pair(s, 1, f.x))
        == make_pair(s, 2, f.x));
  for (std::size_t ia = 0; ia < s.ring.size(); ++ia) {
    for (std::size_t ib = 1; ib < s.ring.size(); ++ib) {
      auto a = s.ring.element(ia), b = s.ring.element(ib);
      CHECK(compose_pair_auto(s, make_pair(s, 1, f.zero), make_triplet(s, 1, a, b))
            == make_pair(s, 1, s.ring.mul(a, s.ring.x_minus_one_inverse())));
    }
  }
  // (x - 1)^-1 = x over Z_2[x]/(x^2 + x + 1), so [1; x][1; 0; x] = [1; x^2] = [1; x + 1]
  CHECK(compose_pair_auto(s, make_pair(s, 1, f.x), make_triplet(s, 1, f.zero, f.x))
        == make_pair(s, 1, f.xp1));
  CHECK(to_string(make_pair(s, 1, f.xp1)) == "[1; 1 + x]");
  CHECK(to_string(make_triplet(s, 2, f.zero, f.one)) == "[2; 0; 1]");
}

TEST_CASE("pairs with q | n are canonical") {
  Fixture f(3, 2, 2);
  auto const& s = f.spec;
  CHECK(make_pair(s, 2, f.x) == make_pair(s, 2, f.zero));
  CHECK(make_pair(s, 5, f.one).n == 1);
  CHECK(make_pair(s, 1, f.one) != make_pair(s, 1, f.zero));
  CHECK_THROWS_AS(make_triplet(s, 2, f.zero, f.one), std::invalid_argument);
  CHECK_THROWS_AS(make_triplet(s, 1, f.zero, f.zero), std::invalid_argument);
}

TEST_CASE("model sizes") {
  for (auto [p, q, v, n] : {std::tuple{3u, 2u, 1u, 4u}, {2u, 3u, 1u, 9u}, {2u, 3u, 2u, 27u},
                            {3u, 2u, 2u, 8u}, {2u, 7u, 1u, 49u}, {5u, 2u, 3u, 24u}}) {
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(v);
    auto spec  = MMGroupSpec::make(p, q, v);
    auto model = SymbolicModel::build(spec);
    CHECK(model.size() == n);
    CHECK(expected_proper_count(spec) == n);
    CHECK(all_triplets(spec).size() == (ipow(q, v) - ipow(q, v - 1)) * pu(spec) * (pu(spec) - 1));
    CHECK(model.elem(model.zero()) == make_pair(spec, 0, spec.ring.zero()));
    CHECK(model.elem(model.distinguished()) == make_pair(spec, 1, spec.ring.zero()));
    for (SymbolicModel::Index i = 0; i < model.size(); ++i) {
      REQUIRE(model.index_of(model.elem(i)) == i);
    }
  }
}

TEST_CASE("the model satisfies the idempotent identities") {
  for (auto [p, q, v] : {std::tuple{3u, 2u, 1u}, {2u, 3u, 2u}, {2u, 7u, 1u}, {3u, 2u, 3u}}) {
    auto spec  = MMGroupSpec::make(p, q, v);
    auto model = SymbolicModel::build(spec);
    auto sg    = model.semigroup();
    std::vector<SymbolicModel::Index> nontrivial;
    for (SymbolicModel::Index i = 0; i < model.size(); ++i) {
      auto const& e = model.elem(i);
      CHECK(sg.is_idempotent(i) == (e.n == 0 || e.n == 1));
      if (e.n == 1) {
        nontrivial.push_back(i);
      }
    }
    CHECK(nontrivial.size() == pu(spec));

    // K([1; f]) = {z : z y = y z = z}; every proper endomorphism lies in one,
    // and the common part is exactly the z with z^v = 0.
    std::set<SymbolicModel::Index> meet, join;
    for (SymbolicModel::Index i = 0; i < model.size(); ++i) {
      meet.insert(i);
    }
    for (auto y : nontrivial) {
      std::set<SymbolicModel::Index> k;
      for (SymbolicModel::Index z = 0; z < model.size(); ++z) {
        if (model.compose(z, y) == z && model.compose(y, z) == z) {
          k.insert(z);
        }
      }
      CHECK(k.size() == ipow(q, v));
      join.insert(k.begin(), k.end());
      std::set<SymbolicModel::Index> next;
      std::set_intersection(meet.begin(), meet.end(), k.begin(), k.end(),
                            std::inserter(next, next.end()));
      meet = std::move(next);
    }
    CHECK(join.size() == model.size());
    for (SymbolicModel::Index z = 0; z < model.size(); ++z) {
      CHECK(meet.contains(z) == (sg.power(z, v) == model.zero()));
    }
  }
}

TEST_CASE("stabilizing triplets") {
  for (auto [p, q, v] : {std::tuple{3u, 2u, 1u}, {2u, 3u, 1u}, {2u, 3u, 2u}, {2u, 7u, 1u}}) {
    auto spec  = MMGroupSpec::make(p, q, v);
    auto model = SymbolicModel::build(spec);
    auto const n = pu(spec);
    auto vs = model.v_triplets();
    auto ds = model.d_triplets();
    CHECK(vs.size() == n * (n - 1));
    CHECK(ds.size() == n - 1);
    CHECK((ds.size() % p) != 0);
    auto e = model.elem(model.distinguished());
    for (auto const& z : vs) {
      CHECK(compose_auto_pair(spec, z, e) == e);
    }
    for (auto const& z : ds) {
      CHECK(compose_pair_auto(spec, e, z) == e);
      CHECK(std::find(vs.begin(), vs.end(), z) != vs.end());
    }
  }
}

TEST_CASE("products mixing pairs and triplets associate") {
  std::mt19937_64 rng(20240611);
  for (auto [p, q, v] : {std::tuple{2u, 3u, 2u}, {2u, 7u, 1u}, {5u, 2u, 2u}, {3u, 2u, 3u}}) {
    auto spec     = MMGroupSpec::make(p, q, v);
    auto model    = SymbolicModel::build(spec);
    auto triplets = all_triplets(spec);
    std::uniform_int_distribution<std::size_t> pick_e(0, model.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_z(0, triplets.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      auto e1 = model.elem(pick_e(rng)), e2 = model.elem(pick_e(rng));
      auto z  = triplets[pick_z(rng)];
      // (e1 e2) z = e1 (e2 z)
      CHECK(compose_pair_auto(spec, compose_pairs(spec, e1, e2), z)
            == compose_pairs(spec, e1, compose_pair_auto(spec, e2, z)));
      // (z e1) e2 = z (e1 e2)
      CHECK(compose_pairs(spec, compose_auto_pair(spec, z, e1), e2)
            == compose_auto_pair(spec, z, compose_pairs(spec, e1, e2)));
      // (e1 z) e2 = e1 (z e2)
      CHECK(compose_pairs(spec, compose_pair_auto(spec, e1, z), e2)
            == compose_pairs(spec, e1, compose_auto_pair(spec, z, e2)));
    }
  }
}

TEST_CASE("the model matches brute-force enumeration") {
  for (auto [p, q, v] : {std::tuple{3u, 2u, 1u}, {2u, 3u, 1u}, {5u, 2u, 1u}, {3u, 2u, 2u},
                         {2u, 3u, 2u}}) {
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(v);
    auto g     = miller_moreno(MMGroupSpec::make(p, q, v));
    auto m     = EndoMonoid::enumerate(g.group);
    auto model = SymbolicModel::build(g.spec);
    CHECK(m.proper().size() == model.size());
    CHECK(m.automorphisms().size() == all_triplets(g.spec).size());
    auto match = match_with_bruteforce(m, model, projection_index(m, g));
    REQUIRE(match.proper.size() == model.size());
    std::set<SymbolicModel::Index> image(match.bijection.begin(), match.bijection.end());
    CHECK(image.size() == model.size());
    for (std::size_t i = 0; i < match.proper.size(); ++i) {
      if (match.proper[i] == projection_index(m, g)) {
        CHECK(match.bijection[i] == model.distinguished());
      }
    }

    // Each automorphism acts on the proper part like exactly one triplet.
    std::map<EndoIndex, SymbolicModel::Index> to_model;
    for (std::size_t i = 0; i < match.proper.size(); ++i) {
      to_model[match.proper[i]] = match.bijection[i];
    }
    auto triplets = all_triplets(g.spec);
    std::set<std::size_t> used;
    for (auto a : m.automorphisms()) {
      std::size_t hits = 0, which = 0;
      for (std::size_t t = 0; t < triplets.size(); ++t) {
        bool ok = true;
        for (auto e : match.proper) {
          auto me = model.elem(to_model[e]);
          if (model.elem(to_model[m.compose(a, e)]) != compose_auto_pair(g.spec, triplets[t], me)
              || model.elem(to_model[m.compose(e, a)])
                     != compose_pair_auto(g.spec, me, triplets[t])) {
            ok = false;
            break;
          }
        }
        if (ok) {
          ++hits;
          which = t;
        }
      }
      CHECK(hits == 1);
      used.insert(which);
    }
    CHECK(used.size() == triplets.size());
  }
}

TEST_CASE("a mismatched model is rejected") {
  auto g     = miller_moreno(MMGroupSpec::make(2, 3, 1));
  auto m     = EndoMonoid::enumerate(g.group);
  auto other = SymbolicModel::build(MMGroupSpec::make(3, 2, 2));
  CHECK_THROWS_AS(match_with_bruteforce(m, other, projection_index(m, g)), std::runtime_error);
  auto same = SymbolicModel::build(g.spec);
  CHECK_THROWS_AS(match_with_bruteforce(m, same, m.zero()), std::runtime_error);
}

TEST_CASE("model JSON") {
  auto model = SymbolicModel::build(MMGroupSpec::make(2, 3, 1));
  auto doc   = model_to_json(model, true);
  CHECK(doc["schema"] == 1);
  CHECK(semigroup_from_json(doc) == model.semigroup());
  auto brief = model_to_json(model, false);
  CHECK_FALSE(brief.contains("composition"));
}
