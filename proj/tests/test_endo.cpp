#include <doctest.h>

#include <algorithm>

#include "schmidt/construct.hpp"
#include "schmidt/endo.hpp"
#include "schmidt/json_export.hpp"
#include "support/lemma_checks.hpp"
#include "support/oracles.hpp"

using namespace schmidt;

namespace {

  EndoMonoid end_of(std::string_view name) {
    return EndoMonoid::enumerate(catalog(name));
  }

  // The idempotent of S3 whose image is a given order-2 subgroup.
  EndoIndex projection_with_image_order(EndoMonoid const& m, std::size_t order) {
    for (auto x : idempotents_I0(m)) {
      if (image_kernel(m.group(), m.map(x)).image.order() == order) {
        return x;
      }
    }
    FAIL("no such idempotent");
    return 0;
  }

}  // namespace

TEST_CASE("sizes of End and Aut") {
  struct Row {
    char const* name;
    std::size_t end, aut;
  };
  for (auto [name, end, aut] : {Row{"C1", 1, 1}, Row{"C2", 2, 1}, Row{"C6", 6, 2},
                                Row{"S3", 10, 6}, Row{"A4", 33, 24}, Row{"SL23", 33, 24},
                                Row{"S4", 58, 24}, Row{"Q8", 28, 24}, Row{"C2xC2", 16, 6},
                                Row{"C2xC2xC2", 512, 168}}) {
    CAPTURE(name);
    auto m = end_of(name);
    CHECK(m.size() == end);
    CHECK(m.automorphisms().size() == aut);
    CHECK(m.proper().size() == end - aut);
  }
}

TEST_CASE("generator backtracking agrees with the all-maps scan") {
  for (auto const& e : catalog_up_to(6)) {
    CAPTURE(e.name);
    auto m = EndoMonoid::enumerate(e.group);
    CHECK(m.maps() == oracle::all_maps_endomorphisms(e.group));
  }
}

TEST_CASE("composition table applies the row map first") {
  for (auto name : {"S3", "A4", "D4", "C3xC3"}) {
    auto m = end_of(name);
    for (EndoIndex s = 0; s < m.size(); ++s) {
      for (EndoIndex t = 0; t < m.size(); ++t) {
        REQUIRE(m.map(m.compose(s, t)) == oracle::compose(m.map(s), m.map(t)));
      }
    }
  }
}

TEST_CASE("flags, zero and identity") {
  for (auto const& e : catalog_up_to(12)) {
    auto m = EndoMonoid::enumerate(e.group);
    CHECK(std::is_sorted(m.maps().begin(), m.maps().end()));
    CHECK(std::all_of(m.map(m.zero()).begin(), m.map(m.zero()).end(),
                      [&](Elem a) { return a == e.group.identity(); }));
    for (EndoIndex i = 0; i < m.size(); ++i) {
      CHECK(m.is_auto(i) == oracle::is_bijective(m.map(i)));
      CHECK(m.is_idempotent(i) == (oracle::compose(m.map(i), m.map(i)) == m.map(i)));
      CHECK(m.compose(i, m.identity()) == i);
      CHECK(m.compose(m.identity(), i) == i);
      CHECK(m.compose(i, m.zero()) == m.zero());
      CHECK(m.compose(m.zero(), i) == m.zero());
      CHECK(m.power(i, 3) == m.compose(m.compose(i, i), i));
      REQUIRE(m.index_of(m.map(i)) == i);
    }
  }
}

TEST_CASE("non-trivial idempotents") {
  CHECK(idempotents_I0(end_of("C2")).empty());
  CHECK(idempotents_I0(end_of("Q8")).empty());
  CHECK(idempotents_I0(end_of("S3")).size() == 3);
  CHECK(idempotents_I0(end_of("A4")).size() == 4);
  CHECK(idempotents_I0(end_of("D5")).size() == 5);
  CHECK(idempotents_I0(end_of("C6")).size() == 2);
}

TEST_CASE("bracket classes") {
  auto s3 = end_of("S3");
  for (auto x : idempotents_I0(s3)) {
    CHECK(bracket_class(s3, x) == idempotents_I0(s3));
  }
  auto c6 = end_of("C6");
  for (auto x : idempotents_I0(c6)) {
    auto b = bracket_class(c6, x);
    CHECK(b == std::vector<EndoIndex>{x});
  }
  for (auto const& e : catalog_up_to(12)) {
    auto m = EndoMonoid::enumerate(e.group);
    for (EndoIndex x = 0; x < m.size(); ++x) {
      if (m.is_idempotent(x)) {
        auto b = bracket_class(m, x);
        CHECK(std::find(b.begin(), b.end(), x) != b.end());
      } else {
        CHECK_THROWS_AS(bracket_class(m, x), std::invalid_argument);
      }
    }
  }
}

TEST_CASE("stabilizer sets of the identity") {
  for (auto name : {"S3", "C6", "Q8", "A4"}) {
    auto m  = end_of(name);
    auto st = stabilizer_sets(m, m.identity());
    CHECK(st.K.size() == m.size());
    CHECK(st.V == std::vector<EndoIndex>{m.identity()});
    CHECK(st.D == std::vector<EndoIndex>{m.identity()});
    CHECK(st.H == std::vector<EndoIndex>{m.zero()});
  }
}

TEST_CASE("stabilizer sets of projections") {
  auto s3 = end_of("S3");
  for (auto x : idempotents_I0(s3)) {
    auto st = stabilizer_sets(s3, x);
    CHECK(st.V.size() == 6);
    CHECK(st.D.size() == 2);
    CHECK(st.K.size() == 2);
    CHECK(st.H == std::vector<EndoIndex>{s3.zero()});
  }
  auto a4 = end_of("A4");
  for (auto x : idempotents_I0(a4)) {
    auto st = stabilizer_sets(a4, x);
    CHECK(st.V.size() == 12);
    CHECK(st.D.size() == 3);
    CHECK(st.K.size() == 3);
  }
}

TEST_CASE("image and kernel") {
  auto s3 = end_of("S3");
  auto& g = s3.group();
  auto id = image_kernel(g, s3.map(s3.identity()));
  CHECK(id.image.order() == 6);
  CHECK(id.kernel.order() == 1);
  auto z = image_kernel(g, s3.map(s3.zero()));
  CHECK(z.image.order() == 1);
  CHECK(z.kernel.order() == 6);
  auto x  = projection_with_image_order(s3, 2);
  auto ik = image_kernel(g, s3.map(x));
  CHECK(ik.image.order() == 2);
  CHECK(ik.kernel.order() == 3);
  CHECK(is_normal(g, ik.kernel));
}

TEST_CASE("inner automorphisms inside End") {
  CHECK(inner_subgroup(end_of("C6")) == std::vector<EndoIndex>{end_of("C6").identity()});
  CHECK(inner_subgroup(end_of("S3")).size() == 6);
  CHECK(inner_subgroup(end_of("Q8")).size() == 4);
  CHECK(inner_subgroup(end_of("S4")).size() == 24);
  auto m = end_of("A4");
  for (auto i : inner_subgroup(m)) {
    CHECK(m.is_auto(i));
  }
}

TEST_CASE("automorphism subgroups") {
  auto m   = end_of("S3");
  auto aut = m.automorphisms();
  auto g   = automorphism_subgroup(m, aut);
  CHECK(g.order() == 6);
  CHECK(find_group_isomorphism(g, catalog("S3")).has_value());
  auto q8 = end_of("Q8");
  auto a  = automorphism_subgroup(q8, q8.automorphisms());
  CHECK(find_group_isomorphism(a, catalog("S4")).has_value());
  std::vector<EndoIndex> bad{m.zero()};
  CHECK_THROWS_AS(automorphism_subgroup(m, bad), GroupError);
}

TEST_CASE("enumeration is independent of the thread count") {
  for (auto name : {"S4", "C2xC2xC2", "SL23"}) {
    auto g  = catalog(name);
    auto m1 = EndoMonoid::enumerate(g);
    auto m4 = EndoMonoid::enumerate(g, {.threads = 4});
    CHECK(m1.maps() == m4.maps());
    CHECK(m1.semigroup() == m4.semigroup());
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(EndoMonoid::enumerate(catalog("S4"), {.max_group_order = 20}), CapExceeded);
  CHECK_THROWS_AS(EndoMonoid::enumerate(catalog("C2xC2xC2"), {.max_monoid_size = 100}),
                  CapExceeded);
  CHECK_THROWS_AS(
      EndoMonoid::enumerate(catalog("C2xC2xC2"), {.max_monoid_size = 100, .threads = 3}),
      CapExceeded);
  auto m36 = EndoMonoid::enumerate(miller_moreno(MMGroupSpec::make(2, 3, 2)).group);
  CHECK(m36.size() > 0);
}

TEST_CASE("from_maps rebuilds the same monoid") {
  auto g = catalog("D4");
  auto m = EndoMonoid::from_maps(g, oracle::all_maps_endomorphisms(g));
  CHECK(m.semigroup() == EndoMonoid::enumerate(g).semigroup());
  CHECK_THROWS_AS(EndoMonoid::from_maps(g, {std::vector<Elem>(8, 1)}), std::invalid_argument);
}

TEST_CASE("JSON export round-trips the composition table") {
  auto m   = end_of("A4");
  auto doc = endo_monoid_to_json(m);
  CHECK(doc["schema"] == 1);
  CHECK(doc["size"] == 33);
  CHECK(semigroup_from_json(doc) == m.semigroup());
  auto text = doc.dump();
  CHECK(semigroup_from_json(Json::parse(text)) == m.semigroup());
}

TEST_CASE("idempotent, restriction and commuting identities on small groups") {
  for (auto const& e : catalog_up_to(24)) {
    auto m = EndoMonoid::enumerate(e.group);
    if (m.size() > 100) {
      continue;
    }
    CAPTURE(e.name);
    auto v = lemma::end_lemmas(m);
    CHECK(v.empty());
  }
}
