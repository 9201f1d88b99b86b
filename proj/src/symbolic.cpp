#include "schmidt/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "schmidt/arith.hpp"

namespace schmidt {

  namespace {

    std::size_t ring_index(MMGroupSpec const& spec, ResidueElem const& f) {
      return spec.ring.index(f);
    }

  }  // namespace

  SymbolicProperEndo make_pair(MMGroupSpec const& spec, std::uint64_t n, ResidueElem f) {
    n %= spec.q_power();
    if (n % spec.q == 0) {
      return {n, spec.ring.zero()};
    }
    return {n, spec.ring.reduce(f.rep())};
  }

  SymbolicAuto make_triplet(MMGroupSpec const& spec,
                            std::uint64_t      n,
                            ResidueElem        a,
                            ResidueElem        b) {
    n %= spec.q_power();
    if (n % spec.q == 0) {
      throw std::invalid_argument("triplet: q divides n");
    }
    auto rb = spec.ring.reduce(b.rep());
    if (rb.is_zero()) {
      throw std::invalid_argument("triplet: b is zero");
    }
    return {n, spec.ring.reduce(a.rep()), rb};
  }

  SymbolicProperEndo compose_pairs(MMGroupSpec const&        spec,
                                   SymbolicProperEndo const& e1,
                                   SymbolicProperEndo const& e2) {
    return make_pair(spec, e1.n * e2.n, e2.f);
  }

  SymbolicProperEndo compose_auto_pair(MMGroupSpec const&        spec,
                                       SymbolicAuto const&       z,
                                       SymbolicProperEndo const& e) {
    return make_pair(spec, z.n * e.n, e.f);
  }

  SymbolicProperEndo compose_pair_auto(MMGroupSpec const&        spec,
                                       SymbolicProperEndo const& e,
                                       SymbolicAuto const&       z) {
    auto const& r = spec.ring;
    auto        f = r.add(r.mul(z.a, r.x_minus_one_inverse()),
                          r.mul(z.b, r.substitute_power(e.f, z.n)));
    return make_pair(spec, e.n * z.n, f);
  }

  std::string to_string(SymbolicProperEndo const& e) {
    return "[" + std::to_string(e.n) + "; " + e.f.to_string() + "]";
  }

  std::string to_string(SymbolicAuto const& z) {
    return "[" + std::to_string(z.n) + "; " + z.a.to_string() + "; " + z.b.to_string()
           + "]";
  }

  std::vector<SymbolicAuto> all_triplets(MMGroupSpec const& spec) {
    std::vector<SymbolicAuto> out;
    std::size_t const         k = spec.ring.size();
    for (std::uint64_t n = 0; n < spec.q_power(); ++n) {
      if (n % spec.q == 0) {
        continue;
      }
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 1; b < k; ++b) {
          out.push_back({n, spec.ring.element(a), spec.ring.element(b)});
        }
      }
    }
    return out;
  }

  SymbolicModel SymbolicModel::build(MMGroupSpec const& spec) {
    SymbolicModel model(spec);
    std::size_t const k = spec.ring.size();
    for (std::uint64_t n = 0; n < spec.q_power(); ++n) {
      if (n % spec.q == 0) {
        model.elems_.push_back({n, spec.ring.zero()});
        continue;
      }
      for (std::size_t f = 0; f < k; ++f) {
        model.elems_.push_back({n, spec.ring.element(f)});
      }
    }
    if (model.elems_.size() != expected_proper_count(spec)) {
      throw std::logic_error("symbolic model: wrong number of pairs");
    }

    std::size_t const m = model.elems_.size();
    model.comp_.resize(m * m);
    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        model.comp_[a * m + b]
            = model.index_of(compose_pairs(spec, model.elems_[a], model.elems_[b]));
      }
    }
    model.zero_          = model.index_of(make_pair(spec, 0, spec.ring.zero()));
    model.distinguished_ = model.index_of(make_pair(spec, 1, spec.ring.zero()));
    for (Index a = 0; a < m; ++a) {
      if (model.compose(a, model.zero_) != model.zero_
          || model.compose(model.zero_, a) != model.zero_) {
        throw std::logic_error("symbolic model: [0; 0] is not a zero");
      }
    }
    // Associativity is checked by the FiniteSemigroup constructor.
    (void)model.semigroup();
    return model;
  }

  SymbolicModel::Index SymbolicModel::index_of(SymbolicProperEndo const& e) const {
    auto key = [&](SymbolicProperEndo const& x) {
      return std::pair{x.n, ring_index(spec_, x.f)};
    };
    auto target = key(e);
    auto it     = std::lower_bound(elems_.begin(), elems_.end(), target,
                                   [&](auto const& x, auto const& t) { return key(x) < t; });
    if (it == elems_.end() || key(*it) != target) {
      throw std::logic_error("symbolic model: pair not in canonical form: " + to_string(e));
    }
    return static_cast<Index>(it - elems_.begin());
  }

  FiniteSemigroup SymbolicModel::semigroup() const {
    return FiniteSemigroup(elems_.size(), comp_);
  }

  std::vector<SymbolicAuto> SymbolicModel::v_triplets() const {
    auto const x = elems_[distinguished_];
    std::vector<SymbolicAuto> out;
    for (auto const& z : all_triplets(spec_)) {
      if (compose_auto_pair(spec_, z, x) == x) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::vector<SymbolicAuto> SymbolicModel::d_triplets() const {
    auto const x = elems_[distinguished_];
    std::vector<SymbolicAuto> out;
    for (auto const& z : v_triplets()) {
      if (compose_pair_auto(spec_, x, z) == x) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::size_t expected_proper_count(MMGroupSpec const& spec) {
    std::size_t const qv1 = ipow(spec.q, spec.v - 1);
    return spec.ring.size() * (spec.q_power() - qv1) + qv1;
  }

  ModelMatch match_with_bruteforce(EndoMonoid const&    m,
                                   SymbolicModel const& model,
                                   EndoIndex            anchor) {
    ModelMatch out;
    out.proper = m.proper();
    if (out.proper.size() != model.size()) {
      throw std::runtime_error("symbolic match: " + std::to_string(out.proper.size())
                               + " proper endomorphisms but " + std::to_string(model.size())
                               + " pairs");
    }
    auto pos = std::lower_bound(out.proper.begin(), out.proper.end(), anchor);
    if (pos == out.proper.end() || *pos != anchor) {
      throw std::runtime_error("symbolic match: anchor is an automorphism");
    }
    auto sub = FiniteSemigroup::restrict(m.semigroup(), out.proper);
    auto iso = find_isomorphism(
        sub, model.semigroup(),
        std::pair{static_cast<FiniteSemigroup::Index>(pos - out.proper.begin()),
                  model.distinguished()});
    if (!iso) {
      throw std::runtime_error("symbolic match: no anchored isomorphism");
    }
    out.bijection = std::move(*iso);
    return out;
  }

}  // namespace schmidt
