#include "schmidt/endo.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace schmidt {

  EndoMonoid EndoMonoid::enumerate(Group const& g, EndoOptions const& opts) {
    if (g.order() > opts.max_group_order) {
      throw CapExceeded("endomorphism enumeration: group order "
                        + std::to_string(g.order()) + " exceeds cap "
                        + std::to_string(opts.max_group_order));
    }
    HomomorphismSearch search(g, g, HomKind::any);

    std::vector<std::vector<Elem>> maps;
    std::mutex                     lock;
    bool                           overflow = false;
    auto collect = [&](std::vector<std::vector<Elem>>& into) {
      return [&](std::span<Elem const> images) {
        into.emplace_back(images.begin(), images.end());
        if (into.size() > opts.max_monoid_size) {
          std::lock_guard guard(lock);
          overflow = true;
          return false;
        }
        return true;
      };
    };

    unsigned const threads = std::max(1u, opts.threads);
    if (threads == 1 || search.generators().empty()) {
      search.run(collect(maps));
    } else {
      auto const&                                 firsts = search.candidates(0);
      std::vector<std::vector<std::vector<Elem>>> parts(firsts.size());
      std::vector<std::thread>                    pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < firsts.size(); i += threads) {
            search.run(collect(parts[i]), firsts[i]);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      for (auto& part : parts) {
        for (auto& m : part) {
          maps.push_back(std::move(m));
        }
      }
    }
    if (overflow || maps.size() > opts.max_monoid_size) {
      throw CapExceeded("endomorphism monoid larger than "
                        + std::to_string(opts.max_monoid_size));
    }
    return EndoMonoid(g, std::move(maps));
  }

  EndoMonoid EndoMonoid::from_maps(Group const&                   g,
                                   std::vector<std::vector<Elem>> maps) {
    for (auto const& m : maps) {
      if (!is_homomorphism(g, g, m)) {
        throw std::invalid_argument("from_maps: not an endomorphism");
      }
    }
    return EndoMonoid(g, std::move(maps));
  }

  EndoMonoid::EndoMonoid(Group g, std::vector<std::vector<Elem>> maps)
      : group_(std::move(g)), maps_(std::move(maps)), zero_(0), identity_(0) {
    std::sort(maps_.begin(), maps_.end());
    maps_.erase(std::unique(maps_.begin(), maps_.end()), maps_.end());
    std::size_t const k = maps_.size(), n = group_.order();

    std::vector<Elem> zero_map(n, group_.identity()), id_map(n);
    for (Elem a = 0; a < n; ++a) {
      id_map[a] = a;
    }
    auto z = index_of(zero_map), i = index_of(id_map);
    if (!z || !i) {
      throw std::invalid_argument("endomorphism list lacks zero or identity");
    }
    zero_     = *z;
    identity_ = *i;

    is_auto_.resize(k);
    std::vector<char> hit(n);
    for (std::size_t s = 0; s < k; ++s) {
      std::fill(hit.begin(), hit.end(), 0);
      for (Elem v : maps_[s]) {
        hit[v] = 1;
      }
      is_auto_[s] = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    }

    comp_.resize(k * k);
    std::vector<Elem> st(n);
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        for (Elem a = 0; a < n; ++a) {
          st[a] = maps_[t][maps_[s][a]];
        }
        auto r = index_of(st);
        if (!r) {
          throw std::invalid_argument("endomorphism list not closed");
        }
        comp_[s * k + t] = *r;
      }
    }
  }

  EndoIndex EndoMonoid::power(Index s, std::size_t e) const noexcept {
    Index r = s;
    for (std::size_t i = 1; i < e; ++i) {
      r = compose(r, s);
    }
    return r;
  }

  std::optional<EndoIndex> EndoMonoid::index_of(std::span<Elem const> map) const {
    auto it = std::lower_bound(
        maps_.begin(), maps_.end(), map, [](auto const& a, auto const& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
    if (it == maps_.end() || !std::equal(it->begin(), it->end(), map.begin(), map.end())) {
      return std::nullopt;
    }
    return static_cast<Index>(it - maps_.begin());
  }

  std::vector<EndoIndex> EndoMonoid::automorphisms() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i) {
      if (is_auto(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<EndoIndex> EndoMonoid::proper() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i) {
      if (!is_auto(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  FiniteSemigroup EndoMonoid::semigroup() const {
    return FiniteSemigroup(size(), comp_);
  }

  std::vector<EndoIndex> idempotents_I0(EndoMonoid const& m) {
    std::vector<EndoIndex> out;
    for (EndoIndex i = 0; i < m.size(); ++i) {
      if (m.is_idempotent(i) && i != m.zero() && i != m.identity()) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<EndoIndex> bracket_class(EndoMonoid const& m, EndoIndex x) {
    if (!m.is_idempotent(x)) {
      throw std::invalid_argument("bracket_class: x is not idempotent");
    }
    std::vector<EndoIndex> out;
    for (EndoIndex y = 0; y < m.size(); ++y) {
      if (m.is_idempotent(y) && m.compose(x, y) == y && m.compose(y, x) == x) {
        out.push_back(y);
      }
    }
    return out;
  }

  StabilizerSets stabilizer_sets(EndoMonoid const& m, EndoIndex x) {
    StabilizerSets out;
    for (EndoIndex y = 0; y < m.size(); ++y) {
      EndoIndex yx = m.compose(y, x), xy = m.compose(x, y);
      if (yx == y && xy == y) {
        out.K.push_back(y);
      }
      if (m.is_auto(y) && yx == x) {
        out.V.push_back(y);
        if (xy == x) {
          out.D.push_back(y);
        }
      }
      if (xy == y && yx == m.zero()) {
        out.H.push_back(y);
      }
    }
    return out;
  }

  ImageKernel image_kernel(Group const& g, std::span<Elem const> map) {
    std::vector<Elem> im(map.begin(), map.end()), ker;
    for (Elem a = 0; a < g.order(); ++a) {
      if (map[a] == g.identity()) {
        ker.push_back(a);
      }
    }
    ImageKernel out{Subgroup(std::move(im)), Subgroup(std::move(ker))};
    bool idempotent = true;
    for (Elem a = 0; a < g.order() && idempotent; ++a) {
      idempotent = map[map[a]] == map[a];
    }
    if (idempotent) {
      std::vector<Elem> meet;
      std::set_intersection(out.image.begin(), out.image.end(),
                            out.kernel.begin(), out.kernel.end(),
                            std::back_inserter(meet));
      bool ok = meet.size() == 1 && is_normal(g, out.kernel)
                && product_set(g, out.kernel.elements(), out.image.elements()).size()
                       == g.order();
      if (!ok) {
        throw std::logic_error("image_kernel: idempotent without G = Ker x| Im");
      }
    }
    return out;
  }

  EndoIndex inner_index(EndoMonoid const& m, Elem g) {
    auto idx = m.index_of(inner_automorphism(m.group(), g).images);
    if (!idx) {
      throw std::logic_error("inner automorphism missing from End(G)");
    }
    return *idx;
  }

  std::vector<EndoIndex> inner_subgroup(EndoMonoid const& m) {
    std::vector<EndoIndex> out;
    for (Elem g = 0; g < m.group().order(); ++g) {
      out.push_back(inner_index(m, g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Group automorphism_subgroup(EndoMonoid const& m, std::span<EndoIndex const> elems) {
    std::size_t const      k = elems.size();
    std::vector<EndoIndex> pos(m.size(), static_cast<EndoIndex>(-1));
    for (std::size_t i = 0; i < k; ++i) {
      if (!m.is_auto(elems[i])) {
        throw GroupError("automorphism_subgroup: element is not an automorphism");
      }
      pos[elems[i]] = static_cast<EndoIndex>(i);
    }
    std::vector<Elem> flat(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        EndoIndex r = pos[m.compose(elems[i], elems[j])];
        if (r == static_cast<EndoIndex>(-1)) {
          throw GroupError("automorphism_subgroup: not closed");
        }
        flat[i * k + j] = r;
      }
    }
    return group_from_closed_table(k, std::move(flat));
  }

}  // namespace schmidt
