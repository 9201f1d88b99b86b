#include "schmidt/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace schmidt {

  using Index = FiniteSemigroup::Index;

  namespace {
    constexpr Index kUnset = static_cast<Index>(-1);
  }

  FiniteSemigroup::FiniteSemigroup(std::size_t k, std::vector<Index> table)
      : k_(k), table_(std::move(table)) {
    if (k_ == 0) {
      throw std::invalid_argument("semigroup must be nonempty");
    }
    if (table_.size() != k_ * k_) {
      throw std::invalid_argument("semigroup table has wrong size");
    }
    for (Index v : table_) {
      if (v >= k_) {
        throw std::invalid_argument("semigroup table not closed");
      }
    }
    auto assoc = [&](Index a, Index b, Index c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        throw std::invalid_argument(
            "semigroup table not associative at (" + std::to_string(a) + ", "
            + std::to_string(b) + ", " + std::to_string(c) + ")");
      }
    };
    if (k_ <= 200) {
      for (Index a = 0; a < k_; ++a) {
        for (Index b = 0; b < k_; ++b) {
          for (Index c = 0; c < k_; ++c) {
            assoc(a, b, c);
          }
        }
      }
    } else {
      std::mt19937_64                      rng(0x5eed);
      std::uniform_int_distribution<Index> pick(0, static_cast<Index>(k_ - 1));
      for (int i = 0; i < 200000; ++i) {
        assoc(pick(rng), pick(rng), pick(rng));
      }
    }
  }

  FiniteSemigroup FiniteSemigroup::restrict(FiniteSemigroup const& s,
                                            std::span<Index const> indices) {
    std::vector<Index> pos(s.size(), kUnset);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      pos[indices[i]] = static_cast<Index>(i);
    }
    std::size_t const  m = indices.size();
    std::vector<Index> t(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Index r = pos[s.mul(indices[i], indices[j])];
        if (r == kUnset) {
          throw std::invalid_argument("restrict: subset is not a subsemigroup");
        }
        t[i * m + j] = r;
      }
    }
    return FiniteSemigroup(m, std::move(t));
  }

  Index FiniteSemigroup::power(Index a, std::size_t e) const noexcept {
    Index r = a;
    for (std::size_t i = 1; i < e; ++i) {
      r = mul(r, a);
    }
    return r;
  }

  Fingerprint fingerprint(FiniteSemigroup const& s) {
    std::size_t const k = s.size();
    Fingerprint       fp;
    fp.per_element.resize(k);
    std::vector<std::uint32_t> first_seen(k, 0);
    std::vector<char>          mark(k, 0);
    for (Index a = 0; a < k; ++a) {
      // first_seen[x] = exponent at which x first appears as a power of a
      std::fill(first_seen.begin(), first_seen.end(), 0);
      Index         x = a;
      std::uint32_t e = 1;
      while (first_seen[x] == 0) {
        first_seen[x] = e++;
        x             = s.mul(x, a);
      }
      std::uint32_t index  = first_seen[x];
      std::uint32_t period = e - first_seen[x];

      std::fill(mark.begin(), mark.end(), 0);
      std::uint32_t left = 0;
      for (Index t = 0; t < k; ++t) {
        Index v = s.mul(a, t);
        left += mark[v] ? 0 : 1;
        mark[v] = 1;
      }
      std::fill(mark.begin(), mark.end(), 0);
      std::uint32_t right = 0;
      for (Index t = 0; t < k; ++t) {
        Index v = s.mul(t, a);
        right += mark[v] ? 0 : 1;
        mark[v] = 1;
      }
      fp.per_element[a] = {s.is_idempotent(a), index, period, left, right};
    }
    fp.multiset = fp.per_element;
    std::sort(fp.multiset.begin(), fp.multiset.end());
    return fp;
  }

  namespace {

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& s1,
                FiniteSemigroup const& s2,
                Fingerprint const&     f1,
                Fingerprint const&     f2)
          : s1_(s1),
            s2_(s2),
            f1_(f1),
            f2_(f2),
            phi_(s1.size(), kUnset),
            inv_(s2.size(), kUnset) {}

      bool assign(Index a, Index b) {
        if (phi_[a] != kUnset) {
          return phi_[a] == b;
        }
        if (inv_[b] != kUnset || f1_.per_element[a] != f2_.per_element[b]) {
          return false;
        }
        set(a, b);
        return propagate();
      }

      void undo(std::size_t mark) {
        while (assigned_.size() > mark) {
          Index a = assigned_.back();
          assigned_.pop_back();
          inv_[phi_[a]] = kUnset;
          phi_[a]       = kUnset;
        }
        queue_.clear();
      }

      std::size_t mark() const noexcept {
        return assigned_.size();
      }
      Index image(Index a) const noexcept {
        return phi_[a];
      }
      std::vector<Index> const& phi() const noexcept {
        return phi_;
      }

     private:
      void set(Index a, Index b) {
        phi_[a] = b;
        inv_[b] = a;
        assigned_.push_back(a);
        queue_.push_back(a);
      }

      // Forces phi(xy) = phi(x)phi(y) for every pair involving a newly
      // assigned element.
      bool propagate() {
        while (!queue_.empty()) {
          Index a = queue_.front();
          queue_.pop_front();
          for (std::size_t i = 0; i < assigned_.size(); ++i) {
            Index b = assigned_[i];
            if (!force(s1_.mul(a, b), s2_.mul(phi_[a], phi_[b]))
                || !force(s1_.mul(b, a), s2_.mul(phi_[b], phi_[a]))) {
              queue_.clear();
              return false;
            }
          }
        }
        return true;
      }

      bool force(Index x, Index y) {
        if (phi_[x] != kUnset) {
          return phi_[x] == y;
        }
        if (inv_[y] != kUnset || f1_.per_element[x] != f2_.per_element[y]) {
          return false;
        }
        set(x, y);
        return true;
      }

      FiniteSemigroup const& s1_;
      FiniteSemigroup const& s2_;
      Fingerprint const&     f1_;
      Fingerprint const&     f2_;
      std::vector<Index>     phi_;
      std::vector<Index>     inv_;
      std::vector<Index>     assigned_;
      std::deque<Index>      queue_;
    };

    std::vector<char> subsemigroup_mask(FiniteSemigroup const&  s,
                                        std::vector<Index> const& gens) {
      std::vector<char>  in(s.size(), 0);
      std::vector<Index> stack;
      for (Index g : gens) {
        if (!in[g]) {
          in[g] = 1;
          stack.push_back(g);
        }
      }
      while (!stack.empty()) {
        Index a = stack.back();
        stack.pop_back();
        for (Index g : gens) {
          Index b = s.mul(a, g);
          if (!in[b]) {
            in[b] = 1;
            stack.push_back(b);
          }
        }
      }
      return in;
    }

    bool is_isomorphism(FiniteSemigroup const&    s1,
                        FiniteSemigroup const&    s2,
                        std::vector<Index> const& phi) {
      std::vector<char> hit(s2.size(), 0);
      for (Index b : phi) {
        if (b == kUnset || hit[b]) {
          return false;
        }
        hit[b] = 1;
      }
      for (Index a = 0; a < s1.size(); ++a) {
        for (Index b = 0; b < s1.size(); ++b) {
          if (phi[s1.mul(a, b)] != s2.mul(phi[a], phi[b])) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  std::optional<std::vector<Index>>
  find_isomorphism(FiniteSemigroup const&                  s1,
                   FiniteSemigroup const&                  s2,
                   std::optional<std::pair<Index, Index>> anchor) {
    if (s1.size() != s2.size()) {
      return std::nullopt;
    }
    Fingerprint const f1 = fingerprint(s1);
    Fingerprint const f2 = fingerprint(s2);
    if (!(f1 == f2)) {
      return std::nullopt;
    }
    std::size_t const k = s1.size();

    // Candidate images per fingerprint class.
    std::map<ElementFingerprint, std::vector<Index>> targets;
    for (Index b = 0; b < k; ++b) {
      targets[f2.per_element[b]].push_back(b);
    }

    // Rarest fingerprint classes first; greedy generating set in that order.
    std::vector<Index> order(k);
    for (Index a = 0; a < k; ++a) {
      order[a] = a;
    }
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      return targets[f1.per_element[a]].size()
             < targets[f1.per_element[b]].size();
    });
    std::vector<Index> gens;
    if (anchor) {
      if (anchor->first >= k || anchor->second >= k) {
        return std::nullopt;
      }
      gens.push_back(anchor->first);
    }
    std::vector<char> covered = subsemigroup_mask(s1, gens);
    for (Index a : order) {
      if (!covered[a]) {
        gens.push_back(a);
        covered = subsemigroup_mask(s1, gens);
      }
    }

    IsoSearch search(s1, s2, f1, f2);
    if (anchor && !search.assign(anchor->first, anchor->second)) {
      return std::nullopt;
    }

    std::optional<std::vector<Index>> found;
    auto descend = [&](auto&& self, std::size_t level) -> bool {
      while (level < gens.size() && search.image(gens[level]) != kUnset) {
        ++level;
      }
      if (level == gens.size()) {
        if (is_isomorphism(s1, s2, search.phi())) {
          found = search.phi();
          return true;
        }
        return false;
      }
      Index a = gens[level];
      for (Index b : targets[f1.per_element[a]]) {
        std::size_t m = search.mark();
        if (search.assign(a, b) && self(self, level + 1)) {
          return true;
        }
        search.undo(m);
      }
      return false;
    };
    descend(descend, 0);
    return found;
  }

  FiniteSemigroup cyclic_monoid_model(std::size_t m) {
    if (m == 0) {
      throw std::invalid_argument("cyclic_monoid_model: m must be positive");
    }
    std::vector<Index> t(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        t[a * m + b] = static_cast<Index>(a * b % m);
      }
    }
    return FiniteSemigroup(m, std::move(t));
  }

}  // namespace schmidt
