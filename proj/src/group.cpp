#include "schmidt/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "schmidt/arith.hpp"

namespace schmidt {

  namespace {

    std::string triple(Elem a, Elem b, Elem c) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ", "
             + std::to_string(c) + ")";
    }

    // Membership mask of the subgroup generated by gens.
    std::vector<char> closure_mask(Group const& g, std::span<Elem const> gens) {
      std::vector<char> in(g.order(), 0);
      std::vector<Elem> stack{g.identity()};
      in[g.identity()] = 1;
      while (!stack.empty()) {
        Elem a = stack.back();
        stack.pop_back();
        for (Elem s : gens) {
          Elem b = g.mul(a, s);
          if (!in[b]) {
            in[b] = 1;
            stack.push_back(b);
          }
        }
      }
      return in;
    }

    std::vector<Elem> mask_to_elems(std::vector<char> const& in) {
      std::vector<Elem> out;
      for (Elem a = 0; a < in.size(); ++a) {
        if (in[a]) {
          out.push_back(a);
        }
      }
      return out;
    }

    bool is_power_of(std::size_t n, unsigned r) {
      while (n > 1 && n % r == 0) {
        n /= r;
      }
      return n == 1;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  Group::Group() : Group(1, {0}, 0) {}

  Group::Group(std::size_t n, std::vector<Elem> table, Elem identity)
      : n_(n), identity_(identity), table_(std::move(table)), inverse_(n) {
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        if (mul(a, b) == identity_) {
          inverse_[a] = b;
          break;
        }
      }
    }
  }

  std::vector<std::vector<Elem>> Group::rows() const {
    std::vector<std::vector<Elem>> out(n_);
    for (Elem a = 0; a < n_; ++a) {
      auto r = row(a);
      out[a].assign(r.begin(), r.end());
    }
    return out;
  }

  Elem Group::pow(Elem a, std::int64_t k) const noexcept {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Elem result = identity_;
    while (k > 0) {
      if (k & 1) {
        result = mul(result, a);
      }
      a = mul(a, a);
      k >>= 1;
    }
    return result;
  }

  namespace {

    // Range, Latin square and identity. Returns the identity.
    Elem check_latin_and_identity(std::size_t n, std::vector<Elem> const& t) {
      if (n == 0) {
        throw GroupError("group order must be at least 1");
      }
      if (t.size() != n * n) {
        throw GroupError("table has " + std::to_string(t.size())
                         + " entries, expected " + std::to_string(n * n));
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= n) {
          throw GroupError("entry at row " + std::to_string(i / n)
                           + ", column " + std::to_string(i % n)
                           + " is out of range: " + std::to_string(t[i]));
        }
      }
      std::vector<char> seen(n);
      for (std::size_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t c = 0; c < n; ++c) {
          Elem v = t[r * n + c];
          if (seen[v]) {
            throw GroupError("row " + std::to_string(r)
                             + " is not a permutation (value "
                             + std::to_string(v) + " repeated)");
          }
          seen[v] = 1;
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
          Elem v = t[r * n + c];
          if (seen[v]) {
            throw GroupError("column " + std::to_string(c)
                             + " is not a permutation (value "
                             + std::to_string(v) + " repeated)");
          }
          seen[v] = 1;
        }
      }
      for (Elem e = 0; e < n; ++e) {
        bool ok = true;
        for (Elem g = 0; g < n && ok; ++g) {
          ok = t[e * n + g] == g && t[g * n + e] == g;
        }
        if (ok) {
          return e;
        }
      }
      throw GroupError("no two-sided identity element");
    }

  }  // namespace

  Group validate_group(std::size_t n, std::vector<Elem> flat) {
    Elem e = check_latin_and_identity(n, flat);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem ab = flat[a * n + b];
        for (Elem c = 0; c < n; ++c) {
          if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
            throw GroupError("associativity fails for " + triple(a, b, c));
          }
        }
      }
    }
    return Group(n, std::move(flat), e);
  }

  Group validate_group(std::vector<std::vector<Elem>> const& rows) {
    std::size_t       n = rows.size();
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw GroupError("row " + std::to_string(r) + " has "
                         + std::to_string(rows[r].size())
                         + " entries, expected " + std::to_string(n));
      }
      flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return validate_group(n, std::move(flat));
  }

  Group group_from_closed_table(std::size_t n, std::vector<Elem> flat) {
    Elem e = check_latin_and_identity(n, flat);
    return Group(n, std::move(flat), e);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup, GroupHom
  ////////////////////////////////////////////////////////////////////////

  Subgroup::Subgroup(std::vector<Elem> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  Subgroup Subgroup::checked(Group const& g, std::vector<Elem> elements) {
    Subgroup h(std::move(elements));
    for (Elem a : h) {
      if (a >= g.order()) {
        throw GroupError("subgroup element out of range");
      }
    }
    if (!h.contains(g.identity())) {
      throw GroupError("subset does not contain the identity");
    }
    for (Elem a : h) {
      if (!h.contains(g.inv(a))) {
        throw GroupError("subset not closed under inverses");
      }
      for (Elem b : h) {
        if (!h.contains(g.mul(a, b))) {
          throw GroupError("subset not closed under the product");
        }
      }
    }
    return h;
  }

  bool Subgroup::contains(Elem a) const noexcept {
    return std::binary_search(elems_.begin(), elems_.end(), a);
  }

  bool Subgroup::is_subset_of(Subgroup const& other) const {
    return std::includes(
        other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  bool is_homomorphism(Group const&          src,
                       Group const&          dst,
                       std::span<Elem const> images) {
    if (images.size() != src.order()) {
      return false;
    }
    for (Elem x : images) {
      if (x >= dst.order()) {
        return false;
      }
    }
    for (Elem a = 0; a < src.order(); ++a) {
      for (Elem b = 0; b < src.order(); ++b) {
        if (images[src.mul(a, b)] != dst.mul(images[a], images[b])) {
          return false;
        }
      }
    }
    return true;
  }

  GroupHom then(GroupHom const& first, GroupHom const& second) {
    GroupHom out;
    out.images.reserve(first.size());
    for (Elem x : first.images) {
      out.images.push_back(second(x));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  unsigned element_order(Group const& g, Elem a) {
    unsigned k = 1;
    for (Elem x = a; x != g.identity(); x = g.mul(x, a)) {
      ++k;
    }
    return k;
  }

  std::vector<unsigned> element_orders(Group const& g) {
    std::vector<unsigned> out(g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      out[a] = element_order(g, a);
    }
    return out;
  }

  bool is_abelian(Group const& g) {
    return is_abelian(g, whole_group(g));
  }

  bool is_abelian(Group const& g, Subgroup const& h) {
    for (Elem a : h) {
      for (Elem b : h) {
        if (b > a && g.mul(a, b) != g.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  Subgroup whole_group(Group const& g) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(std::move(all));
  }

  Subgroup trivial_subgroup(Group const& g) {
    return Subgroup({g.identity()});
  }

  Subgroup subgroup_generated(Group const& g, std::span<Elem const> seeds) {
    for (Elem s : seeds) {
      if (s >= g.order()) {
        throw GroupError("seed " + std::to_string(s) + " out of range");
      }
    }
    return Subgroup(mask_to_elems(closure_mask(g, seeds)));
  }

  Subgroup cyclic_subgroup(Group const& g, Elem a) {
    Elem seed[] = {a};
    return subgroup_generated(g, seed);
  }

  Subgroup centralizer(Group const& g, Subgroup const& h) {
    std::vector<Elem> out;
    for (Elem a = 0; a < g.order(); ++a) {
      bool ok = std::all_of(h.begin(), h.end(), [&](Elem b) {
        return g.mul(a, b) == g.mul(b, a);
      });
      if (ok) {
        out.push_back(a);
      }
    }
    return Subgroup(std::move(out));
  }

  Subgroup centralizer(Group const& g, Elem a) {
    return centralizer(g, cyclic_subgroup(g, a));
  }

  Subgroup center(Group const& g) {
    return centralizer(g, whole_group(g));
  }

  Subgroup conjugate(Group const& g, Subgroup const& h, Elem by) {
    std::vector<Elem> out;
    out.reserve(h.order());
    Elem inv = g.inv(by);
    for (Elem a : h) {
      out.push_back(g.mul(g.mul(inv, a), by));
    }
    return Subgroup(std::move(out));
  }

  Subgroup normalizer(Group const& g, Subgroup const& h) {
    std::vector<Elem> out;
    for (Elem a = 0; a < g.order(); ++a) {
      if (conjugate(g, h, a) == h) {
        out.push_back(a);
      }
    }
    return Subgroup(std::move(out));
  }

  bool is_normal(Group const& g, Subgroup const& h) {
    for (Elem a = 0; a < g.order(); ++a) {
      Elem inv = g.inv(a);
      for (Elem x : h) {
        if (!h.contains(g.mul(g.mul(inv, x), a))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Subgroup> conjugates(Group const& g, Subgroup const& h) {
    std::set<Subgroup> out;
    for (Elem a = 0; a < g.order(); ++a) {
      out.insert(conjugate(g, h, a));
    }
    return {out.begin(), out.end()};
  }

  Subgroup derived_subgroup(Group const& g, int depth) {
    if (depth != 1 && depth != 2) {
      throw std::invalid_argument("derived_subgroup: depth must be 1 or 2");
    }
    Subgroup current = whole_group(g);
    for (int d = 0; d < depth; ++d) {
      std::set<Elem> comms;
      for (Elem a : current) {
        for (Elem b : current) {
          comms.insert(commutator(g, a, b));
        }
      }
      std::vector<Elem> seeds(comms.begin(), comms.end());
      current = subgroup_generated(g, seeds);
    }
    return current;
  }

  Subgroup sylow_subgroup(Group const& g, unsigned r) {
    if (!is_prime(r)) {
      throw std::invalid_argument("sylow_subgroup: r must be prime");
    }
    std::size_t n = g.order(), target = 1;
    while (n % r == 0) {
      n /= r;
      target *= r;
    }
    if (target == 1) {
      return trivial_subgroup(g);
    }
    // A single greedy pass ends in a maximal r-subgroup: if <P, a> is not an
    // r-group for an earlier P, neither is it for any larger P.
    std::vector<Elem> gens;
    Subgroup          current = trivial_subgroup(g);
    for (Elem a = 0; a < g.order() && current.order() < target; ++a) {
      if (current.contains(a) || !is_power_of(element_order(g, a), r)) {
        continue;
      }
      gens.push_back(a);
      Subgroup cand = subgroup_generated(g, gens);
      if (is_power_of(cand.order(), r)) {
        current = std::move(cand);
      } else {
        gens.pop_back();
      }
    }
    if (current.order() != target) {
      throw std::logic_error("sylow_subgroup: greedy closure stopped early");
    }
    return current;
  }

  bool is_nilpotent(Group const& g) {
    for (auto [r, e] : factorize(g.order())) {
      if (!is_normal(g, sylow_subgroup(g, static_cast<unsigned>(r)))) {
        return false;
      }
    }
    return true;
  }

  std::vector<Elem> product_set(Group const&          g,
                                std::span<Elem const> a,
                                std::span<Elem const> b) {
    std::vector<char> in(g.order(), 0);
    for (Elem x : a) {
      for (Elem y : b) {
        in[g.mul(x, y)] = 1;
      }
    }
    return mask_to_elems(in);
  }

  Group induced_group(Group const& g, Subgroup const& h) {
    std::size_t       k = h.order();
    std::vector<Elem> pos(g.order(), kNoElem);
    for (std::size_t i = 0; i < k; ++i) {
      pos[h.elements()[i]] = static_cast<Elem>(i);
    }
    std::vector<Elem> flat(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Elem p = pos[g.mul(h.elements()[i], h.elements()[j])];
        if (p == kNoElem) {
          throw GroupError("induced_group: subset is not closed");
        }
        flat[i * k + j] = p;
      }
    }
    return group_from_closed_table(k, std::move(flat));
  }

  std::vector<Subgroup> all_subgroups(Group const& g, std::size_t max_order) {
    if (g.order() > max_order) {
      throw CapExceeded("subgroup enumeration: order " + std::to_string(g.order())
                       + " exceeds cap " + std::to_string(max_order));
    }
    // Every subgroup is the join of its cyclic subgroups, so closing the set
    // of cyclic subgroups under pairwise joins reaches all of them.
    std::map<std::vector<char>, std::vector<Elem>> found;
    std::deque<std::vector<char>>                  work;
    for (Elem a = 0; a < g.order(); ++a) {
      Elem gen[] = {a};
      auto m     = closure_mask(g, gen);
      if (found.emplace(m, std::vector<Elem>{a}).second) {
        work.push_back(std::move(m));
      }
    }
    while (!work.empty()) {
      auto m = std::move(work.front());
      work.pop_front();
      std::vector<Elem> const gens_m = found.at(m);
      std::vector<std::vector<Elem>> partners;
      for (auto const& [other, gens_o] : found) {
        partners.push_back(gens_o);
      }
      for (auto const& gens_o : partners) {
        std::vector<Elem> gens = gens_m;
        gens.insert(gens.end(), gens_o.begin(), gens_o.end());
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        auto j = closure_mask(g, gens);
        if (found.emplace(j, gens).second) {
          work.push_back(std::move(j));
        }
      }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto const& [m, gens] : found) {
      out.emplace_back(mask_to_elems(m));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Elem> generating_sequence(Group const& g) {
    std::vector<Elem> gens;
    std::vector<char> current = closure_mask(g, gens);
    auto size = [](std::vector<char> const& m) {
      return static_cast<std::size_t>(std::count(m.begin(), m.end(), 1));
    };
    while (size(current) < g.order()) {
      Elem              best = kNoElem;
      std::size_t       best_size = 0;
      std::vector<char> best_mask;
      for (Elem a = 0; a < g.order(); ++a) {
        if (current[a]) {
          continue;
        }
        gens.push_back(a);
        auto m = closure_mask(g, gens);
        gens.pop_back();
        if (size(m) > best_size) {
          best      = a;
          best_size = size(m);
          best_mask = std::move(m);
        }
      }
      gens.push_back(best);
      current = std::move(best_mask);
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Group cyclic_group(std::size_t n) {
    if (n == 0) {
      throw GroupError("cyclic_group: n must be positive");
    }
    std::vector<Elem> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        flat[a * n + b] = static_cast<Elem>((a + b) % n);
      }
    }
    return group_from_closed_table(n, std::move(flat));
  }

  Group direct_product(Group const& a, Group const& b) {
    std::size_t       na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Elem> flat(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem first  = a.mul(x / nb, y / nb);
        Elem second = b.mul(x % nb, y % nb);
        flat[x * n + y] = static_cast<Elem>(first * nb + second);
      }
    }
    return group_from_closed_table(n, std::move(flat));
  }

  Group semidirect_product(Group const&                 n,
                           Group const&                 h,
                           std::vector<GroupHom> const& action) {
    if (action.size() != h.order()) {
      throw GroupError("semidirect_product: action needs one map per element "
                       "of H");
    }
    for (auto const& alpha : action) {
      if (!is_homomorphism(n, n, alpha.images)) {
        throw GroupError("semidirect_product: action image is not an "
                         "endomorphism of N");
      }
      std::vector<Elem> sorted = alpha.images;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw GroupError("semidirect_product: action image is not an "
                         "automorphism of N");
      }
    }
    for (Elem a = 0; a < h.order(); ++a) {
      for (Elem b = 0; b < h.order(); ++b) {
        if (action[h.mul(a, b)] != then(action[a], action[b])) {
          throw GroupError("semidirect_product: action is not a homomorphism");
        }
      }
    }
    std::size_t       nn = n.order(), nh = h.order(), size = nn * nh;
    std::vector<Elem> flat(size * size);
    for (Elem x = 0; x < size; ++x) {
      Elem n1 = x / nh, h1 = x % nh;
      for (Elem y = 0; y < size; ++y) {
        Elem n2 = y / nh, h2 = y % nh;
        Elem nprod       = n.mul(action[h2](n1), n2);
        flat[x * size + y] = static_cast<Elem>(nprod * nh + h.mul(h1, h2));
      }
    }
    return validate_group(size, std::move(flat));
  }

  Quotient quotient(Group const& g, Subgroup const& n) {
    if (!is_normal(g, n)) {
      throw GroupError("quotient: subgroup is not normal");
    }
    std::vector<Elem> coset(g.order(), kNoElem);
    std::vector<Elem> reps;
    for (Elem a = 0; a < g.order(); ++a) {
      if (coset[a] != kNoElem) {
        continue;
      }
      Elem id = static_cast<Elem>(reps.size());
      reps.push_back(a);
      for (Elem x : n) {
        coset[g.mul(a, x)] = id;
      }
    }
    std::size_t       k = reps.size();
    std::vector<Elem> flat(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        flat[i * k + j] = coset[g.mul(reps[i], reps[j])];
      }
    }
    return {group_from_closed_table(k, std::move(flat)), GroupHom{coset}};
  }

  GroupHom inner_automorphism(Group const& g, Elem by) {
    GroupHom out;
    out.images.resize(g.order());
    Elem inv = g.inv(by);
    for (Elem a = 0; a < g.order(); ++a) {
      out.images[a] = g.mul(g.mul(inv, a), by);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism search
  ////////////////////////////////////////////////////////////////////////

  HomomorphismSearch::HomomorphismSearch(Group const& src,
                                         Group const& dst,
                                         HomKind      kind)
      : src_(&src), dst_(&dst), kind_(kind), gens_(generating_sequence(src)) {
    auto dst_orders = element_orders(dst);
    for (Elem s : gens_) {
      unsigned          o = element_order(src, s);
      std::vector<Elem> c;
      for (Elem t = 0; t < dst.order(); ++t) {
        bool ok = kind == HomKind::isomorphism ? dst_orders[t] == o
                                               : o % dst_orders[t] == 0;
        if (ok) {
          c.push_back(t);
        }
      }
      cands_.push_back(std::move(c));
    }
  }

  bool HomomorphismSearch::run(
      std::function<bool(std::span<Elem const>)> const& visit,
      std::optional<Elem>                               first_image) const {
    Group const& src = *src_;
    Group const& dst = *dst_;
    bool const   injective = kind_ == HomKind::isomorphism;
    if (injective && src.order() != dst.order()) {
      return true;
    }

    std::vector<Elem> images(src.order(), kNoElem);
    std::vector<char> used(dst.order(), 0);
    std::vector<Elem> assigned{src.identity()};
    images[src.identity()] = dst.identity();
    used[dst.identity()]   = 1;

    auto undo = [&](std::size_t mark) {
      for (std::size_t i = mark; i < assigned.size(); ++i) {
        used[images[assigned[i]]] = 0;
        images[assigned[i]]       = kNoElem;
      }
      assigned.resize(mark);
    };

    // Extends the map along right multiplication by generators 0..level,
    // with gens_[level] sent to `image`.
    auto extend = [&](std::size_t level, Elem image) {
      std::vector<Elem> gen_images(level + 1);
      for (std::size_t j = 0; j < level; ++j) {
        gen_images[j] = images[gens_[j]];
      }
      gen_images[level] = image;
      std::deque<Elem> queue(assigned.begin(), assigned.end());
      while (!queue.empty()) {
        Elem a = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j <= level; ++j) {
          Elem b  = src.mul(a, gens_[j]);
          Elem im = dst.mul(images[a], gen_images[j]);
          if (images[b] == kNoElem) {
            if (injective && used[im]) {
              return false;
            }
            images[b] = im;
            used[im]  = 1;
            assigned.push_back(b);
            queue.push_back(b);
          } else if (images[b] != im) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> descend = [&](std::size_t level) {
      if (level == gens_.size()) {
        return visit(images);
      }
      for (Elem c : cands_[level]) {
        if (level == 0 && first_image && c != *first_image) {
          continue;
        }
        std::size_t mark = assigned.size();
        if (extend(level, c)) {
          if (!descend(level + 1)) {
            return false;
          }
        }
        undo(mark);
      }
      return true;
    };
    return descend(0);
  }

  std::optional<GroupHom> find_group_isomorphism(Group const& a,
                                                 Group const& b) {
    if (a.order() != b.order()) {
      return std::nullopt;
    }
    auto oa = element_orders(a), ob = element_orders(b);
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) {
      return std::nullopt;
    }
    std::optional<GroupHom> found;
    HomomorphismSearch(a, b, HomKind::isomorphism)
        .run([&](std::span<Elem const> images) {
          found = GroupHom{{images.begin(), images.end()}};
          return false;
        });
    return found;
  }

}  // namespace schmidt
