#include "holo/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace holo {

void PermGroup::finalize() {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (generators_.empty() && order() > 1) {
    // Greedy generating set: add elements (in canonical order) while they
    // enlarge the generated subgroup.
    std::unordered_set<Perm, PermHash> span;
    span.insert(Perm::identity(degree_));
    std::vector<Perm> gens;
    for (const Perm& e : elements_) {
      if (span.size() == order()) break;
      if (span.count(e)) continue;
      gens.push_back(e);
      // re-close span with the new generator
      std::deque<Perm> queue(span.begin(), span.end());
      while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const Perm& g : gens) {
          Perm next = compose(cur, g);
          if (span.insert(next).second) queue.push_back(std::move(next));
        }
      }
    }
    generators_ = std::move(gens);
  }
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements,
                                   std::vector<Perm> generators) {
  if (elements.empty())
    throw std::invalid_argument("PermGroup: empty element list");
  PermGroup g;
  g.degree_ = elements.front().degree();
  for (const Perm& p : elements)
    if (p.degree() != g.degree_)
      throw std::invalid_argument("PermGroup: mixed degrees");
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  g.finalize();

  std::unordered_set<Perm, PermHash> set(g.elements_.begin(),
                                         g.elements_.end());
  if (!set.count(Perm::identity(g.degree_)))
    throw std::invalid_argument("PermGroup: missing identity");
  for (const Perm& p : g.elements_) {
    if (!set.count(p.inverse()))
      throw std::invalid_argument("PermGroup: not closed under inverse");
    for (const Perm& q : g.elements_)
      if (!set.count(compose(p, q)))
        throw std::invalid_argument("PermGroup: not closed under product");
  }
  for (const Perm& p : g.generators_)
    if (!set.count(p))
      throw std::invalid_argument("PermGroup: generator outside element set");
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

PermGroup close_generators(std::vector<Perm> gens, std::size_t degree,
                           const Budget& budget) {
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("close_generators: degree mismatch");

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) {
        budget.charge(seen.size(), "close_generators");
        queue.push_back(std::move(next));
      }
    }
  }

  PermGroup grp;
  grp.degree_ = degree;
  grp.elements_.assign(seen.begin(), seen.end());
  // Drop duplicate/identity generators but keep the caller's order.
  for (const Perm& g : gens)
    if (!g.is_identity() &&
        std::find(grp.generators_.begin(), grp.generators_.end(), g) ==
            grp.generators_.end())
      grp.generators_.push_back(g);
  grp.finalize();
  return grp;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& grp) {
  const std::size_t n = grp.order();
  std::vector<Perm> gen_invs;
  for (const Perm& g : grp.generators()) gen_invs.push_back(g.inverse());

  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    // Orbit of element i under conjugation by the generators.
    std::vector<std::size_t> cls;
    std::deque<std::size_t> queue;
    assigned[i] = true;
    cls.push_back(i);
    queue.push_back(i);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < grp.generators().size(); ++gi) {
        Perm conj = compose(compose(grp.generators()[gi], grp.element(cur)),
                            gen_invs[gi]);
        std::size_t idx = *grp.index_of(conj);
        if (!assigned[idx]) {
          assigned[idx] = true;
          cls.push_back(idx);
          queue.push_back(idx);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

bool is_normal(const PermGroup& sub, const PermGroup& grp) {
  for (const Perm& s : sub.elements())
    if (!grp.contains(s))
      throw std::invalid_argument("is_normal: sub is not contained in grp");
  for (const Perm& g : grp.generators()) {
    Perm gi = g.inverse();
    for (const Perm& s : sub.elements())
      if (!sub.contains(compose(compose(g, s), gi))) return false;
  }
  return true;
}

namespace {

// Extends the class union base ∪ cls to its multiplicative closure. A union of
// conjugacy classes closed under products is a normal subgroup, so the result
// (if it stays within size_cap) is the smallest normal subgroup containing
// both. Returns nullopt when the closure outgrows size_cap.
std::optional<std::vector<Perm>> close_class_union(
    const std::vector<Perm>& base, const std::vector<Perm>& cls,
    std::size_t size_cap) {
  std::vector<Perm> members = base;
  std::unordered_set<Perm, PermHash> set(members.begin(), members.end());
  std::vector<std::size_t> pending;
  for (const Perm& c : cls) {
    if (set.insert(c).second) {
      pending.push_back(members.size());
      members.push_back(c);
    }
  }
  if (members.size() > size_cap) return std::nullopt;
  for (std::size_t qi = 0; qi < pending.size(); ++qi) {
    // Copy: members may reallocate while we append.
    Perm x = members[pending[qi]];
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (Perm prod : {compose(x, members[j]), compose(members[j], x)}) {
        if (set.insert(prod).second) {
          pending.push_back(members.size());
          members.push_back(std::move(prod));
          if (members.size() > size_cap) return std::nullopt;
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// All normal subgroups of grp whose order divides m: walk the normal subgroup
// lattice upward from the trivial subgroup, joining in one conjugacy class at
// a time and closing under products.
std::vector<std::vector<Perm>> normal_subgroups_dividing(const PermGroup& grp,
                                                         std::size_t m,
                                                         const Budget& budget) {
  auto classes = conjugacy_classes(grp);
  std::vector<std::vector<Perm>> class_elems(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t idx : classes[i])
      class_elems[i].push_back(grp.element(idx));

  std::vector<std::vector<Perm>> found{{Perm::identity(grp.degree())}};
  std::size_t attempts = 0;
  for (std::size_t at = 0; at < found.size(); ++at) {
    for (std::size_t ci = 1; ci < classes.size(); ++ci) {
      const auto& cls = class_elems[ci];
      // Classes are atoms: either contained in the subgroup or disjoint.
      if (std::binary_search(found[at].begin(), found[at].end(), cls.front()))
        continue;
      if (found[at].size() + cls.size() > m) continue;
      budget.charge(++attempts, "normal subgroup search attempts");
      auto closed = close_class_union(found[at], cls, m);
      if (!closed || m % closed->size() != 0) continue;
      if (std::find(found.begin(), found.end(), *closed) == found.end())
        found.push_back(std::move(*closed));
    }
  }
  return found;
}

}  // namespace

std::vector<PermGroup> normal_subgroups_of_order(const PermGroup& grp,
                                                 std::size_t m,
                                                 const Budget& budget) {
  if (m == 0 || grp.order() % m != 0)
    throw std::invalid_argument(
        "normal_subgroups_of_order: m must divide the group order");
  std::vector<PermGroup> out;
  for (auto& members : normal_subgroups_dividing(grp, m, budget))
    if (members.size() == m)
      out.push_back(PermGroup::from_elements(std::move(members)));
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) {
              return a.elements() < b.elements();
            });
  return out;
}

std::vector<PermGroup> all_normal_subgroups(const PermGroup& grp,
                                            const Budget& budget) {
  std::vector<PermGroup> out;
  for (auto& members : normal_subgroups_dividing(grp, grp.order(), budget))
    out.push_back(PermGroup::from_elements(std::move(members)));
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  return out;
}

}  // namespace holo
