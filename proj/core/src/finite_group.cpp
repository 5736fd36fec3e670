#include "holo/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

namespace holo {

namespace {

constexpr std::size_t kFullAssocCheckLimit = 128;
constexpr std::size_t kRandomAssocTriples = 10'000;

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table,
                                    std::vector<Elem> generators,
                                    std::vector<std::string> labels) {
  std::size_t n = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(table.size()))));
  if (n == 0 || n * n != table.size())
    throw std::invalid_argument("from_table: table size is not a square");
  if (n > 65535)
    throw std::invalid_argument("from_table: order exceeds element index range");

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = g.table_[a * n + b];
      if (v >= n || seen[v])
        throw std::invalid_argument("from_table: row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = g.table_[b * n + a];
      if (v >= n || seen[v])
        throw std::invalid_argument("from_table: column is not a permutation");
      seen[v] = 1;
    }
  }

  for (std::size_t b = 0; b < n; ++b)
    if (g.table_[b] != b || g.table_[b * n] != b)
      throw std::invalid_argument("from_table: element 0 is not the identity");

  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (g.table_[a * n + b] != 0) ++b;  // exists by the Latin property
    if (g.table_[b * n + a] != 0)
      throw std::invalid_argument("from_table: one-sided inverse");
    g.inv_[a] = static_cast<Elem>(b);
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return g.table_[g.table_[a * n + b] * n + c] ==
           g.table_[a * n + g.table_[b * n + c]];
  };
  if (n <= kFullAssocCheckLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw std::invalid_argument("from_table: not associative");
  } else {
    std::mt19937 rng(0x5eed);  // fixed seed, reproducible spot check
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < kRandomAssocTriples; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw std::invalid_argument("from_table: not associative");
  }

  g.finalize(std::move(generators), std::move(labels));
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const PermGroup& grp) {
  std::size_t n = grp.order();
  if (n > 65535)
    throw std::invalid_argument(
        "from_permutations: order exceeds element index range");
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(n * n);
  auto locate = [&grp](const Perm& p) {
    auto idx = grp.index_of(p);
    if (!idx) throw ConsistencyError("from_permutations: group not closed");
    return static_cast<Elem>(*idx);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.table_[i * n + j] = locate(compose(grp.element(i), grp.element(j)));

  std::vector<Elem> gens;
  for (const Perm& p : grp.generators()) gens.push_back(locate(p));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(grp.element(i).cycle_string());

  g.inv_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    g.inv_[i] = locate(grp.element(i).inverse());
  g.finalize(std::move(gens), std::move(labels));
  return g;
}

void FiniteGroup::finalize(std::vector<Elem> generators,
                           std::vector<std::string> labels) {
  std::size_t n = n_;
  if (inv_.empty()) {
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t b = 0;
      while (table_[a * n + b] != 0) ++b;
      inv_[a] = static_cast<Elem>(b);
    }
  }

  orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::size_t k = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 0) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
    }
    orders_[a] = k;
  }

  if (generators.empty() && n > 1) {
    std::vector<char> span(n, 0);
    span[0] = 1;
    std::size_t span_size = 1;
    for (std::size_t e = 1; e < n && span_size < n; ++e) {
      if (span[e]) continue;
      generators.push_back(static_cast<Elem>(e));
      auto closed = closure(generators);
      std::fill(span.begin(), span.end(), 0);
      for (Elem x : closed) span[x] = 1;
      span_size = closed.size();
    }
  } else if (!generators.empty()) {
    for (Elem x : generators)
      if (x >= n) throw std::invalid_argument("finalize: generator out of range");
    if (closure(generators).size() != n)
      throw std::invalid_argument("finalize: generators do not generate");
  }
  generators_ = std::move(generators);

  if (labels.empty()) {
    labels.reserve(n);
    labels.emplace_back("e");
    for (std::size_t i = 1; i < n; ++i) labels.push_back("g" + std::to_string(i));
  } else if (labels.size() != n) {
    throw std::invalid_argument("finalize: label count mismatch");
  }
  labels_ = std::move(labels);

  // Conjugacy classes: orbits under conjugation by the generators.
  classes_.clear();
  class_of_.assign(n, 0);
  std::vector<char> placed(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (placed[a]) continue;
    std::vector<Elem> cls{static_cast<Elem>(a)};
    placed[a] = 1;
    for (std::size_t at = 0; at < cls.size(); ++at) {
      for (Elem s : generators_) {
        Elem y = mul(mul(s, cls[at]), inv(s));
        if (!placed[y]) {
          placed[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    for (Elem x : cls) class_of_[x] = classes_.size();
    classes_.push_back(std::move(cls));
  }
}

Elem FiniteGroup::power(Elem a, long long k) const {
  long long m = static_cast<long long>(element_order(a));
  k %= m;
  if (k < 0) k += m;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (std::size_t z = 0; z < n_; ++z) {
    bool central = true;
    for (Elem g : generators_) {
      if (mul(static_cast<Elem>(z), g) != mul(g, static_cast<Elem>(z))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(static_cast<Elem>(z));
  }
  return out;
}

std::vector<Elem> FiniteGroup::closure(std::vector<Elem> seed) const {
  std::vector<char> in(n_, 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (Elem s : seed) {
    if (s >= n_) throw std::invalid_argument("closure: element out of range");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  for (std::size_t at = 0; at < members.size(); ++at) {
    for (Elem s : seed) {
      Elem y = mul(members[at], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<BfsStep> FiniteGroup::bfs_chain(const std::vector<Elem>& gens) const {
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  std::deque<Elem> queue{0};
  std::vector<BfsStep> steps;
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Elem y = mul(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        steps.push_back({y, x, gi});
        queue.push_back(y);
      }
    }
  }
  return steps;
}

SubgroupView subgroup_group(const FiniteGroup& parent,
                            const std::vector<Elem>& members) {
  if (members.empty() || !std::is_sorted(members.begin(), members.end()))
    throw std::invalid_argument("subgroup_group: members must be sorted");
  if (members.front() != 0)
    throw std::invalid_argument("subgroup_group: missing identity");
  std::size_t m = members.size();
  std::vector<std::size_t> pos(parent.order(), m);  // m = "not a member"
  for (std::size_t i = 0; i < m; ++i) pos[members[i]] = i;

  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t p = pos[parent.mul(members[i], members[j])];
      if (p == m)
        throw std::invalid_argument("subgroup_group: set is not closed");
      table[i * m + j] = static_cast<Elem>(p);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Elem x : members) labels.push_back(parent.label(x));
  SubgroupView view{FiniteGroup::from_table(std::move(table), {}, std::move(labels)),
                    members};
  return view;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > 65535)
    throw std::invalid_argument(
        "direct_product: order exceeds element index range");
  auto pack = [nb](std::size_t x, std::size_t y) {
    return static_cast<Elem>(x * nb + y);
  };
  std::vector<Elem> table(n * n);
  for (std::size_t x1 = 0; x1 < na; ++x1)
    for (std::size_t y1 = 0; y1 < nb; ++y1)
      for (std::size_t x2 = 0; x2 < na; ++x2)
        for (std::size_t y2 = 0; y2 < nb; ++y2)
          table[pack(x1, y1) * n + pack(x2, y2)] =
              pack(a.mul(static_cast<Elem>(x1), static_cast<Elem>(x2)),
                   b.mul(static_cast<Elem>(y1), static_cast<Elem>(y2)));
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(pack(g, 0));
  for (Elem g : b.generators()) gens.push_back(pack(0, g));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(static_cast<Elem>(x)) + "," +
                       b.label(static_cast<Elem>(y)) + ")");
  return FiniteGroup::from_table(std::move(table), std::move(gens),
                                 std::move(labels));
}

std::size_t count_elements_of_order(const FiniteGroup& g, std::size_t m) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<Elem>(x)) == m) ++count;
  return count;
}

std::size_t count_elements_of_order(const FiniteGroup& g, std::size_t m,
                                    const std::vector<Elem>& within) {
  std::size_t count = 0;
  for (Elem x : within)
    if (g.element_order(x) == m) ++count;
  return count;
}

PermGroup regular_representation(const FiniteGroup& g) {
  std::size_t n = g.order();
  std::vector<Perm> elems;
  elems.reserve(n);
  std::vector<Perm> gens;
  auto as_perm = [&](Elem a) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x)
      images[x] = static_cast<Point>(g.mul(a, static_cast<Elem>(x)));
    return Perm(std::move(images));
  };
  for (std::size_t a = 0; a < n; ++a) elems.push_back(as_perm(static_cast<Elem>(a)));
  for (Elem a : g.generators()) gens.push_back(as_perm(a));
  return PermGroup::from_elements(std::move(elems), std::move(gens));
}

bool is_normal_subset(const FiniteGroup& g, const std::vector<Elem>& members) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : members) in[x] = 1;
  for (Elem s : g.generators())
    for (Elem x : members)
      if (!in[g.mul(g.mul(s, x), g.inv(s))]) return false;
  return true;
}

// Same lattice walk as perm_core's all_normal_subgroups, run on the Cayley
// table (the regular representation with O(1) multiplication): join in one
// conjugacy class at a time and close under products.
std::vector<std::vector<Elem>> normal_subgroup_sets(const FiniteGroup& g,
                                                    const Budget& budget) {
  std::size_t n = g.order();
  const auto& classes = g.conjugacy_classes();
  std::vector<std::vector<Elem>> found{{0}};
  std::size_t attempts = 0;

  auto close_union = [&](const std::vector<Elem>& base,
                         const std::vector<Elem>& cls) {
    std::vector<char> in(n, 0);
    std::vector<Elem> members = base;
    for (Elem x : base) in[x] = 1;
    std::size_t first_new = members.size();
    for (Elem x : cls) {
      in[x] = 1;
      members.push_back(x);
    }
    for (std::size_t qi = first_new; qi < members.size(); ++qi) {
      Elem x = members[qi];
      for (std::size_t j = 0; j < members.size(); ++j) {
        for (Elem p : {g.mul(x, members[j]), g.mul(members[j], x)}) {
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  for (std::size_t at = 0; at < found.size(); ++at) {
    for (std::size_t ci = 1; ci < classes.size(); ++ci) {
      if (std::binary_search(found[at].begin(), found[at].end(),
                             classes[ci].front()))
        continue;
      budget.charge(++attempts, "normal subgroup search attempts");
      auto closed = close_union(found[at], classes[ci]);
      if (std::find(found.begin(), found.end(), closed) == found.end())
        found.push_back(std::move(closed));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

}  // namespace holo
