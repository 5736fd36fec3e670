#ifndef HOLO_FINITE_GROUP_HPP
#define HOLO_FINITE_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "holo/errors.hpp"
#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

namespace holo {

using Elem = std::uint16_t;

// One link in a breadth-first word decomposition: elem = prev * gens[gen].
// Processing steps in order defines every element from the identity outward.
struct BfsStep {
  Elem elem;
  Elem prev;
  std::size_t gen;
};

// A finite group on elements 0..order-1 given by its full Cayley table.
// Identity is always element 0. Immutable after construction.
class FiniteGroup {
 public:
  // table is row-major: table[a * n + b] = a*b. Validates the group axioms:
  // Latin square, identity, inverses, and associativity (full scan for
  // order <= 128, 10^4 seeded random triples above that). Generators are
  // verified to generate; a greedy generating set is derived if none given.
  static FiniteGroup from_table(std::vector<Elem> table,
                                std::vector<Elem> generators = {},
                                std::vector<std::string> labels = {});

  // Reindexes a permutation group as an abstract group; element i is the
  // i-th permutation in canonical order, labelled by its cycle string.
  static FiniteGroup from_permutations(const PermGroup& grp);

  std::size_t order() const { return n_; }
  Elem id() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  std::size_t element_order(Elem a) const { return orders_[a]; }
  Elem power(Elem a, long long k) const;

  const std::vector<Elem>& generators() const { return generators_; }
  const std::string& label(Elem a) const { return labels_[a]; }

  const std::vector<std::vector<Elem>>& conjugacy_classes() const {
    return classes_;
  }
  std::size_t class_index_of(Elem a) const { return class_of_[a]; }

  bool is_abelian() const;
  std::vector<Elem> center() const;

  // Sorted closure of seed under multiplication (subgroup generated).
  std::vector<Elem> closure(std::vector<Elem> seed) const;

  // Breadth-first word decomposition of <gens>, generators tried in the
  // given order. Covers every element of the closure except the identity.
  std::vector<BfsStep> bfs_chain(const std::vector<Elem>& gens) const;

 private:
  FiniteGroup() = default;
  void finalize(std::vector<Elem> generators, std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> orders_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::size_t> class_of_;
};

// Shared handle used wherever maps need to outlive their construction site.
using GroupRef = std::shared_ptr<const FiniteGroup>;

inline GroupRef make_ref(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

// A subgroup of parent reindexed as a group of its own; to_parent maps the
// subgroup's element indices back into the parent.
struct SubgroupView {
  FiniteGroup group;
  std::vector<Elem> to_parent;
};

SubgroupView subgroup_group(const FiniteGroup& parent,
                            const std::vector<Elem>& members);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Count elements of order m, optionally restricted to a subset.
std::size_t count_elements_of_order(const FiniteGroup& g, std::size_t m);
std::size_t count_elements_of_order(const FiniteGroup& g, std::size_t m,
                                    const std::vector<Elem>& within);

// Left regular action: element a becomes the permutation x -> a*x.
PermGroup regular_representation(const FiniteGroup& g);

bool is_normal_subset(const FiniteGroup& g, const std::vector<Elem>& members);

// All normal subgroups as sorted element lists (via the class-union walk on
// the regular representation), ordered by size then lexicographically.
std::vector<std::vector<Elem>> normal_subgroup_sets(const FiniteGroup& g,
                                                    const Budget& budget = {});

}  // namespace holo

#endif
