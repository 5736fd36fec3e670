#ifndef HOLO_PERM_GROUP_HPP
#define HOLO_PERM_GROUP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "holo/errors.hpp"
#include "holo/perm.hpp"

namespace holo {

/// A fully enumerated permutation group. Elements are kept sorted
/// lexicographically by image table, so element 0 is always the identity and
/// equal groups have equal element lists. Immutable after construction.
class PermGroup {
 public:
  /// Wraps an element list that is already known to be a group; validates
  /// closure under product and inverse. Generators optional (defaults to a
  /// greedily chosen generating set).
  static PermGroup from_elements(std::vector<Perm> elements,
                                 std::vector<Perm> generators = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  bool contains(const Perm& p) const;
  /// Index into elements(); nullopt if absent.
  std::optional<std::size_t> index_of(const Perm& p) const;

  bool operator==(const PermGroup& other) const {
    return elements_ == other.elements_;
  }

 private:
  friend PermGroup close_generators(std::vector<Perm>, std::size_t,
                                    const Budget&);
  PermGroup() = default;

  void finalize();  // sort elements, pick generators if absent

  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

/// Breadth-first closure of a generator set inside Sym(degree). The empty set
/// closes to the trivial group. Throws BudgetError if the closure would exceed
/// budget.max_elements.
PermGroup close_generators(std::vector<Perm> gens, std::size_t degree,
                           const Budget& budget = {});

/// Conjugacy classes as index lists into grp.elements(). Classes are sorted by
/// their smallest member index, so the identity class {0} comes first; indices
/// inside a class are increasing.
std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& grp);

/// True iff g s g^-1 lies in sub for every generator g of grp and every s in
/// sub. Throws std::invalid_argument if sub is not contained in grp.
bool is_normal(const PermGroup& sub, const PermGroup& grp);

/// All normal subgroups of grp with exactly m elements, found by enumerating
/// unions of conjugacy classes (always including the identity class) whose
/// sizes sum to m and keeping the unions closed under products. Results are
/// sorted by element list. Throws std::invalid_argument unless m divides the
/// group order; throws BudgetError if the class-union search explodes.
std::vector<PermGroup> normal_subgroups_of_order(const PermGroup& grp,
                                                 std::size_t m,
                                                 const Budget& budget = {});

// Every normal subgroup, ordered by order then element list.
std::vector<PermGroup> all_normal_subgroups(const PermGroup& grp,
                                            const Budget& budget = {});

}  // namespace holo

#endif
