#ifndef HOLO_NAMED_GROUPS_HPP
#define HOLO_NAMED_GROUPS_HPP

#include <string>
#include <vector>

#include "holo/errors.hpp"
#include "holo/finite_group.hpp"

namespace holo {

FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup psl2(std::size_t p);            // prime p only
FiniteGroup pgl2(std::size_t p);            // prime p only

// Descriptor grammar: S<n> | A<n> | C<n> | D<n> | PSL(2,<p>) | PGL(2,<p>)
// | <spec>x<spec>. Products associate left. Throws UsageError on a bad
// descriptor and BudgetError when the group's Cayley table would not fit.
FiniteGroup make_named_group(const std::string& spec, const Budget& budget = {});

// Order of the described group without building it.
std::size_t named_group_order(const std::string& spec);

// Descriptors from the catalog whose groups have the given order: the
// matching atoms plus all products of smaller atoms. Isomorphic repeats are
// kept; the list is deterministic.
std::vector<std::string> catalog_of_order(std::size_t m);

}  // namespace holo

#endif
