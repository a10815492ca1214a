#pragma once

#include "scx/grp/group.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace scx::chain {

using grp::GroupPresentation;
using grp::Word;

/// c * (target lift) * w in the boundary of a lifted cell.
struct BoundaryTerm {
  long coeff = 1;
  Word word;
  std::size_t cell = 0; // index into EquivariantComplex::cells()
  friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
};

struct Cell {
  std::string name;
  int dim = 0;
  std::vector<BoundaryTerm> boundary;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Free Z[pi]-chain complex of a finite CW complex, dimensions 0..3.
class EquivariantComplex {
public:
  EquivariantComplex() = default;
  explicit EquivariantComplex(GroupPresentation group) : group_(std::move(group)) {}

  const GroupPresentation& group() const { return group_; }
  GroupPresentation& group() { return group_; }

  std::size_t add_cell(const std::string& name, int dim);
  /// Replaces the boundary; targets must have dimension one lower.
  void set_boundary(std::size_t cell, std::vector<BoundaryTerm> terms);

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_.at(i); }
  const std::vector<Cell>& cells() const { return cells_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const; // throws InputError
  /// Indices of cells of dimension d in declaration order.
  std::vector<std::size_t> cells_of_dim(int d) const;
  /// Alternating count of cells (optionally skipping a subset).
  long euler_characteristic() const;

  friend bool operator==(const EquivariantComplex& a, const EquivariantComplex& b) {
    return a.group_ == b.group_ && a.cells_ == b.cells_;
  }

private:
  GroupPresentation group_;
  std::vector<Cell> cells_;
  std::map<std::string, std::size_t> by_name_;
};

/// Named subset of cells, stored sorted by cell index.
struct SubcomplexRef {
  std::string name;
  std::vector<std::size_t> cells;

  bool contains(std::size_t c) const;
  friend bool operator==(const SubcomplexRef&, const SubcomplexRef&) = default;
};

SubcomplexRef make_subcomplex(const EquivariantComplex& cx, const std::string& name,
                              const std::vector<std::string>& cell_names);
/// Cells in the boundary of a member that are not members themselves.
std::vector<std::size_t> open_cells(const EquivariantComplex& cx, const SubcomplexRef& s);
/// Throws InputError naming the first cell missing from the closure.
void require_closed(const EquivariantComplex& cx, const SubcomplexRef& s);
SubcomplexRef subcomplex_union(const std::string& name, const SubcomplexRef& a,
                               const SubcomplexRef& b);
SubcomplexRef all_cells(const EquivariantComplex& cx, const std::string& name = "X");

/// chi(X, Y) from cell counts.
long euler_characteristic(const EquivariantComplex& cx, const SubcomplexRef* y);

/// Connected components of the cells of `s` (cells joined through boundary
/// incidences). Each component is a sorted list of cell indices.
std::vector<std::vector<std::size_t>> components(const EquivariantComplex& cx,
                                                 const SubcomplexRef& s);
/// True iff the 1-skeleton has at least one vertex and is connected.
bool one_skeleton_connected(const EquivariantComplex& cx);

/// The complex formed by the cells of a closed subcomplex (same group).
EquivariantComplex restrict_to(const EquivariantComplex& cx, const SubcomplexRef& s);

/// Reorders cells by `order` (a permutation of indices); subcomplexes must be
/// remapped with `remap`.
EquivariantComplex permute_cells(const EquivariantComplex& cx,
                                 const std::vector<std::size_t>& order);
SubcomplexRef remap(const SubcomplexRef& s, const std::vector<std::size_t>& order);

/// One vertex, one edge per generator, one 2-cell per relator with boundary
/// given by right Fox derivatives.
EquivariantComplex presentation_complex(const GroupPresentation& pres);

} // namespace scx::chain
