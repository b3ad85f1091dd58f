#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bondlat {

/// Finite partial order on 0..n-1 stored as its full relation matrix
/// together with the cover relation.
class FinitePoset {
 public:
  /// Order generated by the given arcs (a, b) meaning a <= b. Transitive
  /// arcs are allowed; throws InputError on a directed cycle or an
  /// out-of-range element.
  static FinitePoset from_arcs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

  /// Throws InputError unless the matrix is reflexive, antisymmetric and
  /// transitive.
  static FinitePoset from_relation(std::vector<std::vector<bool>> leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  const std::vector<std::vector<bool>>& relation() const { return leq_; }

  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_[a]; }
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  FinitePoset dual() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// Maximal elements among the common lower bounds of the set; for the
  /// empty set these are the maximal elements of the poset.
  std::vector<std::size_t> maximal_lower_bounds(std::span<const std::size_t> set) const;

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

 private:
  FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::pair<std::size_t, std::size_t>> covers);

  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> down_size_;
};

}  // namespace bondlat
