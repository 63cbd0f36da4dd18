#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reptqft/tqft.hpp"

namespace reptqft {

using Element = std::uint32_t;
/// Image list: p[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultMaxGroupOrder = 10'000;
inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000'000;

struct ConjugacyClasses {
  std::vector<std::size_t> class_of;          // per element
  std::vector<std::vector<Element>> members;  // sorted; class 0 is {identity}
  std::vector<std::uint64_t> centralizer_order;

  std::size_t count() const noexcept { return members.size(); }
};

/// Finite group given by its Cayley table. The identity is always element 0.
class FiniteGroup {
 public:
  /// Validates the group axioms; associativity is checked exhaustively up to
  /// order 64 and on 10^5 random triples above. The identity is swapped with
  /// label 0 if necessary (see input_label). Throws Error(NotAGroup) with a
  /// witness.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<std::size_t>>& table);

  /// Closure of the generators under composition, (x*y)[i] = x[y[i]].
  /// Throws Error(GroupTooLarge) past `max_order` elements.
  static FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                                 std::size_t max_order = kDefaultMaxGroupOrder);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element x, Element y) const noexcept { return table_[std::size_t{x} * order_ + y]; }
  Element inverse(Element x) const noexcept { return inverse_[x]; }
  Element conjugate(Element h, Element x) const noexcept { return mul(mul(h, x), inverse(h)); }
  Element commutator(Element a, Element b) const noexcept { return mul(mul(a, b), mul(inverse(a), inverse(b))); }
  bool is_abelian() const noexcept;

  const ConjugacyClasses& classes() const noexcept { return classes_; }

  /// Maps a label of the ingested table to the internal element (and back;
  /// the relabeling is an involution).
  Element input_label(std::size_t label) const;
  /// Permutation realizing each element, when built from generators.
  const std::vector<Permutation>& permutations() const noexcept { return permutations_; }

 private:
  FiniteGroup() = default;
  void compute_derived();

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> relabel_;
  std::vector<Permutation> permutations_;
  ConjugacyClasses classes_;
};

/// JSON group file: {"table": [[...]]} or {"degree": d, "generators": [[...]]}.
FiniteGroup group_from_json(const nlohmann::json& j, std::size_t max_order = kDefaultMaxGroupOrder);
FiniteGroup parse_group(std::string_view text, std::size_t max_order = kDefaultMaxGroupOrder);
FiniteGroup load_group(const std::filesystem::path& path, std::size_t max_order = kDefaultMaxGroupOrder);

/// Subset of group elements closed under conjugation, kept sorted.
class ConjugationClosedSet {
 public:
  /// Throws Error(NotConjugationClosed) or Error(InvalidArgument) for
  /// out-of-range or empty input.
  static ConjugationClosedSet validated(const FiniteGroup& group, std::vector<Element> elements);
  /// Union of the classes of `elements`.
  static ConjugationClosedSet closure(const FiniteGroup& group, const std::vector<Element>& elements);
  static ConjugationClosedSet conjugacy_class(const FiniteGroup& group, std::size_t class_index);

  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::vector<Element> elements_;
};

/// Row-major n x n matrix of counts, column g = image of Q_g.
class CountMatrix {
 public:
  explicit CountMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint64_t& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  std::uint64_t operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  PolyMatrix to_poly() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> data_;
};

/// c(k) = #{(g1, g2) : [g1, g2] = k}.
std::vector<std::uint64_t> commutator_distribution(const FiniteGroup& group);

/// M[a][g] = #{(g1, g2, h) : h g [g1, g2] h^-1 = a}, via the commutator
/// distribution in O(n^3).
CountMatrix genus_matrix(const FiniteGroup& group);

/// M[a][g] = #{(g1, h) in G x lambda : g1 g h g1^-1 = a}.
CountMatrix puncture_matrix(const FiniteGroup& group, const ConjugationClosedSet& lambda);

/// M[a][g] = #{h : h g h^-1 = a}.
CountMatrix tube_matrix_P(const FiniteGroup& group);

using PunctureSubsets = std::map<std::string, ConjugationClosedSet, std::less<>>;

/// Rank-n datum on the point classes Q_g: e_G = n, disc_in = Q_1, disc_out =
/// projection onto Q_1.
TqftDatum to_tqft_datum(const FiniteGroup& group, const PunctureSubsets& punctures = {});

/// Restricts a datum from to_tqft_datum to class-function coordinates: basis
/// vector C is the sum of Q_x over the class C. The reduced datum has rank
/// equal to the number of conjugacy classes and the same normalized values.
TqftDatum class_reduce(const TqftDatum& full, const FiniteGroup& group);

/// #{(a_1, b_1, ..., a_g, b_g, c_1, ..., c_s) : prod [a_i, b_i] prod c_j = 1,
/// c_j in lambda_j} by direct enumeration. Throws Error(BudgetExceeded) when
/// n^{2g} prod |lambda_j| exceeds `budget`.
std::uint64_t brute_force_count(const FiniteGroup& group, unsigned genus,
                                const std::vector<ConjugationClosedSet>& punctures,
                                std::uint64_t budget = kDefaultOracleBudget);

}  // namespace reptqft
