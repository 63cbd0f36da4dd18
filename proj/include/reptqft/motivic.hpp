#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "reptqft/laurent_poly.hpp"

namespace reptqft::motivic {

/// E-polynomial of a disjoint union of a closed and an open stratum.
LaurentPoly disjoint_union(const LaurentPoly& e1, const LaurentPoly& e2);

/// Complement of a closed stratum: e(X - Z) = e(X) - e(Z).
LaurentPoly open_complement(const LaurentPoly& total, const LaurentPoly& closed);

/// E-polynomial of the total space of a Zariski-locally-trivial fibration.
///
/// Only valid when the monodromy on the fiber cohomology is trivial. That is
/// an assertion of the caller and cannot be checked here; fibrations with
/// non-trivial monodromy (as appear for SL(2, C)) break this rule.
LaurentPoly fibration(const LaurentPoly& base_e, const LaurentPoly& fiber_e);

/// Named classes of standard strata.
///
/// Built-in entries: point, affine_line, torus, line_minus_two_points,
/// aff_group and aso_star. Extensions are registered during configuration;
/// afterwards the registry is only read.
class StratumRegistry {
 public:
  StratumRegistry();

  /// Throws Error(UnknownStratum).
  const LaurentPoly& at(std::string_view name) const;
  bool contains(std::string_view name) const;
  /// Adds or replaces an entry. Throws Error(InvalidArgument) for an empty
  /// name or an attempt to redefine `point`.
  void add(std::string name, LaurentPoly e);

  /// JSON array of [name, polynomial-text] pairs.
  void load_json(std::string_view text);
  void load_file(const std::filesystem::path& path);

  const std::map<std::string, LaurentPoly, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, LaurentPoly, std::less<>> entries_;
};

/// Built-in class lookup; throws Error(UnknownStratum).
LaurentPoly standard_class(std::string_view name);

}  // namespace reptqft::motivic
