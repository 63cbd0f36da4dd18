#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "reptqft/laurent_poly.hpp"
#include "reptqft/poly_matrix.hpp"

namespace reptqft {

/// Finite-rank model of the tube operators on a submodule of K(MHM(G)).
///
/// Structural invariants are checked on construction and the object is
/// immutable afterwards:
///  - every matrix is rank x rank and both disc vectors have length rank;
///  - e_G is nonzero;
///  - disc_out . disc_in == 1;
///  - disc_out . P . disc_in == e_G when the identity tube is present.
/// Nothing ties a datum to an actual group; data loaded from files are only
/// checked structurally.
class TqftDatum {
 public:
  struct Parts {
    std::size_t rank = 0;
    LaurentPoly e_G;
    PolyMatrix genus_tube;
    std::map<std::string, PolyMatrix, std::less<>> puncture_tubes;
    std::optional<PolyMatrix> identity_tube;
    PolyVector disc_in;
    PolyVector disc_out;
    /// Optional known closed-surface values keyed by genus, used by `verify`.
    std::map<unsigned, LaurentPoly> reference;
  };

  /// Throws Error(InvalidDatum) naming the violated invariant.
  explicit TqftDatum(Parts parts);

  std::size_t rank() const noexcept { return parts_.rank; }
  const LaurentPoly& e_G() const noexcept { return parts_.e_G; }
  const PolyMatrix& genus_tube() const noexcept { return parts_.genus_tube; }
  const std::optional<PolyMatrix>& identity_tube() const noexcept { return parts_.identity_tube; }
  const std::map<std::string, PolyMatrix, std::less<>>& puncture_tubes() const noexcept {
    return parts_.puncture_tubes;
  }
  /// Throws Error(UnknownPunctureLabel).
  const PolyMatrix& puncture_tube(std::string_view label) const;
  const PolyVector& disc_in() const noexcept { return parts_.disc_in; }
  const PolyVector& disc_out() const noexcept { return parts_.disc_out; }
  const std::map<unsigned, LaurentPoly>& reference() const noexcept { return parts_.reference; }
  const Parts& parts() const noexcept { return parts_; }

 private:
  Parts parts_;
};

/// Closed genus-g surface with ordered parabolic punctures.
struct SurfaceSpec {
  unsigned genus = 0;
  std::vector<std::string> punctures;
};

enum class TubeKind { Genus, Identity, Puncture };

struct Tube {
  TubeKind kind = TubeKind::Genus;
  std::string label;  // puncture label; empty otherwise

  static Tube genus() { return {TubeKind::Genus, {}}; }
  static Tube identity() { return {TubeKind::Identity, {}}; }
  static Tube puncture(std::string label) { return {TubeKind::Puncture, std::move(label)}; }

  friend bool operator==(const Tube&, const Tube&) = default;
};

/// Tubes between the implicit cap (disc) and cup (co-disc), applied in order.
struct TubeWord {
  std::vector<Tube> tubes;

  std::size_t tube_count() const noexcept { return tubes.size(); }
  friend bool operator==(const TubeWord&, const TubeWord&) = default;
};

std::string to_string(const TubeWord& word);

/// [L x genus, punctures in listed order].
TubeWord assemble_word(const SurfaceSpec& spec);

/// Appends k identity tubes.
TubeWord insert_identity_tubes(TubeWord word, std::size_t k);

/// disc_out . M_t ... M_1 . disc_in, runs of equal tubes by matrix powering.
LaurentPoly evaluate_raw(const TqftDatum& datum, const TubeWord& word);

/// evaluate_raw divided exactly by e_G^{tube_count}.
LaurentPoly evaluate_normalized(const TqftDatum& datum, const TubeWord& word);

/// E-polynomial of the parabolic representation variety of `spec`.
/// Throws Error(NonExactDivision) for an inconsistent datum and
/// Error(UnknownPunctureLabel).
LaurentPoly epoly_rep_variety(const TqftDatum& datum, const SurfaceSpec& spec);

nlohmann::json to_json(const TqftDatum& datum);
TqftDatum datum_from_json(const nlohmann::json& j);
TqftDatum parse_datum(std::string_view text);
TqftDatum load_datum(const std::filesystem::path& path);

}  // namespace reptqft
