#include "reptqft/tqft.hpp"

#include <fstream>
#include <sstream>

#include "reptqft/error.hpp"

namespace reptqft {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidDatum, what); }

void check_square(const PolyMatrix& m, std::size_t rank, const std::string& name) {
  if (m.rows() != rank || m.cols() != rank) {
    invalid(name + " must be " + std::to_string(rank) + "x" + std::to_string(rank) + ", got " +
            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

TqftDatum::TqftDatum(Parts parts) : parts_(std::move(parts)) {
  const std::size_t r = parts_.rank;
  if (r == 0) invalid("rank must be positive");
  if (parts_.e_G.is_zero()) invalid("e_G must be nonzero");
  check_square(parts_.genus_tube, r, "genus tube L");
  if (parts_.identity_tube) check_square(*parts_.identity_tube, r, "identity tube P");
  for (const auto& [label, m] : parts_.puncture_tubes) {
    if (label.empty()) invalid("puncture labels must be nonempty");
    check_square(m, r, "puncture tube '" + label + "'");
  }
  if (parts_.disc_in.size() != r) invalid("disc_in must have length " + std::to_string(r));
  if (parts_.disc_out.size() != r) invalid("disc_out must have length " + std::to_string(r));
  const LaurentPoly sphere = dot(parts_.disc_out, parts_.disc_in);
  if (sphere != LaurentPoly(1)) {
    invalid("sphere normalization violated: disc_out . disc_in = " + sphere.to_string() + ", expected 1");
  }
  if (parts_.identity_tube) {
    const LaurentPoly p = dot(parts_.disc_out, *parts_.identity_tube * parts_.disc_in);
    if (p != parts_.e_G) {
      invalid("identity tube inconsistent: disc_out . P . disc_in = " + p.to_string() + ", expected e_G = " +
              parts_.e_G.to_string());
    }
  }
}

const PolyMatrix& TqftDatum::puncture_tube(std::string_view label) const {
  auto it = parts_.puncture_tubes.find(label);
  if (it == parts_.puncture_tubes.end()) {
    throw Error(ErrorKind::UnknownPunctureLabel, "unknown puncture label '" + std::string(label) + "'");
  }
  return it->second;
}

std::string to_string(const TubeWord& word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.tubes.size(); ++i) {
    if (i) out += ", ";
    switch (word.tubes[i].kind) {
      case TubeKind::Genus: out += "L"; break;
      case TubeKind::Identity: out += "P"; break;
      case TubeKind::Puncture: out += "L_" + word.tubes[i].label; break;
    }
  }
  return out + "]";
}

TubeWord assemble_word(const SurfaceSpec& spec) {
  TubeWord word;
  word.tubes.reserve(spec.genus + spec.punctures.size());
  word.tubes.insert(word.tubes.end(), spec.genus, Tube::genus());
  for (const auto& label : spec.punctures) word.tubes.push_back(Tube::puncture(label));
  return word;
}

TubeWord insert_identity_tubes(TubeWord word, std::size_t k) {
  word.tubes.insert(word.tubes.end(), k, Tube::identity());
  return word;
}

LaurentPoly evaluate_raw(const TqftDatum& datum, const TubeWord& word) {
  std::vector<const PolyMatrix*> matrices;
  matrices.reserve(word.tubes.size());
  for (const auto& tube : word.tubes) {
    switch (tube.kind) {
      case TubeKind::Genus: matrices.push_back(&datum.genus_tube()); break;
      case TubeKind::Puncture: matrices.push_back(&datum.puncture_tube(tube.label)); break;
      case TubeKind::Identity:
        if (!datum.identity_tube()) {
          throw Error(ErrorKind::InvalidArgument, "word contains P but the datum has no identity tube");
        }
        matrices.push_back(&*datum.identity_tube());
        break;
    }
  }

  PolyVector state = datum.disc_in();
  for (std::size_t i = 0; i < matrices.size();) {
    std::size_t j = i + 1;
    while (j < matrices.size() && matrices[j] == matrices[i]) ++j;
    const std::size_t run = j - i;
    state = run == 1 ? *matrices[i] * state : pow(*matrices[i], run) * state;
    i = j;
  }
  return dot(datum.disc_out(), state);
}

LaurentPoly evaluate_normalized(const TqftDatum& datum, const TubeWord& word) {
  const LaurentPoly raw = evaluate_raw(datum, word);
  try {
    return exact_div(raw, pow(datum.e_G(), word.tube_count()));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonExactDivision) throw;
    throw Error(ErrorKind::NonExactDivision, "inconsistent datum: normalizing word " + to_string(word) +
                                                 " by e_G^" + std::to_string(word.tube_count()) + " failed: " +
                                                 e.what());
  }
}

LaurentPoly epoly_rep_variety(const TqftDatum& datum, const SurfaceSpec& spec) {
  return evaluate_normalized(datum, assemble_word(spec));
}

// ---------------------------------------------------------------------------
// JSON datum files

namespace {

nlohmann::json matrix_json(const PolyMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_json(const PolyVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

LaurentPoly poly_field(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return LaurentPoly::parse(j.get<std::string>());
  if (j.is_number_integer()) return LaurentPoly(static_cast<long>(j.get<std::int64_t>()));
  throw Error(ErrorKind::Parse, where + ": expected a polynomial string");
}

PolyVector vector_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, where + ": expected an array");
  PolyVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(poly_field(j[i], where));
  return out;
}

PolyMatrix matrix_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, where + ": expected an array of rows");
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& row : j) rows.push_back(vector_field(row, where));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorKind::InvalidDatum, where + ": ragged matrix");
  }
  return PolyMatrix::from_rows(rows);
}

}  // namespace

nlohmann::json to_json(const TqftDatum& datum) {
  nlohmann::json j;
  j["rank"] = datum.rank();
  j["e_G"] = datum.e_G().to_string();
  j["L"] = matrix_json(datum.genus_tube());
  if (datum.identity_tube()) j["P"] = matrix_json(*datum.identity_tube());
  j["punctures"] = nlohmann::json::object();
  for (const auto& [label, m] : datum.puncture_tubes()) j["punctures"][label] = matrix_json(m);
  j["disc_in"] = vector_json(datum.disc_in());
  j["disc_out"] = vector_json(datum.disc_out());
  if (!datum.reference().empty()) {
    j["expected"] = nlohmann::json::object();
    for (const auto& [g, p] : datum.reference()) j["expected"][std::to_string(g)] = p.to_string();
  }
  return j;
}

TqftDatum datum_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "datum must be a JSON object");
  for (const char* key : {"rank", "e_G", "L", "disc_in", "disc_out"}) {
    if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("datum is missing '") + key + "'");
  }
  TqftDatum::Parts parts;
  if (!j["rank"].is_number_unsigned()) throw Error(ErrorKind::Parse, "rank must be a positive integer");
  parts.rank = j["rank"].get<std::size_t>();
  parts.e_G = poly_field(j["e_G"], "e_G");
  parts.genus_tube = matrix_field(j["L"], "L");
  if (j.contains("P") && !j["P"].is_null()) parts.identity_tube = matrix_field(j["P"], "P");
  if (j.contains("punctures")) {
    if (!j["punctures"].is_object()) throw Error(ErrorKind::Parse, "punctures must be an object");
    for (const auto& [label, m] : j["punctures"].items()) {
      parts.puncture_tubes.emplace(label, matrix_field(m, "punctures." + label));
    }
  }
  parts.disc_in = vector_field(j["disc_in"], "disc_in");
  parts.disc_out = vector_field(j["disc_out"], "disc_out");
  if (j.contains("expected")) {
    if (!j["expected"].is_object()) throw Error(ErrorKind::Parse, "expected must be an object");
    for (const auto& [key, p] : j["expected"].items()) {
      unsigned g = 0;
      try {
        std::size_t used = 0;
        g = static_cast<unsigned>(std::stoul(key, &used));
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "expected: keys must be genera, got '" + key + "'");
      }
      parts.reference.emplace(g, poly_field(p, "expected." + key));
    }
  }
  return TqftDatum(std::move(parts));
}

TqftDatum parse_datum(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("datum: ") + e.what());
  }
  return datum_from_json(j);
}

TqftDatum load_datum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open datum file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum(buf.str());
}

}  // namespace reptqft
