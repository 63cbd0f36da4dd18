#include "reptqft/motivic.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "reptqft/error.hpp"

namespace reptqft::motivic {

LaurentPoly disjoint_union(const LaurentPoly& e1, const LaurentPoly& e2) { return e1 + e2; }

LaurentPoly open_complement(const LaurentPoly& total, const LaurentPoly& closed) {
  return total - closed;
}

LaurentPoly fibration(const LaurentPoly& base_e, const LaurentPoly& fiber_e) {
  return base_e * fiber_e;
}

StratumRegistry::StratumRegistry() {
  const LaurentPoly q = LaurentPoly::q();
  entries_.emplace("point", LaurentPoly(1));
  entries_.emplace("affine_line", q);
  entries_.emplace("torus", q - 1);
  entries_.emplace("line_minus_two_points", q - 2);
  // Aff(C) = C* x C as a variety.
  entries_.emplace("aff_group", fibration(q - 1, q));
  // ASO(C) minus the identity: translations by a nonzero amount.
  entries_.emplace("aso_star", q - 1);
}

const LaurentPoly& StratumRegistry::at(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw Error(ErrorKind::UnknownStratum, "unknown stratum '" + std::string(name) + "'");
  }
  return it->second;
}

bool StratumRegistry::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

void StratumRegistry::add(std::string name, LaurentPoly e) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "stratum name must not be empty");
  if (name == "point" && e != LaurentPoly(1)) {
    throw Error(ErrorKind::InvalidArgument, "the class of a point is fixed to 1");
  }
  entries_.insert_or_assign(std::move(name), std::move(e));
}

void StratumRegistry::load_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("stratum registry: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorKind::Parse, "stratum registry must be an array of [name, polynomial]");
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string()) {
      throw Error(ErrorKind::Parse, "bad stratum entry: " + entry.dump());
    }
    add(entry[0].get<std::string>(), LaurentPoly::parse(entry[1].get<std::string>()));
  }
}

void StratumRegistry::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  load_json(buf.str());
}

LaurentPoly standard_class(std::string_view name) {
  static const StratumRegistry builtin;
  return builtin.at(name);
}

}  // namespace reptqft::motivic
