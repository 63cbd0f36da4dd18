#include "reptqft/poly_json.hpp"

#include "reptqft/error.hpp"

namespace reptqft {

nlohmann::json to_json(const LaurentPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    out.push_back({t.exp.u, t.exp.v, t.coeff.get_str()});
  }
  return out;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "polynomial JSON must be an array of [a, b, coefficient]");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw Error(ErrorKind::Parse, "bad polynomial term: " + entry.dump());
    }
    mpz_class c;
    if (entry[2].is_string()) {
      if (c.set_str(entry[2].get<std::string>(), 10) != 0) {
        throw Error(ErrorKind::Parse, "bad coefficient: " + entry[2].dump());
      }
    } else if (entry[2].is_number_integer()) {
      c = mpz_class(std::to_string(entry[2].get<std::int64_t>()));
    } else {
      throw Error(ErrorKind::Parse, "bad coefficient: " + entry[2].dump());
    }
    terms.push_back({{entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>()}, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace reptqft
