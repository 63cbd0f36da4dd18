#include "reptqft/reptqft.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "reptqft/affc.hpp"
#include "reptqft/error.hpp"
#include "reptqft/finite_group.hpp"
#include "reptqft/poly_json.hpp"
#include "reptqft/tqft.hpp"

struct rtq_poly {
  reptqft::LaurentPoly value;
};

struct rtq_group {
  reptqft::FiniteGroup value;
};

struct rtq_datum {
  reptqft::TqftDatum value;
};

namespace {

thread_local std::string last_error;

rtq_status status_of(reptqft::ErrorKind kind) {
  using reptqft::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse: return RTQ_E_PARSE;
    case ErrorKind::Io: return RTQ_E_IO;
    case ErrorKind::InvalidArgument: return RTQ_E_INVALID_ARGUMENT;
    case ErrorKind::NonExactDivision: return RTQ_E_NON_EXACT_DIVISION;
    case ErrorKind::ZeroBase: return RTQ_E_ZERO_BASE;
    case ErrorKind::UnknownStratum: return RTQ_E_UNKNOWN_STRATUM;
    case ErrorKind::UnknownPunctureLabel: return RTQ_E_UNKNOWN_PUNCTURE;
    case ErrorKind::InvalidDatum: return RTQ_E_INVALID_DATUM;
    case ErrorKind::NotAGroup: return RTQ_E_NOT_A_GROUP;
    case ErrorKind::GroupTooLarge: return RTQ_E_GROUP_TOO_LARGE;
    case ErrorKind::NotConjugationClosed: return RTQ_E_NOT_CONJUGATION_CLOSED;
    case ErrorKind::BudgetExceeded: return RTQ_E_BUDGET_EXCEEDED;
  }
  return RTQ_E_INTERNAL;
}

rtq_status fail(rtq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
rtq_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const reptqft::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RTQ_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RTQ_E_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define RTQ_REQUIRE(cond)                                                   \
  do {                                                                      \
    if (!(cond)) return fail(RTQ_E_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

std::vector<reptqft::ConjugationClosedSet> subsets(const reptqft::FiniteGroup& group, const rtq_puncture* punctures,
                                                   size_t n) {
  std::vector<reptqft::ConjugationClosedSet> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& p = punctures[i];
    if (p.elements == nullptr && p.count > 0) {
      throw reptqft::Error(reptqft::ErrorKind::InvalidArgument, "puncture with null element list");
    }
    std::vector<reptqft::Element> elems;
    for (size_t k = 0; k < p.count; ++k) elems.push_back(group.input_label(p.elements[k]));
    out.push_back(p.close_under_conjugation ? reptqft::ConjugationClosedSet::closure(group, elems)
                                            : reptqft::ConjugationClosedSet::validated(group, std::move(elems)));
  }
  return out;
}

}  // namespace

extern "C" {

const char* rtq_last_error(void) { return last_error.c_str(); }

const char* rtq_status_name(rtq_status status) {
  switch (status) {
    case RTQ_OK: return "OK";
    case RTQ_E_PARSE: return "ParseError";
    case RTQ_E_IO: return "IoError";
    case RTQ_E_INVALID_ARGUMENT: return "InvalidArgument";
    case RTQ_E_NON_EXACT_DIVISION: return "NonExactDivision";
    case RTQ_E_ZERO_BASE: return "ZeroBase";
    case RTQ_E_UNKNOWN_STRATUM: return "UnknownStratum";
    case RTQ_E_UNKNOWN_PUNCTURE: return "UnknownPunctureLabel";
    case RTQ_E_INVALID_DATUM: return "InvalidDatum";
    case RTQ_E_NOT_A_GROUP: return "NotAGroup";
    case RTQ_E_GROUP_TOO_LARGE: return "GroupTooLarge";
    case RTQ_E_NOT_CONJUGATION_CLOSED: return "NotConjugationClosed";
    case RTQ_E_BUDGET_EXCEEDED: return "BudgetExceeded";
    case RTQ_E_NOT_FOUND: return "NotFound";
    case RTQ_E_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

void rtq_string_free(char* s) { std::free(s); }

// --- polynomials ------------------------------------------------------------

rtq_status rtq_poly_parse(const char* text, rtq_poly** out) {
  RTQ_REQUIRE(text && out);
  return guarded([&] {
    *out = new rtq_poly{reptqft::LaurentPoly::parse(text)};
    return RTQ_OK;
  });
}

rtq_status rtq_poly_parse_json(const char* json, rtq_poly** out) {
  RTQ_REQUIRE(json && out);
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      return fail(RTQ_E_PARSE, e.what());
    }
    *out = new rtq_poly{reptqft::poly_from_json(j)};
    return RTQ_OK;
  });
}

rtq_status rtq_poly_from_int(int64_t value, rtq_poly** out) {
  RTQ_REQUIRE(out);
  return guarded([&] {
    *out = new rtq_poly{reptqft::LaurentPoly(mpz_class(std::to_string(value)))};
    return RTQ_OK;
  });
}

rtq_status rtq_poly_to_string(const rtq_poly* p, rtq_poly_format format, char** out) {
  RTQ_REQUIRE(p && out);
  return guarded([&] {
    switch (format) {
      case RTQ_FORMAT_AUTO: *out = copy_string(p->value.to_string(reptqft::PolyFormat::Auto)); break;
      case RTQ_FORMAT_UV: *out = copy_string(p->value.to_string(reptqft::PolyFormat::Uv)); break;
      case RTQ_FORMAT_JSON: *out = copy_string(reptqft::to_json(p->value).dump()); break;
      default: return fail(RTQ_E_INVALID_ARGUMENT, "unknown polynomial format");
    }
    return RTQ_OK;
  });
}

int rtq_poly_equal(const rtq_poly* a, const rtq_poly* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

void rtq_poly_free(rtq_poly* p) { delete p; }

// --- groups -----------------------------------------------------------------

rtq_status rtq_group_load(const char* path, rtq_group** out) {
  RTQ_REQUIRE(path && out);
  return guarded([&] {
    *out = new rtq_group{reptqft::load_group(path)};
    return RTQ_OK;
  });
}

rtq_status rtq_group_parse(const char* json, rtq_group** out) {
  RTQ_REQUIRE(json && out);
  return guarded([&] {
    *out = new rtq_group{reptqft::parse_group(json)};
    return RTQ_OK;
  });
}

size_t rtq_group_order(const rtq_group* g) { return g ? g->value.order() : 0; }

size_t rtq_group_class_count(const rtq_group* g) { return g ? g->value.classes().count() : 0; }

rtq_status rtq_group_class_info(const rtq_group* g, size_t class_index, rtq_class_info* out) {
  RTQ_REQUIRE(g && out);
  const auto& cls = g->value.classes();
  if (class_index >= cls.count()) return fail(RTQ_E_INVALID_ARGUMENT, "class index out of range");
  out->representative = g->value.input_label(cls.members[class_index].front());
  out->size = cls.members[class_index].size();
  out->centralizer_order = cls.centralizer_order[class_index];
  return RTQ_OK;
}

rtq_status rtq_group_class_members(const rtq_group* g, size_t class_index, size_t* buffer, size_t capacity,
                                   size_t* count) {
  RTQ_REQUIRE(g && count && (buffer || capacity == 0));
  const auto& cls = g->value.classes();
  if (class_index >= cls.count()) return fail(RTQ_E_INVALID_ARGUMENT, "class index out of range");
  const auto& members = cls.members[class_index];
  *count = members.size();
  for (size_t i = 0; i < members.size() && i < capacity; ++i) buffer[i] = g->value.input_label(members[i]);
  return RTQ_OK;
}

void rtq_group_free(rtq_group* g) { delete g; }

// --- data -------------------------------------------------------------------

rtq_status rtq_datum_from_group(const rtq_group* g, const rtq_puncture* punctures, size_t n_punctures,
                                int class_reduce, rtq_datum** out) {
  RTQ_REQUIRE(g && out && (punctures || n_punctures == 0));
  return guarded([&] {
    const auto sets = subsets(g->value, punctures, n_punctures);
    reptqft::PunctureSubsets labelled;
    for (size_t i = 0; i < n_punctures; ++i) {
      if (punctures[i].label == nullptr) return fail(RTQ_E_INVALID_ARGUMENT, "puncture without a label");
      if (!labelled.emplace(punctures[i].label, sets[i]).second) {
        return fail(RTQ_E_INVALID_ARGUMENT, std::string("duplicate puncture label '") + punctures[i].label + "'");
      }
    }
    auto datum = reptqft::to_tqft_datum(g->value, labelled);
    if (class_reduce) datum = reptqft::class_reduce(datum, g->value);
    *out = new rtq_datum{std::move(datum)};
    return RTQ_OK;
  });
}

rtq_status rtq_datum_affc(rtq_datum** out) {
  RTQ_REQUIRE(out);
  return guarded([&] {
    *out = new rtq_datum{reptqft::affc::affc_datum()};
    return RTQ_OK;
  });
}

rtq_status rtq_datum_load(const char* path, rtq_datum** out) {
  RTQ_REQUIRE(path && out);
  return guarded([&] {
    *out = new rtq_datum{reptqft::load_datum(path)};
    return RTQ_OK;
  });
}

rtq_status rtq_datum_parse(const char* json, rtq_datum** out) {
  RTQ_REQUIRE(json && out);
  return guarded([&] {
    *out = new rtq_datum{reptqft::parse_datum(json)};
    return RTQ_OK;
  });
}

rtq_status rtq_datum_to_json(const rtq_datum* d, char** out) {
  RTQ_REQUIRE(d && out);
  return guarded([&] {
    *out = copy_string(reptqft::to_json(d->value).dump(2));
    return RTQ_OK;
  });
}

size_t rtq_datum_rank(const rtq_datum* d) { return d ? d->value.rank() : 0; }

int rtq_datum_has_identity_tube(const rtq_datum* d) { return d && d->value.identity_tube().has_value(); }

rtq_status rtq_datum_reference(const rtq_datum* d, unsigned genus, rtq_poly** out) {
  RTQ_REQUIRE(d && out);
  const auto& ref = d->value.reference();
  auto it = ref.find(genus);
  if (it == ref.end()) return fail(RTQ_E_NOT_FOUND, "no reference value for genus " + std::to_string(genus));
  return guarded([&] {
    *out = new rtq_poly{it->second};
    return RTQ_OK;
  });
}

void rtq_datum_free(rtq_datum* d) { delete d; }

rtq_status rtq_epoly(const rtq_datum* d, unsigned genus, const char* const* labels, size_t n_labels,
                     size_t identity_tubes, rtq_poly** out) {
  RTQ_REQUIRE(d && out && (labels || n_labels == 0));
  return guarded([&] {
    reptqft::SurfaceSpec spec;
    spec.genus = genus;
    for (size_t i = 0; i < n_labels; ++i) {
      if (labels[i] == nullptr) return fail(RTQ_E_INVALID_ARGUMENT, "null puncture label");
      spec.punctures.emplace_back(labels[i]);
    }
    const auto word = reptqft::insert_identity_tubes(reptqft::assemble_word(spec), identity_tubes);
    *out = new rtq_poly{reptqft::evaluate_normalized(d->value, word)};
    return RTQ_OK;
  });
}

// --- oracles ----------------------------------------------------------------

rtq_status rtq_brute_force_count(const rtq_group* g, unsigned genus, const rtq_puncture* punctures,
                                 size_t n_punctures, uint64_t budget, uint64_t* out) {
  RTQ_REQUIRE(g && out && (punctures || n_punctures == 0));
  return guarded([&] {
    *out = reptqft::brute_force_count(g->value, genus, subsets(g->value, punctures, n_punctures), budget);
    return RTQ_OK;
  });
}

rtq_status rtq_affc_closed_form(unsigned genus, rtq_poly** out) {
  RTQ_REQUIRE(out);
  return guarded([&] {
    *out = new rtq_poly{reptqft::affc::affc_closed_form(genus)};
    return RTQ_OK;
  });
}

rtq_status rtq_affc_xk(unsigned k, rtq_poly** out) {
  RTQ_REQUIRE(out);
  return guarded([&] {
    *out = new rtq_poly{reptqft::affc::xk_epoly(k)};
    return RTQ_OK;
  });
}

}  // extern "C"
