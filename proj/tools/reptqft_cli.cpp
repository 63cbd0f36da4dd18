// Command-line front end over the reptqft C API.
//
// Exit codes: 0 success, 2 input error, 3 inconsistent datum (non-exact
// normalization), 4 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reptqft/reptqft.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDatum = 3;
constexpr int kExitVerify = 4;

struct PolyDeleter {
  void operator()(rtq_poly* p) const { rtq_poly_free(p); }
};
struct GroupDeleter {
  void operator()(rtq_group* g) const { rtq_group_free(g); }
};
struct DatumDeleter {
  void operator()(rtq_datum* d) const { rtq_datum_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { rtq_string_free(s); }
};
using PolyPtr = std::unique_ptr<rtq_poly, PolyDeleter>;
using GroupPtr = std::unique_ptr<rtq_group, GroupDeleter>;
using DatumPtr = std::unique_ptr<rtq_datum, DatumDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

/// Raised to unwind to main with a specific exit code.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(rtq_status s) { return s == RTQ_E_NON_EXACT_DIVISION ? kExitDatum : kExitInput; }

void check(rtq_status s, const std::string& context) {
  if (s != RTQ_OK) {
    throw Failure{exit_code_for(s), context + ": " + rtq_status_name(s) + ": " + rtq_last_error()};
  }
}

std::string render(const rtq_poly* p, rtq_poly_format format) {
  char* raw = nullptr;
  check(rtq_poly_to_string(p, format, &raw), "formatting polynomial");
  StringPtr s(raw);
  return s.get();
}

struct Config {
  std::string backend = "affc";
  std::string group_path;
  std::string datum_path;
  unsigned genus = 0;
  std::vector<std::string> punctures;
  std::string format = "q-text";
  bool reduce = false;
  unsigned max_genus = 2;
  unsigned max_punctures = 1;
  std::uint64_t budget = 1'000'000'000;
  std::string output;
};

rtq_poly_format poly_format(const std::string& name) {
  if (name == "uv-text") return RTQ_FORMAT_UV;
  if (name == "json") return RTQ_FORMAT_JSON;
  return RTQ_FORMAT_AUTO;
}

/// Puncture spec for finite groups: rep=IDX or elements=i,j,k.
struct FinitePuncture {
  std::string label;
  std::vector<std::size_t> elements;
  bool close = false;

  rtq_puncture view() const { return {label.c_str(), elements.data(), elements.size(), close ? 1 : 0}; }
};

std::vector<std::size_t> parse_indices(const std::string& text, const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kExitInput, "bad element index '" + item + "' in --puncture " + spec};
    }
  }
  if (out.empty()) throw Failure{kExitInput, "empty element list in --puncture " + spec};
  return out;
}

std::vector<FinitePuncture> finite_punctures(const std::vector<std::string>& specs) {
  std::vector<FinitePuncture> out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    FinitePuncture p;
    p.label = "p" + std::to_string(i + 1);
    if (spec.rfind("rep=", 0) == 0) {
      p.elements = parse_indices(spec.substr(4), spec);
      if (p.elements.size() != 1) throw Failure{kExitInput, "rep= takes a single element: " + spec};
      p.close = true;
    } else if (spec.rfind("elements=", 0) == 0) {
      p.elements = parse_indices(spec.substr(9), spec);
    } else {
      throw Failure{kExitInput, "puncture spec must be rep=IDX or elements=i,j,k: " + spec};
    }
    out.push_back(std::move(p));
  }
  return out;
}

GroupPtr load_group(const Config& cfg) {
  if (cfg.group_path.empty()) throw Failure{kExitInput, "--group is required for the finite backend"};
  rtq_group* g = nullptr;
  check(rtq_group_load(cfg.group_path.c_str(), &g), "loading " + cfg.group_path);
  return GroupPtr(g);
}

/// Datum and the puncture labels to evaluate with.
struct Prepared {
  DatumPtr datum;
  std::vector<std::string> labels;
};

Prepared prepare(const Config& cfg) {
  Prepared out;
  rtq_datum* d = nullptr;
  if (cfg.backend == "affc") {
    check(rtq_datum_affc(&d), "building Aff(C) datum");
    out.labels = cfg.punctures;
  } else if (cfg.backend == "custom") {
    if (cfg.datum_path.empty()) throw Failure{kExitInput, "--datum is required for the custom backend"};
    check(rtq_datum_load(cfg.datum_path.c_str(), &d), "loading " + cfg.datum_path);
    out.labels = cfg.punctures;
  } else {
    auto group = load_group(cfg);
    const auto punctures = finite_punctures(cfg.punctures);
    std::vector<rtq_puncture> views;
    for (const auto& p : punctures) {
      views.push_back(p.view());
      out.labels.push_back(p.label);
    }
    check(rtq_datum_from_group(group.get(), views.data(), views.size(), cfg.reduce ? 1 : 0, &d),
          "building finite-group datum");
  }
  out.datum.reset(d);
  return out;
}

PolyPtr epoly(const rtq_datum* d, unsigned genus, const std::vector<std::string>& labels, std::size_t p_tubes,
              rtq_status* status) {
  std::vector<const char*> raw;
  for (const auto& l : labels) raw.push_back(l.c_str());
  rtq_poly* p = nullptr;
  *status = rtq_epoly(d, genus, raw.data(), raw.size(), p_tubes, &p);
  return PolyPtr(p);
}

std::string spec_string(unsigned genus, const std::vector<std::string>& labels) {
  std::string s = "genus=" + std::to_string(genus) + " punctures=[";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "]";
}

// ---------------------------------------------------------------------------

int cmd_compute(const Config& cfg) {
  auto prepared = prepare(cfg);
  rtq_status s = RTQ_OK;
  auto result = epoly(prepared.datum.get(), cfg.genus, prepared.labels, 0, &s);
  check(s, "evaluating " + spec_string(cfg.genus, prepared.labels));
  std::cout << render(result.get(), poly_format(cfg.format)) << '\n';
  return kExitOk;
}

class Report {
 public:
  void pass(const std::string& desc) { line(desc, "PASS"); }
  void skip(const std::string& desc) { line(desc, "SKIP"); }
  void fail(const std::string& desc, const std::string& counterexample) {
    line(desc, "FAIL");
    ++failed_;
    if (first_failure_.empty()) first_failure_ = counterexample;
  }

  int finish() const {
    std::cout << total_ << " checks: " << total_ - failed_ - skipped_ << " passed, " << failed_ << " failed, "
              << skipped_ << " skipped\n";
    if (failed_ > 0) {
      std::cout << "first counterexample: " << first_failure_ << '\n';
      return kExitVerify;
    }
    return kExitOk;
  }

 private:
  void line(const std::string& desc, const char* verdict) {
    ++total_;
    if (verdict[0] == 'S') ++skipped_;
    std::cout << "CHECK " << desc << " ... " << verdict << '\n';
  }

  int total_ = 0;
  int failed_ = 0;
  int skipped_ = 0;
  std::string first_failure_;
};

int verify_affc(const Config& cfg) {
  Report report;
  DatumPtr datum;
  {
    rtq_datum* d = nullptr;
    check(rtq_datum_affc(&d), "building Aff(C) datum");
    datum.reset(d);
  }
  for (unsigned g = 1; g <= cfg.max_genus; ++g) {
    rtq_status s = RTQ_OK;
    auto engine = epoly(datum.get(), g, {}, 0, &s);
    const std::string engine_text = s == RTQ_OK ? render(engine.get(), RTQ_FORMAT_AUTO) : rtq_last_error();

    rtq_poly* raw = nullptr;
    check(rtq_affc_closed_form(g, &raw), "closed form");
    PolyPtr closed(raw);
    const std::string desc = "affc genus=" + std::to_string(g);
    if (s == RTQ_OK && rtq_poly_equal(engine.get(), closed.get())) {
      report.pass(desc + " engine == closed form");
    } else {
      report.fail(desc + " engine == closed form",
                  spec_string(g, {}) + ": engine " + engine_text + ", closed form " + render(closed.get(), RTQ_FORMAT_AUTO));
    }

    check(rtq_affc_xk(2 * g, &raw), "X_k recursion");
    PolyPtr xk(raw);
    if (s == RTQ_OK && rtq_poly_equal(engine.get(), xk.get())) {
      report.pass(desc + " engine == e(X_" + std::to_string(2 * g) + ")");
    } else {
      report.fail(desc + " engine == e(X_" + std::to_string(2 * g) + ")",
                  spec_string(g, {}) + ": engine " + engine_text + ", recursion " + render(xk.get(), RTQ_FORMAT_AUTO));
    }
  }
  return report.finish();
}

int verify_finite(const Config& cfg) {
  auto group = load_group(cfg);
  Report report;

  // Either the user's punctures, or every class label tuple up to max_punctures.
  std::vector<FinitePuncture> labelled;
  std::vector<std::vector<std::size_t>> specs;  // indices into labelled
  if (!cfg.punctures.empty()) {
    labelled = finite_punctures(cfg.punctures);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < labelled.size(); ++i) all.push_back(i);
    specs.push_back(all);
  } else {
    const std::size_t k = rtq_group_class_count(group.get());
    for (std::size_t c = 0; c < k; ++c) {
      rtq_class_info info{};
      check(rtq_group_class_info(group.get(), c, &info), "class info");
      labelled.push_back({"c" + std::to_string(c), {info.representative}, true});
    }
    std::vector<std::vector<std::size_t>> frontier{{}};
    specs.push_back({});
    for (unsigned s = 1; s <= cfg.max_punctures; ++s) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& prefix : frontier) {
        for (std::size_t c = 0; c < k; ++c) {
          auto spec = prefix;
          spec.push_back(c);
          next.push_back(spec);
        }
      }
      specs.insert(specs.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  std::vector<rtq_puncture> views;
  for (const auto& p : labelled) views.push_back(p.view());
  rtq_datum* d = nullptr;
  check(rtq_datum_from_group(group.get(), views.data(), views.size(), cfg.reduce ? 1 : 0, &d),
        "building finite-group datum");
  DatumPtr datum(d);

  for (unsigned g = 0; g <= cfg.max_genus; ++g) {
    for (const auto& spec : specs) {
      std::vector<std::string> labels;
      std::vector<rtq_puncture> chosen;
      for (auto i : spec) {
        labels.push_back(labelled[i].label);
        chosen.push_back(views[i]);
      }
      const std::string desc = "finite " + spec_string(g, labels);
      std::uint64_t count = 0;
      const rtq_status bs = rtq_brute_force_count(group.get(), g, chosen.data(), chosen.size(), cfg.budget, &count);
      if (bs == RTQ_E_BUDGET_EXCEEDED) {
        report.skip(desc + " (oracle budget exceeded)");
        continue;
      }
      check(bs, "brute-force oracle");
      rtq_status es = RTQ_OK;
      auto engine = epoly(datum.get(), g, labels, 0, &es);
      rtq_poly* raw = nullptr;
      check(rtq_poly_from_int(static_cast<std::int64_t>(count), &raw), "oracle value");
      PolyPtr expected(raw);
      if (es == RTQ_OK && rtq_poly_equal(engine.get(), expected.get())) {
        report.pass(desc + " engine == oracle (" + std::to_string(count) + ")");
      } else {
        const std::string got = es == RTQ_OK ? render(engine.get(), RTQ_FORMAT_AUTO) : rtq_last_error();
        report.fail(desc + " engine == oracle", desc + ": engine " + got + ", oracle " + std::to_string(count));
      }
    }
  }
  return report.finish();
}

int verify_custom(const Config& cfg) {
  auto prepared = prepare(cfg);
  const rtq_datum* d = prepared.datum.get();
  Report report;
  for (unsigned g = 0; g <= cfg.max_genus; ++g) {
    const std::string where = spec_string(g, prepared.labels);
    rtq_status s = RTQ_OK;
    auto value = epoly(d, g, prepared.labels, 0, &s);
    if (s != RTQ_OK) {
      report.fail("custom " + where + " normalization is exact", where + ": " + rtq_last_error());
      continue;
    }
    report.pass("custom " + where + " normalization is exact");

    if (g == 0 && prepared.labels.empty()) {
      rtq_poly* raw = nullptr;
      check(rtq_poly_from_int(1, &raw), "constant");
      PolyPtr one(raw);
      if (rtq_poly_equal(value.get(), one.get())) {
        report.pass("custom " + where + " sphere == 1");
      } else {
        report.fail("custom " + where + " sphere == 1", where + ": got " + render(value.get(), RTQ_FORMAT_AUTO));
      }
    }

    if (prepared.labels.empty()) {
      rtq_poly* raw = nullptr;
      if (rtq_datum_reference(d, g, &raw) == RTQ_OK) {
        PolyPtr expected(raw);
        if (rtq_poly_equal(value.get(), expected.get())) {
          report.pass("custom " + where + " == expected");
        } else {
          report.fail("custom " + where + " == expected", where + ": got " + render(value.get(), RTQ_FORMAT_AUTO) +
                                                              ", expected " + render(expected.get(), RTQ_FORMAT_AUTO));
        }
      }
    }

    if (rtq_datum_has_identity_tube(d)) {
      rtq_status ps = RTQ_OK;
      auto with_p = epoly(d, g, prepared.labels, 1, &ps);
      if (ps == RTQ_OK && rtq_poly_equal(value.get(), with_p.get())) {
        report.pass("custom " + where + " invariant under P insertion");
      } else {
        const std::string got = ps == RTQ_OK ? render(with_p.get(), RTQ_FORMAT_AUTO) : rtq_last_error();
        report.fail("custom " + where + " invariant under P insertion", where + " with one P tube: " + got);
      }
    }
  }
  return report.finish();
}

int cmd_verify(const Config& cfg) {
  if (cfg.backend == "affc") return verify_affc(cfg);
  if (cfg.backend == "custom") return verify_custom(cfg);
  return verify_finite(cfg);
}

int cmd_classes(const Config& cfg) {
  auto group = load_group(cfg);
  const std::size_t k = rtq_group_class_count(group.get());
  std::cout << "order " << rtq_group_order(group.get()) << ", " << k << " conjugacy classes\n";
  std::cout << "class  representative  size  centralizer  members\n";
  for (std::size_t c = 0; c < k; ++c) {
    rtq_class_info info{};
    check(rtq_group_class_info(group.get(), c, &info), "class info");
    std::vector<std::size_t> members(info.size);
    std::size_t count = 0;
    check(rtq_group_class_members(group.get(), c, members.data(), members.size(), &count), "class members");
    std::cout << c << "  " << info.representative << "  " << info.size << "  " << info.centralizer_order << "  ";
    for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? "," : "") << members[i];
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_export(const Config& cfg) {
  auto prepared = prepare(cfg);
  char* raw = nullptr;
  check(rtq_datum_to_json(prepared.datum.get(), &raw), "serializing datum");
  StringPtr text(raw);
  if (cfg.output.empty()) {
    std::cout << text.get() << '\n';
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw Failure{kExitInput, "cannot write " + cfg.output};
    out << text.get() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E-polynomials of representation varieties of surfaces via tube transfer matrices"};
  app.require_subcommand(1);
  Config cfg;

  const std::vector<std::string> backends{"finite", "affc", "custom"};
  auto add_backend = [&](CLI::App* sub) {
    sub->add_option("--backend", cfg.backend, "finite | affc | custom")
        ->check(CLI::IsMember(backends))
        ->capture_default_str();
    sub->add_option("--group", cfg.group_path, "group JSON file (finite backend)");
    sub->add_option("--datum", cfg.datum_path, "datum JSON file (custom backend)");
    sub->add_option("--puncture", cfg.punctures,
                    "puncture: rep=IDX or elements=i,j,k (finite), a datum label (custom); repeatable");
    sub->add_flag("--reduce", cfg.reduce, "use class-reduced coordinates (finite backend)");
  };

  auto* compute = app.add_subcommand("compute", "print the E-polynomial of a decorated surface");
  add_backend(compute);
  compute->add_option("--genus", cfg.genus, "surface genus")->required();
  compute->add_option("--format", cfg.format, "q-text | uv-text | json")
      ->check(CLI::IsMember({"q-text", "uv-text", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "compare the engine against independent oracles");
  add_backend(verify);
  verify->add_option("--max-genus", cfg.max_genus, "largest genus checked")->capture_default_str();
  verify->add_option("--max-punctures", cfg.max_punctures, "longest class tuple (finite, no --puncture)")
      ->capture_default_str();
  verify->add_option("--budget", cfg.budget, "brute-force oracle budget (tuples)")->capture_default_str();

  auto* classes = app.add_subcommand("classes", "list conjugacy classes of a finite group");
  classes->add_option("--group", cfg.group_path, "group JSON file")->required();

  auto* exporter = app.add_subcommand("export-datum", "write a datum in the JSON datum format");
  add_backend(exporter);
  exporter->add_option("--output,-o", cfg.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*classes) return cmd_classes(cfg);
    return cmd_export(cfg);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
}
