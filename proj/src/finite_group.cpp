#include "reptqft/finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

#include "parallel.hpp"
#include "reptqft/error.hpp"

namespace reptqft {

namespace {

[[noreturn]] void not_a_group(const std::string& what) { throw Error(ErrorKind::NotAGroup, what); }

std::string triple(std::size_t x, std::size_t y, std::size_t z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[y[i]];
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) not_a_group("empty Cayley table");
  if (n > std::numeric_limits<Element>::max()) not_a_group("Cayley table too large");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) not_a_group("Cayley table is not square: row " + std::to_string(r));
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        not_a_group("entry " + std::to_string(table[r][c]) + " at (" + std::to_string(r) + ", " +
                    std::to_string(c) + ") is out of range");
      }
    }
  }

  std::optional<std::size_t> e;
  for (std::size_t x = 0; x < n && !e; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) ok = table[x][y] == y && table[y][x] == y;
    if (ok) e = x;
  }
  if (!e) not_a_group("no identity element");

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) found = table[x][y] == *e && table[y][x] == *e;
    if (!found) not_a_group("element " + std::to_string(x) + " has no inverse");
  }

  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    if (table[table[x][y]][z] != table[x][table[y][z]]) {
      not_a_group("associativity fails for " + triple(x, y, z));
    }
  };
  if (n <= 64) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) check(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 100'000; ++i) check(pick(rng), pick(rng), pick(rng));
  }

  FiniteGroup g;
  g.order_ = n;
  g.relabel_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.relabel_[i] = static_cast<Element>(i);
  std::swap(g.relabel_[0], g.relabel_[*e]);
  g.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      g.table_[x * n + y] = g.relabel_[table[g.relabel_[x]][g.relabel_[y]]];
    }
  }
  g.compute_derived();
  return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                                     std::size_t max_order) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& p = generators[k];
    std::vector<bool> hit(degree, false);
    bool ok = p.size() == degree;
    for (std::size_t i = 0; ok && i < degree; ++i) {
      ok = p[i] < degree && !hit[p[i]];
      if (ok) hit[p[i]] = true;
    }
    if (!ok) {
      throw Error(ErrorKind::InvalidArgument,
                  "generator " + std::to_string(k) + " is not a permutation of degree " + std::to_string(degree));
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermutationHash> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation p = compose(gen, elements[head]);
      if (index.contains(p)) continue;
      if (elements.size() >= max_order) {
        throw Error(ErrorKind::GroupTooLarge,
                    "generated group exceeds the configured bound of " + std::to_string(max_order) + " elements");
      }
      index.emplace(p, static_cast<Element>(elements.size()));
      elements.push_back(std::move(p));
    }
  }

  const std::size_t n = elements.size();
  FiniteGroup g;
  g.order_ = n;
  g.relabel_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.relabel_[i] = static_cast<Element>(i);
  g.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) g.table_[x * n + y] = index.at(compose(elements[x], elements[y]));
  }
  g.permutations_ = std::move(elements);
  g.compute_derived();
  return g;
}

void FiniteGroup::compute_derived() {
  const std::size_t n = order_;
  inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul(static_cast<Element>(x), static_cast<Element>(y)) == 0) {
        inverse_[x] = static_cast<Element>(y);
        break;
      }
    }
  }

  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  classes_.class_of.assign(n, kUnassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (classes_.class_of[x] != kUnassigned) continue;
    const std::size_t idx = classes_.members.size();
    std::vector<Element> members;
    for (std::size_t h = 0; h < n; ++h) {
      const Element y = conjugate(static_cast<Element>(h), static_cast<Element>(x));
      if (classes_.class_of[y] == kUnassigned) {
        classes_.class_of[y] = idx;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.centralizer_order.push_back(n / members.size());
    classes_.members.push_back(std::move(members));
  }
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (table_[x * order_ + y] != table_[y * order_ + x]) return false;
  return true;
}

Element FiniteGroup::input_label(std::size_t label) const {
  if (label >= order_) {
    throw Error(ErrorKind::InvalidArgument,
                "element " + std::to_string(label) + " out of range for a group of order " + std::to_string(order_));
  }
  return relabel_[label];
}

// ---------------------------------------------------------------------------

FiniteGroup group_from_json(const nlohmann::json& j, std::size_t max_order) {
  try {
    if (j.contains("table")) {
      return FiniteGroup::from_cayley_table(j.at("table").get<std::vector<std::vector<std::size_t>>>());
    }
    if (j.contains("degree") && j.contains("generators")) {
      return FiniteGroup::from_permutation_generators(j.at("degree").get<std::size_t>(),
                                                      j.at("generators").get<std::vector<Permutation>>(), max_order);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("group file: ") + e.what());
  }
  throw Error(ErrorKind::Parse, "group file needs either \"table\" or \"degree\" and \"generators\"");
}

FiniteGroup parse_group(std::string_view text, std::size_t max_order) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("group file: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::Parse, "group file must be a JSON object");
  return group_from_json(j, max_order);
}

FiniteGroup load_group(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open group file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str(), max_order);
}

// ---------------------------------------------------------------------------

ConjugationClosedSet ConjugationClosedSet::validated(const FiniteGroup& group, std::vector<Element> elements) {
  if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "puncture subset must not be empty");
  for (auto x : elements) {
    if (x >= group.order()) throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(x) + " out of range");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto x : elements) {
    for (std::size_t h = 0; h < group.order(); ++h) {
      const Element y = group.conjugate(static_cast<Element>(h), x);
      if (!std::binary_search(elements.begin(), elements.end(), y)) {
        throw Error(ErrorKind::NotConjugationClosed, "subset is not closed under conjugation: " + std::to_string(h) +
                                                         " conjugates " + std::to_string(x) + " to " +
                                                         std::to_string(y));
      }
    }
  }
  ConjugationClosedSet s;
  s.elements_ = std::move(elements);
  return s;
}

ConjugationClosedSet ConjugationClosedSet::closure(const FiniteGroup& group, const std::vector<Element>& elements) {
  std::vector<Element> out;
  std::vector<bool> seen_class(group.classes().count(), false);
  for (auto x : elements) {
    if (x >= group.order()) throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(x) + " out of range");
    const std::size_t c = group.classes().class_of[x];
    if (seen_class[c]) continue;
    seen_class[c] = true;
    const auto& m = group.classes().members[c];
    out.insert(out.end(), m.begin(), m.end());
  }
  return validated(group, std::move(out));
}

ConjugationClosedSet ConjugationClosedSet::conjugacy_class(const FiniteGroup& group, std::size_t class_index) {
  if (class_index >= group.classes().count()) {
    throw Error(ErrorKind::InvalidArgument, "no conjugacy class " + std::to_string(class_index));
  }
  ConjugationClosedSet s;
  s.elements_ = group.classes().members[class_index];
  return s;
}

PolyMatrix CountMatrix::to_poly() const {
  PolyMatrix m(n_, n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (const auto x = (*this)(r, c); x != 0) m(r, c) = LaurentPoly(mpz_class(static_cast<unsigned long>(x)));
  return m;
}

std::vector<std::uint64_t> commutator_distribution(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ++c[group.commutator(static_cast<Element>(a), static_cast<Element>(b))];
  return c;
}

CountMatrix genus_matrix(const FiniteGroup& group) {
  const std::size_t n = group.order();
  const auto c = commutator_distribution(group);
  CountMatrix m(n);
  // h g [g1, g2] h^-1 = a  <=>  [g1, g2] = g^-1 h^-1 a h
  detail::parallel_for(n, [&](std::size_t g) {
    const Element g_inv = group.inverse(static_cast<Element>(g));
    for (std::size_t h = 0; h < n; ++h) {
      const Element left = group.mul(g_inv, group.inverse(static_cast<Element>(h)));
      for (std::size_t a = 0; a < n; ++a) {
        m(a, g) += c[group.mul(left, group.mul(static_cast<Element>(a), static_cast<Element>(h)))];
      }
    }
  });
  return m;
}

CountMatrix puncture_matrix(const FiniteGroup& group, const ConjugationClosedSet& lambda) {
  const std::size_t n = group.order();
  CountMatrix m(n);
  detail::parallel_for(n, [&](std::size_t g) {
    for (std::size_t g1 = 0; g1 < n; ++g1) {
      for (const Element h : lambda.elements()) {
        const Element inner = group.mul(static_cast<Element>(g), h);
        ++m(group.conjugate(static_cast<Element>(g1), inner), g);
      }
    }
  });
  return m;
}

CountMatrix tube_matrix_P(const FiniteGroup& group) {
  const std::size_t n = group.order();
  CountMatrix m(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) ++m(group.conjugate(static_cast<Element>(h), static_cast<Element>(g)), g);
  return m;
}

TqftDatum to_tqft_datum(const FiniteGroup& group, const PunctureSubsets& punctures) {
  const std::size_t n = group.order();
  TqftDatum::Parts parts;
  parts.rank = n;
  parts.e_G = LaurentPoly(static_cast<long>(n));
  parts.genus_tube = genus_matrix(group).to_poly();
  parts.identity_tube = tube_matrix_P(group).to_poly();
  for (const auto& [label, lambda] : punctures) {
    parts.puncture_tubes.emplace(label, puncture_matrix(group, lambda).to_poly());
  }
  parts.disc_in.assign(n, LaurentPoly());
  parts.disc_out.assign(n, LaurentPoly());
  parts.disc_in[group.identity()] = 1;
  parts.disc_out[group.identity()] = 1;
  return TqftDatum(std::move(parts));
}

TqftDatum class_reduce(const TqftDatum& full, const FiniteGroup& group) {
  const auto& cls = group.classes();
  if (full.rank() != group.order()) {
    throw Error(ErrorKind::InvalidArgument, "class_reduce expects a full-rank datum of rank " +
                                                std::to_string(group.order()) + ", got " + std::to_string(full.rank()));
  }
  const std::size_t k = cls.count();
  // Equivariant operators preserve class functions; the image of a class sum
  // is constant on each class, so read it off at a representative.
  auto reduce = [&](const PolyMatrix& m) {
    PolyMatrix r(k, k);
    for (std::size_t d = 0; d < k; ++d) {
      const Element rep = cls.members[d].front();
      for (std::size_t c = 0; c < k; ++c) {
        LaurentPoly sum;
        for (const Element x : cls.members[c]) sum += m(rep, x);
        r(d, c) = std::move(sum);
      }
    }
    return r;
  };

  TqftDatum::Parts parts;
  parts.rank = k;
  parts.e_G = full.e_G();
  parts.genus_tube = reduce(full.genus_tube());
  if (full.identity_tube()) parts.identity_tube = reduce(*full.identity_tube());
  for (const auto& [label, m] : full.puncture_tubes()) parts.puncture_tubes.emplace(label, reduce(m));
  const std::size_t id_class = cls.class_of[group.identity()];
  parts.disc_in.assign(k, LaurentPoly());
  parts.disc_out.assign(k, LaurentPoly());
  parts.disc_in[id_class] = 1;
  parts.disc_out[id_class] = 1;
  parts.reference = full.reference();
  return TqftDatum(std::move(parts));
}

std::uint64_t brute_force_count(const FiniteGroup& group, unsigned genus,
                                const std::vector<ConjugationClosedSet>& punctures, std::uint64_t budget) {
  const std::size_t n = group.order();
  long double cost = 1;
  for (unsigned i = 0; i < 2 * genus; ++i) cost *= static_cast<long double>(n);
  for (const auto& p : punctures) cost *= static_cast<long double>(p.size());
  if (cost > static_cast<long double>(budget)) {
    std::ostringstream os;
    os << "enumeration needs about " << static_cast<double>(cost) << " tuples, budget is " << budget;
    throw Error(ErrorKind::BudgetExceeded, os.str());
  }
  if (genus == 0 && punctures.empty()) return 1;

  std::vector<bool> last_member;
  if (!punctures.empty()) {
    last_member.assign(n, false);
    for (const Element x : punctures.back().elements()) last_member[x] = true;
  }
  const std::size_t slots = genus + punctures.size();

  // Slot i < genus is a commutator pair, the rest are puncture elements. The
  // final slot is solved against the partial product instead of enumerated.
  auto search = [&](auto&& self, std::size_t slot, Element prefix) -> std::uint64_t {
    if (slot + 1 == slots) {
      if (!punctures.empty()) return last_member[group.inverse(prefix)] ? 1 : 0;
      std::uint64_t hits = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (group.mul(prefix, group.commutator(static_cast<Element>(a), static_cast<Element>(b))) == 0) ++hits;
      return hits;
    }
    std::uint64_t total = 0;
    if (slot < genus) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          total += self(self, slot + 1,
                        group.mul(prefix, group.commutator(static_cast<Element>(a), static_cast<Element>(b))));
    } else {
      for (const Element c : punctures[slot - genus].elements()) total += self(self, slot + 1, group.mul(prefix, c));
    }
    return total;
  };

  if (slots == 1) return search(search, 0, group.identity());

  // Parallel over the outermost choice.
  std::vector<Element> outer;
  if (genus > 0) {
    outer.resize(n);
    for (std::size_t a = 0; a < n; ++a) outer[a] = static_cast<Element>(a);
  } else {
    outer = punctures.front().elements();
  }
  std::vector<std::uint64_t> partial(outer.size(), 0);
  detail::parallel_for(outer.size(), [&](std::size_t i) {
    if (genus > 0) {
      std::uint64_t sum = 0;
      for (std::size_t b = 0; b < n; ++b) sum += search(search, 1, group.commutator(outer[i], static_cast<Element>(b)));
      partial[i] = sum;
    } else {
      partial[i] = search(search, 1, outer[i]);
    }
  });
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return total;
}

}  // namespace reptqft
