#include "altpow/genset.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace altpow {

namespace {

// Base elements of A_5 used by the built-in constructions.
Perm a5_perm(char which) {
  switch (which) {
    case 'a': return Perm::parse_cycles("(1 2)(3 4)", 5);
    case 'b': return Perm::parse_cycles("(1 2 3 4 5)", 5);
    case 'c': return Perm::parse_cycles("(1 2 3)", 5);
    case 'd': return Perm::parse_cycles("(1 3 5)", 5);
    case 'e': return Perm::parse_cycles("(2 4 5)", 5);
    case 'f': return Perm::parse_cycles("(1 2 3 5 4)", 5);
    case 'g': return Perm::parse_cycles("(1 2 5 4 3)", 5);
    case 'h': return Perm::parse_cycles("(1 2 5 3 4)", 5);
    case 'i': return Perm::parse_cycles("(1 3 2 5 4)", 5);
    default: throw std::logic_error("unknown A5 base element");
  }
}

}  // namespace

GenSet make_genset(std::string name, std::vector<PowerElement> generators,
                   std::string provenance) {
  if (generators.empty())
    throw std::invalid_argument("generating set must be nonempty");
  const unsigned degree = generators[0].degree();
  const unsigned width = generators[0].width();
  for (const PowerElement& g : generators) {
    if (g.degree() != degree || g.width() != width)
      throw std::invalid_argument("generators must share (degree, width)");
    if (!g.all_even())
      throw std::invalid_argument("generator has an odd part; only even "
                                  "permutations are supported");
    if (g.is_identity())
      throw std::invalid_argument("identity tuple is not a valid generator");
  }
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j])
        throw std::invalid_argument("duplicate generator at positions " +
                                    std::to_string(i) + " and " + std::to_string(j));
  GenSet g;
  g.name = std::move(name);
  g.degree = degree;
  g.width = width;
  g.generators = std::move(generators);
  g.provenance = std::move(provenance);
  return g;
}

GenSet canonical_genset(const std::vector<Perm>& base, unsigned width,
                        const std::string& base_name) {
  if (base.empty()) throw std::invalid_argument("base generating set is empty");
  std::vector<PowerElement> gens;
  gens.reserve(static_cast<size_t>(width) * base.size());
  for (unsigned slot = 1; slot <= width; ++slot)
    for (const Perm& a : base)
      gens.push_back(PowerElement::slot_embed(a, slot, width));
  return make_genset("canonical:" + base_name + ":" + std::to_string(width),
                     std::move(gens),
                     "slot-embedded copies of " + base_name);
}

GenSet coprime_genset(const std::vector<Perm>& base, unsigned n,
                      const std::string& base_name) {
  if (base.empty()) throw std::invalid_argument("base generating set is empty");
  const unsigned k = static_cast<unsigned>(base.size());
  if (n < k)
    throw std::invalid_argument("power width must be >= base size");
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = i + 1; j < k; ++j)
      if (std::gcd(base[i].order(), base[j].order()) != 1)
        throw std::invalid_argument("base element orders are not pairwise coprime");

  const unsigned degree = base[0].degree();
  std::vector<PowerElement> gens;
  gens.reserve(n);
  // Generator i (1-based) places base[0] at slot i and the rest cyclically:
  // slot (i - 1 + j) mod n gets base[j].
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Perm> parts(n, Perm(degree));
    for (unsigned j = 0; j < k; ++j) parts[(i - 1 + j) % n] = base[j];
    gens.push_back(PowerElement(std::move(parts)));
  }
  return make_genset("coprime:" + base_name + ":" + std::to_string(n),
                     std::move(gens),
                     "coprime-order staircase over " + base_name);
}

GenSet a4_genset(unsigned n) {
  if (n < 2) throw std::invalid_argument("a4_genset: width must be >= 2");
  const Perm alpha = Perm::parse_cycles("(1 2)(3 4)", 4);
  const Perm beta = Perm::parse_cycles("(1 2 3)", 4);
  GenSet g = coprime_genset({alpha, beta}, n);
  g.name = "a4-power:" + std::to_string(n);
  g.provenance = "coprime-order staircase over alpha=(1 2)(3 4), beta=(1 2 3)";
  return g;
}

GenSet an2_genset(unsigned n) {
  if (n < 5) throw std::invalid_argument("an2_genset: degree must be >= 5");
  if (n > kMaxDegree)
    throw std::invalid_argument("an2_genset: degree exceeds cap");
  Perm first(n), second(n);
  if (n % 2 == 1) {
    std::string cyc = "(1";
    for (unsigned p = 2; p <= n; ++p) cyc += " " + std::to_string(p);
    cyc += ")";
    first = Perm::parse_cycles(cyc, n);
    second = Perm::parse_cycles("(1 2)(3 4)", n);
  } else {
    std::string cyc = "(1";
    for (unsigned p = 2; p <= n - 1; ++p) cyc += " " + std::to_string(p);
    cyc += ")";
    first = Perm::parse_cycles(cyc, n);
    second = Perm::parse_cycles(
        "(" + std::to_string(n - 3) + " " + std::to_string(n - 2) + ")(" +
            std::to_string(n - 1) + " " + std::to_string(n) + ")",
        n);
  }
  std::vector<PowerElement> gens;
  gens.push_back(PowerElement({first, second}));
  gens.push_back(PowerElement({second, first}));
  return make_genset("an2:" + std::to_string(n), std::move(gens),
                     "swap pair over a long cycle and a double transposition");
}

std::vector<std::pair<Perm, Perm>> a5_bases19() {
  const Perm a = a5_perm('a'), b = a5_perm('b'), c = a5_perm('c');
  const Perm d = a5_perm('d'), e = a5_perm('e'), f = a5_perm('f');
  const Perm g = a5_perm('g'), h = a5_perm('h'), i = a5_perm('i');
  const Perm b2 = b * b, c2 = c * c;
  return {
      {a, b},  {b, a},  {a, b2},  {b2, a},  {c, b},   {b, c},  {c, b2},
      {b2, c}, {b, c2}, {c2, b},  {b2, c2}, {c2, b2}, {d, a},  {a, d},
      {d, e},  {b, f},  {b, g},   {b, h},   {b, i},
  };
}

GenSet a5_power_genset(unsigned k) {
  if (k < 1 || k > 8)
    throw std::invalid_argument("a5_power_genset: width must be in [1, 8]");
  const Perm a = a5_perm('a'), b = a5_perm('b'), c = a5_perm('c');
  const Perm b2 = b * b;
  const std::vector<Perm> row1 = {a, b, a, b2, c, b, c, b2};
  const std::vector<Perm> row2 = {b, a, b2, a, b, c, b2, c};
  std::vector<PowerElement> gens;
  gens.push_back(PowerElement(std::vector<Perm>(row1.begin(), row1.begin() + k)));
  gens.push_back(PowerElement(std::vector<Perm>(row2.begin(), row2.begin() + k)));
  return make_genset("a5-power:" + std::to_string(k), std::move(gens),
                     "two-element ladder C" + std::to_string(k) +
                         " over the A5 base pairs");
}

GenSet a5_bases19_columns() {
  auto pairs = a5_bases19();
  std::vector<Perm> firsts, seconds;
  firsts.reserve(pairs.size());
  seconds.reserve(pairs.size());
  for (const auto& [s, t] : pairs) {
    firsts.push_back(s);
    seconds.push_back(t);
  }
  std::vector<PowerElement> gens;
  gens.push_back(PowerElement(std::move(firsts)));
  gens.push_back(PowerElement(std::move(seconds)));
  return make_genset("a5-bases19", std::move(gens),
                     "the 19 non-equivalent generating pairs of A5 as columns");
}

std::string genset_to_json(const GenSet& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name;
  j["degree"] = g.degree;
  j["width"] = g.width;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const PowerElement& x : g.generators) {
    nlohmann::ordered_json tuple = nlohmann::ordered_json::array();
    for (unsigned i = 0; i < x.width(); ++i)
      tuple.push_back(x.part(i).format_cycles());
    gens.push_back(std::move(tuple));
  }
  j["generators"] = std::move(gens);
  j["provenance"] = g.provenance;
  return j.dump(2) + "\n";
}

GenSet genset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed genset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("degree") ||
      !j.contains("width") || !j.contains("generators"))
    throw std::invalid_argument("genset JSON missing required fields");
  const unsigned degree = j.at("degree").get<unsigned>();
  const unsigned width = j.at("width").get<unsigned>();
  std::vector<PowerElement> gens;
  for (const auto& tuple : j.at("generators")) {
    if (!tuple.is_array() || tuple.size() != width)
      throw std::invalid_argument("generator tuple width does not match header");
    std::vector<Perm> parts;
    parts.reserve(width);
    for (const auto& cyc : tuple)
      parts.push_back(Perm::parse_cycles(cyc.get<std::string>(), degree));
    gens.push_back(PowerElement(std::move(parts)));
  }
  GenSet g = make_genset(j.at("name").get<std::string>(), std::move(gens),
                         j.value("provenance", std::string{}));
  if (g.degree != degree)
    throw std::invalid_argument("genset degree does not match header");
  return g;
}

void save_genset(const GenSet& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << genset_to_json(g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

GenSet load_genset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return genset_from_json(text);
}

}  // namespace altpow
