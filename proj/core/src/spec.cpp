#include "puiseux/spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "puiseux/errors.hpp"

namespace puiseux {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string where(std::size_t family) { return "families[" + std::to_string(family) + "]"; }

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& ctx) {
  if (!obj.is_object()) throw SemanticError(ctx + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw SemanticError(ctx + ": unknown key '" + key + "'");
  }
}

std::string get_string(const json& v, const std::string& ctx) {
  if (!v.is_string()) throw SemanticError(ctx + ": expected a string");
  return v.get<std::string>();
}

bool get_bool(const json& v, const std::string& ctx) {
  if (!v.is_boolean()) throw SemanticError(ctx + ": expected a boolean");
  return v.get<bool>();
}

std::uint64_t get_index(const json& v, const std::string& ctx) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw SemanticError(ctx + ": expected an integer >= 1");
  }
  return v.get<std::uint64_t>();
}

PosRational get_rational(const json& v, const std::string& ctx) {
  if (v.is_number_unsigned()) return PosRational(v.get<unsigned long>());
  const std::string text = get_string(v, ctx);
  if (!text.empty() && text.front() == '-') {
    throw SemanticError(ctx + ": negative value '" + text + "'");
  }
  try {
    return PosRational::parse(text);
  } catch (const DomainError& e) {
    throw SemanticError(ctx + ": " + e.what());
  }
}

GeneratorFamily parse_family(const json& obj, std::size_t index) {
  const std::string ctx = where(index);
  if (!obj.is_object()) throw SemanticError(ctx + ": expected an object");
  std::string kind;
  if (obj.contains("kind")) {
    kind = get_string(obj.at("kind"), ctx + ".kind");
  } else {
    kind = obj.contains("generators") ? "explicit" : "symbolic";
  }

  if (kind == "explicit") {
    check_keys(obj, {"kind", "generators"}, ctx);
    if (!obj.contains("generators") || !obj.at("generators").is_array()) {
      throw SemanticError(ctx + ": explicit family needs a 'generators' array");
    }
    ExplicitFamily fam;
    for (const auto& g : obj.at("generators")) {
      fam.generators.push_back(get_rational(g, ctx + ".generators"));
    }
    return fam;
  }
  if (kind != "symbolic") throw SemanticError(ctx + ": unknown kind '" + kind + "'");

  check_keys(obj,
             {"kind", "numerator", "prime_filter", "index_start", "index_end", "stable", "primary"},
             ctx);
  if (!obj.contains("numerator")) throw SemanticError(ctx + ": symbolic family needs 'numerator'");
  SymbolicFamily fam;
  fam.numerator = Expr::parse(get_string(obj.at("numerator"), ctx + ".numerator"));
  if (obj.contains("prime_filter")) {
    try {
      fam.prime_filter = parse_prime_filter(get_string(obj.at("prime_filter"), ctx + ".prime_filter"));
    } catch (const DomainError& e) {
      throw SemanticError(ctx + ".prime_filter: " + e.what());
    }
  }
  if (obj.contains("index_start")) fam.index_start = get_index(obj.at("index_start"), ctx + ".index_start");
  if (obj.contains("index_end") && !obj.at("index_end").is_null()) {
    fam.index_end = get_index(obj.at("index_end"), ctx + ".index_end");
  }
  if (obj.contains("stable")) fam.declared_stable = get_bool(obj.at("stable"), ctx + ".stable");
  if (obj.contains("primary")) fam.primary = get_bool(obj.at("primary"), ctx + ".primary");
  return fam;
}

SpecMetadata parse_metadata(const json& obj) {
  check_keys(obj, {"zero_limit_point", "atom_inf", "inf_attained", "atom_sup", "sup_attained"},
             "metadata");
  SpecMetadata md;
  if (obj.contains("zero_limit_point")) {
    md.zero_limit_point = get_bool(obj.at("zero_limit_point"), "metadata.zero_limit_point");
  }
  if (obj.contains("atom_inf")) md.atom_inf = get_rational(obj.at("atom_inf"), "metadata.atom_inf");
  if (obj.contains("inf_attained")) {
    md.inf_attained = get_bool(obj.at("inf_attained"), "metadata.inf_attained");
  }
  if (obj.contains("atom_sup")) {
    const json& v = obj.at("atom_sup");
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinity")) {
      md.atom_sup = ExtendedRational::infinity();
    } else {
      md.atom_sup = ExtendedRational(get_rational(v, "metadata.atom_sup"));
    }
  }
  if (obj.contains("sup_attained")) {
    md.sup_attained = get_bool(obj.at("sup_attained"), "metadata.sup_attained");
  }
  return md;
}

json family_to_json(const GeneratorFamily& family) {
  return std::visit(
      [](const auto& fam) -> json {
        using T = std::decay_t<decltype(fam)>;
        json out;
        if constexpr (std::is_same_v<T, ExplicitFamily>) {
          out["kind"] = "explicit";
          json gens = json::array();
          for (const auto& g : fam.generators) gens.push_back(g.str());
          out["generators"] = gens;
        } else {
          out["kind"] = "symbolic";
          out["numerator"] = fam.numerator.str();
          out["prime_filter"] = fam.prime_filter.str();
          out["index_start"] = fam.index_start;
          if (fam.index_end) out["index_end"] = *fam.index_end;
          out["stable"] = fam.declared_stable;
          if (fam.primary) out["primary"] = true;
        }
        return out;
      },
      family);
}

}  // namespace

bool MonoidSpec::finitely_generated() const {
  for (const auto& family : families) {
    if (const auto* sym = std::get_if<SymbolicFamily>(&family); sym && sym->unbounded()) {
      return false;
    }
  }
  return true;
}

PrimeFilter parse_prime_filter(std::string_view text) {
  if (text == "all") return PrimeFilter::all();
  if (text == "odd") return PrimeFilter::odd();
  if (text.starts_with("min:")) {
    return PrimeFilter::at_least(PosRational::parse(text.substr(4)).numerator());
  }
  if (text.starts_with("exclude:")) {
    std::string_view body = text.substr(8);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw DomainError("exclude filter must look like exclude:[3,5]");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<mpz_class> excluded;
    while (!body.empty()) {
      const auto comma = body.find(',');
      std::string item(body.substr(0, comma));
      item.erase(0, item.find_first_not_of(' '));
      item.erase(item.find_last_not_of(' ') + 1);
      const PosRational value = PosRational::parse(item);
      if (!value.is_integer()) throw DomainError("excluded primes must be integers");
      excluded.push_back(value.numerator());
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return PrimeFilter::excluding(std::move(excluded));
  }
  if (text.starts_with("above:")) {
    const std::string label(text.substr(6));
    Expr lower = Expr::parse(label);
    if (lower.uses_prime()) throw DomainError("above: bound may only use n");
    return PrimeFilter::above(label, [lower](std::uint64_t n) {
      return lower.evaluate(mpz_class(static_cast<unsigned long>(n)), 0);
    });
  }
  throw DomainError("unknown prime filter '" + std::string(text) + "'");
}

void validate_spec(const MonoidSpec& spec) {
  if (spec.families.empty()) throw SemanticError("spec needs at least one family");
  for (std::size_t i = 0; i < spec.families.size(); ++i) {
    const auto& family = spec.families[i];
    if (const auto* ex = std::get_if<ExplicitFamily>(&family)) {
      if (ex->generators.empty()) throw SemanticError(where(i) + ": no generators");
      for (const auto& g : ex->generators) {
        if (g.is_zero()) throw SemanticError(where(i) + ": generator 0 is not allowed");
      }
      continue;
    }
    const auto& sym = std::get<SymbolicFamily>(family);
    if (sym.index_start < 1) throw SemanticError(where(i) + ": index_start must be >= 1");
    if (sym.index_end && *sym.index_end < sym.index_start) {
      throw SemanticError(where(i) + ": index_end precedes index_start");
    }
    if (sym.declared_stable && !sym.numerator.is_constant()) {
      throw SemanticError(where(i) + ": stable=true needs a constant numerator; '" +
                          sym.numerator.str() + "' cannot be verified to repeat infinitely often");
    }
    if (sym.declared_stable && !sym.unbounded()) {
      throw SemanticError(where(i) + ": stable=true on a bounded index range");
    }
  }
  const auto& md = spec.metadata;
  if (md.atom_inf && md.atom_sup && !md.atom_sup->is_infinite() &&
      md.atom_sup->finite() < *md.atom_inf) {
    throw SemanticError("metadata: atom_sup < atom_inf");
  }
}

MonoidSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SyntaxError("invalid JSON spec", line, column);
  }
  check_keys(doc, {"schema", "name", "families", "metadata"}, "spec");
  if (!doc.contains("schema") || !doc.at("schema").is_number_integer() ||
      doc.at("schema").get<int>() != kSpecSchemaVersion) {
    throw SemanticError("spec: expected \"schema\": " + std::to_string(kSpecSchemaVersion));
  }
  MonoidSpec spec;
  if (doc.contains("name")) spec.name = get_string(doc.at("name"), "name");
  if (!doc.contains("families") || !doc.at("families").is_array()) {
    throw SemanticError("spec: 'families' must be an array");
  }
  const auto& families = doc.at("families");
  for (std::size_t i = 0; i < families.size(); ++i) {
    spec.families.push_back(parse_family(families[i], i));
  }
  if (doc.contains("metadata")) spec.metadata = parse_metadata(doc.at("metadata"));
  validate_spec(spec);
  return spec;
}

MonoidSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open spec file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

std::string spec_to_json(const MonoidSpec& spec) {
  json doc;
  doc["schema"] = kSpecSchemaVersion;
  if (!spec.name.empty()) doc["name"] = spec.name;
  json families = json::array();
  for (const auto& family : spec.families) families.push_back(family_to_json(family));
  doc["families"] = families;
  json md = json::object();
  const auto& m = spec.metadata;
  if (m.zero_limit_point) md["zero_limit_point"] = *m.zero_limit_point;
  if (m.atom_inf) md["atom_inf"] = m.atom_inf->str();
  if (m.inf_attained) md["inf_attained"] = *m.inf_attained;
  if (m.atom_sup) md["atom_sup"] = m.atom_sup->str();
  if (m.sup_attained) md["sup_attained"] = *m.sup_attained;
  doc["metadata"] = md;
  return doc.dump(2) + "\n";
}

}  // namespace puiseux
