#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plot.hpp"
#include "puiseux/puiseux.hpp"

namespace puiseux::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Options {
  std::string spec_path;
  std::uint64_t depth = 8;
  std::string bound;
  std::string element;
  std::string atom;
  std::string mode = "truncated";
  std::string format = "text";
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> grid_limit;
  bool all = false;
  bool decimal = false;

  std::string name;
  std::string witness;
  std::string input;
  std::uint64_t stages = 1;

  std::string a_expr;
  std::string b_expr;
  std::string a_primes = "all";
  std::string b_primes = "all";
  std::string target;
  std::string epsilon = "1/100";
  std::uint64_t max_n = DensityBudget{}.max_n;
  std::uint64_t max_k = DensityBudget{}.max_k;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format format_of(const Options& o) {
  if (o.format == "json") return Format::json;
  if (o.format == "csv") return Format::csv;
  return Format::text;
}

EnumerationLimits limits_of(const Options& o) {
  EnumerationLimits limits;
  if (const char* env = std::getenv("PUISEUX_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError("PUISEUX_CAP must be a positive integer");
    limits.factorization_cap = v;
  }
  if (o.cap) limits.factorization_cap = *o.cap;
  if (o.grid_limit) limits.grid_limit = *o.grid_limit;
  return limits;
}

PosRational rational_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return PosRational::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

MonoidSpec spec_of(const Options& o) {
  if (o.spec_path.empty()) throw UsageError("--spec is required");
  return load_spec(o.spec_path);
}

std::string join_set(const std::vector<PosRational>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ", ";
    s += xs[i].str();
  }
  return s + "}";
}

std::vector<std::string> strs(const std::vector<PosRational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

void print_list(std::ostream& out, Format f, const char* key, const std::vector<PosRational>& xs) {
  switch (f) {
    case Format::json: {
      ordered_json j;
      j[key] = strs(xs);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << key << '\n';
      for (const auto& x : xs) out << x.str() << '\n';
      break;
    case Format::text:
      out << join_set(xs) << '\n';
      break;
  }
}

int cmd_atoms(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  const Format f = format_of(o);
  if (f == Format::json) {
    ordered_json j;
    j["depth"] = o.depth;
    j["atoms"] = strs(tm.atoms());
    j["denom_lcm"] = tm.denom_lcm().get_str();
    std::vector<std::string> scaled;
    for (const auto& g : tm.scaled_gens()) scaled.push_back(g.get_str());
    j["scaled_gens"] = scaled;
    out << j.dump(2) << '\n';
  } else {
    if (f == Format::csv) out << "atom\n";
    for (const auto& a : tm.atoms()) out << a.str() << '\n';
  }
  return kOk;
}

int cmd_contains(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  const PosRational x = rational_arg(o.element, "--element");
  const bool member = contains(tm, x);
  if (format_of(o) == Format::json) {
    ordered_json j;
    j["element"] = x.str();
    j["member"] = member;
    out << j.dump(2) << '\n';
  } else {
    out << (member ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  const PosRational x = rational_arg(o.element, "--element");
  const auto zs = factorizations(tm, x, limits_of(o));
  switch (format_of(o)) {
    case Format::json: {
      ordered_json j;
      j["element"] = x.str();
      ordered_json list = ordered_json::array();
      for (const auto& z : zs) list.push_back(z.serialize());
      j["factorizations"] = list;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "length,factorization\n";
      for (const auto& z : zs) out << z.length() << ',' << z.str() << '\n';
      break;
    case Format::text:
      for (const auto& z : zs) out << z.str() << '\n';
      break;
  }
  return kOk;
}

int cmd_lengths(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  const PosRational x = rational_arg(o.element, "--element");
  const LengthSet ls = length_set(tm, x, limits_of(o));
  switch (format_of(o)) {
    case Format::json: {
      ordered_json j;
      j["element"] = x.str();
      j["lengths"] = ls.values();
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "length\n";
      for (const auto l : ls.values()) out << l << '\n';
      break;
    case Format::text:
      out << ls.str() << '\n';
      break;
  }
  return kOk;
}

ElasticityMode mode_of(const Options& o) {
  if (o.mode == "truncated" || o.mode == "truncated-exact") return ElasticityMode::truncated_exact;
  if (o.mode == "symbolic") return ElasticityMode::symbolic;
  throw UsageError("--mode must be truncated or symbolic");
}

int cmd_elasticity(const Options& o, std::ostream& out) {
  const MonoidSpec spec = spec_of(o);
  const Format f = format_of(o);
  if (!o.element.empty()) {
    const auto tm = truncate(spec, o.depth);
    const PosRational x = rational_arg(o.element, "--element");
    const PosRational rho = element_elasticity(tm, x, limits_of(o));
    if (f == Format::json) {
      ordered_json j;
      j["element"] = x.str();
      j["elasticity"] = rho.str();
      out << j.dump(2) << '\n';
    } else {
      out << rho.str() << '\n';
    }
    return kOk;
  }
  const ElasticityMode mode = mode_of(o);
  const TruncatedMonoid tm =
      mode == ElasticityMode::truncated_exact ? truncate(spec, o.depth) : TruncatedMonoid{};
  const ElasticityReport report = monoid_elasticity(spec, tm, mode);
  if (f == Format::json) {
    out << to_json(report) << '\n';
  } else {
    out << report.value.str() << '\n';
  }
  return kOk;
}

int cmd_rset(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  print_list(out, format_of(o), "elasticities",
             elasticity_set(tm, rational_arg(o.bound, "--bound"), limits_of(o)));
  return kOk;
}

int cmd_witnesses(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  print_list(out, format_of(o), "witnesses",
             elasticity_witnesses(tm, rational_arg(o.bound, "--bound"), limits_of(o)));
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const MonoidSpec spec = spec_of(o);
  const auto tm = truncate(spec, o.depth);
  const PrimaryReport primary = is_primary(tm);
  const auto stability = classify_atoms(spec, tm);
  const Format f = format_of(o);
  if (f == Format::json) {
    ordered_json j;
    j["primary"] = primary.is_primary;
    if (!primary.is_primary) j["reason"] = primary.reason;
    ordered_json atoms = ordered_json::array();
    for (const auto& a : tm.atoms()) {
      ordered_json row;
      row["atom"] = a.str();
      row["stability"] = to_string(stability.at(a));
      if (primary.is_primary) row["prime"] = primary.prime_of_atom.at(a).get_str();
      atoms.push_back(row);
    }
    j["atoms"] = atoms;
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (f == Format::text) {
    out << "primary: " << (primary.is_primary ? "true" : "false");
    if (!primary.is_primary) out << " (" << primary.reason << ")";
    out << '\n';
  } else {
    out << "atom,stability,prime\n";
  }
  const char sep = f == Format::csv ? ',' : ' ';
  for (const auto& a : tm.atoms()) {
    out << a.str() << sep << to_string(stability.at(a)) << sep;
    if (primary.is_primary) out << primary.prime_of_atom.at(a).get_str();
    out << '\n';
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const MonoidSpec spec = spec_of(o);
  const auto tm = truncate(spec, o.depth);
  const PosRational x = rational_arg(o.element, "--element");
  const Decomposition d = decompose_stable_unstable(spec, tm, x, limits_of(o));
  if (format_of(o) == Format::json) {
    ordered_json j;
    j["element"] = x.str();
    j["stable_part"] = d.stable_part.str();
    j["unstable_part"] = d.unstable_part.str();
    j["unique"] = d.unique;
    j["candidates"] = d.candidates;
    out << j.dump(2) << '\n';
  } else {
    out << "stable " << d.stable_part.str() << '\n'
        << "unstable " << d.unstable_part.str() << '\n'
        << "unique " << (d.unique ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_shift_check(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  const PosRational x = rational_arg(o.element, "--element");
  const PosRational a = rational_arg(o.atom, "--atom");
  const ShiftReport r = shifted_lengths(tm, x, a, limits_of(o));
  if (format_of(o) == Format::json) {
    ordered_json j;
    j["element"] = x.str();
    j["atom"] = a.str();
    j["status"] = to_string(r.status);
    if (r.status != CheckStatus::inapplicable) {
      j["lengths"] = r.base.values();
      j["shifted_lengths"] = r.shifted.values();
    }
    if (!r.reason.empty()) j["reason"] = r.reason;
    out << j.dump(2) << '\n';
  } else {
    out << to_string(r.status) << '\n';
    if (r.status != CheckStatus::inapplicable) {
      out << "L(" << x.str() << ") = " << r.base.str() << '\n'
          << "L(" << (x + a).str() << ") = " << r.shifted.str() << '\n';
    }
    if (!r.reason.empty()) out << r.reason << '\n';
  }
  return r.status == CheckStatus::fail ? kDomainError : kOk;
}

int cmd_density(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.a_expr.empty() || o.b_expr.empty()) throw UsageError("--a and --b are required");
  const auto a = SequenceDescriptor::parse(o.a_expr, o.a_primes);
  const auto b = SequenceDescriptor::parse(o.b_expr, o.b_primes);
  const DensityResult r = density_witness(a, b, rational_arg(o.target, "--target"),
                                          rational_arg(o.epsilon, "--epsilon"),
                                          DensityBudget{o.max_n, o.max_k});
  if (format_of(o) == Format::json) {
    ordered_json j;
    j["found"] = r.found;
    if (r.found) {
      j["n"] = r.n;
      j["k"] = r.k;
      j["ratio"] = r.ratio.str();
      j["error"] = r.error.str();
    } else {
      j["diagnostics"] = r.diagnostics;
    }
    out << j.dump(2) << '\n';
  } else if (r.found) {
    out << "n " << r.n << '\n'
        << "k " << r.k << '\n'
        << "ratio " << r.ratio.str() << '\n'
        << "error " << r.error.str() << '\n';
  } else {
    err << "not found: " << r.diagnostics << '\n';
  }
  return r.found ? kOk : kDomainError;
}

int cmd_status(const Options& o, std::ostream& out) {
  const MonoidSpec spec = spec_of(o);
  std::optional<PosRational> witness;
  if (!o.witness.empty()) witness = rational_arg(o.witness, "--witness");
  const StatusReport r = bf_ff_status(spec, o.depth, witness, limits_of(o));
  if (format_of(o) == Format::json) {
    ordered_json j;
    j["status"] = to_string(r.status);
    j["reasons"] = r.reasons;
    out << j.dump(2) << '\n';
  } else {
    out << to_string(r.status) << '\n';
    for (const auto& reason : r.reasons) out << "  " << reason << '\n';
  }
  return kOk;
}

void print_stages(const StagedMonoid& sm, std::ostream& out) {
  for (std::size_t j = 1; j < sm.stages.size(); ++j) {
    out << "stage " << j << ": " << sm.stages[j].added.size() << " pair(s)\n";
    for (const auto& p : sm.stages[j].added) {
      out << "  " << p.reducible.str() << " prime " << p.prime.get_str() << " atoms "
          << p.lower.str() << ' ' << p.upper.str() << '\n';
    }
  }
  for (const auto& w : sm.warnings) out << "warning: " << w << '\n';
}

int cmd_bifurcus(const Options& o, std::ostream& out) {
  const StagedMonoid sm =
      bifurcus_build(o.stages, rational_arg(o.bound, "--bound"), limits_of(o));
  if (format_of(o) == Format::json) {
    out << staged_to_json(sm);
  } else {
    print_stages(sm, out);
  }
  return kOk;
}

int cmd_verify_bifurcus(const Options& o, std::ostream& out) {
  const PosRational bound = rational_arg(o.bound, "--bound");
  StagedMonoid sm;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw DomainError("cannot read " + o.input);
    std::stringstream buf;
    buf << in.rdbuf();
    sm = staged_from_json(buf.str());
  } else {
    sm = bifurcus_build(o.stages, bound, limits_of(o));
  }
  const BifurcusReport r = bifurcus_verify(sm, bound, limits_of(o));
  if (format_of(o) == Format::json) {
    ordered_json j;
    j["min_nonzero"] = r.min_nonzero.str();
    j["min_is_one_third"] = r.min_is_one_third;
    j["atoms_preserved"] = r.atoms_preserved;
    j["length_two_everywhere"] = r.length_two_everywhere;
    j["failures"] = r.failures;
    out << j.dump(2) << '\n';
  } else {
    out << "min nonzero " << r.min_nonzero.str() << '\n'
        << "min is 1/3 " << (r.min_is_one_third ? "pass" : "fail") << '\n'
        << "atoms preserved " << (r.atoms_preserved ? "pass" : "fail") << '\n'
        << "length-2 factorizations " << (r.length_two_everywhere ? "pass" : "fail") << '\n';
    for (const auto& f : r.failures) out << "failure: " << f << '\n';
  }
  return r.ok() ? kOk : kDomainError;
}

int cmd_plot(const Options& o, std::ostream& out) {
  const auto tm = truncate(spec_of(o), o.depth);
  const PlotData data = plot_data(tm, rational_arg(o.bound, "--bound"), o.all, limits_of(o));
  if (format_of(o) == Format::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : data.records) {
      ordered_json row;
      row["element"] = r.element.str();
      row["elasticity"] = r.elasticity.str();
      row["marker"] = to_string(r.marker);
      rows.push_back(row);
    }
    ordered_json j;
    j["records"] = rows;
    if (data.truncated_by) j["truncated_by"] = *data.truncated_by;
    out << j.dump(2) << '\n';
  } else {
    out << plot_csv(data, o.decimal);
  }
  return data.truncated_by ? kDomainError : kOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.name.empty()) {
    for (const auto& n : catalog_names()) out << n << '\n';
    return kOk;
  }
  out << spec_to_json(catalog(o.name));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization invariants of Puiseux monoids", "puiseux"};
  app.require_subcommand(1);
  auto o = std::make_shared<Options>();

  const auto common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec) {
      sub->add_option("--spec", o->spec_path, "Monoid spec file (JSON)")->required();
      sub->add_option("--depth", o->depth, "Truncation depth")->check(CLI::PositiveNumber);
    }
    sub->add_option("--format", o->format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cap", o->cap, "Factorization cap (overrides PUISEUX_CAP)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grid-limit", o->grid_limit, "Maximum cells in a grid table")
        ->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  const auto add = [&](const char* name, const char* help, bool needs_spec,
                       std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, needs_spec);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  add("atoms", "List the atoms of a truncation", true, [&] { return cmd_atoms(*o, out); });
  add("contains", "Membership test", true, [&] { return cmd_contains(*o, out); })
      ->add_option("--element", o->element, "Element, e.g. 7/6")->required();
  add("factorize", "All factorizations of an element", true,
      [&] { return cmd_factorize(*o, out); })
      ->add_option("--element", o->element, "Element, e.g. 7/6")->required();
  add("lengths", "Length set of an element", true, [&] { return cmd_lengths(*o, out); })
      ->add_option("--element", o->element, "Element, e.g. 7/6")->required();
  {
    auto* sub = add("elasticity", "Elasticity of an element or of the monoid", true,
                    [&] { return cmd_elasticity(*o, out); });
    sub->add_option("--element", o->element, "Element (omit for the monoid elasticity)");
    sub->add_option("--mode", o->mode, "truncated | symbolic");
  }
  add("rset", "Set of elasticities of elements up to a bound", true,
      [&] { return cmd_rset(*o, out); })
      ->add_option("--bound", o->bound, "Largest element considered")->required();
  add("witnesses", "Elements up to a bound attaining the monoid elasticity", true,
      [&] { return cmd_witnesses(*o, out); })
      ->add_option("--bound", o->bound, "Largest element considered")->required();
  add("classify", "Primary test and atom stability", true,
      [&] { return cmd_classify(*o, out); });
  add("decompose", "Stable + unstable splitting of an element", true,
      [&] { return cmd_decompose(*o, out); })
      ->add_option("--element", o->element, "Element, e.g. 7/6")->required();
  {
    auto* sub = add("shift-check", "Check L(x + a) = L(x) + 1", true,
                    [&] { return cmd_shift_check(*o, out); });
    sub->add_option("--element", o->element, "Element, e.g. 7/6")->required();
    sub->add_option("--atom", o->atom, "Stable atom a")->required();
  }
  {
    auto* sub = add("density", "Find n, k with (a_n + k)/(b_n + k) near a target", false,
                    [&] { return cmd_density(*o, out, err); });
    sub->add_option("--a", o->a_expr, "Expression for a_n")->required();
    sub->add_option("--b", o->b_expr, "Expression for b_n")->required();
    sub->add_option("--a-primes", o->a_primes, "Prime filter for p in --a");
    sub->add_option("--b-primes", o->b_primes, "Prime filter for p in --b");
    sub->add_option("--target", o->target, "Target ratio")->required();
    sub->add_option("--epsilon", o->epsilon, "Tolerance (default 1/100)");
    sub->add_option("--max-n", o->max_n, "Largest index n searched")->check(CLI::PositiveNumber);
    sub->add_option("--max-k", o->max_k, "Largest shift k searched")->check(CLI::PositiveNumber);
  }
  add("status", "FF / BF classification", true, [&] { return cmd_status(*o, out); })
      ->add_option("--witness", o->witness, "Element whose factorization count grows with depth");
  {
    auto* sub = add("bifurcus", "Build the staged bifurcus monoid", false,
                    [&] { return cmd_bifurcus(*o, out); });
    sub->add_option("--stages", o->stages, "Number of stages")->check(CLI::PositiveNumber);
    sub->add_option("--bound", o->bound, "Value bound for reducible elements")->required();
  }
  {
    auto* sub = add("verify-bifurcus", "Verify a staged bifurcus build", false,
                    [&] { return cmd_verify_bifurcus(*o, out); });
    sub->add_option("--input", o->input, "Staged build JSON (default: build --stages)");
    sub->add_option("--stages", o->stages, "Number of stages")->check(CLI::PositiveNumber);
    sub->add_option("--bound", o->bound, "Value bound for reducible elements")->required();
  }
  {
    auto* sub = add("plot", "Elasticity plot data as CSV", true,
                    [&] { return cmd_plot(*o, out); });
    sub->add_option("--bound", o->bound, "Largest element plotted")->required();
    sub->add_flag("--all", o->all, "Include elements of elasticity 1");
    sub->add_flag("--decimal", o->decimal, "Add approximate decimal columns");
  }
  add("catalog", "List named monoids or print one as a spec", false,
      [&] { return cmd_catalog(*o, out); })
      ->add_option("--name", o->name, "Catalog entry to print");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn();
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace puiseux::cli
