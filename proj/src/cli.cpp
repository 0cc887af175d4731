#include "mla/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "mla/catalog.hpp"
#include "mla/families.hpp"
#include "mla/io.hpp"

namespace mla {

namespace {

// Raised for usage problems detected after parsing (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group_file;
  std::string family;
  std::vector<std::string> stars;
  std::vector<std::string> families;
  std::string in_file;
  std::string out_file;
  std::string format = "json";
  std::optional<double> budget;
  bool dedup = false;
  std::optional<std::uint64_t> seed;
};

struct Outcome {
  Json results;
  bool ok = true;
  bool complete = true;
  // Artifact written to --out when given.
  std::optional<std::string> artifact;
};

GroupTable family(const std::string& spec) {
  try {
    return construct_standard_group(spec);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidParameters) throw;
    throw UsageError("--family " + spec + ": " + e.label());
  }
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  std::string digest_input() const { return digest_; }

  GroupTable group() {
    if (!o_.group_file.empty() && !o_.family.empty())
      throw UsageError("--group and --family are mutually exclusive");
    if (!o_.family.empty()) {
      note("family=" + o_.family);
      return family(o_.family);
    }
    if (o_.group_file.empty()) throw UsageError("one of --group or --family is required");
    const std::string text = read_file(o_.group_file);
    note("group=" + text);
    return group_from_json(parse(text, o_.group_file));
  }

  StarTable star(const GroupTable& g, const std::string& spec) {
    note("star=" + spec);
    if (spec == "trivial") return trivial_star(g);
    if (spec == "improper") return improper_star(g);
    const std::string text = read_file(spec);
    note(text);
    return star_from_json(parse(text, spec), g);
  }

  Json input_json() {
    if (o_.in_file.empty()) throw UsageError("--in is required");
    const std::string text = read_file(o_.in_file);
    note("in=" + text);
    return parse(text, o_.in_file);
  }

  void note(const std::string& s) { digest_ += s + '\n'; }

 private:
  static Json parse(const std::string& text, const std::string& path) {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::Format, path + ": " + e.what());
    }
  }

  const Options& o_;
  std::string digest_;
};

void require_one_star(const Options& o, const std::string& cmd) {
  if (o.stars.size() != 1) throw UsageError(cmd + " needs exactly one --star");
}

Json mla_report(const GroupTable& g, const StarTable& s, const std::string& what, bool& ok) {
  Json r;
  if (what == "check") {
    auto v = check_mla_axioms(g, s);
    ok = v.empty();
    r["axioms"] = violations_to_json(v);
  } else if (what == "identities") {
    auto ax = check_mla_axioms(g, s);
    if (!ax.empty()) throw Error(ErrorKind::PreconditionFailed, ax[0].label, ax[0].witness);
    auto v = check_derived_identities(g, s);
    ok = v.empty();
    r["identities"] = violations_to_json(v);
  } else if (what == "series") {
    Json series;
    for (auto rep : {gamma_series(g, s, false), gamma_series(g, s, true), lie_series(g, s, false),
                     lie_series(g, s, true)})
      series[to_string(rep.kind)] = series_to_json(rep);
    r["series"] = std::move(series);
  } else if (what == "centers") {
    Json c;
    c["center"] = subset_to_json(center(g));
    c["mz"] = subset_to_json(mz_center(g, s));
    c["lz"] = subset_to_json(lz_center(g, s));
    r["centers"] = std::move(c);
  } else {
    const Class2Report rep = class2_property_report(g, s);
    ok = rep.all();
    r["class2"] = class2_to_json(rep);
  }
  return r;
}

Outcome run_group(const std::string& sub, Runner& run) {
  Outcome out;
  if (sub == "build") {
    const GroupTable g = run.group();
    out.results = group_to_json(g);
    out.artifact = out.results.dump(2) + "\n";
    return out;
  }
  try {
    const GroupTable g = run.group();
    out.results["valid"] = true;
    out.results["name"] = g.name();
    out.results["order"] = g.order();
    out.results["abelian"] = g.is_abelian();
    out.results["class2"] = is_class2(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Format) throw;
    out.ok = false;
    out.results["valid"] = false;
    out.results["error"] = std::string(to_string(e.kind()));
    out.results["witness"] = e.witness();
  }
  return out;
}

Outcome run_mla(const std::string& sub, const Options& o, Runner& run) {
  Outcome out;
  const GroupTable g = run.group();
  if (sub == "enumerate") {
    SearchOptions so;
    if (o.budget) so.time_budget_seconds = *o.budget;
    so.dedup_by_automorphism = o.dedup;
    run.note("budget=" + std::to_string(so.time_budget_seconds) + " dedup=" + std::to_string(o.dedup));
    const SearchResult r = enumerate_stars(g, so);
    out.complete = r.complete;
    out.results["group"] = group_reference(g);
    out.results["count"] = r.stars.size();
    out.results["complete"] = r.complete;
    out.results["nodes"] = r.nodes;
    Json stars = Json::array();
    for (const auto& s : r.stars) stars.push_back(s.rows());
    out.results["stars"] = std::move(stars);
    if (o.dedup) {
      Json orbits = Json::array();
      for (const auto& orb : r.orbits) {
        Json j;
        j["size"] = orb.size;
        j["representative"] = orb.representative.rows();
        orbits.push_back(std::move(j));
      }
      out.results["orbits"] = std::move(orbits);
    }
    out.artifact = out.results.dump(2) + "\n";
    return out;
  }
  if (sub == "combine") {
    if (o.stars.size() != 2) throw UsageError("combine needs exactly two --star");
    const StarTable a = run.star(g, o.stars[0]);
    const StarTable b = run.star(g, o.stars[1]);
    const Mla m = combine_structures(g, a, b);
    out.results = star_to_json(g, m.star());
    out.artifact = out.results.dump(2) + "\n";
    return out;
  }
  require_one_star(o, sub);
  const StarTable s = run.star(g, o.stars[0]);
  out.results = mla_report(g, s, sub, out.ok);
  return out;
}

Outcome run_ext(const std::string& sub, const Options& o, Runner& run) {
  Outcome out;
  std::optional<ExtensionData> data;
  if (sub == "build" && o.in_file.empty() && o.seed) {
    run.note("seed=" + std::to_string(*o.seed));
    std::mt19937_64 rng(*o.seed);
    data = random_extension_data(rng);
    if (!data) throw Error(ErrorKind::ConstructionInvalid, "no verified random instance found");
  } else {
    data = extension_from_json(run.input_json());
  }
  if (sub == "verify") {
    const auto cocycle = verify_cocycle(*data);
    out.results["cocycle"] = violations_to_json(cocycle);
    if (cocycle.empty()) {
      const auto compat = verify_star_compatibility(*data);
      out.results["compatibility"] = violations_to_json(compat);
      out.ok = compat.empty();
    } else {
      out.results["compatibility"] = nullptr;
      out.ok = false;
    }
    return out;
  }
  const Mla m = build_star_from_extension(*data);
  out.results["extension"] = extension_to_json(*data);
  out.results["group"] = group_to_json(m.group());
  out.results["star"] = m.star().rows();
  out.artifact = star_to_json(m.group(), m.star()).dump(2) + "\n";
  return out;
}

Outcome run_pairing(const std::string& sub, Runner& run) {
  Outcome out;
  const GroupTable g = run.group();
  if (!is_class2(g)) throw Error(ErrorKind::PreconditionFailed, "group is not of class <= 2");
  auto [q, proj] = abelianization(g);
  auto [a, incl] = commutator_subgroup(g);
  if (sub == "enumerate") {
    const auto ps = enumerate_central_pairings(q, a);
    out.results["group"] = group_reference(g);
    out.results["count"] = ps.size();
    Json list = Json::array();
    for (const auto& p : ps) list.push_back(p.pairing);
    out.results["pairings"] = std::move(list);
    out.artifact = out.results.dump(2) + "\n";
    return out;
  }
  const Json in = run.input_json();
  if (in.is_object() && in.contains("group") && !(group_from_json(in.at("group")) == g))
    throw Error(ErrorKind::Format, "pairing file belongs to a different group");
  if (!in.is_object() || !in.contains("pairing")) throw Error(ErrorKind::Format, "missing field 'pairing'");
  CentralPairing p{q, a, table_from_json(in.at("pairing"), "pairing")};
  const Mla m = central_pairing_to_star(g, p);
  out.results = star_to_json(g, m.star());
  out.artifact = out.results.dump(2) + "\n";
  return out;
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_array = [](const Json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  render_text(j, os, 0);
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Workbench for multiplicative Lie algebra structures on finite groups", "mla"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out_file, "Write the produced artifact to FILE");
    c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--budget", o.budget, "Search budget in seconds")->check(CLI::PositiveNumber);
  };
  auto group_opts = [&](CLI::App* c) {
    c->add_option("--group", o.group_file, "Group file");
    c->add_option("--family", o.family, "Family spec such as dihedral:4");
  };

  std::string area, sub;
  auto* group = app.add_subcommand("group", "Build or validate groups")->require_subcommand(1);
  for (const char* name : {"build", "validate"}) {
    auto* c = group->add_subcommand(name);
    group_opts(c);
    common(c);
  }
  auto* mla_cmd = app.add_subcommand("mla", "Check and enumerate structures")->require_subcommand(1);
  for (const char* name : {"check", "identities", "series", "centers", "class2", "enumerate", "combine"}) {
    auto* c = mla_cmd->add_subcommand(name);
    group_opts(c);
    common(c);
    if (std::string(name) == "enumerate")
      c->add_flag("--dedup", o.dedup, "Group structures into automorphism orbits");
    else
      c->add_option("--star", o.stars, "trivial, improper or a star file");
  }
  auto* ext = app.add_subcommand("ext", "Extension data")->require_subcommand(1);
  for (const char* name : {"verify", "build"}) {
    auto* c = ext->add_subcommand(name);
    c->add_option("--in", o.in_file, "Extension file");
    common(c);
  }
  auto* pairing = app.add_subcommand("pairing", "Central pairings on class-2 groups")->require_subcommand(1);
  for (const char* name : {"enumerate", "apply"}) {
    auto* c = pairing->add_subcommand(name);
    group_opts(c);
    common(c);
    if (std::string(name) == "apply") c->add_option("--in", o.in_file, "Pairing file");
  }
  auto* census_cmd = app.add_subcommand("census", "JSON-lines census over catalog groups");
  census_cmd->add_option("--family", o.families, "Restrict to these family specs");
  common(census_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  for (auto* a : app.get_subcommands()) {
    area = a->get_name();
    for (auto* s : a->get_subcommands()) sub = s->get_name();
  }
  const std::string command = sub.empty() ? area : area + " " + sub;

  Runner run(o);
  int code = 0;
  try {
    if (area == "census") {
      CensusOptions co;
      if (o.budget) co.budget_seconds = *o.budget;
      std::vector<CatalogEntry> entries;
      if (o.families.empty()) {
        entries = census_catalog();
      } else {
        for (const auto& f : o.families) {
          const GroupTable g = family(f);
          entries.push_back({f, g.order(), is_class2(g)});
        }
      }
      std::ostringstream lines;
      for (const auto& r : census(entries, co)) {
        if (r.contains("error")) code = 1;
        if (o.format == "json") {
          lines << r.dump() << "\n";
        } else {
          render_text(r, lines, 0);
          lines << "\n";
        }
      }
      if (o.out_file.empty()) out << lines.str();
      else write_file(o.out_file, lines.str());
    } else {
      Outcome res;
      if (area == "group") res = run_group(sub, run);
      else if (area == "mla") res = run_mla(sub, o, run);
      else if (area == "ext") res = run_ext(sub, o, run);
      else res = run_pairing(sub, run);
      if (!o.out_file.empty() && res.artifact) write_file(o.out_file, *res.artifact);
      Json report;
      report["command"] = command;
      report["inputs_digest"] = fnv1a64(command + '\n' + run.digest_input());
      report["complete"] = res.complete;
      report["ok"] = res.ok;
      report["results"] = std::move(res.results);
      out << render(report, o.format);
      code = res.ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Format) {
      err << "input error: " << e.what() << "\n";
      return 2;
    }
    Json report;
    report["command"] = command;
    report["inputs_digest"] = fnv1a64(command + '\n' + run.digest_input());
    report["complete"] = true;
    report["ok"] = false;
    Json error;
    error["kind"] = std::string(to_string(e.kind()));
    error["label"] = e.label();
    error["witness"] = e.witness();
    error["message"] = e.what();
    report["error"] = std::move(error);
    out << render(report, o.format);
    code = 1;
  } catch (const std::exception& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "elapsed " << std::fixed << std::setprecision(3) << secs << " s\n";
  return code;
}

}  // namespace mla
