#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "apexkit/apex.hpp"
#include "apexkit/enumerate.hpp"
#include "apexkit/minors.hpp"
#include "apexkit/moves.hpp"
#include "apexkit/planarity.hpp"
#include "apexkit/verify.hpp"

using namespace apexkit;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

// "90", "90s", "15m", "2h" -> seconds.
double parse_duration(const std::string& text) {
  if (text.empty()) throw CLI::ValidationError("budget", "empty duration");
  double scale = 1.0;
  std::string digits = text;
  switch (text.back()) {
    case 's': digits.pop_back(); break;
    case 'm': scale = 60.0; digits.pop_back(); break;
    case 'h': scale = 3600.0; digits.pop_back(); break;
    default: break;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != digits.size() || digits.empty() || !(value > 0.0)) {
    throw CLI::ValidationError("budget", "expected a positive duration such as 600s, 15m or 2h: " + text);
  }
  return value * scale;
}

double default_budget() {
  if (const char* env = std::getenv("APEXKIT_BUDGET")) return parse_duration(env);
  return Budget{}.seconds;
}

Graph resolve_graph(const std::string& text) {
  if (auto g = named_graph(text)) return *g;
  try {
    return parse_graph6(text);
  } catch (const Graph6Error&) {
    throw CLI::ValidationError("graph", "not a builtin name or graph6 string: " + text);
  }
}

struct InputSource {
  std::vector<std::string> graphs;
  std::string file;
};

// Named or inline graphs first; otherwise graph6 records from the file or
// stdin.
std::vector<Graph> read_inputs(const InputSource& src) {
  std::vector<Graph> out;
  for (const std::string& s : src.graphs) out.push_back(resolve_graph(s));
  if (!src.graphs.empty() && src.file.empty()) return out;
  std::vector<Graph6Record> records;
  if (src.file.empty() || src.file == "-") {
    records = read_graph6_stream(std::cin);
  } else {
    std::ifstream in(src.file);
    if (!in) throw std::runtime_error("cannot read " + src.file);
    records = read_graph6_stream(in);
  }
  for (Graph6Record& r : records) out.push_back(std::move(r.graph));
  return out;
}

void add_input_options(CLI::App* cmd, InputSource& src) {
  cmd->add_option("-g,--graph", src.graphs, "Builtin name (K7, H12, C14, HF01, K3,3, Q3, ...) or graph6 string");
  cmd->add_option("-i,--input", src.file, "graph6 file, one graph per line; '-' for stdin (default)");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

struct QueryArgs {
  std::string property;
  int apex_n = 1;
  std::string format = "text";
  InputSource input;
};

json query_one(const Graph& g, const QueryArgs& q) {
  if (q.property == "planar") return is_planar(g);
  if (q.property == "apex") {
    if (q.apex_n < 0 || q.apex_n > g.order()) throw std::invalid_argument("apex N must lie in [0, order]");
    return is_n_apex(g, q.apex_n).is_n_apex;
  }
  if (q.property == "n2a") return is_n2a(g);
  if (q.property == "mmn2a") return is_mm_n2a(g);
  if (q.property == "split-k33") {
    auto cert = is_split_k33(g);
    if (q.format == "json" && cert) return to_json(*cert);
    return cert.has_value();
  }
  if (q.property == "triangle-free") return is_triangle_free(g);
  if (q.property == "chi") return euler_characteristic(g);
  return degree_sequence(g).to_string();
}

int run_query(const QueryArgs& q) {
  const std::vector<Graph> graphs = read_inputs(q.input);
  for (const Graph& g : graphs) {
    json r = query_one(g, q);
    if (q.format == "json") {
      std::cout << json{{"graph6", to_graph6(g)}, {"query", q.property}, {"result", r}}.dump() << '\n';
    } else {
      std::cout << to_graph6(g) << '\t' << (r.is_string() ? r.get<std::string>() : r.dump()) << '\n';
    }
  }
  return 0;
}

struct ClosureArgs {
  std::string moves = "both";
  std::string seed = "K7";
  int max_order = 14;
  int max_size = -1;
  std::size_t max_classes = ClosureLimits{}.max_classes;
  std::string format = "json";
  bool count = false;
  std::string output;
};

int run_closure(const ClosureArgs& a) {
  std::vector<Graph> seeds;
  if (auto g = named_graph(a.seed)) {
    seeds.push_back(*g);
  } else if (std::ifstream in(a.seed); in) {
    for (Graph6Record& r : read_graph6_stream(in)) seeds.push_back(std::move(r.graph));
  } else {
    seeds.push_back(resolve_graph(a.seed));
  }
  if (seeds.empty()) throw CLI::ValidationError("seed", "no seed graphs");
  AllowedMoves allowed{a.moves != "yt", a.moves != "ty"};
  ClosureLimits limits;
  limits.max_order = a.max_order;
  if (a.max_size >= 0) limits.max_size = a.max_size;
  limits.max_classes = a.max_classes;
  const ClosureFamily family = closure(seeds, allowed, limits);
  std::ofstream file;
  std::ostream& out = open_output(a.output, file);
  if (a.count) {
    out << family.ordered.size() << '\n';
  } else if (a.format == "graph6") {
    for (const CanonicalKey& k : family.ordered) out << k.str() << '\n';
  } else if (a.format == "text") {
    const auto names = family_names();
    for (std::size_t i = 0; i < family.ordered.size(); ++i) {
      const Graph& g = family.classes.find(family.ordered[i])->representative;
      auto it = names.find(family.ordered[i]);
      out << i << '\t' << family.ordered[i].str() << '\t' << g.order() << '\t' << g.size() << '\t'
          << degree_sequence(g).to_string() << '\t' << (it == names.end() ? "-" : it->second) << '\n';
    }
  } else {
    out << to_json(family, family_names()).dump(2) << '\n';
  }
  return 0;
}

struct EnumerateArgs {
  EnumSpec spec;
  int size = -1;
  std::string degseq;
  bool planar = false;
  bool nonplanar = false;
  int min_isolated = -1;
  bool count = false;
  std::string strategy = "mindeg";
  std::string cache;
  std::string budget;
  std::uint64_t max_classes = Budget{}.max_classes;
  std::string output;
};

int run_enumerate(EnumerateArgs a) {
  if (a.size >= 0) a.spec.min_size = a.spec.max_size = a.size;
  if (!a.degseq.empty()) a.spec.degree_sequence = DegreeSequence::parse(a.degseq);
  if (a.planar && a.nonplanar) throw CLI::ValidationError("--planar and --nonplanar exclude each other");
  EnumOptions opts;
  opts.strategy = a.strategy == "noncut" ? EnumStrategy::ConnectedNonCut : EnumStrategy::MinDegree;
  opts.budget.seconds = a.budget.empty() ? default_budget() : parse_duration(a.budget);
  opts.budget.max_classes = a.max_classes;
  EnumResult r = a.cache.empty() ? enumerate(a.spec, opts) : enumerate_cached(a.spec, opts, a.cache);

  std::vector<EnumClass> kept;
  if (a.planar || a.nonplanar || a.min_isolated >= 0) {
    for (EnumClass& c : r.classes) {
      if ((a.planar || a.nonplanar) && is_planar(c.graph) != a.planar) continue;
      if (a.min_isolated >= 0 && popcount(isolated_vertices(c.graph)) < a.min_isolated) continue;
      kept.push_back(std::move(c));
    }
  } else {
    kept = std::move(r.classes);
  }
  std::ofstream file;
  std::ostream& out = open_output(a.output, file);
  if (a.count) {
    out << kept.size() << '\n';
  } else {
    write_graph6_stream(out, kept);
  }
  if (!r.complete()) {
    std::cerr << "enumeration stopped: " << to_string(r.status) << "; output is partial\n";
    return kExitIncomplete;
  }
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> claims;
  std::string tier = "full";
  std::string budget;
  std::uint64_t max_classes = Budget{}.max_classes;
  bool timings = false;
  std::string output;
  std::string format = "json";
  std::vector<std::string> ingest;
  std::string cache;
  std::uint64_t seed = VerifyOptions{}.random_seed;
  int random_graphs = VerifyOptions{}.random_graphs;
};

int run_verify(const VerifyArgs& a, int threads) {
  VerifyOptions opts;
  for (const std::string& c : a.claims) {
    if (c != "all") opts.groups.insert(c);
  }
  opts.tier = a.tier == "family" ? Tier::FamilyOnly : Tier::Full;
  opts.budget.seconds = a.budget.empty() ? default_budget() : parse_duration(a.budget);
  opts.budget.max_classes = a.max_classes;
  opts.threads = threads;
  if (!a.cache.empty()) opts.cache_dir = a.cache;
  for (const std::string& spec : a.ingest) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("ingest", "expected group=path: " + spec);
    opts.ingest[spec.substr(0, eq)] = spec.substr(eq + 1);
  }
  opts.random_seed = a.seed;
  opts.random_graphs = a.random_graphs;

  const VerificationReport report = run_verification(opts);
  std::ofstream file;
  std::ostream& out = open_output(a.output, file);
  if (a.format == "text") {
    out << summary_text(report);
  } else {
    out << to_json(report, a.timings).dump(2) << '\n';
    if (!a.output.empty() && a.output != "-") std::cout << summary_text(report);
  }
  if (report.overall == "pass") return 0;
  return report.overall == "incomplete" ? kExitIncomplete : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apex and minor computations on small graphs: queries, move closures, enumeration, verification."};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("-t,--threads", threads, "Worker threads (default: available parallelism)")
      ->check(CLI::NonNegativeNumber);

  QueryArgs q;
  auto* query = app.add_subcommand("query", "Evaluate a property on each input graph, one line per graph");
  query->add_option("property", q.property, "planar | apex | n2a | mmn2a | split-k33 | triangle-free | chi | degseq")
      ->required()
      ->check(CLI::IsMember({"planar", "apex", "n2a", "mmn2a", "split-k33", "triangle-free", "chi", "degseq"}));
  query->add_option("n", q.apex_n, "Deletion budget for apex")->check(CLI::NonNegativeNumber);
  query->add_option("-f,--format", q.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  add_input_options(query, q.input);

  ClosureArgs c;
  auto* clos = app.add_subcommand("closure", "Close a seed family under nabla-Y / Y-nabla moves");
  clos->add_option("-m,--moves", c.moves, "ty (nabla-Y), yt (Y-nabla) or both")
      ->check(CLI::IsMember({"ty", "yt", "both"}));
  clos->add_option("-s,--seed", c.seed, "Builtin name, graph6 string or graph6 file");
  clos->add_option("--max-order", c.max_order, "Largest allowed class order")->check(CLI::Range(1, kMaxOrder));
  clos->add_option("--max-size", c.max_size, "Largest allowed class size")->check(CLI::NonNegativeNumber);
  clos->add_option("--max-classes", c.max_classes, "Class cap")->check(CLI::PositiveNumber);
  clos->add_option("-f,--format", c.format, "json | graph6 | text")->check(CLI::IsMember({"json", "graph6", "text"}));
  clos->add_flag("--count", c.count, "Print only the class count");
  clos->add_option("-o,--output", c.output, "Output file (default stdout)");

  EnumerateArgs e;
  auto* en = app.add_subcommand("enumerate", "List isomorphism classes as canonical graph6");
  en->add_option("-n,--order", e.spec.order, "Vertex count")->required()->check(CLI::Range(0, kMaxEnumOrder));
  en->add_option("-e,--size", e.size, "Exact edge count")->check(CLI::NonNegativeNumber);
  en->add_option("--min-size", e.spec.min_size, "Minimum edge count")->check(CLI::NonNegativeNumber);
  en->add_option("--max-size", e.spec.max_size, "Maximum edge count")->check(CLI::NonNegativeNumber);
  en->add_option("--min-degree", e.spec.min_degree, "Minimum degree")->check(CLI::NonNegativeNumber);
  en->add_option("--max-degree", e.spec.max_degree, "Maximum degree")->check(CLI::NonNegativeNumber);
  en->add_flag("--triangle-free", e.spec.triangle_free, "Only triangle-free graphs");
  en->add_flag("--connected", e.spec.connected, "Only connected graphs");
  en->add_option("--degseq", e.degseq, "Exact degree sequence, e.g. (5^2,4^8)");
  en->add_flag("--planar", e.planar, "Keep planar classes");
  en->add_flag("--nonplanar", e.nonplanar, "Keep nonplanar classes");
  en->add_option("--min-isolated", e.min_isolated, "Keep classes with at least this many isolated vertices")
      ->check(CLI::NonNegativeNumber);
  en->add_flag("--count", e.count, "Print only the class count");
  en->add_option("--strategy", e.strategy, "mindeg | noncut (requires --connected)")
      ->check(CLI::IsMember({"mindeg", "noncut"}));
  en->add_option("--cache", e.cache, "Cache directory for complete results");
  en->add_option("-b,--budget", e.budget, "Time budget, e.g. 600s, 15m, 2h (default $APEXKIT_BUDGET or 1h)");
  en->add_option("--max-classes", e.max_classes, "Class budget")->check(CLI::PositiveNumber);
  en->add_option("-o,--output", e.output, "Output file (default stdout)");

  VerifyArgs v;
  auto* ver = app.add_subcommand("verify", "Run the claim-by-claim verification and emit a JSON report");
  std::string groups_help = "all or claim groups:";
  for (const std::string& g : claim_groups()) groups_help += " " + g;
  ver->add_option("-c,--claims", v.claims, groups_help)->delimiter(',');
  ver->add_option("--tier", v.tier, "family | full")->check(CLI::IsMember({"family", "full"}));
  ver->add_option("-b,--budget", v.budget, "Time budget per enumeration (default $APEXKIT_BUDGET or 1h)");
  ver->add_option("--max-classes", v.max_classes, "Class budget per enumeration")->check(CLI::PositiveNumber);
  ver->add_flag("--timings", v.timings, "Include per-claim runtimes in the JSON report");
  ver->add_option("-o,--output", v.output, "JSON report file (default stdout)");
  ver->add_option("-f,--format", v.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--ingest", v.ingest, "group=path: read a graph6 corpus instead of enumerating (order14)");
  ver->add_option("--cache", v.cache, "Cache directory for enumerations");
  ver->add_option("--seed", v.seed, "Seed for the random planarity sample");
  ver->add_option("--random-graphs", v.random_graphs, "Size of the random planarity sample")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const std::string& g : v.claims) {
      if (g != "all" && std::find(claim_groups().begin(), claim_groups().end(), g) == claim_groups().end()) {
        throw CLI::ValidationError("claims", "unknown claim group: " + g);
      }
    }
    if (e.strategy == "noncut" && !e.spec.connected) {
      throw CLI::ValidationError("strategy", "noncut requires --connected");
    }
    if (threads > 0) omp_set_num_threads(threads);
    if (*query) return run_query(q);
    if (*clos) return run_closure(c);
    if (*en) return run_enumerate(e);
    return run_verify(v, threads);
  } catch (const CLI::Error& err) {
    app.exit(err);
    return kExitUsage;
  } catch (const Graph6StreamError& err) {
    std::cerr << "error: input " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
}
