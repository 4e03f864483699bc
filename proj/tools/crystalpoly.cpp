// crystalpoly: crystal graphs, inequality systems, oracle checks and braid
// maps from the command line.
//
// Exit codes: 0 ok, 1 internal error, 2 bad configuration, 3 generation did
// not saturate, 4 verify mismatch, 5 braid property violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystalpoly/crystalpoly.hpp"
#include "crystalpoly/json_io.hpp"

namespace fs = std::filesystem;
using namespace crystalpoly;
using io::json;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kConfig = 2, kUnsaturated = 3, kMismatch = 4, kBraid = 5 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string builtin;
  std::string cartan_file;
  std::string iota;
  std::string lambda;
  bool binf = false;
  int depth = 5;
  int jobs = 1;
  std::string format = "text";
  std::string output;

  // inequalities / verify
  std::string method = "generate";
  std::optional<int> support_bound;
  std::optional<int> window;
  int max_rounds = 64;

  // braid
  bool fuzz = false;
  Int c1 = 1;
  Int c2 = 1;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  Int range = 10;
  std::vector<int> positions;
  int bi = 1;
  int bj = 2;
  std::string map_set;
  std::string expect;
  std::string element;
  std::string descriptor;
};

struct Setup {
  CartanData cartan;
  std::optional<BuiltinType> type;
  Sequence seq;
  std::optional<Weight> lambda;
};

std::optional<fs::path> builtin_dir() {
  if (const char* dir = std::getenv("CRYSTALPOLY_BUILTIN_DIR"); dir && *dir)
    return fs::path(dir);
  return std::nullopt;
}

CartanData load_cartan_file(const std::string& name) {
  fs::path p(name);
  if (!fs::exists(p) && p.is_relative()) {
    if (auto dir = builtin_dir(); dir && fs::exists(*dir / p)) p = *dir / p;
  }
  if (!fs::exists(p)) throw ConfigError("cartan file not found: " + name);
  return io::cartan_from_json(io::read_json_file(p.string()));
}

std::vector<Int> parse_list(const std::string& text, const char* what) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::vector<Int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ConfigError(std::string("bad ") + what + " entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

/// Resolves the Cartan datum and iota; the weight only when `need_mode`.
Setup resolve(const Options& o, bool need_mode) {
  if (o.builtin.empty() == o.cartan_file.empty())
    throw ConfigError("give exactly one of --builtin or --cartan");
  Setup s;
  if (!o.builtin.empty()) {
    try {
      s.type = builtin_type(o.builtin);
      s.cartan = s.type->cartan;
    } catch (const std::invalid_argument&) {
      auto dir = builtin_dir();
      if (!dir || !fs::exists(*dir / (o.builtin + ".json")))
        throw ConfigError("unknown builtin type '" + o.builtin + "'");
      s.cartan = io::cartan_from_json(
          io::read_json_file((*dir / (o.builtin + ".json")).string()));
    }
  } else {
    s.cartan = load_cartan_file(o.cartan_file);
  }

  if (!o.iota.empty())
    s.seq = Sequence::parse(o.iota, s.cartan.rank());
  else if (s.type)
    s.seq = s.type->iota;
  else
    throw ConfigError("--iota is required for this Cartan datum");

  if (o.depth < 0) throw ConfigError("--depth must be >= 0");
  if (o.jobs < 1) throw ConfigError("--jobs must be >= 1");
  if (!need_mode) return s;

  if (o.binf && !o.lambda.empty())
    throw ConfigError("--binf and --lambda are exclusive");
  if (!o.binf && o.lambda.empty())
    throw ConfigError("give --lambda m1,...,mn or --binf");
  if (!o.binf) {
    Weight w{parse_list(o.lambda, "lambda")};
    if (w.rank() != s.cartan.rank())
      throw ConfigError("--lambda needs " + std::to_string(s.cartan.rank()) +
                        " entries");
    if (!w.dominant()) throw ConfigError("--lambda must be dominant (entries >= 0)");
    s.lambda = w;
  }
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw ConfigError("cannot write " + o.output);
  out << text;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw ConfigError("--format " + o.format + " is not supported by this command");
}

json mode_json(const std::optional<Weight>& lambda) { return io::mode_to_json(lambda); }

// ---- graph ----------------------------------------------------------------

int cmd_graph(const Options& o) {
  const Setup s = resolve(o, true);
  const ZCrystal z(s.cartan, s.seq, s.lambda);
  const auto g = z.bfs(o.depth, o.jobs);
  AxiomOptions ax;
  ax.epsilon_is_string_length = true;
  ax.phi_is_string_length = s.lambda.has_value();
  if (auto v = check_axioms(z, g.nodes, ax); !v.empty()) {
    for (const auto& x : v) std::cerr << "axiom violation: " << x.rule << ": " << x.detail << "\n";
    return kInternal;
  }

  if (o.format == "dot") {
    emit(o, io::graph_to_dot(g, [](const ZVector& x) { return x.str(); }));
  } else if (o.format == "json") {
    json j = io::graph_to_json(g, [&](const ZVector& x) { return io::zvector_to_json(x, s.lambda); });
    j["iota"] = s.seq.period();
    j["depth"] = o.depth;
    emit(o, j.dump(1) + "\n");
  } else {
    std::ostringstream out;
    out << "nodes " << g.size() << " edges " << g.edges.size() << "\n";
    for (std::size_t n = 0; n < g.size(); ++n)
      out << "n" << n << " depth " << g.depth[n] << " " << g.nodes[n].str() << "\n";
    for (const auto& e : g.edges) out << "n" << e.src << " -" << e.label << "-> n" << e.dst << "\n";
    emit(o, out.str());
  }
  return kOk;
}

// ---- inequality systems ---------------------------------------------------

bool alternates_12(const Sequence& seq) {
  for (int k = 1; k <= 2 * seq.period_length(); ++k)
    if (seq.at(k) != (k % 2 == 1 ? 1 : 2)) return false;
  return true;
}

FormSet build_system(const Options& o, const Setup& s) {
  if (o.method == "generate") {
    int K = 0;
    if (o.support_bound)
      K = *o.support_bound;
    else if (s.type && s.type->longest_length)
      K = *s.type->longest_length;
    else
      K = o.depth + 1;
    if (K < 1) throw ConfigError("-K must be >= 1");
    if (o.max_rounds < 1) throw ConfigError("--max-rounds must be >= 1");
    return generate_xi(PolyhedralContext(s.cartan, s.seq, s.lambda), K, o.max_rounds);
  }
  if (o.method == "rank2") {
    if (s.cartan.rank() != 2) throw ConfigError("--method rank2 needs a rank 2 datum");
    if (!alternates_12(s.seq)) throw ConfigError("--method rank2 needs iota \"1 2\"");
    const Int c1 = -s.cartan.a(1, 2);
    const Int c2 = -s.cartan.a(2, 1);
    std::optional<int> window = o.window;
    if (!l_max(c1, c2) && !window) window = o.depth + 1;
    return rank2_system(c1, c2, s.lambda, window);
  }
  if (o.method == "an") {
    const int n = s.cartan.rank();
    if (!(s.cartan == cartan_a(n))) throw ConfigError("--method an needs an A_n datum");
    std::vector<int> canon;
    for (int i = 1; i <= n; ++i) canon.push_back(i);
    if (!(s.seq == Sequence(canon, n)))
      throw ConfigError("--method an needs iota \"1 2 ... n\"");
    return an_system(n, s.lambda);
  }
  throw ConfigError("unknown --method '" + o.method + "'");
}

int cmd_inequalities(const Options& o) {
  require_format(o, {"text", "json"});
  const Setup s = resolve(o, true);
  const FormSet xi = build_system(o, s);

  json report = json::object();
  std::optional<PositivityReport> pos;
  std::optional<AmpleReport> ample;
  if (xi.saturated) {
    if (s.lambda)
      ample = check_ample(xi);
    else
      pos = check_positivity(xi, s.seq);
  }

  if (o.format == "json") {
    json j{{"method", o.method},
           {"iota", s.seq.period()},
           {"mode", mode_json(s.lambda)},
           {"support_bound", xi.support_bound},
           {"saturated", xi.saturated},
           {"rounds", xi.rounds},
           {"diagnostics", xi.diagnostics},
           {"forms", io::formset_to_json(xi)}};
    if (pos) {
      json w = json::array();
      for (const auto& x : pos->witnesses)
        w.push_back({{"form", io::form_to_json(x.form)}, {"position", x.position},
                     {"derivation", x.derivation.str(false)}});
      j["positivity"] = {{"holds", pos->holds}, {"witnesses", w}};
    }
    if (ample) {
      json w = json::array();
      for (const auto& [f, d] : ample->witnesses)
        w.push_back({{"form", io::form_to_json(f)}, {"derivation", d.str(true)}});
      j["ample"] = {{"holds", ample->ample}, {"witnesses", w}};
    }
    emit(o, j.dump(1) + "\n");
  } else {
    std::ostringstream out;
    if (!xi.saturated)
      out << "WARNING: generation did not saturate; the system below is partial\n";
    for (const auto& d : xi.diagnostics) out << "# " << d << "\n";
    out << "# method " << o.method << ", iota " << s.seq.str() << ", K " << xi.support_bound
        << ", " << xi.size() << " forms, " << (xi.saturated ? "saturated" : "not saturated")
        << "\n";
    std::vector<std::string> lines;
    for (const auto& [f, d] : xi.forms) {
      std::string line = f.str();
      if (!d.seed.empty()) line += "    [" + d.str(s.lambda.has_value()) + "]";
      lines.push_back(line);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l << "\n";
    if (pos) {
      out << (pos->holds ? "positivity holds" : "positivity fails") << "\n";
      for (const auto& w : pos->witnesses)
        out << "witness " << w.derivation.str(false) << " = " << w.form.str()
            << " (coefficient of x_" << w.position << ")\n";
    }
    if (ample) {
      out << (ample->ample ? "ample" : "not ample") << "\n";
      for (const auto& [f, d] : ample->witnesses)
        out << "witness " << d.str(true) << " = " << f.str() << "\n";
    }
    emit(o, out.str());
  }
  return xi.saturated ? kOk : kUnsaturated;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Options& o) {
  require_format(o, {"text", "json"});
  const Setup s = resolve(o, true);
  const FormSet xi = build_system(o, s);
  if (!xi.saturated) {
    std::cerr << "WARNING: generation did not saturate after " << xi.rounds << " rounds\n";
    return kUnsaturated;
  }
  const auto bfs = ZCrystal(s.cartan, s.seq, s.lambda).bfs(o.depth, o.jobs).node_set();
  const auto lattice = enumerate_lattice_points(xi, o.depth);
  std::vector<ZVector> only_bfs, only_lattice;
  std::set_difference(bfs.begin(), bfs.end(), lattice.begin(), lattice.end(),
                      std::back_inserter(only_bfs));
  std::set_difference(lattice.begin(), lattice.end(), bfs.begin(), bfs.end(),
                      std::back_inserter(only_lattice));
  const bool equal = only_bfs.empty() && only_lattice.empty();

  if (o.format == "json") {
    json a = json::array(), b = json::array();
    for (const auto& x : only_bfs) a.push_back(io::zvector_to_json(x, s.lambda));
    for (const auto& x : only_lattice) b.push_back(io::zvector_to_json(x, s.lambda));
    json j{{"equal", equal},         {"method", o.method},
           {"depth", o.depth},       {"bfs_count", bfs.size()},
           {"lattice_count", lattice.size()}, {"only_bfs", a},
           {"only_lattice", b}};
    emit(o, j.dump(1) + "\n");
  } else {
    std::ostringstream out;
    out << (equal ? "equal" : "MISMATCH") << ": bfs " << bfs.size() << ", lattice "
        << lattice.size() << " (method " << o.method << ", depth " << o.depth << ")\n";
    for (const auto& x : only_bfs) out << "only in bfs: " << x.str() << "\n";
    for (const auto& x : only_lattice) out << "only in lattice: " << x.str() << "\n";
    emit(o, out.str());
  }
  return equal ? kOk : kMismatch;
}

// ---- braid ----------------------------------------------------------------

int braid_fuzz_cmd(const Options& o) {
  if (o.samples == 0) throw ConfigError("--n must be positive");
  BraidContext(1, 2, o.c1, o.c2);  // validates
  const auto r = braid_fuzz(o.c1, o.c2, o.samples, o.seed, o.range, o.jobs);
  if (o.format == "json") {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"detail", x.detail}});
    emit(o, json{{"c1", r.c1}, {"c2", r.c2}, {"samples", r.samples}, {"seed", r.seed},
                 {"range", o.range}, {"violations", v}}
                    .dump(1) +
                "\n");
  } else {
    std::ostringstream out;
    out << "braid fuzz c1=" << r.c1 << " c2=" << r.c2 << " samples=" << r.samples
        << " seed=" << r.seed << " range=" << o.range << " violations=" << r.violations.size()
        << "\n";
    for (const auto& x : r.violations) out << "violation: " << x.rule << ": " << x.detail << "\n";
    emit(o, out.str());
  }
  return r.ok() ? kOk : kBraid;
}

int braid_element_cmd(const Options& o) {
  BraidContext ctx = o.builtin.empty() && o.cartan_file.empty()
                         ? BraidContext(o.bi, o.bj, o.c1, o.c2)
                         : BraidContext::from_cartan(resolve(o, false).cartan, o.bi, o.bj);
  json in;
  try {
    in = json::parse(o.element);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("--element: ") + e.what());
  }
  const TensorElem t = io::tensor_from_json(in);
  const TensorElem image = phi(ctx, t);
  if (phi_inverse(ctx, image) != t) {
    std::cerr << "involution violated\n";
    return kBraid;
  }
  if (o.format == "json")
    emit(o, io::tensor_to_json(image).dump() + "\n");
  else
    emit(o, TensorCrystal(CartanData({{2, -ctx.c1()}, {-ctx.c2(), 2}})).describe(image) + "\n");
  return kOk;
}

struct VectorSet {
  std::optional<std::vector<int>> iota;
  std::optional<int> depth;
  std::optional<Weight> mode;
  std::vector<ZVector> vectors;
};

VectorSet read_vector_set(const std::string& path) {
  const json j = io::read_json_file(path);
  VectorSet v;
  const json* items = &j;
  if (j.is_object()) {
    if (j.contains("iota")) v.iota = j.at("iota").get<std::vector<int>>();
    if (j.contains("depth")) v.depth = j.at("depth").get<int>();
    if (j.contains("mode")) v.mode = io::mode_from_json(j.at("mode"));
    items = &j.at("vectors");
  }
  for (const auto& item : *items) v.vectors.push_back(io::zvector_from_json(item).first);
  return v;
}

int braid_map_set_cmd(const Options& o) {
  require_format(o, {"text", "json"});
  Options local = o;
  if (!o.descriptor.empty()) {
    const auto d = io::braid_descriptor_from_json(io::read_json_file(o.descriptor));
    local.bi = d.i;
    local.bj = d.j;
    local.positions = d.window;
  }
  const VectorSet in = read_vector_set(local.map_set);
  Setup s = resolve(local, false);
  if (local.iota.empty() && in.iota) s.seq = Sequence(*in.iota, s.cartan.rank());

  const BraidContext ctx = BraidContext::from_cartan(s.cartan, local.bi, local.bj);
  auto& w = local.positions;
  if (w.empty()) throw ConfigError("--window is required with --map-set");
  std::sort(w.begin(), w.end());
  for (std::size_t n = 1; n < w.size(); ++n)
    if (w[n] != w[n - 1] + 1) throw ConfigError("--window must be contiguous");
  if (static_cast<int>(w.size()) != ctx.length())
    throw ConfigError("--window needs " + std::to_string(ctx.length()) + " positions");
  const int low = w.front();
  const auto pattern = ctx.pattern();
  for (int n = 0; n < ctx.length(); ++n)
    if (s.seq.at(w.back() - n) != pattern[static_cast<std::size_t>(n)])
      throw ConfigError("iota does not read " + std::to_string(local.bi) + "," +
                        std::to_string(local.bj) + ",... on the window");

  const Sequence target = braid_sequence(s.seq, ctx, low);
  std::set<ZVector> images;
  std::vector<Violation> violations;
  for (const auto& x : in.vectors) {
    const ZVector y = apply_at_positions(ctx, s.seq, x, low);
    if (apply_at_positions(ctx.mirrored(), target, y, low) != x)
      violations.push_back({"involution", x.str()});
    if (!images.insert(y).second) violations.push_back({"injectivity", y.str()});
  }

  json doc{{"iota", target.period()}, {"mode", mode_json(in.mode)}};
  if (in.depth) doc["depth"] = *in.depth;
  json vs = json::array();
  for (const auto& y : images) vs.push_back(io::zvector_to_json(y, in.mode));
  doc["vectors"] = vs;

  int code = violations.empty() ? kOk : kBraid;
  std::ostringstream out;
  if (o.format == "json") {
    out << doc.dump(1) << "\n";
  } else {
    out << "iota " << target.str() << ", " << images.size() << " vectors\n";
    for (const auto& y : images) out << y.str() << "\n";
  }
  for (const auto& v : violations) std::cerr << "violation: " << v.rule << ": " << v.detail << "\n";

  if (!o.expect.empty()) {
    const VectorSet golden = read_vector_set(o.expect);
    const std::set<ZVector> want(golden.vectors.begin(), golden.vectors.end());
    const bool same = want == images;
    std::cerr << (same ? "matches " : "DIFFERS FROM ") << o.expect << "\n";
    if (!same && code == kOk) code = kMismatch;
  }
  emit(o, out.str());
  return code;
}

int cmd_braid(const Options& o) {
  const int modes = (o.fuzz ? 1 : 0) + (o.map_set.empty() ? 0 : 1) + (o.element.empty() ? 0 : 1);
  if (modes != 1) throw ConfigError("braid needs exactly one of --fuzz, --map-set, --element");
  if (o.fuzz) return braid_fuzz_cmd(o);
  if (!o.element.empty()) return braid_element_cmd(o);
  return braid_map_set_cmd(o);
}

void add_common(CLI::App* cmd, Options& o, bool mode_flags) {
  cmd->add_option("--builtin", o.builtin, "built-in type: a1xa1 a2 b2 c2 g2 a1tilde a<n> an(n)");
  cmd->add_option("--cartan", o.cartan_file, "Cartan datum JSON file");
  cmd->add_option("--iota", o.iota, "period of iota, i_1 first (\"1 2 3\")");
  if (mode_flags) {
    cmd->add_option("--lambda", o.lambda, "highest weight m1,...,mn");
    cmd->add_flag("--binf", o.binf, "B(infinity) instead of B(lambda)");
  }
  cmd->add_option("--depth", o.depth, "BFS depth / lattice total bound")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  cmd->add_option("--format", o.format, "dot | json | text")
      ->check(CLI::IsMember({"dot", "json", "text"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", o.output, "write to file instead of stdout");
}

void add_system(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "generate | rank2 | an")
      ->check(CLI::IsMember({"generate", "rank2", "an"}))
      ->capture_default_str();
  cmd->add_option("-K,--support", o.support_bound, "support bound for --method generate");
  cmd->add_option("--window", o.window, "coordinate window for infinite rank 2 types");
  cmd->add_option("--max-rounds", o.max_rounds, "generation round limit")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crystalpoly: polyhedral realizations of crystal bases"};
  app.require_subcommand(1);
  Options o;

  auto* graph = app.add_subcommand("graph", "BFS crystal graph of B(lambda) or B(infinity)");
  add_common(graph, o, true);

  auto* ineq = app.add_subcommand("inequalities", "inequality system with saturation and ampleness report");
  add_common(ineq, o, true);
  add_system(ineq, o);

  auto* verify = app.add_subcommand("verify", "compare BFS against the lattice points of a system");
  add_common(verify, o, true);
  add_system(verify, o);

  auto* braid = app.add_subcommand("braid", "braid-type isomorphisms");
  add_common(braid, o, false);
  braid->add_flag("--fuzz", o.fuzz, "run the property suite on random inputs");
  braid->add_option("--c1", o.c1, "-<h_i,alpha_j>")->capture_default_str();
  braid->add_option("--c2", o.c2, "-<h_j,alpha_i>")->capture_default_str();
  braid->add_option("--n", o.samples, "fuzz sample count")->capture_default_str();
  braid->add_option("--seed", o.seed, "fuzz seed")->capture_default_str();
  braid->add_option("--range", o.range, "fuzz entries lie in [-range, range]")->capture_default_str();
  braid->add_option("--window", o.positions, "positions the map acts on, e.g. 4,5,6")->delimiter(',');
  braid->add_option("--i", o.bi, "first index of the pattern")->capture_default_str();
  braid->add_option("--j", o.bj, "second index of the pattern")->capture_default_str();
  braid->add_option("--map-set", o.map_set, "JSON vector set to transport");
  braid->add_option("--expect", o.expect, "JSON vector set the image must equal");
  braid->add_option("--element", o.element, "JSON tensor element, e.g. [[1,-2],[2,3]]");
  braid->add_option("--descriptor", o.descriptor, "JSON {i, j, window}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (graph->parsed()) return cmd_graph(o);
    if (ineq->parsed()) return cmd_inequalities(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_braid(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
