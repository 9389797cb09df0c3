#include "graphlie/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "graphlie/basis.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/report.hpp"
#include "graphlie/serialize.hpp"

namespace graphlie {

namespace {

struct Options {
  std::string edges, graph6, in, out, format = "json", t = "1/1";
  int k = 0;
  int n = 0;
  int n_max = 0;
  unsigned threads = 0;
  bool verbose = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError("malformed JSON in " + what + ": " + e.what());
  }
}

SimpleGraph read_graph(const Options& o) {
  if (!o.edges.empty()) return parse_edge_list_json(o.edges);
  if (!o.graph6.empty()) return parse_graph6(o.graph6);
  if (!o.in.empty()) {
    const std::string text = read_file(o.in);
    if (!looks_like_json(text)) return parse_graph6(text);
    if (parse_json(text, o.in).contains("brackets")) throw DomainError("\"" + o.in + "\" holds an algebra, not a graph");
    return parse_edge_list_json(text);
  }
  throw DomainError("one of --edges, --graph6, --in is required");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw DomainError("cannot open \"" + o.out + "\" for writing");
  f << text;
  if (!f) throw DomainError("write to \"" + o.out + "\" failed");
}

void add_graph_input(CLI::App* cmd, Options& o) {
  auto* e = cmd->add_option("--edges", o.edges, "edge-list JSON {\"m\":int,\"edges\":[[i,j],...]}, 1-based");
  auto* g = cmd->add_option("--graph6", o.graph6, "graph6 code");
  auto* i = cmd->add_option("--in", o.in, "file with an edge-list JSON, graph6 line or algebra JSON");
  e->excludes(g)->excludes(i);
  g->excludes(i);
}

void add_k(CLI::App* cmd, Options& o, bool required) {
  auto* k = cmd->add_option("--k", o.k, "nilpotency step")->check(CLI::Range(1, 64));
  if (required) k->required();
}

void add_out(CLI::App* cmd, Options& o, bool with_format) {
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  if (with_format) cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

class Logger {
public:
  Logger(std::ostream& err, bool on) : err_(err), on_(on), start_(std::chrono::steady_clock::now()) {}
  template <class... T>
  void operator()(const T&... parts) const {
    if (!on_) return;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    err_ << "[" << ms.count() << " ms] ";
    (err_ << ... << parts);
    err_ << "\n";
  }

private:
  std::ostream& err_;
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

SweepRow single_row(const SimpleGraph& g, int k, RigidityVerdict v) {
  const auto dims = dimension_oracle(g, k);
  SweepRow r;
  r.graph = g;
  r.graph6 = to_graph6(g);
  r.m = g.order();
  r.k = k;
  for (auto d : dims) r.dim += d;
  r.verdict = std::move(v);
  return r;
}

int dispatch(CLI::App& app, const Options& o, std::ostream& out, const Logger& log) {
  auto* algebra = app.get_subcommand("algebra");
  auto* cohomology = app.get_subcommand("cohomology");
  auto* rigidity = app.get_subcommand("rigidity");
  auto* deform = app.get_subcommand("deform");
  auto* graphs = app.get_subcommand("graphs");

  if (algebra->parsed()) {
    const SimpleGraph g = read_graph(o);
    const GradedLieAlgebra a = structure_constants(g, o.k);
    log("built g(", o.k, ",G) on ", g.order(), " vertices, grading (", dims_text(a.grading()), ")");
    emit(o, algebra_to_json(a).dump(2) + "\n", out);
    return 0;
  }

  if (cohomology->parsed()) {
    H2NilReport r;
    Json doc;
    if (!o.in.empty()) {
      const std::string text = read_file(o.in);
      if (looks_like_json(text)) doc = parse_json(text, o.in);
    }
    if (doc.is_object() && doc.contains("brackets")) {
      const auto parsed = algebra_from_json(doc);
      r = std::holds_alternative<GradedLieAlgebra>(parsed) ? h2_nil(std::get<GradedLieAlgebra>(parsed))
                                                           : h2_nil(std::get<LieAlgebra>(parsed));
    } else {
      const SimpleGraph g = read_graph(o);
      r = h2_nil(structure_constants(g, o.k == 0 ? 2 : o.k));
    }
    log("h2_nil computed over ", r.blocks, " weight blocks");
    emit(o, h2_report_to_json(r).dump(2) + "\n", out);
    return 0;
  }

  if (rigidity->parsed()) {
    const ReportFormat fmt = parse_report_format(o.format);
    if (rigidity->get_subcommand("classify")->parsed()) {
      const SimpleGraph g = read_graph(o);
      const SweepRow row = single_row(g, o.k, classify(g, o.k));
      log("verdict ", to_string(row.verdict.verdict));
      emit(o, fmt == ReportFormat::Json ? sweep_row_to_json(row).dump(2) + "\n" : render_report({row}, fmt), out);
      return 0;
    }
    const auto rows = sweep(o.n_max, o.k, o.threads);
    log("classified ", rows.size(), " isomorphism classes");
    write_report(rows, o.out, fmt, out);
    return 0;
  }

  if (deform->parsed()) {
    const SimpleGraph g = read_graph(o);
    const Rational t = parse_rational(o.t);
    const GradedLieAlgebra a = structure_constants(g, o.k);
    const auto witness = find_witness(g, a, o.k);
    if (!witness) throw DomainError("no witness deformation exists for this graph at this k");
    std::size_t a1, a2;
    Vector y;
    if (const auto* gw = std::get_if<GradedWitness>(&*witness)) {
      a1 = gw->a1, a2 = gw->a2, y = gw->y;
    } else {
      const auto& tw = std::get<TwoStepWitness>(*witness);
      a1 = tw.v, a2 = tw.w, y = tw.z;
    }
    const DeformedAlgebra d{a.algebra(), build_sigma(a, a1, a2, y).sigma};
    if (!deform_check(d).ok) throw InvariantViolation("deform emit: witness cocycle fails the deformation identities");
    Json doc = {{"t", to_string(t)}, {"witness", certificate_to_json(*witness)}, {"algebra", algebra_to_json(d.materialize(t))}};
    emit(o, doc.dump(2) + "\n", out);
    return 0;
  }

  if (graphs->parsed()) {
    std::string text;
    for (const auto& g : enumerate_graphs(o.n)) text += to_graph6(g) + "\n";
    emit(o, text, out);
    return 0;
  }
  return 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graph Lie algebras g(k,G): construction, nil-cohomology and rigidity certificates", "graphlie"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", o.verbose, "log progress to stderr");

  auto* algebra = app.add_subcommand("algebra", "construct g(k,G)")->require_subcommand(1);
  auto* build = algebra->add_subcommand("build", "structure constants as JSON");
  add_graph_input(build, o);
  add_k(build, o, true);
  add_out(build, o, false);

  auto* cohomology = app.add_subcommand("cohomology", "nil-cohomology")->require_subcommand(1);
  auto* h2 = cohomology->add_subcommand("h2nil", "H^2_{2-nil} of g(2,G) or of an algebra JSON file");
  add_graph_input(h2, o);
  add_k(h2, o, false);
  add_out(h2, o, false);

  auto* rigidity = app.add_subcommand("rigidity", "rigidity verdicts")->require_subcommand(1);
  auto* classify_cmd = rigidity->add_subcommand("classify", "classify one graph");
  add_graph_input(classify_cmd, o);
  add_k(classify_cmd, o, true);
  add_out(classify_cmd, o, true);
  auto* sweep_cmd = rigidity->add_subcommand("sweep", "classify every graph on 2..n-max vertices");
  sweep_cmd->add_option("--n-max", o.n_max, "largest order")->required()->check(CLI::Range(2, kSweepMaxOrder));
  sweep_cmd->add_option("--k", o.k, "nilpotency step")->required()->check(CLI::Range(2, kSweepMaxStep));
  sweep_cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  add_out(sweep_cmd, o, true);

  auto* deform = app.add_subcommand("deform", "witness deformations")->require_subcommand(1);
  auto* emit_cmd = deform->add_subcommand("emit", "bracket mu + t sigma for the first witness");
  add_graph_input(emit_cmd, o);
  add_k(emit_cmd, o, true);
  emit_cmd->add_option("--t", o.t, "deformation parameter p/q");
  add_out(emit_cmd, o, false);

  auto* graphs = app.add_subcommand("graphs", "graph utilities")->require_subcommand(1);
  auto* enumerate = graphs->add_subcommand("enumerate", "one graph6 line per isomorphism class");
  enumerate->add_option("--n", o.n, "order")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  add_out(enumerate, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  const Logger log(err, o.verbose);
  try {
    return dispatch(app, o, out, log);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace graphlie
