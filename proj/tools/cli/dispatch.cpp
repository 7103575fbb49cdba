// Copyright 2026 The parsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/dispatch.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "cli/io.hpp"
#include "parsub/adversarial.hpp"
#include "parsub/bounds.hpp"
#include "parsub/errors.hpp"
#include "parsub/graphmetrics.hpp"
#include "parsub/greedy.hpp"
#include "parsub/structure.hpp"
#include "parsub/suite.hpp"

namespace parsub::cli {
namespace {

using Field = std::pair<std::string, Json>;
using Record = std::vector<Field>;

// Named one-line sections followed by optional table rows. Text mode prints
// the rows first, one line each, then each section; JSON mode nests both in
// a single object. A raw document or raw text replaces all of it.
struct Report {
  std::vector<std::pair<std::string, Record>> sections;
  std::vector<Record> rows;
  std::optional<Json> document;
  std::optional<std::string> raw_text;
  int status = kExitOk;

  Record& Section(const std::string& name) {
    sections.emplace_back(name, Record{});
    return sections.back().second;
  }
};

std::string RenderValue(const Json& v, bool nested = false) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || s.find_first_of(" \t\"=") != std::string::npos) return v.dump();
    return s;
  }
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ',';
      out += RenderValue(v[k], true);
    }
    return out + "}";
  }
  (void)nested;
  return v.dump();
}

std::string RenderRecord(const Record& record) {
  std::string line;
  for (const auto& [key, value] : record) {
    if (!line.empty()) line += ' ';
    line += key + "=" + RenderValue(value);
  }
  return line;
}

Json RecordToJson(const Record& record) {
  Json obj = Json::object();
  for (const auto& [key, value] : record) obj[key] = value;
  return obj;
}

void Emit(const Report& report, bool json, std::ostream& out) {
  if (report.document) {
    out << report.document->dump(2) << '\n';
    return;
  }
  if (report.raw_text && !json) {
    out << *report.raw_text;
    return;
  }
  if (json) {
    Json doc = Json::object();
    for (const auto& [name, record] : report.sections) doc[name] = RecordToJson(record);
    if (!report.rows.empty() || report.sections.empty()) {
      Json rows = Json::array();
      for (const auto& r : report.rows) rows.push_back(RecordToJson(r));
      doc["rows"] = std::move(rows);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& r : report.rows) out << RenderRecord(r) << '\n';
  for (const auto& [name, record] : report.sections) out << RenderRecord(record) << '\n';
}

Json Opt(const std::optional<Rational>& r) {
  return r ? RationalToJson(*r) : Json(nullptr);
}

Json OneBased(const std::vector<int>& vertices) { return Json(vertices); }

Rational ParseFlagRational(const std::string& text, const std::string& flag) {
  try {
    return ParseRational(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

template <typename T>
const T& RequireFlag(const std::optional<T>& value, const std::string& flag,
                     const std::string& context) {
  if (!value) throw InputError(flag + ": required for " + context);
  return *value;
}

std::string DecimalString(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(10) << ToDouble(r);
  return os.str();
}

// ---------------------------------------------------------------------------
// Graph families shared by construct and adversarial.

const std::vector<std::string> kFamilies = {"optimal", "induced", "turan", "complement-turan",
                                            "edgeless", "complete", "path", "star"};

struct FamilyArgs {
  std::string family = "optimal";
  std::optional<int> n, q, r;
};

InformationGraph BuildFamily(const FamilyArgs& a) {
  const std::string ctx = "--family " + a.family;
  const int n = RequireFlag(a.n, "--n", ctx);
  if (a.family == "optimal") return OptimalGraph(n, RequireFlag(a.q, "--q", ctx));
  if (a.family == "induced") {
    return InducedGraph(OptimalAssignment(n, RequireFlag(a.q, "--q", ctx)));
  }
  if (a.family == "turan") return TuranGraph(n, RequireFlag(a.r, "--r", ctx));
  if (a.family == "complement-turan") return ComplementTuran(n, RequireFlag(a.r, "--r", ctx));
  if (n < 0) throw InputError("--n: must be nonnegative");
  if (a.family == "edgeless") return InformationGraph::Edgeless(n);
  if (a.family == "complete") return InformationGraph::Complete(n);
  if (a.family == "path") return InformationGraph::Path(n);
  return InformationGraph::Star(n);
}

void AddFamilyOptions(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "Graph family")->check(CLI::IsMember(kFamilies));
  cmd->add_option("--n", a.n, "Number of agents");
  cmd->add_option("--q", a.q, "Number of iterations");
  cmd->add_option("--r", a.r, "Class count for Turán families");
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::optional<int> n, q, k;
  std::optional<std::string> lambda, graph;
  int graph_cap = kDefaultGraphCap;
};

Report RunBounds(const BoundsArgs& a) {
  Report report;
  std::optional<Rational> lambda;
  if (a.lambda) lambda = ParseFlagRational(*a.lambda, "--lambda");
  bool any = false;
  if (a.graph) {
    any = true;
    const InformationGraph g = LoadGraph(*a.graph);
    const RatioBounds b = GraphRatioBounds(g, a.graph_cap);
    Record& rec = report.Section("graph");
    rec.emplace_back("n", g.n());
    rec.emplace_back("edges", g.edge_count());
    rec.emplace_back("upper", RationalToJson(b.upper));
    rec.emplace_back("lower", RationalToJson(b.lower));
    rec.emplace_back("refined_upper", Opt(b.refined_upper));
    rec.emplace_back("source", b.source);
    if (lambda) {
      const RatioBounds c = CurvatureGraphBounds(g, *lambda, a.graph_cap);
      Record& crec = report.Section("curvature");
      crec.emplace_back("lambda", RationalToJson(*lambda));
      crec.emplace_back("upper", RationalToJson(c.upper));
      crec.emplace_back("lower", RationalToJson(c.lower));
      crec.emplace_back("source", c.source);
    }
  }
  if (a.n && a.q) {
    any = true;
    Record& rec = report.Section("rho");
    rec.emplace_back("n", *a.n);
    rec.emplace_back("q", *a.q);
    rec.emplace_back("r", BlockSize(*a.n, *a.q));
    rec.emplace_back("rho", RationalToJson(Rho(*a.n, *a.q)));
    if (lambda) {
      const RatioBounds c = CurvatureEtaBounds(*a.n, *a.q, *lambda);
      Record& crec = report.Section("eta");
      crec.emplace_back("lambda", RationalToJson(*lambda));
      crec.emplace_back("upper", RationalToJson(c.upper));
      crec.emplace_back("lower", RationalToJson(c.lower));
      crec.emplace_back("source", c.source);
    }
  }
  if (a.n && a.k) {
    any = true;
    Record& rec = report.Section("min_edges");
    rec.emplace_back("n", *a.n);
    rec.emplace_back("k", *a.k);
    rec.emplace_back("min_edges", MinEdgesBound(*a.n, *a.k));
  }
  if (!any) throw InputError("bounds: expected --n with --q or --k, or --graph");
  return report;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string what;
  FamilyArgs family;
  std::optional<std::string> out;
};

Report RunConstruct(const ConstructArgs& a) {
  Report report;
  Json doc;
  Record rec;
  if (a.what == "graph") {
    const InformationGraph g = BuildFamily(a.family);
    doc = GraphToJson(g);
    rec = {{"family", a.family.family}, {"n", g.n()}, {"edges", g.edge_count()}};
  } else {
    if (a.family.family != "optimal") {
      throw InputError("--family: assignments support only the optimal family");
    }
    const int n = RequireFlag(a.family.n, "--n", "construct assignment");
    const int q = RequireFlag(a.family.q, "--q", "construct assignment");
    const IterationAssignment p = OptimalAssignment(n, q);
    doc = AssignmentToJson(p);
    rec = {{"family", "optimal"}, {"n", p.n()}, {"q", p.q}};
  }
  if (!a.out) {
    report.document = std::move(doc);
    return report;
  }
  WriteJsonFile(*a.out, doc);
  rec.emplace(rec.begin(), "wrote", *a.out);
  report.sections.emplace_back("construct", std::move(rec));
  return report;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string what;
  std::string in;
  std::optional<int> p;
  int graph_cap = kDefaultGraphCap;
  int exhaustive_cap = kDefaultExhaustiveCap;
};

std::string_view LemmaName(LemmaCheck c) {
  switch (c) {
    case LemmaCheck::kHolds: return "holds";
    case LemmaCheck::kViolated: return "violated";
    case LemmaCheck::kNotApplicable: return "not-applicable";
  }
  return "?";
}

std::string_view PropertyName(PropertyViolation::Property p) {
  switch (p) {
    case PropertyViolation::Property::kNormalized: return "normalized";
    case PropertyViolation::Property::kMonotone: return "monotone";
    case PropertyViolation::Property::kSubmodular: return "submodular";
  }
  return "?";
}

Json IdSet(const SetFunction& f, ElementSet set) {
  Json ids = Json::array();
  for (int e : Members(set)) ids.push_back(f.ground()[e]);
  return ids;
}

void AnalyzeGraph(const InformationGraph& g, const AnalyzeArgs& a, Report& report) {
  const InvariantWitness alpha = IndependenceNumber(g, a.graph_cap);
  const InvariantWitness theta = CliqueCoverNumber(g, a.graph_cap);
  const InvariantWitness omega = CliqueNumber(g, a.graph_cap);
  const Schedule schedule = EarliestSchedule(g);
  report.Section("invariants") = {{"alpha", alpha.value},
                                  {"theta", theta.value},
                                  {"omega", omega.value},
                                  {"feasible_q", schedule.depth},
                                  {"edges", g.edge_count()}};
  report.Section("witnesses") = {{"independent_set", OneBased(alpha.vertices)},
                                 {"clique", OneBased(omega.vertices)},
                                 {"clique_cover", Json(theta.partition)}};
  const RatioBounds b = GraphRatioBounds(g, a.graph_cap);
  const auto sibling = FindSibling(g, a.graph_cap);
  Record& brec = report.Section("bounds");
  brec.emplace_back("sibling", sibling.has_value());
  if (sibling) brec.emplace_back("sibling_w", sibling->w);
  brec.emplace_back("upper", RationalToJson(b.upper));
  brec.emplace_back("lower", RationalToJson(b.lower));
  brec.emplace_back("refined_upper", Opt(b.refined_upper));
  if (a.p) {
    const InvariantWitness ap = PseudoIndependenceNumber(g, *a.p, a.graph_cap);
    const auto psib = FindPSibling(g, *a.p, a.graph_cap);
    Record& prec = report.Section("pseudo");
    prec.emplace_back("p", *a.p);
    prec.emplace_back("alpha_p", ap.value);
    prec.emplace_back("set", OneBased(ap.vertices));
    prec.emplace_back("p_sibling", psib.has_value());
    if (psib) prec.emplace_back("p_sibling_w", psib->w);
    prec.emplace_back("no_disjoint_max_sets",
                      std::string(LemmaName(VerifyNoDisjointMaxSets(g, *a.p, a.graph_cap))));
  }
}

Report RunAnalyze(const AnalyzeArgs& a) {
  Report report;
  if (a.what == "graph") {
    AnalyzeGraph(LoadGraph(a.in), a, report);
    return report;
  }
  const LoadedInstance inst = LoadInstance(a.in);
  report.Section("instance") = {{"kind", std::string(KindName(inst.f.kind()))},
                                {"ground", inst.f.size()},
                                {"agents", inst.x.n()}};
  const PropertyReport props = CheckProperties(inst.f, a.exhaustive_cap);
  report.Section("properties") = {{"normalized", props.normalized},
                                  {"monotone", props.monotone},
                                  {"submodular", props.submodular},
                                  {"curvature", Opt(props.curvature)}};
  for (const auto& v : props.counterexamples) {
    Record row{{"violation", std::string(PropertyName(v.property))}};
    row.emplace_back("element", v.element ? Json(inst.f.ground()[*v.element]) : Json(nullptr));
    row.emplace_back("a", IdSet(inst.f, v.a));
    row.emplace_back("b", IdSet(inst.f, v.b));
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------

struct ScheduleArgs {
  std::optional<std::string> graph, assignment;
  std::optional<int> q;
};

Report RunSchedule(const ScheduleArgs& a) {
  Report report;
  if (a.graph.has_value() == a.assignment.has_value()) {
    throw InputError("schedule: expected exactly one of --graph or --assignment");
  }
  if (a.graph) {
    const InformationGraph g = LoadGraph(*a.graph);
    const Schedule s = EarliestSchedule(g);
    Record& rec = report.Section("schedule");
    rec.emplace_back("depth", s.depth);
    rec.emplace_back("P", Json(s.assignment.iteration));
    if (a.q) rec.emplace_back("feasible", IsFeasible(g, *a.q));
    return report;
  }
  const IterationAssignment p = LoadAssignment(*a.assignment);
  const InformationGraph g = InducedGraph(p);
  report.Section("assignment") = {{"valid", true},
                                  {"n", p.n()},
                                  {"q", p.q},
                                  {"induced_edges", g.edge_count()},
                                  {"depth", EarliestSchedule(g).depth}};
  return report;
}

// ---------------------------------------------------------------------------

struct RunArgs {
  std::string instance;
  std::optional<std::string> graph, assignment;
  std::string policy = "worst";
  bool ratio = false;
  long node_cap = kDefaultTieNodeCap;
  long profile_cap = kDefaultProfileCap;
};

Record OutcomeRecord(const SetFunction& f, const GreedyOutcome& o) {
  Json marginals = Json::array();
  for (const auto& m : o.per_agent_marginal) marginals.push_back(RationalToJson(m));
  return {{"value", RationalToJson(o.value)},
          {"profile", ProfileToString(f, o.profile)},
          {"marginals", std::move(marginals)},
          {"resolutions", o.resolutions_explored},
          {"depth", o.schedule.depth}};
}

Report RunRun(const RunArgs& a) {
  Report report;
  const LoadedInstance inst = LoadInstance(a.instance);
  if (a.graph && a.assignment) throw InputError("run: --graph and --assignment are exclusive");
  const TiePolicy policy = *ParsePolicy(a.policy);

  std::optional<IterationAssignment> assignment;
  std::optional<InformationGraph> g;
  if (a.assignment) {
    assignment = LoadAssignment(*a.assignment);
    g = InducedGraph(*assignment);
  } else if (a.graph) {
    g = LoadGraph(*a.graph);
  } else if (inst.graph) {
    g = inst.graph;
  } else {
    throw InputError("run: expected --graph or --assignment (the instance embeds no graph)");
  }

  Rational reported;
  if (policy == TiePolicy::kAll) {
    const auto outcomes = RunGreedyAll(inst.f, inst.x, *g, a.node_cap);
    for (const auto& o : outcomes) report.rows.push_back(OutcomeRecord(inst.f, o));
    reported = outcomes.front().value;
    for (const auto& o : outcomes) reported = std::min(reported, o.value);
    report.Section("run") = {{"policy", a.policy},
                             {"outcomes", static_cast<int>(outcomes.size())},
                             {"worst_value", RationalToJson(reported)}};
  } else {
    const GreedyOutcome o = assignment
                                ? RunParallelGreedy(inst.f, inst.x, *assignment, policy, a.node_cap)
                                : RunGreedy(inst.f, inst.x, *g, policy, a.node_cap);
    Record rec = OutcomeRecord(inst.f, o);
    rec.emplace(rec.begin(), "policy", a.policy);
    report.sections.emplace_back("run", std::move(rec));
    reported = o.value;
  }
  if (a.ratio) {
    const Optimum opt = BruteForceOptimum(inst.f, inst.x, a.profile_cap);
    if (opt.value == 0) throw UndefinedRatioError("ratio: optimum value is 0");
    report.Section("optimum") = {{"value", RationalToJson(opt.value)},
                                 {"profile", ProfileToString(inst.f, opt.profile)},
                                 {"ratio", RationalToJson(reported / opt.value)}};
  }
  return report;
}

// ---------------------------------------------------------------------------

struct AdversarialArgs {
  std::string what;
  std::optional<std::string> graph, lambda, out;
  std::optional<int> p;
  FamilyArgs family;
  bool family_given = false;
  bool verify = false;
  int graph_cap = kDefaultGraphCap;
};

Report RunAdversarial(const AdversarialArgs& a) {
  Report report;
  auto graph = [&]() -> InformationGraph {
    if (a.graph && a.family_given) throw InputError("--graph: exclusive with --family");
    if (a.graph) return LoadGraph(*a.graph);
    if (a.family_given) return BuildFamily(a.family);
    throw InputError("adversarial " + a.what + ": expected --graph or --family");
  };
  std::optional<WitnessInstance> w;
  if (a.what == "curvature") {
    const Rational lambda =
        ParseFlagRational(RequireFlag(a.lambda, "--lambda", "adversarial curvature"), "--lambda");
    w = CurvatureWitness(graph(), lambda, a.graph_cap);
  } else if (a.what == "p-additive") {
    w = PAdditiveWitness(graph(), RequireFlag(a.p, "--p", "adversarial p-additive"),
                         a.graph_cap);
  } else {
    w = SequentialHalfWitness();
  }
  const Json doc = WitnessToJson(*w);
  if (!a.out && !a.verify) {
    report.document = doc;
    return report;
  }
  Record& rec = report.Section("witness");
  if (a.out) {
    WriteJsonFile(*a.out, doc);
    rec.emplace_back("wrote", *a.out);
  }
  rec.emplace_back("bound_ref", w->bound_ref);
  rec.emplace_back("ground", w->f.size());
  rec.emplace_back("agents", w->x.n());
  rec.emplace_back("predicted_ratio", RationalToJson(w->predicted_ratio));
  if (a.verify) {
    const Rational empirical = EmpiricalRatio(w->f, w->x, w->g);
    rec.emplace_back("empirical_ratio", RationalToJson(empirical));
    rec.emplace_back("match", empirical == w->predicted_ratio);
    if (empirical != w->predicted_ratio) report.status = kExitFailRows;
  }
  return report;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
  std::optional<std::string> suite, instance, graph, seed_text;
  int alpha_max = 4;
  std::vector<std::string> lambdas = {"0", "1/4", "1/2", "3/4", "1"};
  int count = 200;
  int n_max = 6;
  bool all_q = false;
  CertifyOptions options;
};

Report RunCertify(const CertifyArgs& a) {
  if (a.suite.has_value() == a.instance.has_value()) {
    throw InputError("certify: expected exactly one of --suite or --instance");
  }
  std::vector<CertifyCase> cases;
  if (a.instance) {
    LoadedInstance inst = LoadInstance(*a.instance);
    std::optional<InformationGraph> g = a.graph ? LoadGraph(*a.graph) : inst.graph;
    if (!g) throw InputError("certify: expected --graph (the instance embeds no graph)");
    cases.push_back(CertifyCase{*a.instance, a.graph.value_or("embedded"), std::move(inst.f),
                                std::move(inst.x), std::move(*g), inst.predicted_ratio});
  } else if (*a.suite == "witnesses") {
    std::vector<Rational> lambdas;
    for (const auto& text : a.lambdas) lambdas.push_back(ParseFlagRational(text, "--lambdas"));
    cases = WitnessSuite(a.alpha_max, lambdas);
  } else {
    const std::string& text = RequireFlag(a.seed_text, "--seed", "--suite random");
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw InputError("--seed: expected a nonnegative integer, got '" + text + "'");
    }
    cases = RandomCoverSuite(seed, a.count, a.n_max, a.all_q);
  }

  const BoundsReport result = Certify(cases, a.options);
  Report report;
  for (const auto& row : result.rows) {
    Record rec{{"id", row.id},
               {"graph", row.graph_id},
               {"empirical", Opt(row.empirical)},
               {"curvature", Opt(row.curvature)},
               {"lower", Opt(row.lower)},
               {"upper", Opt(row.upper)},
               {"refined_upper", Opt(row.refined_upper)},
               {"predicted", Opt(row.predicted)},
               {"verdict", std::string(VerdictName(row.verdict))}};
    if (!row.note.empty()) rec.emplace_back("note", row.note);
    report.rows.push_back(std::move(rec));
  }
  report.Section("summary") = {{"rows", static_cast<int>(result.rows.size())},
                               {"failures", result.failures},
                               {"errors", result.errors},
                               {"witnesses_at_upper", result.witnesses_at_upper}};
  if (result.failures > 0) {
    report.status = kExitFailRows;
  } else if (result.errors > 0) {
    report.status = kExitCapacity;
  }
  return report;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  std::string curve = "curvature-bounds";
  std::vector<int> r = {2, 3, 5, 20};
  int lambda_steps = 100;
  std::string out = "csv";
};

Report RunScan(const ScanArgs& a) {
  if (a.lambda_steps < 1) throw InputError("--lambda-steps: must be at least 1");
  for (int r : a.r) {
    if (r < 1) throw InputError("--r: every value must be at least 1");
  }
  Report report;
  std::ostringstream csv;
  csv << "lambda";
  for (int r : a.r) csv << ",lower_r" << r << ",upper_r" << r;
  csv << '\n';
  for (int k = 0; k <= a.lambda_steps; ++k) {
    const Rational lambda(k, a.lambda_steps);
    Record row{{"lambda", ToDouble(lambda)}};
    csv << DecimalString(lambda);
    for (int r : a.r) {
      // With q = 1 the block size is r itself.
      const RatioBounds b = CurvatureEtaBounds(r, 1, lambda);
      row.emplace_back("lower_r" + std::to_string(r), ToDouble(b.lower));
      row.emplace_back("upper_r" + std::to_string(r), ToDouble(b.upper));
      csv << ',' << DecimalString(b.lower) << ',' << DecimalString(b.upper);
    }
    csv << '\n';
    report.rows.push_back(std::move(row));
  }
  if (a.out == "csv") {
    report.raw_text = csv.str();
    return report;
  }
  std::ofstream file(a.out);
  if (!file) throw InputError("--out: cannot open '" + a.out + "' for writing");
  file << csv.str();
  report.rows.clear();
  report.Section("scan") = {{"wrote", a.out},
                            {"curve", a.curve},
                            {"rows", a.lambda_steps + 1}};
  return report;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallelized greedy submodular maximization over information graphs", "parsub"};
  app.set_version_flag("--version", "parsub 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit a single JSON document");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Ratio formulas and graph bounds");
  bounds_cmd->add_option("--n", bounds.n, "Number of agents");
  bounds_cmd->add_option("--q", bounds.q, "Number of iterations");
  bounds_cmd->add_option("--k", bounds.k, "Target clique count for the edge bound");
  bounds_cmd->add_option("--lambda", bounds.lambda, "Total curvature as p/q");
  bounds_cmd->add_option("--graph", bounds.graph, "Graph file");
  bounds_cmd->add_option("--graph-cap", bounds.graph_cap, "Largest graph for exact invariants");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a graph or assignment");
  construct_cmd->add_option("what", construct.what, "graph or assignment")
      ->required()
      ->check(CLI::IsMember({"graph", "assignment"}));
  AddFamilyOptions(construct_cmd, construct.family);
  construct_cmd->add_option("--out", construct.out, "Output file");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants of a graph or instance");
  analyze_cmd->add_option("what", analyze.what, "graph or instance")
      ->required()
      ->check(CLI::IsMember({"graph", "instance"}));
  analyze_cmd->add_option("--in", analyze.in, "Input file")->required();
  analyze_cmd->add_option("--p", analyze.p, "Pseudo-independence parameter")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--graph-cap", analyze.graph_cap, "Largest graph for exact invariants");
  analyze_cmd->add_option("--exhaustive-cap", analyze.exhaustive_cap,
                          "Largest ground set for exhaustive property checks");

  ScheduleArgs schedule;
  auto* schedule_cmd = app.add_subcommand("schedule", "Earliest schedule or assignment check");
  schedule_cmd->add_option("--graph", schedule.graph, "Graph file");
  schedule_cmd->add_option("--assignment", schedule.assignment, "Assignment file");
  schedule_cmd->add_option("--q", schedule.q, "Report feasibility for q iterations");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run greedy on an instance");
  run_cmd->add_option("--instance", run.instance, "Instance file")->required();
  run_cmd->add_option("--graph", run.graph, "Graph file");
  run_cmd->add_option("--assignment", run.assignment, "Assignment file");
  run_cmd->add_option("--policy", run.policy, "Tie policy")
      ->check(CLI::IsMember({"first", "last", "worst", "best", "all"}));
  run_cmd->add_flag("--ratio", run.ratio, "Compare against the brute-force optimum");
  run_cmd->add_option("--node-cap", run.node_cap, "Tie search node budget");
  run_cmd->add_option("--profile-cap", run.profile_cap, "Brute-force profile budget");

  AdversarialArgs adversarial;
  auto* adversarial_cmd = app.add_subcommand("adversarial", "Generate a tight instance");
  adversarial_cmd->add_option("what", adversarial.what, "curvature, p-additive or sequential-half")
      ->required()
      ->check(CLI::IsMember({"curvature", "p-additive", "sequential-half"}));
  adversarial_cmd->add_option("--graph", adversarial.graph, "Graph file");
  auto* family_opt = adversarial_cmd->add_option("--family", adversarial.family.family,
                                                 "Graph family instead of --graph");
  family_opt->check(CLI::IsMember(kFamilies));
  adversarial_cmd->add_option("--n", adversarial.family.n, "Number of agents");
  adversarial_cmd->add_option("--q", adversarial.family.q, "Number of iterations");
  adversarial_cmd->add_option("--r", adversarial.family.r, "Class count for Turán families");
  adversarial_cmd->add_option("--lambda", adversarial.lambda, "Curvature as p/q");
  adversarial_cmd->add_option("--p", adversarial.p, "Additivity parameter")
      ->check(CLI::PositiveNumber);
  adversarial_cmd->add_option("--out", adversarial.out, "Output file");
  adversarial_cmd->add_flag("--verify", adversarial.verify,
                            "Check the empirical ratio against the prediction");
  adversarial_cmd->add_option("--graph-cap", adversarial.graph_cap,
                              "Largest graph for exact invariants");

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Check bounds against brute force");
  certify_cmd->add_option("--suite", certify.suite, "witnesses or random")
      ->check(CLI::IsMember({"witnesses", "random"}));
  certify_cmd->add_option("--instance", certify.instance, "Single instance file");
  certify_cmd->add_option("--graph", certify.graph, "Graph file for --instance");
  certify_cmd->add_option("--alpha-max", certify.alpha_max, "Largest independence number")
      ->check(CLI::Range(1, 8));
  certify_cmd->add_option("--lambdas", certify.lambdas, "Comma-separated curvatures")
      ->delimiter(',');
  certify_cmd->add_option("--seed", certify.seed_text, "Seed for random suites");
  certify_cmd->add_option("--count", certify.count, "Random instance count")
      ->check(CLI::NonNegativeNumber);
  certify_cmd->add_option("--n-max", certify.n_max, "Largest agent count")
      ->check(CLI::Range(1, 12));
  certify_cmd->add_flag("--all-q", certify.all_q, "Pair each instance with every q");
  certify_cmd->add_option("--threads", certify.options.threads, "Worker threads (0 = auto)");
  certify_cmd->add_option("--graph-cap", certify.options.graph_cap,
                          "Largest graph for exact invariants");
  certify_cmd->add_option("--exhaustive-cap", certify.options.exhaustive_cap,
                          "Largest ground set for exhaustive property checks");
  certify_cmd->add_option("--node-cap", certify.options.tie_node_cap, "Tie search node budget");
  certify_cmd->add_option("--profile-cap", certify.options.profile_cap,
                          "Brute-force profile budget");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Export bound curves");
  scan_cmd->add_option("--curve", scan.curve, "Curve family")
      ->check(CLI::IsMember({"curvature-bounds"}));
  scan_cmd->add_option("--r", scan.r, "Comma-separated block sizes")->delimiter(',');
  scan_cmd->add_option("--lambda-steps", scan.lambda_steps, "Grid resolution");
  scan_cmd->add_option("--out", scan.out, "csv for standard output, or a file path");

  for (const auto& arg : args) {
    if (arg.starts_with("-")) continue;
    if (app.get_subcommands([&](CLI::App* s) { return s->check_name(arg); }).empty()) {
      err << "error: unknown verb '" << arg << "'\n";
      return kExitUsage;
    }
    break;
  }

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("parsub");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  adversarial.family_given = family_opt->count() > 0;

  try {
    Report report;
    if (bounds_cmd->parsed()) {
      report = RunBounds(bounds);
    } else if (construct_cmd->parsed()) {
      report = RunConstruct(construct);
    } else if (analyze_cmd->parsed()) {
      report = RunAnalyze(analyze);
    } else if (schedule_cmd->parsed()) {
      report = RunSchedule(schedule);
    } else if (run_cmd->parsed()) {
      report = RunRun(run);
    } else if (adversarial_cmd->parsed()) {
      report = RunAdversarial(adversarial);
    } else if (certify_cmd->parsed()) {
      report = RunCertify(certify);
    } else {
      report = RunScan(scan);
    }
    Emit(report, json, out);
    return report.status;
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const UndefinedRatioError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace parsub::cli
