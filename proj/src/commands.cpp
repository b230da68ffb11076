#include "waring/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "waring/certify.hpp"
#include "waring/hilbert.hpp"
#include "waring/kruskal.hpp"
#include "waring/report.hpp"
#include "waring/terracini.hpp"
#include "waring/version.hpp"

namespace waring::cli {

namespace {

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Json envelope(const std::string& verb, Json args, const GlobalOptions& opts) {
  args["seed"] = opts.seed;
  return Json{{"schema_version", kReportSchemaVersion},
              {"tool_version", kVersion},
              {"command", {{"verb", verb}, {"args", std::move(args)}}}};
}

std::string render(const Json& report, const std::string& human, const GlobalOptions& opts) {
  return opts.format == OutputFormat::Structured ? report.dump(2) + "\n" : human;
}

std::string header(const PointSetDocument& doc, const PointSet& a) {
  std::ostringstream os;
  if (doc.label) os << "label: " << *doc.label << '\n';
  os << "points: " << a.size() << " in P^" << a.ambient_dim() << "  [" << input_digest(a) << "]\n";
  return os.str();
}

}  // namespace

CommandResult run_hilbert(const PointSetDocument& doc, std::optional<unsigned> max_degree, const GlobalOptions& opts,
                          const std::string& source) {
  const PointSet a = to_point_set(doc);
  const HilbertProfile profile = hilbert_profile(a, max_degree.value_or(0));
  const auto cb = largest_cb_degree(a);

  std::vector<std::size_t> point_separation;
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned d = 0;
    while (!separates_point(a, i, d)) ++d;
    point_separation.push_back(d);
  }

  Json args{{"input", source}};
  if (max_degree) args["max_degree"] = *max_degree;
  Json report = envelope("hilbert", std::move(args), opts);
  report["input"] = input_json(doc, a);
  report["result"] = {{"profile", to_json(profile)},
                      {"separation_degree", profile.separation_degree()},
                      {"point_separation_degrees", point_separation},
                      {"largest_cb_degree", cb ? Json(*cb) : Json(nullptr)},
                      {"gkr_consistent", cb ? Json(check_gkr_inequality(profile, *cb)) : Json(nullptr)}};

  std::ostringstream h;
  h << header(doc, a);
  h << "h  = " << join(profile.values()) << '\n';
  h << "Dh = " << join(profile.diffs()) << '\n';
  h << "h-vector: " << join(profile.h_vector()) << '\n';
  h << "separated from degree " << profile.separation_degree() << '\n';
  h << "point separation degrees: " << join(point_separation) << '\n';
  if (cb) {
    h << "Cayley-Bacharach up to degree " << *cb << " (fails at " << *cb + 1 << ")\n";
  } else {
    h << "Cayley-Bacharach: never (single point)\n";
  }
  return {kOk, render(report, h.str(), opts)};
}

CommandResult run_kruskal(const PointSetDocument& doc, std::optional<unsigned> degree, const GlobalOptions& opts,
                          const std::string& source) {
  const PointSet a = to_point_set(doc);
  const unsigned top = std::max(1u, degree.value_or(1));
  const std::size_t k = kruskal_rank(a, opts.jobs);
  const bool lgp = k == std::min(a.size(), a.ambient_dim() + 1);
  Json per = Json::array();
  std::ostringstream h;
  h << header(doc, a);
  h << "Kruskal rank k_A = " << k << (lgp ? " (linear general position)" : "") << '\n';
  for (unsigned j = 1; j <= top; ++j) {
    const std::size_t kj = j == 1 ? k : veronese_kruskal_rank(a, j, opts.jobs);
    const std::size_t cap = std::min(a.size(), basis_size(a.ambient_dim(), j));
    per.push_back({{"degree", j}, {"rank", kj}, {"maximal", kj == cap}});
    h << "  nu_" << j << ": Kruskal rank " << kj << " of at most " << cap << '\n';
  }
  Json args{{"input", source}};
  if (degree) args["degree"] = *degree;
  Json report = envelope("kruskal", std::move(args), opts);
  report["input"] = input_json(doc, a);
  report["result"] = {{"kruskal_rank", k}, {"lgp", lgp}, {"veronese_ranks", per}};
  return {kOk, render(report, h.str(), opts)};
}

CommandResult run_terracini(const PointSetDocument& doc, unsigned degree, const GlobalOptions& opts,
                            const std::string& source) {
  const PointSet a = to_point_set(doc);
  const TerraciniReport t = terracini_dimension(a, degree);
  Json report = envelope("terracini", {{"input", source}, {"degree", degree}}, opts);
  report["input"] = input_json(doc, a);
  report["result"] = to_json(t);
  std::ostringstream h;
  h << header(doc, a);
  h << "Terracini space in P^" << t.ambient_dim << ": dimension " << t.dim << " (at most " << t.max_possible << ")\n";
  h << (t.tangents_independent ? "tangent spaces independent\n" : "tangent spaces dependent\n");
  h << (t.is_maximal ? "maximal\n" : "not maximal\n");
  return {kOk, render(report, h.str(), opts)};
}

CommandResult run_certify(const PointSetDocument& doc, unsigned degree, const GlobalOptions& opts,
                          const std::string& source) {
  const PointSet a = to_point_set(doc);
  const Certificate cert = certify(a, degree, CertifyOptions{opts.jobs});
  int code = kInconclusive;
  if (cert.verdict == Verdict::Identifiable) code = kIdentifiable;
  if (cert.verdict == Verdict::NotMinimal) code = kNotMinimal;

  Json report = envelope("certify", {{"input", source}, {"degree", degree}}, opts);
  report["input"] = input_json(doc, a);
  report["result"] = to_json(cert);
  report["exit_code"] = code;

  const auto& g = cert.diagnostics;
  std::ostringstream h;
  h << header(doc, a);
  h << "degree " << degree << ": " << to_string(cert.verdict);
  if (cert.criterion) h << " via " << to_string(*cert.criterion) << ", rank " << *cert.rank;
  h << '\n' << "  " << cert.detail << '\n';
  h << "h-vector " << join(g.hilbert.h_vector()) << ", span dim " << g.span_dim << ", max aligned " << g.max_collinear
    << '\n';
  for (const auto& [j, k] : g.kruskal_ranks) h << "Kruskal rank of nu_" << j << ": " << k << '\n';
  if (g.gup) h << "general uniform position: " << (*g.gup ? "yes" : "no") << '\n';
  if (g.terracini) h << "Terracini dimension " << g.terracini->dim << " of " << g.terracini->max_possible << '\n';
  if (g.complementary_bound > 0)
    h << "any other minimal decomposition has at least " << g.complementary_bound << " points\n";
  for (const auto& t : cert.trace) {
    h << "  [" << (t.fired ? "fired" : "  -  ") << "] " << to_string(t.criterion) << ": " << t.reason << '\n';
  }
  return {code, render(report, h.str(), opts)};
}

CommandResult run_generic(std::size_t n, unsigned d, std::size_t trials, const GlobalOptions& opts) {
  const GenericInfo info = generic_info(n, d, GenericOptions{opts.seed, trials, opts.jobs});
  Json report = envelope("generic", {{"n", n}, {"d", d}, {"trials", trials}}, opts);
  report["result"] = to_json(info);
  std::ostringstream h;
  h << "forms of degree " << d << " in " << n + 1 << " variables\n";
  h << "expected generic rank " << info.expected_generic_rank << ", generic rank " << info.generic_rank
    << (info.generic_rank_verified ? " (Terracini oracle)" : " (formula only, not verified)") << '\n';
  for (const auto& e : info.exceptions) {
    h << "general rank ";
    if (e.rank) {
      h << *e.rank;
    } else {
      h << "r (every subgeneric r >= 2)";
    }
    h << " forms are not identifiable: " << e.note << '\n';
  }
  return {kOk, render(report, h.str(), opts)};
}

namespace {

PointSetDocument load(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_point_document(text);
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-function and Kruskal/Terracini certificates for Waring decompositions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOptions opts;
  std::string format = "human";
  app.add_option("--seed", opts.seed, "seed for randomized oracles")->capture_default_str();
  app.add_option("--jobs", opts.jobs, "worker threads for subset and trial loops")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"human", "structured"}));

  std::string input = "-";
  std::optional<unsigned> max_degree;
  std::optional<unsigned> kruskal_degree;
  unsigned degree = 0;
  std::size_t n = 0;
  unsigned d = 0;
  std::size_t trials = 2;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, h-vector and Cayley-Bacharach degrees");
  hilbert->add_option("file", input, "point file, '-' for stdin");
  hilbert->add_option("--max-degree", max_degree, "compute h up to at least this degree");

  auto* kruskal = app.add_subcommand("kruskal", "Kruskal ranks of the set and its Veronese images");
  kruskal->add_option("file", input, "point file, '-' for stdin");
  kruskal->add_option("--degree", kruskal_degree, "largest Veronese degree to report");

  auto* terracini = app.add_subcommand("terracini", "dimension of the Terracini space");
  terracini->add_option("file", input, "point file, '-' for stdin");
  terracini->add_option("--degree", degree, "form degree d >= 2")->required()->check(CLI::Range(2u, 1000u));

  auto* cert = app.add_subcommand("certify", "run the identifiability criteria");
  cert->add_option("file", input, "point file, '-' for stdin");
  cert->add_option("--degree", degree, "form degree d >= 1")->required()->check(CLI::Range(1u, 1000u));

  auto* generic = app.add_subcommand("generic", "generic rank and identifiability exceptions");
  generic->add_option("n", n, "projective dimension n >= 1")->required()->check(CLI::PositiveNumber);
  generic->add_option("d", d, "degree d >= 2")->required()->check(CLI::Range(2u, 1000u));
  generic->add_option("--trials", trials, "random trials per rank")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }
  opts.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Human;

  try {
    CommandResult result;
    if (*generic) {
      result = run_generic(n, d, trials, opts);
    } else {
      const PointSetDocument doc = load(input, in);
      if (*hilbert) result = run_hilbert(doc, max_degree, opts, input);
      if (*kruskal) result = run_kruskal(doc, kruskal_degree, opts, input);
      if (*terracini) result = run_terracini(doc, degree, opts, input);
      if (*cert) result = run_certify(doc, degree, opts, input);
    }
    out << result.output;
    return result.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << (input == "-" ? "<stdin>" : input) << ":" << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace waring::cli
