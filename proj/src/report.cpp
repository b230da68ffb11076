#include "waring/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace waring {

Json to_json(const HilbertProfile& profile) {
  return Json{{"set_size", profile.set_size()},
              {"j_max", profile.j_max()},
              {"values", profile.values()},
              {"diffs", profile.diffs()},
              {"h_vector", profile.h_vector()}};
}

Json to_json(const KruskalReport& report) {
  const auto& p = report.partition;
  return Json{{"partition", {p.a, p.b, p.c}},
              {"ranks", report.ranks},
              {"bound", report.bound},
              {"passes", report.passes}};
}

Json to_json(const TerraciniReport& report) {
  return Json{{"points", report.points},
              {"ambient_dim", report.ambient_dim},
              {"dim", report.dim},
              {"max_possible", report.max_possible},
              {"is_maximal", report.is_maximal},
              {"tangents_independent", report.tangents_independent}};
}

Json to_json(const Diagnostics& g) {
  Json kr = Json::array();
  for (const auto& [j, k] : g.kruskal_ranks) kr.push_back({{"degree", j}, {"rank", k}});
  Json reports = Json::array();
  for (const auto& r : g.kruskal_reports) reports.push_back(to_json(r));
  return Json{{"ambient_dim", g.ambient_dim},
              {"points", g.points},
              {"degree", g.degree},
              {"span_dim", g.span_dim},
              {"hilbert", to_json(g.hilbert)},
              {"hilbert_at_degree", g.hilbert_at_degree},
              {"max_collinear", g.max_collinear},
              {"kruskal_ranks", kr},
              {"gup", g.gup ? Json(*g.gup) : Json(nullptr)},
              {"kruskal_reports", reports},
              {"terracini", g.terracini ? to_json(*g.terracini) : Json(nullptr)},
              {"complementary_bound", g.complementary_bound}};
}

Json to_json(const Certificate& cert) {
  Json trace = Json::array();
  for (const auto& t : cert.trace) {
    trace.push_back({{"criterion", to_string(t.criterion)}, {"fired", t.fired}, {"reason", t.reason}});
  }
  return Json{{"verdict", to_string(cert.verdict)},
              {"criterion", cert.criterion ? Json(to_string(*cert.criterion)) : Json(nullptr)},
              {"rank", cert.rank ? Json(*cert.rank) : Json(nullptr)},
              {"detail", cert.detail},
              {"diagnostics", to_json(cert.diagnostics)},
              {"trace", trace}};
}

Json to_json(const GenericInfo& info) {
  Json ex = Json::array();
  for (const auto& e : info.exceptions) {
    ex.push_back({{"rank", e.rank ? Json(*e.rank) : Json("all_subgeneric")}, {"note", e.note}});
  }
  return Json{{"n", info.n},
              {"d", info.d},
              {"expected_generic_rank", info.expected_generic_rank},
              {"generic_rank", info.generic_rank},
              {"generic_rank_verified", info.generic_rank_verified},
              {"identifiability_exceptions", ex}};
}

std::string input_digest(const PointSet& points) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  feed("n=" + std::to_string(points.ambient_dim()) + ";");
  for (const auto& p : points) {
    for (const auto& x : p.coords()) feed(to_string(x) + ",");
    feed(";");
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json input_json(const PointSetDocument& doc, const PointSet& points) {
  Json pts = Json::array();
  for (const auto& p : points) {
    Json row = Json::array();
    for (const auto& x : p.coords()) row.push_back(to_string(x));
    pts.push_back(row);
  }
  return Json{{"label", doc.label ? Json(*doc.label) : Json(nullptr)},
              {"n", points.ambient_dim()},
              {"points", pts},
              {"digest", input_digest(points)}};
}

}  // namespace waring
