#include "json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace cli_io {

using arrange::Arrangement;

Json arrangement_to_json(const Arrangement& a) {
  Json doc;
  doc["lines"] = a.lines();
  doc["points"] = a.points();
  Json inc = Json::array();
  for (int i = 0; i < a.lines(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.points(); ++j) row.push_back(a.incident(i, j) ? 1 : 0);
    inc.push_back(std::move(row));
  }
  doc["incidence"] = std::move(inc);
  return doc;
}

Arrangement arrangement_from_json(const Json& doc, int index) {
  if (!doc.is_object())
    throw std::invalid_argument("arrangement document must be a JSON object");
  if (doc.contains("classes")) {
    const Json& classes = doc.at("classes");
    if (!classes.is_array() || classes.empty())
      throw std::invalid_argument("\"classes\" must be a non-empty array");
    if (index < 0 || index >= static_cast<int>(classes.size()))
      throw std::invalid_argument("class index " + std::to_string(index) +
                                  " out of range (document has " +
                                  std::to_string(classes.size()) + " classes)");
    return arrangement_from_json(classes.at(index), 0);
  }
  for (const char* key : {"lines", "points", "incidence"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("arrangement document missing \"") +
                                  key + "\"");
  if (!doc.at("lines").is_number_integer() || !doc.at("points").is_number_integer())
    throw std::invalid_argument("\"lines\" and \"points\" must be integers");
  const int lines = doc.at("lines").get<int>();
  const int points = doc.at("points").get<int>();
  const Json& inc = doc.at("incidence");
  if (!inc.is_array() || static_cast<int>(inc.size()) != lines)
    throw std::invalid_argument("\"incidence\" must be an array of " +
                                std::to_string(lines) + " rows");
  arrange::IncidenceMatrix m;
  for (const Json& row : inc) {
    if (!row.is_array() || static_cast<int>(row.size()) != points)
      throw std::invalid_argument("every incidence row must have " +
                                  std::to_string(points) + " entries");
    std::vector<std::uint8_t> r;
    for (const Json& cell : row) {
      if (!cell.is_number_integer() ||
          (cell.get<int>() != 0 && cell.get<int>() != 1))
        throw std::invalid_argument("incidence entries must be 0 or 1");
      r.push_back(static_cast<std::uint8_t>(cell.get<int>()));
    }
    m.push_back(std::move(r));
  }
  return Arrangement::validate(std::move(m));
}

Json round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return Json(std::strtod(buf, nullptr));
}

Json rational_to_json(const arrange::Rational& r) {
  Json doc;
  doc["num"] = r.numerator();
  doc["den"] = r.denominator();
  return doc;
}

namespace {

Json big_int_to_json(const boost::multiprecision::cpp_int& x) {
  if (x >= std::numeric_limits<long long>::min() &&
      x <= std::numeric_limits<long long>::max())
    return Json(x.convert_to<long long>());
  return Json(x.str());
}

}  // namespace

Json rational_to_json(const arrange::BigRational& r) {
  Json doc;
  doc["num"] = big_int_to_json(numerator(r));
  doc["den"] = big_int_to_json(denominator(r));
  return doc;
}

Json matrix_to_json(const arrange::SymMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

Json fp_matrix_to_json(const arrange::FpMatrix& m) {
  Json doc;
  doc["modulus"] = m.modulus;
  doc["rows"] = m.rows;
  doc["cols"] = m.cols;
  Json entries = Json::array();
  for (const auto& row : m.row_vectors()) entries.push_back(row);
  doc["entries"] = std::move(entries);
  return doc;
}

Json cover_to_json(const arrange::CoverInvariants& c) {
  Json doc;
  doc["d"] = c.d;
  doc["chi_total"] = c.chi_total;
  doc["b1"] = c.b1;
  doc["b2_plus"] = c.b2_plus;
  doc["b2_minus"] = c.b2_minus;
  doc["b2"] = c.b2;
  Json eps = Json::array();
  for (const auto& e : c.epsilon) eps.push_back(rational_to_json(e));
  doc["epsilon"] = std::move(eps);
  return doc;
}

Json embedding_to_json(const arrange::SubArrangementEmbedding& e) {
  Json doc;
  doc["line_map"] = e.line_map;
  doc["point_map"] = e.point_map;
  doc["strict"] = e.strict;
  return doc;
}

namespace {

Json route_to_json(const arrange::RouteComparison& r) {
  Json doc;
  doc["route"] = r.route;
  doc["r"] = r.r;
  doc["needed"] = r.needed;
  doc["available"] = r.available;
  doc["fires"] = r.fires;
  return doc;
}

}  // namespace

Json report_to_json(const arrange::ObstructionReport& r) {
  Json doc;
  doc["schema"] = "obstruction-report/1";
  doc["arrangement_hash"] = r.arrangement_hash;
  doc["p"] = r.p;
  doc["alpha"] = r.alpha;
  doc["beta"] = r.beta;
  doc["branch_embedding"] = embedding_to_json(r.branch_embedding);
  doc["blown_points"] = r.blown_points;
  doc["outside_lines"] = r.outside_lines;
  doc["cover"] = cover_to_json(r.cover);
  doc["outside_form"] = matrix_to_json(r.outside_form);
  doc["eigen_form"] = matrix_to_json(r.eigen_form);
  doc["outside_rank"] = r.outside_rank;
  doc["outside_inertia"] = {{"n_plus", r.outside_inertia.n_plus},
                            {"n_zero", r.outside_inertia.n_zero},
                            {"n_minus", r.outside_inertia.n_minus}};
  doc["eigen_lower_bound"] = r.eigen_lower_bound;
  Json routes = Json::array();
  for (const auto& rc : r.routes) routes.push_back(route_to_json(rc));
  doc["routes"] = std::move(routes);
  doc["verdict"] = r.obstructed ? "obstructed" : "not-obstructed";
  doc["witness"] = r.witness ? route_to_json(*r.witness) : Json(nullptr);
  doc["corollary_nonfillable"] = r.corollary_nonfillable;
  return doc;
}

Json word_to_json(const arrange::WiringDiagram& w) {
  Json doc;
  doc["n"] = w.n;
  doc["text"] = arrange::format_word(w);
  Json letters = Json::array();
  for (const auto& l : w.word) letters.push_back({{"i", l.i}, {"k", l.k}});
  doc["letters"] = std::move(letters);
  return doc;
}

Json events_to_json(const std::vector<arrange::HomotopyEvent>& events) {
  using Kind = arrange::HomotopyEvent::Kind;
  Json out = Json::array();
  for (const auto& e : events) {
    const char* kind = "planar-isotopy";
    switch (e.kind) {
      case Kind::BraidMove1: kind = "yang-baxter"; break;
      case Kind::BraidMove2: kind = "commutation"; break;
      case Kind::SplitMulti: kind = "split-multi"; break;
      case Kind::MergeMulti: kind = "merge-multi"; break;
      case Kind::PlanarIsotopy: kind = "planar-isotopy"; break;
    }
    Json doc;
    doc["kind"] = kind;
    doc["position"] = e.position;
    doc["k"] = e.k;
    doc["description"] = e.description;
    out.push_back(std::move(doc));
  }
  return out;
}

Json plumbing_to_json(const arrange::PlumbingMatrix& pm) {
  Json doc;
  doc["schema"] = "plumbing-matrix/1";
  doc["k"] = pm.k;
  doc["N"] = pm.N;
  doc["multi_points"] = pm.multi_points;
  doc["blocks"] = {{"lines", {0, pm.k}}, {"dual_points", {pm.k, pm.k + pm.N}}};
  Json rows = Json::array();
  for (const auto& row : pm.q) rows.push_back(row);
  doc["q"] = std::move(rows);
  return doc;
}

std::string dump_doc(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cli_io
