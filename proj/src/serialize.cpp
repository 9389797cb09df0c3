#include "graphlie/serialize.hpp"

#include "graphlie/errors.hpp"

namespace graphlie {

namespace {

Json brackets_json(const AlternatingMap& mu) {
  Json out = Json::array();
  for (std::size_t i = 0; i < mu.dim(); ++i)
    for (std::size_t j = i + 1; j < mu.dim(); ++j) {
      if (!mu.nonzero(i, j)) continue;
      Json terms = Json::array();
      for (const auto& e : mu.upper(i, j).entries()) terms.push_back({{"l", e.index}, {"c", to_string(e.value)}});
      out.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  return out;
}

std::size_t get_index(const Json& obj, const char* key, std::size_t n) {
  if (!obj.contains(key) || !obj[key].is_number_unsigned())
    throw DomainError(std::string("algebra JSON: missing or negative index \"") + key + "\"");
  const auto v = obj[key].get<std::size_t>();
  if (v >= n) throw DomainError(std::string("algebra JSON: index \"") + key + "\" out of range");
  return v;
}

AlternatingMap brackets_from_json(const Json& doc, std::size_t n) {
  AlternatingMap mu(n);
  if (!doc.contains("brackets")) return mu;
  if (!doc["brackets"].is_array()) throw DomainError("algebra JSON: \"brackets\" must be an array");
  for (const auto& b : doc["brackets"]) {
    const std::size_t i = get_index(b, "i", n), j = get_index(b, "j", n);
    if (i >= j) throw DomainError("algebra JSON: brackets need i < j");
    if (mu.nonzero(i, j)) throw DomainError("algebra JSON: bracket listed twice");
    if (!b.contains("terms") || !b["terms"].is_array()) throw DomainError("algebra JSON: bracket without terms");
    std::map<std::size_t, Rational> acc;
    for (const auto& t : b["terms"]) {
      const std::size_t l = get_index(t, "l", n);
      if (!t.contains("c") || !t["c"].is_string()) throw DomainError("algebra JSON: coefficient must be a \"p/q\" string");
      if (acc.count(l)) throw DomainError("algebra JSON: repeated term index");
      acc[l] = parse_rational(t["c"].get<std::string>());
    }
    mu.set(i, j, SparseVector::from_map(acc));
  }
  return mu;
}

std::size_t get_n(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned())
    throw DomainError("algebra JSON: needs a non-negative integer \"n\"");
  return doc["n"].get<std::size_t>();
}

}  // namespace

Json algebra_to_json(const GradedLieAlgebra& a) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& l = a.labels()[i];
    basis.push_back({{"label", a.label_string(i)}, {"degree", l.degree}, {"multidegree", l.multidegree}});
  }
  return {{"n", a.dim()},
          {"k", a.step_bound()},
          {"grading", a.grading()},
          {"basis", std::move(basis)},
          {"brackets", brackets_json(a.algebra().bracket())}};
}

Json algebra_to_json(const LieAlgebra& a) {
  return {{"n", a.dim()}, {"brackets", brackets_json(a.bracket())}};
}

GradedLieAlgebra graded_algebra_from_json(const Json& doc) {
  const std::size_t n = get_n(doc);
  if (!doc.contains("k") || !doc["k"].is_number_integer()) throw DomainError("algebra JSON: needs an integer \"k\"");
  if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].size() != n)
    throw DomainError("algebra JSON: \"basis\" must list n entries");
  std::vector<BasisLabel> labels;
  for (const auto& b : doc["basis"]) {
    BasisLabel l;
    if (!b.contains("degree") || !b["degree"].is_number_integer()) throw DomainError("algebra JSON: basis entry without degree");
    l.degree = b["degree"].get<int>();
    if (b.contains("multidegree")) {
      if (!b["multidegree"].is_array()) throw DomainError("algebra JSON: multidegree must be an array");
      for (const auto& x : b["multidegree"]) {
        if (!x.is_number_integer()) throw DomainError("algebra JSON: multidegree entries must be integers");
        l.multidegree.push_back(x.get<int>());
      }
    }
    if (b.contains("label") && b["label"].is_string()) {
      try {
        l.word = BracketWord::parse(b["label"].get<std::string>());
      } catch (const DomainError&) {
        // free-form labels ("e3") are not kept
      }
    }
    labels.push_back(std::move(l));
  }
  GradedLieAlgebra a(LieAlgebra(brackets_from_json(doc, n)), doc["k"].get<int>(), std::move(labels));
  if (doc.contains("grading") && doc["grading"] != Json(a.grading()))
    throw DomainError("algebra JSON: \"grading\" disagrees with the basis degrees");
  return a;
}

std::variant<GradedLieAlgebra, LieAlgebra> algebra_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("basis")) return graded_algebra_from_json(doc);
  const std::size_t n = get_n(doc);
  return LieAlgebra(brackets_from_json(doc, n));
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json h2_report_to_json(const H2NilReport& r) {
  return {{"dim_hom2", r.dim_hom2},
          {"dim_ker_eta2", r.dim_ker_eta2},
          {"dim_ker_delta2", r.dim_ker_delta2},
          {"dim_intersection", r.dim_intersection},
          {"dim_im_delta1", r.dim_im_delta1},
          {"h2_dim", r.h2_dim},
          {"eta2_subset_delta2", r.eta2_subset_delta2},
          {"blocks", r.blocks}};
}

Json certificate_to_json(const Certificate& c) {
  Json out = {{"type", certificate_tag(c)}};
  auto vertex = [](std::size_t i) { return "v" + std::to_string(i + 1); };
  if (const auto* h = std::get_if<H2NilZero>(&c)) {
    out["h2_nil"] = h2_report_to_json(h->report);
  } else if (const auto* cr = std::get_if<CitedResult>(&c)) {
    out["name"] = cr->name;
  } else if (const auto* af = std::get_if<AbelianFactor>(&c)) {
    Json iso = Json::array();
    for (int v : af->isolated) iso.push_back(vertex(static_cast<std::size_t>(v)));
    out["isolated"] = std::move(iso);
  } else if (const auto* gw = std::get_if<GradedWitness>(&c)) {
    out["a1"] = vertex(gw->a1);
    out["a2"] = vertex(gw->a2);
    out["y"] = {{"index", gw->y_index}, {"label", gw->y_label}, {"multidegree", gw->y_multidegree},
                {"coords", vector_to_json(gw->y)}};
  } else if (const auto* tw = std::get_if<TwoStepWitness>(&c)) {
    out["v"] = vertex(tw->v);
    out["w"] = vertex(tw->w);
    out["z"] = {{"label", tw->z_label}, {"coords", vector_to_json(tw->z)}};
  }
  return out;
}

Json sweep_row_to_json(const SweepRow& r) {
  Json out = {{"graph6", r.graph6},
              {"m", r.m},
              {"k", r.k},
              {"dim", r.dim},
              {"verdict", to_string(r.verdict.verdict)},
              {"certificate", r.verdict.certificate ? certificate_to_json(*r.verdict.certificate) : Json(nullptr)}};
  if (r.verdict.h2) out["h2_nil"] = h2_report_to_json(*r.verdict.h2);
  return out;
}

}  // namespace graphlie
