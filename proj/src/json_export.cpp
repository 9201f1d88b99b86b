#include "schmidt/json_export.hpp"

#include <stdexcept>

namespace schmidt {

  Json poly_to_json(PolyModP const& f) {
    return Json(f.coeffs());
  }

  Json endo_monoid_to_json(EndoMonoid const& m) {
    Json doc;
    doc["schema"]      = kJsonSchema;
    doc["group_order"] = m.group().order();
    doc["size"]        = m.size();
    doc["zero"]        = m.zero();
    doc["identity"]    = m.identity();
    doc["maps"]        = m.maps();
    Json comp = Json::array(), autos = Json::array(), idems = Json::array();
    for (EndoIndex s = 0; s < m.size(); ++s) {
      Json row = Json::array();
      for (EndoIndex t = 0; t < m.size(); ++t) {
        row.push_back(m.compose(s, t));
      }
      comp.push_back(std::move(row));
      autos.push_back(m.is_auto(s));
      idems.push_back(m.is_idempotent(s));
    }
    doc["composition"]   = std::move(comp);
    doc["is_auto"]       = std::move(autos);
    doc["is_idempotent"] = std::move(idems);
    return doc;
  }

  FiniteSemigroup semigroup_from_json(Json const& doc) {
    if (doc.value("schema", 0) != kJsonSchema) {
      throw std::invalid_argument("unsupported JSON schema");
    }
    auto const&                       comp = doc.at("composition");
    std::size_t const                 k    = comp.size();
    std::vector<FiniteSemigroup::Index> table;
    table.reserve(k * k);
    for (auto const& row : comp) {
      if (row.size() != k) {
        throw std::invalid_argument("composition table is not square");
      }
      for (auto const& v : row) {
        table.push_back(v.get<FiniteSemigroup::Index>());
      }
    }
    return FiniteSemigroup(k, std::move(table));
  }

  Json params_to_json(std::optional<SchmidtParams> const& params) {
    if (!params) {
      return nullptr;
    }
    return Json{{"p", params->p}, {"q", params->q}, {"v", params->v}};
  }

  Json verdict_to_json(SchmidtVerdict const& v) {
    return Json{{"is_schmidt", v.is_schmidt},
                {"is_miller_moreno", v.is_miller_moreno},
                {"params", params_to_json(v.params)},
                {"witness", v.witness}};
  }

  Json report_to_json(CharacterizationReport const& r) {
    Json doc;
    doc["schema"] = kJsonSchema;
    doc["group"]  = Json{{"order", r.group_order},
                         {"end_size", r.end_size},
                         {"aut_size", r.aut_size},
                         {"idempotents", r.idempotents}};
    Json params = params_to_json(r.params);
    if (r.params) {
      params["u"] = r.u;
    }
    doc["inferred_params"] = r.inferred ? params : Json(nullptr);
    doc["params"]          = params;
    Json tried             = Json::array();
    for (auto const& t : r.tried) {
      tried.push_back(params_to_json(t));
    }
    doc["tried"] = std::move(tried);
    Json cands   = Json::array();
    for (auto const& c : r.candidates) {
      Json w = Json::array();
      for (auto const& s : c.witnesses) {
        w.push_back(s);
      }
      cands.push_back(Json{{"x_index", c.x}, {"props", c.props}, {"witnesses", std::move(w)}});
    }
    doc["candidates"] = std::move(cands);
    doc["verdict"]    = r.verdict;
    if (!r.diagnostic.empty()) {
      doc["diagnostic"] = r.diagnostic;
    }
    return doc;
  }

  Json model_to_json(SymbolicModel const& model, bool with_table) {
    auto const& spec = model.spec();
    Json        doc;
    doc["schema"] = kJsonSchema;
    doc["p"]      = spec.p;
    doc["q"]      = spec.q;
    doc["v"]      = spec.v;
    doc["u"]      = spec.ring.u();
    doc["psi"]    = poly_to_json(spec.ring.psi());
    Json pairs    = Json::array();
    for (auto const& e : model.elems()) {
      pairs.push_back(Json{{"n", e.n}, {"f", poly_to_json(e.f.rep())}, {"text", to_string(e)}});
    }
    doc["pairs"]         = std::move(pairs);
    doc["zero"]          = model.zero();
    doc["distinguished"] = model.distinguished();
    if (with_table) {
      Json comp = Json::array();
      for (SymbolicModel::Index a = 0; a < model.size(); ++a) {
        Json row = Json::array();
        for (SymbolicModel::Index b = 0; b < model.size(); ++b) {
          row.push_back(model.compose(a, b));
        }
        comp.push_back(std::move(row));
      }
      doc["composition"] = std::move(comp);
    }
    return doc;
  }

}  // namespace schmidt
