#include "ssot/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssot {

void to_json(json& j, const Box& b) { j = json::array({b.row, b.col}); }

void from_json(const json& j, Box& b) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("box must be [row,col]");
  b = {j[0].get<int>(), j[1].get<int>()};
}

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(json& j, const Composition& c) { j = json{{"parts", c.parts()}}; }

void from_json(const json& j, Composition& c) {
  c = Composition(j.at("parts").get<std::vector<int>>());
}

void to_json(json& j, const Tableau& t) { j = t.rows(); }

void from_json(const json& j, Tableau& t) { t = Tableau(j.get<Tableau::Rows>()); }

void to_json(json& j, const SkewTableau& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (static_cast<int>(c) < t.inner.part(r))
        row.push_back(nullptr);
      else
        row.push_back(t.rows[r][c]);
    }
    rows.push_back(std::move(row));
  }
  j = json{{"inner", t.inner}, {"rows", std::move(rows)}};
}

void to_json(json& j, const SsotStep& s) { j = json{{"deleted", s.deleted}, {"reached", s.reached}}; }

void from_json(const json& j, SsotStep& s) {
  s.deleted = j.at("deleted").get<Partition>();
  s.reached = j.at("reached").get<Partition>();
}

void to_json(json& j, const Ssot& s) { j = json{{"steps", s.steps()}}; }

void from_json(const json& j, Ssot& s) { s = Ssot(j.at("steps").get<std::vector<SsotStep>>()); }

void to_json(json& j, const OscillatingTableau& o) { j = json{{"chain", o.chain()}}; }

void from_json(const json& j, OscillatingTableau& o) {
  o = OscillatingTableau(j.at("chain").get<std::vector<Partition>>());
}

void to_json(json& j, const TwoRowArray& l) {
  json pairs = json::array();
  for (const BiLetter& p : l.pairs()) pairs.push_back(json::array({p.top, p.bottom}));
  j = json{{"pairs", std::move(pairs)}};
}

void from_json(const json& j, TwoRowArray& l) {
  std::vector<BiLetter> pairs;
  for (const json& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("pair must be [top,bottom]");
    pairs.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  l = TwoRowArray(std::move(pairs));
}

void to_json(json& j, const SundaramPair& p) {
  j = json{{"burge", p.burge}, {"tableau", p.tableau}};
}

void from_json(const json& j, SundaramPair& p) {
  p.burge = j.at("burge").get<TwoRowArray>();
  p.tableau = j.at("tableau").get<Tableau>();
}

void to_json(json& j, const SparsePoly& f) {
  json terms = json::array();
  for (const auto& [exp, coef] : f.terms())
    terms.push_back(json{{"exp", exp}, {"coef", coef.str()}});
  j = json{{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const json& j) {
  SparsePoly f(j.at("nvars").get<int>());
  for (const json& t : j.at("terms"))
    f.add_term(t.at("exp").get<Exponent>(), BigInt(t.at("coef").get<std::string>()));
  return f;
}

json schur_json(const SchurCoefficients& c) {
  json j = json::array();
  for (const auto& [nu, coef] : c) j.push_back(json{{"shape", nu}, {"coef", coef.str()}});
  return j;
}

std::vector<std::vector<std::string>> display_rows(const Ssot& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : s.letter_rows()) {
    std::vector<std::string> r;
    for (const auto& box : row) {
      const bool wide = std::any_of(box.begin(), box.end(), [](int x) { return x > 9; });
      std::string cell;
      for (std::size_t i = 0; i < box.size(); ++i) {
        if (wide && i > 0) cell += ',';
        cell += std::to_string(box[i]);
      }
      r.push_back(std::move(cell));
    }
    out.push_back(std::move(r));
  }
  return out;
}

json display_json(const Ssot& s) { return display_rows(s); }

}  // namespace ssot
