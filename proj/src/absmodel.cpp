#include "relalg/absmodel.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "bundled_data.hpp"

namespace relalg {

using json = nlohmann::json;

namespace {

using Idx = std::size_t;

[[noreturn]] void fail(ModelErrorKind kind, const AbstractModel& m, const std::string& what,
                       std::initializer_list<Idx> tuple) {
  std::vector<std::string> names;
  std::string shown;
  for (auto i : tuple) {
    names.push_back(m.name(i));
    shown += (shown.empty() ? "" : ", ") + m.name(i);
  }
  throw ModelError(kind, model_error_kind_name(kind) + ": " + what + " at (" + shown + ")", std::move(names));
}

[[noreturn]] void shape(const std::string& what) { throw ModelError(ModelErrorKind::Shape, "shape: " + what); }

std::optional<Idx> least_upper(const AbstractModel& m, Idx x, Idx y) {
  for (Idx z = 0; z < m.size(); ++z) {
    if (!m.le(x, z) || !m.le(y, z)) continue;
    bool least = true;
    for (Idx w = 0; w < m.size() && least; ++w) {
      if (m.le(x, w) && m.le(y, w) && !m.le(z, w)) least = false;
    }
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<Idx> greatest_lower(const AbstractModel& m, Idx x, Idx y) {
  for (Idx z = 0; z < m.size(); ++z) {
    if (!m.le(z, x) || !m.le(z, y)) continue;
    bool greatest = true;
    for (Idx w = 0; w < m.size() && greatest; ++w) {
      if (m.le(w, x) && m.le(w, y) && !m.le(w, z)) greatest = false;
    }
    if (greatest) return z;
  }
  return std::nullopt;
}

}  // namespace

std::string model_error_kind_name(ModelErrorKind k) {
  switch (k) {
    case ModelErrorKind::Shape: return "shape";
    case ModelErrorKind::Lattice: return "lattice";
    case ModelErrorKind::Monoid: return "monoid";
    case ModelErrorKind::Converse: return "converse";
    case ModelErrorKind::Distributivity: return "distributivity";
  }
  return "shape";
}

std::size_t AbstractModel::index_of(std::string_view name) const {
  for (Idx i = 0; i < elements.size(); ++i) {
    if (elements[i] == name) return i;
  }
  throw std::out_of_range("model has no element '" + std::string(name) + "'");
}

AbstractModel validated(AbstractModel m) {
  const Idx n = m.size();
  if (n == 0) shape("a model needs at least one element");
  if (m.leq.size() != n) shape("leq must have " + std::to_string(n) + " rows");
  if (m.compose.size() != n) shape("compose must have " + std::to_string(n) + " rows");
  for (Idx i = 0; i < n; ++i) {
    if (m.leq[i].size() != n) shape("leq row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    if (m.compose[i].size() != n) {
      shape("compose row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (auto v : m.compose[i]) {
      if (v >= n) shape("compose row " + std::to_string(i) + " names an unknown element");
    }
  }
  if (m.converse.size() != n) shape("converse must have " + std::to_string(n) + " entries");
  for (auto v : m.converse) {
    if (v >= n) shape("converse names an unknown element");
  }
  if (m.identity >= n || m.top >= n || m.bottom >= n) shape("constants must name elements");

  // Lattice.
  for (Idx x = 0; x < n; ++x) {
    if (!m.le(x, x)) fail(ModelErrorKind::Lattice, m, "order is not reflexive", {x});
  }
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      if (x != y && m.le(x, y) && m.le(y, x)) fail(ModelErrorKind::Lattice, m, "order is not antisymmetric", {x, y});
    }
  }
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      for (Idx z = 0; z < n; ++z) {
        if (m.le(x, y) && m.le(y, z) && !m.le(x, z)) fail(ModelErrorKind::Lattice, m, "order is not transitive", {x, y, z});
      }
    }
  }
  for (Idx x = 0; x < n; ++x) {
    if (!m.le(m.bottom, x)) fail(ModelErrorKind::Lattice, m, "bottom is not least", {m.bottom, x});
    if (!m.le(x, m.top)) fail(ModelErrorKind::Lattice, m, "top is not greatest", {x, m.top});
  }
  m.join_.assign(n, std::vector<Idx>(n));
  m.meet_.assign(n, std::vector<Idx>(n));
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      const auto j = least_upper(m, x, y);
      if (!j) fail(ModelErrorKind::Lattice, m, "no least upper bound", {x, y});
      const auto k = greatest_lower(m, x, y);
      if (!k) fail(ModelErrorKind::Lattice, m, "no greatest lower bound", {x, y});
      m.join_[x][y] = *j;
      m.meet_[x][y] = *k;
    }
  }

  // Monoid with zero.
  for (Idx x = 0; x < n; ++x) {
    if (m.comp(m.identity, x) != x || m.comp(x, m.identity) != x) {
      fail(ModelErrorKind::Monoid, m, "identity is not a unit", {x});
    }
    if (m.comp(m.bottom, x) != m.bottom || m.comp(x, m.bottom) != m.bottom) {
      fail(ModelErrorKind::Monoid, m, "bottom is not a zero", {x});
    }
  }
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      for (Idx z = 0; z < n; ++z) {
        if (m.comp(m.comp(x, y), z) != m.comp(x, m.comp(y, z))) {
          fail(ModelErrorKind::Monoid, m, "composition is not associative", {x, y, z});
        }
      }
    }
  }

  // Converse.
  for (Idx x = 0; x < n; ++x) {
    if (m.conv(m.conv(x)) != x) fail(ModelErrorKind::Converse, m, "converse is not an involution", {x});
  }
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      if (m.le(x, y) && !m.le(m.conv(x), m.conv(y))) fail(ModelErrorKind::Converse, m, "converse is not monotonic", {x, y});
    }
  }
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      if (m.conv(m.comp(x, y)) != m.comp(m.conv(y), m.conv(x))) {
        fail(ModelErrorKind::Converse, m, "(x∘y)° differs from y°∘x°", {x, y});
      }
    }
  }

  // Composition distributes over binary joins; the empty join is covered by the zero law.
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      for (Idx z = 0; z < n; ++z) {
        if (m.comp(x, m.join(y, z)) != m.join(m.comp(x, y), m.comp(x, z)) ||
            m.comp(m.join(y, z), x) != m.join(m.comp(y, x), m.comp(z, x))) {
          fail(ModelErrorKind::Distributivity, m, "composition does not distribute over join", {x, y, z});
        }
      }
    }
  }
  return m;
}

AbstractModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    shape(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) shape("top level must be an object");
  for (const char* key : {"elements", "leq", "compose", "converse", "identity", "top", "bottom"}) {
    if (!doc.contains(key)) shape(std::string("missing field '") + key + "'");
  }
  AbstractModel m;
  try {
    m.elements = doc.at("elements").get<std::vector<std::string>>();
  } catch (const json::exception&) {
    shape("field 'elements' must be a list of strings");
  }
  std::set<std::string> seen;
  std::map<std::string, Idx> index;
  for (Idx i = 0; i < m.elements.size(); ++i) {
    if (!seen.insert(m.elements[i]).second) shape("duplicate element '" + m.elements[i] + "'");
    index[m.elements[i]] = i;
  }
  auto lookup = [&](const json& v, const std::string& where) -> Idx {
    if (!v.is_string()) shape(where + " must be an element name");
    const auto it = index.find(v.get<std::string>());
    if (it == index.end()) shape(where + " names unknown element '" + v.get<std::string>() + "'");
    return it->second;
  };
  const auto& leq = doc.at("leq");
  if (!leq.is_array()) shape("field 'leq' must be a matrix of booleans");
  for (Idx i = 0; i < leq.size(); ++i) {
    if (!leq[i].is_array()) shape("leq row " + std::to_string(i) + " must be a list");
    std::vector<bool> row;
    for (Idx j = 0; j < leq[i].size(); ++j) {
      if (!leq[i][j].is_boolean()) shape("leq[" + std::to_string(i) + "][" + std::to_string(j) + "] must be a boolean");
      row.push_back(leq[i][j].get<bool>());
    }
    m.leq.push_back(std::move(row));
  }
  const auto& comp = doc.at("compose");
  if (!comp.is_array()) shape("field 'compose' must be a matrix of element names");
  for (Idx i = 0; i < comp.size(); ++i) {
    if (!comp[i].is_array()) shape("compose row " + std::to_string(i) + " must be a list");
    std::vector<Idx> row;
    for (Idx j = 0; j < comp[i].size(); ++j) {
      row.push_back(lookup(comp[i][j], "compose[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    m.compose.push_back(std::move(row));
  }
  const auto& conv = doc.at("converse");
  if (!conv.is_array()) shape("field 'converse' must be a list of element names");
  for (Idx i = 0; i < conv.size(); ++i) m.converse.push_back(lookup(conv[i], "converse[" + std::to_string(i) + "]"));
  m.identity = lookup(doc.at("identity"), "identity");
  m.top = lookup(doc.at("top"), "top");
  m.bottom = lookup(doc.at("bottom"), "bottom");
  return validated(std::move(m));
}

AbstractModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) shape("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string model_to_json(const AbstractModel& m) {
  json doc;
  doc["elements"] = m.elements;
  json leq = json::array();
  for (const auto& row : m.leq) {
    json r = json::array();
    for (bool b : row) r.push_back(b);
    leq.push_back(r);
  }
  doc["leq"] = leq;
  json comp = json::array();
  for (const auto& row : m.compose) {
    json r = json::array();
    for (auto v : row) r.push_back(m.name(v));
    comp.push_back(r);
  }
  doc["compose"] = comp;
  json conv = json::array();
  for (auto v : m.converse) conv.push_back(m.name(v));
  doc["converse"] = conv;
  doc["identity"] = m.name(m.identity);
  doc["top"] = m.name(m.top);
  doc["bottom"] = m.name(m.bottom);
  return doc.dump(2);
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Dedekind: return "dedekind";
    case Axiom::Cone: return "cone";
    case Axiom::Choice: return "choice";
    case Axiom::AllOrNothing: return "all_or_nothing";
    case Axiom::Extensional: return "extensional";
    case Axiom::UniversalChoice: return "universal_choice";
  }
  return "dedekind";
}

const AxiomResult& AxiomReport::get(Axiom a) const {
  switch (a) {
    case Axiom::Dedekind: return dedekind;
    case Axiom::Cone: return cone;
    case Axiom::Choice: return choice;
    case Axiom::AllOrNothing: return all_or_nothing;
    case Axiom::Extensional: return extensional;
    case Axiom::UniversalChoice: return universal_choice;
  }
  return dedekind;
}

AxiomResult& AxiomReport::get(Axiom a) { return const_cast<AxiomResult&>(std::as_const(*this).get(a)); }

std::vector<std::size_t> model_points(const AbstractModel& m) {
  std::vector<Idx> out;
  for (Idx p = 0; p < m.size(); ++p) {
    if (p == m.bottom || !m.le(p, m.identity)) continue;
    bool atom = true;
    for (Idx q = 0; q < m.size() && atom; ++q) {
      if (q != p && q != m.bottom && m.le(q, p)) atom = false;
    }
    if (atom) out.push_back(p);
  }
  return out;
}

namespace {

bool is_model_per(const AbstractModel& m, Idx p) {
  return m.conv(p) == p && m.le(m.comp(p, p), p);
}

Idx left_domain(const AbstractModel& m, Idx x) { return m.meet(m.identity, m.comp(x, m.conv(x))); }
Idx right_domain(const AbstractModel& m, Idx x) { return m.meet(m.identity, m.comp(m.conv(x), x)); }

bool is_per_index(const AbstractModel& m, Idx p, Idx j) {
  return m.le(j, m.identity) && m.le(j, left_domain(m, p)) && m.comp(m.comp(j, p), j) == j &&
         m.comp(m.comp(p, j), p) == p;
}

// Each violates_* takes the counterexample tuple in the order it is reported.
bool violates_dedekind(const AbstractModel& m, Idx r, Idx s, Idx t) {
  const Idx lhs = m.meet(m.comp(r, s), t);
  const Idx mod = m.comp(r, m.meet(s, m.comp(m.conv(r), t)));
  const Idx dual = m.comp(m.meet(r, m.comp(t, m.conv(s))), s);
  return !m.le(lhs, mod) || !m.le(lhs, dual);
}

bool violates_cone(const AbstractModel& m, Idx r) {
  return r != m.bottom && m.comp(m.comp(m.top, r), m.top) != m.top;
}

bool violates_choice(const AbstractModel& m, Idx p) {
  if (!is_model_per(m, p)) return false;
  for (Idx j = 0; j < m.size(); ++j) {
    if (is_per_index(m, p, j)) return false;
  }
  return true;
}

bool violates_all_or_nothing(const AbstractModel& m, Idx a, Idx r, Idx b) {
  const auto pts = model_points(m);
  if (std::find(pts.begin(), pts.end(), a) == pts.end() || std::find(pts.begin(), pts.end(), b) == pts.end()) {
    return false;
  }
  const Idx v = m.comp(m.comp(a, r), b);
  return v != m.bottom && v != m.comp(m.comp(a, m.top), b);
}

// One element: not the join of the points below it. Three elements: distributivity
// fails below 𝕀.
bool violates_extensional(const AbstractModel& m, const std::vector<Idx>& t) {
  const auto pts = model_points(m);
  if (t.size() == 1) {
    const Idx p = t[0];
    if (!m.le(p, m.identity)) return false;
    Idx acc = m.bottom;
    for (auto a : pts) {
      if (m.le(a, p)) acc = m.join(acc, a);
    }
    return acc != p;
  }
  if (t.size() == 3) {
    for (auto v : t) {
      if (!m.le(v, m.identity)) return false;
    }
    return m.meet(t[0], m.join(t[1], t[2])) != m.join(m.meet(t[0], t[1]), m.meet(t[0], t[2]));
  }
  return false;
}

bool violates_universal_choice(const AbstractModel& m, Idx r) {
  const Idx target = right_domain(m, r);
  for (Idx f = 0; f < m.size(); ++f) {
    if (m.le(f, r) && m.le(m.comp(f, m.conv(f)), m.identity) && right_domain(m, f) == target) return false;
  }
  return true;
}

AxiomResult witness(const AbstractModel& m, std::initializer_list<Idx> tuple) {
  AxiomResult res{false, {}};
  for (auto i : tuple) res.counterexample.push_back(m.name(i));
  return res;
}

}  // namespace

AxiomReport check_axioms(const AbstractModel& m) {
  AxiomReport rep;
  const Idx n = m.size();
  [&] {
    for (Idx r = 0; r < n; ++r) {
      for (Idx s = 0; s < n; ++s) {
        for (Idx t = 0; t < n; ++t) {
          if (violates_dedekind(m, r, s, t)) {
            rep.dedekind = witness(m, {r, s, t});
            return;
          }
        }
      }
    }
  }();
  for (Idx r = 0; r < n; ++r) {
    if (violates_cone(m, r)) {
      rep.cone = witness(m, {r});
      break;
    }
  }
  for (Idx p = 0; p < n; ++p) {
    if (violates_choice(m, p)) {
      rep.choice = witness(m, {p});
      break;
    }
  }
  [&] {
    for (auto a : model_points(m)) {
      for (auto b : model_points(m)) {
        for (Idx r = 0; r < n; ++r) {
          if (violates_all_or_nothing(m, a, r, b)) {
            rep.all_or_nothing = witness(m, {a, r, b});
            return;
          }
        }
      }
    }
  }();
  [&] {
    for (Idx p = 0; p < n; ++p) {
      if (violates_extensional(m, {p})) {
        rep.extensional = witness(m, {p});
        return;
      }
    }
    for (Idx p = 0; p < n; ++p) {
      for (Idx q = 0; q < n; ++q) {
        for (Idx r = 0; r < n; ++r) {
          if (violates_extensional(m, {p, q, r})) {
            rep.extensional = witness(m, {p, q, r});
            return;
          }
        }
      }
    }
  }();
  for (Idx r = 0; r < n; ++r) {
    if (violates_universal_choice(m, r)) {
      rep.universal_choice = witness(m, {r});
      break;
    }
  }
  return rep;
}

bool reproduces(const AbstractModel& m, Axiom a, const std::vector<std::string>& ce) {
  std::vector<Idx> t;
  try {
    for (const auto& name : ce) t.push_back(m.index_of(name));
  } catch (const std::out_of_range&) {
    return false;
  }
  switch (a) {
    case Axiom::Dedekind: return t.size() == 3 && violates_dedekind(m, t[0], t[1], t[2]);
    case Axiom::Cone: return t.size() == 1 && violates_cone(m, t[0]);
    case Axiom::Choice: return t.size() == 1 && violates_choice(m, t[0]);
    case Axiom::AllOrNothing: return t.size() == 3 && violates_all_or_nothing(m, t[0], t[1], t[2]);
    case Axiom::Extensional: return violates_extensional(m, t);
    case Axiom::UniversalChoice: return t.size() == 1 && violates_universal_choice(m, t[0]);
  }
  return false;
}

AbstractModel product(const AbstractModel& a, const AbstractModel& b) {
  AbstractModel m;
  const Idx nb = b.size();
  auto pack = [nb](Idx x, Idx y) { return x * nb + y; };
  for (Idx x = 0; x < a.size(); ++x) {
    for (Idx y = 0; y < nb; ++y) m.elements.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  }
  const Idx n = m.elements.size();
  m.leq.assign(n, std::vector<bool>(n));
  m.compose.assign(n, std::vector<Idx>(n));
  m.converse.assign(n, 0);
  for (Idx x1 = 0; x1 < a.size(); ++x1) {
    for (Idx y1 = 0; y1 < nb; ++y1) {
      const Idx p = pack(x1, y1);
      m.converse[p] = pack(a.conv(x1), b.conv(y1));
      for (Idx x2 = 0; x2 < a.size(); ++x2) {
        for (Idx y2 = 0; y2 < nb; ++y2) {
          const Idx q = pack(x2, y2);
          m.leq[p][q] = a.le(x1, x2) && b.le(y1, y2);
          m.compose[p][q] = pack(a.comp(x1, x2), b.comp(y1, y2));
        }
      }
    }
  }
  m.identity = pack(a.identity, b.identity);
  m.top = pack(a.top, b.top);
  m.bottom = pack(a.bottom, b.bottom);
  return validated(std::move(m));
}

std::optional<bool> Expectation::get(Axiom a) const {
  switch (a) {
    case Axiom::Dedekind: return std::nullopt;
    case Axiom::Cone: return cone;
    case Axiom::Choice: return choice;
    case Axiom::AllOrNothing: return all_or_nothing;
    case Axiom::Extensional: return extensional;
    case Axiom::UniversalChoice: return universal_choice;
  }
  return std::nullopt;
}

std::vector<BundledModel> bundled_models() {
  // Expectations for the independence examples. The variant with 𝕀 = ⊤ is a
  // three-element chain; its single point lies strictly below 𝕀, so it is not
  // extensional under the point-saturation reading used here.
  const std::map<std::string, Expectation> expected = {
      {"one_element", {true, true, true, true, std::nullopt}},
      {"two_element", {true, true, true, true, std::nullopt}},
      {"three_element", {true, false, false, true, true}},
      {"three_element_id_top", {false, true, std::nullopt, false, std::nullopt}},
      {"four_element_point", {false, false, true, false, std::nullopt}},
      {"desharnais13", {true, false, true, std::nullopt, std::nullopt}},
  };
  std::vector<BundledModel> out;
  for (const auto& [name, text] : detail::bundled_model_sources()) {
    const auto it = expected.find(name);
    out.push_back({name, parse_model(text), it == expected.end() ? Expectation{} : it->second});
  }
  return out;
}

const BundledModel& bundled_model(std::string_view name) {
  static const std::vector<BundledModel> models = bundled_models();
  for (const auto& m : models) {
    if (m.name == name) return m;
  }
  throw std::out_of_range("no bundled model named '" + std::string(name) + "'");
}

}  // namespace relalg
