#include "cannonball/report_json.hpp"

#include <stdexcept>

namespace cannonball {
namespace {

template <typename T>
T required(std::optional<T> parsed, const Json& j, const char* what) {
  if (!parsed) throw std::invalid_argument(std::string("unrecognized ") + what + ": " + j.dump());
  return *parsed;
}

int small_from_json(const Json& j) {
  Integer n = integer_from_json(j);
  if (!n.fits_sint_p()) throw std::invalid_argument("integer out of range: " + j.dump());
  return static_cast<int>(n.get_si());
}

std::string text_of(const Json& j) { return j.get<std::string>(); }

void put_optional(Json& j, const char* key, const std::optional<Integer>& value) {
  if (value) j[key] = integer_to_json(*value);
}

std::optional<Integer> get_optional(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return integer_from_json(j.at(key));
}

}  // namespace

Json integer_to_json(const Integer& n) { return to_string(n); }

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string, got " + j.dump());
  return parse_integer(j.get<std::string>());
}

void to_json(Json& j, const ClassVerdict& v) {
  j = Json{{"kind", label(v.kind)},
           {"modulus", integer_to_json(v.modulus)},
           {"residue", integer_to_json(v.residue)},
           {"allowed", v.allowed()}};
}

void from_json(const Json& j, ClassVerdict& v) {
  v.kind = required(parse_class_kind(text_of(j.at("kind"))), j.at("kind"), "class kind");
  v.modulus = small_from_json(j.at("modulus"));
  v.residue = small_from_json(j.at("residue"));
}

void to_json(Json& j, const MuDecomposition& d) {
  j = Json{{"mu", integer_to_json(d.mu)},
           {"m1", integer_to_json(d.m1)},
           {"A", integer_to_json(d.A)},
           {"B", integer_to_json(d.B)}};
}

void from_json(const Json& j, MuDecomposition& d) {
  d.mu = small_from_json(j.at("mu"));
  d.m1 = integer_from_json(j.at("m1"));
  d.A = small_from_json(j.at("A"));
  d.B = small_from_json(j.at("B"));
}

void to_json(Json& j, const ClassDecomposition& c) {
  j = Json{{"M", integer_to_json(c.m_value)}, {"m", integer_to_json(c.m)}, {"verdict", c.verdict}};
  j["decomposition"] = c.decomposition ? Json(*c.decomposition) : Json(nullptr);
}

void from_json(const Json& j, ClassDecomposition& c) {
  c.m_value = integer_from_json(j.at("M"));
  c.m = integer_from_json(j.at("m"));
  c.verdict = j.at("verdict").get<ClassVerdict>();
  const Json& d = j.at("decomposition");
  c.decomposition = d.is_null() ? std::nullopt : std::optional<MuDecomposition>(d.get<MuDecomposition>());
}

void to_json(Json& j, const Witness& w) {
  j = Json::object();
  if (!w.family.empty()) j["family"] = w.family;
  put_optional(j, "p", w.p);
  put_optional(j, "e", w.e);
  put_optional(j, "i", w.i);
  put_optional(j, "alpha", w.alpha);
  put_optional(j, "modulus", w.modulus);
  put_optional(j, "residue", w.residue);
}

void from_json(const Json& j, Witness& w) {
  w.family = j.value("family", std::string{});
  w.p = get_optional(j, "p");
  w.e = get_optional(j, "e");
  w.i = get_optional(j, "i");
  w.alpha = get_optional(j, "alpha");
  w.modulus = get_optional(j, "modulus");
  w.residue = get_optional(j, "residue");
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"condition", label(v.condition)}, {"status", label(v.status)}, {"witnesses", v.witnesses}};
}

void from_json(const Json& j, Verdict& v) {
  v.condition = required(parse_condition(text_of(j.at("condition"))), j.at("condition"), "condition");
  v.status = required(parse_status(text_of(j.at("status"))), j.at("status"), "status");
  v.witnesses = j.at("witnesses").get<std::vector<Witness>>();
}

void to_json(Json& j, const ConditionReport& r) {
  j = Json{{"M", integer_to_json(r.m_value)},
           {"semantics", label(r.semantics)},
           {"overall", label(r.overall)},
           {"verdicts", r.verdicts}};
}

void from_json(const Json& j, ConditionReport& r) {
  r.m_value = integer_from_json(j.at("M"));
  r.semantics = required(parse_semantics(text_of(j.at("semantics"))), j.at("semantics"), "semantics");
  r.overall = required(parse_status(text_of(j.at("overall"))), j.at("overall"), "status");
  const Json& verdicts = j.at("verdicts");
  if (!verdicts.is_array() || verdicts.size() != r.verdicts.size())
    throw std::invalid_argument("a condition report needs exactly 8 verdicts");
  for (std::size_t k = 0; k < r.verdicts.size(); ++k) r.verdicts[k] = verdicts[k].get<Verdict>();
}

void to_json(Json& j, const Solution& s) {
  j = Json{{"M", integer_to_json(s.m_value)}, {"a", integer_to_json(s.start)}, {"s", integer_to_json(s.root)}};
}

void from_json(const Json& j, Solution& s) {
  s.m_value = integer_from_json(j.at("M"));
  s.start = integer_from_json(j.at("a"));
  s.root = integer_from_json(j.at("s"));
}

void to_json(Json& j, const ViolationNote& n) {
  j = Json{{"semantics", label(n.semantics)}, {"condition", label(n.condition)}, {"witnesses", n.witnesses}};
}

void from_json(const Json& j, ViolationNote& n) {
  n.semantics = required(parse_semantics(text_of(j.at("semantics"))), j.at("semantics"), "semantics");
  n.condition = required(parse_condition(text_of(j.at("condition"))), j.at("condition"), "condition");
  n.witnesses = j.at("witnesses").get<std::vector<Witness>>();
}

void to_json(Json& j, const SieveRow& r) {
  j = Json{{"M", integer_to_json(r.m_value)},
           {"class", r.class_verdict},
           {"beeckmans", label(r.beeckmans)},
           {"refined", label(r.refined)}};
  j["first_solution"] = r.first_solution ? Json(*r.first_solution) : Json(nullptr);
  j["violations"] = r.violations;
}

void from_json(const Json& j, SieveRow& r) {
  r.m_value = integer_from_json(j.at("M"));
  r.class_verdict = text_of(j.at("class"));
  r.beeckmans = required(parse_status(text_of(j.at("beeckmans"))), j.at("beeckmans"), "status");
  r.refined = required(parse_refined_status(text_of(j.at("refined"))), j.at("refined"), "refined status");
  const Json& s = j.at("first_solution");
  r.first_solution = s.is_null() ? std::nullopt : std::optional<Solution>(s.get<Solution>());
  r.violations = j.at("violations").get<std::vector<ViolationNote>>();
}

void to_json(Json& j, const DifferenceEntry& e) {
  j = Json{{"M", integer_to_json(e.m_value)},
           {"strict", e.strict},
           {"literal", e.literal},
           {"a_max", integer_to_json(e.a_max)}};
  j["solution"] = e.solution ? Json(*e.solution) : Json(nullptr);
}

void from_json(const Json& j, DifferenceEntry& e) {
  e.m_value = integer_from_json(j.at("M"));
  e.strict = j.at("strict").get<ConditionReport>();
  e.literal = j.at("literal").get<ConditionReport>();
  e.a_max = integer_from_json(j.at("a_max"));
  const Json& s = j.at("solution");
  e.solution = s.is_null() ? std::nullopt : std::optional<Solution>(s.get<Solution>());
}

void to_json(Json& j, const DifferenceReport& r) {
  j = Json{{"m_max", integer_to_json(r.m_max)},
           {"a_max", integer_to_json(r.a_max)},
           {"strict_only", r.strict_only},
           {"literal_only", r.literal_only}};
}

void from_json(const Json& j, DifferenceReport& r) {
  r.m_max = integer_from_json(j.at("m_max"));
  r.a_max = integer_from_json(j.at("a_max"));
  r.strict_only = j.at("strict_only").get<std::vector<DifferenceEntry>>();
  r.literal_only = j.at("literal_only").get<std::vector<DifferenceEntry>>();
}

std::string csv_header() { return "M,class,beeckmans,refined,first_a,first_s,violated_list"; }

std::string csv_line(const SieveRow& row) {
  std::string line = to_string(row.m_value);
  line += ',';
  line += row.class_verdict;
  line += ',';
  line += label(row.beeckmans);
  line += ',';
  line += label(row.refined);
  line += ',';
  if (row.first_solution) line += to_string(row.first_solution->start);
  line += ',';
  if (row.first_solution) line += to_string(row.first_solution->root);
  line += ',';
  bool first = true;
  for (const auto& note : row.violations) {
    if (!first) line += ';';
    first = false;
    line += label(note.semantics);
    line += ':';
    line += label(note.condition);
  }
  return line;
}

}  // namespace cannonball
