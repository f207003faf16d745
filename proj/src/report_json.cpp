#include "kronctrl/report_json.hpp"

#include "kronctrl/error.hpp"

namespace kronctrl {

namespace {

template <typename T, typename F>
nlohmann::json optional_json(const std::optional<T>& v, F&& convert) {
  return v ? nlohmann::json(convert(*v)) : nlohmann::json(nullptr);
}

Rational rational_from(const nlohmann::json& j) { return Rational::parse(j.get<std::string>()); }

}  // namespace

nlohmann::json report_to_json(const ControllabilityReport& r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = to_string(r.method);
  j["classes"] = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& [a, b] : c.members) members.push_back({a, b});
    j["classes"].push_back(
        {{"sigma", c.sigma.str()}, {"dim", c.dimension}, {"rank", c.rank}, {"pass", c.pass}, {"members", members}});
  }
  j["conditions"] = nlohmann::json::array();
  for (const auto& c : r.conditions) j["conditions"].push_back({{"name", c.name}, {"pass", c.pass}});
  j["witness"] = optional_json(r.witness, [](const RowVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
  });
  j["witness_eigenvalue"] = optional_json(r.witness_eigenvalue, [](const Rational& x) { return x.str(); });
  j["oracle_controllable"] = optional_json(r.oracle_controllable, [](bool b) { return b; });
  j["oracle_agreement"] = optional_json(r.oracle_agreement, [](bool b) { return b; });
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ControllabilityReport report_from_json(const nlohmann::json& j) {
  try {
    ControllabilityReport r;
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.method = parse_method(j.at("method").get<std::string>());
    for (const auto& c : j.at("classes")) {
      ClassEvidence ev{rational_from(c.at("sigma")), c.at("dim").get<std::size_t>(), c.at("rank").get<std::size_t>(),
                       c.at("pass").get<bool>(), {}};
      if (c.contains("members")) {
        for (const auto& m : c.at("members")) ev.members.emplace_back(m.at(0).get<std::size_t>(), m.at(1).get<std::size_t>());
      }
      r.classes.push_back(std::move(ev));
    }
    if (j.contains("conditions")) {
      for (const auto& c : j.at("conditions")) r.conditions.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>()});
    }
    if (const auto& w = j.at("witness"); !w.is_null()) {
      std::vector<Rational> entries;
      for (const auto& x : w) entries.push_back(rational_from(x));
      r.witness = RowVec(std::move(entries));
    }
    if (j.contains("witness_eigenvalue") && !j["witness_eigenvalue"].is_null())
      r.witness_eigenvalue = rational_from(j["witness_eigenvalue"]);
    if (j.contains("oracle_controllable") && !j["oracle_controllable"].is_null())
      r.oracle_controllable = j["oracle_controllable"].get<bool>();
    if (const auto& a = j.at("oracle_agreement"); !a.is_null()) r.oracle_agreement = a.get<bool>();
    r.note = j.value("note", std::string{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace kronctrl
