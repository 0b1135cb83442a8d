#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mixmod/serialize.hpp"

namespace verify {

using nlohmann::json;

namespace {

void dump(std::ostream& os, const json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close(2 * static_cast<std::size_t>(depth), ' ');
  switch (j.type()) {
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      break;
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        break;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          dump(os, j[i], depth + 1);
        }
        os << ']';
        break;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << pad;
        dump(os, j[i], depth + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << close << ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        break;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << pad << json(it.key()).dump() << ": ";
        dump(os, it.value(), depth + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << close << '}';
      break;
    }
    default:
      os << j.dump();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

bool is_real(const json& j) { return j.is_number() || j == "inf" || j == "-inf"; }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double Report::max_violation() const {
  double worst = 0.0;
  for (const auto& t : trials)
    if (t.asserted) worst = std::max(worst, t.violation);
  return worst;
}

bool Report::pass() const {
  for (const auto& t : trials)
    if (!t.ok()) return false;
  return true;
}

std::string digest(std::span<const mixmod::Complex> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto* bytes = reinterpret_cast<const unsigned char*>(values.data());
  for (std::size_t i = 0; i < values.size_bytes(); ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const mixmod::ComplexMatrix& m) { return digest(std::span<const mixmod::Complex>(m.data(), static_cast<std::size_t>(m.size()))); }

json report_to_json(const Report& r) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"index", t.index},
                      {"label", t.label},
                      {"digest", t.digest},
                      {"lhs", mixmod::real_to_json(t.lhs)},
                      {"rhs", mixmod::real_to_json(t.rhs)},
                      {"violation", mixmod::real_to_json(t.violation)},
                      {"tolerance", t.tolerance},
                      {"asserted", t.asserted}});
  }
  json observed = json::object();
  for (const auto& [k, v] : r.observed) observed[k] = mixmod::real_to_json(v);
  json tables = json::array();
  for (const auto& t : r.tables) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json jr = json::array();
      for (double v : row) jr.push_back(mixmod::real_to_json(v));
      rows.push_back(std::move(jr));
    }
    tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}});
  }
  std::size_t asserted = 0;
  for (const auto& t : r.trials) asserted += t.asserted;
  return {{"experiment", r.config.name},
          {"config", config_to_json(r.config)},
          {"trials", std::move(trials)},
          {"tables", std::move(tables)},
          {"aggregate",
           {{"max_violation", mixmod::real_to_json(r.max_violation())},
            {"pass", r.pass()},
            {"records", r.trials.size()},
            {"asserted", asserted},
            {"observed", std::move(observed)}}}};
}

Report report_from_json(const json& j) {
  const auto problems = validate_report_json(j);
  if (!problems.empty()) throw std::invalid_argument("invalid report: " + problems.front());
  Report r;
  r.config = config_from_json(j["config"]);
  for (const auto& t : j["trials"]) {
    r.trials.push_back(TrialRecord{t["index"].get<std::size_t>(), t["label"].get<std::string>(),
                                   t["digest"].get<std::string>(), mixmod::real_from_json(t["lhs"]),
                                   mixmod::real_from_json(t["rhs"]), mixmod::real_from_json(t["violation"]),
                                   t["tolerance"].get<double>(), t["asserted"].get<bool>()});
  }
  for (const auto& [k, v] : j["aggregate"]["observed"].items()) r.observed[k] = mixmod::real_from_json(v);
  for (const auto& t : j["tables"]) {
    Table tab{t["name"].get<std::string>(), t["columns"].get<std::vector<std::string>>(), {}};
    for (const auto& row : t["rows"]) {
      std::vector<double> vals;
      for (const auto& v : row) vals.push_back(mixmod::real_from_json(v));
      tab.rows.push_back(std::move(vals));
    }
    r.tables.push_back(std::move(tab));
  }
  return r;
}

std::vector<std::string> validate_report_json(const json& j) {
  std::vector<std::string> errs;
  auto need = [&](const json& obj, const char* key, auto pred, const char* what) {
    if (!obj.is_object() || !obj.contains(key)) {
      errs.push_back(std::string("missing \"") + key + "\"");
      return false;
    }
    if (!pred(obj[key])) {
      errs.push_back(std::string("\"") + key + "\" must be " + what);
      return false;
    }
    return true;
  };
  const auto is_str = [](const json& v) { return v.is_string(); };
  const auto is_arr = [](const json& v) { return v.is_array(); };
  const auto is_obj = [](const json& v) { return v.is_object(); };
  const auto is_uint = [](const json& v) { return v.is_number_unsigned(); };
  const auto is_bool = [](const json& v) { return v.is_boolean(); };
  const auto is_num = [](const json& v) { return v.is_number(); };

  if (!j.is_object()) return {"report must be an object"};
  need(j, "experiment", is_str, "a string");
  if (need(j, "config", is_obj, "an object")) {
    const json& c = j["config"];
    need(c, "name", is_str, "a string");
    for (const char* k : {"N", "trials", "seed", "a", "b", "M"}) need(c, k, is_uint, "a nonnegative integer");
    need(c, "s", is_num, "a number");
    need(c, "format", is_str, "a string");
    if (need(c, "p", is_arr, "an array"))
      for (const auto& v : c["p"])
        if (!is_real(v)) errs.push_back("config \"p\" entries must be numbers or \"inf\"");
    if (c.contains("name") && j.contains("experiment") && c["name"] != j["experiment"])
      errs.push_back("config name differs from experiment");
  }
  bool recomputed_pass = true;
  double recomputed_max = 0.0;
  if (need(j, "trials", is_arr, "an array")) {
    for (const auto& t : j["trials"]) {
      const std::size_t before = errs.size();
      need(t, "index", is_uint, "a nonnegative integer");
      need(t, "label", is_str, "a string");
      need(t, "digest", is_str, "a string");
      for (const char* k : {"lhs", "rhs", "violation"})
        need(t, k, is_real, "a number or \"inf\"");
      need(t, "tolerance", is_num, "a number");
      need(t, "asserted", is_bool, "a boolean");
      if (errs.size() != before) break;
      if (t["asserted"].get<bool>()) {
        const double v = mixmod::real_from_json(t["violation"]);
        recomputed_max = std::max(recomputed_max, v);
        recomputed_pass = recomputed_pass && v <= t["tolerance"].get<double>();
      }
    }
  }
  if (need(j, "tables", is_arr, "an array")) {
    for (const auto& t : j["tables"]) {
      if (!need(t, "name", is_str, "a string") || !need(t, "columns", is_arr, "an array") ||
          !need(t, "rows", is_arr, "an array"))
        break;
      for (const auto& row : t["rows"])
        if (!row.is_array() || row.size() != t["columns"].size()) errs.push_back("table row width differs from columns");
    }
  }
  if (need(j, "aggregate", is_obj, "an object")) {
    const json& a = j["aggregate"];
    need(a, "observed", is_obj, "an object");
    need(a, "records", is_uint, "a nonnegative integer");
    need(a, "asserted", is_uint, "a nonnegative integer");
    if (need(a, "max_violation", is_real, "a number") && errs.empty() &&
        mixmod::real_from_json(a["max_violation"]) != recomputed_max)
      errs.push_back("aggregate max_violation does not match the trial records");
    if (need(a, "pass", is_bool, "a boolean") && errs.empty() && a["pass"].get<bool>() != recomputed_pass)
      errs.push_back("aggregate pass flag does not match the trial records");
  }
  return errs;
}

std::string emit_json(const Report& r) {
  std::ostringstream os;
  dump(os, report_to_json(r), 0);
  os << '\n';
  const std::string text = os.str();
  // Parse back so a malformed document never leaves the process.
  const auto problems = validate_report_json(json::parse(text));
  if (!problems.empty()) throw std::logic_error("emitted report fails its schema: " + problems.front());
  return text;
}

std::string emit_csv(const Report& r) {
  std::ostringstream os;
  os << "experiment,index,label,digest,lhs,rhs,violation,tolerance,asserted\n";
  for (const auto& t : r.trials) {
    os << r.config.name << ',' << t.index << ',' << csv_field(t.label) << ',' << t.digest << ','
       << format_double(t.lhs) << ',' << format_double(t.rhs) << ',' << format_double(t.violation) << ','
       << format_double(t.tolerance) << ',' << (t.asserted ? "true" : "false") << '\n';
  }
  return os.str();
}

void write_report(const Report& r, Format format, const std::string& path) {
  const std::string text = format == Format::Json ? emit_json(r) : emit_csv(r);
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace verify
