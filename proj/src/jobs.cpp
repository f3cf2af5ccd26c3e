#include "hirz/jobs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hirz/cohom.hpp"
#include "hirz/curves.hpp"
#include "hirz/negativity.hpp"
#include "hirz/seshadri.hpp"
#include "hirz/verify.hpp"
#include "serialize.hpp"

namespace hirz {

namespace sz = serialize;
using Json = sz::Json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return exit_code::usage;
    case ErrorKind::Hypothesis: return exit_code::hypothesis;
    case ErrorKind::UnsupportedRange: return exit_code::unsupported;
    case ErrorKind::Invariant: return exit_code::invariant;
  }
  return exit_code::invariant;
}

const char* to_string(Command c) {
  switch (c) {
    case Command::Seshadri: return "seshadri";
    case Command::Enumerate: return "enumerate";
    case Command::Hzero: return "hzero";
    case Command::Bound: return "bound";
    case Command::Verify: return "verify";
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (Command c : {Command::Seshadri, Command::Enumerate, Command::Hzero, Command::Bound, Command::Verify})
    if (name == to_string(c)) return c;
  throw StructuralError("field 'command': unknown command '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "human") return OutputFormat::Human;
  throw StructuralError("field 'format': expected json, csv or human, got '" + name + "'");
}

namespace {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::UnsupportedRange: return "unsupported-range";
    case ErrorKind::Invariant: return "invariant-violation";
  }
  return "?";
}

std::vector<std::int64_t> parse_int_list(const Json& v, const std::string& field) {
  std::vector<std::int64_t> out;
  if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw StructuralError("field '" + field + "' must hold integers");
      out.push_back(x.get<std::int64_t>());
    }
    return out;
  }
  if (v.is_string()) {
    std::stringstream ss(v.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw StructuralError("field '" + field + "': '" + item + "' is not an integer");
      }
    }
    return out;
  }
  throw StructuralError("field '" + field + "' must be an integer array or a comma-separated string");
}

// Field names as they appear in NDJSON and (with dashes) on the command line.
struct FieldPresence {
  const char* name;
  bool present;
};

std::vector<FieldPresence> presence(const JobSpec& s) {
  return {{"e", s.e.has_value()},
          {"r", s.r.has_value()},
          {"genus", s.genus.has_value()},
          {"alpha", s.alpha.has_value()},
          {"beta", s.beta.has_value()},
          {"mu", s.mu.has_value()},
          {"target", s.target.has_value()},
          {"case", s.ruled_case.has_value()},
          {"point_index", s.point_index.has_value()},
          {"a", s.a.has_value()},
          {"b", s.b.has_value()},
          {"m", s.m.has_value()},
          {"criterion", s.criterion.has_value()},
          {"seed", s.seed.has_value()}};
}

void require(bool present, const char* field, Command c) {
  if (!present)
    throw StructuralError("field '" + std::string(field) + "' is required for " + to_string(c));
}

void require_nonneg(const std::optional<std::int64_t>& v, const char* field) {
  if (v && *v < 0) throw StructuralError("field '" + std::string(field) + "' must be >= 0");
}

std::size_t point_count(const JobSpec& s, const std::vector<std::int64_t>& list, const char* list_name) {
  if (s.r && *s.r != static_cast<std::int64_t>(list.size()))
    throw StructuralError("field 'r' (" + std::to_string(*s.r) + ") must equal the length of '" +
                          list_name + "' (" + std::to_string(list.size()) + ")");
  return list.size();
}

bool case_needs_index(std::int64_t c) { return c == 2 || c == 3 || c == 5 || c == 6; }

Json surface_input(const SurfaceContext& ctx) {
  Json in{{"surface", ctx.kind == SurfaceKind::Hirzebruch ? "hirzebruch" : "ruled"},
          {"e", ctx.e},
          {"r", ctx.r},
          {"very_general", ctx.very_general}};
  if (ctx.kind == SurfaceKind::Ruled) in["genus"] = ctx.g;
  return in;
}

struct Rendered {
  Json json;
  std::string csv;
  std::string human;
};

Rendered run_seshadri(const JobSpec& s) {
  const auto r = point_count(s, *s.mu, "mu");
  PolarizationL l{*s.alpha, *s.beta, *s.mu, s.ample_asserted};
  SurfaceContext ctx;
  SeshadriResult res;
  if (s.genus) {
    ctx = SurfaceContext::ruled(*s.genus, *s.e, r, false, s.very_general);
    RuledPosition pos{static_cast<RuledCase>(*s.ruled_case), std::nullopt};
    if (s.point_index) pos.i = static_cast<std::size_t>(*s.point_index - 1);
    res = epsilon_ruled(ctx, l, pos);
  } else {
    ctx = SurfaceContext::hirzebruch(*s.e, r, false, s.very_general);
    const auto offset = static_cast<std::int64_t>(r) - *s.e;
    if (offset == 2)
      res = epsilon_r_e2(ctx, l);
    else if (offset == 3)
      res = epsilon_r_e3(ctx, l);
    else
      throw UnsupportedRangeError("closed forms cover r = e+2 and r = e+3 only (got e = " +
                                  std::to_string(*s.e) + ", r = " + std::to_string(r) + ")");
  }

  Json in = surface_input(ctx);
  in["alpha"] = l.alpha;
  in["beta"] = l.beta;
  in["mu"] = sz::int_list(l.mu);
  if (s.ruled_case) in["case"] = *s.ruled_case;
  if (s.point_index) in["point_index"] = *s.point_index;

  Rendered out;
  Json classes = Json::array();
  std::string class_names;
  for (const auto& c : res.argmin_classes) {
    classes.push_back(sz::divisor(c));
    class_names += (class_names.empty() ? "" : "; ") + c.to_string();
  }
  std::string ties;
  for (const auto& t : res.tied_branches) ties += (ties.empty() ? "" : ";") + t;
  out.json = Json{{"input", in},
                  {"epsilon", sz::rational(res.epsilon)},
                  {"branch", res.branch},
                  {"tied_branches", res.tied_branches},
                  {"argmin_classes", classes},
                  {"conditional_on_ampleness", res.conditional_on_ampleness},
                  {"sqrt_bound_holds", sqrt_bound_holds(ctx, l, res.epsilon)}};
  out.csv = sz::csv_row({"epsilon_num", "epsilon_den", "epsilon_decimal", "branch", "tied_branches",
                         "argmin_classes"}) +
            sz::csv_row({res.epsilon.num().str(), res.epsilon.den().str(), res.epsilon.decimal(), res.branch,
                         ties, class_names});
  std::ostringstream h;
  h << "epsilon = " << res.epsilon.str();
  if (!res.epsilon.is_integer()) h << " (" << res.epsilon.decimal() << ")";
  h << "\nbranch: " << res.branch;
  if (res.tied_branches.size() > 1) h << " (tied: " << ties << ")";
  h << "\nminimizing classes:\n";
  for (const auto& c : res.argmin_classes) h << "  " << c.to_string() << "\n";
  h << "valid only if L is ample\n";
  out.human = h.str();
  return out;
}

Rendered run_enumerate(const JobSpec& s) {
  const auto r = static_cast<std::size_t>(*s.r);
  const ClassCatalog cat = s.genus ? enumerate_negative_ruled(*s.genus, *s.e, r)
                           : s.target.value_or(-1) == -1 ? enumerate_minus_one_classes(*s.e, r)
                                                         : enumerate_minus_two_classes(*s.e, r);
  const auto& ctx = cat.context();
  const auto k = canonical_class(ctx);
  Json in = surface_input(ctx);
  if (!s.genus) in["target"] = s.target.value_or(-1);

  Rendered out;
  Json classes = Json::array();
  out.csv = sz::csv_row({"class", "a", "b", "m", "self_intersection", "canonical_degree", "family", "provenance"});
  std::ostringstream h;
  h << cat.size() << " classes\n";
  for (const auto& entry : cat) {
    const auto& d = entry.divisor;
    const auto kc = intersect(ctx, d, k);
    classes.push_back(Json{{"class", sz::divisor(d)},
                           {"name", d.to_string()},
                           {"family", to_string(entry.family.label)},
                           {"pattern", entry.family.multiplicity_pattern},
                           {"self_intersection", entry.self_intersection},
                           {"canonical_degree", kc},
                           {"provenance", entry.provenance}});
    out.csv += sz::csv_row({d.to_string(), std::to_string(d.a), std::to_string(d.b), sz::join_ints(d.m),
                            std::to_string(entry.self_intersection), std::to_string(kc),
                            to_string(entry.family.label), entry.provenance});
    h << "  " << d.to_string() << "  [" << to_string(entry.family.label) << ", C^2 = " << entry.self_intersection
      << "]\n";
  }
  out.json = Json{{"input", in}, {"count", cat.size()}, {"classes", classes}};
  out.human = h.str();
  return out;
}

Rendered run_hzero(const JobSpec& s) {
  const auto h0 = h0_fe(*s.e, *s.a, *s.b);
  Rendered out;
  out.json = Json{{"input", Json{{"e", *s.e}, {"a", *s.a}, {"b", *s.b}}}, {"h0", h0}};
  out.csv = sz::csv_row({"e", "a", "b", "h0"}) +
            sz::csv_row({std::to_string(*s.e), std::to_string(*s.a), std::to_string(*s.b), std::to_string(h0)});
  out.human = std::to_string(h0) + "\n";
  return out;
}

std::string bound_text(const BoundValue& v) {
  if (std::holds_alternative<Exempt>(v)) return "exempt";
  return std::to_string(std::get<std::int64_t>(v));
}

Json bound_json(const BoundValue& v) {
  if (std::holds_alternative<Exempt>(v)) return "exempt";
  return std::get<std::int64_t>(v);
}

Rendered run_bound(const JobSpec& s) {
  const std::vector<std::int64_t> m = s.m.value_or(std::vector<std::int64_t>{});
  const auto r = point_count(s, m, "m");
  const SurfaceContext ctx = s.genus ? SurfaceContext::ruled(*s.genus, *s.e, r, false, s.very_general)
                                     : SurfaceContext::hirzebruch(*s.e, r, false, s.very_general);
  DivisorClass c;
  c.a = *s.a;
  c.b = *s.b;
  c.m = m;
  ClassCatalog one(ctx);
  one.add(c, {FamilyLabel::Unclassified, c.a, c.b, {}}, "input");
  const BoundRow row = bound_report(one).rows.front();
  const BoundValue cases = case_bound(ctx, c);

  Json in = surface_input(ctx);
  in["class"] = sz::divisor(c);
  Rendered out;
  out.json = Json{{"input", in},
                  {"self_intersection", row.self_intersection},
                  {"bound", bound_json(row.bound)},
                  {"applicable", row.applicable},
                  {"slack", row.slack ? Json(*row.slack) : Json(nullptr)},
                  {"satisfied", !row.violated},
                  {"case_bound", bound_json(cases)}};
  if (s.genus) out.json["lambda"] = ruled_lambda(ctx.g, ctx.e, static_cast<std::int64_t>(r));
  const std::string slack = row.slack ? std::to_string(*row.slack) : "";
  out.csv = sz::csv_row({"class", "self_intersection", "bound", "applicable", "slack", "satisfied", "case_bound"}) +
            sz::csv_row({c.to_string(), std::to_string(row.self_intersection), bound_text(row.bound),
                         row.applicable ? "true" : "false", slack, row.violated ? "false" : "true",
                         bound_text(cases)});
  std::ostringstream h;
  h << c.to_string() << ": C^2 = " << row.self_intersection << ", bound " << bound_text(row.bound);
  if (!row.applicable) h << " (not a negative class)";
  else if (row.slack) h << (row.violated ? ", VIOLATED" : ", holds") << " (slack " << *row.slack << ")";
  h << "\n";
  out.human = h.str();
  return out;
}

Rendered run_verify(const JobSpec& s, bool& all_passed) {
  VerifyOptions opts;
  if (s.seed) opts.seed = static_cast<std::uint64_t>(*s.seed);
  opts.quick = s.quick;
  std::vector<CheckResult> results;
  if (s.criterion)
    results.push_back(run_check(static_cast<int>(*s.criterion), opts));
  else
    results = run_all_checks(opts);

  all_passed = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
  Rendered out;
  Json checks = Json::array();
  out.csv = sz::csv_row({"criterion", "name", "passed", "seconds", "summary"});
  std::ostringstream h;
  for (const auto& c : results) {
    checks.push_back(Json{{"criterion", c.id},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"summary", c.summary},
                          {"details", c.details},
                          {"seconds", c.seconds}});
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << c.seconds;
    out.csv += sz::csv_row({std::to_string(c.id), c.name, c.passed ? "true" : "false", secs.str(), c.summary});
    h << "criterion " << c.id << "  " << (c.passed ? "PASS" : "FAIL") << "  " << secs.str() << "s  " << c.name
      << "\n    " << c.summary << "\n";
    for (const auto& d : c.details) h << "      " << d << "\n";
  }
  out.json = Json{{"input", Json{{"seed", opts.seed}, {"quick", opts.quick}}},
                  {"checks", checks},
                  {"passed", all_passed}};
  out.human = h.str();
  return out;
}

std::string render(const Rendered& r, const JobSpec& s, bool compact) {
  switch (s.format) {
    case OutputFormat::Csv: return r.csv;
    case OutputFormat::Human: return r.human;
    case OutputFormat::Json: break;
  }
  Json j = r.json;
  j["schema_version"] = kSchemaVersion;
  j["command"] = to_string(s.command);
  return (compact ? j.dump() : j.dump(2)) + "\n";
}

JobOutput failure(const JobSpec* spec, ErrorKind kind, const std::string& message, bool compact) {
  JobOutput out;
  out.exit_code = exit_code_for(kind);
  out.err = "error (" + std::string(kind_name(kind)) + "): " + message + "\n";
  if (!spec || spec->format == OutputFormat::Json) {
    Json j{{"schema_version", kSchemaVersion},
           {"command", spec ? Json(to_string(spec->command)) : Json(nullptr)},
           {"error", Json{{"kind", kind_name(kind)}, {"message", message}}},
           {"exit_code", out.exit_code}};
    out.out = (compact ? j.dump() : j.dump(2)) + "\n";
  }
  return out;
}

}  // namespace

JobSpec parse_job_json(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& ex) {
    throw StructuralError(std::string("job is not valid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw StructuralError("job must be a JSON object");
  if (!j.contains("command") || !j["command"].is_string())
    throw StructuralError("field 'command' is required and must be a string");

  JobSpec s;
  s.command = parse_command(j["command"].get<std::string>());
  auto as_int = [](const Json& v, const std::string& key) {
    if (!v.is_number_integer()) throw StructuralError("field '" + key + "' must be an integer");
    return v.get<std::int64_t>();
  };
  auto as_bool = [](const Json& v, const std::string& key) {
    if (!v.is_boolean()) throw StructuralError("field '" + key + "' must be a boolean");
    return v.get<bool>();
  };
  const std::map<std::string, std::function<void(const Json&, const std::string&)>> handlers{
      {"command", [](const Json&, const std::string&) {}},
      {"format",
       [&](const Json& v, const std::string& k) {
         if (!v.is_string()) throw StructuralError("field '" + k + "' must be a string");
         s.format = parse_format(v.get<std::string>());
       }},
      {"e", [&](const Json& v, const std::string& k) { s.e = as_int(v, k); }},
      {"r", [&](const Json& v, const std::string& k) { s.r = as_int(v, k); }},
      {"genus", [&](const Json& v, const std::string& k) { s.genus = as_int(v, k); }},
      {"alpha", [&](const Json& v, const std::string& k) { s.alpha = as_int(v, k); }},
      {"beta", [&](const Json& v, const std::string& k) { s.beta = as_int(v, k); }},
      {"mu", [&](const Json& v, const std::string& k) { s.mu = parse_int_list(v, k); }},
      {"target", [&](const Json& v, const std::string& k) { s.target = as_int(v, k); }},
      {"case", [&](const Json& v, const std::string& k) { s.ruled_case = as_int(v, k); }},
      {"point_index", [&](const Json& v, const std::string& k) { s.point_index = as_int(v, k); }},
      {"a", [&](const Json& v, const std::string& k) { s.a = as_int(v, k); }},
      {"b", [&](const Json& v, const std::string& k) { s.b = as_int(v, k); }},
      {"m", [&](const Json& v, const std::string& k) { s.m = parse_int_list(v, k); }},
      {"very_general", [&](const Json& v, const std::string& k) { s.very_general = as_bool(v, k); }},
      {"ample_asserted", [&](const Json& v, const std::string& k) { s.ample_asserted = as_bool(v, k); }},
      {"criterion", [&](const Json& v, const std::string& k) { s.criterion = as_int(v, k); }},
      {"seed", [&](const Json& v, const std::string& k) { s.seed = as_int(v, k); }},
      {"quick", [&](const Json& v, const std::string& k) { s.quick = as_bool(v, k); }},
  };
  for (const auto& [key, value] : j.items()) {
    auto it = handlers.find(key);
    if (it == handlers.end()) throw StructuralError("field '" + key + "' is not a job field");
    it->second(value, key);
  }
  return s;
}

void validate(const JobSpec& s) {
  std::set<std::string> allowed;
  switch (s.command) {
    case Command::Seshadri:
      allowed = {"e", "r", "genus", "alpha", "beta", "mu", "case", "point_index"};
      require(s.e.has_value(), "e", s.command);
      require(s.alpha.has_value(), "alpha", s.command);
      require(s.beta.has_value(), "beta", s.command);
      require(s.mu.has_value(), "mu", s.command);
      point_count(s, *s.mu, "mu");
      if (s.genus) {
        require(s.ruled_case.has_value(), "case", s.command);
        if (*s.ruled_case < 1 || *s.ruled_case > 6) throw StructuralError("field 'case' must be in 1..6");
        const bool needs = case_needs_index(*s.ruled_case);
        if (needs && !s.point_index)
          throw StructuralError("field 'point_index' is required for case " + std::to_string(*s.ruled_case));
        if (!needs && s.point_index)
          throw StructuralError("field 'point_index' does not apply to case " + std::to_string(*s.ruled_case));
        if (s.point_index && (*s.point_index < 1 || *s.point_index > static_cast<std::int64_t>(s.mu->size())))
          throw StructuralError("field 'point_index' must be in 1.." + std::to_string(s.mu->size()));
      } else {
        if (s.ruled_case) throw StructuralError("field 'case' applies only with 'genus'");
        if (s.point_index) throw StructuralError("field 'point_index' applies only with 'genus'");
        require_nonneg(s.e, "e");
      }
      break;
    case Command::Enumerate:
      allowed = {"e", "r", "genus", "target"};
      require(s.e.has_value(), "e", s.command);
      require(s.r.has_value(), "r", s.command);
      require_nonneg(s.r, "r");
      if (s.genus) {
        if (s.target) throw StructuralError("field 'target' does not apply to ruled surfaces");
      } else {
        require_nonneg(s.e, "e");
        if (s.target && *s.target != -1 && *s.target != -2)
          throw StructuralError("field 'target' must be -1 or -2");
      }
      break;
    case Command::Hzero:
      allowed = {"e", "a", "b"};
      require(s.e.has_value(), "e", s.command);
      require(s.a.has_value(), "a", s.command);
      require(s.b.has_value(), "b", s.command);
      require_nonneg(s.e, "e");
      break;
    case Command::Bound:
      allowed = {"e", "r", "genus", "a", "b", "m"};
      require(s.e.has_value(), "e", s.command);
      require(s.a.has_value(), "a", s.command);
      require(s.b.has_value(), "b", s.command);
      point_count(s, s.m.value_or(std::vector<std::int64_t>{}), "m");
      if (!s.genus) require_nonneg(s.e, "e");
      break;
    case Command::Verify:
      allowed = {"criterion", "seed"};
      if (s.criterion && (*s.criterion < 1 || *s.criterion > kCheckCount))
        throw StructuralError("field 'criterion' must be in 1.." + std::to_string(kCheckCount));
      break;
  }
  for (const auto& f : presence(s))
    if (f.present && !allowed.count(f.name))
      throw StructuralError("field '" + std::string(f.name) + "' does not apply to " + to_string(s.command));
  if (s.genus && *s.genus < 1) throw StructuralError("field 'genus' must be >= 1");
}

JobOutput run_job(const JobSpec& spec, bool compact) {
  try {
    validate(spec);
    Rendered r;
    bool passed = true;
    switch (spec.command) {
      case Command::Seshadri: r = run_seshadri(spec); break;
      case Command::Enumerate: r = run_enumerate(spec); break;
      case Command::Hzero: r = run_hzero(spec); break;
      case Command::Bound: r = run_bound(spec); break;
      case Command::Verify: r = run_verify(spec, passed); break;
    }
    JobOutput out;
    out.out = render(r, spec, compact);
    if (!passed) {
      out.exit_code = exit_code::invariant;
      out.err = "error (invariant-violation): some checks failed\n";
    }
    return out;
  } catch (const Error& ex) {
    return failure(&spec, ex.kind(), ex.what(), compact);
  } catch (const std::exception& ex) {
    return failure(&spec, ErrorKind::Invariant, ex.what(), compact);
  }
}

int run_batch(std::istream& in, std::ostream& out, std::ostream& err) {
  int status = exit_code::ok;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    JobOutput result;
    try {
      result = run_job(parse_job_json(line), true);
    } catch (const Error& ex) {
      result = failure(nullptr, ex.kind(), ex.what(), true);
    }
    out << result.out;
    if (!result.err.empty()) err << "line " << lineno << ": " << result.err;
    if (status == exit_code::ok) status = result.exit_code;
  }
  return status;
}

}  // namespace hirz
