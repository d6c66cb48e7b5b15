#include "dkit/job.hpp"

#include "dkit/parse.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace dkit {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands{{
    {Command::TangentImage, "tangent-image"},
    {Command::Codim, "codim"},
    {Command::Predeterm, "predeterm"},
    {Command::Determ, "determ"},
    {Command::OrbitEquations, "orbit-equations"},
    {Command::Stabilizer, "stabilizer"},
    {Command::OrbitCodim, "orbit-codim"},
    {Command::Separability, "separability"},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::vector<std::string> split_list(std::string_view body, const std::string& field) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw JobError(field, "expected [a, b, ...]");
  body = trim(body.substr(1, body.size() - 2));
  std::vector<std::string> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i)
    if (i == body.size() || body[i] == ',') {
      out.push_back(unquote(body.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

json split_matrix(std::string_view body) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw JobError("matrix", "expected [[a, b], [c, d]]");
  body = trim(body.substr(1, body.size() - 2));
  json rows = json::array();
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] != '[') throw JobError("matrix", "expected '[' opening a row");
    const auto close = body.find(']', i);
    if (close == std::string_view::npos) throw JobError("matrix", "unterminated row");
    rows.push_back(split_list(body.substr(i, close - i + 1), "matrix[" + std::to_string(rows.size()) + "]"));
    i = close + 1;
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i < body.size()) {
      if (body[i] != ',') throw JobError("matrix", "expected ',' between rows");
      ++i;
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    }
  }
  return rows;
}

std::int64_t parse_integer(std::string_view s, const std::string& field) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw JobError(field, "expected an integer");
  return v;
}

json text_to_document(std::string_view text) {
  json doc = json::object();
  json options = json::object();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw JobError("line " + std::to_string(lineno), "expected 'key: value'");
    const std::string key(trim(body.substr(0, colon)));
    const auto value = trim(body.substr(colon + 1));
    if (doc.contains(key) || options.contains(key)) throw JobError(key, "duplicate key");
    if (key == "characteristic")
      doc[key] = parse_integer(value, key);
    else if (key == "vars")
      doc[key] = split_list(value, key);
    else if (key == "matrix")
      doc[key] = split_matrix(value);
    else if (key == "group" || key == "command")
      doc[key] = unquote(value);
    else if (key == "jet_level" || key == "param_cap")
      options[key] = parse_integer(value, "options." + key);
    else if (key == "orbit_method")
      options[key] = unquote(value);
    else
      throw JobError(key, "unknown key");
  }
  if (!options.empty()) doc["options"] = options;
  return doc;
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw JobError(key, "missing");
  return doc.at(key);
}

GroupKind group_from_text(const std::string& g) {
  if (g == "right") return GroupKind::RightR;
  if (g == "left" || g == "contact") return GroupKind::Gl;
  if (g == "rightside") return GroupKind::Gr;
  if (g == "leftright") return GroupKind::Glr;
  throw JobError("group", "unknown group '" + g + "' (right, left, rightside, leftright, contact)");
}

std::optional<OrbitMethod> method_from_text(const std::string& s) {
  if (s == "eliminate") return OrbitMethod::Eliminate;
  if (s == "stabilizer") return OrbitMethod::Stabilizer;
  return std::nullopt;
}

Job document_to_job(const json& doc) {
  if (!doc.is_object()) throw JobError("$", "expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "characteristic" && key != "vars" && key != "matrix" && key != "group" && key != "command" &&
        key != "options")
      throw JobError(key, "unknown key");

  const json& jc = require(doc, "characteristic");
  if (!jc.is_number_integer() || jc.get<std::int64_t>() < 0)
    throw JobError("characteristic", "expected a nonnegative integer");
  const auto characteristic = jc.get<std::uint64_t>();
  if (characteristic != 0 && !is_prime(characteristic))
    throw JobError("characteristic", std::to_string(characteristic) + " is neither 0 nor a prime");
  Field field = Field::rationals();
  try {
    field = Field::from_characteristic(characteristic);
  } catch (const std::exception& e) {
    throw JobError("characteristic", e.what());
  }

  const json& jv = require(doc, "vars");
  if (!jv.is_array()) throw JobError("vars", "expected a list of names");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    if (!jv[i].is_string()) throw JobError("vars[" + std::to_string(i) + "]", "expected a string");
    vars.push_back(jv[i].get<std::string>());
  }
  RingPtr ring;
  try {
    ring = Ring::make(field, vars, Ordering::local_degree());
  } catch (const std::exception& e) {
    throw JobError("vars", e.what());
  }

  const json& jm = require(doc, "matrix");
  if (!jm.is_array() || jm.empty()) throw JobError("matrix", "expected a nonempty list of rows");
  const std::size_t rows = jm.size();
  std::size_t cols = 0;
  std::vector<Poly> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rpath = "matrix[" + std::to_string(i) + "]";
    if (!jm[i].is_array() || jm[i].empty()) throw JobError(rpath, "expected a nonempty row");
    if (i == 0) cols = jm[i].size();
    if (jm[i].size() != cols) throw JobError(rpath, "row length differs from the first row");
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string path = rpath + "[" + std::to_string(j) + "]";
      if (!jm[i][j].is_string()) throw JobError(path, "expected a polynomial string");
      try {
        entries.push_back(parse_poly(jm[i][j].get<std::string>(), ring));
      } catch (const ParseError& e) {
        throw JobError(path, e.what());
      }
    }
  }
  MatrixSeries matrix(ring, rows, cols, std::move(entries));
  if (!matrix.in_maximal_ideal()) throw JobError("matrix", "entries must have zero constant term");

  const json& jg = require(doc, "group");
  if (!jg.is_string()) throw JobError("group", "expected a string");
  const std::string group_text = jg.get<std::string>();
  const GroupKind group = group_from_text(group_text);
  if (group_text == "contact" && (rows != 1 || cols != 1)) throw JobError("group", "contact requires a 1x1 matrix");

  std::optional<Command> command;
  if (doc.contains("command")) {
    const json& jcmd = doc.at("command");
    if (!jcmd.is_string() || !(command = command_from_name(jcmd.get<std::string>())))
      throw JobError("command", "unknown command");
  }

  JobOptions options;
  if (doc.contains("options")) {
    const json& jo = doc.at("options");
    if (!jo.is_object()) throw JobError("options", "expected an object");
    for (const auto& [key, value] : jo.items()) {
      const std::string path = "options." + key;
      if (key == "jet_level" || key == "jet_level_override") {
        if (!value.is_number_integer() || value.get<std::int64_t>() < 0 || value.get<std::int64_t>() > 1000)
          throw JobError(path, "expected an integer in [0, 1000]");
        options.jet_level = value.get<int>();
      } else if (key == "param_cap") {
        if (!value.is_number_integer() || value.get<std::int64_t>() < 1) throw JobError(path, "expected a positive integer");
        options.param_cap = value.get<std::size_t>();
      } else if (key == "orbit_method") {
        if (!value.is_string() || !(options.orbit_method = method_from_text(value.get<std::string>())))
          throw JobError(path, "expected eliminate or stabilizer");
      } else {
        throw JobError(path, "unknown option");
      }
    }
  }

  return Job{characteristic, std::move(vars), group_text, command, options, ring, std::move(matrix), group};
}

json ring_echo(const Job& job) {
  json r;
  r["field"] = job.ring->field().to_string();
  r["vars"] = job.vars;
  r["ordering"] = job.ring->ordering().name();
  return r;
}

json render_all(const std::vector<Poly>& polys) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(render(f));
  return out;
}

OrbitOptions orbit_options(const Job& job, const RunOptions& opts) {
  OrbitOptions o;
  o.jet_level = opts.jet_level ? opts.jet_level : job.options.jet_level;
  if (job.options.param_cap) o.param_cap = *job.options.param_cap;
  if (auto m = opts.orbit_method ? opts.orbit_method : job.options.orbit_method) o.method = *m;
  return o;
}

// Jet level for the equation commands: explicit, else the pre-determinacy bound.
int equation_level(const Job& job, const OrbitOptions& o) {
  if (o.jet_level) return *o.jet_level;
  const auto p = predeterminacy(job.matrix, job.group);
  if (!p) throw InfiniteCodimension();
  return *p;
}

void check_cap(const Job& job, int k, std::size_t cap) {
  const auto n = group_dimension(job.group, static_cast<std::int64_t>(job.matrix.rows()),
                                 static_cast<std::int64_t>(job.matrix.cols()),
                                 static_cast<std::int64_t>(job.ring->nvars()), k);
  if (static_cast<std::size_t>(n) > cap) throw ParameterCapExceeded(static_cast<std::size_t>(n), cap);
}

void put_orbit_report(json& out, const OrbitReport& r) {
  out["method"] = std::string(method_name(r.method));
  out["p"] = r.pre_bound;
  out["k_used"] = r.k_used;
  out["t"] = r.t;
  out["dim_group"] = r.dim_group;
  out["dim_orbit"] = r.dim_orbit;
  out["dim_stab"] = r.dim_stab;
  out["c_space"] = r.c_tangent_space;
  out["c_image"] = r.c_tangent_image;
  out["difference"] = r.c_tangent_image - r.c_tangent_space;
  out["separable"] = r.separable;
  out["equation_ring"] = r.equation_ring->describe();
  out[r.method == OrbitMethod::Eliminate ? "orbit_eqs" : "stab_eqs"] = render_all(r.equations);
}

json error_object(std::string_view kind, const std::string& message) {
  json e;
  e["kind"] = kind;
  e["message"] = message;
  return e;
}

// Returns the exit code; fills report.
int dispatch(const Job& job, Command cmd, const RunOptions& opts, json& report) {
  const OrbitOptions oo = orbit_options(job, opts);
  switch (cmd) {
    case Command::TangentImage: {
      const TangentImage ti = tangent_image(job.matrix, job.group);
      const bool vec = ti.basis.rank() > 1;
      report["generators"] = render_all(ti.basis.gens());
      json leads = json::array();
      for (const auto& m : ti.basis.lead_monomials()) leads.push_back(render_monomial(*ti.basis.ring(), m, vec));
      report["leading_module"] = leads;
      return exit_code::ok;
    }
    case Command::Codim: {
      const TangentImage ti = tangent_image(job.matrix, job.group);
      const auto q = basis_codim(ti);
      if (!q) {
        report["codim"] = "infinite";
        return exit_code::ok;
      }
      report["codim"] = q->codim;
      json kb = json::array();
      for (const auto& m : q->kbasis) kb.push_back(render_monomial(*ti.basis.ring(), m, ti.basis.rank() > 1));
      report["kbasis"] = kb;
      return exit_code::ok;
    }
    case Command::Predeterm: {
      const auto p = predeterminacy(job.matrix, job.group);
      if (p)
        report["p"] = *p;
      else
        report["p"] = "infinite-codimension";
      return exit_code::ok;
    }
    case Command::Determ: {
      const DetermResult r = determinacy_bound(job.matrix, job.group);
      report["ord"] = r.order ? json(*r.order) : json(nullptr);
      report["c_image"] = r.codim ? json(*r.codim) : json("infinite");
      report["p"] = r.pre_bound ? json(*r.pre_bound) : json("infinite-codimension");
      report["d"] = r.determ_bound ? json(*r.determ_bound) : json("infinite-codimension");
      report["verdict"] = std::string(verdict_name(determinacy_verdict(r, job.matrix.cols(), job.group)));
      return exit_code::ok;
    }
    case Command::OrbitEquations: {
      const int k = equation_level(job, oo);
      check_cap(job, k, oo.param_cap);
      const OrbitEquations oe = orbit_equations(k, job.matrix, job.group);
      report["k"] = k;
      report["t"] = oe.coordinates.size();
      report["parameters"] = oe.element.presentation.param_count();
      report["equation_ring"] = oe.u_ring->describe();
      report["orbit_eqs"] = render_all(oe.equations);
      return exit_code::ok;
    }
    case Command::Stabilizer: {
      const int k = equation_level(job, oo);
      check_cap(job, k, oo.param_cap);
      const StabilizerEquations se = stabilizer_equations(k, job.matrix, job.group);
      report["k"] = k;
      report["parameters"] = se.element.presentation.param_count();
      report["equation_ring"] = se.element.presentation.param_ring(Ordering::local_degree())->describe();
      report["stab_eqs"] = render_all(se.equations);
      return exit_code::ok;
    }
    case Command::OrbitCodim:
    case Command::Separability: {
      const OrbitReport r = separability_verdict(job.matrix, job.group, oo);
      put_orbit_report(report, r);
      if (cmd == Command::Separability) report["verdict"] = r.separable ? "separable" : "not separable";
      if (opts.verify) {
        OrbitOptions other = oo;
        other.method = oo.method == OrbitMethod::Eliminate ? OrbitMethod::Stabilizer : OrbitMethod::Eliminate;
        const OrbitReport v = separability_verdict(job.matrix, job.group, other);
        report["verify_method"] = std::string(method_name(other.method));
        const bool agree = v.c_tangent_space == r.c_tangent_space && v.dim_orbit == r.dim_orbit &&
                           v.dim_stab == r.dim_stab;
        report["verified"] = agree;
        if (!agree) {
          report["error"] = error_object("VerifyMismatch", "c_space " + std::to_string(r.c_tangent_space) + " via " +
                                                               std::string(method_name(r.method)) + " but " +
                                                               std::to_string(v.c_tangent_space) + " via " +
                                                               std::string(method_name(v.method)));
          return exit_code::failure;
        }
      }
      return exit_code::ok;
    }
  }
  return exit_code::failure;
}

JobResult failure(json report, int code, std::string_view kind, const std::string& message,
                  const std::string* field = nullptr) {
  json e = error_object(kind, message);
  if (field) e["field"] = *field;
  report["error"] = e;
  return JobResult{code, std::move(report)};
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

std::optional<Command> command_from_name(std::string_view s) {
  for (const auto& [cmd, name] : kCommands)
    if (name == s) return cmd;
  return std::nullopt;
}

Job parse_job(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::parse_error& e) {
      throw JobError("$", e.what());
    }
    return document_to_job(doc);
  }
  return document_to_job(text_to_document(text));
}

std::string serialize_job(const Job& job) {
  std::ostringstream out;
  out << "characteristic: " << job.characteristic << "\n";
  out << "vars: [";
  for (std::size_t i = 0; i < job.vars.size(); ++i) out << (i ? ", " : "") << job.vars[i];
  out << "]\nmatrix: [";
  for (std::size_t i = 0; i < job.matrix.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < job.matrix.cols(); ++j) out << (j ? ", " : "") << render(job.matrix.at(i, j));
    out << "]";
  }
  out << "]\ngroup: " << job.group_text << "\n";
  if (job.command) out << "command: " << command_name(*job.command) << "\n";
  if (job.options.jet_level) out << "jet_level: " << *job.options.jet_level << "\n";
  if (job.options.orbit_method) out << "orbit_method: " << method_name(*job.options.orbit_method) << "\n";
  if (job.options.param_cap) out << "param_cap: " << *job.options.param_cap << "\n";
  return out.str();
}

json job_to_json(const Job& job) {
  json doc;
  doc["characteristic"] = job.characteristic;
  doc["vars"] = job.vars;
  json rows = json::array();
  for (std::size_t i = 0; i < job.matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < job.matrix.cols(); ++j) row.push_back(render(job.matrix.at(i, j)));
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  doc["group"] = job.group_text;
  if (job.command) doc["command"] = std::string(command_name(*job.command));
  json o = json::object();
  if (job.options.jet_level) o["jet_level"] = *job.options.jet_level;
  if (job.options.orbit_method) o["orbit_method"] = std::string(method_name(*job.options.orbit_method));
  if (job.options.param_cap) o["param_cap"] = *job.options.param_cap;
  if (!o.empty()) doc["options"] = o;
  return doc;
}

JobResult run_job(const Job& job, const RunOptions& opts) {
  json report;
  const auto cmd = opts.command ? opts.command : job.command;
  if (!cmd) {
    const std::string field = "command";
    return failure(std::move(report), exit_code::invalid, "JobError", "no command given", &field);
  }
  report["command"] = std::string(command_name(*cmd));
  report["ring"] = ring_echo(job);
  report["group"] = group_name(job.group);
  report["size"] = std::to_string(job.matrix.rows()) + "x" + std::to_string(job.matrix.cols());
  try {
    const int code = dispatch(job, *cmd, opts, report);
    return JobResult{code, std::move(report)};
  } catch (const JobError& e) {
    return failure(std::move(report), exit_code::invalid, "JobError", e.what(), &e.field());
  } catch (const ParameterCapExceeded& e) {
    return failure(std::move(report), exit_code::invalid, "ParameterCapExceeded", e.what());
  } catch (const InfiniteCodimension& e) {
    return failure(std::move(report), exit_code::infinite, "InfiniteCodimension", e.what());
  } catch (const std::invalid_argument& e) {
    return failure(std::move(report), exit_code::invalid, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return failure(std::move(report), exit_code::failure, "InternalError", e.what());
  }
}

JobResult run_job_text(std::string_view text, const RunOptions& opts) {
  try {
    return run_job(parse_job(text), opts);
  } catch (const JobError& e) {
    return failure(json::object(), exit_code::invalid, "JobError", e.what(), &e.field());
  }
}

namespace {

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(std::ostringstream& out, const json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      emit(out, value, indent + 2);
    } else if (value.is_array()) {
      out << pad << key << ":" << (value.empty() ? " []" : "") << "\n";
      for (const auto& item : value) out << pad << "  - " << scalar_text(item) << "\n";
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string format_text(const json& report) {
  std::ostringstream out;
  emit(out, report, 0);
  return out.str();
}

std::string format_structured(const json& report) { return report.dump(2) + "\n"; }

}  // namespace dkit
