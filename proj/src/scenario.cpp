#include "mixgrover/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mixgrover/errors.hpp"
#include "mixgrover/tolerances.hpp"
#include "text_format.hpp"

namespace mixgrover {

namespace {

using nlohmann::json;

constexpr int kMaxQubits = 24;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw DomainError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get_as(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError("field '" + std::string(key) + "' in " + where + " has the wrong type");
  }
}

StateRef parse_state_ref(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::vector<Amp> amps;
    for (const auto& e : v) {
      if (!e.is_string()) throw DomainError("inline state in " + where + " must be a list of \"re,im\" strings");
      amps.push_back(text::parse_amp(e.get<std::string>()));
    }
    return amps;
  }
  throw DomainError("state reference in " + where + " must be a name or an amplitude list");
}

json dump_state_ref(const StateRef& ref) {
  if (const auto* name = std::get_if<std::string>(&ref)) return *name;
  json arr = json::array();
  for (const auto& a : std::get<std::vector<Amp>>(ref)) arr.push_back(text::format_amp(a));
  return arr;
}

std::string resolve_path(const std::string& path, const std::string& base_dir) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return std::filesystem::absolute(std::filesystem::path(base_dir) / p).lexically_normal().string();
}

std::uint64_t parse_label(const std::string& text, const std::string& what) {
  const double v = text::parse_double(text, what);
  if (v < 0 || v != std::floor(v)) throw DomainError(what + " must be a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

int integral(double v, const char* what) {
  if (v != std::floor(v) || std::abs(v) > 1e6) {
    throw DomainError(std::string(what) + " must be an integer, got " + text::format_double(v));
  }
  return static_cast<int>(v);
}

Unitary build_unitary(const ScenarioConfig& c) {
  const auto& u = c.iterate.unitary;
  if (u == "hadamard") return Unitary::hadamard(c.n);
  if (u == "identity") return Unitary::identity(c.n);
  if (u == "random") {
    if (c.n > kTol.max_dense_qubits) throw DomainError("random unitaries are limited to 10 qubits");
    return Unitary::dense(random_unitary(std::size_t{1} << c.n, c.seed));
  }
  if (u.rfind("file:", 0) == 0) {
    const std::string path = u.substr(5);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open unitary file '" + path + "'");
    DenseOperator op = read_unitary(in);
    if (op.dim() != (std::size_t{1} << c.n)) throw DomainError("unitary file dimension does not match n");
    return Unitary::dense(std::move(op));
  }
  throw DomainError("unknown unitary '" + u + "'");
}

IterateSpec build_iterate(const ScenarioConfig& c) {
  const auto marked = c.marked_labels();
  if (c.iterate.kind == "original") return original_iterate(c.n, marked);
  if (c.iterate.kind != "generalized") throw DomainError("unknown iterate kind '" + c.iterate.kind + "'");
  std::vector<ReflectionAxis> axes;
  if (c.iterate.axes.empty()) {
    axes.push_back({resolve_state(c.iterate.s, c.n, marked), c.iterate.beta * M_PI});
  } else {
    for (const auto& a : c.iterate.axes) axes.push_back({resolve_state(a.s, c.n, marked), a.beta * M_PI});
  }
  return IterateSpec(build_unitary(c), std::move(axes), marked, c.iterate.gamma * M_PI, -1.0);
}

Ensemble build_initial(const ScenarioConfig& c) {
  const auto& init = c.initial;
  const auto marked = c.marked_labels();
  if (init.kind == "pure_uniform") return Ensemble::pure(hadamard_all(basis_state(0, c.n)));
  if (init.kind == "basis") return Ensemble::pure(basis_state(init.label, c.n));
  if (init.kind == "pure") return Ensemble::pure(resolve_state(init.state, c.n, marked));
  if (init.kind == "pseudo_pure") return pseudo_pure({c.n, init.epsilon, resolve_state(init.base, c.n, marked)});
  if (init.kind == "m_mix") return m_mix({c.n, init.m});
  if (init.kind == "ensemble_file") {
    std::ifstream in(init.path);
    if (!in) throw DomainError("cannot open ensemble file '" + init.path + "'");
    Ensemble e = read_ensemble(in);
    if (e.num_qubits() != c.n) throw DomainError("ensemble file qubit count does not match n");
    return e;
  }
  throw DomainError("unknown initial kind '" + init.kind + "'");
}

ScenarioConfig parse_scenario_json(const json& doc, const std::string& base_dir) {
  if (!doc.is_object()) throw DomainError("scenario document must be a JSON object");
  reject_unknown(doc, {"n", "marked", "iterate", "initial", "horizon", "seed", "sweep"}, "scenario");
  ScenarioConfig c;
  if (doc.contains("n")) c.n = get_as<int>(doc, "n", "scenario");
  if (doc.contains("marked") && !doc["marked"].is_null()) {
    c.marked = get_as<std::vector<std::uint64_t>>(doc, "marked", "scenario");
  }
  if (doc.contains("horizon") && !doc["horizon"].is_null()) c.horizon = get_as<std::int64_t>(doc, "horizon", "scenario");
  if (doc.contains("seed")) c.seed = get_as<std::uint64_t>(doc, "seed", "scenario");

  if (doc.contains("iterate")) {
    const auto& it = doc["iterate"];
    if (!it.is_object()) throw DomainError("'iterate' must be an object");
    reject_unknown(it, {"kind", "unitary", "s", "beta", "gamma", "axes"}, "iterate");
    if (it.contains("kind")) c.iterate.kind = get_as<std::string>(it, "kind", "iterate");
    if (it.contains("unitary")) {
      c.iterate.unitary = get_as<std::string>(it, "unitary", "iterate");
      if (c.iterate.unitary.rfind("file:", 0) == 0) {
        c.iterate.unitary = "file:" + resolve_path(c.iterate.unitary.substr(5), base_dir);
      }
    }
    if (it.contains("s")) c.iterate.s = parse_state_ref(it["s"], "iterate.s");
    if (it.contains("beta")) c.iterate.beta = get_as<double>(it, "beta", "iterate");
    if (it.contains("gamma")) c.iterate.gamma = get_as<double>(it, "gamma", "iterate");
    if (it.contains("axes")) {
      if (!it["axes"].is_array()) throw DomainError("'iterate.axes' must be an array");
      for (const auto& a : it["axes"]) {
        if (!a.is_object()) throw DomainError("each axis must be an object");
        reject_unknown(a, {"s", "beta"}, "iterate.axes");
        AxisConfig ax;
        if (a.contains("s")) ax.s = parse_state_ref(a["s"], "iterate.axes.s");
        if (a.contains("beta")) ax.beta = get_as<double>(a, "beta", "iterate.axes");
        c.iterate.axes.push_back(std::move(ax));
      }
    }
  }
  if (doc.contains("initial")) {
    const auto& in = doc["initial"];
    if (!in.is_object()) throw DomainError("'initial' must be an object");
    reject_unknown(in, {"kind", "label", "state", "epsilon", "base", "m", "path"}, "initial");
    if (in.contains("kind")) c.initial.kind = get_as<std::string>(in, "kind", "initial");
    if (in.contains("label")) c.initial.label = get_as<std::uint64_t>(in, "label", "initial");
    if (in.contains("state")) c.initial.state = parse_state_ref(in["state"], "initial.state");
    if (in.contains("epsilon")) c.initial.epsilon = get_as<double>(in, "epsilon", "initial");
    if (in.contains("base")) c.initial.base = parse_state_ref(in["base"], "initial.base");
    if (in.contains("m")) c.initial.m = get_as<int>(in, "m", "initial");
    if (in.contains("path")) c.initial.path = resolve_path(get_as<std::string>(in, "path", "initial"), base_dir);
  }
  return c;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed scenario JSON: ") + e.what());
  }
}

}  // namespace

std::vector<std::uint64_t> ScenarioConfig::marked_labels() const {
  if (marked) return *marked;
  if (n < 1 || n > kMaxQubits) throw DomainError("n must lie in [1, " + std::to_string(kMaxQubits) + "]");
  return {(std::uint64_t{1} << n) - 1};
}

std::int64_t ScenarioConfig::effective_horizon() const {
  if (horizon) return *horizon;
  const double dim = std::ldexp(1.0, n);
  return 4 * static_cast<std::int64_t>(std::ceil(M_PI * std::sqrt(dim) / 4.0));
}

ScenarioConfig parse_scenario(const std::string& json_text, const std::string& base_dir) {
  return parse_scenario_json(parse_json(json_text), base_dir);
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), std::filesystem::path(path).parent_path().string());
}

std::string dump_scenario(const ScenarioConfig& c) {
  json doc;
  doc["n"] = c.n;
  if (c.marked) doc["marked"] = *c.marked;
  if (c.horizon) doc["horizon"] = *c.horizon;
  doc["seed"] = c.seed;
  json it;
  it["kind"] = c.iterate.kind;
  it["unitary"] = c.iterate.unitary;
  it["s"] = dump_state_ref(c.iterate.s);
  it["beta"] = c.iterate.beta;
  it["gamma"] = c.iterate.gamma;
  if (!c.iterate.axes.empty()) {
    json axes = json::array();
    for (const auto& a : c.iterate.axes) axes.push_back({{"s", dump_state_ref(a.s)}, {"beta", a.beta}});
    it["axes"] = axes;
  }
  doc["iterate"] = it;
  json in;
  in["kind"] = c.initial.kind;
  in["label"] = c.initial.label;
  in["state"] = dump_state_ref(c.initial.state);
  in["epsilon"] = c.initial.epsilon;
  in["base"] = dump_state_ref(c.initial.base);
  in["m"] = c.initial.m;
  in["path"] = c.initial.path;
  doc["initial"] = in;
  return doc.dump(2) + "\n";
}

std::optional<SweepSpec> parse_sweep(const std::string& json_text, const ScenarioConfig& base) {
  const json doc = parse_json(json_text);
  if (!doc.is_object() || !doc.contains("sweep")) return std::nullopt;
  const auto& sw = doc["sweep"];
  if (!sw.is_object()) throw DomainError("'sweep' must be an object");
  reject_unknown(sw, {"axis", "values", "grid"}, "sweep");
  SweepSpec spec;
  spec.base = base;
  if (sw.contains("axis")) spec.axis = get_as<std::string>(sw, "axis", "sweep");
  if (sw.contains("values")) spec.values = get_as<std::vector<double>>(sw, "values", "sweep");
  if (sw.contains("grid")) {
    const auto& g = sw["grid"];
    reject_unknown(g, {"start", "stop", "count"}, "sweep.grid");
    spec.values = linear_grid(get_as<double>(g, "start", "sweep.grid"), get_as<double>(g, "stop", "sweep.grid"),
                              get_as<int>(g, "count", "sweep.grid"));
  }
  return spec;
}

StateVector resolve_state(const StateRef& ref, int num_qubits, const std::vector<std::uint64_t>& marked) {
  if (const auto* amps = std::get_if<std::vector<Amp>>(&ref)) {
    return StateVector(num_qubits, *amps).normalized();
  }
  const auto& name = std::get<std::string>(ref);
  if (name == "zero") return basis_state(0, num_qubits);
  if (name == "uniform") return hadamard_all(basis_state(0, num_qubits));
  if (name == "marked") {
    if (marked.empty()) throw DomainError("state 'marked' needs a nonempty marked set");
    return basis_state(marked.front(), num_qubits);
  }
  if (name.rfind("basis:", 0) == 0) return basis_state(parse_label(name.substr(6), "basis label"), num_qubits);
  if (name.rfind("hadamard:", 0) == 0) {
    return hadamard_all(basis_state(parse_label(name.substr(9), "basis label"), num_qubits));
  }
  throw DomainError("unknown state reference '" + name + "'");
}

Scenario build_scenario(const ScenarioConfig& config) {
  if (config.n < 1 || config.n > kMaxQubits) {
    throw DomainError("n must lie in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(config.n));
  }
  const std::int64_t horizon = config.effective_horizon();
  if (horizon < 0 || horizon > kTol.max_horizon) {
    throw DomainError("horizon must lie in [0, " + std::to_string(kTol.max_horizon) + "]");
  }
  return Scenario{config, build_iterate(config), build_initial(config), horizon};
}

std::string describe_initial(const ScenarioConfig& c) {
  const auto ref_name = [](const StateRef& r) {
    if (const auto* s = std::get_if<std::string>(&r)) return *s;
    return std::string("inline");
  };
  const auto& in = c.initial;
  const std::string n = "n=" + std::to_string(c.n);
  if (in.kind == "basis") return "basis(" + n + ",label=" + std::to_string(in.label) + ")";
  if (in.kind == "pure") return "pure(" + n + ",state=" + ref_name(in.state) + ")";
  if (in.kind == "pseudo_pure") {
    return "pseudo_pure(" + n + ",epsilon=" + text::format_double(in.epsilon) + ",base=" + ref_name(in.base) + ")";
  }
  if (in.kind == "m_mix") return "m_mix(" + n + ",m=" + std::to_string(in.m) + ")";
  if (in.kind == "ensemble_file") return "ensemble_file(" + in.path + ")";
  return in.kind + "(" + n + ")";
}

std::vector<double> linear_grid(double start, double stop, int count) {
  if (count < 1) throw DomainError("grid count must be at least 1");
  if (count == 1) return {start};
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = start + (stop - start) * static_cast<double>(i) / (count - 1);
  v.back() = stop;
  return v;
}

void validate_sweep(const SweepSpec& sweep) {
  static const char* kAxes[] = {"epsilon", "m", "n", "beta", "gamma"};
  bool known = false;
  for (const char* a : kAxes) known = known || sweep.axis == a;
  if (!known) throw DomainError("sweep axis must be one of epsilon, m, n, beta, gamma (got '" + sweep.axis + "')");
  if (sweep.values.empty()) throw DomainError("sweep has no values");
}

ScenarioConfig instantiate(const SweepSpec& sweep, double value) {
  ScenarioConfig c = sweep.base;
  if (sweep.axis == "epsilon") {
    c.initial.kind = "pseudo_pure";
    c.initial.epsilon = value;
  } else if (sweep.axis == "m") {
    c.initial.kind = "m_mix";
    c.initial.m = integral(value, "m");
  } else if (sweep.axis == "n") {
    c.n = integral(value, "n");
  } else if (sweep.axis == "beta") {
    c.iterate.kind = "generalized";
    c.iterate.beta = value;
  } else if (sweep.axis == "gamma") {
    c.iterate.kind = "generalized";
    c.iterate.gamma = value;
  } else {
    throw DomainError("unknown sweep axis '" + sweep.axis + "'");
  }
  return c;
}

}  // namespace mixgrover
