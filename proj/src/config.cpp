#include "rsit/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rsit/constants.hpp"
#include "rsit/errors.hpp"

namespace rsit {

using json = nlohmann::ordered_json;
namespace cst = constants;

namespace {

struct Dimension {
  const char* bare;  // unit assumed for plain numbers
  const char* si;    // unit used in the resolved echo
  std::map<std::string, double> units;
};

const std::map<std::string, Dimension>& dimensions() {
  static const double two_pi = 2.0 * cst::pi;
  static const std::map<std::string, Dimension> dims = {
      {"time", {"ns", "s", {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12},
                            {"fs", 1e-15}}}},
      {"length", {"um", "m", {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6},
                              {"nm", 1e-9}}}},
      {"wavelength", {"nm", "m", {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6},
                                  {"nm", 1e-9}}}},
      {"density", {"cm^-3", "m^-3", {{"m^-3", 1.0}, {"cm^-3", 1e6}}}},
      {"temperature", {"K", "K", {{"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6}, {"nK", 1e-9}}}},
      {"frequency", {"GHz", "rad/s", {{"rad/s", 1.0}, {"Hz", two_pi}, {"kHz", two_pi * 1e3},
                                      {"MHz", two_pi * 1e6}, {"GHz", two_pi * 1e9}}}},
      {"c6", {"GHzum^6", "rad/sm^6", {{"rad/sm^6", 1.0}, {"Hzm^6", two_pi},
                                      {"MHzum^6", two_pi * 1e6 * 1e-36},
                                      {"GHzum^6", two_pi * 1e9 * 1e-36}}}},
      {"dipole", {"ea0", "Cm", {{"Cm", 1.0}, {"ea0", cst::ea0}}}},
      {"mass", {"u", "kg", {{"kg", 1.0}, {"u", cst::amu}}}},
      {"area", {"rad", "rad", {{"rad", 1.0}, {"pi", cst::pi}}}},
  };
  return dims;
}

std::string normalize_unit(std::string u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(u[i]);
    if (c == ' ' || c == '*' || c == '\t') continue;
    // U+00B5 micro sign and U+03BC Greek mu.
    if ((c == 0xC2 && i + 1 < u.size() && static_cast<unsigned char>(u[i + 1]) == 0xB5) ||
        (c == 0xCE && i + 1 < u.size() && static_cast<unsigned char>(u[i + 1]) == 0xBC)) {
      out += 'u';
      ++i;
      continue;
    }
    // U+00B7 middle dot.
    if (c == 0xC2 && i + 1 < u.size() && static_cast<unsigned char>(u[i + 1]) == 0xB7) {
      ++i;
      continue;
    }
    out += static_cast<char>(c);
  }
  return out;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string quantity(double x, const std::string& dim) {
  const auto& d = dimensions().at(dim);
  std::string unit = d.si;
  if (unit == "rad/sm^6") unit = "rad/s m^6";
  if (unit == "Cm") unit = "C m";
  return fmt(x) + " " + unit;
}

/// One JSON object being consumed; keys are ticked off so leftovers can be
/// reported as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : path_(std::move(path)) {
    if (!j.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    obj_ = &j;
  }

  std::string key_path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = obj_->find(key);
    return it == obj_->end() ? nullptr : &*it;
  }

  bool has(const std::string& key) const { return obj_->contains(key); }

  void quantity(const std::string& key, const std::string& dim, double& out) {
    if (auto* v = find(key)) out = parse_quantity(*v, dim, key_path(key));
  }

  void integer(const std::string& key, int& out) {
    if (auto* v = find(key)) {
      if (!v->is_number_integer()) throw ConfigError(key_path(key), "expected an integer");
      out = v->get<int>();
    }
  }

  void number(const std::string& key, double& out) {
    if (auto* v = find(key)) {
      if (!v->is_number()) throw ConfigError(key_path(key), "expected a number");
      out = v->get<double>();
    }
  }

  void boolean(const std::string& key, bool& out) {
    if (auto* v = find(key)) {
      if (!v->is_boolean()) throw ConfigError(key_path(key), "expected true or false");
      out = v->get<bool>();
    }
  }

  void string(const std::string& key, std::string& out) {
    if (auto* v = find(key)) {
      if (!v->is_string()) throw ConfigError(key_path(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  void finish() const {
    for (auto it = obj_->begin(); it != obj_->end(); ++it)
      if (!seen_.count(it.key())) throw ConfigError(key_path(it.key()), "unknown key");
  }

 private:
  const json* obj_ = nullptr;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw ConfigError(path, what);
}

void parse_range(const json& j, const std::string& path, const std::string& dim,
                 RangeSection& r) {
  Section s(j, path);
  s.quantity("min", dim, r.min);
  s.quantity("max", dim, r.max);
  s.integer("count", r.count);
  s.boolean("log", r.log);
  s.finish();
  require(r.count >= 1, path + ".count", "must be >= 1");
  require(r.max >= r.min, path + ".max", "must be >= min");
  if (r.log) require(r.min > 0.0, path + ".min", "must be positive for a log range");
}

json range_json(const RangeSection& r, const std::string& dim) {
  json j;
  j["min"] = quantity(r.min, dim);
  j["max"] = quantity(r.max, dim);
  j["count"] = r.count;
  j["log"] = r.log;
  return j;
}

template <typename Table>
void parse_table(const json& j, const std::string& path, const std::string& dim, Table& table) {
  if (!j.is_object()) throw ConfigError(path, "expected an object keyed by n");
  table.clear();
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string kp = path + "." + it.key();
    int n = 0;
    try {
      std::size_t pos = 0;
      n = std::stoi(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ConfigError(kp, "table keys must be principal quantum numbers");
    }
    require(n >= kMinPrincipalQuantumNumber, kp, "n below validity floor");
    table[n] = parse_quantity(it.value(), dim, kp);
  }
}

void parse_species(const json& j, SpeciesConstants& sp) {
  if (j.is_string()) {
    if (j.get<std::string>() != "Cs") throw ConfigError("species", "only the Cs preset is built in");
    sp = cesium();
    return;
  }
  Section s(j, "species");
  std::string name = "Cs";
  s.string("name", name);
  sp = cesium();
  sp.name = name;
  if (name != "Cs") {
    sp.lifetime_table.clear();
    for (const char* key : {"mass", "scattering_length", "quantum_defect_P", "wavelength",
                            "c6_ref", "dipole_ref", "lifetime_ref"})
      require(s.has(key), std::string("species.") + key,
              "missing required key for species '" + name + "'");
  }
  s.quantity("mass", "mass", sp.mass);
  s.number("scattering_length", sp.scattering_length);
  s.number("quantum_defect_P", sp.quantum_defect_P);
  s.quantity("wavelength", "wavelength", sp.wavelength);
  s.integer("n_ref", sp.n_ref);
  s.quantity("c6_ref", "c6", sp.c6_ref);
  s.quantity("dipole_ref", "dipole", sp.dipole_ref);
  s.quantity("lifetime_ref", "time", sp.lifetime_ref);
  if (auto* t = s.find("dipole_table")) parse_table(*t, "species.dipole_table", "dipole", sp.dipole_table);
  if (auto* t = s.find("lifetime_table")) parse_table(*t, "species.lifetime_table", "time", sp.lifetime_table);
  s.finish();
  require(sp.mass > 0.0, "species.mass", "must be positive");
  require(sp.wavelength > 0.0, "species.wavelength", "must be positive");
  require(sp.quantum_defect_P >= 0.0 && sp.quantum_defect_P < 5.0, "species.quantum_defect_P",
          "must lie in [0, 5)");
  require(sp.n_ref >= kMinPrincipalQuantumNumber, "species.n_ref", "n below validity floor");
  require(sp.dipole_ref > 0.0, "species.dipole_ref", "must be positive");
  require(sp.lifetime_ref > 0.0, "species.lifetime_ref", "must be positive");
}

}  // namespace

std::vector<double> RangeSection::values() const {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    v[i] = log ? std::exp(std::log(min) + f * (std::log(max) - std::log(min)))
               : min + f * (max - min);
  }
  if (count > 1) v.back() = max;
  return v;
}

double parse_quantity(const json& v, const std::string& dim, const std::string& path) {
  const auto dit = dimensions().find(dim);
  if (dit == dimensions().end()) throw std::logic_error("unknown dimension " + dim);
  const Dimension& d = dit->second;
  if (v.is_number()) return v.get<double>() * d.units.at(d.bare);
  if (!v.is_string()) throw ConfigError(path, "expected a number or a \"<value> <unit>\" string");
  const std::string s = v.get<std::string>();
  double x = 0.0;
  std::size_t pos = 0;
  try {
    x = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError(path, "cannot read a number from '" + s + "'");
  }
  const std::string unit = normalize_unit(s.substr(pos));
  if (unit.empty()) return x * d.units.at(d.bare);
  const auto uit = d.units.find(unit);
  if (uit == d.units.end()) {
    std::string allowed;
    for (const auto& [k, f] : d.units) allowed += (allowed.empty() ? "" : ", ") + k;
    throw ConfigError(path, "unit '" + s.substr(pos) + "' is not a " + dim + " unit (allowed: " +
                                allowed + ")");
  }
  return x * uit->second;
}

RunConfig parse_config(const json& j) {
  RunConfig c;
  Section root(j, "");
  if (auto* v = root.find("species")) parse_species(*v, c.species);

  if (auto* v = root.find("gas")) {
    Section s(*v, "gas");
    s.integer("n", c.gas.n);
    s.quantity("temperature", "temperature", c.gas.temperature);
    s.quantity("density", "density", c.gas.density);
    s.quantity("length", "length", c.gas.length);
    s.finish();
  }
  require(c.gas.n >= kMinPrincipalQuantumNumber, "gas.n", "n below validity floor (10)");
  require(c.gas.temperature >= 0.0, "gas.temperature", "must be >= 0");
  require(c.gas.density >= 0.0, "gas.density", "must be >= 0");
  require(c.gas.length > 0.0, "gas.length", "must be positive");

  double area = 0.35 * cst::pi;
  bool have_omega = false;
  bool t0_given = false;
  if (auto* v = root.find("pulse")) {
    Section s(*v, "pulse");
    std::string shape = "sech";
    s.string("shape", shape);
    try {
      c.pulse.shape = pulse_shape_from_string(shape);
    } catch (const std::exception& e) {
      throw ConfigError("pulse.shape", "expected \"sech\" or \"gaussian\"");
    }
    s.quantity("tau", "time", c.pulse.tau);
    t0_given = s.has("t0");
    s.quantity("t0", "time", c.pulse.t0);
    have_omega = s.has("omega_s");
    require(!(have_omega && s.has("area")), "pulse.area", "give either omega_s or area, not both");
    s.quantity("omega_s", "frequency", c.pulse.omega_s);
    s.quantity("area", "area", area);
    s.finish();
  }
  require(c.pulse.tau > 0.0, "pulse.tau", "duration must be positive");
  if (!t0_given) c.pulse.t0 = 5.0 * c.pulse.tau;
  if (!have_omega) {
    require(area >= 0.0, "pulse.area", "must be >= 0");
    c.pulse.omega_s = amplitude_for_area(c.pulse.shape, area, c.pulse.tau);
  }
  require(c.pulse.omega_s >= 0.0, "pulse.omega_s", "must be >= 0");
  require(std::isfinite(c.pulse.t0), "pulse.t0", "must be finite");

  if (auto* v = root.find("numerics")) {
    Section s(*v, "numerics");
    s.integer("n_z", c.numerics.n_z);
    s.integer("n_v", c.numerics.n_v);
    s.quantity("dt", "time", c.numerics.dt);
    s.quantity("dt_out", "time", c.numerics.dt_out);
    s.integer("n_xi", c.numerics.n_xi);
    s.finish();
  }
  require(c.numerics.n_z >= 4, "numerics.n_z", "must be >= 4");
  require(c.numerics.n_v >= 1, "numerics.n_v", "must be >= 1");
  require(c.numerics.dt >= 0.0, "numerics.dt", "duration must be positive");
  require(c.numerics.dt_out >= 0.0, "numerics.dt_out", "duration must be positive");
  require(c.numerics.n_xi >= 0, "numerics.n_xi", "must be >= 0");
  c.numerics.dt = c.numerics.resolved_dt(c.pulse);
  c.numerics.dt_out = c.numerics.resolved_dt_out(c.pulse);
  if (c.numerics.n_xi == 0) c.numerics.n_xi = c.numerics.n_z;

  if (auto* v = root.find("run")) {
    Section s(*v, "run");
    std::string level = std::string(to_string(c.run.level));
    s.string("level", level);
    try {
      c.run.level = level_from_string(level);
    } catch (const std::exception&) {
      throw ConfigError("run.level", "expected \"mean_field\" or \"two_body\"");
    }
    s.string("out_dir", c.run.out_dir);
    s.integer("workers", c.run.workers);
    s.boolean("spontaneous_decay", c.run.spontaneous_decay);
    s.boolean("dump_field", c.run.dump_field);
    s.finish();
    require(c.run.workers >= 0, "run.workers", "must be >= 0");
  }

  if (auto* v = root.find("scan")) {
    Section s(*v, "scan");
    s.integer("points", c.scan.points);
    s.quantity("theta_min", "area", c.scan.theta_min);
    s.quantity("theta_max", "area", c.scan.theta_max);
    s.integer("refine", c.scan.refine);
    s.number("plateau_tol", c.scan.plateau_tol);
    s.finish();
    require(c.scan.points >= 3, "scan.points", "must be >= 3");
    require(c.scan.theta_min >= 0.0, "scan.theta_min", "must be >= 0");
    require(c.scan.theta_max > c.scan.theta_min, "scan.theta_max", "must exceed theta_min");
    require(c.scan.refine >= 0, "scan.refine", "must be >= 0");
  }

  if (auto* v = root.find("regime")) {
    Section s(*v, "regime");
    if (auto* r = s.find("density")) parse_range(*r, "regime.density", "density", c.regime.density);
    if (auto* r = s.find("temperature"))
      parse_range(*r, "regime.temperature", "temperature", c.regime.temperature);
    s.finish();
  }

  if (auto* v = root.find("cross_section")) {
    Section s(*v, "cross_section");
    s.integer("n_min", c.cross_section.n_min);
    s.integer("n_max", c.cross_section.n_max);
    if (auto* t = s.find("temperatures")) {
      if (!t->is_array()) throw ConfigError("cross_section.temperatures", "expected an array");
      c.cross_section.temperatures.clear();
      for (std::size_t i = 0; i < t->size(); ++i) {
        const std::string p = "cross_section.temperatures[" + std::to_string(i) + "]";
        const double T = parse_quantity((*t)[i], "temperature", p);
        require(T > 0.0, p, "must be positive");
        c.cross_section.temperatures.push_back(T);
      }
    }
    s.finish();
    require(c.cross_section.n_min >= kMinPrincipalQuantumNumber, "cross_section.n_min",
            "n below validity floor (10)");
    require(c.cross_section.n_max >= c.cross_section.n_min, "cross_section.n_max",
            "must be >= n_min");
  }

  if (auto* v = root.find("steady")) {
    Section s(*v, "steady");
    s.quantity("omega", "frequency", c.steady.omega);
    s.quantity("gate_separation", "length", c.steady.gate_separation);
    s.quantity("gate_c6", "c6", c.steady.gate_c6);
    if (auto* r = s.find("temperature"))
      parse_range(*r, "steady.temperature", "temperature", c.steady.temperature);
    s.integer("n_v", c.steady.n_v);
    s.finish();
    require(c.steady.gate_separation > 0.0, "steady.gate_separation", "must be positive");
    require(c.steady.n_v >= 1, "steady.n_v", "must be >= 1");
    require(c.steady.temperature.min > 0.0, "steady.temperature.min", "must be positive");
  }
  root.finish();
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  json j;
  const auto& sp = c.species;
  json s;
  s["name"] = sp.name;
  s["mass"] = quantity(sp.mass, "mass");
  s["scattering_length"] = sp.scattering_length;
  s["quantum_defect_P"] = sp.quantum_defect_P;
  s["wavelength"] = quantity(sp.wavelength, "wavelength");
  s["n_ref"] = sp.n_ref;
  s["c6_ref"] = quantity(sp.c6_ref, "c6");
  s["dipole_ref"] = quantity(sp.dipole_ref, "dipole");
  s["lifetime_ref"] = quantity(sp.lifetime_ref, "time");
  s["dipole_table"] = json::object();
  for (const auto& [n, d] : sp.dipole_table) s["dipole_table"][std::to_string(n)] = quantity(d, "dipole");
  s["lifetime_table"] = json::object();
  for (const auto& [n, t] : sp.lifetime_table) s["lifetime_table"][std::to_string(n)] = quantity(t, "time");
  j["species"] = s;

  j["gas"] = {{"n", c.gas.n},
              {"temperature", quantity(c.gas.temperature, "temperature")},
              {"density", quantity(c.gas.density, "density")},
              {"length", quantity(c.gas.length, "length")}};
  j["pulse"] = {{"shape", std::string(to_string(c.pulse.shape))},
                {"omega_s", quantity(c.pulse.omega_s, "frequency")},
                {"tau", quantity(c.pulse.tau, "time")},
                {"t0", quantity(c.pulse.t0, "time")}};
  j["numerics"] = {{"n_z", c.numerics.n_z},
                   {"n_v", c.numerics.n_v},
                   {"dt", quantity(c.numerics.dt, "time")},
                   {"dt_out", quantity(c.numerics.dt_out, "time")},
                   {"n_xi", c.numerics.n_xi}};
  j["run"] = {{"level", std::string(to_string(c.run.level))},
              {"out_dir", c.run.out_dir},
              {"workers", c.run.workers},
              {"spontaneous_decay", c.run.spontaneous_decay},
              {"dump_field", c.run.dump_field}};
  j["scan"] = {{"points", c.scan.points},
               {"theta_min", quantity(c.scan.theta_min, "area")},
               {"theta_max", quantity(c.scan.theta_max, "area")},
               {"refine", c.scan.refine},
               {"plateau_tol", c.scan.plateau_tol}};
  j["regime"] = {{"density", range_json(c.regime.density, "density")},
                 {"temperature", range_json(c.regime.temperature, "temperature")}};
  json temps = json::array();
  for (double T : c.cross_section.temperatures) temps.push_back(quantity(T, "temperature"));
  j["cross_section"] = {{"n_min", c.cross_section.n_min},
                        {"n_max", c.cross_section.n_max},
                        {"temperatures", temps}};
  j["steady"] = {{"omega", quantity(c.steady.omega, "frequency")},
                 {"gate_separation", quantity(c.steady.gate_separation, "length")},
                 {"gate_c6", quantity(c.steady.gate_c6, "c6")},
                 {"temperature", range_json(c.steady.temperature, "temperature")},
                 {"n_v", c.steady.n_v}};
  return j;
}

namespace {
bool same(const RangeSection& a, const RangeSection& b) {
  return a.min == b.min && a.max == b.max && a.count == b.count && a.log == b.log;
}
}  // namespace

bool operator==(const RunConfig& a, const RunConfig& b) {
  const auto& s = a.species;
  const auto& t = b.species;
  return s.name == t.name && s.mass == t.mass && s.scattering_length == t.scattering_length &&
         s.quantum_defect_P == t.quantum_defect_P && s.wavelength == t.wavelength &&
         s.n_ref == t.n_ref && s.c6_ref == t.c6_ref && s.dipole_ref == t.dipole_ref &&
         s.lifetime_ref == t.lifetime_ref && s.dipole_table == t.dipole_table &&
         s.lifetime_table == t.lifetime_table && a.gas.n == b.gas.n &&
         a.gas.temperature == b.gas.temperature && a.gas.density == b.gas.density &&
         a.gas.length == b.gas.length && a.pulse.shape == b.pulse.shape &&
         a.pulse.omega_s == b.pulse.omega_s && a.pulse.tau == b.pulse.tau &&
         a.pulse.t0 == b.pulse.t0 && a.numerics.n_z == b.numerics.n_z &&
         a.numerics.n_v == b.numerics.n_v && a.numerics.dt == b.numerics.dt &&
         a.numerics.dt_out == b.numerics.dt_out && a.numerics.n_xi == b.numerics.n_xi &&
         a.run.level == b.run.level && a.run.out_dir == b.run.out_dir &&
         a.run.workers == b.run.workers && a.run.spontaneous_decay == b.run.spontaneous_decay &&
         a.run.dump_field == b.run.dump_field && a.scan.points == b.scan.points &&
         a.scan.theta_min == b.scan.theta_min && a.scan.theta_max == b.scan.theta_max &&
         a.scan.refine == b.scan.refine && a.scan.plateau_tol == b.scan.plateau_tol &&
         same(a.regime.density, b.regime.density) &&
         same(a.regime.temperature, b.regime.temperature) &&
         a.cross_section.n_min == b.cross_section.n_min &&
         a.cross_section.n_max == b.cross_section.n_max &&
         a.cross_section.temperatures == b.cross_section.temperatures &&
         a.steady.omega == b.steady.omega && a.steady.gate_separation == b.steady.gate_separation &&
         a.steady.gate_c6 == b.steady.gate_c6 && same(a.steady.temperature, b.steady.temperature) &&
         a.steady.n_v == b.steady.n_v;
}

}  // namespace rsit
