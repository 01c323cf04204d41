#include "twofluid/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace twofluid {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, sep)) out.push_back(item);
    return out;
}

std::vector<std::string> tokenize_ws(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) out.push_back(token);
    return out;
}

double parse_double(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(what + ": not a number: '" + text + "'");
    }
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(what + ": not an integer: '" + text + "'");
    }
}

}  // namespace

ConfigMap ConfigMap::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_text(text.str());
}

ConfigMap ConfigMap::parse_text(const std::string& text) {
    ConfigMap config;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              " is not 'key = value': " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) +
                                           " has an empty key");
        config.entries_[key] = value;
    }
    return config;
}

void ConfigMap::set(const std::string& key, const std::string& value) {
    entries_[key] = value;
}

bool ConfigMap::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string ConfigMap::get(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing config key: " + key);
    consumed_.insert(key);
    return it->second;
}

std::string ConfigMap::get_or(const std::string& key, const std::string& fallback) {
    if (!has(key)) entries_[key] = fallback;
    return get(key);
}

double ConfigMap::get_double(const std::string& key) {
    return parse_double(get(key), key);
}

double ConfigMap::get_double_or(const std::string& key, double fallback) {
    if (!has(key)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", fallback);
        entries_[key] = buf;
    }
    return get_double(key);
}

int ConfigMap::get_int(const std::string& key) { return parse_int(get(key), key); }

int ConfigMap::get_int_or(const std::string& key, int fallback) {
    if (!has(key)) entries_[key] = std::to_string(fallback);
    return get_int(key);
}

void ConfigMap::require_all_consumed() const {
    std::string unknown;
    for (const auto& [key, value] : entries_) {
        if (!consumed_.count(key)) {
            if (!unknown.empty()) unknown += ", ";
            unknown += key;
        }
    }
    if (!unknown.empty()) throw ConfigError("unknown config keys: " + unknown);
}

std::string ConfigMap::resolved_text() const {
    std::ostringstream out;
    for (const auto& [key, value] : entries_) out << key << " = " << value << "\n";
    return out.str();
}

PressureLaw law_from_config(ConfigMap& config) {
    const std::string name = config.get("law");
    if (name == "two_phase_polytropic")
        return PressureLaw::two_phase_polytropic(config.get_double("law.gamma"));
    if (name == "two_phase_liquid_fraction")
        return PressureLaw::two_phase_liquid_fraction(config.get_double("law.c_const"),
                                                      config.get_double("law.gamma"),
                                                      config.get_double("law.rho_l"));
    if (name == "two_phase_sonic")
        return PressureLaw::two_phase_sonic(config.get_double("law.c_const"),
                                            config.get_double("law.k0"),
                                            config.get_double("law.a0"));
    if (name == "bi_fluid")
        return PressureLaw::bi_fluid(config.get_double("law.alpha"),
                                     config.get_double("law.gamma"),
                                     config.get_double("law.a_coef"));
    throw ConfigError("unknown pressure law: " + name);
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "liquid_gas") return ModelKind::LiquidGas;
    if (name == "bi_fluid") return ModelKind::BiFluid;
    throw ConfigError("unknown model: " + name);
}

PrimitiveState parse_state_literal(const std::string& text, const PressureLaw& law) {
    double m = 0, n = 0, p = 0, s = 0;
    bool has_m = false, has_n = false, has_p = false, has_s = false;
    std::vector<double> u;

    for (const std::string& token : tokenize_ws(text)) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ConfigError("state literal field is not key=value: " + token);
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "m") { m = parse_double(value, "m"); has_m = true; }
        else if (key == "n") { n = parse_double(value, "n"); has_n = true; }
        else if (key == "p") { p = parse_double(value, "p"); has_p = true; }
        else if (key == "s") { s = parse_double(value, "s"); has_s = true; }
        else if (key == "u") {
            for (const std::string& comp : split(value, ','))
                u.push_back(parse_double(trim(comp), "u"));
        } else {
            throw ConfigError("unknown state literal field: " + key);
        }
    }

    if (u.empty() || u.size() > 3)
        throw ConfigError("state literal needs u with 1..3 components");
    Vec velocity = Vec::zero(static_cast<int>(u.size()));
    for (size_t i = 0; i < u.size(); ++i) velocity[static_cast<int>(i)] = u[i];

    if (has_m && has_n && !has_p && !has_s) {
        ConservativeState w;
        w.m = m;
        w.n = n;
        w.q = density_of(law.model(), m, n) * velocity;
        return to_primitive(law, w);
    }
    if (has_p && has_s && !has_m && !has_n) {
        const double rho = density_from_pressure(law, p, s);
        return make_primitive(law, rho, velocity, s);
    }
    throw ConfigError("state literal must give either m,n,u or p,s,u: " + text);
}

UpstreamLiteral parse_upstream_literal(const std::string& text) {
    UpstreamLiteral lit;
    bool has_rho = false, has_un = false, has_s = false;
    for (const std::string& raw : split(text, ',')) {
        const std::string token = trim(raw);
        if (token.empty()) continue;
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ConfigError("upstream field is not key=value: " + token);
        const std::string key = trim(token.substr(0, eq));
        const std::string value = trim(token.substr(eq + 1));
        if (key == "rho") { lit.rho = parse_double(value, "rho"); has_rho = true; }
        else if (key == "un") { lit.un = parse_double(value, "un"); has_un = true; }
        else if (key == "s") { lit.s = parse_double(value, "s"); has_s = true; }
        else throw ConfigError("unknown upstream field: " + key);
    }
    if (!has_rho || !has_un || !has_s)
        throw ConfigError("upstream literal needs rho=..,un=..,s=..: " + text);
    return lit;
}

double SweepRange::value(int k) const {
    if (steps <= 1) return lo;
    return lo + (hi - lo) * k / (steps - 1.0);
}

SweepRange parse_sweep_range(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("sweep range must be lo:hi:steps: " + text);
    SweepRange range;
    range.lo = parse_double(trim(parts[0]), "sweep lo");
    range.hi = parse_double(trim(parts[1]), "sweep hi");
    range.steps = parse_int(trim(parts[2]), "sweep steps");
    if (range.steps < 1) throw ConfigError("sweep steps must be >= 1: " + text);
    return range;
}

Expr parse_expr(const std::string& text) {
    const std::vector<std::string> tokens = tokenize_ws(text);
    if (tokens.empty()) throw ConfigError("empty expression");
    const std::string kind = tokens[0];
    std::vector<double> args;
    for (size_t i = 1; i < tokens.size(); ++i)
        args.push_back(parse_double(tokens[i], "expression argument"));

    Expr expr;
    expr.source = text;
    if (kind == "zero" && args.empty()) {
        expr.fn = [](double) { return 0.0; };
    } else if (kind == "const" && args.size() == 1) {
        const double v = args[0];
        expr.fn = [v](double) { return v; };
    } else if (kind == "sin" && (args.size() == 2 || args.size() == 3)) {
        const double amp = args[0], freq = args[1];
        const double phase = args.size() == 3 ? args[2] : 0.0;
        expr.fn = [=](double x) { return amp * std::sin(freq * x + phase); };
    } else if (kind == "poly" && !args.empty()) {
        expr.fn = [args](double x) {
            double acc = 0.0;
            for (size_t k = args.size(); k-- > 0;) acc = acc * x + args[k];
            return acc;
        };
    } else if (kind == "gaussian" && args.size() == 3) {
        const double amp = args[0], center = args[1], width = args[2];
        if (width == 0.0) throw ConfigError("gaussian width must be nonzero");
        expr.fn = [=](double x) {
            const double z = (x - center) / width;
            return amp * std::exp(-z * z);
        };
    } else {
        throw ConfigError("bad expression (want zero | const v | sin amp freq [phase] "
                          "| poly c0 [c1 ...] | gaussian amp center width): " +
                          text);
    }
    return expr;
}

fvm::SimulationConfig simulation_from_config(ConfigMap& config) {
    fvm::SimulationConfig sim;
    sim.law = law_from_config(config);
    const ModelKind model = model_kind_from_name(config.get("model"));
    if (model != sim.law.model())
        throw ConfigError("model '" + std::string(to_string(model)) +
                          "' does not admit pressure law '" + sim.law.name() + "'");

    sim.grid.dim = config.get_int_or("dim", 1);
    if (sim.grid.dim < 1 || sim.grid.dim > 2)
        throw ConfigError("dim must be 1 or 2");
    sim.grid.nx = config.get_int("cells");
    sim.grid.x_min = config.get_double_or("x_min", 0.0);
    sim.grid.x_max = config.get_double_or("x_max", 1.0);
    if (sim.grid.dim == 2) {
        sim.grid.ny = config.get_int("cells_y");
        sim.grid.y_min = config.get_double_or("y_min", 0.0);
        sim.grid.y_max = config.get_double_or("y_max", 1.0);
    }

    const std::string boundary = config.get_or("boundary", "periodic");
    if (boundary == "periodic") sim.boundary = fvm::Boundary::Periodic;
    else if (boundary == "outflow") sim.boundary = fvm::Boundary::Outflow;
    else throw ConfigError("boundary must be periodic or outflow: " + boundary);

    sim.cfl = config.get_double_or("cfl", 0.45);
    sim.t_final = config.get_double("t_final");
    sim.snapshot_every = config.get_int_or("snapshot_every", 0);
    sim.markers = config.get_int_or("markers", 0);

    const std::string initial = config.get("initial");
    const int dim = sim.grid.dim;
    if (initial == "constant") {
        ConservativeState w;
        w.m = config.get_double("const.m");
        w.n = config.get_double("const.n");
        w.q = Vec::zero(dim);
        const double rho = density_of(model, w.m, w.n);
        w.q[0] = rho * config.get_double_or("const.u1", 0.0);
        if (dim == 2) w.q[1] = rho * config.get_double_or("const.u2", 0.0);
        sim.initial = fvm::constant_initializer(w);
    } else if (initial == "riemann") {
        auto read_side = [&](const std::string& prefix) {
            ConservativeState w;
            w.m = config.get_double(prefix + ".m");
            w.n = config.get_double(prefix + ".n");
            w.q = Vec::zero(dim);
            const double rho = density_of(model, w.m, w.n);
            w.q[0] = rho * config.get_double_or(prefix + ".u1", 0.0);
            if (dim == 2) w.q[1] = rho * config.get_double_or(prefix + ".u2", 0.0);
            return w;
        };
        const ConservativeState left = read_side("riemann.left");
        const ConservativeState right = read_side("riemann.right");
        sim.initial = fvm::riemann_initializer(
            left, right, config.get_double_or("riemann.x_split", 0.0));
    } else if (initial == "sine") {
        fvm::SineInit init;
        init.base_m = config.get_double_or("sine.base_m", 1.0);
        init.base_n = config.get_double_or("sine.base_n", 1.0);
        init.amp_m = config.get_double_or("sine.amp_m", 0.01);
        init.amp_n = config.get_double_or("sine.amp_n", 0.01);
        init.amp_u1 = config.get_double_or("sine.amp_u1", 0.0);
        init.waves_x = config.get_int_or("sine.waves_x", 1);
        init.waves_y = config.get_int_or("sine.waves_y", 0);
        sim.initial = fvm::sine_initializer(sim.grid, init, model);
    } else if (initial == "exact_shock") {
        const double rho_minus = config.get_double("shock.rho_minus");
        const double un_minus = config.get_double("shock.un_minus");
        const double s = config.get_double("shock.s");
        const double rho_plus = config.get_double("shock.rho_plus");
        const std::string branch = config.get_or("shock.branch", "pos");
        if (branch != "pos" && branch != "neg")
            throw ConfigError("shock.branch must be pos or neg");
        const ShockSolution shock = hugoniot_downstream(
            sim.law, rho_minus, un_minus, s, rho_plus,
            branch == "pos" ? FluxSign::Positive : FluxSign::Negative);
        sim.initial = fvm::exact_shock_initializer(
            sim.law, shock, config.get_double_or("shock.x0", 0.0));
    } else {
        throw ConfigError(
            "initial must be constant | riemann | sine | exact_shock: " + initial);
    }
    return sim;
}

EnergyRunConfig energy_from_config(ConfigMap& config) {
    EnergyRunConfig run;
    run.problem.u_hat_minus = config.get_double("u_hat_minus");
    run.problem.u_hat_plus = config.get_double("u_hat_plus");
    run.problem.t_final = config.get_double("t_final");
    run.problem.half_line_length = config.get_double("half_line_length");
    run.cells = config.get_int("cells");
    run.cfl = config.get_double_or("cfl", 0.9);

    const Expr g = parse_expr(config.get_or("g", "zero"));
    const Expr s0_minus = parse_expr(config.get_or("s0_minus", "zero"));
    const Expr s0_plus = parse_expr(config.get_or("s0_plus", "zero"));
    const Expr fm_time = parse_expr(config.get_or("f_minus.time", "const 1"));
    const Expr fm_space = parse_expr(config.get_or("f_minus.space", "zero"));
    const Expr fp_time = parse_expr(config.get_or("f_plus.time", "const 1"));
    const Expr fp_space = parse_expr(config.get_or("f_plus.space", "zero"));

    run.problem.g = g.fn;
    run.problem.s0_minus = s0_minus.fn;
    run.problem.s0_plus = s0_plus.fn;
    run.problem.f_minus = [t = fm_time.fn, x = fm_space.fn](double tt, double xx) {
        return t(tt) * x(xx);
    };
    run.problem.f_plus = [t = fp_time.fn, x = fp_space.fn](double tt, double xx) {
        return t(tt) * x(xx);
    };
    return run;
}

}  // namespace twofluid
