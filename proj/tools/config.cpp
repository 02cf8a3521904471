#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mollow::cli {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

// Object reader that rejects keys nobody asked for.
class Fields {
public:
    Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j.is_object()) fail(where_ + " must be an object");
    }

    bool has(const char* key) const { return j_.contains(key); }

    double number(const char* key, double fallback) {
        if (!take(key)) return fallback;
        const auto& v = j_.at(key);
        if (!v.is_number()) fail(where_ + "." + key + " must be a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) fail(where_ + "." + key + " must be finite");
        return d;
    }

    int integer(const char* key, int fallback) {
        if (!take(key)) return fallback;
        const auto& v = j_.at(key);
        if (!v.is_number_integer()) fail(where_ + "." + key + " must be an integer");
        return v.get<int>();
    }

    bool boolean(const char* key, bool fallback) {
        if (!take(key)) return fallback;
        const auto& v = j_.at(key);
        if (!v.is_boolean()) fail(where_ + "." + key + " must be true or false");
        return v.get<bool>();
    }

    std::string string(const char* key, const std::string& fallback) {
        if (!take(key)) return fallback;
        const auto& v = j_.at(key);
        if (!v.is_string()) fail(where_ + "." + key + " must be a string");
        return v.get<std::string>();
    }

    const json* raw(const char* key) { return take(key) ? &j_.at(key) : nullptr; }

    void finish() const {
        for (const auto& [k, v] : j_.items())
            if (!used_.count(k)) fail("unknown key " + where_ + "." + k);
    }

private:
    bool take(const char* key) {
        if (!j_.contains(key)) return false;
        used_.insert(key);
        return true;
    }

    const json& j_;
    std::string where_;
    std::set<std::string> used_;
};

DriveType parse_drive_type(const std::string& s) {
    if (s == "harmonic") return DriveType::harmonic;
    if (s == "biharmonic") return DriveType::biharmonic;
    if (s == "square_wave") return DriveType::square_wave;
    if (s == "custom") return DriveType::custom;
    fail("drive.type must be harmonic, biharmonic, square_wave or custom, got '" + s + "'");
}

const char* name(DriveType t) {
    switch (t) {
        case DriveType::harmonic: return "harmonic";
        case DriveType::biharmonic: return "biharmonic";
        case DriveType::square_wave: return "square_wave";
        case DriveType::custom: return "custom";
    }
    return "?";
}

Operator parse_coupling(const std::string& s) {
    if (s == "x") return Operator::x;
    if (s == "z") return Operator::z;
    fail("bath coupling must be x or z, got '" + s + "'");
}

DriveConfig parse_drive(const json& j) {
    Fields f(j, "drive");
    DriveConfig d;
    d.type = parse_drive_type(f.string("type", "harmonic"));
    d.omega0 = f.number("omega0", 1.0);
    d.omega_l = f.number("omega_l", 1.0);
    switch (d.type) {
        case DriveType::harmonic: d.A = f.number("A", 0.0); break;
        case DriveType::biharmonic:
            d.A = f.number("A", 0.0);
            d.r = f.number("r", 0.0);
            d.phi = f.number("phi", 0.0);
            break;
        case DriveType::square_wave:
            d.A = f.number("A", 0.0);
            d.terms = f.integer("terms", 100);
            break;
        case DriveType::custom: {
            const json* list = f.raw("components");
            if (!list || !list->is_array() || list->empty()) fail("drive.components must be a nonempty array");
            for (const auto& item : *list) {
                Fields c(item, "drive.components[]");
                RawComponent rc;
                rc.harmonic = c.integer("harmonic", 1);
                rc.amplitude = c.number("amplitude", 0.0);
                rc.phase = c.number("phase", 0.0);
                const auto wf = c.string("waveform", "cosine");
                if (wf == "cosine") rc.waveform = Waveform::cosine;
                else if (wf == "sine") rc.waveform = Waveform::sine;
                else fail("drive.components[].waveform must be cosine or sine");
                c.finish();
                d.components.push_back(rc);
            }
            break;
        }
    }
    f.finish();
    return d;
}

BathSpec parse_bath(const json& j) {
    Fields f(j, "baths[]");
    const auto kind = f.string("kind", "");
    BathSpec b;
    if (kind == "radiative") {
        b = BathSpec::radiative(f.number("kappa", 0.0), parse_coupling(f.string("coupling", "x")));
    } else if (kind == "ohmic") {
        b = BathSpec::ohmic(f.number("alpha", 0.0), f.number("omega_c", 10.0), parse_coupling(f.string("coupling", "z")));
    } else {
        fail("baths[].kind must be radiative or ohmic");
    }
    f.finish();
    return b;
}

json drive_json(const DriveConfig& d) {
    json j;
    j["type"] = name(d.type);
    j["omega0"] = d.omega0;
    j["omega_l"] = d.omega_l;
    switch (d.type) {
        case DriveType::harmonic: j["A"] = d.A; break;
        case DriveType::biharmonic:
            j["A"] = d.A;
            j["r"] = d.r;
            j["phi"] = d.phi;
            break;
        case DriveType::square_wave:
            j["A"] = d.A;
            j["terms"] = d.terms;
            break;
        case DriveType::custom: {
            json list = json::array();
            for (const auto& c : d.components)
                list.push_back({{"harmonic", c.harmonic},
                                {"amplitude", c.amplitude},
                                {"phase", c.phase},
                                {"waveform", c.waveform == Waveform::cosine ? "cosine" : "sine"}});
            j["components"] = list;
            break;
        }
    }
    return j;
}

json bath_json(const BathSpec& b) {
    if (b.kind == BathKind::radiative)
        return {{"kind", "radiative"}, {"kappa", b.kappa}, {"coupling", std::string(to_string(b.coupling))}};
    return {{"kind", "ohmic"}, {"alpha", b.alpha}, {"omega_c", b.omega_c}, {"coupling", std::string(to_string(b.coupling))}};
}

}  // namespace

DrivingSpec DriveConfig::build() const {
    switch (type) {
        case DriveType::harmonic:
        case DriveType::biharmonic:
        case DriveType::square_wave: {
            // Reuse the factories, then move to the requested omega0.
            const DrivingSpec base = type == DriveType::harmonic      ? harmonic(A, omega_l)
                                     : type == DriveType::biharmonic ? biharmonic(A, r, phi, omega_l)
                                                                      : square_wave_like(A, omega_l, terms);
            if (omega0 == 1.0) return base;
            std::vector<RawComponent> raw;
            for (const auto& c : base.components()) raw.push_back({c.harmonic, c.amplitude, c.phase, Waveform::cosine});
            return DrivingSpec(omega_l, raw, omega0);
        }
        case DriveType::custom: return DrivingSpec(omega_l, components, omega0);
    }
    fail("bad drive type");
}

void RunConfig::validate() const {
    if (!(drive.omega0 > 0.0)) fail("drive.omega0 must be positive");
    if (!(drive.omega_l > 0.0)) fail("drive.omega_l must be positive");
    if (drive.A < 0.0) fail("drive.A must be nonnegative");
    if (drive.type == DriveType::square_wave && drive.terms < 1) fail("drive.terms must be at least 1");
    if (baths.empty()) fail("at least one bath is required");
    for (const auto& b : baths) b.validate();
    if (n_max < 0) fail("n_max must be nonnegative");
    if (solver != Solver::sambe && drive.type != DriveType::harmonic)
        fail(std::string(to_string(solver)) + " solver needs a harmonic drive");
    if (solver != Solver::sambe && coupling != Coupling::full) fail("coupling applies to the sambe solver only");
    if (!(spectrum.omega_min < spectrum.omega_max)) fail("spectrum.omega_min must be below spectrum.omega_max");
    if (spectrum.points < 2) fail("spectrum.points must be at least 2");
    if (spectrum.delta_width < 0.0) fail("spectrum.delta_width must be nonnegative");
    if (!(scan.omega_min > 0.0 && scan.omega_min < scan.omega_max && scan.omega_max <= 2.0 * drive.omega0))
        fail("scan range must satisfy 0 < omega_min < omega_max <= 2 omega0");
    if (scan.points < 3) fail("scan.points must be at least 3");
    if (!(scan.refine_tol > 0.0)) fail("scan.refine_tol must be positive");
    if (!(compare.ratio_min >= 0.0 && compare.ratio_min <= compare.ratio_max)) fail("compare ratio range is empty");
    if (compare.points < 1) fail("compare.points must be at least 1");
    if (sweep) {
        if (sweep->values.empty()) fail("sweep.values must not be empty");
        with_parameter(*this, sweep->parameter, sweep->values.front());
    }
}

RunConfig parse_config(const json& j) {
    Fields f(j, "config");
    RunConfig c;
    if (const json* d = f.raw("drive")) c.drive = parse_drive(*d);
    if (const json* b = f.raw("baths")) {
        if (!b->is_array()) fail("baths must be an array");
        c.baths.clear();
        for (const auto& item : *b) c.baths.push_back(parse_bath(item));
    }
    c.solver = parse_solver(f.string("solver", "sambe"));
    const auto coupling = f.string("coupling", "full");
    if (coupling == "full") c.coupling = Coupling::full;
    else if (coupling == "rotating") c.coupling = Coupling::rotating;
    else fail("coupling must be full or rotating");
    c.n_max = f.integer("n_max", 0);
    c.lamb_shift = f.boolean("lamb_shift", false);
    if (const json* s = f.raw("spectrum")) {
        Fields w(*s, "spectrum");
        c.spectrum.omega_min = w.number("omega_min", c.spectrum.omega_min);
        c.spectrum.omega_max = w.number("omega_max", c.spectrum.omega_max);
        c.spectrum.points = w.integer("points", c.spectrum.points);
        c.spectrum.delta_width = w.number("delta_width", c.spectrum.delta_width);
        w.finish();
    }
    if (const json* s = f.raw("scan")) {
        Fields w(*s, "scan");
        c.scan.omega_min = w.number("omega_min", c.scan.omega_min);
        c.scan.omega_max = w.number("omega_max", c.scan.omega_max);
        c.scan.points = w.integer("points", c.scan.points);
        c.scan.refine_tol = w.number("refine_tol", c.scan.refine_tol);
        c.scan.threshold = w.number("threshold", c.scan.threshold);
        c.scan.harmonic_overlay = w.boolean("harmonic_overlay", c.scan.harmonic_overlay);
        c.scan.rwa_overlay = w.boolean("rwa_overlay", c.scan.rwa_overlay);
        w.finish();
    }
    if (const json* s = f.raw("compare")) {
        Fields w(*s, "compare");
        c.compare.ratio_min = w.number("ratio_min", c.compare.ratio_min);
        c.compare.ratio_max = w.number("ratio_max", c.compare.ratio_max);
        c.compare.points = w.integer("points", c.compare.points);
        w.finish();
    }
    if (const json* s = f.raw("sweep")) {
        Fields w(*s, "sweep");
        SweepConfig sw;
        sw.parameter = w.string("parameter", "");
        const json* values = w.raw("values");
        if (!values || !values->is_array()) fail("sweep.values must be an array");
        for (const auto& v : *values) {
            if (!v.is_number() || !std::isfinite(v.get<double>())) fail("sweep.values must be finite numbers");
            sw.values.push_back(v.get<double>());
        }
        w.finish();
        c.sweep = sw;
    }
    c.output_dir = f.string("output_dir", ".");
    f.finish();
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!text.empty() && text.front() == '#') {
        const std::string tag = "# config: ";
        std::istringstream lines(text);
        std::string line;
        text.clear();
        while (std::getline(lines, line)) {
            if (line.rfind(tag, 0) == 0) {
                text = line.substr(tag.size());
                break;
            }
        }
        if (text.empty()) fail(path + " has no '# config: ' header line");
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(path + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(const RunConfig& c) {
    json j;
    j["drive"] = drive_json(c.drive);
    json baths = json::array();
    for (const auto& b : c.baths) baths.push_back(bath_json(b));
    j["baths"] = baths;
    j["solver"] = std::string(to_string(c.solver));
    j["coupling"] = c.coupling == Coupling::full ? "full" : "rotating";
    j["n_max"] = c.n_max;
    j["lamb_shift"] = c.lamb_shift;
    j["spectrum"] = {{"omega_min", c.spectrum.omega_min},
                     {"omega_max", c.spectrum.omega_max},
                     {"points", c.spectrum.points},
                     {"delta_width", c.spectrum.delta_width}};
    j["scan"] = {{"omega_min", c.scan.omega_min},           {"omega_max", c.scan.omega_max},
                 {"points", c.scan.points},                 {"refine_tol", c.scan.refine_tol},
                 {"threshold", c.scan.threshold},           {"harmonic_overlay", c.scan.harmonic_overlay},
                 {"rwa_overlay", c.scan.rwa_overlay}};
    j["compare"] = {{"ratio_min", c.compare.ratio_min}, {"ratio_max", c.compare.ratio_max}, {"points", c.compare.points}};
    if (c.sweep) j["sweep"] = {{"parameter", c.sweep->parameter}, {"values", c.sweep->values}};
    return j;
}

RunConfig with_parameter(const RunConfig& c, const std::string& name, double value) {
    RunConfig out = c;
    auto first_bath = [&](BathKind kind) -> BathSpec& {
        for (auto& b : out.baths)
            if (b.kind == kind) return b;
        fail("sweep parameter " + name + " needs a matching bath");
    };
    auto needs_shape = [&](bool ok) {
        if (!ok) fail("sweep parameter " + name + " does not apply to a " + std::string(cli::name(c.drive.type)) + " drive");
    };
    if (name == "omega_l") out.drive.omega_l = value;
    else if (name == "A") {
        needs_shape(c.drive.type != DriveType::custom);
        out.drive.A = value;
    } else if (name == "r") {
        needs_shape(c.drive.type == DriveType::biharmonic);
        out.drive.r = value;
    } else if (name == "phi") {
        needs_shape(c.drive.type == DriveType::biharmonic);
        out.drive.phi = value;
    } else if (name == "kappa") first_bath(BathKind::radiative).kappa = value;
    else if (name == "alpha") first_bath(BathKind::ohmic).alpha = value;
    else if (name == "omega_c") first_bath(BathKind::ohmic).omega_c = value;
    else fail("unknown sweep parameter '" + name + "' (expected omega_l, A, r, phi, kappa, alpha or omega_c)");
    return out;
}

}  // namespace mollow::cli
