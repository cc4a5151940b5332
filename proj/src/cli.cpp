#include "uncert/cli.hpp"

#include "uncert/constructions.hpp"
#include "uncert/matrix_io.hpp"
#include "uncert/search.hpp"
#include "uncert/uncertainty.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace uncert::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream ss(s);
    while (std::getline(ss, part, sep)) parts.push_back(part);
    return parts;
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("expected an integer for " + what + ", got '" + s + "'");
    }
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("expected a number for " + what + ", got '" + s + "'");
    }
}

PExponent parse_p(const std::string& s) {
    if (s == "inf" || s == "infinity") return PExponent::infinity();
    return PExponent::of(parse_double(s, "p"));
}

const std::string& require_param(const RunConfig& config, const std::string& key) {
    auto it = config.params.find(key);
    if (it == config.params.end()) {
        throw InputError("missing required parameter '" + key + "'");
    }
    return it->second;
}

std::string param_or(const RunConfig& config, const std::string& key,
                     const std::string& fallback) {
    auto it = config.params.find(key);
    return it == config.params.end() ? fallback : it->second;
}

SupportPolicy policy_from(const RunConfig& config) {
    SupportPolicy policy;
    if (auto it = config.params.find("rel_tol"); it != config.params.end()) {
        policy.rel_tol = parse_double(it->second, "rel_tol");
    }
    if (auto it = config.params.find("abs_floor"); it != config.params.end()) {
        policy.abs_floor = parse_double(it->second, "abs_floor");
    }
    if (policy.rel_tol < 0.0 || policy.abs_floor < 0.0) {
        throw InputError("support policy tolerances must be nonnegative");
    }
    return policy;
}

RefNorm ref_from(const RunConfig& config) {
    const std::string r = param_or(config, "ref", "euclidean");
    if (r == "euclidean") return RefNorm::euclidean;
    if (r == "lp") return RefNorm::lp;
    throw InputError("ref must be 'euclidean' or 'lp'");
}

SearchStrategy strategy_from(const std::string& s) {
    if (s == "combs") return SearchStrategy::combs;
    if (s == "exhaustive" || s == "exhaustive_supports") {
        return SearchStrategy::exhaustive_supports;
    }
    if (s == "random" || s == "random_restarts") return SearchStrategy::random_restarts;
    throw InputError("unknown strategy '" + s + "'");
}

ordered_json report_json(const UncertaintyReport& r) {
    ordered_json j;
    j["type"] = "uncertainty_report";
    j["theorem"] = theorem_name(r.theorem_id);
    j["lhs"] = r.lhs;
    j["bound"] = r.bound;
    j["holds"] = r.holds;
    j["slack_ratio"] = r.slack_ratio;
    j["supp_f"] = r.supports[0];
    j["supp_g"] = r.supports[1];
    if (r.p) {
        j["p"] = *r.p;
    } else {
        j["p"] = nullptr;
    }
    return j;
}

ordered_json chain_json(const RtChainReport& r) {
    ordered_json j;
    j["type"] = "rt_chain";
    j["theorem"] = "rt";
    j["am"] = r.am;
    j["sq_mean"] = r.sq_mean;
    j["product"] = r.product;
    j["bound"] = r.bound;
    j["all_hold"] = r.all_hold;
    j["supp_f"] = r.supports[0];
    j["supp_g"] = r.supports[1];
    return j;
}

ordered_json outcome_json(const SearchOutcome& o) {
    ordered_json j;
    j["type"] = "search_outcome";
    j["strategy"] = strategy_name(o.strategy);
    j["min_product"] = o.min_product;
    j["bound"] = o.bound;
    j["tight"] = o.tight;
    j["candidates_examined"] = o.candidates_examined;
    ordered_json mins = ordered_json::array();
    for (Eigen::Index i = 0; i < o.minimizer.size(); ++i) {
        mins.push_back(io::format_complex_hex(o.minimizer[i]));
    }
    j["minimizer"] = mins;
    return j;
}

ordered_json minor_json(const MinorReport& r) {
    ordered_json j;
    j["type"] = "minor_report";
    j["n"] = r.n;
    j["max_size_checked"] = r.max_size_checked;
    j["singular_minor_found"] = r.singular_minor_found;
    j["min_abs_det_seen"] = r.min_abs_det_seen;
    j["sampled"] = r.sampled;
    j["minors_checked"] = r.minors_checked;
    if (r.witness) {
        ordered_json w;
        w["rows"] = r.witness->first;
        w["cols"] = r.witness->second;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

struct CommandResult {
    std::vector<ordered_json> records;
    int exit_code = 0;
};

CommandResult run_verify(const RunConfig& config) {
    CommandResult result;
    const std::string theorem = require_param(config, "theorem");
    const FramePair f = pair_from_spec(require_param(config, "pair_f"));
    const FramePair g = pair_from_spec(require_param(config, "pair_g"));
    const CVec x = vector_from_spec(require_param(config, "x"));
    const SupportPolicy policy = policy_from(config);

    if (theorem == "rt") {
        const RtChainReport r = verify_rt_chain(f, g, x, policy);
        result.records.push_back(chain_json(r));
        result.exit_code = r.all_hold ? 0 : 1;
        return result;
    }

    const PExponent p = parse_p(require_param(config, "p"));
    UncertaintyReport r{};
    if (theorem == "discup") {
        r = verify_discup(f, g, x, p, policy);
    } else if (theorem == "fi") {
        r = verify_fi(f, g, x, p, policy);
    } else if (theorem == "si") {
        r = verify_si(f, g, x, p, policy);
    } else if (theorem == "uup") {
        r = verify_uup(f, g, x, p, policy);
    } else if (theorem == "mt") {
        const int samples = static_cast<int>(
            parse_long(param_or(config, "samples", "64"), "samples"));
        r = verify_mt(f, g, x, p, policy, ref_from(config), samples, config.seed);
    } else {
        throw InputError("unknown theorem '" + theorem + "'");
    }
    result.records.push_back(report_json(r));
    result.exit_code = r.holds ? 0 : 1;
    return result;
}

CommandResult run_garling(const RunConfig& config) {
    CommandResult result;
    const long n = parse_long(require_param(config, "n"), "n");
    const PExponent p = parse_p(require_param(config, "p"));
    const long count = parse_long(param_or(config, "count", "1"), "count");
    if (n < 1 || count < 1) {
        throw InputError("garling requires n >= 1 and count >= 1");
    }
    std::mt19937_64 rng(config.seed);
    for (long i = 0; i < count; ++i) {
        const CoeffSeq a = detail::gaussian_vector(n, rng);
        const GarlingReport r = garling_check(a, p);
        ordered_json j;
        j["type"] = "garling";
        j["index"] = i;
        j["length"] = n;
        j["p"] = p.value();
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["holds"] = r.holds;
        j["equality"] = r.equality;
        result.records.push_back(j);
        if (!r.holds) result.exit_code = 1;
    }
    return result;
}

CommandResult run_counterexample(const RunConfig& config) {
    CommandResult result;
    const PExponent p = parse_p(require_param(config, "p"));
    const double measure = parse_double(param_or(config, "measure", "0.5"), "measure");
    const double constant = parse_double(param_or(config, "constant", "1"), "constant");
    const ContinuousGarlingWitness w = continuous_garling_counterexample(p, measure, constant);
    ordered_json j;
    j["type"] = "continuous_garling_witness";
    j["p"] = p.value();
    j["measure_of_set"] = w.measure_of_set;
    j["constant_value"] = w.constant_value;
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    j["strict"] = w.lhs > w.rhs;
    result.records.push_back(j);
    result.exit_code = w.lhs > w.rhs ? 0 : 1;
    return result;
}

CommandResult run_construct(const RunConfig& config) {
    CommandResult result;
    const FramePair pair = pair_from_spec(require_param(config, "pair"));
    const ReconstructionReport recon = verify_reconstruction(pair);
    ordered_json j;
    j["type"] = "reconstruction";
    j["ambient_dim"] = pair.ambient_dim();
    j["count"] = pair.count();
    j["max_residual"] = recon.max_residual;
    j["tol"] = pair.recon_tol();
    j["holds"] = recon.holds;
    j["cond_estimate"] = pair.cond_estimate();
    result.records.push_back(j);
    result.exit_code = recon.holds ? 0 : 1;

    if (auto it = config.params.find("p_list"); it != config.params.end()) {
        std::vector<PExponent> ps;
        for (const std::string& s : split(it->second, ',')) ps.push_back(parse_p(s));
        const int samples =
            static_cast<int>(parse_long(param_or(config, "samples", "64"), "samples"));
        const FrameClassification cls =
            classify(pair, ps, samples, config.seed, ref_from(config));
        ordered_json c;
        c["type"] = "classification";
        c["reconstructs"] = cls.reconstructs;
        c["parseval"] = cls.parseval;
        ordered_json exact;
        for (const auto& [pv, ok] : cls.p_norm_exact) {
            std::ostringstream key;
            key << pv;
            exact[key.str()] = ok;
        }
        c["p_norm_exact"] = exact;
        result.records.push_back(c);
    }

    if (auto it = config.params.find("out"); it != config.params.end()) {
        std::ofstream file(it->second);
        if (!file) throw InputError("cannot open output file '" + it->second + "'");
        io::write_pair_csv(file, pair);
    }
    return result;
}

CommandResult run_search(const RunConfig& config) {
    CommandResult result;
    const FramePair f = pair_from_spec(require_param(config, "pair_f"));
    const FramePair g = pair_from_spec(require_param(config, "pair_g"));
    const SearchStrategy strategy = strategy_from(param_or(config, "strategy", "combs"));
    const long budget = parse_long(param_or(config, "budget", "10000"), "budget");
    const SearchOutcome o = min_uncertainty_product(f, g, strategy, budget, config.seed,
                                                    policy_from(config),
                                                    thread_cap_from_env());
    result.records.push_back(outcome_json(o));
    result.exit_code =
        static_cast<double>(o.min_product) >= o.bound * (1.0 - 1e-9) ? 0 : 1;
    return result;
}

CommandResult run_sweep(const RunConfig& config) {
    CommandResult result;
    std::vector<Eigen::Index> n_list;
    for (const std::string& s : split(require_param(config, "n_list"), ',')) {
        n_list.push_back(parse_long(s, "n_list"));
    }
    std::vector<double> p_grid;
    for (const std::string& s : split(require_param(config, "p_grid"), ',')) {
        p_grid.push_back(parse_double(s, "p_grid"));
    }
    const SearchStrategy strategy = strategy_from(param_or(config, "strategy", "combs"));
    const auto rows = tightness_sweep(n_list, p_grid, strategy, config.seed,
                                      policy_from(config));
    for (const SweepRow& row : rows) {
        ordered_json j;
        j["type"] = "sweep_row";
        j["n"] = row.n;
        j["p"] = row.p;
        j["discup_bound"] = row.discup_bound;
        j["min_product_found"] = row.min_product_found;
        j["slack"] = row.slack;
        j["prime"] = row.n_is_prime;
        result.records.push_back(j);
        if (static_cast<double>(row.min_product_found) <
            row.discup_bound * (1.0 - 1e-9)) {
            result.exit_code = 1;
        }
    }
    return result;
}

CommandResult run_minors(const RunConfig& config) {
    CommandResult result;
    const long n = parse_long(require_param(config, "n"), "n");
    const long max_size = parse_long(require_param(config, "max_size"), "max_size");
    result.records.push_back(minor_json(tao_minor_check(n, max_size)));
    return result;
}

void emit(std::ostream& out, const RunConfig& config,
          const std::vector<ordered_json>& records) {
    ordered_json doc;
    doc["version"] = kVersion;
    ordered_json cfg;
    cfg["command"] = command_name(config.command);
    cfg["seed"] = config.seed;
    cfg["format"] = format_name(config.output_format);
    cfg["params"] = config.params; // std::map: key-sorted, deterministic
    doc["config"] = cfg;
    doc["records"] = records;

    switch (config.output_format) {
        case OutputFormat::json:
            out << doc.dump(2) << '\n';
            break;
        case OutputFormat::csv: {
            if (records.empty()) break;
            bool first = true;
            for (const auto& [key, value] : records.front().items()) {
                if (value.is_structured()) continue;
                out << (first ? "" : ",") << key;
                first = false;
            }
            out << '\n';
            for (const ordered_json& rec : records) {
                first = true;
                for (const auto& [key, value] : rec.items()) {
                    if (value.is_structured()) continue;
                    out << (first ? "" : ",");
                    if (value.is_string()) {
                        out << value.get<std::string>();
                    } else {
                        out << value.dump();
                    }
                    first = false;
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::human: {
            out << "uncert-frames " << kVersion << " | " << command_name(config.command)
                << " | seed " << config.seed << '\n';
            long i = 0;
            for (const ordered_json& rec : records) {
                out << "record " << i++ << ":\n";
                for (const auto& [key, value] : rec.items()) {
                    out << "  " << key << ": ";
                    if (value.is_string()) {
                        out << value.get<std::string>();
                    } else {
                        out << value.dump();
                    }
                    out << '\n';
                }
            }
            break;
        }
    }
}

} // namespace

Command command_from_name(const std::string& name) {
    if (name == "verify") return Command::verify;
    if (name == "garling") return Command::garling;
    if (name == "counterexample") return Command::counterexample;
    if (name == "construct") return Command::construct;
    if (name == "search") return Command::search;
    if (name == "sweep") return Command::sweep;
    if (name == "minors") return Command::minors;
    throw InputError("unknown command '" + name + "'");
}

const char* command_name(Command c) {
    switch (c) {
        case Command::verify: return "verify";
        case Command::garling: return "garling";
        case Command::counterexample: return "counterexample";
        case Command::construct: return "construct";
        case Command::search: return "search";
        case Command::sweep: return "sweep";
        case Command::minors: return "minors";
    }
    return "?";
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "human") return OutputFormat::human;
    throw InputError("unknown output format '" + name + "'");
}

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::human: return "human";
    }
    return "?";
}

FramePair pair_from_spec(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw InputError("empty pair spec");
    const std::string& kind = parts[0];
    if (kind == "identity" && parts.size() == 2) {
        return identity_pair(parse_long(parts[1], "identity dimension"));
    }
    if (kind == "dft" && parts.size() == 2) {
        return dft_pair(parse_long(parts[1], "dft dimension"));
    }
    if (kind == "random" && parts.size() == 3) {
        const long d = parse_long(parts[1], "random dimension");
        const long seed = parse_long(parts[2], "random seed");
        return random_biorthogonal_pair(d, d, static_cast<unsigned long long>(seed));
    }
    if (kind == "file" && parts.size() >= 2) {
        // Re-join in case the path contains ':'.
        std::string path = spec.substr(kind.size() + 1);
        std::ifstream file(path);
        if (!file) throw InputError("cannot open pair file '" + path + "'");
        return io::read_pair_csv(file, path);
    }
    throw InputError("bad pair spec '" + spec +
                     "' (want identity:d, dft:n, random:d:seed, or file:path)");
}

CVec vector_from_spec(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw InputError("empty vector spec");
    const std::string& kind = parts[0];
    if (kind == "comb" && (parts.size() == 3 || parts.size() == 4)) {
        const long n = parse_long(parts[1], "comb length");
        const long s = parse_long(parts[2], "comb spacing");
        const long o = parts.size() == 4 ? parse_long(parts[3], "comb offset") : 0;
        return dirac_comb(n, s, o);
    }
    if (kind == "spike" && (parts.size() == 2 || parts.size() == 3)) {
        const long n = parse_long(parts[1], "spike length");
        const long i = parts.size() == 3 ? parse_long(parts[2], "spike index") : 0;
        if (n < 1 || i < 0 || i >= n) throw InputError("spike index out of range");
        CVec x = CVec::Zero(n);
        x[i] = 1.0;
        return x;
    }
    if (kind == "ones" && parts.size() == 2) {
        const long n = parse_long(parts[1], "ones length");
        if (n < 1) throw InputError("ones length must be >= 1");
        return CVec::Ones(n);
    }
    if (kind == "random" && parts.size() == 3) {
        const long n = parse_long(parts[1], "random length");
        if (n < 1) throw InputError("random length must be >= 1");
        std::mt19937_64 rng(
            static_cast<unsigned long long>(parse_long(parts[2], "random seed")));
        return detail::gaussian_vector(n, rng);
    }
    if (kind == "file" && parts.size() >= 2) {
        std::string path = spec.substr(kind.size() + 1);
        std::ifstream file(path);
        if (!file) throw InputError("cannot open vector file '" + path + "'");
        return io::read_vector_csv(file, path);
    }
    throw InputError("bad vector spec '" + spec +
                     "' (want comb:n:s[:o], spike:n[:i], ones:n, random:n:seed, or file:path)");
}

unsigned thread_cap_from_env() {
    const char* env = std::getenv("UNCERT_FRAMES_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    const long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 1;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    try {
        CommandResult result;
        switch (config.command) {
            case Command::verify: result = run_verify(config); break;
            case Command::garling: result = run_garling(config); break;
            case Command::counterexample: result = run_counterexample(config); break;
            case Command::construct: result = run_construct(config); break;
            case Command::search: result = run_search(config); break;
            case Command::sweep: result = run_sweep(config); break;
            case Command::minors: result = run_minors(config); break;
        }
        emit(out, config, result.records);
        return result.exit_code;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace uncert::cli
