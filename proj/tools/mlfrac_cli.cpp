#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlfrac/asymptotics.hpp"
#include "mlfrac/catalog.hpp"
#include "mlfrac/contour.hpp"
#include "mlfrac/errors.hpp"
#include "mlfrac/frac_ops.hpp"
#include "mlfrac/series.hpp"
#include "mlfrac/verify.hpp"

using namespace mlfrac;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

// bad flag values; reported with exit code 2
struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
    static const std::regex full(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
    static const std::regex imag_only(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, imag_only)) {
        const Real v = m[2].matched ? std::stold(m[2].str()) : 1.0L;
        return {0, m[1].str() == "-" ? -v : v};
    }
    if (!text.empty() && std::regex_match(text, m, full) && (m[1].matched || m[2].matched)) {
        const Real re = m[1].matched ? std::stold(m[1].str()) : 0.0L;
        Real im = 0;
        if (m[2].matched) {
            im = m[3].matched ? std::stold(m[3].str()) : 1.0L;
            if (m[2].str() == "-") im = -im;
        }
        return {re, im};
    }
    throw FlagError("not a complex literal: '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::vector<Complex> parse_list(const std::string& s) {
    std::vector<Complex> out;
    for (const auto& x : split(s, ',')) out.push_back(parse_complex(x));
    return out;
}

json cjson(const Complex& z) {
    auto num = [](Real x) -> json { return std::isfinite(x) ? json(static_cast<double>(x)) : json(nullptr); };
    return json{{"re", num(z.real())}, {"im", num(z.imag())}};
}

std::string csv_num(Real x) {
    if (!std::isfinite(x)) return "";
    if (x == 0) x = 0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// ---- named parameters --------------------------------------------------------

const std::vector<std::string> kParamNames = {"alpha", "beta", "gamma", "delta", "alpha2", "beta2", "nu",
                                              "mu",    "rho",  "lambda", "r",    "s",      "m",     "l",
                                              "a",     "b",    "pairs", "n"};

struct Params {
    std::map<std::string, std::string> given;

    bool has(const std::string& k) const { return given.count(k) > 0; }
    const std::string& raw(const std::string& k) const {
        auto it = given.find(k);
        if (it == given.end()) throw FlagError("missing --" + k);
        return it->second;
    }
    Complex c(const std::string& k) const { return parse_complex(raw(k)); }
    Complex c(const std::string& k, Complex dflt) const { return has(k) ? c(k) : dflt; }
    Real r(const std::string& k) const {
        const Complex v = c(k);
        if (v.imag() != 0) throw FlagError("--" + k + " must be real");
        return v.real();
    }
    Real r(const std::string& k, Real dflt) const { return has(k) ? r(k) : dflt; }
    std::vector<Complex> list(const std::string& k) const { return has(k) ? parse_list(raw(k)) : std::vector<Complex>{}; }
};

using Family = std::variant<MLParams, SeriesInstance>;

Family make_family(const std::string& fn, const Params& p) {
    if (fn == "ml1") return MLParams{MLOne{p.c("alpha")}};
    if (fn == "ml2") return MLParams{MLTwo{p.c("alpha"), p.c("beta")}};
    if (fn == "ml3" || fn == "prabhakar") return MLParams{MLThree{p.c("alpha"), p.c("beta"), p.c("gamma")}};
    if (fn == "ml4" || fn == "salim") return MLParams{MLFour{p.c("alpha"), p.c("beta"), p.c("gamma"), p.c("delta")}};
    if (fn == "ml6") return MLParams{MLSix{p.c("alpha"), p.c("beta"), p.c("gamma"), p.c("delta"), p.r("r", 1), p.r("s", 1)}};
    if (fn == "kilbas-saigo") return MLParams{KilbasSaigo{p.r("alpha"), p.r("m"), p.c("l")}};
    if (fn == "multi-index") {
        MultiIndex m;
        for (const auto& pair : split(p.raw("pairs"), ';')) {
            const auto ab = split(pair, ':');
            if (ab.size() != 2) throw FlagError("--pairs expects alpha:beta;alpha:beta");
            const Complex a = parse_complex(ab[0]);
            if (a.imag() != 0) throw FlagError("--pairs: alpha_j must be real");
            m.pairs.emplace_back(a.real(), parse_complex(ab[1]));
        }
        return MLParams{m};
    }
    if (fn == "mseries") return SeriesInstance{MSeries{p.list("a"), p.list("b"), p.c("alpha"), p.c("beta")}};
    if (fn == "kfunction") return SeriesInstance{KFunction{p.list("a"), p.list("b"), p.c("alpha"), p.c("beta"), p.c("gamma")}};
    if (fn == "wright") return SeriesInstance{WrightPhi{p.r("alpha"), p.c("beta")}};
    if (fn == "bessel-wright") return SeriesInstance{BesselWright{p.c("rho"), p.r("mu")}};
    if (fn == "lommel-wright") {
        const Real n = p.r("n");
        if (n != std::floor(n)) throw FlagError("--n must be an integer");
        return SeriesInstance{LommelWright{p.c("rho"), p.c("lambda"), p.r("mu"), static_cast<int>(n)}};
    }
    if (fn == "multiple") return SeriesInstance{MultipleML{p.r("alpha"), p.r("beta"), p.r("mu")}};
    throw FlagError("unknown --fn '" + fn + "'");
}

std::string family_label(const Family& f) {
    return std::visit([](const auto& x) { return family_name(x); }, f);
}

// ---- z grid ----------------------------------------------------------------------

std::vector<Complex> make_grid(const std::vector<std::string>& zs, const std::string& grid) {
    std::vector<Complex> out;
    for (const auto& z : zs) out.push_back(parse_complex(z));
    if (!grid.empty()) {
        const auto f = split(grid, ':');
        if (f.size() != 3 && f.size() != 4) throw FlagError("--grid expects start:stop:count[:angle]");
        Real start, stop, angle = 0;
        long count;
        try {
            start = std::stold(f[0]);
            stop = std::stold(f[1]);
            count = std::stol(f[2]);
            if (f.size() == 4) angle = std::stold(f[3]);
        } catch (const std::exception&) {
            throw FlagError("--grid: malformed number in '" + grid + "'");
        }
        if (count < 1) throw FlagError("--grid: count must be at least 1");
        for (long i = 0; i < count; ++i) {
            const Real t = count == 1 ? start : start + (stop - start) * static_cast<Real>(i) / static_cast<Real>(count - 1);
            out.push_back(std::polar(t, angle));
        }
    }
    return out;
}

// ---- output ----------------------------------------------------------------------

struct Output {
    std::string format = "json";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw FlagError("cannot open --out " + path);
        f << text;
    }
};

struct Row {
    Complex z, value;
    long terms = 0;
    std::string status;
    bool ok = true;
};

Row eval_point(const std::function<EvalResult(Complex)>& f, Complex z) {
    Row row;
    row.z = z;
    try {
        const EvalResult r = f(z);
        row.value = r.value;
        row.terms = r.terms_used;
        row.status = to_string(r.status);
    } catch (const Error& e) {
        row.ok = false;
        row.value = {NAN, NAN};
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

json row_json(const Row& r) {
    return json{{"z", cjson(r.z)}, {"value", cjson(r.value)}, {"terms", r.terms}, {"status", r.status}};
}

std::string row_csv(const Row& r) {
    return csv_num(r.z.real()) + "," + csv_num(r.z.imag()) + "," + csv_num(r.value.real()) + "," +
           csv_num(r.value.imag()) + "," + std::to_string(r.terms) + "," + csv_quote(r.status);
}

std::function<EvalResult(Complex)> evaluator(const Family& fam, const std::string& method, Real tol, long cap) {
    if (method == "series") {
        return [=](Complex z) {
            return fam.index() == 0 ? ml_eval(std::get<0>(fam), z, tol, cap) : series_eval(std::get<1>(fam), z, tol, cap);
        };
    }
    if (fam.index() != 0) throw FlagError("--method " + method + " applies to ml2/ml3 only");
    const MLParams& p = std::get<0>(fam);
    auto real_alpha = [](Complex a) {
        if (a.imag() != 0) throw FlagError("--method needs a real alpha");
        return a.real();
    };
    if (method == "hankel") {
        const auto* m = std::get_if<MLTwo>(&p);
        if (!m) throw FlagError("--method hankel applies to ml2");
        const Real a = real_alpha(m->alpha);
        const Complex b = m->beta;
        return [=](Complex z) { return ml2_hankel(a, b, z); };
    }
    if (method == "mellin-barnes") {
        const auto* m = std::get_if<MLThree>(&p);
        if (!m) throw FlagError("--method mellin-barnes applies to ml3");
        const Real a = real_alpha(m->alpha);
        const Complex b = m->beta, g = m->gamma;
        return [=](Complex z) { return mellin_barnes_prabhakar(a, b, g, z); };
    }
    if (method == "asymptotic") {
        const auto* m = std::get_if<MLTwo>(&p);
        if (!m) throw FlagError("--method asymptotic applies to ml2");
        const Real a = real_alpha(m->alpha);
        const Complex b = m->beta;
        return [=](Complex z) {
            const Complex v = a < 2 ? ml2_asymptotic(a, b, z) : ml2_asymptotic_large_alpha(a, b, z, 8);
            return EvalResult{v, 8, 0, Status::converged};
        };
    }
    throw FlagError("unknown --method '" + method + "'");
}

json spec_json(const FoxWrightSpec& s) {
    auto pairs = [](const std::vector<ParamPair>& v) {
        json a = json::array();
        for (const auto& p : v) a.push_back(json{{"value", cjson(p.value)}, {"weight", static_cast<double>(p.weight)}});
        return a;
    };
    return json{{"upper", pairs(s.upper)},
                {"lower", pairs(s.lower)},
                {"prefactor", cjson(s.prefactor)},
                {"normalized", s.normalized},
                {"argument",
                 {{"coefficient", cjson(s.argument.coefficient)},
                  {"power", static_cast<double>(s.argument.power)},
                  {"sign", s.argument.sign}}},
                {"text", describe(s)}};
}

std::string spec_csv(const FoxWrightSpec& s) {
    std::string out = "list,index,re,im,weight\n";
    auto add = [&](const char* name, const std::vector<ParamPair>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out += std::string(name) + "," + std::to_string(i) + "," + csv_num(v[i].value.real()) + "," +
                   csv_num(v[i].value.imag()) + "," + csv_num(v[i].weight) + "\n";
    };
    add("upper", s.upper);
    add("lower", s.lower);
    return out;
}

PowerWeightedOperand parse_operand(const std::string& text, Side side) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw FlagError("--operand expects mseries:... or kfunction:...");
    const std::string kind = text.substr(0, colon);
    std::map<std::string, std::string> kv;
    for (const auto& item : split(text.substr(colon + 1), ';')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw FlagError("--operand: expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    auto get = [&](const std::string& k, const char* dflt) -> std::string {
        auto it = kv.find(k);
        if (it != kv.end()) return it->second;
        if (!dflt) throw FlagError("--operand: missing " + k);
        return dflt;
    };
    PowerWeightedOperand f;
    f.sigma = parse_complex(get("sigma", "1"));
    const Complex c = parse_complex(get("c", "1")), mu = parse_complex(get("mu", "1"));
    if (c.imag() != 0 || mu.imag() != 0) throw FlagError("--operand: c and mu must be real");
    f.c = c.real();
    f.mu = mu.real();
    f.sign = side == Side::left ? +1 : -1;
    if (kv.count("sign")) f.sign = std::stoi(kv["sign"]) < 0 ? -1 : +1;
    const auto a = parse_list(get("a", "")), b = parse_list(get("b", ""));
    const Complex xi = parse_complex(get("xi", nullptr)), eta = parse_complex(get("eta", nullptr));
    if (kind == "mseries")
        f.inner = MSeries{a, b, xi, eta};
    else if (kind == "kfunction")
        f.inner = KFunction{a, b, xi, eta, parse_complex(get("nu", nullptr))};
    else
        throw FlagError("--operand kind must be mseries or kfunction");
    return f;
}

json report_json(const VerifyReport& r, bool records) {
    json j{{"id", r.id},
           {"claim", r.claim},
           {"cases", r.cases},
           {"skipped", r.skipped},
           {"max_error", static_cast<double>(r.max_error)},
           {"tolerance", static_cast<double>(r.tolerance)},
           {"pass", r.pass}};
    if (records) {
        json a = json::array();
        for (const auto& c : r.records)
            a.push_back(json{{"inputs", c.inputs}, {"lhs", cjson(c.lhs)}, {"rhs", cjson(c.rhs)},
                             {"error", static_cast<double>(c.error)}});
        j["records"] = std::move(a);
    }
    return j;
}

long max_terms_from_env() {
    const char* v = std::getenv("ML_FRACCALC_MAX_TERMS");
    if (!v || !*v) return kDefaultCap;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1) throw FlagError("ML_FRACCALC_MAX_TERMS must be a positive integer");
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mittag-Leffler family evaluation, operator application and identity checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string fn, op, mode = "integral", method = "series", suite, format = "json", out_path, operand, sweep;
    std::vector<std::string> zs;
    std::string grid;
    double tol = 0;
    std::uint64_t seed = 7;
    bool no_records = false, list_catalog = false;
    std::vector<std::string> param_values(kParamNames.size());

    auto common = [&](CLI::App* sub, bool with_params, bool with_grid) {
        sub->add_option("--tol", tol, "tolerance in (0, 1e-2]");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write output to this file");
        sub->add_option("--seed", seed, "seed for randomized parts");
        if (with_grid) {
            sub->add_option("--z", zs, "evaluation point(s), complex literal a+bi");
            sub->add_option("--grid", grid, "start:stop:count[:angle]");
        }
        if (with_params)
            for (std::size_t i = 0; i < kParamNames.size(); ++i) sub->add_option("--" + kParamNames[i], param_values[i]);
    };

    auto* eval = app.add_subcommand("eval", "evaluate a family on a z grid");
    eval->add_option("--fn", fn, "family id")->required();
    eval->add_option("--method", method, "series, hankel, mellin-barnes or asymptotic");
    common(eval, true, true);

    auto* reduce = app.add_subcommand("reduce", "print the Fox-Wright form of a family");
    reduce->add_option("--fn", fn, "family id")->required();
    common(reduce, true, false);

    auto* frac = app.add_subcommand("frac", "apply a fractional operator to a power-weighted series");
    frac->add_option("--op", op, "rl, saigo-left, saigo-right, saigo-maeda-left, saigo-maeda-right")->required();
    frac->add_option("--mode", mode, "integral or derivative")->check(CLI::IsMember({"integral", "derivative"}));
    frac->add_option("--operand", operand, "mseries:a=..;b=..;xi=..;eta=..;sigma=..;c=..;mu=.. (kfunction adds nu)")
        ->required();
    common(frac, true, true);

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", suite, "suite id or all");
    verify->add_flag("--no-records", no_records, "omit per-case records");
    verify->add_flag("--catalog", list_catalog, "print the identity catalog instead");
    common(verify, false, false);

    auto* table = app.add_subcommand("table", "CSV matrix over one parameter and a z grid");
    table->add_option("--fn", fn, "family id")->required();
    table->add_option("--sweep", sweep, "name=v1,v2,... parameter to vary")->required();
    common(table, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    if (sub == table && table->get_option("--format")->count() == 0) format = "csv";

    try {
        const long cap = max_terms_from_env();
        if (sub->get_option("--tol")->count() > 0 && !(tol > 0 && tol <= 1e-2))
            throw FlagError("--tol must lie in (0, 1e-2]");
        const Real rtol = tol > 0 ? static_cast<Real>(tol) : kDefaultTol;
        Params params;
        for (std::size_t i = 0; i < kParamNames.size(); ++i)
            if (auto* o = sub->get_option_no_throw("--" + kParamNames[i]); o && o->count() > 0)
                params.given[kParamNames[i]] = param_values[i];

        json job{{"command", sub->get_name()}};
        if (!fn.empty()) job["fn"] = fn;
        if (!op.empty()) {
            job["op"] = op;
            job["mode"] = mode;
            job["operand"] = operand;
        }
        if (!suite.empty()) job["suite"] = suite;
        json pj = json::object();
        for (const auto& [k, v] : params.given) pj[k] = v;
        if (!params.given.empty()) job["params"] = pj;
        if (!zs.empty()) job["z"] = zs;
        if (!grid.empty()) job["grid"] = grid;
        job["tol"] = sub == verify && tol == 0 ? json(nullptr) : json(static_cast<double>(rtol));
        job["format"] = format;
        json meta{{"version", kVersion}, {"seed", seed}, {"tolerances", {{"tol", static_cast<double>(rtol)}}}};
        const Output output{format, out_path};

        if (sub == eval) {
            const Family fam = make_family(fn, params);
            const auto f = evaluator(fam, method, rtol, cap);
            const auto grid_pts = make_grid(zs, grid);
            if (grid_pts.empty()) throw FlagError("eval needs --z or --grid");
            job["family"] = family_label(fam);
            job["method"] = method;
            std::vector<Row> rows;
            for (const Complex& z : grid_pts) rows.push_back(eval_point(f, z));
            if (format == "csv") {
                std::string text = "z_re,z_im,re,im,terms,status\n";
                for (const auto& r : rows) text += row_csv(r) + "\n";
                output.write(text);
            } else {
                json res = json::array();
                for (const auto& r : rows) res.push_back(row_json(r));
                output.write(json{{"job", job}, {"results", res}, {"meta", meta}}.dump(2) + "\n");
            }
            return 0;
        }

        if (sub == reduce) {
            const Family fam = make_family(fn, params);
            const FoxWrightSpec spec =
                std::visit([](const auto& x) { return reduce_to_fox_wright(x); }, fam);
            if (format == "csv") {
                output.write(spec_csv(spec));
            } else {
                json r = spec_json(spec);
                r["family"] = family_label(fam);
                output.write(json{{"job", job}, {"results", json::array({r})}, {"meta", meta}}.dump(2) + "\n");
            }
            return 0;
        }

        if (sub == frac) {
            const Mode m = mode == "derivative" ? Mode::derivative : Mode::integral;
            FracResult res;
            Side side = Side::left;
            if (op == "rl") {
                const PowerWeightedOperand f = parse_operand(operand, Side::left);
                res = rl_series(OperatorParams::rl(params.c("nu"), m), f.inner);
            } else if (op == "saigo-left" || op == "saigo-right") {
                side = op == "saigo-left" ? Side::left : Side::right;
                const PowerWeightedOperand f = parse_operand(operand, side);
                res = saigo_apply(OperatorParams::saigo(params.c("alpha"), params.c("beta"), params.c("gamma"), side, m), f);
            } else if (op == "saigo-maeda-left" || op == "saigo-maeda-right") {
                side = op == "saigo-maeda-left" ? Side::left : Side::right;
                const PowerWeightedOperand f = parse_operand(operand, side);
                res = saigo_maeda_apply(OperatorParams::saigo_maeda(params.c("alpha"), params.c("alpha2"), params.c("beta"),
                                                                    params.c("beta2"), params.c("gamma"), side, m),
                                        f);
            } else {
                throw FlagError("unknown --op '" + op + "'");
            }
            const auto pts = make_grid(zs, grid);
            std::vector<Row> rows;
            for (const Complex& z : pts)
                rows.push_back(eval_point([&](Complex w) { return res.value(w, rtol, cap); }, z));
            if (format == "csv") {
                std::string text = spec_csv(res.spec);
                if (!rows.empty()) {
                    text += "\nz_re,z_im,re,im,terms,status\n";
                    for (const auto& r : rows) text += row_csv(r) + "\n";
                }
                output.write(text);
            } else {
                json r{{"provenance", res.provenance},
                       {"coefficient", cjson(res.coefficient)},
                       {"exponent", cjson(res.exponent)},
                       {"psi", spec_json(res.spec)}};
                if (res.series) r["series"] = family_name(*res.series);
                if (!rows.empty()) {
                    json v = json::array();
                    for (const auto& row : rows) v.push_back(row_json(row));
                    r["values"] = v;
                }
                output.write(json{{"job", job}, {"results", json::array({r})}, {"meta", meta}}.dump(2) + "\n");
            }
            return 0;
        }

        if (sub == verify) {
            if (list_catalog) {
                json a = json::array();
                for (const auto& e : identity_catalog())
                    a.push_back(json{{"id", e.id},
                                     {"topic", e.topic},
                                     {"stated", e.stated},
                                     {"implemented", e.implemented},
                                     {"resolution", to_string(e.resolution)},
                                     {"evidence", e.evidence}});
                output.write(json{{"job", job}, {"results", a}, {"meta", meta}}.dump(2) + "\n");
                return 0;
            }
            if (suite.empty()) throw FlagError("verify needs --suite");
            VerifyOptions vo;
            vo.seed = seed;
            vo.tol = tol > 0 ? static_cast<Real>(tol) : 0;
            vo.max_terms = cap;
            std::vector<VerifyReport> reports;
            try {
                reports = run_suite(suite, vo);
            } catch (const std::invalid_argument& e) {
                throw FlagError(e.what());
            }
            bool pass = true;
            json tols = json::object();
            for (const auto& r : reports) {
                pass = pass && r.pass;
                tols[r.id] = static_cast<double>(r.tolerance);
            }
            meta["tolerances"] = tols;
            if (format == "csv") {
                std::string text = "id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,error,tolerance,pass\n";
                for (const auto& r : reports) {
                    if (no_records) {
                        text += r.id + ",," + ",,,," + csv_num(r.max_error) + "," + csv_num(r.tolerance) + "," +
                                (r.pass ? "true" : "false") + "\n";
                        continue;
                    }
                    for (const auto& c : r.records)
                        text += r.id + "," + csv_quote(c.inputs) + "," + csv_num(c.lhs.real()) + "," + csv_num(c.lhs.imag()) +
                                "," + csv_num(c.rhs.real()) + "," + csv_num(c.rhs.imag()) + "," + csv_num(c.error) + "," +
                                csv_num(r.tolerance) + "," + (c.error <= r.tolerance ? "true" : "false") + "\n";
                }
                output.write(text);
            } else {
                json res = json::array();
                for (const auto& r : reports) res.push_back(report_json(r, !no_records));
                json top{{"job", job}, {"results", res}, {"pass", pass}, {"meta", meta}};
                output.write(top.dump(2) + "\n");
            }
            for (const auto& r : reports)
                if (!r.pass)
                    std::cerr << "FAIL " << r.id << ": max error " << static_cast<double>(r.max_error) << " > "
                              << static_cast<double>(r.tolerance) << "\n";
            return pass ? 0 : 1;
        }

        if (sub == table) {
            const auto eq = sweep.find('=');
            if (eq == std::string::npos) throw FlagError("--sweep expects name=v1,v2,...");
            const std::string name = sweep.substr(0, eq);
            if (std::find(kParamNames.begin(), kParamNames.end(), name) == kParamNames.end())
                throw FlagError("--sweep: unknown parameter '" + name + "'");
            const auto values = split(sweep.substr(eq + 1), ',');
            if (values.empty()) throw FlagError("--sweep needs at least one value");
            const auto pts = make_grid(zs, grid);
            if (pts.empty()) throw FlagError("table needs --z or --grid");
            std::string text = name + "_re," + name + "_im,z_re,z_im,re,im,terms,status\n";
            json res = json::array();
            for (const auto& v : values) {
                Params p = params;
                p.given[name] = v;
                const Complex pv = parse_complex(v);
                const auto f = evaluator(make_family(fn, p), "series", rtol, cap);
                for (const Complex& z : pts) {
                    const Row r = eval_point(f, z);
                    text += csv_num(pv.real()) + "," + csv_num(pv.imag()) + "," + row_csv(r) + "\n";
                    json j = row_json(r);
                    j["param"] = cjson(pv);
                    res.push_back(j);
                }
            }
            if (format == "csv")
                output.write(text);
            else
                output.write(json{{"job", job}, {"results", res}, {"meta", meta}}.dump(2) + "\n");
            return 0;
        }
    } catch (const FlagError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
