// wtrunc: batch driver for truncation-curve classification checks, plane
// intersections, graded characters, and exact curve fitting.

#include <CLI11.hpp>
#include <json.hpp>

#include "wtrunc/curve_io.hpp"
#include "wtrunc/characters.hpp"
#include "wtrunc/reports.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace wtrunc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

struct Range {
    int lo = 0, hi = 0;
};

// "2..5" or "3"
Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, dots));
            r.hi = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or N..M, got '" + s + "'");
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + s + "'");
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

// --curves config merged over the built-ins
int load_registry(curves::CurveRegistry& reg, const std::string& curves_file,
                  bool override_builtins) {
    if (curves_file.empty()) return kExitOk;
    try {
        auto loaded = curves::load_curves(slurp(curves_file));
        for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
        for (auto& c : loaded.curves) reg.add(std::move(c), override_builtins);
    } catch (const std::exception& e) {
        std::cerr << "error: " << curves_file << ": " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}

std::size_t term_budget_from_env() {
    if (const char* env = std::getenv("WTRUNC_TERM_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "warning: ignoring malformed WTRUNC_TERM_BUDGET\n";
    }
    return 0;  // library default
}

struct VerifyOptions {
    std::string theorems_csv = "T41,T42,T43";
    std::string m_range = "2..4";
    std::string n_range = "1..4";
    std::string curves_file;
    bool override_builtins = false;
    std::string out_dir;
    std::string format = "json";
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    bool reconcile = false;
};

int cmd_verify(const VerifyOptions& opt) {
    Range mr, nr;
    std::vector<theorems::TheoremId> ids;
    try {
        mr = parse_range(opt.m_range);
        nr = parse_range(opt.n_range);
        std::stringstream ss(opt.theorems_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(theorems::theorem_from_name(tok));
        if (ids.empty()) throw std::invalid_argument("no theorems selected");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    curves::CurveRegistry reg;
    if (int rc = load_registry(reg, opt.curves_file, opt.override_builtins)) return rc;

    struct Cell {
        theorems::TheoremId id;
        int m, n;
    };
    std::vector<Cell> cells;
    for (auto id : ids)
        for (int m = mr.lo; m <= mr.hi; ++m)
            for (int n = nr.lo; n <= nr.hi; ++n) cells.push_back({id, m, n});

    auto run_cell = [&](const Cell& cell) {
        std::vector<theorems::VerificationEntry> out =
            theorems::verify_theorem(cell.id, cell.m, cell.n, reg);
        if (cell.id == theorems::TheoremId::T43 && cell.m != cell.n && cell.m >= 1 &&
            cell.n >= 1)
            out.push_back(theorems::verify_classification(cell.m, cell.n));
        return out;
    };

    std::vector<theorems::VerificationEntry> entries;
    if (opt.jobs <= 1) {
        for (const auto& cell : cells)
            for (auto& e : run_cell(cell)) entries.push_back(std::move(e));
    } else {
        std::vector<std::future<std::vector<theorems::VerificationEntry>>> futs;
        futs.reserve(cells.size());
        for (const auto& cell : cells)
            futs.push_back(std::async(std::launch::async, run_cell, cell));
        for (auto& f : futs)
            for (auto& e : f.get()) entries.push_back(std::move(e));
    }
    // deterministic order regardless of worker count
    std::stable_sort(entries.begin(), entries.end(),
                     [](const theorems::VerificationEntry& a,
                        const theorems::VerificationEntry& b) {
                         return std::tie(a.theorem, a.m, a.n, a.item) <
                                std::tie(b.theorem, b.m, b.n, b.item);
                     });

    std::vector<theorems::ReconciliationReport> recon;
    if (opt.reconcile)
        for (int m = std::max(mr.lo, 2); m <= mr.hi; ++m)
            for (int n = std::max(nr.lo, 1); n <= nr.hi; ++n)
                recon.push_back(theorems::reconcile_lambda(m, n));

    bool any_fail = false;
    for (const auto& e : entries) any_fail = any_fail || e.any_fail();

    auto render = [&](const std::vector<theorems::VerificationEntry>& es) {
        if (opt.format == "csv") return reports::verification_csv(es);
        if (opt.format == "text") return reports::verification_text(es);
        return reports::verification_json(es);
    };
    std::string ext = opt.format == "csv" ? ".csv" : (opt.format == "text" ? ".txt" : ".json");

    if (opt.out_dir.empty()) {
        std::cout << render(entries);
        if (opt.reconcile) {
            if (opt.format == "csv")
                std::cout << reports::reconciliation_csv(recon);
            else if (opt.format == "text")
                std::cout << reports::reconciliation_text(recon);
            else
                std::cout << reports::reconciliation_json(recon);
        }
    } else {
        try {
            fs::create_directories(opt.out_dir);
            for (auto id : ids) {
                std::vector<theorems::VerificationEntry> sub;
                for (const auto& e : entries)
                    if (e.theorem == theorems::theorem_name(id)) sub.push_back(e);
                write_file(fs::path(opt.out_dir) / ("verify_" + theorems::theorem_name(id) + ext),
                           render(sub));
            }
            if (opt.reconcile) {
                std::string body = opt.format == "csv"
                                       ? reports::reconciliation_csv(recon)
                                       : (opt.format == "text"
                                              ? reports::reconciliation_text(recon)
                                              : reports::reconciliation_json(recon));
                write_file(fs::path(opt.out_dir) / ("reconcile" + ext), body);
            }
            nlohmann::ordered_json manifest;
            manifest["command"] = "verify";
            manifest["theorems"] = opt.theorems_csv;
            manifest["m"] = opt.m_range;
            manifest["n"] = opt.n_range;
            manifest["curves"] = opt.curves_file;
            manifest["format"] = opt.format;
            manifest["seed"] = opt.seed;
            write_file(fs::path(opt.out_dir) / "manifest.json", manifest.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadInput;
        }
    }
    return any_fail ? kExitFail : kExitOk;
}

struct IntersectOptions {
    std::string a, b;
    std::string curves_file;
    bool override_builtins = false;
    std::string out_dir;
    std::string format = "json";
};

int cmd_intersect(const IntersectOptions& opt) {
    curves::CurveRegistry reg;
    if (int rc = load_registry(reg, opt.curves_file, opt.override_builtins)) return rc;
    const curves::TruncationCurve* a = reg.find(opt.a);
    const curves::TruncationCurve* b = reg.find(opt.b);
    if (!a || !b) {
        std::cerr << "error: unknown curve name " << (a ? opt.b : opt.a) << "\n";
        return kExitBadInput;
    }
    reports::IntersectionReport rep;
    rep.curve_a = a->name;
    rep.curve_b = b->name;
    try {
        rep.result = intersect::intersect_curves(*a, *b);
    } catch (const intersect::DegenerateOverlap& e) {
        std::cerr << "error: DegenerateOverlap: " << e.what() << "\n";
        return kExitBadInput;
    }
    rep.records = intersect::filter_points(rep.result.points, *a, *b);

    std::string body = opt.format == "csv"
                           ? reports::intersection_csv(rep)
                           : (opt.format == "text" ? reports::intersection_text(rep)
                                                   : reports::intersection_json(rep));
    if (opt.out_dir.empty()) {
        std::cout << body;
    } else {
        try {
            fs::create_directories(opt.out_dir);
            std::string ext =
                opt.format == "csv" ? ".csv" : (opt.format == "text" ? ".txt" : ".json");
            write_file(fs::path(opt.out_dir) / ("intersect_" + opt.a + "_" + opt.b + ext), body);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadInput;
        }
    }
    return kExitOk;
}

struct CharOptions {
    int n = 1;
    int weight = 13;
    bool oracle = false;
    std::uint64_t term_budget = 0;
    std::string out_dir;
    std::string format = "json";
};

int cmd_char(const CharOptions& opt) {
    if (opt.n < 1 || opt.weight < 0) {
        std::cerr << "error: need n >= 1 and weight >= 0\n";
        return kExitBadInput;
    }
    std::size_t budget = opt.term_budget ? static_cast<std::size_t>(opt.term_budget)
                                         : term_budget_from_env();
    reports::CharacterReport rep;
    rep.n = opt.n;
    rep.weight = opt.weight;
    rep.free_even = chars::free_character(chars::GeneratorProfile::all_even_from_2(), opt.weight);
    int rc = kExitOk;
    try {
        rep.orbifold = chars::orbifold_character(opt.n, opt.weight, budget);
        rep.discrepancy = chars::first_discrepancy(rep.orbifold, rep.free_even);
    } catch (const chars::ResourceError& e) {
        rep.partial = true;
        rep.partial_reason = e.what();
        rep.orbifold = chars::QSeries(opt.weight);
        rc = kExitResource;
    }
    if (opt.oracle && !rep.partial) {
        for (int d = 0; d <= opt.weight; ++d) {
            try {
                rep.oracle.push_back(chars::brute_force_dim(opt.n, d));
            } catch (const chars::ResourceError& e) {
                rep.partial = true;
                rep.partial_reason = e.what();
                rc = kExitResource;
                break;
            }
        }
    }
    std::string body = opt.format == "csv"
                           ? reports::character_csv(rep)
                           : (opt.format == "text" ? reports::character_text(rep)
                                                   : reports::character_json(rep));
    if (opt.out_dir.empty()) {
        std::cout << body;
    } else {
        try {
            fs::create_directories(opt.out_dir);
            std::string ext =
                opt.format == "csv" ? ".csv" : (opt.format == "text" ? ".txt" : ".json");
            write_file(fs::path(opt.out_dir) /
                           ("char_n" + std::to_string(opt.n) + "_w" + std::to_string(opt.weight) +
                            ext),
                       body);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadInput;
        }
    }
    return rc;
}

struct FitOptions {
    std::string points_file;
    int num_deg = 6, den_deg = 6;
    std::string name = "fitted";
    std::string out_file;
};

int cmd_fit(const FitOptions& opt) {
    try {
        nlohmann::json doc = nlohmann::json::parse(slurp(opt.points_file));
        std::string param = doc.value("param", "t");
        std::string name = doc.value("name", opt.name);
        std::string family = doc.value("family", "");
        std::map<std::string, int> indices;
        if (doc.contains("indices"))
            for (auto it = doc["indices"].begin(); it != doc["indices"].end(); ++it)
                if (it.value().is_number_integer()) indices[it.key()] = it.value().get<int>();
        if (!doc.contains("points") || !doc["points"].is_array())
            throw std::runtime_error("points file needs a points array");
        std::vector<std::tuple<Rat, Rat, Rat>> pts;
        for (const auto& p : doc["points"])
            pts.emplace_back(Rat::parse(p.at("t").get<std::string>()),
                             Rat::parse(p.at("c").get<std::string>()),
                             Rat::parse(p.at("lambda").get<std::string>()));
        curves::FitBounds bounds{opt.num_deg, opt.den_deg, opt.num_deg, opt.den_deg};
        curves::TruncationCurve fitted =
            curves::fit_curve(name, param, pts, bounds, family, indices);
        std::string body = curves::serialize_curves({fitted});
        if (opt.out_file.empty())
            std::cout << body;
        else
            write_file(opt.out_file, body);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

struct ReconcileOptions {
    int m = 2, n = 1;
    std::string format = "text";
};

int cmd_reconcile(const ReconcileOptions& opt) {
    try {
        std::vector<theorems::ReconciliationReport> reps{theorems::reconcile_lambda(opt.m, opt.n)};
        if (opt.format == "csv")
            std::cout << reports::reconciliation_csv(reps);
        else if (opt.format == "json")
            std::cout << reports::reconciliation_json(reps);
        else
            std::cout << reports::reconciliation_text(reps);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact truncation-curve classification and character toolkit"};
    app.require_subcommand(1);

    VerifyOptions vo;
    CLI::App* verify = app.add_subcommand("verify", "run classification checks over an (m, n) grid");
    verify->add_option("--theorems", vo.theorems_csv, "comma list from T41,T42,T43");
    verify->add_option("--m", vo.m_range, "m range, e.g. 2..5");
    verify->add_option("--n", vo.n_range, "n range, e.g. 1..4");
    verify->add_option("--curves", vo.curves_file, "curve-config JSON with partner curves");
    verify->add_flag("--override-builtins", vo.override_builtins,
                     "let config curves replace same-named built-ins (cross-validation)");
    verify->add_option("--out", vo.out_dir, "report directory (stdout when absent)");
    verify->add_option("--format", vo.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--jobs", vo.jobs, "grid worker count");
    verify->add_option("--seed", vo.seed, "seed recorded in the manifest");
    verify->add_flag("--reconcile", vo.reconcile, "also emit the coupling reconciliation report");

    IntersectOptions io;
    CLI::App* isect = app.add_subcommand("intersect", "intersect two registered curves");
    isect->add_option("--a", io.a, "first curve name")->required();
    isect->add_option("--b", io.b, "second curve name")->required();
    isect->add_option("--curves", io.curves_file, "curve-config JSON");
    isect->add_flag("--override-builtins", io.override_builtins);
    isect->add_option("--out", io.out_dir, "report directory (stdout when absent)");
    isect->add_option("--format", io.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CharOptions co;
    CLI::App* chr = app.add_subcommand("char", "orbifold vs free graded characters");
    chr->add_option("--n", co.n, "orthogonal rank parameter (2n bosons)")->required();
    chr->add_option("--weight", co.weight, "truncation weight");
    chr->add_flag("--oracle", co.oracle, "add the brute-force oracle column");
    chr->add_option("--term-budget", co.term_budget,
                    "Laurent term budget (overrides WTRUNC_TERM_BUDGET)");
    chr->add_option("--out", co.out_dir, "report directory (stdout when absent)");
    chr->add_option("--format", co.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    FitOptions fo;
    CLI::App* fit = app.add_subcommand("fit", "fit a curve through exact samples");
    fit->add_option("--points", fo.points_file, "JSON file with {param?, name?, points:[{t,c,lambda}]}")
        ->required();
    fit->add_option("--num-deg", fo.num_deg, "numerator degree bound");
    fit->add_option("--den-deg", fo.den_deg, "denominator degree bound");
    fit->add_option("--out", fo.out_file, "output curve-config file (stdout when absent)");

    ReconcileOptions ro;
    CLI::App* rec = app.add_subcommand("reconcile", "compare parametrized vs printed couplings");
    rec->add_option("--m", ro.m)->required();
    rec->add_option("--n", ro.n)->required();
    rec->add_option("--format", ro.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    if (verify->parsed()) return cmd_verify(vo);
    if (isect->parsed()) return cmd_intersect(io);
    if (chr->parsed()) return cmd_char(co);
    if (fit->parsed()) return cmd_fit(fo);
    if (rec->parsed()) return cmd_reconcile(ro);
    return kExitBadInput;
}
