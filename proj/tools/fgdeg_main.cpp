// Command-line surface for the degree-set solver: membership queries with
// evidence, exponent tables, residue enumeration, endomorphism inspection,
// and the verification suites. Data goes to stdout (or --out FILE),
// diagnostics to stderr. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fgdeg/congruence.hpp"
#include "fgdeg/ktheory.hpp"
#include "fgdeg/verify.hpp"

using nlohmann::json;

namespace {

enum class Format { Human, Json, Csv };

struct Options {
    Format format = Format::Human;
    std::uint64_t scan_guard = fg::kDefaultScanGuard;
    unsigned jobs = 1;
    std::string out_file;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.out_file.empty())
        return std::cout;
    file.open(opt.out_file);
    if (!file)
        throw CLI::ValidationError("--out", "cannot open " + opt.out_file);
    return file;
}

// Accepts "a" or "a/b" with unbounded integers; rejects b = 0 and
// normalizes to lowest terms.
mpq_class parse_rational(const std::string& text) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("malformed rational: '" + text + "'");
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    mpz_class nz, dz;
    if (num.empty() || den.empty() || nz.set_str(num, 10) != 0 || dz.set_str(den, 10) != 0)
        throw bad();
    if (dz == 0)
        throw bad();
    mpq_class q(nz, dz);
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

json valuation_json(const fg::Valuation& v) {
    if (v.is_infinite())
        return "inf";
    return v.value();
}

json local_verdict_json(const fg::CongruenceVerdict& v) {
    json levels = json::array();
    for (const auto& lv : v.per_level)
        levels.push_back({{"m", lv.m},
                          {"product_val", valuation_json(lv.product_val)},
                          {"modulus_val", lv.modulus_val},
                          {"satisfied", lv.satisfied}});
    return {{"p", v.prime}, {"overall", v.overall}, {"levels", levels}};
}

json endo_json(const fg::EndoVerdict& ev) {
    json coeffs = json::array();
    for (const auto& c : ev.phi.coeffs())
        coeffs.push_back(rational_str(c));
    return {{"phi", coeffs},
            {"integral", ev.integral},
            {"parity_ok", ev.parity_ok},
            {"in_FG", ev.in_FG}};
}

void print_local_human(std::ostream& os, const fg::CongruenceVerdict& v) {
    os << "  p=" << v.prime << ": " << (v.overall ? "ok" : "FAIL") << "\n";
    for (const auto& lv : v.per_level)
        os << "    C_" << lv.m << ": |product|_p = " << lv.product_val
           << ", need >= " << lv.modulus_val << "  "
           << (lv.satisfied ? "ok" : "FAIL") << "\n";
}

int cmd_check(const Options& opt, const std::string& k_text, std::uint64_t n,
              std::optional<std::uint64_t> p, std::uint64_t ktheory_bound) {
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    mpq_class k = parse_rational(k_text);

    if (p) {
        if (!fg::is_prime(*p))
            throw std::runtime_error("p must be prime");
        fg::CongruenceVerdict direct = fg::fg_local_direct(k, n, *p);
        bool closed = fg::fg_local_closed(k, n, *p);
        if (closed != direct.overall)
            throw fg::MathCheckError("closed form disagrees with direct congruences");
        if (opt.format == Format::Json) {
            json j = {{"k", rational_str(k)},
                      {"n", n},
                      {"member", direct.overall},
                      {"evidence", json::array({local_verdict_json(direct)})}};
            os << j.dump() << "\n";
        } else {
            os << "k=" << rational_str(k) << " n=" << n << " p=" << *p
               << " member: " << (direct.overall ? "true" : "false") << "\n";
            print_local_human(os, direct);
        }
        return 0;
    }

    fg::GlobalVerdict gv = fg::fg_global_verdict(k, n);
    // Second route for integers (asserts agreement internally).
    fg::fg_global(k, n);
    std::optional<fg::EndoVerdict> ev;
    if (n <= ktheory_bound) {
        ev = fg::fg_ktheory(k, n);
        if (k.get_den() == 1 && ev->in_FG != gv.member)
            throw fg::MathCheckError("K-theory verdict disagrees with congruences");
    }

    if (opt.format == Format::Json) {
        json evidence = json::array();
        for (const auto& pv : gv.per_prime)
            evidence.push_back(local_verdict_json(pv));
        json j = {{"k", rational_str(k)},
                  {"n", n},
                  {"member", gv.member},
                  {"evidence", evidence}};
        if (ev)
            j["ktheory"] = endo_json(*ev);
        os << j.dump() << "\n";
    } else {
        os << "k=" << rational_str(k) << " n=" << n
           << " member: " << (gv.member ? "true" : "false") << "\n";
        for (const auto& pv : gv.per_prime)
            print_local_human(os, pv);
        if (ev) {
            os << "  K-theory: phi(x) = " << ev->phi.to_string() << ", "
               << (ev->integral ? "integral" : "not integral");
            if (ev->integral)
                os << ", " << (ev->parity_ok ? "parity ok" : "parity fails");
            os << ", " << (ev->in_FG ? "in FG" : "not in FG") << "\n";
        }
    }
    return 0;
}

int cmd_table(const Options& opt, std::uint64_t pmax, std::uint64_t nmax) {
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    std::vector<fg::ExponentRow> rows;
    for (std::uint64_t p : fg::primes_up_to(pmax))
        for (std::uint64_t n = 1; n <= nmax; ++n)
            rows.push_back(fg::exponent_row(p, n));

    switch (opt.format) {
        case Format::Json: {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"p", r.p},
                               {"n", r.n},
                               {"e", r.e},
                               {"f", r.f},
                               {"status", fg::to_string(r.status)}});
            os << arr.dump() << "\n";
            break;
        }
        case Format::Csv:
        case Format::Human:
            os << "p,n,e,f,status\n";
            for (const auto& r : rows)
                os << r.p << "," << r.n << "," << r.e << "," << r.f << ","
                   << fg::to_string(r.status) << "\n";
            break;
    }
    return 0;
}

int cmd_phi(const Options& opt, const std::string& k_text, std::uint64_t n) {
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    mpq_class k = parse_rational(k_text);
    fg::EndoVerdict ev = fg::fg_ktheory(k, n);
    if (opt.format == Format::Json) {
        json j = endo_json(ev);
        j["k"] = rational_str(k);
        j["n"] = n;
        os << j.dump() << "\n";
    } else {
        os << ev.phi.to_string() << ", "
           << (ev.integral ? "integral" : "not integral");
        if (ev.integral)
            os << ", " << (ev.parity_ok ? "parity ok" : "parity fails");
        os << ", " << (ev.in_FG ? "in FG" : "not in FG") << "\n";
    }
    return 0;
}

int cmd_residues(const Options& opt, std::uint64_t n, const std::string& modulus_text) {
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    mpz_class M;
    if (!modulus_text.empty()) {
        if (M.set_str(modulus_text, 10) != 0 || M < 1)
            throw std::runtime_error("malformed modulus: '" + modulus_text + "'");
    } else {
        mpz_fac_ui(M.get_mpz_t(), static_cast<unsigned long>(2 * n));
        if (M > opt.scan_guard)
            M = fg::minimal_sound_modulus(n);  // smallest sound fallback
    }
    auto residues = fg::fg_residues(n, M, opt.scan_guard, opt.jobs);

    switch (opt.format) {
        case Format::Json: {
            json j = {{"n", n}, {"modulus", M.get_str()}, {"residues", residues}};
            os << j.dump() << "\n";
            break;
        }
        case Format::Csv:
            os << "residue\n";
            for (auto r : residues)
                os << r << "\n";
            break;
        case Format::Human:
            os << "modulus " << M.get_str() << "\n";
            for (auto r : residues)
                os << r << "\n";
            break;
    }
    return 0;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    fg::VerifyConfig cfg{opt.scan_guard, opt.jobs};
    std::vector<fg::VerifyOutcome> outcomes;
    if (suite == "all")
        outcomes = fg::verify_all(cfg);
    else if (suite == "exponent")
        outcomes.push_back(fg::verify_exponent(cfg));
    else if (suite == "congruence")
        outcomes.push_back(fg::verify_congruence(cfg));
    else if (suite == "ktheory")
        outcomes.push_back(fg::verify_ktheory(cfg));
    else
        throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");

    bool all_ok = true;
    if (opt.format == Format::Json) {
        json arr = json::array();
        for (const auto& o : outcomes) {
            json fails = json::array();
            for (const auto& f : o.failures)
                fails.push_back({{"inputs", f.inputs},
                                 {"expected", f.expected},
                                 {"got", f.got}});
            json skips = json::array();
            for (const auto& sk : o.skipped)
                skips.push_back({{"what", sk.what}, {"reason", sk.reason}});
            arr.push_back({{"suite", o.suite},
                           {"cases_run", o.cases_run},
                           {"failures", fails},
                           {"skipped", skips}});
            all_ok = all_ok && o.ok();
        }
        os << arr.dump() << "\n";
    } else {
        for (const auto& o : outcomes) {
            os << o.suite << ": " << o.cases_run << " cases, "
               << o.failures.size() << " failures, " << o.skipped.size()
               << " skipped\n";
            for (const auto& f : o.failures)
                os << "  FAIL " << f.inputs << ": expected " << f.expected
                   << ", got " << f.got << "\n";
            for (const auto& sk : o.skipped)
                os << "  skip " << sk.what << ": " << sk.reason << "\n";
            all_ok = all_ok && o.ok();
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for realizable self-map degree sets of "
                 "quaternionic projective spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::map<std::string, Format> fmt_map{
        {"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case));
    app.add_option("--scan-guard", opt.scan_guard,
                   "Max residue classes a brute-force scan may enumerate");
    app.add_option("--jobs", opt.jobs, "Worker threads for scans");
    app.add_option("--out", opt.out_file, "Write data output to FILE instead of stdout");

    std::string k_text;
    std::uint64_t n = 1;
    std::uint64_t p_opt = 0;
    std::uint64_t ktheory_bound = 8;
    auto* check = app.add_subcommand("check", "Decide membership of k in FG_n");
    check->add_option("k", k_text, "Degree, integer or a/b")->required();
    check->add_option("n", n, "Level")->required()->check(CLI::PositiveNumber);
    check->add_option("--p", p_opt, "Localize at a single prime");
    check->add_option("--ktheory-bound", ktheory_bound,
                      "Run the K-theory cross-check for n up to this bound");

    std::uint64_t pmax = 13, nmax = 12;
    auto* table = app.add_subcommand("table", "Exponent table e(p,n), f(p,n)");
    table->add_option("--pmax", pmax, "Largest prime")->check(CLI::PositiveNumber);
    table->add_option("--nmax", nmax, "Largest level")->check(CLI::PositiveNumber);

    std::string phi_k;
    std::uint64_t phi_n = 1;
    auto* phi = app.add_subcommand("phi", "Inspect the Adams-commuting endomorphism");
    phi->add_option("k", phi_k, "Degree, integer or a/b")->required();
    phi->add_option("n", phi_n, "Level")->required()->check(CLI::PositiveNumber);

    std::uint64_t res_n = 1;
    std::string modulus_text;
    auto* residues = app.add_subcommand("residues", "Solution residues of C_1..C_n");
    residues->add_option("--n", res_n, "Level")->required()->check(CLI::PositiveNumber);
    residues->add_option("--modulus", modulus_text, "Scan modulus (default (2n)!)");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("suite", suite, "exponent|congruence|ktheory|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return cmd_check(opt, k_text, n,
                             p_opt ? std::optional<std::uint64_t>(p_opt) : std::nullopt,
                             ktheory_bound);
        if (table->parsed())
            return cmd_table(opt, pmax, nmax);
        if (phi->parsed())
            return cmd_phi(opt, phi_k, phi_n);
        if (residues->parsed())
            return cmd_residues(opt, res_n, modulus_text);
        if (verify->parsed())
            return cmd_verify(opt, suite);
    } catch (const fg::MathCheckError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
