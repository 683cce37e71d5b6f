// Command-line front end: compute windowed characters, run the verification
// suites, and expose the small building blocks (bott, nu, m, ext) as JSON.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "veronese/veronese.hpp"

namespace {

using namespace veronese;

// Shells eat minus signs, so negative parts may be written with a leading
// 'm': --lambda 3,m1 means (3,-1). Plain negatives work with '='.
Int parse_part(const std::string& token) {
    std::string t = token;
    bool neg = false;
    if (!t.empty() && (t[0] == 'm' || t[0] == 'M')) {
        neg = true;
        t.erase(0, 1);
    }
    if (t.empty()) throw CLI::ValidationError("weight", "empty part in weight list");
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw CLI::ValidationError("weight", "bad integer part '" + token + "'");
    }
    if (pos != t.size())
        throw CLI::ValidationError("weight", "bad integer part '" + token + "'");
    return neg ? -static_cast<Int>(v) : static_cast<Int>(v);
}

IntVec parse_weight(const std::string& csv) {
    IntVec out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string tok =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_part(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void check_desk_scale(Int n, Int d, bool allow_large) {
    if (allow_large) return;
    if (n < 1 || n > 10)
        throw DomainError("n=" + std::to_string(n) + " outside 1..10 (use --allow-large)");
    if (d < 2 || d > 6)
        throw DomainError("d=" + std::to_string(d) + " outside 2..6 (use --allow-large)");
}

void emit(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + out_path);
    f << bytes;
}

struct CharacterConfig {
    std::string target = "D0";
    Int n = 2, d = 2, l1max = 4, lnmin = 0;
    std::string format = "json";
    std::string out_path;
    int threads = 1;
    bool allow_large = false;
};

int run_character(const CharacterConfig& cfg) {
    check_desk_scale(cfg.n, cfg.d, cfg.allow_large);
    const WeightWindow w(cfg.n, cfg.l1max, cfg.lnmin);

    std::optional<Int> j;
    VirtualCharacter chr(cfg.n);
    if (cfg.target == "E") {
        chr = e_character(cfg.d, w, cfg.threads);
    } else if (cfg.target.size() >= 2 && cfg.target[0] == 'D') {
        const Int jj = parse_part(cfg.target.substr(1));
        if (jj < 0 || jj >= cfg.d)
            throw DomainError("target " + cfg.target + " needs 0 <= j < d");
        j = jj;
        chr = dj_character(jj, cfg.d, w, cfg.threads);
    } else {
        throw DomainError("target must be E or D0..D" + std::to_string(cfg.d - 1));
    }

    const MultiplicityTable table(cfg.target, cfg.n, cfg.d, j, std::move(chr));
    if (cfg.format == "json") {
        emit(to_json(table).dump() + "\n", cfg.out_path);
    } else if (cfg.format == "csv") {
        emit(to_csv(table.entries), cfg.out_path);
    } else {
        throw DomainError("format must be json or csv");
    }
    return 0;
}

struct VerifyConfig {
    std::string suite;
    Int n = 3, d = 2, l1max = 8, lnmin = -4;
    Int musize = 8, sizemax = 12, tailsize = 6;
    bool allow_large = false;
};

int run_verify(const VerifyConfig& cfg) {
    check_desk_scale(cfg.n, cfg.d, cfg.allow_large);
    SuiteResult res;
    if (cfg.suite == "d2-table") {
        res = suite_d2_table(cfg.n, cfg.l1max, cfg.lnmin);
    } else if (cfg.suite == "hooks") {
        res = suite_hooks(cfg.n, cfg.d, cfg.sizemax);
    } else if (cfg.suite == "stabilization") {
        res = suite_stabilization(cfg.n, cfg.d, cfg.musize);
    } else if (cfg.suite == "primitive-sum") {
        res = suite_primitive_sum(cfg.n, cfg.d, cfg.tailsize);
    } else if (cfg.suite == "ext-two-route") {
        res = suite_ext_two_route(cfg.n, cfg.d, cfg.musize, cfg.l1max, cfg.lnmin);
    } else if (cfg.suite == "det-exclusion") {
        res = suite_det_exclusion(cfg.n, cfg.d, cfg.musize);
    } else if (cfg.suite == "d0-two-route") {
        res = suite_d0_two_route(cfg.n, cfg.d, cfg.l1max, cfg.lnmin);
    } else {
        throw DomainError("unknown suite '" + cfg.suite + "'");
    }
    std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << ": " << res.detail << "\n";
    return res.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characters of the simple equivariant modules on "
                 "degree-d Veronese cones, with their supporting combinatorics"};
    app.require_subcommand(1);

    CharacterConfig ccfg;
    auto* character = app.add_subcommand(
        "character", "Windowed character of D0..D(d-1) or E (JSON or CSV)");
    character->add_option("--target", ccfg.target, "D0..D(d-1) or E")->required();
    character->add_option("--n", ccfg.n, "dimension n")->required();
    character->add_option("--d", ccfg.d, "Veronese degree d")->required();
    character->add_option("--l1max", ccfg.l1max, "upper bound on lambda_1")->required();
    character->add_option("--lnmin", ccfg.lnmin, "lower bound on lambda_n (m4 = -4)")
        ->required()
        ->transform([](std::string s) { return std::to_string(parse_part(s)); });
    character->add_option("--format", ccfg.format, "json|csv");
    character->add_option("--out", ccfg.out_path, "output file (default stdout)");
    character->add_option("--threads", ccfg.threads, "worker threads for the sweep");
    character->add_flag("--allow-large", ccfg.allow_large, "lift the desk-scale guards");

    VerifyConfig vcfg;
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", vcfg.suite,
                       "d2-table|hooks|stabilization|primitive-sum|ext-two-route|"
                       "det-exclusion|d0-two-route")
        ->required();
    verify->add_option("--n", vcfg.n, "dimension n");
    verify->add_option("--d", vcfg.d, "Veronese degree d");
    verify->add_option("--l1max", vcfg.l1max, "window upper bound");
    verify->add_option("--lnmin", vcfg.lnmin, "window lower bound (m4 = -4)")
        ->transform([](std::string s) { return std::to_string(parse_part(s)); });
    verify->add_option("--musize", vcfg.musize, "max |mu| for Ext/stabilization sweeps");
    verify->add_option("--sizemax", vcfg.sizemax, "max hook size");
    verify->add_option("--tailsize", vcfg.tailsize, "max tail size for string sums");
    verify->add_flag("--allow-large", vcfg.allow_large, "lift the desk-scale guards");

    std::string bott_mu;
    Int bott_n = 2, bott_r = 0;
    bool bott_large = false;
    auto* bott_cmd = app.add_subcommand("bott", "Cohomology recipe for S_mu(R) (x) Q^r");
    bott_cmd->add_option("--n", bott_n, "dimension n")->required();
    bott_cmd->add_option("--mu", bott_mu, "comma-separated mu of length n-1 (m2 = -2)");
    bott_cmd->add_option("--r", bott_r, "twist r (m3 = -3)")
        ->required()
        ->transform([](std::string s) { return std::to_string(parse_part(s)); });
    bott_cmd->add_flag("--allow-large", bott_large, "lift the desk-scale guards");

    std::string nu_mu;
    Int nu_n = 2, nu_d = 2;
    bool nu_large = false;
    auto* nu_cmd = app.add_subcommand("nu", "Stable plethysm multiplicity of mu");
    nu_cmd->add_option("--n", nu_n, "dimension n (mu has length n-1)")->required();
    nu_cmd->add_option("--d", nu_d, "Veronese degree d")->required();
    nu_cmd->add_option("--mu", nu_mu, "comma-separated mu of length n-1");
    nu_cmd->add_flag("--allow-large", nu_large, "lift the desk-scale guards");

    std::string m_lambda_str;
    Int m_n = 2, m_d = 2;
    bool m_large = false;
    auto* m_cmd = app.add_subcommand("m", "Alternating-sum multiplicity of lambda");
    m_cmd->add_option("--n", m_n, "dimension n")->required();
    m_cmd->add_option("--d", m_d, "Veronese degree d")->required();
    m_cmd->add_option("--lambda", m_lambda_str, "comma-separated lambda of length n")
        ->required();
    m_cmd->add_flag("--allow-large", m_large, "lift the desk-scale guards");

    std::string ext_mu;
    Int ext_n = 2, ext_d = 2, ext_l1max = 4, ext_lnmin = 0;
    bool ext_large = false;
    auto* ext_cmd = app.add_subcommand("ext", "Ext table of M_mu against the ring");
    ext_cmd->add_option("--n", ext_n, "dimension n")->required();
    ext_cmd->add_option("--d", ext_d, "Veronese degree d")->required();
    ext_cmd->add_option("--mu", ext_mu, "comma-separated partition mu of length n")->required();
    ext_cmd->add_option("--l1max", ext_l1max, "window upper bound")->required();
    ext_cmd->add_option("--lnmin", ext_lnmin, "window lower bound (m8 = -8)")
        ->required()
        ->transform([](std::string s) { return std::to_string(parse_part(s)); });
    ext_cmd->add_flag("--allow-large", ext_large, "lift the desk-scale guards");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*character) return run_character(ccfg);
        if (*verify) return run_verify(vcfg);
        if (*bott_cmd) {
            if (!bott_large && (bott_n < 1 || bott_n > 10))
                throw DomainError("n outside 1..10 (use --allow-large)");
            const IntVec mu = parse_weight(bott_mu);
            if (static_cast<Int>(mu.size()) != bott_n - 1)
                throw DomainError("--mu must have length n-1");
            std::cout << to_json(bott(mu, bott_r, bott_n)).dump() << "\n";
            return 0;
        }
        if (*nu_cmd) {
            check_desk_scale(nu_n, nu_d, nu_large);
            const IntVec mu = parse_weight(nu_mu);
            if (static_cast<Int>(mu.size()) != nu_n - 1)
                throw DomainError("--mu must have length n-1");
            std::cout << nu_stable(mu, nu_d) << "\n";
            return 0;
        }
        if (*m_cmd) {
            check_desk_scale(m_n, m_d, m_large);
            const IntVec lam = parse_weight(m_lambda_str);
            if (static_cast<Int>(lam.size()) != m_n)
                throw DomainError("--lambda must have length n");
            std::cout << m_lambda(DominantWeight(lam), m_d) << "\n";
            return 0;
        }
        if (*ext_cmd) {
            check_desk_scale(ext_n, ext_d, ext_large);
            const IntVec mu = parse_weight(ext_mu);
            if (static_cast<Int>(mu.size()) != ext_n)
                throw DomainError("--mu must have length n");
            const WeightWindow w(ext_n, ext_l1max, ext_lnmin);
            std::cout << to_json(ext_via_bott(DominantWeight(mu), ext_d, w)).dump() << "\n";
            return 0;
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
