#include <CLI11.hpp>

#include <residua/classify.hpp>
#include <residua/diagrams.hpp>
#include <residua/emit.hpp>
#include <residua/mfunction.hpp>
#include <residua/partitions.hpp>
#include <residua/residual.hpp>
#include <residua/verify.hpp>
#include <residua/weyl.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace residua;

// Bad invocation (malformed flag values, missing required combinations);
// mapped to exit code 2, distinct from domain errors (1) and invariant
// violations (3).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

QVec parse_vector(const std::string& text, const std::string& flag) {
    QVec out;
    try {
        for (const auto& piece : split_commas(text)) out.push_back(parse_rational(piece));
    } catch (const std::domain_error& e) {
        throw usage_error(flag + ": " + e.what());
    }
    return out;
}

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
    try {
        return parse_rational(text);
    } catch (const std::domain_error& e) {
        throw usage_error(flag + ": " + e.what());
    }
}

Partition parse_partition(const std::string& text) {
    Partition lam;
    for (const auto& piece : split_commas(text)) {
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("--partition: '" + text + "' is not a partition");
        lam.push_back(std::stol(piece));
        if (lam.back() <= 0 || (lam.size() > 1 && lam[lam.size() - 2] < lam.back()))
            throw usage_error("--partition: parts must be positive and non-increasing");
    }
    if (lam.empty()) throw usage_error("--partition: empty");
    return lam;
}

EmitFormat parse_format(const std::string& text) {
    try {
        return parse_emit_format(text);
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }
}

// "--type B --n 3" or "--type B3"; a rank inside --type must agree with --n.
std::string type_label_of(const std::string& type, int n) {
    if (type.empty()) throw usage_error("--type is required");
    if (type.size() == 1) {
        if (type.find_first_of("ABCD") != 0)
            throw usage_error("--type: single-letter types are A, B, C, D");
        if (n < 0) throw usage_error("--type " + type + " needs --n <rank>");
        return type + std::to_string(n);
    }
    TypeRank tr = parse_type_label(type);  // malformed labels -> domain error
    if (n >= 0 && tr.rank != n)
        throw usage_error("--type " + type + " conflicts with --n " + std::to_string(n));
    return type;
}

RootSystem resolve_root_system(const std::string& type, int n) {
    return make_root_system(type_label_of(type, n));
}

std::vector<GenericFamily> select_families(const RootSystem& rs,
                                           std::vector<GenericFamily> fams,
                                           const std::string& partition) {
    if (partition.empty()) return fams;
    std::string label = to_string(parse_partition(partition));
    std::vector<GenericFamily> out;
    for (auto& f : fams)
        if (f.label == label) out.push_back(std::move(f));
    if (out.empty())
        throw std::domain_error("no family labeled '" + label + "' in " + rs.label());
    return out;
}

QVec require_params(const RootSystem& rs, const std::string& kstr, const std::string& flag) {
    if (kstr.empty())
        throw usage_error(flag + " is required (" + std::to_string(rs.nparams()) +
                          " comma-separated rationals for " + rs.label() + ")");
    QVec k = parse_vector(kstr, flag);
    if (k.size() != rs.nparams())
        throw usage_error(flag + ": expected " + std::to_string(rs.nparams()) + " values for " +
                          rs.label() + ", got " + std::to_string(k.size()));
    return k;
}

int run_enumerate(const std::string& type, int n, const std::string& kstr,
                  const std::string& partition, EmitFormat fmt) {
    RootSystem rs = resolve_root_system(type, n);
    // known_families prints the reference representatives for the exceptional
    // types; `verify tables` re-derives them through the full solve.
    auto fams = select_families(rs, known_families(rs), partition);
    if (kstr.empty()) {
        std::cout << emit_families(rs, fams, fmt);
        return 0;
    }
    QVec k = require_params(rs, kstr, "--k");
    std::vector<std::pair<std::string, QVec>> values;
    for (const auto& fam : fams) {
        for (const auto& h : fam.singular)
            if (h.eval(k) == Rat(0))
                throw std::domain_error("family " + fam.label + " is not residual at k: " +
                                        to_string(h, rs.param_names) + " = 0");
        values.emplace_back(fam.label, make_dominant(rs, evaluate_point(fam.coords, k)).first);
    }
    std::cout << emit_evaluation(rs, k, values, fmt);
    return 0;
}

int run_regularity(const std::string& type, int n, EmitFormat fmt) {
    RootSystem rs = resolve_root_system(type, n);
    std::cout << emit_regularity(rs, known_families(rs), fmt);
    return 0;
}

int run_confluence(const std::string& type, int n, const std::string& kstr, EmitFormat fmt) {
    RootSystem rs = resolve_root_system(type, n);
    QVec k = require_params(rs, kstr, "--k");
    std::vector<GenericFamily> regular;
    for (auto& fam : known_families(rs)) {
        bool ok = true;
        for (const auto& h : fam.singular)
            if (h.eval(k) == Rat(0)) ok = false;
        if (ok) regular.push_back(std::move(fam));
    }
    std::cout << emit_confluence(rs, k, confluence_table(rs, regular, k), fmt);
    return 0;
}

int run_fibers(const std::string& type, int n, const std::string& mstr, EmitFormat fmt) {
    std::string label = type_label_of(type, n);
    TypeRank tr = parse_type_label(label);
    if (tr.type != RSType::B)
        throw std::domain_error("fibers: slope fibers are defined for type B (got " + label +
                                ")");
    if (mstr.empty()) throw usage_error("--m is required (a rational slope)");
    Rat m = parse_rat_flag(mstr, "--m");
    long rank = tr.rank;
    std::vector<std::pair<QVec, std::vector<std::string>>> rows;
    for (const auto& u : enumerate_distinguished_unipotent(rank, m)) {
        auto d = bala_carter(u, m);
        std::vector<std::string> fiber;
        for (const auto& lam : fiber_partitions(d, m, rank)) fiber.push_back(to_string(lam));
        rows.emplace_back(d.coordinates(), std::move(fiber));
    }
    std::cout << emit_fibers(rank, m, rows, fmt);
    return 0;
}

int run_mfun(const std::string& type, int n, const std::string& partition, const std::string& fstr,
             const std::string& basestr, EmitFormat fmt) {
    RootSystem rs = resolve_root_system(type, n);
    auto fams = select_families(rs, known_families(rs), partition);
    QVec fval;
    Rat q(2);
    if (!fstr.empty()) {
        fval = require_params(rs, fstr, "--f");
        if (!basestr.empty()) q = parse_rat_flag(basestr, "--base");
    } else if (!basestr.empty()) {
        throw usage_error("--base only applies together with --f");
    }
    std::vector<MfunEntry> entries;
    for (const auto& fam : fams) {
        MfunEntry entry;
        entry.label = fam.label;
        entry.shape = residual_shape(rs, fam.coords);
        FactoredRational M = build_m_function(rs, fam.coords);
        entry.canon = canonical_form(M);
        if (!fstr.empty()) entry.eval = evaluate_m(M, fval, q);
        entries.push_back(std::move(entry));
    }
    std::cout << emit_mfunctions(rs, entries, fval, q, fmt);
    return 0;
}

int run_count(const std::string& type, int n, const std::string& kstr, bool gcc, EmitFormat fmt) {
    RootSystem rs = resolve_root_system(type, n);
    QVec k = require_params(rs, kstr, "--k");
    if (gcc)
        std::cout << emit_gcc(rs, k, gcc_table(rs, k), fmt);
    else
        std::cout << emit_graded_count(rs, k, count_graded_ds(rs, k), fmt);
    return 0;
}

int run_affine(const std::string& type, int n, const std::string& lattice, const std::string& fstr,
               bool diagram, EmitFormat fmt) {
    AffineDatum datum = make_affine_datum(type_label_of(type, n), parse_lattice_tag(lattice));
    if (diagram) {
        std::cout << emit_spectral_diagram(spectral_diagram(datum), fmt);
        return 0;
    }
    if (fstr.empty())
        throw usage_error("--f is required (" + std::to_string(datum.params.size()) +
                          " comma-separated rationals for " + datum.label() + ")");
    QVec fval = parse_vector(fstr, "--f");
    std::cout << emit_affine_count(datum, fval, count_affine_ds(datum, fval), fmt);
    return 0;
}

int run_verify(const std::string& suite, int threads, EmitFormat fmt) {
    if (threads < 1) throw usage_error("--threads must be at least 1");
    std::vector<std::string> suites;
    if (suite.empty()) {
        if (fmt == EmitFormat::json)
            throw usage_error("--format json needs a named suite (one JSON document per run)");
        suites = verify_suite_names();
    } else {
        suites.push_back(suite);
    }
    for (const auto& name : suites)
        std::cout << emit_report(run_verify_suite(name, threads), fmt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"residual-point classifier for graded and affine Hecke algebras"};
    app.require_subcommand(0, 1);

    std::string type, kstr, mstr, partition, fstr, basestr, suite;
    std::string format = "md", lattice = "weight";
    int n = -1, threads = 1;
    bool gcc = false, diagram = false;

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", type, "root system: A/B/C/D with a rank (B3 or B with --n), F4, G2");
        cmd->add_option("--n", n, "rank, when --type is a bare letter");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: md or json (default md)");
    };

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "list the generic residual families of a type");
    add_type(cmd_enumerate);
    cmd_enumerate->add_option("--k", kstr, "evaluate each family at these parameter values");
    cmd_enumerate->add_option("--partition", partition, "restrict to one partition family");
    add_format(cmd_enumerate);

    auto* cmd_regularity =
        app.add_subcommand("regularity", "singular parameter hyperplanes of each family");
    add_type(cmd_regularity);
    add_format(cmd_regularity);

    auto* cmd_confluence =
        app.add_subcommand("confluence", "group family evaluations at k by Weyl orbit");
    add_type(cmd_confluence);
    cmd_confluence->add_option("--k", kstr, "parameter values a/b,c/d");
    add_format(cmd_confluence);

    auto* cmd_fibers =
        app.add_subcommand("fibers", "type-B weighted diagrams at slope m with their fibers");
    add_type(cmd_fibers);
    cmd_fibers->add_option("--m", mstr, "slope k2/k1 (rational)");
    add_format(cmd_fibers);

    auto* cmd_mfun = app.add_subcommand("mfun", "factored degree term of a family");
    add_type(cmd_mfun);
    cmd_mfun->add_option("--partition", partition, "restrict to one partition family");
    cmd_mfun->add_option("--f", fstr, "log-parameter values: evaluate the factored term");
    cmd_mfun->add_option("--base", basestr, "base q > 1 for the evaluation (default 2)");
    add_format(cmd_mfun);

    auto* cmd_count = app.add_subcommand("count", "discrete-series count at parameter values k");
    add_type(cmd_count);
    cmd_count->add_option("--k", kstr, "parameter values a/b,c/d");
    cmd_count->add_flag("--gcc", gcc, "group the count by generic central character");
    add_format(cmd_count);

    auto* cmd_affine =
        app.add_subcommand("affine", "per-vertex discrete-series breakdown of a spectral datum");
    add_type(cmd_affine);
    cmd_affine->add_option("--lattice", lattice, "weight or root (default weight)");
    cmd_affine->add_option("--f", fstr, "log-parameter values of the datum");
    cmd_affine->add_flag("--diagram", diagram, "print the weighted affine diagram instead");
    add_format(cmd_affine);

    auto* cmd_verify = app.add_subcommand("verify", "run a self-verification suite");
    cmd_verify->add_option("suite", suite, "tables, oracle, counts, mfun, or affine (default: all)");
    cmd_verify->add_option("--threads", threads, "run the suite's checks concurrently");
    add_format(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        EmitFormat fmt = parse_format(format);
        if (cmd_enumerate->parsed()) return run_enumerate(type, n, kstr, partition, fmt);
        if (cmd_regularity->parsed()) return run_regularity(type, n, fmt);
        if (cmd_confluence->parsed()) return run_confluence(type, n, kstr, fmt);
        if (cmd_fibers->parsed()) return run_fibers(type, n, mstr, fmt);
        if (cmd_mfun->parsed()) return run_mfun(type, n, partition, fstr, basestr, fmt);
        if (cmd_count->parsed()) return run_count(type, n, kstr, gcc, fmt);
        if (cmd_affine->parsed()) return run_affine(type, n, lattice, fstr, diagram, fmt);
        if (cmd_verify->parsed()) return run_verify(suite, threads, fmt);
        std::cout << app.help();
        return 0;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
