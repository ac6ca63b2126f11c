#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockshift/bounds.hpp"
#include "blockshift/errors.hpp"
#include "blockshift/io.hpp"
#include "blockshift/radius.hpp"
#include "blockshift/shift.hpp"
#include "blockshift/singular.hpp"
#include "blockshift/version.hpp"

namespace {

using blockshift::BlockShift;
using blockshift::ComplexMatrix;
using nlohmann::json;

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };
LogLevel g_log = LogLevel::Quiet;

void init_log() {
    const char* v = std::getenv("BLOCKSHIFT_LOG");
    if (v == nullptr) return;
    const std::string s(v);
    if (s == "info") g_log = LogLevel::Info;
    else if (s == "debug") g_log = LogLevel::Debug;
    else g_log = LogLevel::Quiet;
}

void log_info(const std::string& m) {
    if (g_log >= LogLevel::Info) std::cerr << "[info] " << m << "\n";
}

void log_debug(const std::string& m) {
    if (g_log >= LogLevel::Debug) std::cerr << "[debug] " << m << "\n";
}

// 12 significant digits; integral values keep a trailing ".0" so numbers
// stay visibly floating-point.
std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('n') == std::string::npos)
        s += ".0";
    return s;
}

void kv(const std::string& key, const std::string& value) {
    std::printf("%-18s = %s\n", key.c_str(), value.c_str());
}

void kv(const std::string& key, double value) { kv(key, fmt12(value)); }

std::string join_dims(const std::vector<int>& dims) {
    std::string s;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i > 0) s += ' ';
        s += std::to_string(dims[i]);
    }
    return s;
}

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json vector_json(const ComplexMatrix& v) {
    json out = json::array();
    for (int i = 0; i < v.rows(); ++i)
        out.push_back(json::array({v(i, 0).real(), v(i, 0).imag()}));
    return out;
}

json input_json(const std::string& path, const blockshift::BlockShiftDocument& doc,
                const BlockShift& bs) {
    json in{{"path", path}, {"k", bs.k()}, {"dims", bs.dims()}};
    in["name"] = doc.name ? json(*doc.name) : json(nullptr);
    return in;
}

struct LoadedShift {
    blockshift::BlockShiftDocument doc;
    BlockShift bs;
};

LoadedShift load_shift(const std::string& path) {
    blockshift::BlockShiftDocument doc = blockshift::load_blockshift_document(path);
    BlockShift bs = blockshift::to_blockshift(doc);
    log_info("loaded " + path + ": k = " + std::to_string(bs.k()) + ", dims = " +
             join_dims(bs.dims()));
    return LoadedShift{std::move(doc), std::move(bs)};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int run_bounds(const std::string& path, bool as_json, double tol_rank) {
    const LoadedShift ls = load_shift(path);
    const blockshift::BoundsReport r = blockshift::bounds_report(ls.bs, tol_rank);
    log_debug("bounds_report done: w_A = " + fmt12(r.w_A));

    if (as_json) {
        json rep{{"version", blockshift::kVersion},
                 {"command", "bounds"},
                 {"input", input_json(path, ls.doc, ls.bs)},
                 {"w_A", r.w_A},
                 {"w_upper", r.w_upper},
                 {"w_lower", r.w_lower},
                 {"coarse_upper", r.coarse_upper},
                 {"coarse_lower", r.coarse_lower},
                 {"M", r.M},
                 {"m_min", r.m_min},
                 {"gamma_applicable", r.gamma_applicable},
                 {"gamma_bound", r.gamma_bound ? json(*r.gamma_bound) : json(nullptr)},
                 {"gamma_reason", r.gamma_reason},
                 {"tolerances", json{{"tol_rank", tol_rank}}}};
        emit(rep);
        return 0;
    }
    if (ls.doc.name) kv("name", *ls.doc.name);
    kv("k", std::to_string(ls.bs.k()));
    kv("dims", join_dims(ls.bs.dims()));
    kv("w(A)", r.w_A);
    kv("w(A')", r.w_upper);
    kv("w(A'')", r.w_lower);
    kv("coarse_upper", r.coarse_upper);
    kv("coarse_lower", r.coarse_lower);
    kv("M", r.M);
    kv("m", r.m_min);
    kv("gamma_applicable", r.gamma_applicable ? "true" : "false");
    if (r.gamma_bound) kv("gamma_bound", *r.gamma_bound);
    kv("gamma_reason", r.gamma_reason);
    kv("tol_rank", tol_rank);
    return 0;
}

int run_certify(const std::string& which, const std::string& path, bool as_json,
                double tol_cert, std::uint64_t seed) {
    const LoadedShift ls = load_shift(path);
    const bool upper = (which == "upper");
    const blockshift::EqualityCertificate cert =
        upper ? blockshift::certify_upper_equality(ls.bs, tol_cert, seed)
              : blockshift::certify_lower_equality(ls.bs, tol_cert, seed);
    const double w_a = blockshift::numerical_radius_blockshift(ls.bs).value;
    const double w_comp =
        upper ? blockshift::upper_bound(ls.bs) : blockshift::lower_bound(ls.bs);
    const char* comp_label = upper ? "w(A')" : "w(A'')";
    log_debug("certificate status: " + blockshift::to_string(cert.status));

    if (as_json) {
        json rep{{"version", blockshift::kVersion},
                 {"command", "certify"},
                 {"which", which},
                 {"input", input_json(path, ls.doc, ls.bs)},
                 {"status", blockshift::to_string(cert.status)},
                 {"reason", cert.reason},
                 {"w_A", w_a},
                 {"w_compression", w_comp},
                 {"residuals", cert.K_basis
                                   ? json{{"invariance", cert.residuals.invariance},
                                          {"similarity", cert.residuals.similarity}}
                                   : json(nullptr)},
                 {"K_basis", cert.K_basis ? matrix_json(*cert.K_basis) : json(nullptr)},
                 {"summand", cert.summand ? matrix_json(*cert.summand) : json(nullptr)},
                 {"complement",
                  cert.complement ? matrix_json(*cert.complement) : json(nullptr)},
                 {"seed", seed},
                 {"tolerances", json{{"tol_cert", tol_cert}}}};
        emit(rep);
    } else {
        kv("status", blockshift::to_string(cert.status));
        kv("reason", cert.reason);
        kv("w(A)", w_a);
        kv(comp_label, w_comp);
        if (cert.K_basis) {
            kv("invariance", cert.residuals.invariance);
            kv("similarity", cert.residuals.similarity);
        }
        kv("tol_cert", tol_cert);
        kv("seed", std::to_string(seed));
    }
    switch (cert.status) {
        case blockshift::CertificateStatus::EqualityWithSummand: return 0;
        case blockshift::CertificateStatus::NoEquality: return 3;
        case blockshift::CertificateStatus::EqualityHypothesisViolated: return 4;
    }
    return 2;
}

int run_witness(const std::string& path, bool as_json, double tol, std::uint64_t seed,
                std::optional<double> eps) {
    const LoadedShift ls = load_shift(path);
    const blockshift::WitnessVector w = blockshift::lower_witness(ls.bs, seed, eps);
    const double w_lower = blockshift::lower_bound(ls.bs);
    const double floor =
        w.perturbed ? w_lower - (ls.bs.k() - 1) * w.eps_used - tol : w_lower - tol;
    if (w.attained < floor)
        throw blockshift::ConvergenceError(
            "witness attained " + fmt12(w.attained) + ", below the guaranteed floor " +
                fmt12(floor),
            floor - w.attained);
    log_debug("witness attained " + fmt12(w.attained) + " against w(A'') = " +
              fmt12(w_lower));

    if (as_json) {
        json rep{{"version", blockshift::kVersion},
                 {"command", "witness"},
                 {"input", input_json(path, ls.doc, ls.bs)},
                 {"attained", w.attained},
                 {"w_lower", w_lower},
                 {"perturbed", w.perturbed},
                 {"eps_used", w.eps_used},
                 {"v", vector_json(w.v)},
                 {"perron_y", w.perron_y},
                 {"u", vector_json(w.u)},
                 {"seed", seed},
                 {"tolerances", json{{"tol", tol}}}};
        json chain = json::array();
        for (const ComplexMatrix& x : w.chain_x) chain.push_back(vector_json(x));
        rep["chain_x"] = std::move(chain);
        emit(rep);
        return 0;
    }
    kv("attained", w.attained);
    kv("w(A'')", w_lower);
    kv("perturbed", w.perturbed ? "true" : "false");
    kv("eps_used", w.eps_used);
    std::string ys;
    for (size_t i = 0; i < w.perron_y.size(); ++i) {
        if (i > 0) ys += ' ';
        ys += fmt12(w.perron_y[i]);
    }
    kv("perron_y", ys);
    for (int i = 0; i < w.v.rows(); ++i)
        kv("v[" + std::to_string(i + 1) + "]",
           "[" + fmt12(w.v(i, 0).real()) + ", " + fmt12(w.v(i, 0).imag()) + "]");
    kv("tol", tol);
    kv("seed", std::to_string(seed));
    return 0;
}

int run_perturb(const std::string& path, bool as_json, double eps, std::uint64_t seed) {
    const LoadedShift ls = load_shift(path);
    if (ls.bs.k() < 2)
        throw blockshift::ValidationError("perturb: the document has no blocks");
    const std::vector<ComplexMatrix> out =
        blockshift::perturb_nonzero_chain(ls.bs.blocks(), eps, seed);

    double max_change = 0.0;
    for (size_t j = 0; j < out.size(); ++j)
        max_change = std::max(
            max_change, blockshift::operator_norm(blockshift::sub(out[j], ls.bs.blocks()[j])));
    const BlockShift pbs{std::vector<ComplexMatrix>(out)};
    const double chain_norm = blockshift::operator_norm(blockshift::product_chain(pbs));
    log_info("perturbed chain norm " + fmt12(chain_norm) + ", max block change " +
             fmt12(max_change));

    blockshift::BlockShiftDocument pdoc;
    pdoc.name = ls.doc.name;
    pdoc.blocks = out;
    const std::string text = blockshift::serialize_blockshift_document(pdoc);
    if (as_json) {
        json rep{{"version", blockshift::kVersion},
                 {"command", "perturb"},
                 {"input", input_json(path, ls.doc, ls.bs)},
                 {"document", json::parse(text)},
                 {"chain_norm", chain_norm},
                 {"max_block_change", max_change},
                 {"eps", eps},
                 {"seed", seed}};
        emit(rep);
        return 0;
    }
    std::cout << text;
    return 0;
}

int run_jordan(int k, bool as_json) {
    const double r = blockshift::jordan_radius(k);
    if (as_json) {
        json rep{{"version", blockshift::kVersion},
                 {"command", "jordan"},
                 {"k", k},
                 {"radius", r}};
        emit(rep);
        return 0;
    }
    std::cout << fmt12(r) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    init_log();
    CLI::App app{"numerical radius bounds for block shift matrices"};
    app.set_version_flag("--version", std::string(blockshift::kVersion));
    app.require_subcommand(1);

    std::string bounds_path;
    bool bounds_json = false;
    double bounds_tol = 1e-10;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate every radius bound");
    bounds->add_option("path", bounds_path, "block shift JSON file")->required();
    bounds->add_flag("--json", bounds_json, "machine-readable report");
    bounds->add_option("--tol", bounds_tol, "numerical rank tolerance (default 1e-10)");

    std::string certify_which;
    std::string certify_path;
    bool certify_json = false;
    double certify_tol = 1e-8;
    std::uint64_t certify_seed = 0;
    CLI::App* certify =
        app.add_subcommand("certify", "test a bound for equality with a direct summand");
    certify->add_option("which", certify_which, "which bound: upper or lower")
        ->required()
        ->check(CLI::IsMember({"upper", "lower"}));
    certify->add_option("path", certify_path, "block shift JSON file")->required();
    certify->add_flag("--json", certify_json, "machine-readable report");
    certify->add_option("--tol", certify_tol, "certification tolerance (default 1e-8)");
    certify->add_option("--seed", certify_seed, "seed for the extremal-vector search");

    std::string witness_path;
    bool witness_json = false;
    double witness_tol = 1e-8;
    std::uint64_t witness_seed = 0;
    double witness_eps = 0.0;
    CLI::App* witness =
        app.add_subcommand("witness", "construct a unit vector attaining the lower bound");
    witness->add_option("path", witness_path, "block shift JSON file")->required();
    witness->add_flag("--json", witness_json, "machine-readable report");
    witness->add_option("--tol", witness_tol, "guarantee slack (default 1e-8)");
    witness->add_option("--seed", witness_seed, "seed for perturbation choices");
    witness->add_option("--eps", witness_eps,
                        "perturbation size when the block chain is zero");

    std::string perturb_path;
    bool perturb_json = false;
    double perturb_eps = 1e-3;
    std::uint64_t perturb_seed = 0;
    CLI::App* perturb =
        app.add_subcommand("perturb", "nudge blocks so the full chain product is nonzero");
    perturb->add_option("path", perturb_path, "block shift JSON file")->required();
    perturb->add_flag("--json", perturb_json, "machine-readable report");
    perturb->add_option("--eps", perturb_eps, "perturbation budget (default 1e-3)");
    perturb->add_option("--seed", perturb_seed, "seed for perturbation choices");

    int jordan_k = 0;
    bool jordan_json = false;
    CLI::App* jordan = app.add_subcommand("jordan", "numerical radius of the k-dim shift");
    jordan->add_option("k", jordan_k, "matrix dimension")->required();
    jordan->add_flag("--json", jordan_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(bounds))
            return run_bounds(bounds_path, bounds_json, bounds_tol);
        if (app.got_subcommand(certify))
            return run_certify(certify_which, certify_path, certify_json, certify_tol,
                               certify_seed);
        if (app.got_subcommand(witness))
            return run_witness(witness_path, witness_json, witness_tol, witness_seed,
                               witness->count("--eps") > 0
                                   ? std::optional<double>(witness_eps)
                                   : std::nullopt);
        if (app.got_subcommand(perturb))
            return run_perturb(perturb_path, perturb_json, perturb_eps, perturb_seed);
        if (app.got_subcommand(jordan)) return run_jordan(jordan_k, jordan_json);
    } catch (const blockshift::ParseError& e) {
        std::cerr << "error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return 1;
    } catch (const blockshift::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const blockshift::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const blockshift::NoWitnessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const blockshift::Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
