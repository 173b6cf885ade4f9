// koszul — border-rank lower bounds and blow-up invertibility certificates
// for order-3 tensors over Q and GF(p), with machine-readable reports.
//
// Subcommands:
//   lowerbound    flattening-rank certificate for a cubic tensor
//   verify-koszul elusive-entry certificate + determinant scaling checks
//   witness       randomized search for high-rank blow-up elements
//   builtin       emit a built-in tensor as a document
//
// Exit codes: 0 computed/verified, 1 falsified property, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "koszul/certificate.hpp"
#include "koszul/flattening.hpp"
#include "koszul/tensor_io.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 0;

std::uint64_t parse_seed_number(const std::string& text) {
    std::size_t used = 0;
    std::uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("seed: trailing characters in \"" + text + "\"");
    return value;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("KOSZUL_SEED")) {
        return parse_seed_number(env);
    }
    return kDefaultSeed;
}

koszul::FieldSpec parse_field_flag(const std::string& text) { return koszul::FieldSpec::parse(text); }

koszul::Tensor3 load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tensor file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return koszul::parse_tensor(buffer.str());
}

void emit(const std::string& text, const json& structured, bool want_json) {
    std::cout << text;
    if (want_json) std::cout << structured.dump() << "\n";
}

std::string join_scalars(const std::vector<koszul::Scalar>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += values[i].to_string();
    }
    return out + ")";
}

int run_lowerbound(const std::optional<std::string>& builtin_name,
                   const std::optional<std::string>& tensor_path, const std::string& field_flag,
                   bool field_given, std::size_t projections, std::uint64_t seed, bool want_json) {
    if (builtin_name.has_value() == tensor_path.has_value()) {
        std::cerr << "lowerbound: give exactly one of --builtin or --tensor\n";
        return 2;
    }
    std::optional<koszul::Tensor3> tensor;
    std::string label;
    if (builtin_name) {
        tensor = koszul::builtin_tensor(*builtin_name, parse_field_flag(field_flag));
        label = *builtin_name;
    } else {
        if (field_given) {
            std::cerr << "lowerbound: --field conflicts with --tensor (the document fixes the field)\n";
            return 2;
        }
        tensor = load_tensor_file(*tensor_path);
        label = *tensor_path;
    }
    if (!tensor->is_cubic()) {
        std::cerr << "lowerbound: tensor must be cubic, got " << tensor->dims()[0] << "x"
                  << tensor->dims()[1] << "x" << tensor->dims()[2] << "\n";
        return 2;
    }

    koszul::RankCertificate cert = koszul::lower_bound(*tensor, projections, seed, label);

    std::ostringstream text;
    text << "command: lowerbound\n"
         << "tensor: " << cert.label << "\n"
         << "field: " << cert.field.to_string() << "\n"
         << "dims: " << tensor->dims()[0] << "x" << tensor->dims()[1] << "x" << tensor->dims()[2]
         << "\n"
         << "pipeline: " << (cert.projection.empty() ? "odd" : "even") << " (m=" << cert.m
         << ", p=" << cert.p << ")\n";
    if (!cert.projection.empty()) text << "projection: " << cert.projection << "\n";
    text << "flattening rank: " << cert.flattening_rank << "\n"
         << "wedge space rank: " << cert.subspace_rank << "\n"
         << "border rank >= " << cert.lower_bound << "\n";

    json structured{{"command", "lowerbound"},
                    {"tensor", cert.label},
                    {"field", cert.field.to_string()},
                    {"dims", {tensor->dims()[0], tensor->dims()[1], tensor->dims()[2]}},
                    {"m", cert.m},
                    {"p", cert.p},
                    {"projection", cert.projection},
                    {"flattening_rank", cert.flattening_rank},
                    {"subspace_rank", cert.subspace_rank},
                    {"bound", cert.lower_bound}};
    emit(text.str(), structured, want_json);
    return 0;
}

int run_verify(int m, const std::string& field_flag, std::size_t samples, std::uint64_t seed,
               bool want_json) {
    if (m < 3 || m > 11 || m % 2 == 0) {
        std::cerr << "verify-koszul: m must be odd and in [3, 11], got " << m << "\n";
        return 2;
    }
    koszul::FieldSpec field = parse_field_flag(field_flag);
    koszul::KoszulContext ctx((m - 1) / 2);
    koszul::SemiMainReport report = koszul::verify_semi_main(ctx, field, samples, seed);

    std::ostringstream text;
    text << "command: verify-koszul\n"
         << "m: " << m << "\n"
         << "field: " << field.to_string() << "\n"
         << "matrix size: " << report.matrix_size << "\n"
         << "permutation size: " << report.matrix_size << "\n"
         << "k: " << report.k << "\n"
         << "det A(1,...,1): " << report.det_at_ones.to_string() << " ["
         << (report.det_at_ones_ok ? "ok" : "MISMATCH") << "]\n";
    json samples_json = json::array();
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        const auto& sample = report.samples[i];
        text << "sample " << (i + 1) << ": t=" << join_scalars(sample.t)
             << " det=" << sample.determinant.to_string()
             << " expected=" << sample.expected.to_string() << " ["
             << (sample.ok ? "ok" : "MISMATCH") << "]\n";
        json entry{{"det", sample.determinant.to_string()},
                   {"expected", sample.expected.to_string()},
                   {"ok", sample.ok}};
        json ts = json::array();
        for (const auto& t : sample.t) ts.push_back(t.to_string());
        entry["t"] = ts;
        samples_json.push_back(entry);
    }
    text << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";

    json structured{{"command", "verify-koszul"},
                    {"m", m},
                    {"field", field.to_string()},
                    {"matrix_size", report.matrix_size},
                    {"k", report.k},
                    {"det_at_ones", report.det_at_ones.to_string()},
                    {"pass", report.pass},
                    {"samples", samples_json}};
    emit(text.str(), structured, want_json);
    return report.pass ? 0 : 1;
}

int run_witness(int m, std::size_t n, std::size_t trials, const std::string& field_flag,
                const std::string& seed_flag, bool seed_given, std::int64_t bound,
                const std::string& out_flag, bool want_json) {
    if (m < 3 || m % 2 == 0) {
        std::cerr << "witness: m must be odd and >= 3, got " << m << "\n";
        return 2;
    }
    if (n < 1 || trials < 1) {
        std::cerr << "witness: n and trials must be positive\n";
        return 2;
    }
    koszul::FieldSpec field = parse_field_flag(field_flag);
    koszul::KoszulContext ctx((m - 1) / 2);

    std::uint64_t seed = default_seed();
    std::optional<std::vector<koszul::ExactMatrix>> first_trial;
    std::string seed_label = seed_given ? seed_flag : std::to_string(seed);
    if (seed_given) {
        if (seed_flag == "fixed-doubled-toeplitz") {
            if (n != static_cast<std::size_t>(m) + 1) {
                std::cerr << "witness: seed fixed-doubled-toeplitz needs n = m+1 = " << (m + 1)
                          << "\n";
                return 2;
            }
            std::vector<koszul::ExactMatrix> coeffs = koszul::toeplitz_basis(field, ctx.p());
            for (auto& coeff : coeffs) coeff = koszul::direct_sum(coeff, coeff);
            first_trial = std::move(coeffs);
        } else {
            seed = parse_seed_number(seed_flag);
        }
    }

    koszul::WitnessResult result = koszul::witness_search(
        ctx, field, n, trials, seed, first_trial ? &*first_trial : nullptr, bound);

    std::uint64_t target = ctx.generic_rank() * (2 * static_cast<std::uint64_t>(m) - 4);
    std::string out_path = out_flag.empty()
                               ? "witness-m" + std::to_string(m) + "-n" + std::to_string(n) + ".tns"
                               : out_flag;

    // The witness is itself a tensor in K^m (x) K^n (x) K^n.
    koszul::Tensor3 witness(field, m, n, n);
    for (int i = 0; i < m; ++i) {
        const auto& coeff = result.best_coeffs[i];
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                koszul::Scalar value = coeff.at(r, c);
                if (!value.is_zero()) {
                    witness.set(i + 1, static_cast<int>(r) + 1, static_cast<int>(c) + 1, value);
                }
            }
        }
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "witness: cannot write " << out_path << "\n";
        return 2;
    }
    out << koszul::serialize_tensor(witness);
    out.close();

    std::ostringstream text;
    text << "command: witness\n"
         << "m: " << m << "\n"
         << "n: " << n << "\n"
         << "field: " << field.to_string() << "\n"
         << "trials: " << trials << "\n"
         << "seed: " << seed_label << "\n"
         << "matrix size: " << result.matrix_size << "\n"
         << "best rank: " << result.best_rank << " (trial " << result.best_trial << ")\n"
         << "target to exceed: " << target << "\n"
         << "exceeds target: " << (result.best_rank > target ? "yes" : "no") << "\n"
         << "witness tensor: " << out_path << "\n";

    json structured{{"command", "witness"},
                    {"m", m},
                    {"n", n},
                    {"field", field.to_string()},
                    {"trials", trials},
                    {"seed", seed_label},
                    {"matrix_size", result.matrix_size},
                    {"best_rank", result.best_rank},
                    {"best_trial", result.best_trial},
                    {"target", target},
                    {"exceeds_target", result.best_rank > target},
                    {"witness_path", out_path}};
    emit(text.str(), structured, want_json);
    return 0;
}

int run_builtin(const std::string& name, const std::string& field_flag, const std::string& out_flag,
                bool want_json) {
    koszul::FieldSpec field = parse_field_flag(field_flag);
    koszul::Tensor3 tensor = koszul::builtin_tensor(name, field);
    std::string document = koszul::serialize_tensor(tensor);
    if (out_flag.empty()) {
        std::cout << document;
        return 0;
    }
    std::ofstream out(out_flag);
    if (!out) {
        std::cerr << "builtin: cannot write " << out_flag << "\n";
        return 2;
    }
    out << document;
    out.close();
    std::ostringstream text;
    text << "command: builtin\n"
         << "tensor: " << name << "\n"
         << "field: " << field.to_string() << "\n"
         << "entries: " << tensor.entry_count() << "\n"
         << "written to: " << out_flag << "\n";
    json structured{{"command", "builtin"},
                    {"tensor", name},
                    {"field", field.to_string()},
                    {"entries", tensor.entry_count()},
                    {"path", out_flag}};
    emit(text.str(), structured, want_json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact border-rank lower bounds via Koszul flattenings"};
    app.require_subcommand(1);
    bool want_json = false;
    app.add_flag("--json", want_json, "append a machine-readable JSON line to the report");

    auto* lower = app.add_subcommand("lowerbound", "border-rank lower bound for a cubic tensor");
    lower->fallthrough();
    std::string lb_builtin, lb_tensor, lb_field = "Q";
    std::size_t lb_projections = 0;
    std::string lb_seed;
    lower->add_option("--builtin", lb_builtin,
                      "built-in tensor name (det3, perm3, unit:<d>, toeplitz_sum:<d>)");
    lower->add_option("--tensor", lb_tensor, "path to a tensor document");
    auto* lb_field_opt =
        lower->add_option("--field", lb_field, "ground field, Q or GF:<p> (with --builtin)");
    lower->add_option("--projections", lb_projections,
                      "extra random projections for even side length");
    lower->add_option("--seed", lb_seed, "seed for random projections");

    auto* verify = app.add_subcommand("verify-koszul", "certify the Toeplitz blow-up determinant");
    verify->fallthrough();
    int vk_m = 3;
    std::string vk_field = "Q", vk_seed;
    std::size_t vk_samples = 10;
    verify->add_option("--m", vk_m, "odd size of the ground set, 3..11")->required();
    verify->add_option("--field", vk_field, "ground field, Q or GF:<p>");
    verify->add_option("--samples", vk_samples, "number of random scaling checks");
    verify->add_option("--seed", vk_seed, "seed for the random samples");

    auto* witness = app.add_subcommand("witness", "search for high-rank blow-up elements");
    witness->fallthrough();
    int wt_m = 3;
    std::size_t wt_n = 1, wt_trials = 100;
    std::string wt_field = "Q", wt_seed, wt_out;
    std::int64_t wt_bound = 10;
    witness->add_option("--m", wt_m, "odd size of the ground set")->required();
    witness->add_option("--n", wt_n, "blow-up block size")->required();
    witness->add_option("--trials", wt_trials, "number of random trials");
    witness->add_option("--field", wt_field, "ground field, Q or GF:<p>");
    auto* wt_seed_opt = witness->add_option(
        "--seed", wt_seed, "integer seed, or fixed-doubled-toeplitz to pin trial 0");
    witness->add_option("--bound", wt_bound, "coefficient magnitude bound over Q");
    witness->add_option("-o,--out", wt_out, "path for the witness tensor document");

    auto* builtin = app.add_subcommand("builtin", "emit a built-in tensor document");
    builtin->fallthrough();
    std::string bi_name, bi_field = "Q", bi_out;
    builtin->add_option("name", bi_name, "det3, perm3, unit:<d>, toeplitz_sum:<d>")->required();
    builtin->add_option("--field", bi_field, "ground field, Q or GF:<p>");
    builtin->add_option("-o,--out", bi_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*lower) {
            std::optional<std::string> builtin_name, tensor_path;
            if (!lb_builtin.empty()) builtin_name = lb_builtin;
            if (!lb_tensor.empty()) tensor_path = lb_tensor;
            std::uint64_t seed = lb_seed.empty() ? default_seed() : parse_seed_number(lb_seed);
            return run_lowerbound(builtin_name, tensor_path, lb_field, lb_field_opt->count() > 0,
                                  lb_projections, seed, want_json);
        }
        if (*verify) {
            std::uint64_t seed = vk_seed.empty() ? default_seed() : parse_seed_number(vk_seed);
            return run_verify(vk_m, vk_field, vk_samples, seed, want_json);
        }
        if (*witness) {
            return run_witness(wt_m, wt_n, wt_trials, wt_field, wt_seed,
                               wt_seed_opt->count() > 0, wt_bound, wt_out, want_json);
        }
        if (*builtin) {
            return run_builtin(bi_name, bi_field, bi_out, want_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
