// gapcert: construct and verify gap certificates for sums of two
// squares and binary quadratic forms, dump residue-class tables, and
// run the exact-constant and record searches.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "gaps/analysis.hpp"
#include "gaps/arith.hpp"
#include "gaps/certify.hpp"
#include "gaps/constructions.hpp"
#include "gaps/residue_sets.hpp"

using namespace gaps;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitError = 2;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Int default_budget() {
    if (const char* env = std::getenv("GAPCERT_BUDGET")) return Int(env);
    return Int("1000000000000");
}

int cmd_construct(const std::string& kind, std::uint64_t k, unsigned level, std::int64_t D,
                  std::uint64_t d, const std::string& out_path) {
    GapCertificate cert;
    if (kind == "basic")
        cert = constructions::richards_basic(k);
    else if (kind == "improved")
        cert = constructions::improved_two_squares(k, level);
    else if (kind == "discriminant")
        cert = constructions::general_discriminant(D, k);
    else if (kind == "sparse")
        cert = constructions::sparse_powers(k, d);
    else
        throw std::invalid_argument("unknown construction kind: " + kind);
    write_output(to_canonical_json(cert), out_path);
    return kExitOk;
}

int cmd_verify(const std::string& in_path, bool full, const Int& budget) {
    GapCertificate cert = certificate_from_json(read_input(in_path));
    certify::VerificationReport report =
        full ? certify::full_verify(cert, budget) : certify::verify_certificate(cert);
    std::cout << "kind=" << cert_kind_name(cert.kind) << " k=" << cert.k << " "
              << report.summary() << "\n";
    return report.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_sets(const std::string& family, unsigned level, const std::string& format,
             const std::string& out_path) {
    auto set = residue_sets::build_set(residue_sets::parse_family(family), level);
    std::ostringstream out;
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["family"] = family;
        doc["level"] = set.level;
        doc["modulus"] = set.modulus();
        doc["residues"] = set.residues;
        out << doc.dump(2) << "\n";
    } else {
        out << family << "_" << level << " = {";
        for (std::size_t i = 0; i < set.residues.size(); ++i)
            out << (i ? ", " : "") << set.residues[i];
        out << "}\n";
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

int cmd_constants(std::int64_t D) {
    using namespace analysis;
    auto show = [](const char* name, const ConstantPartition& p) {
        Rat a = alpha_constant(p);
        Rat b = gap_bound(p);
        std::cout << name << ": alpha = " << a << " = " << static_cast<double>(a)
                  << ", gap bound = " << b << " = " << static_cast<double>(b) << "\n";
    };
    show("four-band", four_band_partition());
    show("two-band", two_band_partition());
    show("single-band", single_band_partition());
    if (D != 0) {
        std::cout << "D=" << D << ": phi(|D|)/(2|D|) = " << theorem2_rational_factor(D)
                  << ", bound = " << theorem2_constant(D) << "\n";
    }
    return kExitOk;
}

int cmd_records(std::uint64_t N, const std::string& format, const std::string& out_path) {
    auto records = analysis::gap_records(N);
    std::ostringstream out;
    if (format == "csv") {
        out << "s_n,s_next,gap,ratio\n";
        for (const auto& r : records)
            out << r.s_n << "," << r.s_next << "," << r.gap << "," << r.ratio << "\n";
    } else {
        for (const auto& r : records)
            out << "gap " << r.gap << " at " << r.s_n << " (next " << r.s_next
                << "), gap/log = " << r.ratio << "\n";
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

int cmd_minimal_y(std::uint64_t k, std::uint64_t sieve_limit) {
    std::cout << analysis::minimal_y_bruteforce(k, sieve_limit) << "\n";
    return kExitOk;
}

int cmd_compare(const std::vector<std::uint64_t>& ks, unsigned level, const std::string& format,
                const std::string& out_path) {
    auto rows = analysis::construction_comparison(ks, level);
    std::ostringstream out;
    if (format == "csv") {
        out << "k,log_p_basic,log_p_improved,ratio_basic,ratio_improved\n";
        for (const auto& r : rows)
            out << r.k << "," << r.log_p_basic << "," << r.log_p_improved << ","
                << r.ratio_basic << "," << r.ratio_improved << "\n";
    } else {
        for (const auto& r : rows)
            out << "k=" << r.k << "  log P basic=" << r.log_p_basic
                << "  improved=" << r.log_p_improved << "  k/logP basic=" << r.ratio_basic
                << "  improved=" << r.ratio_improved << "\n";
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gap certificates for sums of two squares and binary quadratic forms"};
    app.require_subcommand(1);

    std::uint64_t k = 1, d = 1, N = 1'000'000, sieve_limit = 10'000'000;
    unsigned level = 5;
    std::int64_t D = -4;
    std::string kind, family = "S", format = "text", in_path, out_path;
    std::vector<std::uint64_t> ks;
    bool full = false;
    std::string budget_str;

    auto* construct = app.add_subcommand("construct", "emit a gap certificate as JSON");
    construct->add_option("kind", kind, "basic | improved | discriminant | sparse")->required();
    construct->add_option("--k", k, "window length")->required();
    construct->add_option("--level", level, "dyadic level for the improved construction");
    construct->add_option("--D", D, "fundamental discriminant");
    construct->add_option("--d", d, "power exponent for the sparse construction");
    construct->add_option("-o,--output", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify a certificate JSON (path or stdin)");
    verify->add_option("input", in_path, "certificate path (default stdin)");
    verify->add_flag("--full", full, "additionally oracle-check every window element");
    verify->add_option("--budget", budget_str, "oracle budget for --full");

    auto* sets = app.add_subcommand("sets", "dump a residue-class family");
    sets->add_option("--family", family, "S | T | U | V | W | R")->required();
    sets->add_option("--level", level, "level (modulus 2^level)")->required();
    sets->add_option("--format", format, "text | json");
    sets->add_option("-o,--output", out_path);

    auto* constants = app.add_subcommand("constants", "print the exact constants");
    constants->add_option("--D", D, "also print the discriminant bound for D");

    auto* records = app.add_subcommand("records", "gap records over the two-squares sieve");
    records->add_option("--N", N, "sieve limit")->required();
    records->add_option("--format", format, "text | csv");
    records->add_option("-o,--output", out_path);

    auto* minimal = app.add_subcommand("minimal-y", "smallest gap window start by sieve");
    minimal->add_option("--k", k, "window length")->required();
    minimal->add_option("--sieve-limit", sieve_limit);

    auto* compare = app.add_subcommand("compare", "basic vs improved product sizes");
    compare->add_option("--k", ks, "window lengths")->required();
    compare->add_option("--level", level);
    compare->add_option("--format", format, "text | csv");
    compare->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(kind, k, level, D, d, out_path);
        if (verify->parsed()) {
            Int budget = budget_str.empty() ? default_budget() : Int(budget_str);
            return cmd_verify(in_path, full, budget);
        }
        if (sets->parsed()) return cmd_sets(family, level, format, out_path);
        if (constants->parsed()) return cmd_constants(D);
        if (records->parsed()) return cmd_records(N, format, out_path);
        if (minimal->parsed()) return cmd_minimal_y(k, sieve_limit);
        if (compare->parsed()) return cmd_compare(ks, level, format, out_path);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
