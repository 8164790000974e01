// Command-line surface for the primality workbench: deterministic AKS runs,
// the Miller-Rabin baseline, the storage estimator and the (n, r) auditor.
//
// Exit statuses: 0 prime/valid/ok, 1 composite/invalid, 2 usage or domain
// error, 3 engine disagreement.

#include "aksbench/aks.hpp"
#include "aksbench/estimator.hpp"
#include "aksbench/miller_rabin.hpp"
#include "aksbench/validator.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using aksbench::Natural;
using nlohmann::json;

constexpr int kExitPrime = 0;
constexpr int kExitComposite = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

bool structured(const std::string& output_mode) {
    return output_mode == "structured";
}

std::string describe_detail(const aksbench::CompositeDetail& detail) {
    if (const auto* pp = std::get_if<aksbench::PerfectPowerWitness>(&detail)) {
        return "perfect power " + pp->base.str() + "^" + pp->exponent.str();
    }
    if (const auto* sf = std::get_if<aksbench::SharedFactor>(&detail)) {
        return "shared factor gcd(" + sf->probe.str() + ", n) = " + sf->divisor.str();
    }
    const auto& w = std::get<aksbench::CongruenceWitness>(detail);
    return "failing congruence witness a = " + w.a.str();
}

json detail_to_json(const std::optional<aksbench::CompositeDetail>& detail) {
    if (!detail) return nullptr;
    if (const auto* pp = std::get_if<aksbench::PerfectPowerWitness>(&*detail)) {
        return {{"kind", "perfect_power"}, {"base", pp->base.str()},
                {"exponent", pp->exponent.str()}};
    }
    if (const auto* sf = std::get_if<aksbench::SharedFactor>(&*detail)) {
        return {{"kind", "shared_factor"}, {"probe", sf->probe.str()},
                {"divisor", sf->divisor.str()}};
    }
    const auto& w = std::get<aksbench::CongruenceWitness>(*detail);
    return {{"kind", "congruence_witness"}, {"a", w.a.str()}};
}

json estimate_to_json(const aksbench::ResourceEstimate& e) {
    return {{"name", aksbench::scenario_name(e.scenario)},
            {"input_bits", e.input_bits.str()},
            {"r_value", e.r_value == 0 ? json(nullptr) : json(e.r_value.str())},
            {"storage_bits", e.storage_bits.str()},
            {"storage_bytes", e.storage_bytes.str()},
            {"human_readable", e.human_readable}};
}

void print_estimate_table(std::ostream& out, const std::vector<aksbench::ResourceEstimate>& rows) {
    out << std::left << std::setw(19) << "scenario" << std::setw(24) << "r" << std::setw(26)
        << "storage bits" << std::setw(26) << "storage bytes" << "readable\n";
    for (const auto& e : rows) {
        out << std::left << std::setw(19) << aksbench::scenario_name(e.scenario) << std::setw(24)
            << (e.r_value == 0 ? std::string("-") : e.r_value.str()) << std::setw(26)
            << e.storage_bits.str() << std::setw(26) << e.storage_bytes.str()
            << e.human_readable << "\n";
    }
}

struct TestOptions {
    std::string number;
    std::string algorithm = "both";
    std::string output = "text";
    std::uint64_t max_bits = 64;
    bool force = false;
};

int run_test(const TestOptions& opt) {
    Natural n;
    try {
        n = aksbench::parse_natural(opt.number);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (n < 2) {
        std::cerr << "error: n must exceed 1\n";
        return kExitUsage;
    }

    const bool want_aks = opt.algorithm == "aks" || opt.algorithm == "both";
    const bool want_mr = opt.algorithm == "miller-rabin" || opt.algorithm == "both";
    const Natural n_bits = aksbench::bit_length(n);

    if (want_aks && n_bits > opt.max_bits && !opt.force) {
        // Make the wall visible instead of starting a run that cannot finish.
        const auto projection = aksbench::compare_table(n_bits);
        if (structured(opt.output)) {
            json doc = {{"command", "test"},
                        {"n", n.str()},
                        {"n_bits", n_bits.str()},
                        {"refused", true},
                        {"error", "input exceeds the AKS bit-length guard"},
                        {"max_bits", opt.max_bits},
                        {"projection", json::array()}};
            for (const auto& e : projection) doc["projection"].push_back(estimate_to_json(e));
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cerr << "refusing to run AKS on a " << n_bits << "-bit input (guard is "
                      << opt.max_bits << " bits; pass --force to override)\n";
            std::cout << "projected storage for one repeated-squaring step at " << n_bits
                      << " input bits:\n";
            print_estimate_table(std::cout, projection);
        }
        return kExitUsage;
    }

    std::optional<aksbench::AksResult> aks;
    std::optional<aksbench::MrOutcome> mr;
    if (want_aks) aks = aksbench::aks_test(n);
    if (want_mr) mr = aksbench::mr_test(n, aksbench::default_bases());

    bool disagreement = false;
    if (aks && mr) {
        const bool aks_prime = aks->verdict.outcome == aksbench::Outcome::Prime;
        const bool mr_prime = *mr == aksbench::MrOutcome::ProbablyPrime;
        disagreement = aks_prime != mr_prime;
    }
    const bool composite = aks ? aks->verdict.outcome == aksbench::Outcome::Composite
                               : *mr == aksbench::MrOutcome::Composite;
    const int status =
        disagreement ? kExitDisagreement : (composite ? kExitComposite : kExitPrime);

    if (structured(opt.output)) {
        json results = json::array();
        if (aks) {
            results.push_back(
                {{"algorithm", "aks"},
                 {"outcome",
                  aks->verdict.outcome == aksbench::Outcome::Prime ? "prime" : "composite"},
                 {"deciding_step", aks->verdict.deciding_step},
                 {"r", aks->trace.chosen_r ? json(aks->trace.chosen_r->str()) : json(nullptr)},
                 {"witness_count", aks->trace.witness_count.str()},
                 {"witnesses_checked", aks->trace.witnesses_checked.str()},
                 {"detail", detail_to_json(aks->verdict.detail)}});
        }
        if (mr) {
            json bases = json::array();
            for (const auto& b : aksbench::default_bases()) bases.push_back(b.str());
            results.push_back({{"algorithm", "miller-rabin"},
                               {"outcome", *mr == aksbench::MrOutcome::ProbablyPrime
                                               ? "probably_prime"
                                               : "composite"},
                               {"bases", bases}});
        }
        json doc = {{"command", "test"},
                    {"n", n.str()},
                    {"n_bits", n_bits.str()},
                    {"results", results},
                    {"exit_status", status}};
        if (aks && mr) doc["agreement"] = !disagreement;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n = " << n << " (" << n_bits << " bits)\n";
        if (aks) {
            std::cout << "AKS: "
                      << (aks->verdict.outcome == aksbench::Outcome::Prime ? "PRIME"
                                                                           : "COMPOSITE")
                      << " - decided at step " << aks->verdict.deciding_step;
            if (aks->trace.chosen_r) std::cout << ", r = " << *aks->trace.chosen_r;
            if (aks->trace.witness_count > 0) {
                std::cout << ", witnesses checked " << aks->trace.witnesses_checked << " of "
                          << aks->trace.witness_count;
            }
            if (aks->verdict.detail) {
                std::cout << " (" << describe_detail(*aks->verdict.detail) << ")";
            }
            std::cout << "\n";
        }
        if (mr) {
            std::cout << "Miller-Rabin: "
                      << (*mr == aksbench::MrOutcome::ProbablyPrime ? "PROBABLY PRIME"
                                                                    : "COMPOSITE")
                      << " - bases";
            for (const auto& b : aksbench::default_bases()) std::cout << " " << b;
            std::cout << "\n";
        }
        if (disagreement) {
            std::cout << "ENGINE DISAGREEMENT: the verdicts above are inconsistent\n";
        }
    }
    return status;
}

struct EstimateOptions {
    std::string bits;
    std::string k = "1";
    std::string output = "text";
};

int run_estimate(const EstimateOptions& opt) {
    Natural bits, k;
    try {
        bits = aksbench::parse_natural(opt.bits);
        k = aksbench::parse_natural(opt.k);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (bits < 1 || k < 1) {
        std::cerr << "error: --bits and --k must be >= 1\n";
        return kExitUsage;
    }
    const auto rows = aksbench::compare_table(bits, k);
    if (structured(opt.output)) {
        json doc = {{"command", "estimate"},
                    {"input_bits", bits.str()},
                    {"k", k.str()},
                    {"scenarios", json::array()}};
        for (const auto& e : rows) doc["scenarios"].push_back(estimate_to_json(e));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "input bits: " << bits << ", k = " << k << "\n";
        print_estimate_table(std::cout, rows);
    }
    return kExitPrime;
}

struct ValidateOptions {
    std::vector<std::string> operands;
    std::string file;
    std::string output = "text";
};

int run_validate(const ValidateOptions& opt) {
    if (!opt.file.empty() && !opt.operands.empty()) {
        std::cerr << "error: give either N R or --file PATH, not both\n";
        return kExitUsage;
    }
    std::vector<std::pair<Natural, Natural>> pairs;
    try {
        if (!opt.file.empty()) {
            std::ifstream in(opt.file);
            if (!in) {
                std::cerr << "error: cannot open " << opt.file << "\n";
                return kExitUsage;
            }
            pairs = aksbench::read_batch_file(in);
        } else {
            if (opt.operands.size() != 2) {
                std::cerr << "error: validate needs either N R or --file PATH\n";
                return kExitUsage;
            }
            pairs.emplace_back(aksbench::parse_natural(opt.operands[0]),
                               aksbench::parse_natural(opt.operands[1]));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<aksbench::ValidationReport> reports;
    try {
        reports = aksbench::audit_batch(pairs);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    bool all_valid = true;
    for (const auto& r : reports) all_valid = all_valid && r.valid;

    if (structured(opt.output)) {
        json doc = {{"command", "validate"}, {"reports", json::array()},
                    {"all_valid", all_valid}};
        for (const auto& r : reports) {
            doc["reports"].push_back(
                {{"n", r.n.str()},
                 {"r", r.r.str()},
                 {"n_bit_length", r.n_bit_length.str()},
                 {"order", r.order ? json(r.order->str()) : json(nullptr)},
                 {"required_threshold", r.required_threshold.str()},
                 {"valid", r.valid},
                 {"reason", r.reason}});
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << "n = " << r.n << ", r = " << r.r << ": "
                      << (r.valid ? "VALID" : "INVALID") << " - " << r.reason << "\n";
        }
        if (reports.empty()) {
            std::cout << "no pairs to audit\n";
        }
    }
    return all_valid ? kExitPrime : kExitComposite;
}

struct FindROptions {
    std::string number;
    std::string output = "text";
};

int run_find_r(const FindROptions& opt) {
    Natural n;
    try {
        n = aksbench::parse_natural(opt.number);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (n < 2) {
        std::cerr << "error: n must exceed 1\n";
        return kExitUsage;
    }
    const Natural r = aksbench::find_r(n);
    const Natural order = *aksbench::multiplicative_order(n, r);
    const Natural threshold = aksbench::bit_length(n) * aksbench::bit_length(n);
    const Natural bound = aksbench::witness_bound(r, n);
    if (structured(opt.output)) {
        json doc = {{"command", "find-r"},          {"n", n.str()},
                    {"r", r.str()},                 {"order", order.str()},
                    {"threshold", threshold.str()}, {"witness_bound", bound.str()}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n = " << n << " (" << aksbench::bit_length(n) << " bits)\n"
                  << "r = " << r << "\n"
                  << "ord_r(n) = " << order << " (required > " << threshold << ")\n"
                  << "step-5 witness bound = " << bound << "\n";
    }
    return kExitPrime;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic primality workbench: AKS, Miller-Rabin, storage estimator, "
                 "parameter auditor"};
    app.require_subcommand(1);

    TestOptions test_opt;
    auto* test_cmd = app.add_subcommand("test", "run a primality test");
    test_cmd->add_option("number", test_opt.number, "integer to test (decimal or 0x hex)")
        ->required();
    test_cmd->add_option("--algorithm", test_opt.algorithm, "engine to run")
        ->check(CLI::IsMember({"aks", "miller-rabin", "both"}))
        ->capture_default_str();
    test_cmd->add_option("--max-bits", test_opt.max_bits, "AKS input bit-length guard")
        ->capture_default_str();
    test_cmd->add_flag("--force", test_opt.force, "run AKS past the bit-length guard");
    test_cmd->add_option("--output", test_opt.output, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    EstimateOptions est_opt;
    auto* est_cmd = app.add_subcommand("estimate", "storage footprint for all scenarios");
    est_cmd->add_option("--bits", est_opt.bits, "input bit-length")->required();
    est_cmd->add_option("--k", est_opt.k, "multiplier on the AKS ring size")
        ->capture_default_str();
    est_cmd->add_option("--output", est_opt.output, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    ValidateOptions val_opt;
    auto* val_cmd =
        app.add_subcommand("validate", "audit (n, r) pairs against the order condition");
    val_cmd->add_option("operands", val_opt.operands, "n and r");
    val_cmd->add_option("--file", val_opt.file, "batch file: one \"n r\" pair per line");
    val_cmd->add_option("--output", val_opt.output, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    FindROptions findr_opt;
    auto* findr_cmd = app.add_subcommand("find-r", "smallest valid ring size for n");
    findr_cmd->add_option("number", findr_opt.number, "integer (decimal or 0x hex)")->required();
    findr_cmd->add_option("--output", findr_opt.output, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // help/version keep 0
    }

    try {
        if (test_cmd->parsed()) return run_test(test_opt);
        if (est_cmd->parsed()) return run_estimate(est_opt);
        if (val_cmd->parsed()) return run_validate(val_opt);
        if (findr_cmd->parsed()) return run_find_r(findr_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
