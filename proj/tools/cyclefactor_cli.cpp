#include "cyclefactor/count_table.hpp"
#include "cyclefactor/identities.hpp"
#include "cyclefactor/oracle.hpp"
#include "cyclefactor/partition.hpp"
#include "cyclefactor/permutation.hpp"
#include "cyclefactor/recurrence.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace cyclefactor;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Cost envelopes; --force lifts them.
constexpr int kOracleTableMaxN = 12;
constexpr int kProfileMaxN = 8;
constexpr int kSeparationMaxN = 8;
constexpr int kStirlingSweepMaxN = 10;

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("CYCLEFACTOR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default: all cores
}

void require_envelope(bool force, int n, int max_n, const std::string& what) {
    if (!force && n > max_n) {
        throw CLI::ValidationError(what + " is limited to n <= " + std::to_string(max_n) +
                                   "; pass --force to override");
    }
}

nlohmann::json partition_json(const Partition& p) {
    auto arr = nlohmann::json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cyclefactor: exact counts of long-cycle pairs in the symmetric group by product\n"
        "cycle type, with brute-force oracles and identity verification sweeps."};
    app.require_subcommand(1);
    {
        std::string footer =
            "Cost envelopes (lifted by --force):\n"
            "  oracle tables / counts / factorizations  n <= " + std::to_string(kOracleTableMaxN) + "\n"
            "  exceedance profiles                      n <= " + std::to_string(kProfileMaxN) + "\n"
            "  separation pair enumeration              n <= " + std::to_string(kSeparationMaxN) + "\n"
            "  separated Stirling sweep                 n <= " + std::to_string(kStirlingSweepMaxN) + "\n"
            "  identity sweeps                          ";
        for (const auto& name : identity_names()) {
            footer += name + " <= " + std::to_string(identity_envelope(name)) + ", ";
        }
        footer.resize(footer.size() - 2);
        footer +=
            "\nExit codes: 0 all checks pass, 1 a verification failed, 2 usage error.\n"
            "CYCLEFACTOR_THREADS sets the default worker count.";
        app.footer(footer);
    }

    int threads_flag = 0;
    bool force = false;
    app.add_option("--threads", threads_flag,
                   "worker threads for enumeration (default: all cores, or CYCLEFACTOR_THREADS)");
    app.add_flag("--force", force, "override the per-operation cost envelopes");

    // ---- table ------------------------------------------------------------
    auto* table_cmd = app.add_subcommand(
        "table", "pairs of n-cycles classified by the cycle type of their product");
    int table_n = 0;
    std::string table_source = "recurrence";
    std::string table_format = "json";
    table_cmd->add_option("--n", table_n, "ground set size")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--source", table_source, "oracle | recurrence (default recurrence)")
        ->check(CLI::IsMember({"oracle", "recurrence"}));
    table_cmd->add_option("--format", table_format, "json | csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- verify -------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run identity verification sweeps");
    std::string verify_identity;
    int verify_n_max = 0;
    std::string verify_source = "recurrence";
    {
        std::string tags = "all";
        for (const auto& name : identity_names()) tags += ", " + name;
        verify_cmd->add_option("--identity", verify_identity, "identity tag (" + tags + ")")
            ->required();
    }
    verify_cmd->add_option("--n-max", verify_n_max, "largest n to sweep (capped by each tag's envelope)")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd
        ->add_option("--source", verify_source,
                     "table source for table-backed identities (oracle | recurrence)")
        ->check(CLI::IsMember({"oracle", "recurrence"}));

    // ---- oracle -------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "query the brute-force oracles directly");
    oracle_cmd->require_subcommand(1);

    auto* count_cmd = oracle_cmd->add_subcommand(
        "count", "permutations of type lambda whose diagonal against the canonical n-cycle has type eta");
    std::string count_eta, count_lambda;
    int count_n = 0;
    count_cmd->add_option("--eta", count_eta, "diagonal cycle type")->required();
    count_cmd->add_option("--lambda", count_lambda, "vertical cycle type")->required();
    count_cmd->add_option("--n", count_n, "ground set size")->required()->check(CLI::PositiveNumber);

    auto* profile_cmd = oracle_cmd->add_subcommand(
        "profile", "counts keyed by (diagonal type, exceedances) for verticals of type lambda");
    std::string profile_lambda;
    int profile_n = 0;
    profile_cmd->add_option("--lambda", profile_lambda, "vertical cycle type")->required();
    profile_cmd->add_option("--n", profile_n, "ground set size")->required()->check(CLI::PositiveNumber);

    auto* fact_cmd = oracle_cmd->add_subcommand(
        "factorizations", "ordered pairs of long cycles whose product is gamma");
    std::string fact_gamma;
    int fact_n = 0;
    fact_cmd->add_option("--gamma", fact_gamma, "permutation, e.g. \"(1 2)(3 4)\" or \"2 1 4 3\"")
        ->required();
    fact_cmd->add_option("--n", fact_n, "ground set size (default: largest element in gamma)");

    auto* sep_cmd = oracle_cmd->add_subcommand(
        "separation", "pairs of n-cycles by cycle count of the product, product separating [m]");
    int sep_n = 0, sep_m = 1;
    sep_cmd->add_option("--n", sep_n, "ground set size")->required()->check(CLI::PositiveNumber);
    sep_cmd->add_option("--m", sep_m, "separated prefix length")->required()->check(CLI::PositiveNumber);

    auto* stir_cmd = oracle_cmd->add_subcommand(
        "separated-stirling", "permutations of [n] with k cycles and 1..m in distinct cycles");
    int stir_n = 0, stir_m = 1, stir_k = 0;
    stir_cmd->add_option("--n", stir_n, "ground set size")->required()->check(CLI::PositiveNumber);
    stir_cmd->add_option("--m", stir_m, "separated prefix length")->required()->check(CLI::PositiveNumber);
    stir_cmd->add_option("--k", stir_k, "number of cycles")->required()->check(CLI::PositiveNumber);

    // ---- partition ----------------------------------------------------------
    auto* part_cmd = app.add_subcommand("partition", "partition arithmetic helpers");
    part_cmd->require_subcommand(1);

    auto* z_cmd = part_cmd->add_subcommand("z", "permutations with the given cycle type");
    std::string z_lambda;
    z_cmd->add_option("--lambda", z_lambda, "partition text")->required();

    auto* down_cmd = part_cmd->add_subcommand("downshift", "replace one part j by j-1");
    std::string down_lambda;
    int down_j = 0;
    down_cmd->add_option("--lambda", down_lambda, "partition text")->required();
    down_cmd->add_option("--j", down_j, "part to lower")->required();

    auto* kappa_cmd = part_cmd->add_subcommand("kappa", "ways to merge k labeled parts of mu into lambda");
    std::string kappa_mu, kappa_lambda;
    int kappa_k = 0;
    kappa_cmd->add_option("--mu", kappa_mu, "finer partition")->required();
    kappa_cmd->add_option("--lambda", kappa_lambda, "coarser partition")->required();
    kappa_cmd->add_option("--k", kappa_k, "parts merged")->required()->check(CLI::PositiveNumber);

    auto* splits_cmd = part_cmd->add_subcommand("splits", "refinements splitting one part into `arity` parts");
    std::string splits_lambda;
    int splits_arity = 0;
    splits_cmd->add_option("--lambda", splits_lambda, "partition text")->required();
    splits_cmd->add_option("--arity", splits_arity, "parts the split produces")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const int threads = thread_count(threads_flag);

        if (table_cmd->parsed()) {
            CountTable table = [&] {
                if (table_source == "oracle") {
                    require_envelope(force, table_n, kOracleTableMaxN, "the oracle table");
                    return p_long_table_oracle(table_n, threads);
                }
                return p_long_table_recurrence(table_n);
            }();
            std::cout << (table_format == "csv" ? table.to_csv() : table.to_json() + "\n");
            return kExitPass;
        }

        if (verify_cmd->parsed()) {
            std::vector<std::string> tags;
            if (verify_identity == "all") {
                tags = identity_names();
            } else {
                identity_envelope(verify_identity);  // validates the tag
                tags.push_back(verify_identity);
            }
            IdentityOptions opts;
            opts.source = verify_source == "oracle" ? Source::oracle : Source::recurrence;
            opts.threads = threads;
            opts.force = force;
            bool all_pass = true;
            for (const auto& tag : tags) {
                int cap = force ? verify_n_max : std::min(verify_n_max, identity_envelope(tag));
                for (int n = 1; n <= cap; ++n) {
                    IdentityReport report = run_identity(tag, n, opts);
                    std::cout << report.to_json() << "\n";
                    all_pass = all_pass && report.pass;
                }
            }
            return all_pass ? kExitPass : kExitFail;
        }

        if (count_cmd->parsed()) {
            require_envelope(force, count_n, kOracleTableMaxN, "the fixed-horizontal count");
            Bigint c = count_fixed_s(Partition::parse(count_eta), Partition::parse(count_lambda), count_n);
            nlohmann::json out;
            out["n"] = count_n;
            out["count_fixed_s"] = c.str();
            out["p"] = (c * factorial(count_n - 1)).str();
            std::cout << out.dump() << "\n";
            return kExitPass;
        }

        if (profile_cmd->parsed()) {
            require_envelope(force, profile_n, kProfileMaxN, "the exceedance profile oracle");
            Partition lambda = Partition::parse(profile_lambda);
            auto profile = exceedance_profile_oracle(lambda, profile_n);
            std::cout << profile_to_json(profile_n, lambda, profile) << "\n";
            return kExitPass;
        }

        if (fact_cmd->parsed()) {
            Permutation gamma = Permutation::parse(fact_gamma, fact_n);
            require_envelope(force, gamma.size(), kOracleTableMaxN, "the factorization oracle");
            nlohmann::json out;
            out["gamma"] = gamma.to_cycle_string();
            out["count"] = factorization_count_oracle(gamma).str();
            std::cout << out.dump() << "\n";
            return kExitPass;
        }

        if (sep_cmd->parsed()) {
            require_envelope(force, sep_n, kSeparationMaxN, "the separation pair oracle");
            auto row = separation_pairs_oracle(sep_n, sep_m, threads);
            nlohmann::json out;
            out["n"] = sep_n;
            out["m"] = sep_m;
            nlohmann::json counts = nlohmann::json::object();
            for (const auto& [k, count] : row) counts[std::to_string(k)] = count.str();
            out["pairs_by_cycle_count"] = std::move(counts);
            std::cout << out.dump() << "\n";
            return kExitPass;
        }

        if (stir_cmd->parsed()) {
            require_envelope(force, stir_n, kStirlingSweepMaxN, "the separated Stirling oracle");
            std::cout << separated_stirling_oracle(stir_n, stir_m, stir_k).str() << "\n";
            return kExitPass;
        }

        if (z_cmd->parsed()) {
            std::cout << z(Partition::parse(z_lambda)).str() << "\n";
            return kExitPass;
        }

        if (down_cmd->parsed()) {
            std::cout << partition_json(down_shift(Partition::parse(down_lambda), down_j)).dump() << "\n";
            return kExitPass;
        }

        if (kappa_cmd->parsed()) {
            std::cout << merge_count(Partition::parse(kappa_mu), Partition::parse(kappa_lambda), kappa_k).str()
                      << "\n";
            return kExitPass;
        }

        if (splits_cmd->parsed()) {
            Partition lambda = Partition::parse(splits_lambda);
            auto edges = nlohmann::json::array();
            for (const auto& edge : refinements_with_kappa(lambda, splits_arity)) {
                edges.push_back({{"mu", partition_json(edge.finer)}, {"kappa", edge.kappa.str()}});
            }
            nlohmann::json out;
            out["lambda"] = partition_json(lambda);
            out["arity"] = splits_arity;
            out["edges"] = std::move(edges);
            std::cout << out.dump() << "\n";
            return kExitPass;
        }

        std::cerr << "no subcommand handled\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}
