#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "confcoh/dga.hpp"
#include "confcoh/errors.hpp"
#include "confcoh/io.hpp"
#include "confcoh/qformula.hpp"
#include "confcoh/repr.hpp"

namespace confcoh::cli {

namespace {

using io::json;

class UsageError : public Error {
public:
    using Error::Error;
};

enum class Format { Text, Json, Csv };

struct Common {
    int genus = -1;
    Format format = Format::Text;
    std::string out_path;
};

struct Config {
    Common common;
    std::optional<int> n;
    std::optional<int> max_n;
    bool dims = false;
    bool reps = false;
    int i = -1;
    int j = -1;
    std::string model = "A";
    std::string debug_dir;
    unsigned threads = 0;
};

// n values requested through --n or --max-n
std::vector<int> n_range(const Config& cfg) {
    if (cfg.n && cfg.max_n) throw UsageError("--n and --max-n are mutually exclusive");
    if (cfg.n) return {*cfg.n};
    if (cfg.max_n) {
        std::vector<int> out;
        for (int n = 0; n <= *cfg.max_n; ++n) out.push_back(n);
        return out;
    }
    throw UsageError("one of --n or --max-n is required");
}

void require_positive_genus(const Config& cfg, const char* command) {
    if (cfg.common.genus == 0)
        throw UsageError(std::string(command) + " needs genus >= 1; for the sphere use `betti --genus 0`");
}

void require_oracle_budget(int genus, int n) {
    const int budget = dga::default_budget(genus);
    if (n > budget)
        throw UsageError("n = " + std::to_string(n) + " exceeds the oracle budget for genus " + std::to_string(genus) +
                         " (n <= " + std::to_string(budget) + ")");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- commands -----------------------------------------------------------

std::string cmd_q_series(const Config& cfg) {
    require_positive_genus(cfg, "q-series");
    if (!cfg.max_n) throw UsageError("--max-n is required");
    const auto q = qformula::build_Q(cfg.common.genus, *cfg.max_n);
    switch (cfg.common.format) {
        case Format::Json: return dump(io::to_json(q));
        case Format::Csv: {
            std::ostringstream out;
            out << "t,s,u,dim\n";
            std::map<std::array<int, 3>, Integer> rows;
            for (const auto& [key, rep] : q.coeffs()) rows[{key[2], key[0], key[1]}] = rep.dim(cfg.common.genus);
            for (const auto& [uts, d] : rows) out << uts[1] << ',' << uts[2] << ',' << uts[0] << ',' << d.get_str() << '\n';
            return out.str();
        }
        case Format::Text: break;
    }
    return (cfg.dims ? io::render_series_dims(q, cfg.common.genus) : io::render_series(q)) + "\n";
}

std::string render_tables(const Config& cfg, const std::vector<qformula::MixedTable>& tables) {
    std::ostringstream out;
    if (cfg.common.format == Format::Csv) out << io::csv_header();
    json array = json::array();
    for (const auto& t : tables) {
        switch (cfg.common.format) {
            case Format::Json: array.push_back(io::to_json(t)); break;
            case Format::Csv: out << io::csv_rows(t.n, t.dims()); break;
            case Format::Text: out << io::render_table(t); break;
        }
    }
    if (cfg.common.format == Format::Json) return dump(array.size() == 1 && cfg.n ? array[0] : array);
    return out.str();
}

std::string cmd_table(const Config& cfg, std::ostream& err) {
    require_positive_genus(cfg, "table");
    const auto ns = n_range(cfg);
    auto tables = qformula::mixed_tables(cfg.common.genus, ns.back());
    if (cfg.n) tables = {tables.back()};
    for (const auto& t : tables)
        for (const auto& [k, h] : t.band_violations())
            err << "warning: n = " << t.n << ": entry (k, h) = (" << k << ", " << h << ") lies outside the weight band\n";
    return render_tables(cfg, tables);
}

std::string cmd_betti(const Config& cfg) {
    const int g = cfg.common.genus;
    std::vector<std::pair<int, std::vector<Integer>>> rows;
    const auto ns = n_range(cfg);
    if (g == 0) {
        for (int n : ns) rows.emplace_back(n, qformula::genus0_betti(n));
    } else {
        auto tables = qformula::mixed_tables(g, ns.back());
        for (int n : ns) rows.emplace_back(n, tables[n].betti());
    }
    std::ostringstream out;
    switch (cfg.common.format) {
        case Format::Json: {
            json array = json::array();
            for (const auto& [n, b] : rows) array.push_back({{"genus", g}, {"n", n}, {"betti", io::to_json(b)}});
            return dump(cfg.n ? array[0] : array);
        }
        case Format::Csv:
            out << "n,k,betti\n";
            for (const auto& [n, b] : rows)
                for (std::size_t k = 0; k < b.size(); ++k) out << n << ',' << k << ',' << b[k].get_str() << '\n';
            return out.str();
        case Format::Text:
            for (const auto& [n, b] : rows) out << (cfg.n ? "" : std::to_string(n) + ": ") << io::render_list(b) << '\n';
            return out.str();
    }
    return out.str();
}

std::string cmd_dim(const Config& cfg) {
    require_positive_genus(cfg, "dim");
    const int g = cfg.common.genus;
    if (cfg.i < 0 || cfg.j < 0 || cfg.j > g) throw UsageError("need i >= 0 and 0 <= j <= genus");
    if (cfg.j == 0 && cfg.i != 0) throw UsageError("j = 0 is only the trivial representation (i = 0)");
    const Integer d = repr::dim_irrep(g, repr::RepLabel::make(g, cfg.i, cfg.j));
    switch (cfg.common.format) {
        case Format::Json: return dump({{"genus", g}, {"i", cfg.i}, {"j", cfg.j}, {"dim", io::integer_json(d)}});
        case Format::Csv:
            return "genus,i,j,dim\n" + std::to_string(g) + "," + std::to_string(cfg.i) + "," + std::to_string(cfg.j) + "," +
                   d.get_str() + "\n";
        case Format::Text: break;
    }
    return d.get_str() + "\n";
}

std::string cmd_euler(const Config& cfg) {
    if (!cfg.max_n) throw UsageError("--max-n is required");
    const auto chi = qformula::euler_series(cfg.common.genus, *cfg.max_n);
    std::ostringstream out;
    switch (cfg.common.format) {
        case Format::Json:
            return dump({{"genus", cfg.common.genus}, {"max_n", *cfg.max_n}, {"euler", io::to_json(chi)}});
        case Format::Csv:
            out << "n,euler\n";
            for (std::size_t n = 0; n < chi.size(); ++n) out << n << ',' << chi[n].get_str() << '\n';
            return out.str();
        case Format::Text: break;
    }
    return io::render_list(chi) + "\n";
}

dga::OracleOptions oracle_options(const Config& cfg) {
    dga::OracleOptions options;
    options.threads = cfg.threads;
    if (!cfg.debug_dir.empty()) options.debug_dir = cfg.debug_dir;
    return options;
}

std::string cmd_oracle(const Config& cfg, std::ostream& err) {
    const int g = cfg.common.genus;
    const auto ns = n_range(cfg);
    require_oracle_budget(g, ns.back());
    const dga::Model model = cfg.model == "B" ? dga::Model::B : dga::Model::A;
    if (cfg.reps && model == dga::Model::B) throw UsageError("--reps is only available for model A");
    const auto options = oracle_options(cfg);

    std::vector<qformula::MixedTable> tables;
    std::vector<std::pair<int, io::DimMap>> dims;
    for (int n : ns) {
        if (g == 0 && n == 1) {
            if (cfg.n) throw UsageError("the DGA model does not cover genus 0 with n = 1");
            err << "oracle: skipping n = 1 for genus 0\n";
            continue;
        }
        if (cfg.reps)
            tables.push_back(dga::cohomology_reps(g, n, options));
        else
            dims.emplace_back(n, dga::regraded_dims(dga::cohomology_dims(g, n, model, options)));
        err << "oracle: genus " << g << ", n " << n << " done\n";
    }
    if (cfg.reps) return render_tables(cfg, tables);

    std::ostringstream out;
    if (cfg.common.format == Format::Csv) out << io::csv_header();
    json array = json::array();
    for (const auto& [n, d] : dims) {
        switch (cfg.common.format) {
            case Format::Json: array.push_back(io::dims_to_json(g, n, d)); break;
            case Format::Csv: out << io::csv_rows(n, d); break;
            case Format::Text: out << io::render_dims(g, n, d); break;
        }
    }
    if (cfg.common.format == Format::Json) return dump(array.size() == 1 && cfg.n ? array[0] : array);
    return out.str();
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const int g = cfg.common.genus;
    if (!cfg.max_n) throw UsageError("--max-n is required");
    const int max_n = *cfg.max_n;
    require_oracle_budget(g, max_n);
    const auto options = oracle_options(cfg);

    bool all_ok = true;
    if (g == 0) {
        for (int n = 0; n <= max_n; ++n) {
            if (n == 1) {
                out << "n=1 skipped\n";
                continue;
            }
            const auto expected = qformula::genus0_betti(n);
            const auto got = dga::betti_from_dims(dga::cohomology_dims(0, n, dga::Model::A, options));
            const bool ok = expected == got;
            all_ok = all_ok && ok;
            out << "n=" << n << (ok ? " ok" : " MISMATCH") << '\n';
            if (!ok) out << "  closed form: " << io::render_list(expected) << "\n  oracle:      " << io::render_list(got) << '\n';
            err << "verify: n " << n << " done\n";
        }
        return all_ok ? kExitOk : kExitMismatch;
    }

    const auto tables = qformula::mixed_tables(g, max_n);
    for (int n = 0; n <= max_n; ++n) {
        const auto& formula = tables[n];
        bool ok = true;
        std::ostringstream diff;
        if (cfg.reps) {
            const auto oracle = dga::cohomology_reps(g, n, options);
            std::set<std::pair<int, int>> keys;
            for (const auto& [kh, rep] : formula.entries) keys.insert(kh);
            for (const auto& [kh, rep] : oracle.entries) keys.insert(kh);
            for (const auto& kh : keys) {
                const auto a = formula.at(kh.first, kh.second);
                const auto b = oracle.at(kh.first, kh.second);
                if (a == b) continue;
                ok = false;
                diff << "  (n,k,h) = (" << n << "," << kh.first << "," << kh.second << "): formula " << repr::to_string(a)
                     << ", oracle " << repr::to_string(b) << '\n';
            }
        } else {
            const auto a_dims = formula.dims();
            const auto b_dims = dga::regraded_dims(dga::cohomology_dims(g, n, dga::Model::A, options));
            std::set<std::pair<int, int>> keys;
            for (const auto& [kh, d] : a_dims) keys.insert(kh);
            for (const auto& [kh, d] : b_dims) keys.insert(kh);
            for (const auto& kh : keys) {
                const Integer a = a_dims.count(kh) ? a_dims.at(kh) : Integer(0);
                const Integer b = b_dims.count(kh) ? b_dims.at(kh) : Integer(0);
                if (a == b) continue;
                ok = false;
                diff << "  (n,k,h) = (" << n << "," << kh.first << "," << kh.second << "): formula " << a.get_str()
                     << ", oracle " << b.get_str() << '\n';
            }
        }
        all_ok = all_ok && ok;
        out << "n=" << n << (ok ? " ok" : " MISMATCH") << '\n' << diff.str();
        err << "verify: n " << n << " done\n";
    }
    return all_ok ? kExitOk : kExitMismatch;
}

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--genus,-g", common.genus, "genus of the surface")->required()->check(CLI::NonNegativeNumber);
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    sub->add_option("--format", common.format, "output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out,-o", common.out_path, "write data to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weight-graded Betti numbers of UConf_n on a closed genus-g surface", "confcoh"};
    app.require_subcommand(1);
    Config cfg;

    auto* q = app.add_subcommand("q-series", "master series Q_g truncated at u^max_n");
    add_common(q, cfg.common);
    q->add_option("--max-n", cfg.max_n, "truncation order in u")->check(CLI::NonNegativeNumber);
    q->add_flag("--dims", cfg.dims, "replace representations by their dimensions");

    auto* table = app.add_subcommand("table", "degree/weight table of H^*(UConf_n) with decompositions");
    add_common(table, cfg.common);
    table->add_option("--n", cfg.n, "number of points")->check(CLI::NonNegativeNumber);
    table->add_option("--max-n", cfg.max_n, "all n from 0 to max-n")->check(CLI::NonNegativeNumber);

    auto* betti = app.add_subcommand("betti", "Betti numbers of UConf_n");
    add_common(betti, cfg.common);
    betti->add_option("--n", cfg.n, "number of points")->check(CLI::NonNegativeNumber);
    betti->add_option("--max-n", cfg.max_n, "all n from 0 to max-n")->check(CLI::NonNegativeNumber);

    auto* dim = app.add_subcommand("dim", "dimension of V(i,j)");
    add_common(dim, cfg.common);
    dim->add_option("--i", cfg.i, "coefficient of the first fundamental weight")->required();
    dim->add_option("--j", cfg.j, "index of the second fundamental weight, 0..g")->required();

    auto* euler = app.add_subcommand("euler", "Euler characteristics of UConf_n for n = 0..max-n");
    add_common(euler, cfg.common);
    euler->add_option("--max-n", cfg.max_n, "largest n")->check(CLI::NonNegativeNumber);

    auto add_oracle_options = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "worker threads (default: CONFCOH_THREADS or all cores)");
        sub->add_option("--debug-dir", cfg.debug_dir, "dump differential blocks as Matrix Market files");
        sub->add_flag("--reps", cfg.reps, "compare/decompose representations, not just dimensions");
    };
    auto* oracle = app.add_subcommand("oracle", "cohomology of the DGA model by exact linear algebra");
    add_common(oracle, cfg.common);
    oracle->add_option("--n", cfg.n, "number of points")->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-n", cfg.max_n, "all n from 0 to max-n")->check(CLI::NonNegativeNumber);
    oracle->add_option("--model", cfg.model, "A (default) or B")->check(CLI::IsMember({"A", "B"}));
    add_oracle_options(oracle);

    auto* verify = app.add_subcommand("verify", "compare the closed formula with the DGA oracle");
    add_common(verify, cfg.common);
    verify->add_option("--max-n", cfg.max_n, "check n = 0..max-n")->check(CLI::NonNegativeNumber);
    add_oracle_options(verify);

    std::vector<const char*> argv{"confcoh"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream data;
    int code = kExitOk;
    try {
        if (q->parsed())
            data << cmd_q_series(cfg);
        else if (table->parsed())
            data << cmd_table(cfg, err);
        else if (betti->parsed())
            data << cmd_betti(cfg);
        else if (dim->parsed())
            data << cmd_dim(cfg);
        else if (euler->parsed())
            data << cmd_euler(cfg);
        else if (oracle->parsed())
            data << cmd_oracle(cfg, err);
        else if (verify->parsed())
            code = cmd_verify(cfg, data, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Genus0N1Unsupported& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }

    if (cfg.common.out_path.empty()) {
        out << data.str();
    } else {
        std::ofstream file(cfg.common.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.common.out_path << '\n';
            return kExitUsage;
        }
        file << data.str();
    }
    return code;
}

}  // namespace confcoh::cli
