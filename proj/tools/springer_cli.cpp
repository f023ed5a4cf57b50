// Command-line front end: Betti numbers / Poincaré polynomials of nilpotent
// Jordan shapes, tableau listings, the elementary-move graph, class codes,
// batch tables and component relabeling.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "springer/errors.hpp"
#include "springer/moves.hpp"
#include "springer/poincare.hpp"
#include "springer/report.hpp"
#include "springer/rho.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitDisagreement = 4;

struct Options {
    std::string shape;
    std::string method = "all";
    std::string format = "text";
    std::uint64_t cap = springer::kDefaultEnumerationCap;
    std::string out;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.out.empty()) return std::cout;
    file.open(opt.out);
    if (!file) throw std::runtime_error("cannot open output file " + opt.out);
    return file;
}

void add_common(CLI::App* cmd, Options& opt, bool with_method = true) {
    cmd->add_option("--shape", opt.shape, "partition, comma-separated parts (e.g. 2,2,1)")
        ->required();
    if (with_method)
        cmd->add_option("--method", opt.method,
                        "enumeration, product-sum, recursion or all");
    cmd->add_option("--format", opt.format, "text, json or csv");
    cmd->add_option("--cap", opt.cap, "enumeration cap")
        ->envname("SPRINGER_CAP");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
}

void print_betti(const springer::BettiTable& table, const Options& opt, std::ostream& out,
                 bool polynomial_only) {
    if (opt.format == "json") {
        out << springer::betti_report_json(table).dump(2) << "\n";
    } else if (opt.format == "csv") {
        out << springer::betti_csv_header() << "\n" << springer::betti_csv_row(table) << "\n";
    } else if (opt.format == "text") {
        if (polynomial_only)
            out << table.poincare.to_string() << "\n";
        else
            out << springer::betti_report_text(table);
    } else {
        throw springer::parse_error("unknown format '" + opt.format + "'");
    }
}

int run_betti(const Options& opt, bool polynomial_only) {
    const auto shape = springer::Partition::parse(opt.shape);
    const auto method = springer::method_from_string(opt.method);
    const auto table = springer::betti_numbers(shape, method, opt.cap);
    std::ofstream file;
    print_betti(table, opt, open_output(opt, file), polynomial_only);
    return 0;
}

int run_tableaux(const Options& opt, bool standard_only, std::optional<int> max_inversions) {
    if (opt.format != "text")
        throw springer::parse_error("tableaux listings are text only");
    const auto shape = springer::Partition::parse(opt.shape);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    springer::for_each_row_standard(
        shape,
        [&](const springer::RowStandardTableau& t) {
            const int inv = springer::inversion_count(t);
            if (standard_only && inv != 0) return;
            if (max_inversions && inv > *max_inversions) return;
            out << t.to_string() << "  inv=" << inv << "\n";
        },
        opt.cap);
    return 0;
}

int run_graph(const Options& opt) {
    if (opt.format != "text" && opt.format != "dot")
        throw springer::parse_error("the move graph is emitted as DOT only");
    const auto shape = springer::Partition::parse(opt.shape);
    const auto graph = springer::MoveGraph::build(shape, opt.cap);
    std::ofstream file;
    open_output(opt, file) << springer::to_dot(graph);
    return 0;
}

int run_encode(const std::string& tableau_text, const Options& opt) {
    const auto t = springer::RowStandardTableau::parse(tableau_text);
    const auto [standard, code] = springer::encode_tableau(t);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json")
        out << nlohmann::json{{"tableau", t.to_string()},
                              {"standardization", standard.to_string()},
                              {"code", code.to_string()},
                              {"inversions", springer::inversion_count(t)}}
                   .dump(2)
            << "\n";
    else
        out << standard.to_string() << "  code=" << code.to_string() << "\n";
    return 0;
}

int run_decode(const std::string& standard_text, const std::string& code_text,
               const Options& opt) {
    const auto standard = springer::StandardTableau::parse(standard_text);
    springer::MoveCode code = springer::MoveCode::parse(code_text);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    try {
        out << springer::decode_tableau(standard, code).to_string() << "\n";
    } catch (const std::out_of_range& e) {
        throw springer::parse_error(e.what());
    }
    return 0;
}

int run_table(int n_max, const Options& opt) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out.empty()) {
        std::filesystem::create_directories(opt.out);
        const auto path = std::filesystem::path(opt.out) / "betti_table.csv";
        file.open(path);
        if (!file) throw std::runtime_error("cannot open " + path.string());
        out = &file;
    }
    *out << springer::betti_csv_header() << "\n";
    for (int n = 0; n <= n_max; ++n)
        for (const auto& shape : springer::partitions_of(n))
            *out << springer::betti_csv_row(
                        springer::betti_numbers(shape, springer::Method::all, opt.cap))
                 << "\n";
    return 0;
}

int run_relabel(const std::string& chain_text, const Options& opt) {
    const auto shape = springer::Partition::parse(opt.shape);
    springer::IntervalChain chain = [&] {
        if (chain_text == "prefix") return springer::IntervalChain::prefix(shape.n());
        if (chain_text == "suffix") return springer::IntervalChain::suffix(shape.n());
        return springer::IntervalChain::parse(chain_text);
    }();
    if (chain.n() != shape.n())
        throw springer::parse_error("chain is for n = " + std::to_string(chain.n()) +
                                    ", shape has n = " + std::to_string(shape.n()));
    const auto table = springer::relabel_table(shape, chain, opt.cap);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        nlohmann::json map = nlohmann::json::object();
        for (const auto& [t, s] : table) map[t.to_string()] = s.to_string();
        out << map.dump(2) << "\n";
    } else {
        for (const auto& [t, s] : table)
            out << t.to_string() << " -> " << s.to_string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers of type-A Springer fibers via row-standard tableaux"};
    app.require_subcommand(1);

    Options opt;
    std::string tableau_text, code_text, chain_text;
    int n_max = 0;
    bool standard_only = false;
    std::optional<int> max_inversions;

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of a shape");
    add_common(betti, opt);

    CLI::App* poincare = app.add_subcommand("poincare", "Poincaré polynomial (by codimension)");
    add_common(poincare, opt);

    CLI::App* tableaux = app.add_subcommand("tableaux", "list row-standard tableaux");
    add_common(tableaux, opt, false);
    tableaux->add_flag("--standard-only", standard_only, "keep inversion-free tableaux only");
    tableaux->add_option("--max-inversions", max_inversions, "keep tableaux with at most this many");

    CLI::App* graph = app.add_subcommand("graph", "move graph as DOT");
    add_common(graph, opt, false);

    CLI::App* encode = app.add_subcommand("encode", "standardization and move code of a tableau");
    encode->add_option("--tableau", tableau_text, "row-standard tableau")->required();
    encode->add_option("--format", opt.format, "text or json");
    encode->add_option("--out", opt.out, "output file (default stdout)");

    CLI::App* decode = app.add_subcommand("decode", "rebuild a tableau from its move code");
    decode->add_option("--tableau", tableau_text, "standard tableau")->required();
    decode->add_option("--code", code_text, "comma-separated move code")->required();
    decode->add_option("--out", opt.out, "output file (default stdout)");

    CLI::App* table = app.add_subcommand("table", "batch CSV over all shapes up to n-max");
    table->add_option("--n-max", n_max, "largest n")->required();
    table->add_option("--cap", opt.cap, "enumeration cap")->envname("SPRINGER_CAP");
    table->add_option("--out", opt.out, "output directory for betti_table.csv");

    CLI::App* relabel = app.add_subcommand("relabel", "component relabeling under an interval chain");
    add_common(relabel, opt, false);
    relabel->add_option("--chain", chain_text, "'prefix', 'suffix' or serialized pairs")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (betti->parsed()) return run_betti(opt, false);
        if (poincare->parsed()) return run_betti(opt, true);
        if (tableaux->parsed()) return run_tableaux(opt, standard_only, max_inversions);
        if (graph->parsed()) return run_graph(opt);
        if (encode->parsed()) return run_encode(tableau_text, opt);
        if (decode->parsed()) return run_decode(tableau_text, code_text, opt);
        if (table->parsed()) return run_table(n_max, opt);
        if (relabel->parsed()) return run_relabel(chain_text, opt);
    } catch (const springer::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const springer::cross_check_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const springer::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
