#include "springer/report.hpp"

#include <sstream>

namespace springer {

namespace {

nlohmann::json exact_number(const mpz_class& value) {
    static const mpz_class kJsSafeMax = (mpz_class(1) << 53) - 1;
    if (value <= kJsSafeMax) return static_cast<std::uint64_t>(value.get_ui());
    return value.get_str();
}

nlohmann::json exact_array(const std::vector<mpz_class>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const mpz_class& v : values) arr.push_back(exact_number(v));
    return arr;
}

} // namespace

nlohmann::json betti_report_json(const BettiTable& table) {
    nlohmann::json shape = nlohmann::json::array();
    for (int p : table.shape.parts()) shape.push_back(p);
    std::vector<mpz_class> by_codim;
    for (int m = 0; m <= static_cast<int>(table.dim); ++m) by_codim.push_back(table.poincare.coeff(m));
    return nlohmann::json{{"shape", shape},
                          {"n", table.shape.n()},
                          {"dim", table.dim},
                          {"poincare_by_codim", exact_array(by_codim)},
                          {"betti", exact_array(table.betti)},
                          {"num_standard", exact_number(table.num_standard)},
                          {"num_row_standard", table.num_row_standard.get_str()},
                          {"method", method_name(table.method)},
                          {"agreement", table.agreement}};
}

std::string betti_report_text(const BettiTable& table) {
    std::ostringstream out;
    out << "shape: " << (table.shape.empty() ? "(empty)" : table.shape.to_string()) << "\n";
    out << "n: " << table.shape.n() << "\n";
    out << "dim: " << table.dim << "\n";
    out << "poincare (by codim): " << table.poincare.to_string() << "\n";
    out << "betti:";
    for (const mpz_class& b : table.betti) out << ' ' << b.get_str();
    out << "\n";
    out << "standard tableaux: " << table.num_standard.get_str() << "\n";
    out << "row-standard tableaux: " << table.num_row_standard.get_str() << "\n";
    out << "method: " << method_name(table.method) << "\n";
    if (table.method == Method::all)
        out << "agreement: " << (table.agreement ? "true" : "false") << "\n";
    return out.str();
}

std::string betti_csv_header() {
    return "n,shape,dim,betti,num_standard,num_row_standard,agreement";
}

std::string betti_csv_row(const BettiTable& table) {
    std::ostringstream out;
    out << table.shape.n() << ",\"" << table.shape.to_string() << "\"," << table.dim << ",\"";
    for (std::size_t m = 0; m < table.betti.size(); ++m) {
        if (m) out << ' ';
        out << table.betti[m].get_str();
    }
    out << "\"," << table.num_standard.get_str() << "," << table.num_row_standard.get_str()
        << ',' << (table.agreement ? "true" : "false");
    return out.str();
}

} // namespace springer
