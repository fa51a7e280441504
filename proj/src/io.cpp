#include "contactloc/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "contactloc/errors.hpp"

namespace contactloc {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw ParseError("malformed JSON config");
    return parsed;
}

mpq_class rational_from_json(const json& value, const std::string& field) {
    if (value.is_number_integer()) return mpq_class(value.get<long>());
    if (value.is_string()) return rational_from_string(value.get<std::string>());
    throw ParseError(field + " entries must be integers or rational strings like \"3/2\"");
}

mpz_class integer_from_json(const json& value, const std::string& field) {
    if (value.is_number_integer()) return mpz_class(value.get<long>());
    if (value.is_string()) {
        try {
            return mpz_class(value.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(field + " entries must be integers");
        }
    }
    throw ParseError(field + " entries must be integers");
}

WeightedSphere sphere_from_json(const json& config) {
    if (!config.is_object()) throw ParseError("config must be a JSON object");
    if (!config.contains("n") || !config.contains("w") || !config.contains("beta")) {
        throw ParseError("config needs fields n, w, beta");
    }
    if (!config["n"].is_number_integer()) throw ParseError("n must be an integer");
    int n = config["n"].get<int>();
    if (!config["w"].is_array() || !config["beta"].is_array()) {
        throw ParseError("w and beta must be arrays");
    }
    std::vector<mpq_class> w;
    for (const auto& entry : config["w"]) w.push_back(rational_from_json(entry, "w"));
    std::vector<mpz_class> beta;
    for (const auto& entry : config["beta"]) beta.push_back(integer_from_json(entry, "beta"));
    return WeightedSphere(n, std::move(w), std::move(beta));
}

}  // namespace

mpq_class rational_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
            throw ParseError("invalid rational literal '" + text + "'");
        }
    }
    mpq_class value;
    try {
        value = mpq_class(text);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal '" + text + "'");
    }
    if (value.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

WeightedSphere sphere_from_json_text(const std::string& text) {
    return sphere_from_json(parse_json(text));
}

WeightedSphere sphere_from_file(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        buffer << in.rdbuf();
    }
    return sphere_from_json_text(buffer.str());
}

bool eta_from_json_text(const std::string& text, std::string* eta_out) {
    json config = parse_json(text);
    if (!config.is_object() || !config.contains("eta")) return false;
    if (!config["eta"].is_string()) throw ParseError("eta must be a polynomial string");
    *eta_out = config["eta"].get<std::string>();
    return true;
}

std::string sig15(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

std::string format_complex(std::complex<double> value) {
    if (value.imag() == 0.0) return sig15(value.real());
    std::string out = sig15(value.real());
    out += value.imag() < 0.0 ? " - " : " + ";
    out += sig15(std::abs(value.imag()));
    out += "*i";
    return out;
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
    out << "bin_left,bin_right,density,stderr\n";
    for (size_t k = 0; k + 1 < histogram.edges.size(); ++k) {
        out << sig15(histogram.edges[k]) << ',' << sig15(histogram.edges[k + 1]) << ','
            << sig15(histogram.density[k]) << ',' << sig15(histogram.density_stderr[k]) << '\n';
    }
}

void write_profile_csv(std::ostream& out, const PiecewisePolynomial& profile,
                       int points_per_piece) {
    if (points_per_piece < 1) throw ConfigError("points per piece must be positive");
    out << "y,re,im\n";
    for (size_t k = 0; k < profile.pieces().size(); ++k) {
        double a = profile.breakpoints()[k].get_d();
        double b = profile.breakpoints()[k + 1].get_d();
        for (int p = 0; p < points_per_piece; ++p) {
            double y = a + (b - a) * (p + 0.5) / points_per_piece;
            std::complex<double> value = profile.eval(y);
            out << sig15(y) << ',' << sig15(value.real()) << ',' << sig15(value.imag()) << '\n';
        }
    }
}

}  // namespace contactloc
