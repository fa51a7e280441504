#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "contactloc/dh.hpp"
#include "contactloc/mc_oracle.hpp"
#include "contactloc/sphere_model.hpp"

namespace contactloc {

// Exact rational from "p/q", "p", or "-p/q" text.  Throws ParseError on
// anything else, including zero denominators.
mpq_class rational_from_string(const std::string& text);

// Sphere from the JSON object {"n": int, "w": [rationals], "beta": [ints]};
// rationals may be JSON integers or strings like "3/2".  Throws ParseError
// on malformed JSON and ConfigError on invalid sphere data.
WeightedSphere sphere_from_json_text(const std::string& text);

// Reads the file (or stdin when path is "-") and parses it.
WeightedSphere sphere_from_file(const std::string& path);

// Extracts the optional "eta" field (textual polynomial in u, s) from config
// JSON text; returns false when absent.
bool eta_from_json_text(const std::string& text, std::string* eta_out);

// Numeric formatting used by all emitters: 15 significant digits.
std::string sig15(double value);
std::string format_complex(std::complex<double> value);

// CSV emitters; column layouts are part of the CLI contract.
// Histogram: bin_left,bin_right,density,stderr.
void write_histogram_csv(std::ostream& out, const Histogram& histogram);
// Profile: y,re,im with points_per_piece equispaced samples inside each
// nonempty piece (numeric values, prefactor included).
void write_profile_csv(std::ostream& out, const PiecewisePolynomial& profile,
                       int points_per_piece);

}  // namespace contactloc
