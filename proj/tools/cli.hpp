#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cangle/angle.hpp"
#include "cangle/gauge.hpp"

namespace cangle::cli {

// Dispatches one subcommand. Exit codes: 0 success, 2 usage error,
// 3 numeric/domain error, 4 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "re", "imi", "re+imi", "re-imi", "i", "-i", scientific notation allowed
cx parse_complex(std::string_view s);

// comma-separated complex literals
cvec parse_vector(std::string_view s);

// "l2" | "lp:P" | "linf" | "gram:FILE" | "gauge:FILE"; dim is taken from the
// parsed vectors for the coordinate norms and from the file otherwise
Space parse_norm(const std::string& spec, std::size_t dim);

std::string claims_to_json(const ClaimsReport& rep);
ClaimsReport claims_from_json(const std::string& text);

// header + one row per sample, phi,angle_re,angle_im,cos_re,cos_im,
// 12 significant digits
std::string oval_csv(const std::vector<OvalSample>& rows);

}  // namespace cangle::cli
