#include "ampcalc/textio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ampcalc/errors.hpp"

namespace ampcalc {

std::string format_double(double x, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
    return buf;
}

std::string format_complex(std::complex<double> z, int significant_digits) {
    std::string re = format_double(z.real(), significant_digits);
    std::string im = format_double(std::abs(z.imag()), significant_digits);
    char sign = std::signbit(z.imag()) && z.imag() != 0.0 ? '-' : '+';
    return re + sign + im + "i";
}

namespace {

double parse_double_strict(const std::string& text) {
    if (text.empty())
        throw Error(ErrorCode::BadInput, "empty number");
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw Error(ErrorCode::BadInput, "malformed number '" + text + "'");
    if (!std::isfinite(value))
        throw Error(ErrorCode::BadInput, "non-finite number '" + text + "'");
    return value;
}

} // namespace

std::complex<double> parse_complex(const std::string& token) {
    if (token.empty())
        throw Error(ErrorCode::BadInput, "empty complex literal");
    if (token.back() != 'i')
        return {parse_double_strict(token), 0.0};

    std::string body = token.substr(0, token.size() - 1);
    // Split at the last +/- that is not an exponent sign and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw Error(ErrorCode::BadInput,
                    "complex literal '" + token + "' is not of the form re+imi");
    double re = parse_double_strict(body.substr(0, split));
    std::string imag_part = body.substr(split); // keeps the sign
    if (imag_part == "+" || imag_part == "-") imag_part += "1";
    double im = parse_double_strict(imag_part);
    return {re, im};
}

} // namespace ampcalc
