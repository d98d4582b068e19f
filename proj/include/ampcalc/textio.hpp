// Text round-tripping for the numeric formats shared by kernel files,
// reports and the CLI: doubles at full precision and complex numbers in
// the `re+imi` form (e.g. "0.5+0i", "1.5-2e-03i").

#ifndef AMPCALC_TEXTIO_HPP
#define AMPCALC_TEXTIO_HPP

#include <complex>
#include <string>

namespace ampcalc {

//! printf %.*g; 17 significant digits round-trip any double exactly.
std::string format_double(double x, int significant_digits = 17);

//! `re+imi`, both parts at the given precision (imaginary part always present).
std::string format_complex(std::complex<double> z, int significant_digits = 17);

//! Parse `re+imi` or a bare real. Throws BadInput on malformed or
//! non-finite values.
std::complex<double> parse_complex(const std::string& token);

} // namespace ampcalc

#endif
