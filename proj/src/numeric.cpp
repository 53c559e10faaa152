#include "bfree/numeric.hpp"

#include <numeric>

#include "bfree/error.hpp"

namespace bfree {

std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            const auto dot = text.find('.');
            if (dot == std::string_view::npos) return Rational(BigInt(std::string(text)));
            // Decimal notation, read exactly: "0.375" -> 375/1000.
            const auto whole = text.substr(0, dot);
            const auto frac = text.substr(dot + 1);
            if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos) {
                fail("BadRational", "cannot parse rational '" + std::string(text) + "'");
            }
            const bool negative = !whole.empty() && whole.front() == '-';
            const BigInt digits(std::string(whole.substr(negative ? 1 : 0)) + std::string(frac));
            BigInt scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            return Rational(negative ? BigInt(-digits) : digits, scale);
        }
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) fail("BadRational", "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        fail("BadRational", "cannot parse rational '" + std::string(text) + "'");
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace bfree
