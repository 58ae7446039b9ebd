#include "chowmot/rational.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace chowmot {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    const auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(what + " in rational literal '" + text + "'", i);
    };
    auto read_int = [&]() -> Integer {
        bool negative = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            negative = text[i] == '-';
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw fail("expected digits");
        Integer value(text.substr(start, i - start));
        return negative ? Integer(-value) : value;
    };

    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    Integer num = read_int();
    Integer den = 1;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '/') {
        ++i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        den = read_int();
        if (den == 0) throw DomainError("rational with zero denominator");
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw fail("trailing characters");

    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) {
        throw DomainError("expected an integer, got " + to_string(q));
    }
    const Integer& n = q.get_num();
    if (!n.fits_slong_p()) {
        throw DomainError("integer out of 64-bit range: " + to_string(q));
    }
    return static_cast<std::int64_t>(n.get_si());
}

Integer binomial(int n, int k) {
    if (n < 0) throw DomainError("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

Integer factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Rational bernoulli(int n) {
    if (n < 0) throw DomainError("Bernoulli number of negative index");
    // Recomputed per call; indices stay tiny (bounded by variety dimensions).
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        if (m == 0) {
            b[0] = 1;
            continue;
        }
        Rational acc = 0;
        for (int k = 0; k < m; ++k) {
            acc += Rational(binomial(m + 1, k)) * b[k];
        }
        acc /= Rational(m + 1);
        b[m] = -acc;
    }
    return b[n];
}

}  // namespace chowmot
