#include "tkt/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace tkt {

Rat rat_from_decimal(const std::string &s) {
    if (s.empty()) throw std::invalid_argument("rat_from_decimal: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '.') {
            if (seen_dot) throw std::invalid_argument("rat_from_decimal: two decimal points");
            seen_dot = true;
        } else if (ch == '/') {
            // Also accept exact "p/q" form round-tripped from rat_to_string.
            Rat num(s.substr(0, i)), den(s.substr(i + 1));
            if (den == 0) throw std::invalid_argument("rat_from_decimal: zero denominator");
            return num / den;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else {
            throw std::invalid_argument("rat_from_decimal: bad character in \"" + s + "\"");
        }
    }
    if (!seen_digit) throw std::invalid_argument("rat_from_decimal: no digits in \"" + s + "\"");
    mpz_class num(digits.empty() ? "0" : digits, 10);
    mpz_class den = 1;
    for (long k = 0; k < frac_len; ++k) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat &x) {
    mpz_class num = x.get_num(), den = x.get_den();
    // Exact terminating decimal exists iff den = 2^a 5^b.
    mpz_class d = den;
    long a = 0, b = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++a;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++b;
    }
    if (d != 1) return num.get_str() + "/" + den.get_str();
    // Scale to denominator 10^max(a,b).
    long k = std::max(a, b);
    mpz_class scaled = num;
    for (long i = 0; i < k - a; ++i) scaled *= 2;
    for (long i = 0; i < k - b; ++i) scaled *= 5;
    bool neg = scaled < 0;
    mpz_class mag = neg ? mpz_class(-scaled) : scaled;
    std::string digits = mag.get_str();
    std::string out = neg ? "-" : "";
    if (k == 0) return out + digits;
    if (static_cast<long>(digits.size()) <= k)
        digits.insert(0, static_cast<size_t>(k) - digits.size() + 1, '0');
    out += digits.substr(0, digits.size() - static_cast<size_t>(k));
    out += ".";
    out += digits.substr(digits.size() - static_cast<size_t>(k));
    return out;
}

std::string gauss_to_string(const GaussRat &x) {
    std::string re = rat_to_string(x.re);
    std::string im = rat_to_string(x.im);
    if (x.im >= 0) return re + "+" + im + "i";
    return re + im + "i";  // im already carries its minus sign
}

}  // namespace tkt
