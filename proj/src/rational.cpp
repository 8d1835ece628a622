#include "votedim/rational.hpp"

#include "votedim/error.hpp"

#include <cctype>
#include <string>

namespace votedim {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view text, std::string_view original)
{
    auto fail = [&] { return ParseError("not a rational literal: '" + std::string(original) + "'"); };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = text.substr(e + 1);
        text = text.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6)
            throw fail();
        exponent = std::stol(std::string(exp_part));
        if (exp_negative)
            exponent = -exponent;
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
        if (!frac_part.empty() && !all_digits(frac_part))
            throw fail();
    }
    if (int_part.empty() && frac_part.empty())
        throw fail();
    if (!int_part.empty() && !all_digits(int_part))
        throw fail();

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());

    Rational value;
    if (exponent >= 0)
        value = Rational(numerator * pow10(static_cast<unsigned long>(exponent)));
    else
        value = Rational(numerator, pow10(static_cast<unsigned long>(-exponent)));
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view original = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        std::string_view num_digits = num;
        if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
            num_digits.remove_prefix(1);
        if (!all_digits(num_digits) || !all_digits(den))
            throw ParseError("not a rational literal: '" + std::string(original) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0)
            throw ParseError("zero denominator: '" + std::string(original) + "'");
        mpz_class n(std::string(num_digits), 10);
        if (num.front() == '-')
            n = -n;
        Rational r(n, d);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text, original);
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

}  // namespace votedim
