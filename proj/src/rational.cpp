#include <rf/errors.hpp>
#include <rf/rational.hpp>

#include <cctype>

namespace rf {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    if (text.empty())
        throw InputError("empty number in '" + std::string(whole) + "'");
    BigInt v = 0;
    for (char c : text) {
        if (! std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("bad rational '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (! body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(body.substr(0, slash), text);
        BigInt den = parse_integer(body.substr(slash + 1), text);
        if (den == 0)
            throw InputError("zero denominator in '" + std::string(text) + "'");
        result = Rational(num, den);
    }
    else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto int_part = body.substr(0, dot);
        auto frac_part = body.substr(dot + 1);
        BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
        BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i)
            scale *= 10;
        result = Rational(whole * scale + frac, scale);
    }
    else
        result = Rational(parse_integer(body, text));

    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational & r)
{
    if (denominator_of(r) == 1)
        return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::int64_t to_int64(const BigInt & v, const char * what)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InputError(std::string(what) + " does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

std::int64_t floor_mul(const Rational & r, std::int64_t x)
{
    BigInt num = numerator_of(r) * x;
    BigInt den = denominator_of(r);
    BigInt q = num / den;
    if (num % den != 0 && num < 0)
        q -= 1;
    return to_int64(q, "floor");
}

std::int64_t ceil_mul(const Rational & r, std::int64_t x)
{
    BigInt num = numerator_of(r) * x;
    BigInt den = denominator_of(r);
    BigInt q = num / den;
    if (num % den != 0 && num > 0)
        q += 1;
    return to_int64(q, "ceil");
}

Rational rpow(const Rational & base, int exponent)
{
    if (exponent < 0)
        return rpow(Rational(1) / base, -exponent);
    Rational result = 1;
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

} // namespace rf
