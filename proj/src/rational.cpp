#include "reven/rational.hpp"

#include "reven/error.hpp"

#include <cctype>

namespace reven {

Rat make_rat(i64 num, i64 den) {
    if (den == 0)
        throw UsageError("rational with zero denominator");
    Rat q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

bool rat_is_integer(const Rat& q) {
    return q.get_den() == 1;
}

i64 rat_to_i64(const Rat& q) {
    if (!rat_is_integer(q))
        throw InternalError("rat_to_i64: " + rat_canonical(q) + " is not an integer");
    const mpz_class& num = q.get_num();
    if (!num.fits_slong_p())
        throw InternalError("rat_to_i64: " + num.get_str() + " does not fit in 64 bits");
    return static_cast<i64>(num.get_si());
}

double rat_to_double(const Rat& q) {
    return q.get_d();
}

std::string rat_canonical(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_human(const Rat& q) {
    return q.get_str();
}

Rat parse_rat(std::string_view text) {
    if (text.empty())
        throw UsageError("empty rational");
    std::string num, den;
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
        den = "1";
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
    }
    auto valid = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    if (!valid(num) || !valid(den))
        throw UsageError("malformed rational '" + std::string(text) + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        throw UsageError("rational with zero denominator: '" + std::string(text) + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

i64 floor_div(const Rat& x, i64 d) {
    if (d <= 0)
        throw InternalError("floor_div: divisor must be positive");
    mpz_class den = x.get_den() * static_cast<long>(d);
    mpz_class quot;
    mpz_fdiv_q(quot.get_mpz_t(), x.get_num().get_mpz_t(), den.get_mpz_t());
    if (!quot.fits_slong_p())
        throw InternalError("floor_div: quotient does not fit in 64 bits");
    return static_cast<i64>(quot.get_si());
}

Rat rat_pow(i64 n, int k) {
    if (k < 0)
        throw InternalError("rat_pow: negative exponent");
    mpz_class base(static_cast<long>(n)), out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    return Rat(out);
}

} // namespace reven
