#include "hodgekit/scalar.hpp"

#include "hodgekit/errors.hpp"

#include <ostream>

namespace hodgekit {

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("division by zero scalar");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    const mpq_class n = o.norm2();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

Scalar Scalar::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Scalar(1);
        case 1: return Scalar::i();
        case 2: return Scalar(-1);
        default: return -Scalar::i();
    }
}

std::string rational_to_string(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class rational_from_string(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    const auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start >= s.size()) throw InvalidInput("malformed rational literal '" + text + "'");
        for (std::size_t k = start; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw InvalidInput("malformed rational literal '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return mpq_class(mpz_class(text[0] == '+' ? text.substr(1) : text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
    mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

std::string Scalar::to_string() const {
    if (is_real()) return rational_to_string(re_);
    std::string out = rational_to_string(re_);
    out += sgn(im_) < 0 ? "-" : "+";
    out += rational_to_string(abs(im_));
    out += "*i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hodgekit
