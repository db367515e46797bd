#include "padiccf/lognumber.hpp"

#include <cmath>
#include <sstream>

namespace padiccf {

namespace {
constexpr double kLog10_2 = 0.30102999566398119521;
}

void LogNumber::normalize() {
    if (std::isnan(frac_)) throw std::logic_error("LogNumber: NaN fraction");
    double fl = std::floor(frac_);
    if (fl != 0.0) {
        int_ += Int(static_cast<long>(fl));
        frac_ -= fl;
    }
    if (frac_ < 0.0) {  // floating floor edge
        frac_ += 1.0;
        int_ -= 1;
    }
    if (frac_ >= 1.0) {
        frac_ -= 1.0;
        int_ += 1;
    }
}

LogNumber LogNumber::from_log10(Int integer_part, double fraction) {
    LogNumber x(std::move(integer_part), fraction);
    x.normalize();
    return x;
}

LogNumber LogNumber::from_integer(const Int& value) {
    if (value < 1) throw ParseError("LogNumber::from_integer: value must be >= 1");
    long expo = 0;
    double mant = mpz_get_d_2exp(&expo, value.get_mpz_t());  // value = mant * 2^expo
    double log10 = std::log10(mant) + static_cast<double>(expo) * kLog10_2;
    double fl = std::floor(log10);
    return from_log10(Int(static_cast<long>(fl)), log10 - fl);
}

LogNumber LogNumber::from_double(double value) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw ParseError("LogNumber::from_double: value must be positive and finite");
    double log10 = std::log10(value);
    double fl = std::floor(log10);
    return from_log10(Int(static_cast<long>(fl)), log10 - fl);
}

LogNumber LogNumber::from_rational(const Rat& value) {
    if (value <= 0) throw ParseError("LogNumber::from_rational: value must be positive");
    return from_integer(num(value)) / from_integer(den(value));
}

double LogNumber::log10_approx() const { return int_.get_d() + frac_; }

LogNumber LogNumber::operator*(const LogNumber& o) const {
    return from_log10(int_ + o.int_, frac_ + o.frac_);
}

LogNumber LogNumber::operator/(const LogNumber& o) const {
    return from_log10(int_ - o.int_, frac_ - o.frac_);
}

LogNumber LogNumber::pow(const Rat& exponent) const {
    // split (int + frac) * u/w into an exact integer part and a small rest
    Rat scaled = Rat(int_) * exponent;
    Int whole = num(scaled) / den(scaled);  // truncation; rest in (-1, 1)
    Rat rest = scaled - Rat(whole);
    double f = frac_ * exponent.get_d() + rest.get_d();
    return from_log10(whole, f);
}

LogNumber LogNumber::operator+(const LogNumber& o) const {
    const LogNumber& hi = *this < o ? o : *this;
    const LogNumber& lo = *this < o ? *this : o;
    Int gap_int = hi.int_ - lo.int_;
    if (gap_int > 400) return hi;  // correction below double underflow
    double gap = gap_int.get_d() + hi.frac_ - lo.frac_;
    double corr = std::log10(1.0 + std::pow(10.0, -gap));
    return from_log10(hi.int_, hi.frac_ + corr);
}

int LogNumber::compare(const LogNumber& o) const {
    int c = cmp(int_, o.int_);
    if (c != 0) return c;
    if (frac_ < o.frac_) return -1;
    if (frac_ > o.frac_) return 1;
    return 0;
}

std::string LogNumber::str() const {
    std::ostringstream os;
    os << "10^(" << int_.get_str() << " + " << frac_ << ")";
    return os.str();
}

nlohmann::json LogNumber::to_json() const {
    return {{"log10_int", int_.get_str()}, {"log10_frac", frac_}};
}

}  // namespace padiccf
