#include "schedsim/rational.hpp"

namespace schedsim {

std::string Rational::to_decimal(int places) const {
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;

    const bool negative = num_ < 0;
    const std::int64_t abs_num = negative ? -num_ : num_;

    // round half-up on |value| * scale
    std::int64_t scaled = (abs_num * scale * 2 + den_) / (2 * den_);

    std::string digits = std::to_string(scaled);
    std::string out = negative && scaled != 0 ? "-" : "";
    if (places == 0)
        return out + digits;
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return out + digits;
}

} // namespace schedsim
