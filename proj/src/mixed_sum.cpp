#include "polyu/mixed_sum.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace polyu {

namespace {

std::vector<i64> parse_side(std::string_view side) {
    std::vector<i64> out;
    std::size_t i = 0;
    while (i < side.size()) {
        while (i < side.size() && (side[i] == ' ' || side[i] == ',')) ++i;
        if (i >= side.size()) break;
        std::size_t j = i;
        if (side[j] == '-' || side[j] == '+') ++j;
        while (j < side.size() && side[j] >= '0' && side[j] <= '9') ++j;
        i64 value = 0;
        auto [ptr, ec] = std::from_chars(side.data() + i, side.data() + j, value);
        if (ec != std::errc() || ptr != side.data() + j || j == i)
            fail(errc::invalid_argument, "bad coefficient in mixed-sum notation");
        out.push_back(value);
        i = j;
    }
    return out;
}

void validate(const std::vector<i64>& coeffs) {
    for (i64 c : coeffs)
        if (c < 1) fail(errc::invalid_argument, "mixed-sum coefficients must be >= 1");
}

std::string join(const std::vector<i64>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace

MixedSum::MixedSum(std::vector<i64> squares, std::vector<i64> octagonals)
    : squares_(std::move(squares)), octagonals_(std::move(octagonals)) {
    validate(squares_);
    validate(octagonals_);
    std::sort(squares_.begin(), squares_.end());
    std::sort(octagonals_.begin(), octagonals_.end());
}

MixedSum MixedSum::parse(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        fail(errc::invalid_argument, "mixed-sum notation needs a '|' separator");
    if (text.find('|', bar + 1) != std::string_view::npos)
        fail(errc::invalid_argument, "mixed-sum notation has more than one '|'");
    return MixedSum(parse_side(text.substr(0, bar)), parse_side(text.substr(bar + 1)));
}

std::string MixedSum::notation() const {
    return join(squares_, ',') + "|" + join(octagonals_, ',');
}

std::string MixedSum::notation_spaced() const {
    return join(squares_, ' ') + "|" + join(octagonals_, ' ');
}

MixedSum MixedSum::with_square(i64 c) const {
    std::vector<i64> sq = squares_;
    sq.insert(std::upper_bound(sq.begin(), sq.end(), c), c);
    MixedSum out;
    out.squares_ = std::move(sq);
    out.octagonals_ = octagonals_;
    if (c < 1) fail(errc::invalid_argument, "mixed-sum coefficients must be >= 1");
    return out;
}

MixedSum MixedSum::with_octagonal(i64 c) const {
    std::vector<i64> oc = octagonals_;
    oc.insert(std::upper_bound(oc.begin(), oc.end(), c), c);
    MixedSum out;
    out.squares_ = squares_;
    out.octagonals_ = std::move(oc);
    if (c < 1) fail(errc::invalid_argument, "mixed-sum coefficients must be >= 1");
    return out;
}

std::vector<MixedSum> MixedSum::leave_one_out() const {
    std::vector<MixedSum> out;
    for (std::size_t i = 0; i < squares_.size(); ++i) {
        if (i > 0 && squares_[i] == squares_[i - 1]) continue;  // duplicate coefficient
        MixedSum sub;
        sub.squares_ = squares_;
        sub.squares_.erase(sub.squares_.begin() + static_cast<std::ptrdiff_t>(i));
        sub.octagonals_ = octagonals_;
        out.push_back(std::move(sub));
    }
    for (std::size_t i = 0; i < octagonals_.size(); ++i) {
        if (i > 0 && octagonals_[i] == octagonals_[i - 1]) continue;
        MixedSum sub;
        sub.squares_ = squares_;
        sub.octagonals_ = octagonals_;
        sub.octagonals_.erase(sub.octagonals_.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(sub));
    }
    return out;
}

}  // namespace polyu
