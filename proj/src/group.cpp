#include "imbalance/group.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "imbalance/errors.hpp"

namespace imbalance {

GroupSpec::GroupSpec(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) fail(ErrorKind::InvalidGroup, "group needs at least one cyclic factor");
    order_ = 1;
    weights_.reserve(orders_.size());
    elementary_2_ = true;
    for (std::size_t n : orders_) {
        if (n < 2) fail(ErrorKind::InvalidGroup, "cyclic order " + std::to_string(n) + " is below 2");
        if (order_ > std::numeric_limits<std::size_t>::max() / n)
            fail(ErrorKind::Capacity, "group order overflows the native integer width");
        weights_.push_back(order_);
        order_ *= n;
        elementary_2_ = elementary_2_ && n == 2;
    }
    roots_.reserve(orders_.size());
    for (std::size_t n : orders_) {
        std::vector<std::complex<double>> table(n);
        for (std::size_t k = 0; k < n; ++k) {
            // Exact values on the axes keep the binary and Z_4 paths free of rounding noise.
            if (4 * k % n == 0) {
                static constexpr std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                table[k] = quarter[4 * k / n];
            } else {
                double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
                table[k] = {std::cos(angle), std::sin(angle)};
            }
        }
        roots_.push_back(std::move(table));
    }
}

bool GroupSpec::is_elementary() const noexcept {
    std::size_t p = orders_.front();
    for (std::size_t n : orders_)
        if (n != p) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void GroupSpec::check(Element x) const {
    if (x >= order_)
        fail(ErrorKind::Domain, "element " + std::to_string(x) + " outside group of order " + std::to_string(order_));
}

std::vector<std::size_t> GroupSpec::decode(Element x) const {
    check(x);
    std::vector<std::size_t> coords(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        coords[j] = x % orders_[j];
        x /= orders_[j];
    }
    return coords;
}

Element GroupSpec::encode(std::span<const std::size_t> coords) const {
    if (coords.size() != orders_.size()) fail(ErrorKind::Domain, "coordinate vector has wrong length");
    Element x = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        if (coords[j] >= orders_[j]) fail(ErrorKind::Domain, "coordinate out of range");
        x += coords[j] * weights_[j];
    }
    return x;
}

Element GroupSpec::add(Element x, Element y) const {
    check(x);
    check(y);
    if (elementary_2_) return x ^ y;
    Element r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        std::size_t n = orders_[j];
        std::size_t s = x % n + y % n;
        if (s >= n) s -= n;
        r += s * weights_[j];
        x /= n;
        y /= n;
    }
    return r;
}

Element GroupSpec::sub(Element x, Element y) const {
    return add(x, negate(y));
}

Element GroupSpec::negate(Element x) const {
    check(x);
    if (elementary_2_) return x;
    Element r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        std::size_t n = orders_[j];
        std::size_t c = x % n;
        r += (c == 0 ? 0 : n - c) * weights_[j];
        x /= n;
    }
    return r;
}

std::vector<Element> GroupSpec::translates(Element a) const {
    check(a);
    std::vector<Element> out(order_);
    if (elementary_2_) {
        for (Element x = 0; x < order_; ++x) out[x] = x ^ a;
        return out;
    }
    const std::size_t k = orders_.size();
    std::vector<std::size_t> xc(k, 0);
    std::vector<std::size_t> ac = decode(a);
    for (Element x = 0; x < order_; ++x) {
        Element r = 0;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t s = xc[j] + ac[j];
            if (s >= orders_[j]) s -= orders_[j];
            r += s * weights_[j];
        }
        out[x] = r;
        for (std::size_t j = 0; j < k; ++j) {
            if (++xc[j] < orders_[j]) break;
            xc[j] = 0;
        }
    }
    return out;
}

std::complex<double> GroupSpec::character(Element alpha, Element x) const {
    check(alpha);
    check(x);
    std::complex<double> value{1.0, 0.0};
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        std::size_t n = orders_[j];
        std::size_t e = (alpha % n) * (x % n) % n;
        if (e != 0) value *= roots_[j][e];
        alpha /= n;
        x /= n;
    }
    return value;
}

std::size_t GroupSpec::count_involutions() const noexcept {
    std::size_t solutions = 1;  // elements with 2x = 0, including 0
    for (std::size_t n : orders_)
        if (n % 2 == 0) solutions *= 2;
    return solutions - 1;
}

GroupSpec GroupSpec::product(const GroupSpec& other) const {
    std::vector<std::size_t> orders = orders_;
    orders.insert(orders.end(), other.orders_.begin(), other.orders_.end());
    return GroupSpec(std::move(orders));
}

std::string GroupSpec::literal() const {
    std::string s;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        if (j) s += ' ';
        s += std::to_string(orders_[j]);
    }
    return s;
}

GroupSpec make_group(std::vector<std::size_t> orders) {
    return GroupSpec(std::move(orders));
}

GroupSpec parse_group(std::string_view literal) {
    std::vector<std::size_t> orders;
    std::size_t i = 0;
    while (i < literal.size()) {
        while (i < literal.size() && (literal[i] == ' ' || literal[i] == '\t' || literal[i] == ',')) ++i;
        if (i >= literal.size()) break;
        std::size_t j = i;
        while (j < literal.size() && literal[j] != ' ' && literal[j] != '\t' && literal[j] != ',') ++j;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(literal.data() + i, literal.data() + j, value);
        if (ec != std::errc() || ptr != literal.data() + j)
            fail(ErrorKind::Parse, "bad cyclic order '" + std::string(literal.substr(i, j - i)) + "'");
        orders.push_back(value);
        i = j;
    }
    return GroupSpec(std::move(orders));
}

}  // namespace imbalance
