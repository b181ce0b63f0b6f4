#include "bijsum/group.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bijsum {

AbelianGroup::AbelianGroup() { init(); }

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int m : factors_)
        if (m < 2) throw std::invalid_argument("group factor must be >= 2");
    init();
}

void AbelianGroup::init() {
    order_ = 1;
    for (int m : factors_) {
        if (order_ > (1 << 20) / m) throw std::invalid_argument("group order too large");
        order_ *= m;
    }
    place_.resize(factors_.size());
    scale_.resize(factors_.size());
    int p = 1;
    for (std::size_t j = factors_.size(); j-- > 0;) {
        place_[j] = p;
        p *= factors_[j];
        scale_[j] = order_ / factors_[j];
    }

    // sum over x of x_j = (n/m_j) * m_j(m_j-1)/2 = n(m_j-1)/2, always integral.
    std::vector<int> s(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        long long t = static_cast<long long>(order_) * (factors_[j] - 1) / 2;
        s[j] = static_cast<int>(t % factors_[j]);
    }
    sigma_ = factors_.empty() ? 0 : index_of(s);

    auto roots = std::make_shared<std::vector<std::complex<double>>>(order_);
    for (int k = 0; k < order_; ++k) {
        long double a = 2.0L * std::numbers::pi_v<long double> * k / order_;
        (*roots)[k] = {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
    }
    roots_ = std::move(roots);
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
    if (spec == "1") return AbelianGroup{};
    std::vector<int> factors;
    std::size_t i = 0;
    while (i < spec.size()) {
        if (std::tolower(static_cast<unsigned char>(spec[i])) == 'z') ++i;
        std::size_t start = i;
        long v = 0;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
            v = v * 10 + (spec[i] - '0');
            if (v > 1 << 20) throw std::invalid_argument("group factor too large");
            ++i;
        }
        if (i == start) throw std::invalid_argument("bad group spec: " + std::string(spec));
        factors.push_back(static_cast<int>(v));
        if (i < spec.size()) {
            if (std::tolower(static_cast<unsigned char>(spec[i])) != 'x')
                throw std::invalid_argument("bad group spec: " + std::string(spec));
            ++i;
            if (i == spec.size()) throw std::invalid_argument("bad group spec: " + std::string(spec));
        }
    }
    if (factors.empty()) throw std::invalid_argument("empty group spec");
    return AbelianGroup{std::move(factors)};
}

std::string AbelianGroup::spec_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (j) s += 'x';
        s += std::to_string(factors_[j]);
    }
    return s;
}

std::vector<int> AbelianGroup::coords(int index) const {
    std::vector<int> c(factors_.size());
    for (std::size_t j = factors_.size(); j-- > 0;) {
        c[j] = index % factors_[j];
        index /= factors_[j];
    }
    return c;
}

int AbelianGroup::index_of(const std::vector<int>& coords) const {
    if (coords.size() != factors_.size())
        throw std::invalid_argument("coordinate count does not match group rank");
    int idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int c = coords[j] % factors_[j];
        if (c < 0) c += factors_[j];
        idx = idx * factors_[j] + c;
    }
    return idx;
}

int AbelianGroup::add(int a, int b) const {
    int idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int m = factors_[j], w = place_[j];
        int c = (a / w) % m + (b / w) % m;
        if (c >= m) c -= m;
        idx += c * w;
    }
    return idx;
}

int AbelianGroup::neg(int a) const {
    int idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int m = factors_[j], w = place_[j];
        int ca = (a / w) % m;
        idx += (ca == 0 ? 0 : m - ca) * w;
    }
    return idx;
}

int AbelianGroup::pair_exponent(int chi, int x) const {
    long long t = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int m = factors_[j], w = place_[j];
        int d = (chi / w) % m, c = (x / w) % m;
        t += static_cast<long long>(d) * c % m * scale_[j];  // d*c/m_j == (d*c mod m_j)*scale/n mod 1
    }
    return static_cast<int>(t % order_);
}

}  // namespace bijsum
