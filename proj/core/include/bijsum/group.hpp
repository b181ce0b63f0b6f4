#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bijsum {

// Finite abelian group Z/m1 x ... x Z/mr, given by its cyclic factors.
//
// Elements and characters share one indexing scheme: mixed radix over the
// factors, first coordinate most significant, so index order is lexicographic
// order on coordinate vectors and index 0 is the identity
// (resp. the trivial character). The dual group is identified with the group
// itself; a character index chi pairs with an element index x through
//
//   pair(chi, x) = exp(2*pi*i * sum_j chi_j * x_j / m_j).
//
// All pairings are n-th roots of unity (n = order); they are served from a
// table built once per group so repeated evaluations are bit-identical.
class AbelianGroup {
public:
    // Trivial group (no factors, order 1).
    AbelianGroup();

    // Factors must each be >= 2. The factor list is kept as given; no
    // canonicalization into prime powers happens here.
    explicit AbelianGroup(std::vector<int> factors);

    // Parses "m1xm2x...xmr", case-insensitive, each factor optionally
    // prefixed with 'Z' ("4x2", "Z4xZ2", "z2Xz2"). "1" names the trivial
    // group.
    static AbelianGroup parse(std::string_view spec);

    int order() const { return order_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    const std::vector<int>& factors() const { return factors_; }
    std::string spec_string() const;

    std::vector<int> coords(int index) const;
    int index_of(const std::vector<int>& coords) const;

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }

    // Index of sum_{x in G} x. Nonzero exactly when the group has a unique
    // element of order 2, in which case sigma() is that element.
    int sigma() const { return sigma_; }

    bool two_torsion(int a) const { return add(a, a) == 0; }

    // t in [0, n) with pair(chi, x) = exp(2*pi*i*t/n).
    int pair_exponent(int chi, int x) const;
    std::complex<double> pair(int chi, int x) const { return (*roots_)[pair_exponent(chi, x)]; }
    const std::vector<std::complex<double>>& roots() const { return *roots_; }

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<int> factors_;
    std::vector<int> place_;  // mixed-radix place value: product of later factors
    std::vector<int> scale_;  // order / factor, phase numerator per coordinate
    int order_ = 1;
    int sigma_ = 0;
    std::shared_ptr<const std::vector<std::complex<double>>> roots_;

    void init();
};

}  // namespace bijsum
