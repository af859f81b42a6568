#include "rbfc/bigint.hpp"

#include <algorithm>
#include <cassert>

namespace rbfc {

using u128 = unsigned __int128;

BigUint::BigUint(uint64_t v) {
    if (v) limbs_.push_back(v);
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(unsigned e) {
    BigUint r;
    r.limbs_.assign(e / 64 + 1, 0);
    r.limbs_.back() = uint64_t(1) << (e % 64);
    return r;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    u128 carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = carry + limbs_[i];
        if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
        limbs_[i] = uint64_t(s);
        carry = s >> 64;
    }
    if (carry) limbs_.push_back(uint64_t(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    assert(*this >= rhs && "BigUint underflow");
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 sub = borrow;
        if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
        if (sub > limbs_[i]) {
            limbs_[i] = uint64_t((u128(1) << 64) + limbs_[i] - sub);
            borrow = 1;
        } else {
            limbs_[i] -= uint64_t(sub);
            borrow = 0;
        }
    }
    trim();
    return *this;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
    BigUint r = *this;
    r += rhs;
    return r;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
    BigUint r = *this;
    r -= rhs;
    return r;
}

BigUint& BigUint::mul_u32(uint32_t v) {
    if (v == 0) {
        limbs_.clear();
        return *this;
    }
    u128 carry = 0;
    for (auto& limb : limbs_) {
        u128 p = u128(limb) * v + carry;
        limb = uint64_t(p);
        carry = p >> 64;
    }
    if (carry) limbs_.push_back(uint64_t(carry));
    return *this;
}

BigUint& BigUint::div_u32(uint32_t v) {
    assert(v != 0);
    u128 rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = uint64_t(cur / v);
        rem = cur % v;
    }
    trim();
    return *this;
}

BigUint BigUint::binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint();
    if (k > n - k) k = n - k;
    BigUint c(1);
    for (unsigned j = 0; j < k; ++j) {
        c.mul_u32(n - j);
        c.div_u32(j + 1);
    }
    return c;
}

BigUint BigUint::binomial_sum(unsigned n, unsigned lo, unsigned hi) {
    BigUint total;
    if (lo > hi) return total;
    hi = std::min(hi, n);
    BigUint c = binomial(n, lo);
    for (unsigned j = lo; j <= hi; ++j) {
        total += c;
        if (j < hi) {
            c.mul_u32(n - j);
            c.div_u32(j + 1);
        }
    }
    return total;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

bool BigUint::operator==(const BigUint& rhs) const {
    return limbs_ == rhs.limbs_;
}

uint64_t BigUint::to_u64() const {
    assert(fits_u64());
    return limbs_.empty() ? 0 : limbs_[0];
}

unsigned BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    unsigned top = 64;
    uint64_t hi = limbs_.back();
    while (!(hi & (uint64_t(1) << 63))) {
        hi <<= 1;
        --top;
    }
    return unsigned((limbs_.size() - 1) * 64) + top;
}

bool BigUint::test_bit(unsigned i) const {
    size_t limb = i / 64;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 64)) & 1;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        BigUint q = tmp;
        q.div_u32(1000000000u);
        BigUint back = q;
        back.mul_u32(1000000000u);
        uint64_t digits = (tmp - back).to_u64();
        tmp = q;
        for (int i = 0; i < 9; ++i) {
            out.push_back(char('0' + digits % 10));
            digits /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace rbfc
