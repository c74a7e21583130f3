#include "cdc/linpoly.hpp"

#include <cassert>
#include <stdexcept>

namespace cdc {

LinearizedPoly::LinearizedPoly(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("null field");
    trim();
}

void LinearizedPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElem LinearizedPoly::eval(FieldElem x) const {
    const Field& k = *field_;
    FieldElem acc = 0;
    FieldElem xq = x;  // x^{q^i}
    for (std::size_t i = 0; i < c_.size(); ++i) {
        acc = k.add(acc, k.mul(c_[i], xq));
        xq = k.frob(xq, 1);
    }
    return acc;
}

LinearizedPoly LinearizedPoly::compose(const LinearizedPoly& other) const {
    const Field& k = *field_;
    if (is_zero() || other.is_zero()) return zero(field_);
    std::vector<FieldElem> out(c_.size() + other.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            if (other.c_[j] == 0) continue;
            out[i + j] = k.add(out[i + j], k.mul(c_[i], k.frob(other.c_[j], static_cast<unsigned>(i))));
        }
    }
    return LinearizedPoly(field_, std::move(out));
}

std::pair<LinearizedPoly, LinearizedPoly> LinearizedPoly::left_divide(const LinearizedPoly& f,
                                                                      const LinearizedPoly& v) {
    if (v.is_zero()) throw std::invalid_argument("left division by zero polynomial");
    const FieldPtr& kp = f.field_ ? f.field_ : v.field_;
    const Field& k = *kp;
    const unsigned m = k.degree();
    const int s = v.qdeg();
    const FieldElem vs_inv = k.inv(v.c_.back());
    std::vector<FieldElem> rem = f.c_;
    std::vector<FieldElem> quot(f.c_.size() > v.c_.size() ? f.c_.size() - v.c_.size() + 1 : 1, 0);
    auto degree = [&rem]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[d] == 0) --d;
        return d;
    };
    int df = degree();
    const unsigned s_mod = static_cast<unsigned>(s) % m;
    const unsigned inv_exp = s_mod == 0 ? 0 : m - s_mod;
    while (df >= s) {
        const int t = df - s;
        // leading coefficient of V o (q_t X^t) is v_s * q_t^{q^s}
        FieldElem qt = k.frob(k.mul(rem[df], vs_inv), inv_exp);
        quot[t] = qt;
        for (int j = 0; j <= s; ++j) {
            if (v.c_[j] == 0) continue;
            rem[t + j] = k.sub(rem[t + j], k.mul(v.c_[j], k.frob(qt, static_cast<unsigned>(j))));
        }
        assert(rem[df] == 0);
        df = degree();
    }
    rem.resize(df + 1);
    return {LinearizedPoly(kp, std::move(quot)), LinearizedPoly(kp, std::move(rem))};
}

}  // namespace cdc
