#pragma once

#include <span>
#include <vector>

#include "cdc/field.hpp"

namespace cdc {

/// Linearized polynomial L(x) = sum_i c_i x^{q^i} over an extension field
/// GF(q^m); q is the size of the immediate subfield of `field`.  Evaluation
/// is GF(q)-linear.  Under composition these form a skew polynomial ring,
/// which is what the Gabidulin decoder manipulates.
class LinearizedPoly {
public:
    LinearizedPoly() = default;
    LinearizedPoly(FieldPtr field, std::vector<FieldElem> coeffs);

    static LinearizedPoly zero(FieldPtr field) { return LinearizedPoly(std::move(field), {}); }

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// q-degree; -1 for the zero polynomial.
    int qdeg() const { return static_cast<int>(c_.size()) - 1; }

    FieldElem eval(FieldElem x) const;

    /// Composition this(other(x)) — the skew product.
    LinearizedPoly compose(const LinearizedPoly& other) const;

    /// Left division: find Q, R with this = V o Q + R, qdeg R < qdeg V.
    /// Requires V nonzero.
    static std::pair<LinearizedPoly, LinearizedPoly> left_divide(const LinearizedPoly& f,
                                                                 const LinearizedPoly& v);

private:
    void trim();
    FieldPtr field_;
    std::vector<FieldElem> c_;
};

}  // namespace cdc
