#include "snlb/seminorm.hpp"

#include <cmath>
#include <stdexcept>

namespace snlb {

FiniteSeminorm FiniteSeminorm::weighted_p(std::vector<double> weights, double p) {
    if (weights.empty()) throw std::invalid_argument("weighted_p: empty weight vector");
    if (p < 1.0) throw std::invalid_argument("weighted_p: p must be >= 1");
    for (double w : weights)
        if (w < 0.0 || !std::isfinite(w)) throw std::invalid_argument("weighted_p: weights must be finite and >= 0");
    FiniteSeminorm s;
    s.kind_ = Kind::WeightedP;
    s.dim_ = weights.size();
    s.weights_ = std::move(weights);
    s.p_ = p;
    s.label_ = std::isinf(p) ? "w-linf" : (p == 1.0 ? "w-l1" : "w-lp");
    return s;
}

FiniteSeminorm FiniteSeminorm::max_of(std::vector<FiniteSeminorm> parts) {
    if (parts.empty()) throw std::invalid_argument("max_of: no parts");
    for (const auto& q : parts)
        if (q.dimension() != parts.front().dimension())
            throw std::invalid_argument("max_of: mixed dimensions");
    FiniteSeminorm s;
    s.kind_ = Kind::MaxOf;
    s.dim_ = parts.front().dimension();
    s.parts_ = std::move(parts);
    s.label_ = "max-of";
    return s;
}

FiniteSeminorm FiniteSeminorm::scaled(const FiniteSeminorm& base, double factor) {
    if (factor < 0.0 || !std::isfinite(factor)) throw std::invalid_argument("scaled: factor must be finite and >= 0");
    if (base.kind_ == Kind::WeightedP) {
        // fold the factor into the weights; keeps closed forms applicable
        std::vector<double> w = base.weights_;
        for (double& v : w) v *= factor;
        return weighted_p(std::move(w), base.p_);
    }
    FiniteSeminorm s;
    s.kind_ = Kind::Scaled;
    s.dim_ = base.dimension();
    s.base_ = std::make_shared<FiniteSeminorm>(base);
    s.factor_ = factor;
    s.label_ = "scaled(" + base.label_ + ")";
    return s;
}

FiniteSeminorm FiniteSeminorm::custom(std::size_t dim, std::string label,
                                      std::function<double(std::span<const double>)> eval) {
    if (dim == 0) throw std::invalid_argument("custom: dimension must be positive");
    if (!eval) throw std::invalid_argument("custom: missing evaluator");
    FiniteSeminorm s;
    s.kind_ = Kind::Custom;
    s.dim_ = dim;
    s.label_ = std::move(label);
    s.eval_ = std::move(eval);
    return s;
}

double FiniteSeminorm::operator()(std::span<const double> x) const {
    if (x.size() != dim_) throw std::invalid_argument("FiniteSeminorm: dimension mismatch");
    switch (kind_) {
        case Kind::WeightedP: {
            if (std::isinf(p_)) {
                double m = 0.0;
                for (std::size_t i = 0; i < dim_; ++i) m = std::max(m, weights_[i] * std::abs(x[i]));
                return m;
            }
            if (p_ == 1.0) {
                double s = 0.0;
                for (std::size_t i = 0; i < dim_; ++i) s += weights_[i] * std::abs(x[i]);
                return s;
            }
            double s = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) s += std::pow(weights_[i] * std::abs(x[i]), p_);
            return std::pow(s, 1.0 / p_);
        }
        case Kind::MaxOf: {
            double m = 0.0;
            for (const auto& q : parts_) m = std::max(m, q(x));
            return m;
        }
        case Kind::Scaled:
            return factor_ * (*base_)(x);
        case Kind::Custom:
            return eval_(x);
    }
    return 0.0;
}

bool FiniteSeminorm::is_weighted_p(double p) const {
    return kind_ == Kind::WeightedP &&
           ((std::isinf(p) && std::isinf(p_)) || p == p_);
}

WeightedSpacePair::WeightedSpacePair(FiniteSeminorm x0, FiniteSeminorm x1)
    : first(std::move(x0)), second(std::move(x1)) {
    if (first.dimension() != second.dimension())
        throw std::invalid_argument("WeightedSpacePair: factors must share the ambient dimension");
}

bool WeightedSpacePair::diagonal_l1() const {
    return first.is_weighted_p(1.0) && second.is_weighted_p(1.0);
}

bool WeightedSpacePair::l1_linf() const {
    return first.is_weighted_p(1.0) &&
           second.is_weighted_p(std::numeric_limits<double>::infinity());
}

WeightedSpacePair WeightedSpacePair::diag_l1(std::vector<double> w0, std::vector<double> w1) {
    return WeightedSpacePair(FiniteSeminorm::weighted_p(std::move(w0), 1.0),
                             FiniteSeminorm::weighted_p(std::move(w1), 1.0));
}

}  // namespace snlb
