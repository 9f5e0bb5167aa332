#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace snlb {

/// A seminorm on R^d with an evaluable closed form. Weighted p-norms carry
/// their weights so the K-functional machinery can recognize the pairs it
/// can solve exactly (diagonal l1/l1 and weighted l1/linf).
class FiniteSeminorm {
  public:
    enum class Kind { WeightedP, MaxOf, Scaled, Custom };

    static FiniteSeminorm weighted_p(std::vector<double> weights, double p);
    static FiniteSeminorm max_of(std::vector<FiniteSeminorm> parts);
    static FiniteSeminorm scaled(const FiniteSeminorm& base, double factor);
    static FiniteSeminorm custom(std::size_t dim, std::string label,
                                 std::function<double(std::span<const double>)> eval);

    double operator()(std::span<const double> x) const;

    Kind kind() const { return kind_; }
    std::size_t dimension() const { return dim_; }
    const std::string& label() const { return label_; }

    bool is_weighted_p(double p) const;
    std::span<const double> weights() const { return weights_; }
    double exponent() const { return p_; }

  private:
    FiniteSeminorm() = default;
    Kind kind_ = Kind::Custom;
    std::size_t dim_ = 0;
    std::string label_;
    // WeightedP
    std::vector<double> weights_;
    double p_ = 1.0;
    // MaxOf
    std::vector<FiniteSeminorm> parts_;
    // Scaled
    std::shared_ptr<const FiniteSeminorm> base_;
    double factor_ = 1.0;
    // Custom
    std::function<double(std::span<const double>)> eval_;
};

/// A weakly compatible couple: two seminorms on the same ambient R^d.
struct WeightedSpacePair {
    FiniteSeminorm first;
    FiniteSeminorm second;

    WeightedSpacePair(FiniteSeminorm x0, FiniteSeminorm x1);
    std::size_t dimension() const { return first.dimension(); }

    bool diagonal_l1() const;  // both factors weighted 1-norms
    bool l1_linf() const;      // weighted 1-norm against weighted sup-norm

    static WeightedSpacePair diag_l1(std::vector<double> w0, std::vector<double> w1);
};

}  // namespace snlb
