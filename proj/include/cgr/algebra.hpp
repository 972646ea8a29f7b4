#pragma once

#include "cgr/cocycle.hpp"

namespace cgr {

/// A validated crystalline graded ring A = D <>_{sigma,alpha} G. Immutable
/// after construction; all queries are pure.
class Algebra {
public:
    /// Throws Error (with the violation witness in the message) unless the
    /// group, twist and cocycle pass full validation.
    Algebra(GroupTable group, RingPtr ring, Twist twist, CocycleTable alpha,
            std::string name = "", std::string description = "");

    const GroupTable& group() const { return group_; }
    const RingPtr& ring() const { return ring_; }
    const Twist& twist() const { return twist_; }
    const CocycleTable& cocycle() const { return alpha_; }
    const std::string& name() const { return name_; }
    const std::string& description() const { return description_; }

    const RingAut& sigma(int g) const { return twist_.auts[g]; }
    const RingElement& alpha(int g, int h) const { return alpha_.alpha[g][h]; }
    /// f_alpha(x, s), from a table computed once at construction.
    const FracScalar& f(int x, int s) const { return f_table_[x][s]; }

    /// W = Ker sigma, in input order. Always a normal subgroup (asserted).
    const std::vector<int>& W() const { return w_; }
    bool in_W(int g) const { return in_w_[g]; }

private:
    GroupTable group_;
    RingPtr ring_;
    Twist twist_;
    CocycleTable alpha_;
    std::string name_, description_;
    std::vector<int> w_;
    std::vector<bool> in_w_;
    std::vector<std::vector<FracScalar>> f_table_;
};

std::string describe(const CocycleViolation& v);
std::string describe(const GroupViolation& v);

}  // namespace cgr
