#include "cgr/algebra.hpp"

namespace cgr {

Algebra::Algebra(GroupTable group, RingPtr ring, Twist twist, CocycleTable alpha,
                 std::string name, std::string description)
    : group_(std::move(group)),
      ring_(std::move(ring)),
      twist_(std::move(twist)),
      alpha_(std::move(alpha)),
      name_(std::move(name)),
      description_(std::move(description)) {
    for (const auto& row : alpha_.alpha)
        for (const auto& v : row)
            if (!same_ring(v.ring(), ring_)) throw Error("cocycle entries not over the base ring");
    if (auto v = validate_cocycle(group_, twist_, alpha_)) throw Error(describe(*v));

    w_ = twist_kernel(group_, twist_);
    in_w_.assign(group_.order(), false);
    for (int g : w_) in_w_[g] = true;
    SubgroupSet wset(group_, w_);
    if (!wset.is_normal_in(group_)) throw Error("W = Ker sigma is not normal (internal inconsistency)");

    const int n = group_.order();
    f_table_.reserve(n);
    for (int x = 0; x < n; ++x) {
        std::vector<FracScalar> row;
        row.reserve(n);
        for (int s = 0; s < n; ++s) row.push_back(f_alpha(group_, alpha_, x, s));
        f_table_.push_back(std::move(row));
    }
}

std::string describe(const CocycleViolation& v) {
    return "cocycle validation failed [" + v.check + "]: " + v.detail;
}

std::string describe(const GroupViolation& v) {
    return "group validation failed [" + v.check + "]: " + v.detail;
}

}  // namespace cgr
