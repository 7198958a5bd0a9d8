#pragma once

#include "eksr/reduce/reductions.hpp"

namespace eksr::detail {

ReductionOutput make_output(ReductionKind kind, Instance instance, Formula source);

std::vector<int> identity_map(int n);

struct WidthSplit {
    Formula formula;
    std::vector<WidthBlock> blocks;
};

// Replace every clause wider than k_target by its chain of k_target-wide
// clauses, in place; clauses of width k_target are kept. Fresh chain
// variables are numbered after f's variables, block by block.
WidthSplit split_wide_clauses(const Formula& f, int k_target);

// Extend an assignment of f's variables with chain values: y_i = 1 exactly
// for i >= the first set holding a true literal.
Assignment lift_assignment(const Formula& f, const std::vector<WidthBlock>& blocks, int total_vars,
                           const Assignment& a);

// Lift a value-1 path over f into one over the split formula.
ReconfSequence lift_path(const Formula& f, const std::vector<WidthBlock>& blocks, int total_vars,
                         const ReconfSequence& path);

}  // namespace eksr::detail
