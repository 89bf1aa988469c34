#include "surfloss/analytic.hpp"
#include "surfloss/geometry.hpp"

namespace surfloss {

DesignAssembly assemble_design(const std::vector<NamedStructure>& structures, const DielectricStack& stack,
                               const AssemblyOptions& opt) {
    std::vector<ValidationIssue> issues;
    if (structures.empty()) issues.push_back({"structures", "design contains no structures"});
    for (auto& i : validate(stack)) issues.push_back({"stack." + i.field, i.message});
    for (const auto& s : structures)
        for (auto& i : validate(s.spec, stack)) issues.push_back({s.name + "." + i.field, i.message});
    if (!issues.empty()) throw ValidationError(std::move(issues));

    DesignAssembly out;
    out.structures = structures;
    double c_sum = 0.0;
    for (const auto& s : structures) {
        if (opt.exclude_wires_from_capacitance && is_wire(s.spec)) continue;
        c_sum += analytic::capacitance(s.spec, stack.eps_s).value();
    }
    out.total_capacitance = opt.capacitance_override.value_or(Capacitance(c_sum));
    out.L = capacitance_to_length(out.total_capacitance);
    for (const auto& s : structures) {
        auto r = analytic::evaluate(s.spec, stack, out.L, opt.corners, opt.split_corners);
        out.total_loss += r.breakdown.loss(stack);
        out.breakdowns.push_back(std::move(r.breakdown));
    }
    return out;
}

}  // namespace surfloss
