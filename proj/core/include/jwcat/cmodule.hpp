#pragma once

#include <jwcat/graded_module.hpp>

namespace jwcat
{

// Hom(P(2), M)<-1> as a module over C = End(P(2)). Realized on the vertex-2
// part M e(2), with x acting as right multiplication by c; a vector of
// degree j lands in degree j-1.
GradedModule apply_pi(const GradedModule &m);
ModuleHom apply_pi(const ModuleHom &f, const ModulePtr &pi_source, const ModulePtr &pi_target);

// M (x)_C P(2)<1> for a module M over C.
GradedModule apply_iota(const GradedModule &m);

} // namespace jwcat
