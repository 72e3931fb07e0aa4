#ifndef KERNELALG_IO_HPP
#define KERNELALG_IO_HPP

#include <string>

#include "kernelalg/algebra.hpp"
#include "kernelalg/report.hpp"

namespace kernelalg {

// Kernel document, schema kernelalg-kernel-v1: a header carrying the space
// hash and grid size, then row-major "re im" pairs, one entry per line, with
// round-trip-exact decimal digits.
std::string kernel_to_text(const Kernel& f);
Kernel kernel_from_text(const std::string& text, DiscreteSpace::Ptr space);

void save_kernel(const std::string& path, const Kernel& f);
Kernel load_kernel(const std::string& path, DiscreteSpace::Ptr space);

void save_report(const std::string& path, const Report& report);

}  // namespace kernelalg

#endif
