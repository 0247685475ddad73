#pragma once

#include <iosfwd>
#include <string>

#include "cgadget/cover.hpp"
#include "cgadget/gadget.hpp"
#include "cgadget/solver.hpp"

namespace cgadget {

/// Instance file: header "kind n d [alpha]", then n rows of 0/1 strings, a
/// second block of n rows for bichromatic kinds.
void write_instance(std::ostream& os, const Instance& instance);
Instance read_instance(std::istream& is);

/// Gadget file: header "kind q K1 K2 n dim beta mu_num mu_den", then n
/// side-A rows, n side-B rows, n adjacency rows, all as 0/1 strings.
/// The center vector is not serialized; round-trips compare everything else.
void write_gadget(std::ostream& os, const BipartiteGadget& gadget);
BipartiteGadget read_gadget(std::istream& is);

/// True when the two gadgets agree on every serialized field.
bool gadget_equal(const BipartiteGadget& lhs, const BipartiteGadget& rhs);

/// Cover file: header "n k", then k pairs of lines with the A-side and
/// B-side image sequences (0-based).
void write_cover(std::ostream& os, const PermutationCover& cover);
PermutationCover read_cover(std::istream& is);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cgadget
