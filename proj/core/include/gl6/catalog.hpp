#pragma once
// Built-in groups. Tables are computed once per process and shared.

#include <string>
#include <string_view>
#include <vector>

#include "gl6/group.hpp"

namespace gl6 {

GroupPtr cyclic_group(int n);
/// Dihedral group of order 2n, named "D<2n>".
GroupPtr dihedral_group(int n);
GroupPtr symmetric_group(int n);  // n = 3 or 4
GroupPtr alternating_group_4();
GroupPtr sl2_3();
GroupPtr gl2_3();
/// Binary icosahedral group: its faithful 2-dimensional characters are primitive.
GroupPtr sl2_5();
/// The Frobenius group of order 21, (a, b)(c, d) = (a + 2^b c mod 7, b + d mod 3).
GroupPtr frobenius_21();

/// C_n (n = 2..12), D_2n (n = 2..12), S3, A4, S4, SL(2,3), GL(2,3).
const std::vector<GroupPtr>& builtin_catalog();
/// The built-in groups plus C7:C3, SL(2,5), C7:C3 x S3 and C7:C3 x GL(2,3).
const std::vector<GroupPtr>& extended_catalog();

/// Looks a group up by name in the extended catalog. Throws DomainError.
GroupPtr catalog_group(std::string_view name);

}  // namespace gl6
