#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sphaera {

using Permutation = std::vector<std::size_t>;  // p[x] is the image of x

Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& a, const Permutation& b);  // x -> a(b(x))
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);
bool is_identity(const Permutation& p);

// Cycles ordered by their smallest element, each starting there.
std::vector<std::vector<std::size_t>> cycles(const Permutation& p);
std::vector<std::size_t> cycle_type(const Permutation& p);  // ascending
std::string cycle_notation(const Permutation& p);           // "(0 1 2)(3)"
Permutation parse_cycle_notation(const std::string& text, std::size_t n);

bool is_transitive(const std::vector<Permutation>& gens);
// A transitive group is regular iff its centralizer in S_n is transitive.
bool is_regular(const std::vector<Permutation>& gens);

}  // namespace sphaera
