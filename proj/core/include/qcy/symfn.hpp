#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcy/rational.hpp"

namespace qcy {

// partition: weakly decreasing positive parts, empty for the zero partition
using Partition = std::vector<int>;

std::string partition_str(const Partition& p);

// all partitions of n with at most max_len parts, each part <= max_part
std::vector<Partition> partitions(int n, int max_len, int max_part = 1 << 20);

// distinct rearrangements of the partition padded with zeros to nvars slots;
// empty result when the partition has more than nvars parts
std::vector<std::vector<int>> distinct_perms(const Partition& p, int nvars);

// monomial symmetric product in nvars variables:
// m_lambda * m_mu = sum c_nu m_nu
std::map<Partition, Int> mono_mul(const Partition& lam, const Partition& mu, int nvars);

// m_lambda evaluated at a rational point (uses the first nvars = c.size() slots)
Rat mono_eval(const Partition& lam, const std::vector<Rat>& c);

// lexicographic order on partitions of the same size: first differing part
// decides, longer prefix of equal parts compares by the next part (missing
// part counts as 0)
bool partition_lex_less(const Partition& a, const Partition& b);

}  // namespace qcy
