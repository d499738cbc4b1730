// Young-diagram combinatorics: partitions, hooks, irrep dimensions and
// multiplicities, step representations, corner boxes, and the function
// c(lambda) both as a brute-force ratio of multiplicities and in closed
// form over the step representation. All arithmetic is exact rational;
// hook/content products overflow 64-bit integers well before n = 10.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace conjucirc {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Weakly decreasing positive parts summing to n. The empty partition
// (n = 0) is allowed; it shows up as the result of removing the only
// box of [1].
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;                 // number of boxes
    int height() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string to_string() const;  // e.g. "[3,1,1]"
};

// 1-based box coordinates (row, col), matching the (i_b, j_b) convention.
struct Box {
    int row = 1;
    int col = 1;
    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
};

// Alternating (k_1, p_1, ..., k_s, p_s): k_i the multiplicity of the i-th
// distinct row length, p_i the drop to the next one.
struct StepRepresentation {
    std::vector<int> pairs;  // flattened k1,p1,k2,p2,...

    int steps() const { return static_cast<int>(pairs.size()) / 2; }
    int k(int j) const { return pairs[2 * (j - 1)]; }      // 1-based
    int p(int j) const { return pairs[2 * (j - 1) + 1]; }  // 1-based
    bool operator==(const StepRepresentation& o) const { return pairs == o.pairs; }
};

// All partitions of n with height <= max_height, lexicographically descending.
std::vector<Partition> partitions(int n, int max_height);

// Arm + leg + 1 for a box inside the diagram.
int hook_length(const Partition& lambda, const Box& b);

// Dimension of the S_n irrep: n! / prod of hooks.
BigInt irrep_dim(const Partition& lambda);

// Multiplicity of the irrep lambda in the Schur-Weyl decomposition of
// (C_d)^{tensor n}: prod over boxes of (d - i + j) / h(b). Zero when the
// height exceeds d. The empty partition has multiplicity 1.
BigInt multiplicity(const Partition& lambda, int d);

StepRepresentation step_representation(const Partition& lambda);
Partition partition_from_steps(const StepRepresentation& sr);

// Removable boxes c_j = (k_1+...+k_j, p_j+...+p_s), one per distinct row
// length, top to bottom.
std::vector<Box> corner_boxes(const Partition& lambda);

// Diagrams obtained by removing one corner box, in corner order.
std::vector<Partition> remove_corner(const Partition& lambda);

// |i1-i2| + |j1-j2|.
int axial_distance(const Box& b1, const Box& b2);

// c(lambda) = sum over beta obtained by removing one corner of
// m_beta / m_lambda.
Rational c_lambda_brute(const Partition& lambda, int d);

// Same quantity evaluated over the step representation; empty products
// are 1 when the lower index exceeds the upper one.
Rational c_lambda_closed(const Partition& lambda, int d);

// Left side of the Vershik identity; equals n for every diagram.
Rational vershik_sum(const Partition& lambda);

struct MaxCResult {
    std::vector<Partition> maximizers;  // ties reported, not collapsed
    Rational value;
};

// Maximizes c(lambda) over lambda |- n with height <= d. Requires
// n <= d so that the single-column diagram is feasible.
MaxCResult max_c(int n, int d);

}  // namespace conjucirc
