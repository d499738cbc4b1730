#include "conjucirc/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace conjucirc {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ']';
    return os.str();
}

namespace {

void enumerate_partitions(int remaining, int max_part, int max_height,
                          std::vector<int>& current,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (static_cast<int>(current.size()) == max_height) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate_partitions(remaining - part, part, max_height, current, out);
        current.pop_back();
    }
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

std::vector<Partition> partitions(int n, int max_height) {
    if (n < 1) throw std::invalid_argument("partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_partitions(n, n, max_height, current, out);
    return out;  // descending first parts => lexicographic descending
}

int hook_length(const Partition& lambda, const Box& b) {
    const auto& parts = lambda.parts;
    if (b.row < 1 || b.row > lambda.height() || b.col < 1 ||
        b.col > parts[b.row - 1])
        throw std::out_of_range("hook_length: box outside diagram");
    int arm = parts[b.row - 1] - b.col;
    int leg = 0;
    for (int r = b.row; r < lambda.height(); ++r)
        if (parts[r] >= b.col) ++leg;
    return arm + leg + 1;
}

BigInt irrep_dim(const Partition& lambda) {
    BigInt hooks = 1;
    for (int r = 1; r <= lambda.height(); ++r)
        for (int c = 1; c <= lambda.parts[r - 1]; ++c)
            hooks *= hook_length(lambda, {r, c});
    return factorial(lambda.n()) / hooks;
}

BigInt multiplicity(const Partition& lambda, int d) {
    if (lambda.height() > d) return 0;
    Rational m = 1;
    for (int r = 1; r <= lambda.height(); ++r)
        for (int c = 1; c <= lambda.parts[r - 1]; ++c)
            m *= Rational(d - r + c, hook_length(lambda, {r, c}));
    // hook-content products over full diagrams are always integral
    return numerator(m) / denominator(m);
}

StepRepresentation step_representation(const Partition& lambda) {
    StepRepresentation sr;
    const auto& parts = lambda.parts;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int next = (j < parts.size()) ? parts[j] : 0;
        sr.pairs.push_back(static_cast<int>(j - i));  // k: run length
        sr.pairs.push_back(parts[i] - next);          // p: drop
        i = j;
    }
    return sr;
}

Partition partition_from_steps(const StepRepresentation& sr) {
    std::vector<int> parts;
    int s = sr.steps();
    for (int j = 1; j <= s; ++j) {
        int len = 0;
        for (int i = j; i <= s; ++i) len += sr.p(i);
        for (int rep = 0; rep < sr.k(j); ++rep) parts.push_back(len);
    }
    return Partition(parts);
}

std::vector<Box> corner_boxes(const Partition& lambda) {
    auto sr = step_representation(lambda);
    int s = sr.steps();
    std::vector<Box> corners;
    int row = 0;
    for (int j = 1; j <= s; ++j) {
        row += sr.k(j);
        int col = 0;
        for (int i = j; i <= s; ++i) col += sr.p(i);
        corners.push_back({row, col});
    }
    return corners;
}

std::vector<Partition> remove_corner(const Partition& lambda) {
    std::vector<Partition> out;
    for (const Box& c : corner_boxes(lambda)) {
        std::vector<int> parts = lambda.parts;
        parts[c.row - 1] -= 1;
        if (parts[c.row - 1] == 0) parts.erase(parts.begin() + (c.row - 1));
        out.emplace_back(parts);
    }
    return out;
}

int axial_distance(const Box& b1, const Box& b2) {
    return std::abs(b1.row - b2.row) + std::abs(b1.col - b2.col);
}

Rational c_lambda_brute(const Partition& lambda, int d) {
    BigInt m_lambda = multiplicity(lambda, d);
    if (m_lambda == 0)
        throw std::domain_error("c_lambda: multiplicity vanishes (height > d)");
    BigInt num = 0;
    for (const Partition& beta : remove_corner(lambda))
        num += multiplicity(beta, d);
    return Rational(num, m_lambda);
}

namespace {

// Axial distance between corners c_i and c_j (i < j) equals the sum of
// the step-sequence entries from p_i through k_j inclusive.
int corner_distance(const StepRepresentation& sr, int i, int j) {
    int sum = sr.p(i);
    for (int t = i + 1; t <= j; ++t) sum += sr.k(t);
    for (int t = i + 1; t < j; ++t) sum += sr.p(t);
    return sum;
}

}  // namespace

Rational c_lambda_closed(const Partition& lambda, int d) {
    if (lambda.height() > d)
        throw std::domain_error("c_lambda: multiplicity vanishes (height > d)");
    auto sr = step_representation(lambda);
    int s = sr.steps();
    Rational total = 0;
    for (int j = 1; j <= s; ++j) {
        int ksum = 0;
        for (int i = 1; i <= j; ++i) ksum += sr.k(i);
        int psum = 0;
        for (int i = j; i <= s; ++i) psum += sr.p(i);
        Rational term(BigInt(sr.k(j)) * sr.p(j), BigInt(d) - ksum + psum);
        for (int i = 1; i <= j - 1; ++i)
            term *= Rational(BigInt(corner_distance(sr, i, j)) + sr.k(i),
                             corner_distance(sr, i, j));
        for (int i = j + 1; i <= s; ++i)
            term *= Rational(BigInt(corner_distance(sr, j, i)) + sr.p(i),
                             corner_distance(sr, j, i));
        total += term;
    }
    return total;
}

Rational vershik_sum(const Partition& lambda) {
    auto sr = step_representation(lambda);
    int s = sr.steps();
    Rational total = 0;
    for (int j = 1; j <= s; ++j) {
        Rational term = BigInt(sr.k(j)) * sr.p(j);
        for (int i = 1; i <= j - 1; ++i)
            term *= Rational(BigInt(corner_distance(sr, i, j)) + sr.k(i),
                             corner_distance(sr, i, j));
        for (int i = j + 1; i <= s; ++i)
            term *= Rational(BigInt(corner_distance(sr, j, i)) + sr.p(i),
                             corner_distance(sr, j, i));
        total += term;
    }
    return total;
}

MaxCResult max_c(int n, int d) {
    if (n < 1 || n > d)
        throw std::domain_error(
            "max_c: requires 1 <= n <= d (single-column diagram must fit)");
    MaxCResult result;
    result.value = 0;
    for (const Partition& lambda : partitions(n, d)) {
        Rational c = c_lambda_closed(lambda, d);
        if (result.maximizers.empty() || c > result.value) {
            result.maximizers = {lambda};
            result.value = c;
        } else if (c == result.value) {
            result.maximizers.push_back(lambda);
        }
    }
    return result;
}

}  // namespace conjucirc
