#include "blockdiag/block_partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "blockdiag/errors.hpp"

namespace blockdiag {

BlockPartition::BlockPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ <= 0)
        throw DimensionError("partition dimension must be positive, got " +
                             std::to_string(n_));
    if (blocks_.empty()) throw DimensionError("partition has no blocks");
    block_of_.assign(static_cast<size_t>(n_), -1);
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty())
            throw DimensionError("block " + std::to_string(b) + " is empty");
        for (int idx : blocks_[b]) {
            if (idx < 0 || idx >= n_)
                throw DimensionError("index " + std::to_string(idx) +
                                     " outside 0.." + std::to_string(n_ - 1));
            if (block_of_[static_cast<size_t>(idx)] != -1)
                throw DimensionError("index " + std::to_string(idx) +
                                     " appears in more than one block");
            block_of_[static_cast<size_t>(idx)] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n_; ++i)
        if (block_of_[static_cast<size_t>(i)] == -1)
            throw DimensionError("index " + std::to_string(i) +
                                 " missing from the partition");
}

BlockPartition BlockPartition::single_block(int n) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    return BlockPartition(n, {all});
}

BlockPartition BlockPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) blocks.push_back({i});
    return BlockPartition(n, std::move(blocks));
}

BlockPartition BlockPartition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    int max_index = -1;
    size_t pos = 0;
    auto flush_number = [&](size_t start, size_t end) {
        while (start < end && text[start] == ' ') ++start;
        while (end > start && text[end - 1] == ' ') --end;
        if (start == end)
            throw ParseError("empty index in partition string at position " +
                             std::to_string(start));
        int value = 0;
        auto res = std::from_chars(text.data() + start, text.data() + end, value);
        if (res.ec != std::errc() || res.ptr != text.data() + end)
            throw ParseError("bad index '" +
                             std::string(text.substr(start, end - start)) +
                             "' in partition string");
        current.push_back(value);
        max_index = std::max(max_index, value);
    };
    size_t token_start = 0;
    for (pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == ',' || text[pos] == ';') {
            flush_number(token_start, pos);
            token_start = pos + 1;
            if (pos == text.size() || text[pos] == ';') {
                blocks.push_back(std::move(current));
                current.clear();
            }
        }
    }
    return BlockPartition(max_index + 1, std::move(blocks));
}

std::string BlockPartition::to_string() const {
    std::ostringstream out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out << ';';
        for (size_t k = 0; k < blocks_[b].size(); ++k) {
            if (k) out << ',';
            out << blocks_[b][k];
        }
    }
    return out.str();
}

ComplexMatrix block_project(const ComplexMatrix& A, const BlockPartition& P) {
    if (A.rows() != A.cols() || A.rows() != P.dim())
        throw DimensionError("block_project: matrix is " +
                             std::to_string(A.rows()) + "x" +
                             std::to_string(A.cols()) + ", partition dim " +
                             std::to_string(P.dim()));
    ComplexMatrix out = ComplexMatrix::Zero(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (P.same_block(i, j)) out(i, j) = A(i, j);
    return out;
}

double off_block_norm(const ComplexMatrix& A, const BlockPartition& P) {
    if (A.rows() != A.cols() || A.rows() != P.dim())
        throw DimensionError("off_block_norm: matrix is " +
                             std::to_string(A.rows()) + "x" +
                             std::to_string(A.cols()) + ", partition dim " +
                             std::to_string(P.dim()));
    double sum = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (!P.same_block(i, j)) sum += std::norm(A(i, j));
    return std::sqrt(sum);
}

bool is_block_diagonal(const ComplexMatrix& A, const BlockPartition& P,
                       double rel_tol) {
    return off_block_norm(A, P) <= rel_tol * A.norm();
}

} // namespace blockdiag
