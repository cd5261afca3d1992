#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blockdiag/matrix.hpp"

namespace blockdiag {

/// A partition of the index set {0,...,n-1} into named blocks. Blocks are
/// arbitrary index sets; they do not have to be contiguous. The partition
/// defines the superoperator B that zeroes all elements whose row and column
/// indices fall in different blocks.
class BlockPartition {
public:
    /// Validates that the blocks are nonempty, pairwise disjoint and cover
    /// {0,...,n-1} exactly. Throws DimensionError otherwise.
    BlockPartition(int n, std::vector<std::vector<int>> blocks);

    static BlockPartition single_block(int n);
    static BlockPartition singletons(int n);

    /// Parses the text form used by the CLI and report files:
    /// semicolon-separated comma-lists of indices, e.g. "0,1,2;3,4;5,6,7".
    /// The indices must cover 0..max exactly. Throws ParseError on malformed
    /// text, DimensionError on an invalid partition.
    static BlockPartition parse(std::string_view text);

    int dim() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const { return blocks_[b]; }

    // O(1) membership; B is applied inside the inner loops of the series
    // recursions.
    int block_of(int index) const { return block_of_[index]; }
    bool same_block(int i, int j) const { return block_of_[i] == block_of_[j]; }

    std::string to_string() const;

    bool operator==(const BlockPartition& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// The superoperator B: keeps elements whose indices share a block, zeroes
/// the rest. Throws DimensionError if dim(A) != P.dim().
ComplexMatrix block_project(const ComplexMatrix& A, const BlockPartition& P);

/// ||A - B(A)||_F; zero iff A is exactly block diagonal.
double off_block_norm(const ComplexMatrix& A, const BlockPartition& P);

/// off_block_norm(A) <= rel_tol * ||A||_F
bool is_block_diagonal(const ComplexMatrix& A, const BlockPartition& P,
                       double rel_tol = 1e-12);

} // namespace blockdiag
