#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etaq::sequences {

// Named sequences, indexed from 0 and zero at negative indices:
//   p                 partitions
//   p<k>              coefficients of (q;q)_inf^k, e.g. p23
//   e<w>              E_w(q) / (q;q)_inf for even w >= 2
//   N<2k>, M<2k>      rank and crank moments
//   eta<2k>, mu<2k>   symmetrized rank and crank moments
//   spt, spt<k>       spt_k = mu_{2k} - eta_{2k}
bool is_sequence_name(const std::string& name);
std::vector<std::string> example_sequence_names();

// Everything except p<k> is a kernel series convolved with p(n), so a single
// value at index n costs O(n) multiplications once the kernel is known.
// Kernels and partition numbers are extended on demand and cached. Safe to use
// from several threads.
class SequenceStore {
public:
    // Indices above max_index (when nonnegative) throw precision-exhausted.
    explicit SequenceStore(long max_index = -1) : max_index_(max_index) {}

    mpq_class value(const std::string& name, long n);
    std::vector<mpq_class> values(const std::string& name, long count);
    long max_index() const { return max_index_; }

private:
    struct Kernel {
        std::vector<mpz_class> num;
        mpz_class den = 1;
        bool convolve = true;  // false: the kernel is the sequence itself
    };

    std::shared_ptr<const Kernel> kernel(const std::string& name, long len);
    std::shared_ptr<const std::vector<mpz_class>> partitions(long len);

    long max_index_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const Kernel>> kernels_;
    std::shared_ptr<const std::vector<mpz_class>> p_;
};

// Process-wide store without an index budget.
SequenceStore& shared_store();

}  // namespace etaq::sequences
