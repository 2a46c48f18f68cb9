#pragma once

#include "hedonic/certificate.hpp"

namespace hedonic {

enum class StabilityNotion { Nash, Individual, Core, StrictCore };

const char* to_string(StabilityNotion n);

// Streams all set partitions of [0, n) in restricted-growth-string order.
// Visits each of the Bell(n) partitions exactly once; never materializes
// the list.
class PartitionIterator {
public:
    explicit PartitionIterator(int n);

    bool done() const { return done_; }
    const std::vector<int>& rgs() const { return rgs_; }
    Partition current() const;
    void advance();

private:
    int n_;
    bool done_ = false;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
};

struct OracleLimits {
    int max_n_nash = 12;        // Bell(12) ~ 4.2M
    int max_n_core = 9;         // inner subset enumeration on top
};

// Exponential ground truth: first stable partition in enumeration order, or
// NOT-EXISTS. Throws SizeLimitError beyond the limits.
Verdict exists_stable_partition(const Instance& inst, StabilityNotion notion,
                                const OracleLimits& limits = {});

// Partition-level stability check used by the oracle; exact, exponential for
// the core notions.
bool partition_stable(const Instance& inst, const Partition& pi, StabilityNotion notion);

// Re-derives a certificate's claim from compare alone; no trust in the
// producing algorithm. Also rejects certificates whose stored deltas do not
// match recomputation. Structurally malformed input throws.
bool certify(const Instance& inst, const Partition& pi, const BlockingCertificate& cert);

}  // namespace hedonic
