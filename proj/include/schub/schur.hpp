#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "schub/partition.hpp"

namespace schub {

// Truncation box: partitions with more than `rows` rows or a part > `cols`
// are discarded (the Chow-ring quotient of a Grassmannian).
struct Box {
    int rows;
    int cols;
    auto operator<=>(const Box&) const = default;
};

// Finitely supported integer combination of Schur classes. Zero coefficients
// are never stored; the zero vector has an empty term map.
class SchurVector {
public:
    SchurVector() = default;

    static SchurVector unit() { return single(Partition{}); }
    static SchurVector single(const Partition& lam, Int c = 1);

    void add(const Partition& lam, const Int& c);
    const std::map<Partition, Int>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    Int coeff(const Partition& lam) const;

    std::set<int> degrees() const;
    bool homogeneous() const;                // the zero vector counts as homogeneous
    std::optional<int> degree() const;       // nullopt when zero or mixed

    SchurVector truncated(const Box& box) const;

    SchurVector& operator+=(const SchurVector& o);
    SchurVector& operator-=(const SchurVector& o);
    SchurVector scaled(const Int& c) const;

    bool operator==(const SchurVector&) const = default;

    std::string str() const;

private:
    std::map<Partition, Int> terms_;
};

// Littlewood-Richardson expansion of s_lam * s_mu by enumerating chains of
// horizontal strips subject to the ballot condition; each valid chain is one
// LR tableau, so multiplicities come out as tableau counts.
std::map<Partition, long long> lr_expand(const Partition& lam, const Partition& mu,
                                         std::optional<Box> box = std::nullopt);

SchurVector lr_mul(const SchurVector& x, const SchurVector& y,
                   std::optional<Box> box = std::nullopt);

// The pairwise-product memo is a transparent cache: identical answers with it
// on or off. Exposed so tests can prove that.
void lr_cache_enabled(bool on);
void lr_cache_clear();

}  // namespace schub
