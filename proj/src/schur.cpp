#include "schub/schur.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace schub {

SchurVector SchurVector::single(const Partition& lam, Int c) {
    SchurVector v;
    v.add(lam, c);
    return v;
}

void SchurVector::add(const Partition& lam, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int SchurVector::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Int(0) : it->second;
}

std::set<int> SchurVector::degrees() const {
    std::set<int> d;
    for (const auto& [lam, c] : terms_) d.insert(lam.weight());
    return d;
}

bool SchurVector::homogeneous() const { return degrees().size() <= 1; }

std::optional<int> SchurVector::degree() const {
    auto d = degrees();
    if (d.size() != 1) return std::nullopt;
    return *d.begin();
}

SchurVector SchurVector::truncated(const Box& box) const {
    SchurVector v;
    for (const auto& [lam, c] : terms_)
        if (lam.fits(box.rows, box.cols)) v.add(lam, c);
    return v;
}

SchurVector& SchurVector::operator+=(const SchurVector& o) {
    for (const auto& [lam, c] : o.terms_) add(lam, c);
    return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& o) {
    for (const auto& [lam, c] : o.terms_) add(lam, -c);
    return *this;
}

SchurVector SchurVector::scaled(const Int& c) const {
    SchurVector v;
    if (c == 0) return v;
    for (const auto& [lam, k] : terms_) v.terms_.emplace(lam, k * c);
    return v;
}

std::string SchurVector::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lam, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.get_str() + "*s" + lam.str();
    }
    return s;
}

namespace {

// One product expansion enumerated as chains of horizontal strips: letter i
// contributes mu_i boxes, at most one per column, and the running letter
// counts must satisfy the ballot condition
//   (# of letter i in rows <= r)  <=  (# of letter i-1 in rows <= r-1).
class LrEnumerator {
public:
    LrEnumerator(const Partition& lam, const Partition& mu, std::optional<Box> box)
        : mu_(mu.parts()), box_(box) {
        int max_rows = lam.rows() + mu.rows();
        if (box_) max_rows = std::min(max_rows, box_->rows);
        shape_.assign(static_cast<size_t>(std::max(max_rows, lam.rows())), 0);
        for (int i = 0; i < lam.rows(); ++i) shape_[static_cast<size_t>(i)] = lam.part(i);
        rows_ = static_cast<int>(shape_.size());
        prev_cum_.assign(static_cast<size_t>(rows_), 0);
        cur_cum_.assign(static_cast<size_t>(rows_), 0);
        snap_stack_.reserve(mu_.size() + 1);  // deeper pushes must not reallocate
        lam_fits_ = !box_ || lam.fits(box_->rows, box_->cols);
    }

    void run(std::map<Partition, long long>& out) {
        out_ = &out;
        if (!lam_fits_) return;
        next_letter(0);
    }

private:
    void next_letter(size_t li) {
        if (li == mu_.size()) {
            std::vector<int> parts = shape_;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            ++(*out_)[make_partition(std::move(parts))];
            return;
        }
        snap_stack_.push_back(shape_);
        place(li, 0, mu_[li], 0);
        snap_stack_.pop_back();
    }

    void place(size_t li, int r, int remaining, int cum) {
        if (r == rows_) {
            if (remaining == 0) finish_letter(li);
            return;
        }
        const std::vector<int>& snap = snap_stack_[li];
        int cap = remaining;
        if (r == 0) {
            if (li > 0) cap = 0;  // ballot: letter i>1 never sits in the top row
        } else {
            cap = std::min(cap, snap[static_cast<size_t>(r - 1)] - shape_[static_cast<size_t>(r)]);
            if (li > 0)
                cap = std::min(cap, prev_cum_[static_cast<size_t>(r - 1)] - cum);
        }
        if (box_) cap = std::min(cap, box_->cols - shape_[static_cast<size_t>(r)]);
        for (int m = 0; m <= cap; ++m) {
            shape_[static_cast<size_t>(r)] += m;
            cur_cum_[static_cast<size_t>(r)] = cum + m;
            place(li, r + 1, remaining - m, cum + m);
            shape_[static_cast<size_t>(r)] -= m;
        }
    }

    // cur_cum_ holds the complete count profile of letter li here. Deeper
    // letters scribble on both arrays, and the suspended place() frames above
    // the backtrack point rely on their rows staying put, so restore both.
    void finish_letter(size_t li) {
        std::vector<int> saved_prev = std::move(prev_cum_);
        std::vector<int> saved_cur = cur_cum_;
        prev_cum_ = cur_cum_;
        next_letter(li + 1);
        cur_cum_ = std::move(saved_cur);
        prev_cum_ = std::move(saved_prev);
    }

    std::vector<int> mu_;
    std::optional<Box> box_;
    std::vector<int> shape_;
    std::vector<std::vector<int>> snap_stack_;
    std::vector<int> prev_cum_, cur_cum_;
    int rows_ = 0;
    bool lam_fits_ = true;
    std::map<Partition, long long>* out_ = nullptr;
};

struct LrKey {
    Partition lam, mu;
    int box_rows, box_cols;
    auto operator<=>(const LrKey&) const = default;
};

std::map<LrKey, std::shared_ptr<const std::map<Partition, long long>>> g_lr_cache;
std::shared_mutex g_lr_mutex;
bool g_lr_cache_on = true;

std::map<Partition, long long> lr_expand_nocache(const Partition& lam, const Partition& mu,
                                                 std::optional<Box> box) {
    std::map<Partition, long long> out;
    // fewer letters means a shallower chain; the rule is symmetric in the factors
    const Partition* a = &lam;
    const Partition* b = &mu;
    if (b->rows() > a->rows()) std::swap(a, b);
    LrEnumerator(*a, *b, box).run(out);
    return out;
}

}  // namespace

std::map<Partition, long long> lr_expand(const Partition& lam, const Partition& mu,
                                         std::optional<Box> box) {
    if (!g_lr_cache_on) return lr_expand_nocache(lam, mu, box);
    LrKey key{lam, mu, box ? box->rows : -1, box ? box->cols : -1};
    if (key.mu < key.lam) std::swap(key.lam, key.mu);
    {
        std::shared_lock lock(g_lr_mutex);
        auto it = g_lr_cache.find(key);
        if (it != g_lr_cache.end()) return *it->second;
    }
    auto val = std::make_shared<const std::map<Partition, long long>>(
        lr_expand_nocache(key.lam, key.mu, box));
    {
        std::unique_lock lock(g_lr_mutex);
        g_lr_cache.emplace(std::move(key), val);
    }
    return *val;
}

SchurVector lr_mul(const SchurVector& x, const SchurVector& y, std::optional<Box> box) {
    SchurVector out;
    for (const auto& [lam, cx] : x.terms()) {
        for (const auto& [mu, cy] : y.terms()) {
            Int c = cx * cy;
            for (const auto& [nu, mult] : lr_expand(lam, mu, box))
                out.add(nu, c * Int(static_cast<long>(mult)));
        }
    }
    return out;
}

void lr_cache_enabled(bool on) {
    std::unique_lock lock(g_lr_mutex);
    g_lr_cache_on = on;
}

void lr_cache_clear() {
    std::unique_lock lock(g_lr_mutex);
    g_lr_cache.clear();
}

}  // namespace schub
