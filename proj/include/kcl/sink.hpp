#ifndef KCL_SINK_HPP
#define KCL_SINK_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>

namespace kcl {

/// Consumer contract: receives each k-clique exactly once, as original
/// vertex ids in the order the engine discovered them. Counting is
/// saturating 64-bit; clique counts near omega/2 can exceed 2^64, so
/// overflow raises a flag instead of wrapping.
class CliqueSink {
public:
    enum class Mode { Count, Emit };
    using EmitFn = std::function<void(std::span<const uint32_t>)>;

    CliqueSink() = default;
    explicit CliqueSink(EmitFn fn) : mode_(Mode::Emit), emit_(std::move(fn)) {}

    Mode mode() const { return mode_; }
    const EmitFn& emit_fn() const { return emit_; }
    uint64_t count() const { return count_; }
    bool saturated() const { return saturated_; }

    void add(uint64_t delta) {
        if (delta > std::numeric_limits<uint64_t>::max() - count_) {
            count_ = std::numeric_limits<uint64_t>::max();
            saturated_ = true;
        } else {
            count_ += delta;
        }
    }

    void add_saturated() { saturated_ = true; count_ = std::numeric_limits<uint64_t>::max(); }

    void emit(std::span<const uint32_t> clique) {
        add(1);
        if (emit_) emit_(clique);
    }

    void merge(const CliqueSink& other) {
        add(other.count_);
        saturated_ = saturated_ || other.saturated_;
    }

private:
    Mode mode_ = Mode::Count;
    EmitFn emit_;
    uint64_t count_ = 0;
    bool saturated_ = false;
};

}  // namespace kcl

#endif  // KCL_SINK_HPP
