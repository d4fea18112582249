#include <algorithm>
#include <numeric>
#include <sstream>

#include "polycoh/error.hpp"
#include "polycoh/gee.hpp"
#include "polycoh/index_set.hpp"
#include "polycoh/theta_vector.hpp"

namespace polycoh {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ContractViolation: return "contract violation";
        case ErrorKind::OutOfRange: return "out of range";
        case ErrorKind::InvalidLength: return "invalid length";
        case ErrorKind::TooFewSides: return "too few sides";
        case ErrorKind::NotGeneric: return "not generic";
        case ErrorKind::EmptySpace: return "empty space";
        case ErrorKind::NotMonogenic: return "not monogenic";
        case ErrorKind::NotFound: return "not found";
        case ErrorKind::SizeLimit: return "size limit";
        case ErrorKind::InfeasibleTheta: return "infeasible theta";
        case ErrorKind::InvalidRelationIndex: return "invalid relation index";
        case ErrorKind::NoRelations: return "no relations";
        case ErrorKind::Overflow: return "overflow";
    }
    return "unknown";
}

namespace {

template <typename Range>
std::string join(const Range& values, char open, char close) {
    std::ostringstream out;
    out << open;
    bool first = true;
    for (const auto& v : values) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << close;
    return out.str();
}

}  // namespace

// IndexSet

IndexSet::IndexSet(std::initializer_list<int> elements)
    : IndexSet(std::vector<int>(elements)) {}

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (!elements_.empty() && elements_.front() < 1)
        throw Error(ErrorKind::ContractViolation,
                    "index set elements must be positive, got " + std::to_string(elements_.front()));
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw Error(ErrorKind::ContractViolation, "index set elements must be distinct");
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
    IndexSet out;
    for (int bit = 0; mask != 0; ++bit, mask >>= 1)
        if (mask & 1u) out.elements_.push_back(bit + 1);
    return out;
}

std::uint64_t IndexSet::to_mask() const {
    std::uint64_t mask = 0;
    for (int e : elements_) {
        if (e > 64)
            throw Error(ErrorKind::OutOfRange, "element " + std::to_string(e) + " does not fit a 64-bit mask");
        mask |= std::uint64_t{1} << (e - 1);
    }
    return mask;
}

bool IndexSet::contains(int value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

IndexSet IndexSet::with(int value) const {
    if (contains(value)) return *this;
    auto copy = elements_;
    copy.push_back(value);
    return IndexSet(std::move(copy));
}

IndexSet IndexSet::without(int value) const {
    IndexSet out = *this;
    std::erase(out.elements_, value);
    return out;
}

bool IndexSet::disjoint_from(const IndexSet& other) const {
    auto a = elements_.begin();
    auto b = other.elements_.begin();
    while (a != elements_.end() && b != other.elements_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

std::string IndexSet::str() const { return join(elements_, '{', '}'); }

// ThetaVector

ThetaVector::ThetaVector(std::initializer_list<int> entries)
    : ThetaVector(std::vector<int>(entries)) {}

ThetaVector::ThetaVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0)
            throw Error(ErrorKind::ContractViolation, "theta entries must be nonnegative");
}

int ThetaVector::total() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

ThetaVector operator+(const ThetaVector& lhs, const ThetaVector& rhs) {
    if (lhs.size() != rhs.size())
        throw Error(ErrorKind::ContractViolation, "theta vectors of different lengths");
    ThetaVector out = lhs;
    for (std::size_t i = 0; i < rhs.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

std::string ThetaVector::str() const { return join(entries_, '(', ')'); }

// GeeParams

GeeParams::GeeParams(std::initializer_list<int> increments)
    : GeeParams(std::vector<int>(increments)) {}

GeeParams::GeeParams(std::vector<int> increments) : increments_(std::move(increments)) {
    int running = 0;
    for (int a : increments_) {
        if (a < 1)
            throw Error(ErrorKind::ContractViolation,
                        "gee increments must be positive, got " + std::to_string(a));
        running += a;
        partial_sums_.push_back(running);
    }
}

GeeParams GeeParams::from_gee(const IndexSet& gee) {
    std::vector<int> increments;
    int previous = 0;
    for (int g : gee) {
        increments.push_back(g - previous);
        previous = g;
    }
    return GeeParams(std::move(increments));
}

std::string GeeParams::str() const { return join(increments_, '(', ')'); }

}  // namespace polycoh
