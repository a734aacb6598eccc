#include "esa/region.hpp"

#include <algorithm>

namespace esa {

int compare(const Endpoint& a, const Endpoint& b) {
    auto rank = [](Endpoint::Kind k) { return k == Endpoint::Kind::NegInf ? -1 : (k == Endpoint::Kind::PosInf ? 1 : 0); };
    if (a.kind != b.kind || !a.finite()) return rank(a.kind) < rank(b.kind) ? -1 : (rank(a.kind) > rank(b.kind) ? 1 : 0);
    return compare(a.value, b.value);
}

bool Piece::contains(const Rational& c) const {
    if (lo.finite()) {
        int s = lo.value.compare(c);  // sign(lo - c)
        if (s > 0 || (s == 0 && !lo.closed)) return false;
    }
    if (hi.finite()) {
        int s = hi.value.compare(c);
        if (s < 0 || (s == 0 && !hi.closed)) return false;
    }
    return true;
}

bool IntervalSet::contains(const Rational& c) const {
    for (const auto& p : pieces)
        if (p.contains(c)) return true;
    return false;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    for (const auto& x : a.pieces)
        for (const auto& y : b.pieces) {
            Endpoint lo, hi;
            int cl = compare(x.lo, y.lo);
            if (cl > 0) {
                lo = x.lo;
            } else if (cl < 0) {
                lo = y.lo;
            } else {
                lo = x.lo;
                lo.closed = x.lo.closed && y.lo.closed;
            }
            int ch = compare(x.hi, y.hi);
            if (ch < 0) {
                hi = x.hi;
            } else if (ch > 0) {
                hi = y.hi;
            } else {
                hi = x.hi;
                hi.closed = x.hi.closed && y.hi.closed;
            }
            int span = compare(lo, hi);
            if (span > 0) continue;
            if (span == 0 && !(lo.closed && hi.closed)) continue;
            out.pieces.push_back({lo, hi});
        }
    std::sort(out.pieces.begin(), out.pieces.end(),
              [](const Piece& p, const Piece& q) { return compare(p.lo, q.lo) < 0; });
    return out;
}

bool same_set(const IntervalSet& a, const IntervalSet& b) {
    if (a.pieces.size() != b.pieces.size()) return false;
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        const auto& p = a.pieces[i];
        const auto& q = b.pieces[i];
        if (compare(p.lo, q.lo) != 0 || compare(p.hi, q.hi) != 0) return false;
        if (p.lo.finite() && p.lo.closed != q.lo.closed) return false;
        if (p.hi.finite() && p.hi.closed != q.hi.closed) return false;
    }
    return true;
}

std::string render(const Endpoint& e, int digits) {
    if (e.kind == Endpoint::Kind::NegInf) return "-∞";
    if (e.kind == Endpoint::Kind::PosInf) return "∞";
    if (auto q = e.value.as_rational(); q && q->get_den() == 1 && q->get_num().get_str().size() <= 12) return to_string(*q);
    if (auto q = e.value.as_rational(); q && q->get_den().get_str().size() <= 6) return to_string(*q);
    return e.value.to_decimal(digits);
}

std::string render(const IntervalSet& s, int digits) {
    if (s.empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < s.pieces.size(); ++i) {
        const auto& p = s.pieces[i];
        if (i > 0) out += " ∪ ";
        out += (p.lo.finite() && p.lo.closed) ? "[" : "(";
        out += render(p.lo, digits);
        out += ", ";
        out += render(p.hi, digits);
        out += (p.hi.finite() && p.hi.closed) ? "]" : ")";
    }
    return out;
}

}  // namespace esa
