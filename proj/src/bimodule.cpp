#include "ringext/bimodule.hpp"

#include <string>

namespace ringext {

BimoduleAction::BimoduleAction(FinRing ring, FinAbGroup group, const Table& left, const Table& right)
    : ring_(std::move(ring)), group_(std::move(group)) {
    const int nr = ring_.order(), nm = group_.order();
    auto load = [&](const Table& t, const char* which, std::vector<int>& out) {
        if (static_cast<int>(t.size()) != nr)
            throw StructureError(std::string(which) + " action table needs " + std::to_string(nr) + " rows");
        out.assign(static_cast<std::size_t>(nr) * nm, 0);
        for (int x = 0; x < nr; ++x) {
            if (static_cast<int>(t[x].size()) != nm)
                throw StructureError(std::string(which) + " action row " + std::to_string(x) +
                                     " needs " + std::to_string(nm) + " entries");
            for (int a = 0; a < nm; ++a) {
                if (t[x][a] < 0 || t[x][a] >= nm)
                    throw StructureError(std::string(which) + " action entry out of range");
                out[idx(x, a)] = t[x][a];
            }
        }
    };
    load(left, "left", left_);
    load(right, "right", right_);
}

Table BimoduleAction::left_table() const {
    Table t(ring_.order(), std::vector<int>(group_.order()));
    for (int x = 0; x < ring_.order(); ++x)
        for (int a = 0; a < group_.order(); ++a) t[x][a] = left(x, a);
    return t;
}

Table BimoduleAction::right_table() const {
    Table t(ring_.order(), std::vector<int>(group_.order()));
    for (int x = 0; x < ring_.order(); ++x)
        for (int a = 0; a < group_.order(); ++a) t[x][a] = right(a, x);
    return t;
}

Report validate_bimodule(const BimoduleAction& act) {
    const FinRing& r = act.ring();
    const FinAbGroup& m = act.group();
    Report report;
    if (!r.has_one()) {
        report.push_back({"ring identity", {}, "bimodules are over rings with identity"});
        return report;
    }
    const int nr = r.order(), nm = m.order();
    for (int x = 0; x < nr; ++x)
        for (int a = 0; a < nm; ++a) {
            for (int b = 0; b < nm; ++b) {
                if (act.left(x, m.add(a, b)) != m.add(act.left(x, a), act.left(x, b)))
                    report.push_back({"x(a+b)=xa+xb", {x, a, b}, ""});
                if (act.right(m.add(a, b), x) != m.add(act.right(a, x), act.right(b, x)))
                    report.push_back({"(a+b)x=ax+bx", {x, a, b}, ""});
            }
            for (int y = 0; y < nr; ++y) {
                if (act.left(r.add(x, y), a) != m.add(act.left(x, a), act.left(y, a)))
                    report.push_back({"(x+y)a=xa+ya", {x, y, a}, ""});
                if (act.right(a, r.add(x, y)) != m.add(act.right(a, x), act.right(a, y)))
                    report.push_back({"a(x+y)=ax+ay", {x, y, a}, ""});
                if (act.left(r.mul(x, y), a) != act.left(x, act.left(y, a)))
                    report.push_back({"(xy)a=x(ya)", {x, y, a}, ""});
                if (act.right(a, r.mul(x, y)) != act.right(act.right(a, x), y))
                    report.push_back({"a(xy)=(ax)y", {x, y, a}, ""});
                if (act.right(act.left(x, a), y) != act.left(x, act.right(a, y)))
                    report.push_back({"(xa)y=x(ay)", {x, y, a}, ""});
            }
        }
    const int one = r.one();
    for (int a = 0; a < nm; ++a) {
        if (act.left(one, a) != a) report.push_back({"1a=a", {a}, ""});
        if (act.right(a, one) != a) report.push_back({"a1=a", {a}, ""});
        if (act.left(0, a) != 0 || act.right(a, 0) != 0) report.push_back({"0a=a0=0", {a}, ""});
    }
    return report;
}

BimoduleAction bimodule_from_ring_hom(const FinRing& r, const FinRing& t, const std::vector<int>& h_left,
                                      const std::vector<int>& h_right) {
    if (static_cast<int>(h_left.size()) != r.order() || static_cast<int>(h_right.size()) != r.order())
        throw StructureError("ring homomorphism tables must cover R");
    Table left(r.order(), std::vector<int>(t.order()));
    Table right(r.order(), std::vector<int>(t.order()));
    for (int x = 0; x < r.order(); ++x)
        for (int a = 0; a < t.order(); ++a) {
            left[x][a] = t.mul(h_left[x], a);
            right[x][a] = t.mul(a, h_right[x]);
        }
    return BimoduleAction(r, t.group(), left, right);
}

BimoduleAction regular_bimodule(const FinRing& r) {
    std::vector<int> id(r.order());
    for (int x = 0; x < r.order(); ++x) id[x] = x;
    return bimodule_from_ring_hom(r, r, id, id);
}

}  // namespace ringext
