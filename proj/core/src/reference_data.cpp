#include <residua/reference_data.hpp>

namespace residua {

namespace {

LinForm lf(long a, long b) {
    LinForm f(2);
    f.coeff[0] = Rat(a);
    f.coeff[1] = Rat(b);
    return f;
}

LinForm lfr(const Rat& a, const Rat& b) {
    LinForm f(2);
    f.coeff[0] = a;
    f.coeff[1] = b;
    return f;
}

QVec qv(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return {a, b, c, d}; }

}  // namespace

std::vector<LabeledValues> f4_simple_value_table() {
    return {
        {"f1", {lf(1, 0), lf(1, 0), lf(0, 1), lf(0, 1)}},
        {"f2", {lf(1, 0), lf(1, 0), lf(-1, 1), lf(0, 1)}},
        {"f3", {lf(1, 0), lf(1, 0), lf(-1, 1), lf(1, 0)}},
        {"f4", {lf(1, 0), lf(1, 0), lf(-2, 1), lf(0, 1)}},
        {"f5", {lf(1, 0), lf(1, 0), lf(-2, 1), lf(2, 0)}},
        {"f6", {lf(1, 0), lf(1, 0), lf(-2, 1), lf(1, 0)}},
        {"f7", {lf(1, 0), lf(1, 0), lf(-2, 1), lf(0, -2)}},
        {"f8", {lf(0, 0), lf(1, 0), lf(0, 0), lf(-1, 1)}},
    };
}

std::vector<LabeledFactors> f4_regularity_table() {
    return {
        {"f1", {lf(2, 3), lf(3, 4), lf(3, 5), lf(5, 6)}},
        {"f2", {lf(1, -6), lf(1, 6), lf(0, 1)}},
        {"f3", {lf(3, 2), lf(1, 3), lf(2, 3), lf(3, 4)}},
        {"f4", {lf(2, -3), lf(3, -4), lf(3, -5), lf(5, -6)}},
        {"f5", {lf(3, 2), lf(3, -2), lf(1, 3), lf(1, -3)}},
        {"f6", {lf(3, -2), lf(1, -3), lf(2, -3), lf(3, -4)}},
        {"f7", {lf(3, 1), lf(3, -1), lf(1, 0)}},
        {"f8", {lf(1, 0), lf(0, 1)}},
    };
}

std::vector<ConfluenceGold> f4_confluence_table() {
    std::vector<ConfluenceGold> t;
    t.push_back({{Rat(0), Rat(1)},
                 {{qv(Rat(0), Rat(0), Rat(1), Rat(1)), {"f1", "f2", "f4"}},
                  {qv(Rat(0), Rat(0), Rat(1), Rat(0)), {"f3", "f5", "f6"}}}});
    t.push_back({{Rat(1), Rat(1)},
                 {{qv(Rat(1), Rat(1), Rat(1), Rat(1)), {"f1"}},
                  {qv(Rat(1), Rat(1), Rat(0), Rat(1)), {"f2", "f3"}},
                  {qv(Rat(0), Rat(1), Rat(0), Rat(1)), {"f5", "f7"}},
                  {qv(Rat(0), Rat(1), Rat(0), Rat(0)), {"f4", "f6", "f8"}}}});
    t.push_back({{Rat(1), Rat(2)},
                 {{qv(Rat(1), Rat(1), Rat(2), Rat(2)), {"f1"}},
                  {qv(Rat(1), Rat(1), Rat(1), Rat(2)), {"f2"}},
                  {qv(Rat(1), Rat(1), Rat(1), Rat(1)), {"f3"}},
                  {qv(Rat(1), Rat(1), Rat(0), Rat(2)), {"f4", "f5"}},
                  {qv(Rat(1), Rat(1), Rat(0), Rat(1)), {"f6", "f7"}},
                  {qv(Rat(0), Rat(1), Rat(0), Rat(1)), {"f8"}}}});
    t.push_back({{Rat(1), Rat(3)},
                 {{qv(Rat(1), Rat(1), Rat(3), Rat(3)), {"f1"}},
                  {qv(Rat(1), Rat(1), Rat(2), Rat(3)), {"f2"}},
                  {qv(Rat(1), Rat(1), Rat(1), Rat(3)), {"f4"}},
                  {qv(Rat(1), Rat(1), Rat(2), Rat(1)), {"f3"}},
                  {qv(Rat(1), Rat(1), Rat(1), Rat(2)), {"f5"}},
                  {qv(Rat(1), Rat(1), Rat(1), Rat(1)), {"f6"}},
                  {qv(Rat(0), Rat(1), Rat(0), Rat(2)), {"f8"}}}});
    t.push_back({{Rat(2), Rat(3)},
                 {{qv(Rat(2), Rat(2), Rat(3), Rat(3)), {"f1"}},
                  {qv(Rat(2), Rat(2), Rat(1), Rat(3)), {"f2"}},
                  {qv(Rat(2), Rat(2), Rat(1), Rat(2)), {"f3"}},
                  {qv(Rat(2), Rat(0), Rat(1), Rat(2)), {"f4", "f7"}},
                  {qv(Rat(0), Rat(2), Rat(0), Rat(1)), {"f8"}}}});
    t.push_back({{Rat(3), Rat(2)},
                 {{qv(Rat(3), Rat(3), Rat(2), Rat(2)), {"f1"}},
                  {qv(Rat(3), Rat(1), Rat(1), Rat(2)), {"f3"}},
                  {qv(Rat(3), Rat(1), Rat(1), Rat(1)), {"f2"}},
                  {qv(Rat(2), Rat(1), Rat(1), Rat(2)), {"f7"}},
                  {qv(Rat(2), Rat(1), Rat(1), Rat(1)), {"f5"}},
                  {qv(Rat(0), Rat(1), Rat(1), Rat(0)), {"f8"}}}});
    t.push_back({{Rat(5), Rat(3)},
                 {{qv(Rat(5), Rat(5), Rat(3), Rat(3)), {"f1"}},
                  {qv(Rat(5), Rat(1), Rat(2), Rat(3)), {"f3"}},
                  {qv(Rat(5), Rat(1), Rat(2), Rat(1)), {"f2"}},
                  {qv(Rat(4), Rat(1), Rat(2), Rat(3)), {"f7"}},
                  {qv(Rat(4), Rat(1), Rat(2), Rat(1)), {"f5"}},
                  {qv(Rat(1), Rat(1), Rat(1), Rat(1)), {"f6"}},
                  {qv(Rat(0), Rat(1), Rat(2), Rat(0)), {"f8"}}}});
    return t;
}

std::vector<LabeledValues> g2_simple_value_table() {
    return {
        {"g1", {lf(1, 0), lf(0, 1)}},
        {"g2", {lf(1, 0), lf(-1, 1)}},
        {"g3", {lf(1, 0), lfr(rat(-1, 2), rat(1, 2))}},
    };
}

std::vector<LabeledFactors> g2_regularity_table() {
    return {
        {"g1", {lf(1, 2), lf(2, 3)}},
        {"g2", {lf(1, -2), lf(2, -3)}},
        {"g3", {lf(1, 0), lf(0, 1)}},
    };
}

std::vector<ConfluenceGold> g2_confluence_table() {
    std::vector<ConfluenceGold> t;
    t.push_back({{Rat(0), Rat(1)}, {{{Rat(0), Rat(1)}, {"g1", "g2"}}}});
    t.push_back({{Rat(1), Rat(1)},
                 {{{Rat(1), Rat(1)}, {"g1"}}, {{Rat(1), Rat(0)}, {"g2", "g3"}}}});
    t.push_back({{Rat(2), Rat(1)},
                 {{{Rat(2), Rat(1)}, {"g1"}}, {{rat(1, 2), rat(1, 2)}, {"g3"}}}});
    return t;
}

}  // namespace residua
