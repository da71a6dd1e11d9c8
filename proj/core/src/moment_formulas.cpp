#include "etaq/error.hpp"
#include "etaq/moments.hpp"

namespace etaq::moments {

namespace {

struct Entry {
    const char* id;
    const char* target;
    const char* terms;
};

// Closed forms of the moments in terms of p(n), e_w(n), N_2(n) and
// p_23(n-1), plus the linear relations between ordinary and symmetrized
// moments.
const Entry kFormulas[] = {
    {"M2", "M2", "2 n p"},
    {"M4", "M4", "1/20 e4 - 1/20 p + 2 n p - 12 n^2 p"},
    {"M6", "M6", "-11/378 e6 + 1/14 e4 - 3/14 n e4 - 8/189 p + 11/6 n p - 20 n^2 p + 40 n^3 p"},
    {"M8", "M8",
     "83/2160 e8 - 2/27 e6 + 4/27 n e6 + 71/1080 e4 - 5/9 n e4 + 2/3 n^2 e4"
     " - 13/432 p + 41/27 n p - 70/3 n^2 p + 112 n^3 p - 112 n^4 p"},
    {"M10", "M10",
     "-2173/25740 e10 + 83/540 e8 - 83/360 n e8 - 47/468 e6 + 70/117 n e6"
     " - 20/39 n^2 e6 + 61/1188 e4 - 103/132 n e4 + 30/11 n^2 e4 - 20/11 n^3 e4"
     " - 2/99 p + 85/72 n p - 70/3 n^2 p + 180 n^3 p - 480 n^4 p + 288 n^5 p"},
    {"M12", "M12",
     "1892286317/6856799040 e12 - 2173/4446 e10 + 2173/3705 n e10"
     " + 42911/146880 e8 - 913/680 n e8 + 913/1020 n^2 e8 - 4565/44226 e6"
     " + 407/351 n e6 - 352/117 n^2 e6 + 176/117 n^3 e6 + 5827/157248 e4"
     " - 2749/3276 n e4 + 141/26 n^2 e4 - 140/13 n^3 e4 + 60/13 n^4 e4"
     " - 8009/606528 p + 571/648 n p - 2299/108 n^2 p + 6116/27 n^3 p"
     " - 3124/3 n^4 p + 1760 n^5 p - 704 n^6 p - 17147966/26113581 p23(n-1)"},
    {"M14", "M14",
     "-120667369/96279840 e14 + 1892286317/866518560 e12 - 1892286317/866518560 n e12"
     " - 767069/615600 e10 + 23903/5130 n e10 - 2173/855 n^2 e10 + 12236939/31395600 e8"
     " - 8059051/2325600 n e8 + 83083/11628 n^2 e8 - 83083/29070 n^3 e8 - 12067/132192 e6"
     " + 13123/8262 n e6 - 3619/459 n^2 e6 + 616/51 n^3 e6 - 616/153 n^4 e6"
     " + 199/7776 e4 - 2023/2592 n e4 + 415/54 n^2 e4 - 259/9 n^3 e4 + 112/3 n^4 e4"
     " - 56/5 n^5 e4 - 31/3645 p + 14917/23328 n p - 5915/324 n^2 p + 4459/18 n^3 p"
     " - 44408/27 n^4 p + 74984/15 n^5 p - 5824 n^6 p + 1664 n^7 p"
     " - 240071524/46200951 p23(n-1) + 240071524/46200951 n p23(n-1)"},
    {"N4", "N4", "2/15 e4 - 2/15 p + 4 n p - 36 n^2 p + N2 - 12 n N2"},
    {"N6", "N6",
     "-1/21 e6 + 5/21 e4 - 12/7 n e4 - 4/21 p + 8 n p - 108 n^2 p"
     " + 432 n^3 p + N2 - 24 n N2 + 108 n^2 N2"},
    {"N8", "N8",
     "26/495 e8 - 14/99 e6 + 8/11 n e6 + 14/45 e4 - 16/3 n e4 + 16 n^2 e4"
     " - 2/9 p + 12 n p - 228 n^2 p + 1728 n^3 p - 3888 n^4 p + N2"
     " - 36 n N2 + 360 n^2 N2 - 864 n^3 N2"},
    {"N10", "N10",
     "-227/2145 e10 + 13/55 e8 - 52/55 n e8 - 36/143 e6 + 480/143 n e6"
     " - 1080/143 n^2 e6 + 4/11 e4 - 112/11 n e4 + 840/11 n^2 e4 - 1440/11 n^3 e4"
     " - 8/33 p + 16 n p - 396 n^2 p + 4464 n^3 p - 21600 n^4 p"
     " + 31104 n^5 p + N2 - 48 n N2 + 756 n^2 N2 - 4320 n^3 N2 + 6480 n^4 N2"},
    {"N12", "N12",
     "145181/440895 e12 - 2497/3705 e10 + 2724/1235 n e10 + 143/255 e8 - 104/17 n e8"
     " + 936/85 n^2 e8 - 33/91 e6 + 108/13 n e6 - 648/13 n^2 e6 + 864/13 n^3 e6"
     " + 110/273 e4 - 1440/91 n e4 + 2592/13 n^2 e4 - 11520/13 n^3 e4"
     " + 12960/13 n^4 e4 - 10/39 p + 20 n p - 612 n^2 p + 9216 n^3 p"
     " - 69552 n^4 p + 233280 n^5 p - 233280 n^6 p + N2 - 60 n N2"
     " + 1296 n^2 N2 - 12096 n^3 N2 + 45360 n^4 N2 - 46656 n^5 N2"
     " - 2664576/2901509 p23(n-1)"},
    {"N14", "N14",
     "-107637/74290 e14 + 1887353/668610 e12 - 290362/37145 n e12 - 2951/1425 e10"
     " + 1816/95 n e10 - 2724/95 n^2 e10 + 24167/24225 e8 - 156156/8075 n e8"
     " + 156156/1615 n^2 e8 - 170352/1615 n^3 e8 - 143/306 e6 + 264/17 n e6"
     " - 2772/17 n^2 e6 + 10080/17 n^3 e6 - 9072/17 n^4 e6 + 13/30 e4"
     " - 22 n e4 + 396 n^2 e4 - 3024 n^3 e4 + 9072 n^4 e4 - 36288/5 n^5 e4"
     " - 4/15 p + 24 n p - 876 n^2 p + 16560 n^3 p - 171072 n^4 p"
     " + 4644864/5 n^5 p - 2286144 n^6 p + 1679616 n^7 p + N2 - 72 n N2"
     " + 1980 n^2 N2 - 25920 n^3 N2 + 163296 n^4 N2 - 435456 n^5 N2"
     " + 326592 n^6 N2 - 40412736/5133439 p23(n-1)"
     " + 111912192/5133439 n p23(n-1)"},
    {"mu4", "mu4", "1/480 e4 - 1/480 p - 1/2 n^2 p"},
    {"mu6", "mu6",
     "-11/272160 e6 - 1/4032 e4 - 1/3360 n e4 + 157/544320 p"
     " - 1/4320 n p + 1/18 n^2 p + 1/18 n^3 p"},
    {"eta4", "eta4", "1/180 e4 - 1/180 p + 1/6 n p - 3/2 n^2 p - 1/2 n N2"},
    {"eta6", "eta6",
     "-1/15120 e6 - 1/1680 e4 - 1/420 n e4 + 1/1512 p - 1/60 n p"
     " + 1/10 n^2 p + 3/5 n^3 p + 1/20 n N2 + 3/20 n^2 N2"},
    {"spt2", "spt2", "-1/288 e4 + 1/2 n N2 + 1/288 p - 1/6 n p + n^2 p"},
    {"spt3", "spt3",
     "1/38880 e6 + 1/2880 e4 + 1/480 n e4 - 29/77760 p + 71/4320 n p"
     " - 2/45 n^2 p - 49/90 n^3 p - 1/20 n N2 - 3/20 n^2 N2"},
    {"eta2-N2", "eta2", "1/2 N2"},
    {"mu2-M2", "mu2", "1/2 M2"},
    {"eta4-N4", "eta4", "1/24 N4 - 1/24 N2"},
    {"mu4-M4", "mu4", "1/24 M4 - 1/24 M2"},
    {"eta6-N6", "eta6", "1/720 N6 - 1/144 N4 + 1/180 N2"},
    {"mu6-M6", "mu6", "1/720 M6 - 1/144 M4 + 1/180 M2"},
    {"spt-N2", "spt", "n p - 1/2 N2"},
    {"spt-M2-N2", "spt", "1/2 M2 - 1/2 N2"},
};

}  // namespace

const std::vector<MomentFormula>& moment_formulas()
{
    static const std::vector<MomentFormula> all = [] {
        std::vector<MomentFormula> v;
        for (const auto& e : kFormulas)
            v.push_back({e.id, e.target, parse_formula_terms(e.terms)});
        return v;
    }();
    return all;
}

const MomentFormula& moment_formula(const std::string& id)
{
    for (const auto& f : moment_formulas())
        if (f.id == id)
            return f;
    fail(ErrorKind::InvalidParameter, "unknown moment formula '" + id + "'");
}

}  // namespace etaq::moments
