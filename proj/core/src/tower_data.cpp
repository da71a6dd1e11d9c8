#include "etaq/error.hpp"
#include "etaq/numtheory.hpp"
#include "etaq/towers.hpp"

namespace etaq::towers {

namespace {

mpz_class pw(long b, unsigned long e) { return numtheory::ipow(b, e); }

FamilySpec make_L45()
{
    FamilySpec s{};
    s.id = Family::L45;
    s.two_r = 4;
    s.ell = 5;
    s.sign = 1;
    s.eta_part = {{1, 4}, {5, 4}};
    s.alpha = 6;
    s.beta_even = -4;
    s.shift = 0;
    s.a_jmin = 0;
    s.seed_lo = 1;
    s.seed_hi = 5;
    s.published_m = {
        {1, {{1, 5}}},
        {2, {{1, 2 * 5}, {2, pw(5, 3)}}},
        {3, {{1, 9}, {2, 3 * pw(5, 3)}, {3, pw(5, 5)}}},
        {4, {{1, 4}, {2, 2 * 25 * 11}, {3, 4 * pw(5, 5)}, {4, pw(5, 7)}}},
        {5, {{1, 1}, {2, 4 * pw(5, 3)}, {3, 8 * pw(5, 5)}, {4, pw(5, 8)}, {5, pw(5, 9)}}},
    };
    s.published_a1 = {{0, 5857 * 5}, {1, 1874 * pw(5, 4)}, {2, pw(5, 10)}};
    s.m_bound = {5, 1, -1, 2};
    s.a_bound_odd = {1, 0, 5, 0, 2, {}};
    s.a_bound_even = {1, 0, 5, 1, 2, {}};
    return s;
}

FamilySpec make_L65()
{
    FamilySpec s{};
    s.id = Family::L65;
    s.two_r = 6;
    s.ell = 5;
    s.sign = -1;
    s.eta_part = {{1, 4}, {5, 4}};
    s.alpha = 6;
    s.beta_even = -4;
    s.shift = 0;
    s.a_jmin = 0;
    s.seed_lo = 0;
    s.seed_hi = 4;
    // The published matrix starts at column j = 0 (its first row is E_{2,5} | U_5 = E_{2,5}).
    s.published_m = {
        {0, {{0, 1}}},
        {1, {{1, pw(5, 3)}}},
        {2, {{1, 4 * 25}, {2, pw(5, 5)}}},
        {3, {{1, 9 * 5}, {2, 9 * pw(5, 4)}, {3, pw(5, 7)}}},
        {4, {{1, 2 * 5}, {2, 44 * pw(5, 3)}, {3, 14 * pw(5, 6)}, {4, pw(5, 9)}}},
    };
    s.published_a1 = {{0, 27619 * 25}, {1, 28124 * pw(5, 5)}, {2, pw(5, 13)}};
    s.m_bound = {5, 1, 1, 2};
    s.a_bound_odd = {2, 0, 5, 0, 2, {}};
    s.a_bound_even = {2, 0, 5, 1, 2, {}};
    return s;
}

FamilySpec make_L47()
{
    FamilySpec s{};
    s.id = Family::L47;
    s.two_r = 4;
    s.ell = 7;
    s.sign = 1;
    s.eta_part = {{1, 3}, {7, 3}};
    s.alpha = 4;
    s.beta_even = -3;
    s.shift = 0;
    s.a_jmin = 0;
    s.seed_lo = -6;
    s.seed_hi = 0;
    s.published_m = {
        {0, {{0, 1}}},
        {-1, {{0, 1}}},
        {-2, {{0, 7}}},
        {-3, {{0, -7}}},
        {-4, {{-1, -2}, {0, -49}}},
        {-5, {{0, 49}}},
        {-6, {{-1, -8 * 7}, {0, -343}}},
    };
    s.published_a1 = {{0, 9841 * 7}, {1, 14748 * pw(7, 3)}, {2, 12 * pw(7, 8)}, {3, pw(7, 10)}};
    s.m_bound = {7, 2, 1, 4};
    s.a_bound_odd = {1, 0, 7, 1, 4, {}};
    s.a_bound_even = {1, 0, 7, 3, 4, {}};
    return s;
}

FamilySpec make_L67()
{
    FamilySpec s{};
    s.id = Family::L67;
    s.two_r = 6;
    s.ell = 7;
    s.sign = -1;
    s.eta_part = {{1, 14}, {7, -2}};
    s.alpha = 4;
    s.beta_even = -14;
    s.shift = -4;
    s.a_jmin = 1;
    s.seed_lo = -6;
    s.seed_hi = 0;
    s.published_m = {
        {0, {{0, 1}}},
        {-1, {{0, -1}}},
        {-2, {{0, 1}}},
        {-3, {{0, -7}}},
        {-4, {{-1, -4}, {0, -7}}},
        {-5, {{-1, 10}, {0, 49}}},
        {-6, {{0, 49}}},
    };
    s.published_a1 = {{1, 343799 * 7},          {2, mpz_class(13424541) * 49}, {3, 9999649 * pw(7, 4)},
                      {4, 2823575 * pw(7, 6)}, {5, 3 * pw(7, 14)},           {6, pw(7, 15)}};
    s.m_bound = {7, 2, -1, 4};
    s.a_bound_odd = {2, -2, 7, -5, 4, {}};
    s.a_bound_even = {2, 0, 7, -4, 4, {{2, 2}, {3, 4}}};
    return s;
}

FamilySpec make_L413()
{
    FamilySpec s{};
    s.id = Family::L413;
    s.two_r = 4;
    s.ell = 13;
    s.sign = 1;
    s.alpha = 2;
    s.beta_even = 0;
    s.shift = 0;
    s.a_jmin = 1;
    s.seed_lo = -4;
    s.seed_hi = 8;
    s.published_m = {
        {-4,
         {{-2, 45}, {-1, 885 * 13}, {0, 900 * pw(13, 2)}, {1, 315 * pw(13, 3)}, {2, 45 * pw(13, 4)},
          {4, -pw(13, 5)}}},
        {-3, {{-1, -138}, {0, 124 * 13}, {4, pw(13, 5)}}},
        {-2,
         {{-1, -9}, {0, -171 * 13}, {1, -180 * pw(13, 2)}, {2, -63 * pw(13, 3)}, {3, -9 * pw(13, 4)},
          {4, -pw(13, 4)}}},
        {-1, {{0, 124}, {1, 18 * 13}}},
        {0, {{0, 1}, {1, 19 * 13}, {2, 20 * pw(13, 2)}, {3, 7 * pw(13, 3)}, {4, 12 * pw(13, 3)}}},
        {1, {{1, -46}, {2, -20 * 13}, {4, pw(13, 3)}}},
        {2, {{4, -pw(13, 2)}}},
        {3, {{2, 10}, {3, 8 * 13}, {4, pw(13, 2)}}},
        {4, {{4, -13}}},
        {5, {{4, -13}}},
        {6, {{4, -1}}},
        {7, {{4, -1}}},
        {8, {{5, 19}, {6, 20 * 13}, {7, 7 * pw(13, 2)}, {8, pw(13, 3)}}},
    };
    s.published_a1 = {{1, 158411},
                      {2, mpz_class(6539045) * 13},
                      {3, 2054214 * pw(13, 3)},
                      {4, 43926819 * pw(13, 3)},
                      {5, 1409 * pw(13, 8)},
                      {6, 817 * pw(13, 9)},
                      {7, 4122 * pw(13, 9)},
                      {8, 1085 * pw(13, 10)},
                      {9, 189 * pw(13, 11)},
                      {10, pw(13, 13)}};
    s.m_bound = {13, 7, 3, 14};
    s.a_bound_odd = {1, -1, 13, -7, 14, {}};
    s.a_bound_even = {1, 0, 13, -13, 14, {{3, 1}}};
    return s;
}

FamilySpec make_L613()
{
    FamilySpec s{};
    s.id = Family::L613;
    s.two_r = 6;
    s.ell = 13;
    s.sign = -1;
    s.alpha = 2;
    s.beta_even = 0;
    s.shift = 0;
    s.a_jmin = 1;
    s.seed_lo = 0;
    s.seed_hi = 12;
    s.published_m = {
        {0,
         {{0, 1}, {1, -38 * 13}, {2, -122 * pw(13, 2)}, {3, -108 * pw(13, 3)}, {4, -46 * pw(13, 4)},
          {5, -10 * pw(13, 5)}, {6, -12 * pw(13, 5)}}},
        {1, {{1, 258}, {2, 542 * 13}, {3, 250 * pw(13, 2)}, {4, 4 * pw(13, 4)}, {6, -pw(13, 5)}}},
        {2, {{6, pw(13, 4)}}},
        {3, {{2, -32}, {3, -76 * 13}, {4, -44 * pw(13, 2)}, {5, -14 * pw(13, 3)}, {6, -pw(13, 4)}}},
        {4, {{6, pw(13, 3)}}},
        {5, {{3, -8}, {4, -8 * 13}, {6, pw(13, 3)}}},
        {6, {{6, pw(13, 2)}}},
        {7, {{4, 6}, {5, 6 * 13}, {6, pw(13, 2)}}},
        {8, {{6, 13}}},
        {9, {{5, -2}, {6, -13}}},
        {10, {{6, 1}}},
        {11, {{6, 1}}},
        {12,
         {{7, 38}, {8, 122 * 13}, {9, 108 * pw(13, 2)}, {10, 46 * pw(13, 3)}, {11, 10 * pw(13, 4)},
          {12, pw(13, 5)}}},
    };
    s.published_a1 = {{1, 7154773},
                      {2, mpz_class(1554139318) * 13},
                      {3, mpz_class("12501650600") * pw(13, 2)},
                      {4, mpz_class(2584942916) * pw(13, 4)},
                      {5, mpz_class(3629017744) * pw(13, 5)},
                      {6, mpz_class("41201641625") * pw(13, 5)},
                      {7, 65636 * pw(13, 11)},
                      {8, 27416 * pw(13, 12)},
                      {9, 8208 * pw(13, 13)},
                      {10, 1746 * pw(13, 14)},
                      {11, 254 * pw(13, 15)},
                      {12, 23 * pw(13, 16)},
                      {13, pw(13, 17)}};
    s.m_bound = {13, 7, 5, 14};
    s.a_bound_odd = {2, -2, 13, -7, 14, {}};
    s.a_bound_even = {2, 0, 13, -12, 14, {{3, 1}, {4, 2}, {5, 3}}};
    s.a_bound_even_as_proved = ABound{2, 0, 13, -13, 14, {{3, 1}, {4, 2}, {5, 3}}};
    return s;
}

}  // namespace

const FamilySpec& family_spec(Family f)
{
    static const FamilySpec specs[] = {make_L45(), make_L65(), make_L47(), make_L67(), make_L413(), make_L613()};
    return specs[static_cast<int>(f)];
}

}  // namespace etaq::towers
