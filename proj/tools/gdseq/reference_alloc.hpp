#pragma once

#include <array>
#include <string_view>

namespace gdseq::reference {

struct PublishedAllocRow {
    int n;
    std::string_view f1;
    std::string_view f4;
    std::string_view ratio;
};

// Published allocation-size comparison (rectangular vs ragged table),
// transcribed verbatim. Used by `gdseq table --check-paper` and the tests.
inline constexpr std::array<PublishedAllocRow, 23> kPublishedAllocTable{{
    {10, "20736", "2030", "0.0978974"},
    {20, "1052676", "99736", "0.0947452"},
    {30, "9230816", "885350", "0.0959124"},
    {40, "41730156", "4041722", "0.0968537"},
    {50, "132765696", "12948206", "0.0975267"},
    {60, "339592436", "33286556", "0.0980191"},
    {70, "748505376", "73646710", "0.0983917"},
    {80, "1480839516", "146132702", "0.0986823"},
    {90, "2698969856", "266968646", "0.0989150"},
    {100, "4612311396", "457104592", "0.0991053"},
    {110, "7483319136", "742822422", "0.0992638"},
    {120, "11633488076", "1156341746", "0.0993977"},
    {130, "17449353216", "1736425796", "0.0995123"},
    {140, "25388489556", "2528987092", "0.0996116"},
    {150, "35985512096", "3587693526", "0.0996983"},
    {300, "1182935794196", "118676615988", "0.1003238"},
    {400, "5018396965596", "504274588310", "0.1004852"},
    {500, "15376557756996", "1546620017330", "0.1005830"},
    {600, "38364293168396", "3861311170282", "0.1006486"},
    {700, "83078878199796", "8365678364352", "0.1006956"},
    {800, "162207987851196", "16339372522124", "0.1007310"},
    {900, "292629697122596", "29484953979544", "0.1007586"},
    {1000, "496012481013996", "49988481364570", "0.1007807"},
}};

}  // namespace gdseq::reference
