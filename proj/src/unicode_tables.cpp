// Generated by tools/gen_unicode_tables.py (Unicode 13.0.0). Do not edit.

#include "unicode_tables.hpp"

namespace bertsa::unicode {

const std::array<CodepointRange, 180> kPunctuation = {{
    {0x21, 0x2F},
    {0x3A, 0x40},
    {0x5B, 0x60},
    {0x7B, 0x7E},
    {0xA1, 0xA1},
    {0xA7, 0xA7},
    {0xAB, 0xAB},
    {0xB6, 0xB7},
    {0xBB, 0xBB},
    {0xBF, 0xBF},
    {0x37E, 0x37E},
    {0x387, 0x387},
    {0x55A, 0x55F},
    {0x589, 0x58A},
    {0x5BE, 0x5BE},
    {0x5C0, 0x5C0},
    {0x5C3, 0x5C3},
    {0x5C6, 0x5C6},
    {0x5F3, 0x5F4},
    {0x609, 0x60A},
    {0x60C, 0x60D},
    {0x61B, 0x61B},
    {0x61E, 0x61F},
    {0x66A, 0x66D},
    {0x6D4, 0x6D4},
    {0x700, 0x70D},
    {0x7F7, 0x7F9},
    {0x830, 0x83E},
    {0x85E, 0x85E},
    {0x964, 0x965},
    {0x970, 0x970},
    {0x9FD, 0x9FD},
    {0xA76, 0xA76},
    {0xAF0, 0xAF0},
    {0xC77, 0xC77},
    {0xC84, 0xC84},
    {0xDF4, 0xDF4},
    {0xE4F, 0xE4F},
    {0xE5A, 0xE5B},
    {0xF04, 0xF12},
    {0xF14, 0xF14},
    {0xF3A, 0xF3D},
    {0xF85, 0xF85},
    {0xFD0, 0xFD4},
    {0xFD9, 0xFDA},
    {0x104A, 0x104F},
    {0x10FB, 0x10FB},
    {0x1360, 0x1368},
    {0x1400, 0x1400},
    {0x166E, 0x166E},
    {0x169B, 0x169C},
    {0x16EB, 0x16ED},
    {0x1735, 0x1736},
    {0x17D4, 0x17D6},
    {0x17D8, 0x17DA},
    {0x1800, 0x180A},
    {0x1944, 0x1945},
    {0x1A1E, 0x1A1F},
    {0x1AA0, 0x1AA6},
    {0x1AA8, 0x1AAD},
    {0x1B5A, 0x1B60},
    {0x1BFC, 0x1BFF},
    {0x1C3B, 0x1C3F},
    {0x1C7E, 0x1C7F},
    {0x1CC0, 0x1CC7},
    {0x1CD3, 0x1CD3},
    {0x2010, 0x2027},
    {0x2030, 0x2043},
    {0x2045, 0x2051},
    {0x2053, 0x205E},
    {0x207D, 0x207E},
    {0x208D, 0x208E},
    {0x2308, 0x230B},
    {0x2329, 0x232A},
    {0x2768, 0x2775},
    {0x27C5, 0x27C6},
    {0x27E6, 0x27EF},
    {0x2983, 0x2998},
    {0x29D8, 0x29DB},
    {0x29FC, 0x29FD},
    {0x2CF9, 0x2CFC},
    {0x2CFE, 0x2CFF},
    {0x2D70, 0x2D70},
    {0x2E00, 0x2E2E},
    {0x2E30, 0x2E4F},
    {0x2E52, 0x2E52},
    {0x3001, 0x3003},
    {0x3008, 0x3011},
    {0x3014, 0x301F},
    {0x3030, 0x3030},
    {0x303D, 0x303D},
    {0x30A0, 0x30A0},
    {0x30FB, 0x30FB},
    {0xA4FE, 0xA4FF},
    {0xA60D, 0xA60F},
    {0xA673, 0xA673},
    {0xA67E, 0xA67E},
    {0xA6F2, 0xA6F7},
    {0xA874, 0xA877},
    {0xA8CE, 0xA8CF},
    {0xA8F8, 0xA8FA},
    {0xA8FC, 0xA8FC},
    {0xA92E, 0xA92F},
    {0xA95F, 0xA95F},
    {0xA9C1, 0xA9CD},
    {0xA9DE, 0xA9DF},
    {0xAA5C, 0xAA5F},
    {0xAADE, 0xAADF},
    {0xAAF0, 0xAAF1},
    {0xABEB, 0xABEB},
    {0xFD3E, 0xFD3F},
    {0xFE10, 0xFE19},
    {0xFE30, 0xFE52},
    {0xFE54, 0xFE61},
    {0xFE63, 0xFE63},
    {0xFE68, 0xFE68},
    {0xFE6A, 0xFE6B},
    {0xFF01, 0xFF03},
    {0xFF05, 0xFF0A},
    {0xFF0C, 0xFF0F},
    {0xFF1A, 0xFF1B},
    {0xFF1F, 0xFF20},
    {0xFF3B, 0xFF3D},
    {0xFF3F, 0xFF3F},
    {0xFF5B, 0xFF5B},
    {0xFF5D, 0xFF5D},
    {0xFF5F, 0xFF65},
    {0x10100, 0x10102},
    {0x1039F, 0x1039F},
    {0x103D0, 0x103D0},
    {0x1056F, 0x1056F},
    {0x10857, 0x10857},
    {0x1091F, 0x1091F},
    {0x1093F, 0x1093F},
    {0x10A50, 0x10A58},
    {0x10A7F, 0x10A7F},
    {0x10AF0, 0x10AF6},
    {0x10B39, 0x10B3F},
    {0x10B99, 0x10B9C},
    {0x10EAD, 0x10EAD},
    {0x10F55, 0x10F59},
    {0x11047, 0x1104D},
    {0x110BB, 0x110BC},
    {0x110BE, 0x110C1},
    {0x11140, 0x11143},
    {0x11174, 0x11175},
    {0x111C5, 0x111C8},
    {0x111CD, 0x111CD},
    {0x111DB, 0x111DB},
    {0x111DD, 0x111DF},
    {0x11238, 0x1123D},
    {0x112A9, 0x112A9},
    {0x1144B, 0x1144F},
    {0x1145A, 0x1145B},
    {0x1145D, 0x1145D},
    {0x114C6, 0x114C6},
    {0x115C1, 0x115D7},
    {0x11641, 0x11643},
    {0x11660, 0x1166C},
    {0x1173C, 0x1173E},
    {0x1183B, 0x1183B},
    {0x11944, 0x11946},
    {0x119E2, 0x119E2},
    {0x11A3F, 0x11A46},
    {0x11A9A, 0x11A9C},
    {0x11A9E, 0x11AA2},
    {0x11C41, 0x11C45},
    {0x11C70, 0x11C71},
    {0x11EF7, 0x11EF8},
    {0x11FFF, 0x11FFF},
    {0x12470, 0x12474},
    {0x16A6E, 0x16A6F},
    {0x16AF5, 0x16AF5},
    {0x16B37, 0x16B3B},
    {0x16B44, 0x16B44},
    {0x16E97, 0x16E9A},
    {0x16FE2, 0x16FE2},
    {0x1BC9F, 0x1BC9F},
    {0x1DA87, 0x1DA8B},
    {0x1E95E, 0x1E95F},
}};

const std::array<CodepointRange, 9> kWhitespace = {{
    {0x9, 0xA},
    {0xD, 0xD},
    {0x20, 0x20},
    {0xA0, 0xA0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
}};

const std::array<CodepointRange, 22> kControl = {{
    {0x0, 0x8},
    {0xB, 0xC},
    {0xE, 0x1F},
    {0x7F, 0x9F},
    {0xAD, 0xAD},
    {0x600, 0x605},
    {0x61C, 0x61C},
    {0x6DD, 0x6DD},
    {0x70F, 0x70F},
    {0x8E2, 0x8E2},
    {0x180E, 0x180E},
    {0x200B, 0x200F},
    {0x202A, 0x202E},
    {0x2060, 0x2064},
    {0x2066, 0x206F},
    {0xFEFF, 0xFEFF},
    {0xFFF9, 0xFFFB},
    {0x110BD, 0x110BD},
    {0x110CD, 0x110CD},
    {0x13430, 0x13438},
    {0x1BCA0, 0x1BCA3},
    {0x1D173, 0x1D17A},
}};

const std::array<CodepointRange, 326> kNonspacingMark = {{
    {0x300, 0x36F},
    {0x483, 0x487},
    {0x591, 0x5BD},
    {0x5BF, 0x5BF},
    {0x5C1, 0x5C2},
    {0x5C4, 0x5C5},
    {0x5C7, 0x5C7},
    {0x610, 0x61A},
    {0x64B, 0x65F},
    {0x670, 0x670},
    {0x6D6, 0x6DC},
    {0x6DF, 0x6E4},
    {0x6E7, 0x6E8},
    {0x6EA, 0x6ED},
    {0x711, 0x711},
    {0x730, 0x74A},
    {0x7A6, 0x7B0},
    {0x7EB, 0x7F3},
    {0x7FD, 0x7FD},
    {0x816, 0x819},
    {0x81B, 0x823},
    {0x825, 0x827},
    {0x829, 0x82D},
    {0x859, 0x85B},
    {0x8D3, 0x8E1},
    {0x8E3, 0x902},
    {0x93A, 0x93A},
    {0x93C, 0x93C},
    {0x941, 0x948},
    {0x94D, 0x94D},
    {0x951, 0x957},
    {0x962, 0x963},
    {0x981, 0x981},
    {0x9BC, 0x9BC},
    {0x9C1, 0x9C4},
    {0x9CD, 0x9CD},
    {0x9E2, 0x9E3},
    {0x9FE, 0x9FE},
    {0xA01, 0xA02},
    {0xA3C, 0xA3C},
    {0xA41, 0xA42},
    {0xA47, 0xA48},
    {0xA4B, 0xA4D},
    {0xA51, 0xA51},
    {0xA70, 0xA71},
    {0xA75, 0xA75},
    {0xA81, 0xA82},
    {0xABC, 0xABC},
    {0xAC1, 0xAC5},
    {0xAC7, 0xAC8},
    {0xACD, 0xACD},
    {0xAE2, 0xAE3},
    {0xAFA, 0xAFF},
    {0xB01, 0xB01},
    {0xB3C, 0xB3C},
    {0xB3F, 0xB3F},
    {0xB41, 0xB44},
    {0xB4D, 0xB4D},
    {0xB55, 0xB56},
    {0xB62, 0xB63},
    {0xB82, 0xB82},
    {0xBC0, 0xBC0},
    {0xBCD, 0xBCD},
    {0xC00, 0xC00},
    {0xC04, 0xC04},
    {0xC3E, 0xC40},
    {0xC46, 0xC48},
    {0xC4A, 0xC4D},
    {0xC55, 0xC56},
    {0xC62, 0xC63},
    {0xC81, 0xC81},
    {0xCBC, 0xCBC},
    {0xCBF, 0xCBF},
    {0xCC6, 0xCC6},
    {0xCCC, 0xCCD},
    {0xCE2, 0xCE3},
    {0xD00, 0xD01},
    {0xD3B, 0xD3C},
    {0xD41, 0xD44},
    {0xD4D, 0xD4D},
    {0xD62, 0xD63},
    {0xD81, 0xD81},
    {0xDCA, 0xDCA},
    {0xDD2, 0xDD4},
    {0xDD6, 0xDD6},
    {0xE31, 0xE31},
    {0xE34, 0xE3A},
    {0xE47, 0xE4E},
    {0xEB1, 0xEB1},
    {0xEB4, 0xEBC},
    {0xEC8, 0xECD},
    {0xF18, 0xF19},
    {0xF35, 0xF35},
    {0xF37, 0xF37},
    {0xF39, 0xF39},
    {0xF71, 0xF7E},
    {0xF80, 0xF84},
    {0xF86, 0xF87},
    {0xF8D, 0xF97},
    {0xF99, 0xFBC},
    {0xFC6, 0xFC6},
    {0x102D, 0x1030},
    {0x1032, 0x1037},
    {0x1039, 0x103A},
    {0x103D, 0x103E},
    {0x1058, 0x1059},
    {0x105E, 0x1060},
    {0x1071, 0x1074},
    {0x1082, 0x1082},
    {0x1085, 0x1086},
    {0x108D, 0x108D},
    {0x109D, 0x109D},
    {0x135D, 0x135F},
    {0x1712, 0x1714},
    {0x1732, 0x1734},
    {0x1752, 0x1753},
    {0x1772, 0x1773},
    {0x17B4, 0x17B5},
    {0x17B7, 0x17BD},
    {0x17C6, 0x17C6},
    {0x17C9, 0x17D3},
    {0x17DD, 0x17DD},
    {0x180B, 0x180D},
    {0x1885, 0x1886},
    {0x18A9, 0x18A9},
    {0x1920, 0x1922},
    {0x1927, 0x1928},
    {0x1932, 0x1932},
    {0x1939, 0x193B},
    {0x1A17, 0x1A18},
    {0x1A1B, 0x1A1B},
    {0x1A56, 0x1A56},
    {0x1A58, 0x1A5E},
    {0x1A60, 0x1A60},
    {0x1A62, 0x1A62},
    {0x1A65, 0x1A6C},
    {0x1A73, 0x1A7C},
    {0x1A7F, 0x1A7F},
    {0x1AB0, 0x1ABD},
    {0x1ABF, 0x1AC0},
    {0x1B00, 0x1B03},
    {0x1B34, 0x1B34},
    {0x1B36, 0x1B3A},
    {0x1B3C, 0x1B3C},
    {0x1B42, 0x1B42},
    {0x1B6B, 0x1B73},
    {0x1B80, 0x1B81},
    {0x1BA2, 0x1BA5},
    {0x1BA8, 0x1BA9},
    {0x1BAB, 0x1BAD},
    {0x1BE6, 0x1BE6},
    {0x1BE8, 0x1BE9},
    {0x1BED, 0x1BED},
    {0x1BEF, 0x1BF1},
    {0x1C2C, 0x1C33},
    {0x1C36, 0x1C37},
    {0x1CD0, 0x1CD2},
    {0x1CD4, 0x1CE0},
    {0x1CE2, 0x1CE8},
    {0x1CED, 0x1CED},
    {0x1CF4, 0x1CF4},
    {0x1CF8, 0x1CF9},
    {0x1DC0, 0x1DF9},
    {0x1DFB, 0x1DFF},
    {0x20D0, 0x20DC},
    {0x20E1, 0x20E1},
    {0x20E5, 0x20F0},
    {0x2CEF, 0x2CF1},
    {0x2D7F, 0x2D7F},
    {0x2DE0, 0x2DFF},
    {0x302A, 0x302D},
    {0x3099, 0x309A},
    {0xA66F, 0xA66F},
    {0xA674, 0xA67D},
    {0xA69E, 0xA69F},
    {0xA6F0, 0xA6F1},
    {0xA802, 0xA802},
    {0xA806, 0xA806},
    {0xA80B, 0xA80B},
    {0xA825, 0xA826},
    {0xA82C, 0xA82C},
    {0xA8C4, 0xA8C5},
    {0xA8E0, 0xA8F1},
    {0xA8FF, 0xA8FF},
    {0xA926, 0xA92D},
    {0xA947, 0xA951},
    {0xA980, 0xA982},
    {0xA9B3, 0xA9B3},
    {0xA9B6, 0xA9B9},
    {0xA9BC, 0xA9BD},
    {0xA9E5, 0xA9E5},
    {0xAA29, 0xAA2E},
    {0xAA31, 0xAA32},
    {0xAA35, 0xAA36},
    {0xAA43, 0xAA43},
    {0xAA4C, 0xAA4C},
    {0xAA7C, 0xAA7C},
    {0xAAB0, 0xAAB0},
    {0xAAB2, 0xAAB4},
    {0xAAB7, 0xAAB8},
    {0xAABE, 0xAABF},
    {0xAAC1, 0xAAC1},
    {0xAAEC, 0xAAED},
    {0xAAF6, 0xAAF6},
    {0xABE5, 0xABE5},
    {0xABE8, 0xABE8},
    {0xABED, 0xABED},
    {0xFB1E, 0xFB1E},
    {0xFE00, 0xFE0F},
    {0xFE20, 0xFE2F},
    {0x101FD, 0x101FD},
    {0x102E0, 0x102E0},
    {0x10376, 0x1037A},
    {0x10A01, 0x10A03},
    {0x10A05, 0x10A06},
    {0x10A0C, 0x10A0F},
    {0x10A38, 0x10A3A},
    {0x10A3F, 0x10A3F},
    {0x10AE5, 0x10AE6},
    {0x10D24, 0x10D27},
    {0x10EAB, 0x10EAC},
    {0x10F46, 0x10F50},
    {0x11001, 0x11001},
    {0x11038, 0x11046},
    {0x1107F, 0x11081},
    {0x110B3, 0x110B6},
    {0x110B9, 0x110BA},
    {0x11100, 0x11102},
    {0x11127, 0x1112B},
    {0x1112D, 0x11134},
    {0x11173, 0x11173},
    {0x11180, 0x11181},
    {0x111B6, 0x111BE},
    {0x111C9, 0x111CC},
    {0x111CF, 0x111CF},
    {0x1122F, 0x11231},
    {0x11234, 0x11234},
    {0x11236, 0x11237},
    {0x1123E, 0x1123E},
    {0x112DF, 0x112DF},
    {0x112E3, 0x112EA},
    {0x11300, 0x11301},
    {0x1133B, 0x1133C},
    {0x11340, 0x11340},
    {0x11366, 0x1136C},
    {0x11370, 0x11374},
    {0x11438, 0x1143F},
    {0x11442, 0x11444},
    {0x11446, 0x11446},
    {0x1145E, 0x1145E},
    {0x114B3, 0x114B8},
    {0x114BA, 0x114BA},
    {0x114BF, 0x114C0},
    {0x114C2, 0x114C3},
    {0x115B2, 0x115B5},
    {0x115BC, 0x115BD},
    {0x115BF, 0x115C0},
    {0x115DC, 0x115DD},
    {0x11633, 0x1163A},
    {0x1163D, 0x1163D},
    {0x1163F, 0x11640},
    {0x116AB, 0x116AB},
    {0x116AD, 0x116AD},
    {0x116B0, 0x116B5},
    {0x116B7, 0x116B7},
    {0x1171D, 0x1171F},
    {0x11722, 0x11725},
    {0x11727, 0x1172B},
    {0x1182F, 0x11837},
    {0x11839, 0x1183A},
    {0x1193B, 0x1193C},
    {0x1193E, 0x1193E},
    {0x11943, 0x11943},
    {0x119D4, 0x119D7},
    {0x119DA, 0x119DB},
    {0x119E0, 0x119E0},
    {0x11A01, 0x11A0A},
    {0x11A33, 0x11A38},
    {0x11A3B, 0x11A3E},
    {0x11A47, 0x11A47},
    {0x11A51, 0x11A56},
    {0x11A59, 0x11A5B},
    {0x11A8A, 0x11A96},
    {0x11A98, 0x11A99},
    {0x11C30, 0x11C36},
    {0x11C38, 0x11C3D},
    {0x11C3F, 0x11C3F},
    {0x11C92, 0x11CA7},
    {0x11CAA, 0x11CB0},
    {0x11CB2, 0x11CB3},
    {0x11CB5, 0x11CB6},
    {0x11D31, 0x11D36},
    {0x11D3A, 0x11D3A},
    {0x11D3C, 0x11D3D},
    {0x11D3F, 0x11D45},
    {0x11D47, 0x11D47},
    {0x11D90, 0x11D91},
    {0x11D95, 0x11D95},
    {0x11D97, 0x11D97},
    {0x11EF3, 0x11EF4},
    {0x16AF0, 0x16AF4},
    {0x16B30, 0x16B36},
    {0x16F4F, 0x16F4F},
    {0x16F8F, 0x16F92},
    {0x16FE4, 0x16FE4},
    {0x1BC9D, 0x1BC9E},
    {0x1D167, 0x1D169},
    {0x1D17B, 0x1D182},
    {0x1D185, 0x1D18B},
    {0x1D1AA, 0x1D1AD},
    {0x1D242, 0x1D244},
    {0x1DA00, 0x1DA36},
    {0x1DA3B, 0x1DA6C},
    {0x1DA75, 0x1DA75},
    {0x1DA84, 0x1DA84},
    {0x1DA9B, 0x1DA9F},
    {0x1DAA1, 0x1DAAF},
    {0x1E000, 0x1E006},
    {0x1E008, 0x1E018},
    {0x1E01B, 0x1E021},
    {0x1E023, 0x1E024},
    {0x1E026, 0x1E02A},
    {0x1E130, 0x1E136},
    {0x1E2EC, 0x1E2EF},
    {0x1E8D0, 0x1E8D6},
    {0x1E944, 0x1E94A},
}};

const std::array<FoldEntry, 3056> kFold = {{
    {0x41, 1, {0x61, 0x0, 0x0}},
    {0x42, 1, {0x62, 0x0, 0x0}},
    {0x43, 1, {0x63, 0x0, 0x0}},
    {0x44, 1, {0x64, 0x0, 0x0}},
    {0x45, 1, {0x65, 0x0, 0x0}},
    {0x46, 1, {0x66, 0x0, 0x0}},
    {0x47, 1, {0x67, 0x0, 0x0}},
    {0x48, 1, {0x68, 0x0, 0x0}},
    {0x49, 1, {0x69, 0x0, 0x0}},
    {0x4A, 1, {0x6A, 0x0, 0x0}},
    {0x4B, 1, {0x6B, 0x0, 0x0}},
    {0x4C, 1, {0x6C, 0x0, 0x0}},
    {0x4D, 1, {0x6D, 0x0, 0x0}},
    {0x4E, 1, {0x6E, 0x0, 0x0}},
    {0x4F, 1, {0x6F, 0x0, 0x0}},
    {0x50, 1, {0x70, 0x0, 0x0}},
    {0x51, 1, {0x71, 0x0, 0x0}},
    {0x52, 1, {0x72, 0x0, 0x0}},
    {0x53, 1, {0x73, 0x0, 0x0}},
    {0x54, 1, {0x74, 0x0, 0x0}},
    {0x55, 1, {0x75, 0x0, 0x0}},
    {0x56, 1, {0x76, 0x0, 0x0}},
    {0x57, 1, {0x77, 0x0, 0x0}},
    {0x58, 1, {0x78, 0x0, 0x0}},
    {0x59, 1, {0x79, 0x0, 0x0}},
    {0x5A, 1, {0x7A, 0x0, 0x0}},
    {0xC0, 1, {0x61, 0x0, 0x0}},
    {0xC1, 1, {0x61, 0x0, 0x0}},
    {0xC2, 1, {0x61, 0x0, 0x0}},
    {0xC3, 1, {0x61, 0x0, 0x0}},
    {0xC4, 1, {0x61, 0x0, 0x0}},
    {0xC5, 1, {0x61, 0x0, 0x0}},
    {0xC6, 1, {0xE6, 0x0, 0x0}},
    {0xC7, 1, {0x63, 0x0, 0x0}},
    {0xC8, 1, {0x65, 0x0, 0x0}},
    {0xC9, 1, {0x65, 0x0, 0x0}},
    {0xCA, 1, {0x65, 0x0, 0x0}},
    {0xCB, 1, {0x65, 0x0, 0x0}},
    {0xCC, 1, {0x69, 0x0, 0x0}},
    {0xCD, 1, {0x69, 0x0, 0x0}},
    {0xCE, 1, {0x69, 0x0, 0x0}},
    {0xCF, 1, {0x69, 0x0, 0x0}},
    {0xD0, 1, {0xF0, 0x0, 0x0}},
    {0xD1, 1, {0x6E, 0x0, 0x0}},
    {0xD2, 1, {0x6F, 0x0, 0x0}},
    {0xD3, 1, {0x6F, 0x0, 0x0}},
    {0xD4, 1, {0x6F, 0x0, 0x0}},
    {0xD5, 1, {0x6F, 0x0, 0x0}},
    {0xD6, 1, {0x6F, 0x0, 0x0}},
    {0xD8, 1, {0xF8, 0x0, 0x0}},
    {0xD9, 1, {0x75, 0x0, 0x0}},
    {0xDA, 1, {0x75, 0x0, 0x0}},
    {0xDB, 1, {0x75, 0x0, 0x0}},
    {0xDC, 1, {0x75, 0x0, 0x0}},
    {0xDD, 1, {0x79, 0x0, 0x0}},
    {0xDE, 1, {0xFE, 0x0, 0x0}},
    {0xE0, 1, {0x61, 0x0, 0x0}},
    {0xE1, 1, {0x61, 0x0, 0x0}},
    {0xE2, 1, {0x61, 0x0, 0x0}},
    {0xE3, 1, {0x61, 0x0, 0x0}},
    {0xE4, 1, {0x61, 0x0, 0x0}},
    {0xE5, 1, {0x61, 0x0, 0x0}},
    {0xE7, 1, {0x63, 0x0, 0x0}},
    {0xE8, 1, {0x65, 0x0, 0x0}},
    {0xE9, 1, {0x65, 0x0, 0x0}},
    {0xEA, 1, {0x65, 0x0, 0x0}},
    {0xEB, 1, {0x65, 0x0, 0x0}},
    {0xEC, 1, {0x69, 0x0, 0x0}},
    {0xED, 1, {0x69, 0x0, 0x0}},
    {0xEE, 1, {0x69, 0x0, 0x0}},
    {0xEF, 1, {0x69, 0x0, 0x0}},
    {0xF1, 1, {0x6E, 0x0, 0x0}},
    {0xF2, 1, {0x6F, 0x0, 0x0}},
    {0xF3, 1, {0x6F, 0x0, 0x0}},
    {0xF4, 1, {0x6F, 0x0, 0x0}},
    {0xF5, 1, {0x6F, 0x0, 0x0}},
    {0xF6, 1, {0x6F, 0x0, 0x0}},
    {0xF9, 1, {0x75, 0x0, 0x0}},
    {0xFA, 1, {0x75, 0x0, 0x0}},
    {0xFB, 1, {0x75, 0x0, 0x0}},
    {0xFC, 1, {0x75, 0x0, 0x0}},
    {0xFD, 1, {0x79, 0x0, 0x0}},
    {0xFF, 1, {0x79, 0x0, 0x0}},
    {0x100, 1, {0x61, 0x0, 0x0}},
    {0x101, 1, {0x61, 0x0, 0x0}},
    {0x102, 1, {0x61, 0x0, 0x0}},
    {0x103, 1, {0x61, 0x0, 0x0}},
    {0x104, 1, {0x61, 0x0, 0x0}},
    {0x105, 1, {0x61, 0x0, 0x0}},
    {0x106, 1, {0x63, 0x0, 0x0}},
    {0x107, 1, {0x63, 0x0, 0x0}},
    {0x108, 1, {0x63, 0x0, 0x0}},
    {0x109, 1, {0x63, 0x0, 0x0}},
    {0x10A, 1, {0x63, 0x0, 0x0}},
    {0x10B, 1, {0x63, 0x0, 0x0}},
    {0x10C, 1, {0x63, 0x0, 0x0}},
    {0x10D, 1, {0x63, 0x0, 0x0}},
    {0x10E, 1, {0x64, 0x0, 0x0}},
    {0x10F, 1, {0x64, 0x0, 0x0}},
    {0x110, 1, {0x111, 0x0, 0x0}},
    {0x112, 1, {0x65, 0x0, 0x0}},
    {0x113, 1, {0x65, 0x0, 0x0}},
    {0x114, 1, {0x65, 0x0, 0x0}},
    {0x115, 1, {0x65, 0x0, 0x0}},
    {0x116, 1, {0x65, 0x0, 0x0}},
    {0x117, 1, {0x65, 0x0, 0x0}},
    {0x118, 1, {0x65, 0x0, 0x0}},
    {0x119, 1, {0x65, 0x0, 0x0}},
    {0x11A, 1, {0x65, 0x0, 0x0}},
    {0x11B, 1, {0x65, 0x0, 0x0}},
    {0x11C, 1, {0x67, 0x0, 0x0}},
    {0x11D, 1, {0x67, 0x0, 0x0}},
    {0x11E, 1, {0x67, 0x0, 0x0}},
    {0x11F, 1, {0x67, 0x0, 0x0}},
    {0x120, 1, {0x67, 0x0, 0x0}},
    {0x121, 1, {0x67, 0x0, 0x0}},
    {0x122, 1, {0x67, 0x0, 0x0}},
    {0x123, 1, {0x67, 0x0, 0x0}},
    {0x124, 1, {0x68, 0x0, 0x0}},
    {0x125, 1, {0x68, 0x0, 0x0}},
    {0x126, 1, {0x127, 0x0, 0x0}},
    {0x128, 1, {0x69, 0x0, 0x0}},
    {0x129, 1, {0x69, 0x0, 0x0}},
    {0x12A, 1, {0x69, 0x0, 0x0}},
    {0x12B, 1, {0x69, 0x0, 0x0}},
    {0x12C, 1, {0x69, 0x0, 0x0}},
    {0x12D, 1, {0x69, 0x0, 0x0}},
    {0x12E, 1, {0x69, 0x0, 0x0}},
    {0x12F, 1, {0x69, 0x0, 0x0}},
    {0x130, 1, {0x69, 0x0, 0x0}},
    {0x132, 1, {0x133, 0x0, 0x0}},
    {0x134, 1, {0x6A, 0x0, 0x0}},
    {0x135, 1, {0x6A, 0x0, 0x0}},
    {0x136, 1, {0x6B, 0x0, 0x0}},
    {0x137, 1, {0x6B, 0x0, 0x0}},
    {0x139, 1, {0x6C, 0x0, 0x0}},
    {0x13A, 1, {0x6C, 0x0, 0x0}},
    {0x13B, 1, {0x6C, 0x0, 0x0}},
    {0x13C, 1, {0x6C, 0x0, 0x0}},
    {0x13D, 1, {0x6C, 0x0, 0x0}},
    {0x13E, 1, {0x6C, 0x0, 0x0}},
    {0x13F, 1, {0x140, 0x0, 0x0}},
    {0x141, 1, {0x142, 0x0, 0x0}},
    {0x143, 1, {0x6E, 0x0, 0x0}},
    {0x144, 1, {0x6E, 0x0, 0x0}},
    {0x145, 1, {0x6E, 0x0, 0x0}},
    {0x146, 1, {0x6E, 0x0, 0x0}},
    {0x147, 1, {0x6E, 0x0, 0x0}},
    {0x148, 1, {0x6E, 0x0, 0x0}},
    {0x14A, 1, {0x14B, 0x0, 0x0}},
    {0x14C, 1, {0x6F, 0x0, 0x0}},
    {0x14D, 1, {0x6F, 0x0, 0x0}},
    {0x14E, 1, {0x6F, 0x0, 0x0}},
    {0x14F, 1, {0x6F, 0x0, 0x0}},
    {0x150, 1, {0x6F, 0x0, 0x0}},
    {0x151, 1, {0x6F, 0x0, 0x0}},
    {0x152, 1, {0x153, 0x0, 0x0}},
    {0x154, 1, {0x72, 0x0, 0x0}},
    {0x155, 1, {0x72, 0x0, 0x0}},
    {0x156, 1, {0x72, 0x0, 0x0}},
    {0x157, 1, {0x72, 0x0, 0x0}},
    {0x158, 1, {0x72, 0x0, 0x0}},
    {0x159, 1, {0x72, 0x0, 0x0}},
    {0x15A, 1, {0x73, 0x0, 0x0}},
    {0x15B, 1, {0x73, 0x0, 0x0}},
    {0x15C, 1, {0x73, 0x0, 0x0}},
    {0x15D, 1, {0x73, 0x0, 0x0}},
    {0x15E, 1, {0x73, 0x0, 0x0}},
    {0x15F, 1, {0x73, 0x0, 0x0}},
    {0x160, 1, {0x73, 0x0, 0x0}},
    {0x161, 1, {0x73, 0x0, 0x0}},
    {0x162, 1, {0x74, 0x0, 0x0}},
    {0x163, 1, {0x74, 0x0, 0x0}},
    {0x164, 1, {0x74, 0x0, 0x0}},
    {0x165, 1, {0x74, 0x0, 0x0}},
    {0x166, 1, {0x167, 0x0, 0x0}},
    {0x168, 1, {0x75, 0x0, 0x0}},
    {0x169, 1, {0x75, 0x0, 0x0}},
    {0x16A, 1, {0x75, 0x0, 0x0}},
    {0x16B, 1, {0x75, 0x0, 0x0}},
    {0x16C, 1, {0x75, 0x0, 0x0}},
    {0x16D, 1, {0x75, 0x0, 0x0}},
    {0x16E, 1, {0x75, 0x0, 0x0}},
    {0x16F, 1, {0x75, 0x0, 0x0}},
    {0x170, 1, {0x75, 0x0, 0x0}},
    {0x171, 1, {0x75, 0x0, 0x0}},
    {0x172, 1, {0x75, 0x0, 0x0}},
    {0x173, 1, {0x75, 0x0, 0x0}},
    {0x174, 1, {0x77, 0x0, 0x0}},
    {0x175, 1, {0x77, 0x0, 0x0}},
    {0x176, 1, {0x79, 0x0, 0x0}},
    {0x177, 1, {0x79, 0x0, 0x0}},
    {0x178, 1, {0x79, 0x0, 0x0}},
    {0x179, 1, {0x7A, 0x0, 0x0}},
    {0x17A, 1, {0x7A, 0x0, 0x0}},
    {0x17B, 1, {0x7A, 0x0, 0x0}},
    {0x17C, 1, {0x7A, 0x0, 0x0}},
    {0x17D, 1, {0x7A, 0x0, 0x0}},
    {0x17E, 1, {0x7A, 0x0, 0x0}},
    {0x181, 1, {0x253, 0x0, 0x0}},
    {0x182, 1, {0x183, 0x0, 0x0}},
    {0x184, 1, {0x185, 0x0, 0x0}},
    {0x186, 1, {0x254, 0x0, 0x0}},
    {0x187, 1, {0x188, 0x0, 0x0}},
    {0x189, 1, {0x256, 0x0, 0x0}},
    {0x18A, 1, {0x257, 0x0, 0x0}},
    {0x18B, 1, {0x18C, 0x0, 0x0}},
    {0x18E, 1, {0x1DD, 0x0, 0x0}},
    {0x18F, 1, {0x259, 0x0, 0x0}},
    {0x190, 1, {0x25B, 0x0, 0x0}},
    {0x191, 1, {0x192, 0x0, 0x0}},
    {0x193, 1, {0x260, 0x0, 0x0}},
    {0x194, 1, {0x263, 0x0, 0x0}},
    {0x196, 1, {0x269, 0x0, 0x0}},
    {0x197, 1, {0x268, 0x0, 0x0}},
    {0x198, 1, {0x199, 0x0, 0x0}},
    {0x19C, 1, {0x26F, 0x0, 0x0}},
    {0x19D, 1, {0x272, 0x0, 0x0}},
    {0x19F, 1, {0x275, 0x0, 0x0}},
    {0x1A0, 1, {0x6F, 0x0, 0x0}},
    {0x1A1, 1, {0x6F, 0x0, 0x0}},
    {0x1A2, 1, {0x1A3, 0x0, 0x0}},
    {0x1A4, 1, {0x1A5, 0x0, 0x0}},
    {0x1A6, 1, {0x280, 0x0, 0x0}},
    {0x1A7, 1, {0x1A8, 0x0, 0x0}},
    {0x1A9, 1, {0x283, 0x0, 0x0}},
    {0x1AC, 1, {0x1AD, 0x0, 0x0}},
    {0x1AE, 1, {0x288, 0x0, 0x0}},
    {0x1AF, 1, {0x75, 0x0, 0x0}},
    {0x1B0, 1, {0x75, 0x0, 0x0}},
    {0x1B1, 1, {0x28A, 0x0, 0x0}},
    {0x1B2, 1, {0x28B, 0x0, 0x0}},
    {0x1B3, 1, {0x1B4, 0x0, 0x0}},
    {0x1B5, 1, {0x1B6, 0x0, 0x0}},
    {0x1B7, 1, {0x292, 0x0, 0x0}},
    {0x1B8, 1, {0x1B9, 0x0, 0x0}},
    {0x1BC, 1, {0x1BD, 0x0, 0x0}},
    {0x1C4, 1, {0x1C6, 0x0, 0x0}},
    {0x1C5, 1, {0x1C6, 0x0, 0x0}},
    {0x1C7, 1, {0x1C9, 0x0, 0x0}},
    {0x1C8, 1, {0x1C9, 0x0, 0x0}},
    {0x1CA, 1, {0x1CC, 0x0, 0x0}},
    {0x1CB, 1, {0x1CC, 0x0, 0x0}},
    {0x1CD, 1, {0x61, 0x0, 0x0}},
    {0x1CE, 1, {0x61, 0x0, 0x0}},
    {0x1CF, 1, {0x69, 0x0, 0x0}},
    {0x1D0, 1, {0x69, 0x0, 0x0}},
    {0x1D1, 1, {0x6F, 0x0, 0x0}},
    {0x1D2, 1, {0x6F, 0x0, 0x0}},
    {0x1D3, 1, {0x75, 0x0, 0x0}},
    {0x1D4, 1, {0x75, 0x0, 0x0}},
    {0x1D5, 1, {0x75, 0x0, 0x0}},
    {0x1D6, 1, {0x75, 0x0, 0x0}},
    {0x1D7, 1, {0x75, 0x0, 0x0}},
    {0x1D8, 1, {0x75, 0x0, 0x0}},
    {0x1D9, 1, {0x75, 0x0, 0x0}},
    {0x1DA, 1, {0x75, 0x0, 0x0}},
    {0x1DB, 1, {0x75, 0x0, 0x0}},
    {0x1DC, 1, {0x75, 0x0, 0x0}},
    {0x1DE, 1, {0x61, 0x0, 0x0}},
    {0x1DF, 1, {0x61, 0x0, 0x0}},
    {0x1E0, 1, {0x61, 0x0, 0x0}},
    {0x1E1, 1, {0x61, 0x0, 0x0}},
    {0x1E2, 1, {0xE6, 0x0, 0x0}},
    {0x1E3, 1, {0xE6, 0x0, 0x0}},
    {0x1E4, 1, {0x1E5, 0x0, 0x0}},
    {0x1E6, 1, {0x67, 0x0, 0x0}},
    {0x1E7, 1, {0x67, 0x0, 0x0}},
    {0x1E8, 1, {0x6B, 0x0, 0x0}},
    {0x1E9, 1, {0x6B, 0x0, 0x0}},
    {0x1EA, 1, {0x6F, 0x0, 0x0}},
    {0x1EB, 1, {0x6F, 0x0, 0x0}},
    {0x1EC, 1, {0x6F, 0x0, 0x0}},
    {0x1ED, 1, {0x6F, 0x0, 0x0}},
    {0x1EE, 1, {0x292, 0x0, 0x0}},
    {0x1EF, 1, {0x292, 0x0, 0x0}},
    {0x1F0, 1, {0x6A, 0x0, 0x0}},
    {0x1F1, 1, {0x1F3, 0x0, 0x0}},
    {0x1F2, 1, {0x1F3, 0x0, 0x0}},
    {0x1F4, 1, {0x67, 0x0, 0x0}},
    {0x1F5, 1, {0x67, 0x0, 0x0}},
    {0x1F6, 1, {0x195, 0x0, 0x0}},
    {0x1F7, 1, {0x1BF, 0x0, 0x0}},
    {0x1F8, 1, {0x6E, 0x0, 0x0}},
    {0x1F9, 1, {0x6E, 0x0, 0x0}},
    {0x1FA, 1, {0x61, 0x0, 0x0}},
    {0x1FB, 1, {0x61, 0x0, 0x0}},
    {0x1FC, 1, {0xE6, 0x0, 0x0}},
    {0x1FD, 1, {0xE6, 0x0, 0x0}},
    {0x1FE, 1, {0xF8, 0x0, 0x0}},
    {0x1FF, 1, {0xF8, 0x0, 0x0}},
    {0x200, 1, {0x61, 0x0, 0x0}},
    {0x201, 1, {0x61, 0x0, 0x0}},
    {0x202, 1, {0x61, 0x0, 0x0}},
    {0x203, 1, {0x61, 0x0, 0x0}},
    {0x204, 1, {0x65, 0x0, 0x0}},
    {0x205, 1, {0x65, 0x0, 0x0}},
    {0x206, 1, {0x65, 0x0, 0x0}},
    {0x207, 1, {0x65, 0x0, 0x0}},
    {0x208, 1, {0x69, 0x0, 0x0}},
    {0x209, 1, {0x69, 0x0, 0x0}},
    {0x20A, 1, {0x69, 0x0, 0x0}},
    {0x20B, 1, {0x69, 0x0, 0x0}},
    {0x20C, 1, {0x6F, 0x0, 0x0}},
    {0x20D, 1, {0x6F, 0x0, 0x0}},
    {0x20E, 1, {0x6F, 0x0, 0x0}},
    {0x20F, 1, {0x6F, 0x0, 0x0}},
    {0x210, 1, {0x72, 0x0, 0x0}},
    {0x211, 1, {0x72, 0x0, 0x0}},
    {0x212, 1, {0x72, 0x0, 0x0}},
    {0x213, 1, {0x72, 0x0, 0x0}},
    {0x214, 1, {0x75, 0x0, 0x0}},
    {0x215, 1, {0x75, 0x0, 0x0}},
    {0x216, 1, {0x75, 0x0, 0x0}},
    {0x217, 1, {0x75, 0x0, 0x0}},
    {0x218, 1, {0x73, 0x0, 0x0}},
    {0x219, 1, {0x73, 0x0, 0x0}},
    {0x21A, 1, {0x74, 0x0, 0x0}},
    {0x21B, 1, {0x74, 0x0, 0x0}},
    {0x21C, 1, {0x21D, 0x0, 0x0}},
    {0x21E, 1, {0x68, 0x0, 0x0}},
    {0x21F, 1, {0x68, 0x0, 0x0}},
    {0x220, 1, {0x19E, 0x0, 0x0}},
    {0x222, 1, {0x223, 0x0, 0x0}},
    {0x224, 1, {0x225, 0x0, 0x0}},
    {0x226, 1, {0x61, 0x0, 0x0}},
    {0x227, 1, {0x61, 0x0, 0x0}},
    {0x228, 1, {0x65, 0x0, 0x0}},
    {0x229, 1, {0x65, 0x0, 0x0}},
    {0x22A, 1, {0x6F, 0x0, 0x0}},
    {0x22B, 1, {0x6F, 0x0, 0x0}},
    {0x22C, 1, {0x6F, 0x0, 0x0}},
    {0x22D, 1, {0x6F, 0x0, 0x0}},
    {0x22E, 1, {0x6F, 0x0, 0x0}},
    {0x22F, 1, {0x6F, 0x0, 0x0}},
    {0x230, 1, {0x6F, 0x0, 0x0}},
    {0x231, 1, {0x6F, 0x0, 0x0}},
    {0x232, 1, {0x79, 0x0, 0x0}},
    {0x233, 1, {0x79, 0x0, 0x0}},
    {0x23A, 1, {0x2C65, 0x0, 0x0}},
    {0x23B, 1, {0x23C, 0x0, 0x0}},
    {0x23D, 1, {0x19A, 0x0, 0x0}},
    {0x23E, 1, {0x2C66, 0x0, 0x0}},
    {0x241, 1, {0x242, 0x0, 0x0}},
    {0x243, 1, {0x180, 0x0, 0x0}},
    {0x244, 1, {0x289, 0x0, 0x0}},
    {0x245, 1, {0x28C, 0x0, 0x0}},
    {0x246, 1, {0x247, 0x0, 0x0}},
    {0x248, 1, {0x249, 0x0, 0x0}},
    {0x24A, 1, {0x24B, 0x0, 0x0}},
    {0x24C, 1, {0x24D, 0x0, 0x0}},
    {0x24E, 1, {0x24F, 0x0, 0x0}},
    {0x370, 1, {0x371, 0x0, 0x0}},
    {0x372, 1, {0x373, 0x0, 0x0}},
    {0x374, 1, {0x2B9, 0x0, 0x0}},
    {0x376, 1, {0x377, 0x0, 0x0}},
    {0x37E, 1, {0x3B, 0x0, 0x0}},
    {0x37F, 1, {0x3F3, 0x0, 0x0}},
    {0x385, 1, {0xA8, 0x0, 0x0}},
    {0x386, 1, {0x3B1, 0x0, 0x0}},
    {0x387, 1, {0xB7, 0x0, 0x0}},
    {0x388, 1, {0x3B5, 0x0, 0x0}},
    {0x389, 1, {0x3B7, 0x0, 0x0}},
    {0x38A, 1, {0x3B9, 0x0, 0x0}},
    {0x38C, 1, {0x3BF, 0x0, 0x0}},
    {0x38E, 1, {0x3C5, 0x0, 0x0}},
    {0x38F, 1, {0x3C9, 0x0, 0x0}},
    {0x390, 1, {0x3B9, 0x0, 0x0}},
    {0x391, 1, {0x3B1, 0x0, 0x0}},
    {0x392, 1, {0x3B2, 0x0, 0x0}},
    {0x393, 1, {0x3B3, 0x0, 0x0}},
    {0x394, 1, {0x3B4, 0x0, 0x0}},
    {0x395, 1, {0x3B5, 0x0, 0x0}},
    {0x396, 1, {0x3B6, 0x0, 0x0}},
    {0x397, 1, {0x3B7, 0x0, 0x0}},
    {0x398, 1, {0x3B8, 0x0, 0x0}},
    {0x399, 1, {0x3B9, 0x0, 0x0}},
    {0x39A, 1, {0x3BA, 0x0, 0x0}},
    {0x39B, 1, {0x3BB, 0x0, 0x0}},
    {0x39C, 1, {0x3BC, 0x0, 0x0}},
    {0x39D, 1, {0x3BD, 0x0, 0x0}},
    {0x39E, 1, {0x3BE, 0x0, 0x0}},
    {0x39F, 1, {0x3BF, 0x0, 0x0}},
    {0x3A0, 1, {0x3C0, 0x0, 0x0}},
    {0x3A1, 1, {0x3C1, 0x0, 0x0}},
    {0x3A3, 1, {0x3C3, 0x0, 0x0}},
    {0x3A4, 1, {0x3C4, 0x0, 0x0}},
    {0x3A5, 1, {0x3C5, 0x0, 0x0}},
    {0x3A6, 1, {0x3C6, 0x0, 0x0}},
    {0x3A7, 1, {0x3C7, 0x0, 0x0}},
    {0x3A8, 1, {0x3C8, 0x0, 0x0}},
    {0x3A9, 1, {0x3C9, 0x0, 0x0}},
    {0x3AA, 1, {0x3B9, 0x0, 0x0}},
    {0x3AB, 1, {0x3C5, 0x0, 0x0}},
    {0x3AC, 1, {0x3B1, 0x0, 0x0}},
    {0x3AD, 1, {0x3B5, 0x0, 0x0}},
    {0x3AE, 1, {0x3B7, 0x0, 0x0}},
    {0x3AF, 1, {0x3B9, 0x0, 0x0}},
    {0x3B0, 1, {0x3C5, 0x0, 0x0}},
    {0x3CA, 1, {0x3B9, 0x0, 0x0}},
    {0x3CB, 1, {0x3C5, 0x0, 0x0}},
    {0x3CC, 1, {0x3BF, 0x0, 0x0}},
    {0x3CD, 1, {0x3C5, 0x0, 0x0}},
    {0x3CE, 1, {0x3C9, 0x0, 0x0}},
    {0x3CF, 1, {0x3D7, 0x0, 0x0}},
    {0x3D3, 1, {0x3D2, 0x0, 0x0}},
    {0x3D4, 1, {0x3D2, 0x0, 0x0}},
    {0x3D8, 1, {0x3D9, 0x0, 0x0}},
    {0x3DA, 1, {0x3DB, 0x0, 0x0}},
    {0x3DC, 1, {0x3DD, 0x0, 0x0}},
    {0x3DE, 1, {0x3DF, 0x0, 0x0}},
    {0x3E0, 1, {0x3E1, 0x0, 0x0}},
    {0x3E2, 1, {0x3E3, 0x0, 0x0}},
    {0x3E4, 1, {0x3E5, 0x0, 0x0}},
    {0x3E6, 1, {0x3E7, 0x0, 0x0}},
    {0x3E8, 1, {0x3E9, 0x0, 0x0}},
    {0x3EA, 1, {0x3EB, 0x0, 0x0}},
    {0x3EC, 1, {0x3ED, 0x0, 0x0}},
    {0x3EE, 1, {0x3EF, 0x0, 0x0}},
    {0x3F4, 1, {0x3B8, 0x0, 0x0}},
    {0x3F7, 1, {0x3F8, 0x0, 0x0}},
    {0x3F9, 1, {0x3F2, 0x0, 0x0}},
    {0x3FA, 1, {0x3FB, 0x0, 0x0}},
    {0x3FD, 1, {0x37B, 0x0, 0x0}},
    {0x3FE, 1, {0x37C, 0x0, 0x0}},
    {0x3FF, 1, {0x37D, 0x0, 0x0}},
    {0x400, 1, {0x435, 0x0, 0x0}},
    {0x401, 1, {0x435, 0x0, 0x0}},
    {0x402, 1, {0x452, 0x0, 0x0}},
    {0x403, 1, {0x433, 0x0, 0x0}},
    {0x404, 1, {0x454, 0x0, 0x0}},
    {0x405, 1, {0x455, 0x0, 0x0}},
    {0x406, 1, {0x456, 0x0, 0x0}},
    {0x407, 1, {0x456, 0x0, 0x0}},
    {0x408, 1, {0x458, 0x0, 0x0}},
    {0x409, 1, {0x459, 0x0, 0x0}},
    {0x40A, 1, {0x45A, 0x0, 0x0}},
    {0x40B, 1, {0x45B, 0x0, 0x0}},
    {0x40C, 1, {0x43A, 0x0, 0x0}},
    {0x40D, 1, {0x438, 0x0, 0x0}},
    {0x40E, 1, {0x443, 0x0, 0x0}},
    {0x40F, 1, {0x45F, 0x0, 0x0}},
    {0x410, 1, {0x430, 0x0, 0x0}},
    {0x411, 1, {0x431, 0x0, 0x0}},
    {0x412, 1, {0x432, 0x0, 0x0}},
    {0x413, 1, {0x433, 0x0, 0x0}},
    {0x414, 1, {0x434, 0x0, 0x0}},
    {0x415, 1, {0x435, 0x0, 0x0}},
    {0x416, 1, {0x436, 0x0, 0x0}},
    {0x417, 1, {0x437, 0x0, 0x0}},
    {0x418, 1, {0x438, 0x0, 0x0}},
    {0x419, 1, {0x438, 0x0, 0x0}},
    {0x41A, 1, {0x43A, 0x0, 0x0}},
    {0x41B, 1, {0x43B, 0x0, 0x0}},
    {0x41C, 1, {0x43C, 0x0, 0x0}},
    {0x41D, 1, {0x43D, 0x0, 0x0}},
    {0x41E, 1, {0x43E, 0x0, 0x0}},
    {0x41F, 1, {0x43F, 0x0, 0x0}},
    {0x420, 1, {0x440, 0x0, 0x0}},
    {0x421, 1, {0x441, 0x0, 0x0}},
    {0x422, 1, {0x442, 0x0, 0x0}},
    {0x423, 1, {0x443, 0x0, 0x0}},
    {0x424, 1, {0x444, 0x0, 0x0}},
    {0x425, 1, {0x445, 0x0, 0x0}},
    {0x426, 1, {0x446, 0x0, 0x0}},
    {0x427, 1, {0x447, 0x0, 0x0}},
    {0x428, 1, {0x448, 0x0, 0x0}},
    {0x429, 1, {0x449, 0x0, 0x0}},
    {0x42A, 1, {0x44A, 0x0, 0x0}},
    {0x42B, 1, {0x44B, 0x0, 0x0}},
    {0x42C, 1, {0x44C, 0x0, 0x0}},
    {0x42D, 1, {0x44D, 0x0, 0x0}},
    {0x42E, 1, {0x44E, 0x0, 0x0}},
    {0x42F, 1, {0x44F, 0x0, 0x0}},
    {0x439, 1, {0x438, 0x0, 0x0}},
    {0x450, 1, {0x435, 0x0, 0x0}},
    {0x451, 1, {0x435, 0x0, 0x0}},
    {0x453, 1, {0x433, 0x0, 0x0}},
    {0x457, 1, {0x456, 0x0, 0x0}},
    {0x45C, 1, {0x43A, 0x0, 0x0}},
    {0x45D, 1, {0x438, 0x0, 0x0}},
    {0x45E, 1, {0x443, 0x0, 0x0}},
    {0x460, 1, {0x461, 0x0, 0x0}},
    {0x462, 1, {0x463, 0x0, 0x0}},
    {0x464, 1, {0x465, 0x0, 0x0}},
    {0x466, 1, {0x467, 0x0, 0x0}},
    {0x468, 1, {0x469, 0x0, 0x0}},
    {0x46A, 1, {0x46B, 0x0, 0x0}},
    {0x46C, 1, {0x46D, 0x0, 0x0}},
    {0x46E, 1, {0x46F, 0x0, 0x0}},
    {0x470, 1, {0x471, 0x0, 0x0}},
    {0x472, 1, {0x473, 0x0, 0x0}},
    {0x474, 1, {0x475, 0x0, 0x0}},
    {0x476, 1, {0x475, 0x0, 0x0}},
    {0x477, 1, {0x475, 0x0, 0x0}},
    {0x478, 1, {0x479, 0x0, 0x0}},
    {0x47A, 1, {0x47B, 0x0, 0x0}},
    {0x47C, 1, {0x47D, 0x0, 0x0}},
    {0x47E, 1, {0x47F, 0x0, 0x0}},
    {0x480, 1, {0x481, 0x0, 0x0}},
    {0x48A, 1, {0x48B, 0x0, 0x0}},
    {0x48C, 1, {0x48D, 0x0, 0x0}},
    {0x48E, 1, {0x48F, 0x0, 0x0}},
    {0x490, 1, {0x491, 0x0, 0x0}},
    {0x492, 1, {0x493, 0x0, 0x0}},
    {0x494, 1, {0x495, 0x0, 0x0}},
    {0x496, 1, {0x497, 0x0, 0x0}},
    {0x498, 1, {0x499, 0x0, 0x0}},
    {0x49A, 1, {0x49B, 0x0, 0x0}},
    {0x49C, 1, {0x49D, 0x0, 0x0}},
    {0x49E, 1, {0x49F, 0x0, 0x0}},
    {0x4A0, 1, {0x4A1, 0x0, 0x0}},
    {0x4A2, 1, {0x4A3, 0x0, 0x0}},
    {0x4A4, 1, {0x4A5, 0x0, 0x0}},
    {0x4A6, 1, {0x4A7, 0x0, 0x0}},
    {0x4A8, 1, {0x4A9, 0x0, 0x0}},
    {0x4AA, 1, {0x4AB, 0x0, 0x0}},
    {0x4AC, 1, {0x4AD, 0x0, 0x0}},
    {0x4AE, 1, {0x4AF, 0x0, 0x0}},
    {0x4B0, 1, {0x4B1, 0x0, 0x0}},
    {0x4B2, 1, {0x4B3, 0x0, 0x0}},
    {0x4B4, 1, {0x4B5, 0x0, 0x0}},
    {0x4B6, 1, {0x4B7, 0x0, 0x0}},
    {0x4B8, 1, {0x4B9, 0x0, 0x0}},
    {0x4BA, 1, {0x4BB, 0x0, 0x0}},
    {0x4BC, 1, {0x4BD, 0x0, 0x0}},
    {0x4BE, 1, {0x4BF, 0x0, 0x0}},
    {0x4C0, 1, {0x4CF, 0x0, 0x0}},
    {0x4C1, 1, {0x436, 0x0, 0x0}},
    {0x4C2, 1, {0x436, 0x0, 0x0}},
    {0x4C3, 1, {0x4C4, 0x0, 0x0}},
    {0x4C5, 1, {0x4C6, 0x0, 0x0}},
    {0x4C7, 1, {0x4C8, 0x0, 0x0}},
    {0x4C9, 1, {0x4CA, 0x0, 0x0}},
    {0x4CB, 1, {0x4CC, 0x0, 0x0}},
    {0x4CD, 1, {0x4CE, 0x0, 0x0}},
    {0x4D0, 1, {0x430, 0x0, 0x0}},
    {0x4D1, 1, {0x430, 0x0, 0x0}},
    {0x4D2, 1, {0x430, 0x0, 0x0}},
    {0x4D3, 1, {0x430, 0x0, 0x0}},
    {0x4D4, 1, {0x4D5, 0x0, 0x0}},
    {0x4D6, 1, {0x435, 0x0, 0x0}},
    {0x4D7, 1, {0x435, 0x0, 0x0}},
    {0x4D8, 1, {0x4D9, 0x0, 0x0}},
    {0x4DA, 1, {0x4D9, 0x0, 0x0}},
    {0x4DB, 1, {0x4D9, 0x0, 0x0}},
    {0x4DC, 1, {0x436, 0x0, 0x0}},
    {0x4DD, 1, {0x436, 0x0, 0x0}},
    {0x4DE, 1, {0x437, 0x0, 0x0}},
    {0x4DF, 1, {0x437, 0x0, 0x0}},
    {0x4E0, 1, {0x4E1, 0x0, 0x0}},
    {0x4E2, 1, {0x438, 0x0, 0x0}},
    {0x4E3, 1, {0x438, 0x0, 0x0}},
    {0x4E4, 1, {0x438, 0x0, 0x0}},
    {0x4E5, 1, {0x438, 0x0, 0x0}},
    {0x4E6, 1, {0x43E, 0x0, 0x0}},
    {0x4E7, 1, {0x43E, 0x0, 0x0}},
    {0x4E8, 1, {0x4E9, 0x0, 0x0}},
    {0x4EA, 1, {0x4E9, 0x0, 0x0}},
    {0x4EB, 1, {0x4E9, 0x0, 0x0}},
    {0x4EC, 1, {0x44D, 0x0, 0x0}},
    {0x4ED, 1, {0x44D, 0x0, 0x0}},
    {0x4EE, 1, {0x443, 0x0, 0x0}},
    {0x4EF, 1, {0x443, 0x0, 0x0}},
    {0x4F0, 1, {0x443, 0x0, 0x0}},
    {0x4F1, 1, {0x443, 0x0, 0x0}},
    {0x4F2, 1, {0x443, 0x0, 0x0}},
    {0x4F3, 1, {0x443, 0x0, 0x0}},
    {0x4F4, 1, {0x447, 0x0, 0x0}},
    {0x4F5, 1, {0x447, 0x0, 0x0}},
    {0x4F6, 1, {0x4F7, 0x0, 0x0}},
    {0x4F8, 1, {0x44B, 0x0, 0x0}},
    {0x4F9, 1, {0x44B, 0x0, 0x0}},
    {0x4FA, 1, {0x4FB, 0x0, 0x0}},
    {0x4FC, 1, {0x4FD, 0x0, 0x0}},
    {0x4FE, 1, {0x4FF, 0x0, 0x0}},
    {0x500, 1, {0x501, 0x0, 0x0}},
    {0x502, 1, {0x503, 0x0, 0x0}},
    {0x504, 1, {0x505, 0x0, 0x0}},
    {0x506, 1, {0x507, 0x0, 0x0}},
    {0x508, 1, {0x509, 0x0, 0x0}},
    {0x50A, 1, {0x50B, 0x0, 0x0}},
    {0x50C, 1, {0x50D, 0x0, 0x0}},
    {0x50E, 1, {0x50F, 0x0, 0x0}},
    {0x510, 1, {0x511, 0x0, 0x0}},
    {0x512, 1, {0x513, 0x0, 0x0}},
    {0x514, 1, {0x515, 0x0, 0x0}},
    {0x516, 1, {0x517, 0x0, 0x0}},
    {0x518, 1, {0x519, 0x0, 0x0}},
    {0x51A, 1, {0x51B, 0x0, 0x0}},
    {0x51C, 1, {0x51D, 0x0, 0x0}},
    {0x51E, 1, {0x51F, 0x0, 0x0}},
    {0x520, 1, {0x521, 0x0, 0x0}},
    {0x522, 1, {0x523, 0x0, 0x0}},
    {0x524, 1, {0x525, 0x0, 0x0}},
    {0x526, 1, {0x527, 0x0, 0x0}},
    {0x528, 1, {0x529, 0x0, 0x0}},
    {0x52A, 1, {0x52B, 0x0, 0x0}},
    {0x52C, 1, {0x52D, 0x0, 0x0}},
    {0x52E, 1, {0x52F, 0x0, 0x0}},
    {0x531, 1, {0x561, 0x0, 0x0}},
    {0x532, 1, {0x562, 0x0, 0x0}},
    {0x533, 1, {0x563, 0x0, 0x0}},
    {0x534, 1, {0x564, 0x0, 0x0}},
    {0x535, 1, {0x565, 0x0, 0x0}},
    {0x536, 1, {0x566, 0x0, 0x0}},
    {0x537, 1, {0x567, 0x0, 0x0}},
    {0x538, 1, {0x568, 0x0, 0x0}},
    {0x539, 1, {0x569, 0x0, 0x0}},
    {0x53A, 1, {0x56A, 0x0, 0x0}},
    {0x53B, 1, {0x56B, 0x0, 0x0}},
    {0x53C, 1, {0x56C, 0x0, 0x0}},
    {0x53D, 1, {0x56D, 0x0, 0x0}},
    {0x53E, 1, {0x56E, 0x0, 0x0}},
    {0x53F, 1, {0x56F, 0x0, 0x0}},
    {0x540, 1, {0x570, 0x0, 0x0}},
    {0x541, 1, {0x571, 0x0, 0x0}},
    {0x542, 1, {0x572, 0x0, 0x0}},
    {0x543, 1, {0x573, 0x0, 0x0}},
    {0x544, 1, {0x574, 0x0, 0x0}},
    {0x545, 1, {0x575, 0x0, 0x0}},
    {0x546, 1, {0x576, 0x0, 0x0}},
    {0x547, 1, {0x577, 0x0, 0x0}},
    {0x548, 1, {0x578, 0x0, 0x0}},
    {0x549, 1, {0x579, 0x0, 0x0}},
    {0x54A, 1, {0x57A, 0x0, 0x0}},
    {0x54B, 1, {0x57B, 0x0, 0x0}},
    {0x54C, 1, {0x57C, 0x0, 0x0}},
    {0x54D, 1, {0x57D, 0x0, 0x0}},
    {0x54E, 1, {0x57E, 0x0, 0x0}},
    {0x54F, 1, {0x57F, 0x0, 0x0}},
    {0x550, 1, {0x580, 0x0, 0x0}},
    {0x551, 1, {0x581, 0x0, 0x0}},
    {0x552, 1, {0x582, 0x0, 0x0}},
    {0x553, 1, {0x583, 0x0, 0x0}},
    {0x554, 1, {0x584, 0x0, 0x0}},
    {0x555, 1, {0x585, 0x0, 0x0}},
    {0x556, 1, {0x586, 0x0, 0x0}},
    {0x622, 1, {0x627, 0x0, 0x0}},
    {0x623, 1, {0x627, 0x0, 0x0}},
    {0x624, 1, {0x648, 0x0, 0x0}},
    {0x625, 1, {0x627, 0x0, 0x0}},
    {0x626, 1, {0x64A, 0x0, 0x0}},
    {0x6C0, 1, {0x6D5, 0x0, 0x0}},
    {0x6C2, 1, {0x6C1, 0x0, 0x0}},
    {0x6D3, 1, {0x6D2, 0x0, 0x0}},
    {0x929, 1, {0x928, 0x0, 0x0}},
    {0x931, 1, {0x930, 0x0, 0x0}},
    {0x934, 1, {0x933, 0x0, 0x0}},
    {0x958, 1, {0x915, 0x0, 0x0}},
    {0x959, 1, {0x916, 0x0, 0x0}},
    {0x95A, 1, {0x917, 0x0, 0x0}},
    {0x95B, 1, {0x91C, 0x0, 0x0}},
    {0x95C, 1, {0x921, 0x0, 0x0}},
    {0x95D, 1, {0x922, 0x0, 0x0}},
    {0x95E, 1, {0x92B, 0x0, 0x0}},
    {0x95F, 1, {0x92F, 0x0, 0x0}},
    {0x9CB, 2, {0x9C7, 0x9BE, 0x0}},
    {0x9CC, 2, {0x9C7, 0x9D7, 0x0}},
    {0x9DC, 1, {0x9A1, 0x0, 0x0}},
    {0x9DD, 1, {0x9A2, 0x0, 0x0}},
    {0x9DF, 1, {0x9AF, 0x0, 0x0}},
    {0xA33, 1, {0xA32, 0x0, 0x0}},
    {0xA36, 1, {0xA38, 0x0, 0x0}},
    {0xA59, 1, {0xA16, 0x0, 0x0}},
    {0xA5A, 1, {0xA17, 0x0, 0x0}},
    {0xA5B, 1, {0xA1C, 0x0, 0x0}},
    {0xA5E, 1, {0xA2B, 0x0, 0x0}},
    {0xB48, 1, {0xB47, 0x0, 0x0}},
    {0xB4B, 2, {0xB47, 0xB3E, 0x0}},
    {0xB4C, 2, {0xB47, 0xB57, 0x0}},
    {0xB5C, 1, {0xB21, 0x0, 0x0}},
    {0xB5D, 1, {0xB22, 0x0, 0x0}},
    {0xB94, 2, {0xB92, 0xBD7, 0x0}},
    {0xBCA, 2, {0xBC6, 0xBBE, 0x0}},
    {0xBCB, 2, {0xBC7, 0xBBE, 0x0}},
    {0xBCC, 2, {0xBC6, 0xBD7, 0x0}},
    {0xCC0, 1, {0xCD5, 0x0, 0x0}},
    {0xCC7, 1, {0xCD5, 0x0, 0x0}},
    {0xCC8, 1, {0xCD6, 0x0, 0x0}},
    {0xCCA, 1, {0xCC2, 0x0, 0x0}},
    {0xCCB, 2, {0xCC2, 0xCD5, 0x0}},
    {0xD4A, 2, {0xD46, 0xD3E, 0x0}},
    {0xD4B, 2, {0xD47, 0xD3E, 0x0}},
    {0xD4C, 2, {0xD46, 0xD57, 0x0}},
    {0xDDA, 1, {0xDD9, 0x0, 0x0}},
    {0xDDC, 2, {0xDD9, 0xDCF, 0x0}},
    {0xDDD, 2, {0xDD9, 0xDCF, 0x0}},
    {0xDDE, 2, {0xDD9, 0xDDF, 0x0}},
    {0xF43, 1, {0xF42, 0x0, 0x0}},
    {0xF4D, 1, {0xF4C, 0x0, 0x0}},
    {0xF52, 1, {0xF51, 0x0, 0x0}},
    {0xF57, 1, {0xF56, 0x0, 0x0}},
    {0xF5C, 1, {0xF5B, 0x0, 0x0}},
    {0xF69, 1, {0xF40, 0x0, 0x0}},
    {0x1026, 1, {0x1025, 0x0, 0x0}},
    {0x10A0, 1, {0x2D00, 0x0, 0x0}},
    {0x10A1, 1, {0x2D01, 0x0, 0x0}},
    {0x10A2, 1, {0x2D02, 0x0, 0x0}},
    {0x10A3, 1, {0x2D03, 0x0, 0x0}},
    {0x10A4, 1, {0x2D04, 0x0, 0x0}},
    {0x10A5, 1, {0x2D05, 0x0, 0x0}},
    {0x10A6, 1, {0x2D06, 0x0, 0x0}},
    {0x10A7, 1, {0x2D07, 0x0, 0x0}},
    {0x10A8, 1, {0x2D08, 0x0, 0x0}},
    {0x10A9, 1, {0x2D09, 0x0, 0x0}},
    {0x10AA, 1, {0x2D0A, 0x0, 0x0}},
    {0x10AB, 1, {0x2D0B, 0x0, 0x0}},
    {0x10AC, 1, {0x2D0C, 0x0, 0x0}},
    {0x10AD, 1, {0x2D0D, 0x0, 0x0}},
    {0x10AE, 1, {0x2D0E, 0x0, 0x0}},
    {0x10AF, 1, {0x2D0F, 0x0, 0x0}},
    {0x10B0, 1, {0x2D10, 0x0, 0x0}},
    {0x10B1, 1, {0x2D11, 0x0, 0x0}},
    {0x10B2, 1, {0x2D12, 0x0, 0x0}},
    {0x10B3, 1, {0x2D13, 0x0, 0x0}},
    {0x10B4, 1, {0x2D14, 0x0, 0x0}},
    {0x10B5, 1, {0x2D15, 0x0, 0x0}},
    {0x10B6, 1, {0x2D16, 0x0, 0x0}},
    {0x10B7, 1, {0x2D17, 0x0, 0x0}},
    {0x10B8, 1, {0x2D18, 0x0, 0x0}},
    {0x10B9, 1, {0x2D19, 0x0, 0x0}},
    {0x10BA, 1, {0x2D1A, 0x0, 0x0}},
    {0x10BB, 1, {0x2D1B, 0x0, 0x0}},
    {0x10BC, 1, {0x2D1C, 0x0, 0x0}},
    {0x10BD, 1, {0x2D1D, 0x0, 0x0}},
    {0x10BE, 1, {0x2D1E, 0x0, 0x0}},
    {0x10BF, 1, {0x2D1F, 0x0, 0x0}},
    {0x10C0, 1, {0x2D20, 0x0, 0x0}},
    {0x10C1, 1, {0x2D21, 0x0, 0x0}},
    {0x10C2, 1, {0x2D22, 0x0, 0x0}},
    {0x10C3, 1, {0x2D23, 0x0, 0x0}},
    {0x10C4, 1, {0x2D24, 0x0, 0x0}},
    {0x10C5, 1, {0x2D25, 0x0, 0x0}},
    {0x10C7, 1, {0x2D27, 0x0, 0x0}},
    {0x10CD, 1, {0x2D2D, 0x0, 0x0}},
    {0x13A0, 1, {0xAB70, 0x0, 0x0}},
    {0x13A1, 1, {0xAB71, 0x0, 0x0}},
    {0x13A2, 1, {0xAB72, 0x0, 0x0}},
    {0x13A3, 1, {0xAB73, 0x0, 0x0}},
    {0x13A4, 1, {0xAB74, 0x0, 0x0}},
    {0x13A5, 1, {0xAB75, 0x0, 0x0}},
    {0x13A6, 1, {0xAB76, 0x0, 0x0}},
    {0x13A7, 1, {0xAB77, 0x0, 0x0}},
    {0x13A8, 1, {0xAB78, 0x0, 0x0}},
    {0x13A9, 1, {0xAB79, 0x0, 0x0}},
    {0x13AA, 1, {0xAB7A, 0x0, 0x0}},
    {0x13AB, 1, {0xAB7B, 0x0, 0x0}},
    {0x13AC, 1, {0xAB7C, 0x0, 0x0}},
    {0x13AD, 1, {0xAB7D, 0x0, 0x0}},
    {0x13AE, 1, {0xAB7E, 0x0, 0x0}},
    {0x13AF, 1, {0xAB7F, 0x0, 0x0}},
    {0x13B0, 1, {0xAB80, 0x0, 0x0}},
    {0x13B1, 1, {0xAB81, 0x0, 0x0}},
    {0x13B2, 1, {0xAB82, 0x0, 0x0}},
    {0x13B3, 1, {0xAB83, 0x0, 0x0}},
    {0x13B4, 1, {0xAB84, 0x0, 0x0}},
    {0x13B5, 1, {0xAB85, 0x0, 0x0}},
    {0x13B6, 1, {0xAB86, 0x0, 0x0}},
    {0x13B7, 1, {0xAB87, 0x0, 0x0}},
    {0x13B8, 1, {0xAB88, 0x0, 0x0}},
    {0x13B9, 1, {0xAB89, 0x0, 0x0}},
    {0x13BA, 1, {0xAB8A, 0x0, 0x0}},
    {0x13BB, 1, {0xAB8B, 0x0, 0x0}},
    {0x13BC, 1, {0xAB8C, 0x0, 0x0}},
    {0x13BD, 1, {0xAB8D, 0x0, 0x0}},
    {0x13BE, 1, {0xAB8E, 0x0, 0x0}},
    {0x13BF, 1, {0xAB8F, 0x0, 0x0}},
    {0x13C0, 1, {0xAB90, 0x0, 0x0}},
    {0x13C1, 1, {0xAB91, 0x0, 0x0}},
    {0x13C2, 1, {0xAB92, 0x0, 0x0}},
    {0x13C3, 1, {0xAB93, 0x0, 0x0}},
    {0x13C4, 1, {0xAB94, 0x0, 0x0}},
    {0x13C5, 1, {0xAB95, 0x0, 0x0}},
    {0x13C6, 1, {0xAB96, 0x0, 0x0}},
    {0x13C7, 1, {0xAB97, 0x0, 0x0}},
    {0x13C8, 1, {0xAB98, 0x0, 0x0}},
    {0x13C9, 1, {0xAB99, 0x0, 0x0}},
    {0x13CA, 1, {0xAB9A, 0x0, 0x0}},
    {0x13CB, 1, {0xAB9B, 0x0, 0x0}},
    {0x13CC, 1, {0xAB9C, 0x0, 0x0}},
    {0x13CD, 1, {0xAB9D, 0x0, 0x0}},
    {0x13CE, 1, {0xAB9E, 0x0, 0x0}},
    {0x13CF, 1, {0xAB9F, 0x0, 0x0}},
    {0x13D0, 1, {0xABA0, 0x0, 0x0}},
    {0x13D1, 1, {0xABA1, 0x0, 0x0}},
    {0x13D2, 1, {0xABA2, 0x0, 0x0}},
    {0x13D3, 1, {0xABA3, 0x0, 0x0}},
    {0x13D4, 1, {0xABA4, 0x0, 0x0}},
    {0x13D5, 1, {0xABA5, 0x0, 0x0}},
    {0x13D6, 1, {0xABA6, 0x0, 0x0}},
    {0x13D7, 1, {0xABA7, 0x0, 0x0}},
    {0x13D8, 1, {0xABA8, 0x0, 0x0}},
    {0x13D9, 1, {0xABA9, 0x0, 0x0}},
    {0x13DA, 1, {0xABAA, 0x0, 0x0}},
    {0x13DB, 1, {0xABAB, 0x0, 0x0}},
    {0x13DC, 1, {0xABAC, 0x0, 0x0}},
    {0x13DD, 1, {0xABAD, 0x0, 0x0}},
    {0x13DE, 1, {0xABAE, 0x0, 0x0}},
    {0x13DF, 1, {0xABAF, 0x0, 0x0}},
    {0x13E0, 1, {0xABB0, 0x0, 0x0}},
    {0x13E1, 1, {0xABB1, 0x0, 0x0}},
    {0x13E2, 1, {0xABB2, 0x0, 0x0}},
    {0x13E3, 1, {0xABB3, 0x0, 0x0}},
    {0x13E4, 1, {0xABB4, 0x0, 0x0}},
    {0x13E5, 1, {0xABB5, 0x0, 0x0}},
    {0x13E6, 1, {0xABB6, 0x0, 0x0}},
    {0x13E7, 1, {0xABB7, 0x0, 0x0}},
    {0x13E8, 1, {0xABB8, 0x0, 0x0}},
    {0x13E9, 1, {0xABB9, 0x0, 0x0}},
    {0x13EA, 1, {0xABBA, 0x0, 0x0}},
    {0x13EB, 1, {0xABBB, 0x0, 0x0}},
    {0x13EC, 1, {0xABBC, 0x0, 0x0}},
    {0x13ED, 1, {0xABBD, 0x0, 0x0}},
    {0x13EE, 1, {0xABBE, 0x0, 0x0}},
    {0x13EF, 1, {0xABBF, 0x0, 0x0}},
    {0x13F0, 1, {0x13F8, 0x0, 0x0}},
    {0x13F1, 1, {0x13F9, 0x0, 0x0}},
    {0x13F2, 1, {0x13FA, 0x0, 0x0}},
    {0x13F3, 1, {0x13FB, 0x0, 0x0}},
    {0x13F4, 1, {0x13FC, 0x0, 0x0}},
    {0x13F5, 1, {0x13FD, 0x0, 0x0}},
    {0x1B06, 2, {0x1B05, 0x1B35, 0x0}},
    {0x1B08, 2, {0x1B07, 0x1B35, 0x0}},
    {0x1B0A, 2, {0x1B09, 0x1B35, 0x0}},
    {0x1B0C, 2, {0x1B0B, 0x1B35, 0x0}},
    {0x1B0E, 2, {0x1B0D, 0x1B35, 0x0}},
    {0x1B12, 2, {0x1B11, 0x1B35, 0x0}},
    {0x1B3B, 1, {0x1B35, 0x0, 0x0}},
    {0x1B3D, 1, {0x1B35, 0x0, 0x0}},
    {0x1B40, 2, {0x1B3E, 0x1B35, 0x0}},
    {0x1B41, 2, {0x1B3F, 0x1B35, 0x0}},
    {0x1B43, 1, {0x1B35, 0x0, 0x0}},
    {0x1C90, 1, {0x10D0, 0x0, 0x0}},
    {0x1C91, 1, {0x10D1, 0x0, 0x0}},
    {0x1C92, 1, {0x10D2, 0x0, 0x0}},
    {0x1C93, 1, {0x10D3, 0x0, 0x0}},
    {0x1C94, 1, {0x10D4, 0x0, 0x0}},
    {0x1C95, 1, {0x10D5, 0x0, 0x0}},
    {0x1C96, 1, {0x10D6, 0x0, 0x0}},
    {0x1C97, 1, {0x10D7, 0x0, 0x0}},
    {0x1C98, 1, {0x10D8, 0x0, 0x0}},
    {0x1C99, 1, {0x10D9, 0x0, 0x0}},
    {0x1C9A, 1, {0x10DA, 0x0, 0x0}},
    {0x1C9B, 1, {0x10DB, 0x0, 0x0}},
    {0x1C9C, 1, {0x10DC, 0x0, 0x0}},
    {0x1C9D, 1, {0x10DD, 0x0, 0x0}},
    {0x1C9E, 1, {0x10DE, 0x0, 0x0}},
    {0x1C9F, 1, {0x10DF, 0x0, 0x0}},
    {0x1CA0, 1, {0x10E0, 0x0, 0x0}},
    {0x1CA1, 1, {0x10E1, 0x0, 0x0}},
    {0x1CA2, 1, {0x10E2, 0x0, 0x0}},
    {0x1CA3, 1, {0x10E3, 0x0, 0x0}},
    {0x1CA4, 1, {0x10E4, 0x0, 0x0}},
    {0x1CA5, 1, {0x10E5, 0x0, 0x0}},
    {0x1CA6, 1, {0x10E6, 0x0, 0x0}},
    {0x1CA7, 1, {0x10E7, 0x0, 0x0}},
    {0x1CA8, 1, {0x10E8, 0x0, 0x0}},
    {0x1CA9, 1, {0x10E9, 0x0, 0x0}},
    {0x1CAA, 1, {0x10EA, 0x0, 0x0}},
    {0x1CAB, 1, {0x10EB, 0x0, 0x0}},
    {0x1CAC, 1, {0x10EC, 0x0, 0x0}},
    {0x1CAD, 1, {0x10ED, 0x0, 0x0}},
    {0x1CAE, 1, {0x10EE, 0x0, 0x0}},
    {0x1CAF, 1, {0x10EF, 0x0, 0x0}},
    {0x1CB0, 1, {0x10F0, 0x0, 0x0}},
    {0x1CB1, 1, {0x10F1, 0x0, 0x0}},
    {0x1CB2, 1, {0x10F2, 0x0, 0x0}},
    {0x1CB3, 1, {0x10F3, 0x0, 0x0}},
    {0x1CB4, 1, {0x10F4, 0x0, 0x0}},
    {0x1CB5, 1, {0x10F5, 0x0, 0x0}},
    {0x1CB6, 1, {0x10F6, 0x0, 0x0}},
    {0x1CB7, 1, {0x10F7, 0x0, 0x0}},
    {0x1CB8, 1, {0x10F8, 0x0, 0x0}},
    {0x1CB9, 1, {0x10F9, 0x0, 0x0}},
    {0x1CBA, 1, {0x10FA, 0x0, 0x0}},
    {0x1CBD, 1, {0x10FD, 0x0, 0x0}},
    {0x1CBE, 1, {0x10FE, 0x0, 0x0}},
    {0x1CBF, 1, {0x10FF, 0x0, 0x0}},
    {0x1E00, 1, {0x61, 0x0, 0x0}},
    {0x1E01, 1, {0x61, 0x0, 0x0}},
    {0x1E02, 1, {0x62, 0x0, 0x0}},
    {0x1E03, 1, {0x62, 0x0, 0x0}},
    {0x1E04, 1, {0x62, 0x0, 0x0}},
    {0x1E05, 1, {0x62, 0x0, 0x0}},
    {0x1E06, 1, {0x62, 0x0, 0x0}},
    {0x1E07, 1, {0x62, 0x0, 0x0}},
    {0x1E08, 1, {0x63, 0x0, 0x0}},
    {0x1E09, 1, {0x63, 0x0, 0x0}},
    {0x1E0A, 1, {0x64, 0x0, 0x0}},
    {0x1E0B, 1, {0x64, 0x0, 0x0}},
    {0x1E0C, 1, {0x64, 0x0, 0x0}},
    {0x1E0D, 1, {0x64, 0x0, 0x0}},
    {0x1E0E, 1, {0x64, 0x0, 0x0}},
    {0x1E0F, 1, {0x64, 0x0, 0x0}},
    {0x1E10, 1, {0x64, 0x0, 0x0}},
    {0x1E11, 1, {0x64, 0x0, 0x0}},
    {0x1E12, 1, {0x64, 0x0, 0x0}},
    {0x1E13, 1, {0x64, 0x0, 0x0}},
    {0x1E14, 1, {0x65, 0x0, 0x0}},
    {0x1E15, 1, {0x65, 0x0, 0x0}},
    {0x1E16, 1, {0x65, 0x0, 0x0}},
    {0x1E17, 1, {0x65, 0x0, 0x0}},
    {0x1E18, 1, {0x65, 0x0, 0x0}},
    {0x1E19, 1, {0x65, 0x0, 0x0}},
    {0x1E1A, 1, {0x65, 0x0, 0x0}},
    {0x1E1B, 1, {0x65, 0x0, 0x0}},
    {0x1E1C, 1, {0x65, 0x0, 0x0}},
    {0x1E1D, 1, {0x65, 0x0, 0x0}},
    {0x1E1E, 1, {0x66, 0x0, 0x0}},
    {0x1E1F, 1, {0x66, 0x0, 0x0}},
    {0x1E20, 1, {0x67, 0x0, 0x0}},
    {0x1E21, 1, {0x67, 0x0, 0x0}},
    {0x1E22, 1, {0x68, 0x0, 0x0}},
    {0x1E23, 1, {0x68, 0x0, 0x0}},
    {0x1E24, 1, {0x68, 0x0, 0x0}},
    {0x1E25, 1, {0x68, 0x0, 0x0}},
    {0x1E26, 1, {0x68, 0x0, 0x0}},
    {0x1E27, 1, {0x68, 0x0, 0x0}},
    {0x1E28, 1, {0x68, 0x0, 0x0}},
    {0x1E29, 1, {0x68, 0x0, 0x0}},
    {0x1E2A, 1, {0x68, 0x0, 0x0}},
    {0x1E2B, 1, {0x68, 0x0, 0x0}},
    {0x1E2C, 1, {0x69, 0x0, 0x0}},
    {0x1E2D, 1, {0x69, 0x0, 0x0}},
    {0x1E2E, 1, {0x69, 0x0, 0x0}},
    {0x1E2F, 1, {0x69, 0x0, 0x0}},
    {0x1E30, 1, {0x6B, 0x0, 0x0}},
    {0x1E31, 1, {0x6B, 0x0, 0x0}},
    {0x1E32, 1, {0x6B, 0x0, 0x0}},
    {0x1E33, 1, {0x6B, 0x0, 0x0}},
    {0x1E34, 1, {0x6B, 0x0, 0x0}},
    {0x1E35, 1, {0x6B, 0x0, 0x0}},
    {0x1E36, 1, {0x6C, 0x0, 0x0}},
    {0x1E37, 1, {0x6C, 0x0, 0x0}},
    {0x1E38, 1, {0x6C, 0x0, 0x0}},
    {0x1E39, 1, {0x6C, 0x0, 0x0}},
    {0x1E3A, 1, {0x6C, 0x0, 0x0}},
    {0x1E3B, 1, {0x6C, 0x0, 0x0}},
    {0x1E3C, 1, {0x6C, 0x0, 0x0}},
    {0x1E3D, 1, {0x6C, 0x0, 0x0}},
    {0x1E3E, 1, {0x6D, 0x0, 0x0}},
    {0x1E3F, 1, {0x6D, 0x0, 0x0}},
    {0x1E40, 1, {0x6D, 0x0, 0x0}},
    {0x1E41, 1, {0x6D, 0x0, 0x0}},
    {0x1E42, 1, {0x6D, 0x0, 0x0}},
    {0x1E43, 1, {0x6D, 0x0, 0x0}},
    {0x1E44, 1, {0x6E, 0x0, 0x0}},
    {0x1E45, 1, {0x6E, 0x0, 0x0}},
    {0x1E46, 1, {0x6E, 0x0, 0x0}},
    {0x1E47, 1, {0x6E, 0x0, 0x0}},
    {0x1E48, 1, {0x6E, 0x0, 0x0}},
    {0x1E49, 1, {0x6E, 0x0, 0x0}},
    {0x1E4A, 1, {0x6E, 0x0, 0x0}},
    {0x1E4B, 1, {0x6E, 0x0, 0x0}},
    {0x1E4C, 1, {0x6F, 0x0, 0x0}},
    {0x1E4D, 1, {0x6F, 0x0, 0x0}},
    {0x1E4E, 1, {0x6F, 0x0, 0x0}},
    {0x1E4F, 1, {0x6F, 0x0, 0x0}},
    {0x1E50, 1, {0x6F, 0x0, 0x0}},
    {0x1E51, 1, {0x6F, 0x0, 0x0}},
    {0x1E52, 1, {0x6F, 0x0, 0x0}},
    {0x1E53, 1, {0x6F, 0x0, 0x0}},
    {0x1E54, 1, {0x70, 0x0, 0x0}},
    {0x1E55, 1, {0x70, 0x0, 0x0}},
    {0x1E56, 1, {0x70, 0x0, 0x0}},
    {0x1E57, 1, {0x70, 0x0, 0x0}},
    {0x1E58, 1, {0x72, 0x0, 0x0}},
    {0x1E59, 1, {0x72, 0x0, 0x0}},
    {0x1E5A, 1, {0x72, 0x0, 0x0}},
    {0x1E5B, 1, {0x72, 0x0, 0x0}},
    {0x1E5C, 1, {0x72, 0x0, 0x0}},
    {0x1E5D, 1, {0x72, 0x0, 0x0}},
    {0x1E5E, 1, {0x72, 0x0, 0x0}},
    {0x1E5F, 1, {0x72, 0x0, 0x0}},
    {0x1E60, 1, {0x73, 0x0, 0x0}},
    {0x1E61, 1, {0x73, 0x0, 0x0}},
    {0x1E62, 1, {0x73, 0x0, 0x0}},
    {0x1E63, 1, {0x73, 0x0, 0x0}},
    {0x1E64, 1, {0x73, 0x0, 0x0}},
    {0x1E65, 1, {0x73, 0x0, 0x0}},
    {0x1E66, 1, {0x73, 0x0, 0x0}},
    {0x1E67, 1, {0x73, 0x0, 0x0}},
    {0x1E68, 1, {0x73, 0x0, 0x0}},
    {0x1E69, 1, {0x73, 0x0, 0x0}},
    {0x1E6A, 1, {0x74, 0x0, 0x0}},
    {0x1E6B, 1, {0x74, 0x0, 0x0}},
    {0x1E6C, 1, {0x74, 0x0, 0x0}},
    {0x1E6D, 1, {0x74, 0x0, 0x0}},
    {0x1E6E, 1, {0x74, 0x0, 0x0}},
    {0x1E6F, 1, {0x74, 0x0, 0x0}},
    {0x1E70, 1, {0x74, 0x0, 0x0}},
    {0x1E71, 1, {0x74, 0x0, 0x0}},
    {0x1E72, 1, {0x75, 0x0, 0x0}},
    {0x1E73, 1, {0x75, 0x0, 0x0}},
    {0x1E74, 1, {0x75, 0x0, 0x0}},
    {0x1E75, 1, {0x75, 0x0, 0x0}},
    {0x1E76, 1, {0x75, 0x0, 0x0}},
    {0x1E77, 1, {0x75, 0x0, 0x0}},
    {0x1E78, 1, {0x75, 0x0, 0x0}},
    {0x1E79, 1, {0x75, 0x0, 0x0}},
    {0x1E7A, 1, {0x75, 0x0, 0x0}},
    {0x1E7B, 1, {0x75, 0x0, 0x0}},
    {0x1E7C, 1, {0x76, 0x0, 0x0}},
    {0x1E7D, 1, {0x76, 0x0, 0x0}},
    {0x1E7E, 1, {0x76, 0x0, 0x0}},
    {0x1E7F, 1, {0x76, 0x0, 0x0}},
    {0x1E80, 1, {0x77, 0x0, 0x0}},
    {0x1E81, 1, {0x77, 0x0, 0x0}},
    {0x1E82, 1, {0x77, 0x0, 0x0}},
    {0x1E83, 1, {0x77, 0x0, 0x0}},
    {0x1E84, 1, {0x77, 0x0, 0x0}},
    {0x1E85, 1, {0x77, 0x0, 0x0}},
    {0x1E86, 1, {0x77, 0x0, 0x0}},
    {0x1E87, 1, {0x77, 0x0, 0x0}},
    {0x1E88, 1, {0x77, 0x0, 0x0}},
    {0x1E89, 1, {0x77, 0x0, 0x0}},
    {0x1E8A, 1, {0x78, 0x0, 0x0}},
    {0x1E8B, 1, {0x78, 0x0, 0x0}},
    {0x1E8C, 1, {0x78, 0x0, 0x0}},
    {0x1E8D, 1, {0x78, 0x0, 0x0}},
    {0x1E8E, 1, {0x79, 0x0, 0x0}},
    {0x1E8F, 1, {0x79, 0x0, 0x0}},
    {0x1E90, 1, {0x7A, 0x0, 0x0}},
    {0x1E91, 1, {0x7A, 0x0, 0x0}},
    {0x1E92, 1, {0x7A, 0x0, 0x0}},
    {0x1E93, 1, {0x7A, 0x0, 0x0}},
    {0x1E94, 1, {0x7A, 0x0, 0x0}},
    {0x1E95, 1, {0x7A, 0x0, 0x0}},
    {0x1E96, 1, {0x68, 0x0, 0x0}},
    {0x1E97, 1, {0x74, 0x0, 0x0}},
    {0x1E98, 1, {0x77, 0x0, 0x0}},
    {0x1E99, 1, {0x79, 0x0, 0x0}},
    {0x1E9B, 1, {0x17F, 0x0, 0x0}},
    {0x1E9E, 1, {0xDF, 0x0, 0x0}},
    {0x1EA0, 1, {0x61, 0x0, 0x0}},
    {0x1EA1, 1, {0x61, 0x0, 0x0}},
    {0x1EA2, 1, {0x61, 0x0, 0x0}},
    {0x1EA3, 1, {0x61, 0x0, 0x0}},
    {0x1EA4, 1, {0x61, 0x0, 0x0}},
    {0x1EA5, 1, {0x61, 0x0, 0x0}},
    {0x1EA6, 1, {0x61, 0x0, 0x0}},
    {0x1EA7, 1, {0x61, 0x0, 0x0}},
    {0x1EA8, 1, {0x61, 0x0, 0x0}},
    {0x1EA9, 1, {0x61, 0x0, 0x0}},
    {0x1EAA, 1, {0x61, 0x0, 0x0}},
    {0x1EAB, 1, {0x61, 0x0, 0x0}},
    {0x1EAC, 1, {0x61, 0x0, 0x0}},
    {0x1EAD, 1, {0x61, 0x0, 0x0}},
    {0x1EAE, 1, {0x61, 0x0, 0x0}},
    {0x1EAF, 1, {0x61, 0x0, 0x0}},
    {0x1EB0, 1, {0x61, 0x0, 0x0}},
    {0x1EB1, 1, {0x61, 0x0, 0x0}},
    {0x1EB2, 1, {0x61, 0x0, 0x0}},
    {0x1EB3, 1, {0x61, 0x0, 0x0}},
    {0x1EB4, 1, {0x61, 0x0, 0x0}},
    {0x1EB5, 1, {0x61, 0x0, 0x0}},
    {0x1EB6, 1, {0x61, 0x0, 0x0}},
    {0x1EB7, 1, {0x61, 0x0, 0x0}},
    {0x1EB8, 1, {0x65, 0x0, 0x0}},
    {0x1EB9, 1, {0x65, 0x0, 0x0}},
    {0x1EBA, 1, {0x65, 0x0, 0x0}},
    {0x1EBB, 1, {0x65, 0x0, 0x0}},
    {0x1EBC, 1, {0x65, 0x0, 0x0}},
    {0x1EBD, 1, {0x65, 0x0, 0x0}},
    {0x1EBE, 1, {0x65, 0x0, 0x0}},
    {0x1EBF, 1, {0x65, 0x0, 0x0}},
    {0x1EC0, 1, {0x65, 0x0, 0x0}},
    {0x1EC1, 1, {0x65, 0x0, 0x0}},
    {0x1EC2, 1, {0x65, 0x0, 0x0}},
    {0x1EC3, 1, {0x65, 0x0, 0x0}},
    {0x1EC4, 1, {0x65, 0x0, 0x0}},
    {0x1EC5, 1, {0x65, 0x0, 0x0}},
    {0x1EC6, 1, {0x65, 0x0, 0x0}},
    {0x1EC7, 1, {0x65, 0x0, 0x0}},
    {0x1EC8, 1, {0x69, 0x0, 0x0}},
    {0x1EC9, 1, {0x69, 0x0, 0x0}},
    {0x1ECA, 1, {0x69, 0x0, 0x0}},
    {0x1ECB, 1, {0x69, 0x0, 0x0}},
    {0x1ECC, 1, {0x6F, 0x0, 0x0}},
    {0x1ECD, 1, {0x6F, 0x0, 0x0}},
    {0x1ECE, 1, {0x6F, 0x0, 0x0}},
    {0x1ECF, 1, {0x6F, 0x0, 0x0}},
    {0x1ED0, 1, {0x6F, 0x0, 0x0}},
    {0x1ED1, 1, {0x6F, 0x0, 0x0}},
    {0x1ED2, 1, {0x6F, 0x0, 0x0}},
    {0x1ED3, 1, {0x6F, 0x0, 0x0}},
    {0x1ED4, 1, {0x6F, 0x0, 0x0}},
    {0x1ED5, 1, {0x6F, 0x0, 0x0}},
    {0x1ED6, 1, {0x6F, 0x0, 0x0}},
    {0x1ED7, 1, {0x6F, 0x0, 0x0}},
    {0x1ED8, 1, {0x6F, 0x0, 0x0}},
    {0x1ED9, 1, {0x6F, 0x0, 0x0}},
    {0x1EDA, 1, {0x6F, 0x0, 0x0}},
    {0x1EDB, 1, {0x6F, 0x0, 0x0}},
    {0x1EDC, 1, {0x6F, 0x0, 0x0}},
    {0x1EDD, 1, {0x6F, 0x0, 0x0}},
    {0x1EDE, 1, {0x6F, 0x0, 0x0}},
    {0x1EDF, 1, {0x6F, 0x0, 0x0}},
    {0x1EE0, 1, {0x6F, 0x0, 0x0}},
    {0x1EE1, 1, {0x6F, 0x0, 0x0}},
    {0x1EE2, 1, {0x6F, 0x0, 0x0}},
    {0x1EE3, 1, {0x6F, 0x0, 0x0}},
    {0x1EE4, 1, {0x75, 0x0, 0x0}},
    {0x1EE5, 1, {0x75, 0x0, 0x0}},
    {0x1EE6, 1, {0x75, 0x0, 0x0}},
    {0x1EE7, 1, {0x75, 0x0, 0x0}},
    {0x1EE8, 1, {0x75, 0x0, 0x0}},
    {0x1EE9, 1, {0x75, 0x0, 0x0}},
    {0x1EEA, 1, {0x75, 0x0, 0x0}},
    {0x1EEB, 1, {0x75, 0x0, 0x0}},
    {0x1EEC, 1, {0x75, 0x0, 0x0}},
    {0x1EED, 1, {0x75, 0x0, 0x0}},
    {0x1EEE, 1, {0x75, 0x0, 0x0}},
    {0x1EEF, 1, {0x75, 0x0, 0x0}},
    {0x1EF0, 1, {0x75, 0x0, 0x0}},
    {0x1EF1, 1, {0x75, 0x0, 0x0}},
    {0x1EF2, 1, {0x79, 0x0, 0x0}},
    {0x1EF3, 1, {0x79, 0x0, 0x0}},
    {0x1EF4, 1, {0x79, 0x0, 0x0}},
    {0x1EF5, 1, {0x79, 0x0, 0x0}},
    {0x1EF6, 1, {0x79, 0x0, 0x0}},
    {0x1EF7, 1, {0x79, 0x0, 0x0}},
    {0x1EF8, 1, {0x79, 0x0, 0x0}},
    {0x1EF9, 1, {0x79, 0x0, 0x0}},
    {0x1EFA, 1, {0x1EFB, 0x0, 0x0}},
    {0x1EFC, 1, {0x1EFD, 0x0, 0x0}},
    {0x1EFE, 1, {0x1EFF, 0x0, 0x0}},
    {0x1F00, 1, {0x3B1, 0x0, 0x0}},
    {0x1F01, 1, {0x3B1, 0x0, 0x0}},
    {0x1F02, 1, {0x3B1, 0x0, 0x0}},
    {0x1F03, 1, {0x3B1, 0x0, 0x0}},
    {0x1F04, 1, {0x3B1, 0x0, 0x0}},
    {0x1F05, 1, {0x3B1, 0x0, 0x0}},
    {0x1F06, 1, {0x3B1, 0x0, 0x0}},
    {0x1F07, 1, {0x3B1, 0x0, 0x0}},
    {0x1F08, 1, {0x3B1, 0x0, 0x0}},
    {0x1F09, 1, {0x3B1, 0x0, 0x0}},
    {0x1F0A, 1, {0x3B1, 0x0, 0x0}},
    {0x1F0B, 1, {0x3B1, 0x0, 0x0}},
    {0x1F0C, 1, {0x3B1, 0x0, 0x0}},
    {0x1F0D, 1, {0x3B1, 0x0, 0x0}},
    {0x1F0E, 1, {0x3B1, 0x0, 0x0}},
    {0x1F0F, 1, {0x3B1, 0x0, 0x0}},
    {0x1F10, 1, {0x3B5, 0x0, 0x0}},
    {0x1F11, 1, {0x3B5, 0x0, 0x0}},
    {0x1F12, 1, {0x3B5, 0x0, 0x0}},
    {0x1F13, 1, {0x3B5, 0x0, 0x0}},
    {0x1F14, 1, {0x3B5, 0x0, 0x0}},
    {0x1F15, 1, {0x3B5, 0x0, 0x0}},
    {0x1F18, 1, {0x3B5, 0x0, 0x0}},
    {0x1F19, 1, {0x3B5, 0x0, 0x0}},
    {0x1F1A, 1, {0x3B5, 0x0, 0x0}},
    {0x1F1B, 1, {0x3B5, 0x0, 0x0}},
    {0x1F1C, 1, {0x3B5, 0x0, 0x0}},
    {0x1F1D, 1, {0x3B5, 0x0, 0x0}},
    {0x1F20, 1, {0x3B7, 0x0, 0x0}},
    {0x1F21, 1, {0x3B7, 0x0, 0x0}},
    {0x1F22, 1, {0x3B7, 0x0, 0x0}},
    {0x1F23, 1, {0x3B7, 0x0, 0x0}},
    {0x1F24, 1, {0x3B7, 0x0, 0x0}},
    {0x1F25, 1, {0x3B7, 0x0, 0x0}},
    {0x1F26, 1, {0x3B7, 0x0, 0x0}},
    {0x1F27, 1, {0x3B7, 0x0, 0x0}},
    {0x1F28, 1, {0x3B7, 0x0, 0x0}},
    {0x1F29, 1, {0x3B7, 0x0, 0x0}},
    {0x1F2A, 1, {0x3B7, 0x0, 0x0}},
    {0x1F2B, 1, {0x3B7, 0x0, 0x0}},
    {0x1F2C, 1, {0x3B7, 0x0, 0x0}},
    {0x1F2D, 1, {0x3B7, 0x0, 0x0}},
    {0x1F2E, 1, {0x3B7, 0x0, 0x0}},
    {0x1F2F, 1, {0x3B7, 0x0, 0x0}},
    {0x1F30, 1, {0x3B9, 0x0, 0x0}},
    {0x1F31, 1, {0x3B9, 0x0, 0x0}},
    {0x1F32, 1, {0x3B9, 0x0, 0x0}},
    {0x1F33, 1, {0x3B9, 0x0, 0x0}},
    {0x1F34, 1, {0x3B9, 0x0, 0x0}},
    {0x1F35, 1, {0x3B9, 0x0, 0x0}},
    {0x1F36, 1, {0x3B9, 0x0, 0x0}},
    {0x1F37, 1, {0x3B9, 0x0, 0x0}},
    {0x1F38, 1, {0x3B9, 0x0, 0x0}},
    {0x1F39, 1, {0x3B9, 0x0, 0x0}},
    {0x1F3A, 1, {0x3B9, 0x0, 0x0}},
    {0x1F3B, 1, {0x3B9, 0x0, 0x0}},
    {0x1F3C, 1, {0x3B9, 0x0, 0x0}},
    {0x1F3D, 1, {0x3B9, 0x0, 0x0}},
    {0x1F3E, 1, {0x3B9, 0x0, 0x0}},
    {0x1F3F, 1, {0x3B9, 0x0, 0x0}},
    {0x1F40, 1, {0x3BF, 0x0, 0x0}},
    {0x1F41, 1, {0x3BF, 0x0, 0x0}},
    {0x1F42, 1, {0x3BF, 0x0, 0x0}},
    {0x1F43, 1, {0x3BF, 0x0, 0x0}},
    {0x1F44, 1, {0x3BF, 0x0, 0x0}},
    {0x1F45, 1, {0x3BF, 0x0, 0x0}},
    {0x1F48, 1, {0x3BF, 0x0, 0x0}},
    {0x1F49, 1, {0x3BF, 0x0, 0x0}},
    {0x1F4A, 1, {0x3BF, 0x0, 0x0}},
    {0x1F4B, 1, {0x3BF, 0x0, 0x0}},
    {0x1F4C, 1, {0x3BF, 0x0, 0x0}},
    {0x1F4D, 1, {0x3BF, 0x0, 0x0}},
    {0x1F50, 1, {0x3C5, 0x0, 0x0}},
    {0x1F51, 1, {0x3C5, 0x0, 0x0}},
    {0x1F52, 1, {0x3C5, 0x0, 0x0}},
    {0x1F53, 1, {0x3C5, 0x0, 0x0}},
    {0x1F54, 1, {0x3C5, 0x0, 0x0}},
    {0x1F55, 1, {0x3C5, 0x0, 0x0}},
    {0x1F56, 1, {0x3C5, 0x0, 0x0}},
    {0x1F57, 1, {0x3C5, 0x0, 0x0}},
    {0x1F59, 1, {0x3C5, 0x0, 0x0}},
    {0x1F5B, 1, {0x3C5, 0x0, 0x0}},
    {0x1F5D, 1, {0x3C5, 0x0, 0x0}},
    {0x1F5F, 1, {0x3C5, 0x0, 0x0}},
    {0x1F60, 1, {0x3C9, 0x0, 0x0}},
    {0x1F61, 1, {0x3C9, 0x0, 0x0}},
    {0x1F62, 1, {0x3C9, 0x0, 0x0}},
    {0x1F63, 1, {0x3C9, 0x0, 0x0}},
    {0x1F64, 1, {0x3C9, 0x0, 0x0}},
    {0x1F65, 1, {0x3C9, 0x0, 0x0}},
    {0x1F66, 1, {0x3C9, 0x0, 0x0}},
    {0x1F67, 1, {0x3C9, 0x0, 0x0}},
    {0x1F68, 1, {0x3C9, 0x0, 0x0}},
    {0x1F69, 1, {0x3C9, 0x0, 0x0}},
    {0x1F6A, 1, {0x3C9, 0x0, 0x0}},
    {0x1F6B, 1, {0x3C9, 0x0, 0x0}},
    {0x1F6C, 1, {0x3C9, 0x0, 0x0}},
    {0x1F6D, 1, {0x3C9, 0x0, 0x0}},
    {0x1F6E, 1, {0x3C9, 0x0, 0x0}},
    {0x1F6F, 1, {0x3C9, 0x0, 0x0}},
    {0x1F70, 1, {0x3B1, 0x0, 0x0}},
    {0x1F71, 1, {0x3B1, 0x0, 0x0}},
    {0x1F72, 1, {0x3B5, 0x0, 0x0}},
    {0x1F73, 1, {0x3B5, 0x0, 0x0}},
    {0x1F74, 1, {0x3B7, 0x0, 0x0}},
    {0x1F75, 1, {0x3B7, 0x0, 0x0}},
    {0x1F76, 1, {0x3B9, 0x0, 0x0}},
    {0x1F77, 1, {0x3B9, 0x0, 0x0}},
    {0x1F78, 1, {0x3BF, 0x0, 0x0}},
    {0x1F79, 1, {0x3BF, 0x0, 0x0}},
    {0x1F7A, 1, {0x3C5, 0x0, 0x0}},
    {0x1F7B, 1, {0x3C5, 0x0, 0x0}},
    {0x1F7C, 1, {0x3C9, 0x0, 0x0}},
    {0x1F7D, 1, {0x3C9, 0x0, 0x0}},
    {0x1F80, 1, {0x3B1, 0x0, 0x0}},
    {0x1F81, 1, {0x3B1, 0x0, 0x0}},
    {0x1F82, 1, {0x3B1, 0x0, 0x0}},
    {0x1F83, 1, {0x3B1, 0x0, 0x0}},
    {0x1F84, 1, {0x3B1, 0x0, 0x0}},
    {0x1F85, 1, {0x3B1, 0x0, 0x0}},
    {0x1F86, 1, {0x3B1, 0x0, 0x0}},
    {0x1F87, 1, {0x3B1, 0x0, 0x0}},
    {0x1F88, 1, {0x3B1, 0x0, 0x0}},
    {0x1F89, 1, {0x3B1, 0x0, 0x0}},
    {0x1F8A, 1, {0x3B1, 0x0, 0x0}},
    {0x1F8B, 1, {0x3B1, 0x0, 0x0}},
    {0x1F8C, 1, {0x3B1, 0x0, 0x0}},
    {0x1F8D, 1, {0x3B1, 0x0, 0x0}},
    {0x1F8E, 1, {0x3B1, 0x0, 0x0}},
    {0x1F8F, 1, {0x3B1, 0x0, 0x0}},
    {0x1F90, 1, {0x3B7, 0x0, 0x0}},
    {0x1F91, 1, {0x3B7, 0x0, 0x0}},
    {0x1F92, 1, {0x3B7, 0x0, 0x0}},
    {0x1F93, 1, {0x3B7, 0x0, 0x0}},
    {0x1F94, 1, {0x3B7, 0x0, 0x0}},
    {0x1F95, 1, {0x3B7, 0x0, 0x0}},
    {0x1F96, 1, {0x3B7, 0x0, 0x0}},
    {0x1F97, 1, {0x3B7, 0x0, 0x0}},
    {0x1F98, 1, {0x3B7, 0x0, 0x0}},
    {0x1F99, 1, {0x3B7, 0x0, 0x0}},
    {0x1F9A, 1, {0x3B7, 0x0, 0x0}},
    {0x1F9B, 1, {0x3B7, 0x0, 0x0}},
    {0x1F9C, 1, {0x3B7, 0x0, 0x0}},
    {0x1F9D, 1, {0x3B7, 0x0, 0x0}},
    {0x1F9E, 1, {0x3B7, 0x0, 0x0}},
    {0x1F9F, 1, {0x3B7, 0x0, 0x0}},
    {0x1FA0, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA1, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA2, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA3, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA4, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA5, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA6, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA7, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA8, 1, {0x3C9, 0x0, 0x0}},
    {0x1FA9, 1, {0x3C9, 0x0, 0x0}},
    {0x1FAA, 1, {0x3C9, 0x0, 0x0}},
    {0x1FAB, 1, {0x3C9, 0x0, 0x0}},
    {0x1FAC, 1, {0x3C9, 0x0, 0x0}},
    {0x1FAD, 1, {0x3C9, 0x0, 0x0}},
    {0x1FAE, 1, {0x3C9, 0x0, 0x0}},
    {0x1FAF, 1, {0x3C9, 0x0, 0x0}},
    {0x1FB0, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB1, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB2, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB3, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB4, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB6, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB7, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB8, 1, {0x3B1, 0x0, 0x0}},
    {0x1FB9, 1, {0x3B1, 0x0, 0x0}},
    {0x1FBA, 1, {0x3B1, 0x0, 0x0}},
    {0x1FBB, 1, {0x3B1, 0x0, 0x0}},
    {0x1FBC, 1, {0x3B1, 0x0, 0x0}},
    {0x1FBE, 1, {0x3B9, 0x0, 0x0}},
    {0x1FC1, 1, {0xA8, 0x0, 0x0}},
    {0x1FC2, 1, {0x3B7, 0x0, 0x0}},
    {0x1FC3, 1, {0x3B7, 0x0, 0x0}},
    {0x1FC4, 1, {0x3B7, 0x0, 0x0}},
    {0x1FC6, 1, {0x3B7, 0x0, 0x0}},
    {0x1FC7, 1, {0x3B7, 0x0, 0x0}},
    {0x1FC8, 1, {0x3B5, 0x0, 0x0}},
    {0x1FC9, 1, {0x3B5, 0x0, 0x0}},
    {0x1FCA, 1, {0x3B7, 0x0, 0x0}},
    {0x1FCB, 1, {0x3B7, 0x0, 0x0}},
    {0x1FCC, 1, {0x3B7, 0x0, 0x0}},
    {0x1FCD, 1, {0x1FBF, 0x0, 0x0}},
    {0x1FCE, 1, {0x1FBF, 0x0, 0x0}},
    {0x1FCF, 1, {0x1FBF, 0x0, 0x0}},
    {0x1FD0, 1, {0x3B9, 0x0, 0x0}},
    {0x1FD1, 1, {0x3B9, 0x0, 0x0}},
    {0x1FD2, 1, {0x3B9, 0x0, 0x0}},
    {0x1FD3, 1, {0x3B9, 0x0, 0x0}},
    {0x1FD6, 1, {0x3B9, 0x0, 0x0}},
    {0x1FD7, 1, {0x3B9, 0x0, 0x0}},
    {0x1FD8, 1, {0x3B9, 0x0, 0x0}},
    {0x1FD9, 1, {0x3B9, 0x0, 0x0}},
    {0x1FDA, 1, {0x3B9, 0x0, 0x0}},
    {0x1FDB, 1, {0x3B9, 0x0, 0x0}},
    {0x1FDD, 1, {0x1FFE, 0x0, 0x0}},
    {0x1FDE, 1, {0x1FFE, 0x0, 0x0}},
    {0x1FDF, 1, {0x1FFE, 0x0, 0x0}},
    {0x1FE0, 1, {0x3C5, 0x0, 0x0}},
    {0x1FE1, 1, {0x3C5, 0x0, 0x0}},
    {0x1FE2, 1, {0x3C5, 0x0, 0x0}},
    {0x1FE3, 1, {0x3C5, 0x0, 0x0}},
    {0x1FE4, 1, {0x3C1, 0x0, 0x0}},
    {0x1FE5, 1, {0x3C1, 0x0, 0x0}},
    {0x1FE6, 1, {0x3C5, 0x0, 0x0}},
    {0x1FE7, 1, {0x3C5, 0x0, 0x0}},
    {0x1FE8, 1, {0x3C5, 0x0, 0x0}},
    {0x1FE9, 1, {0x3C5, 0x0, 0x0}},
    {0x1FEA, 1, {0x3C5, 0x0, 0x0}},
    {0x1FEB, 1, {0x3C5, 0x0, 0x0}},
    {0x1FEC, 1, {0x3C1, 0x0, 0x0}},
    {0x1FED, 1, {0xA8, 0x0, 0x0}},
    {0x1FEE, 1, {0xA8, 0x0, 0x0}},
    {0x1FEF, 1, {0x60, 0x0, 0x0}},
    {0x1FF2, 1, {0x3C9, 0x0, 0x0}},
    {0x1FF3, 1, {0x3C9, 0x0, 0x0}},
    {0x1FF4, 1, {0x3C9, 0x0, 0x0}},
    {0x1FF6, 1, {0x3C9, 0x0, 0x0}},
    {0x1FF7, 1, {0x3C9, 0x0, 0x0}},
    {0x1FF8, 1, {0x3BF, 0x0, 0x0}},
    {0x1FF9, 1, {0x3BF, 0x0, 0x0}},
    {0x1FFA, 1, {0x3C9, 0x0, 0x0}},
    {0x1FFB, 1, {0x3C9, 0x0, 0x0}},
    {0x1FFC, 1, {0x3C9, 0x0, 0x0}},
    {0x1FFD, 1, {0xB4, 0x0, 0x0}},
    {0x2000, 1, {0x2002, 0x0, 0x0}},
    {0x2001, 1, {0x2003, 0x0, 0x0}},
    {0x2126, 1, {0x3C9, 0x0, 0x0}},
    {0x212A, 1, {0x6B, 0x0, 0x0}},
    {0x212B, 1, {0x61, 0x0, 0x0}},
    {0x2132, 1, {0x214E, 0x0, 0x0}},
    {0x2160, 1, {0x2170, 0x0, 0x0}},
    {0x2161, 1, {0x2171, 0x0, 0x0}},
    {0x2162, 1, {0x2172, 0x0, 0x0}},
    {0x2163, 1, {0x2173, 0x0, 0x0}},
    {0x2164, 1, {0x2174, 0x0, 0x0}},
    {0x2165, 1, {0x2175, 0x0, 0x0}},
    {0x2166, 1, {0x2176, 0x0, 0x0}},
    {0x2167, 1, {0x2177, 0x0, 0x0}},
    {0x2168, 1, {0x2178, 0x0, 0x0}},
    {0x2169, 1, {0x2179, 0x0, 0x0}},
    {0x216A, 1, {0x217A, 0x0, 0x0}},
    {0x216B, 1, {0x217B, 0x0, 0x0}},
    {0x216C, 1, {0x217C, 0x0, 0x0}},
    {0x216D, 1, {0x217D, 0x0, 0x0}},
    {0x216E, 1, {0x217E, 0x0, 0x0}},
    {0x216F, 1, {0x217F, 0x0, 0x0}},
    {0x2183, 1, {0x2184, 0x0, 0x0}},
    {0x219A, 1, {0x2190, 0x0, 0x0}},
    {0x219B, 1, {0x2192, 0x0, 0x0}},
    {0x21AE, 1, {0x2194, 0x0, 0x0}},
    {0x21CD, 1, {0x21D0, 0x0, 0x0}},
    {0x21CE, 1, {0x21D4, 0x0, 0x0}},
    {0x21CF, 1, {0x21D2, 0x0, 0x0}},
    {0x2204, 1, {0x2203, 0x0, 0x0}},
    {0x2209, 1, {0x2208, 0x0, 0x0}},
    {0x220C, 1, {0x220B, 0x0, 0x0}},
    {0x2224, 1, {0x2223, 0x0, 0x0}},
    {0x2226, 1, {0x2225, 0x0, 0x0}},
    {0x2241, 1, {0x223C, 0x0, 0x0}},
    {0x2244, 1, {0x2243, 0x0, 0x0}},
    {0x2247, 1, {0x2245, 0x0, 0x0}},
    {0x2249, 1, {0x2248, 0x0, 0x0}},
    {0x2260, 1, {0x3D, 0x0, 0x0}},
    {0x2262, 1, {0x2261, 0x0, 0x0}},
    {0x226D, 1, {0x224D, 0x0, 0x0}},
    {0x226E, 1, {0x3C, 0x0, 0x0}},
    {0x226F, 1, {0x3E, 0x0, 0x0}},
    {0x2270, 1, {0x2264, 0x0, 0x0}},
    {0x2271, 1, {0x2265, 0x0, 0x0}},
    {0x2274, 1, {0x2272, 0x0, 0x0}},
    {0x2275, 1, {0x2273, 0x0, 0x0}},
    {0x2278, 1, {0x2276, 0x0, 0x0}},
    {0x2279, 1, {0x2277, 0x0, 0x0}},
    {0x2280, 1, {0x227A, 0x0, 0x0}},
    {0x2281, 1, {0x227B, 0x0, 0x0}},
    {0x2284, 1, {0x2282, 0x0, 0x0}},
    {0x2285, 1, {0x2283, 0x0, 0x0}},
    {0x2288, 1, {0x2286, 0x0, 0x0}},
    {0x2289, 1, {0x2287, 0x0, 0x0}},
    {0x22AC, 1, {0x22A2, 0x0, 0x0}},
    {0x22AD, 1, {0x22A8, 0x0, 0x0}},
    {0x22AE, 1, {0x22A9, 0x0, 0x0}},
    {0x22AF, 1, {0x22AB, 0x0, 0x0}},
    {0x22E0, 1, {0x227C, 0x0, 0x0}},
    {0x22E1, 1, {0x227D, 0x0, 0x0}},
    {0x22E2, 1, {0x2291, 0x0, 0x0}},
    {0x22E3, 1, {0x2292, 0x0, 0x0}},
    {0x22EA, 1, {0x22B2, 0x0, 0x0}},
    {0x22EB, 1, {0x22B3, 0x0, 0x0}},
    {0x22EC, 1, {0x22B4, 0x0, 0x0}},
    {0x22ED, 1, {0x22B5, 0x0, 0x0}},
    {0x2329, 1, {0x3008, 0x0, 0x0}},
    {0x232A, 1, {0x3009, 0x0, 0x0}},
    {0x24B6, 1, {0x24D0, 0x0, 0x0}},
    {0x24B7, 1, {0x24D1, 0x0, 0x0}},
    {0x24B8, 1, {0x24D2, 0x0, 0x0}},
    {0x24B9, 1, {0x24D3, 0x0, 0x0}},
    {0x24BA, 1, {0x24D4, 0x0, 0x0}},
    {0x24BB, 1, {0x24D5, 0x0, 0x0}},
    {0x24BC, 1, {0x24D6, 0x0, 0x0}},
    {0x24BD, 1, {0x24D7, 0x0, 0x0}},
    {0x24BE, 1, {0x24D8, 0x0, 0x0}},
    {0x24BF, 1, {0x24D9, 0x0, 0x0}},
    {0x24C0, 1, {0x24DA, 0x0, 0x0}},
    {0x24C1, 1, {0x24DB, 0x0, 0x0}},
    {0x24C2, 1, {0x24DC, 0x0, 0x0}},
    {0x24C3, 1, {0x24DD, 0x0, 0x0}},
    {0x24C4, 1, {0x24DE, 0x0, 0x0}},
    {0x24C5, 1, {0x24DF, 0x0, 0x0}},
    {0x24C6, 1, {0x24E0, 0x0, 0x0}},
    {0x24C7, 1, {0x24E1, 0x0, 0x0}},
    {0x24C8, 1, {0x24E2, 0x0, 0x0}},
    {0x24C9, 1, {0x24E3, 0x0, 0x0}},
    {0x24CA, 1, {0x24E4, 0x0, 0x0}},
    {0x24CB, 1, {0x24E5, 0x0, 0x0}},
    {0x24CC, 1, {0x24E6, 0x0, 0x0}},
    {0x24CD, 1, {0x24E7, 0x0, 0x0}},
    {0x24CE, 1, {0x24E8, 0x0, 0x0}},
    {0x24CF, 1, {0x24E9, 0x0, 0x0}},
    {0x2ADC, 1, {0x2ADD, 0x0, 0x0}},
    {0x2C00, 1, {0x2C30, 0x0, 0x0}},
    {0x2C01, 1, {0x2C31, 0x0, 0x0}},
    {0x2C02, 1, {0x2C32, 0x0, 0x0}},
    {0x2C03, 1, {0x2C33, 0x0, 0x0}},
    {0x2C04, 1, {0x2C34, 0x0, 0x0}},
    {0x2C05, 1, {0x2C35, 0x0, 0x0}},
    {0x2C06, 1, {0x2C36, 0x0, 0x0}},
    {0x2C07, 1, {0x2C37, 0x0, 0x0}},
    {0x2C08, 1, {0x2C38, 0x0, 0x0}},
    {0x2C09, 1, {0x2C39, 0x0, 0x0}},
    {0x2C0A, 1, {0x2C3A, 0x0, 0x0}},
    {0x2C0B, 1, {0x2C3B, 0x0, 0x0}},
    {0x2C0C, 1, {0x2C3C, 0x0, 0x0}},
    {0x2C0D, 1, {0x2C3D, 0x0, 0x0}},
    {0x2C0E, 1, {0x2C3E, 0x0, 0x0}},
    {0x2C0F, 1, {0x2C3F, 0x0, 0x0}},
    {0x2C10, 1, {0x2C40, 0x0, 0x0}},
    {0x2C11, 1, {0x2C41, 0x0, 0x0}},
    {0x2C12, 1, {0x2C42, 0x0, 0x0}},
    {0x2C13, 1, {0x2C43, 0x0, 0x0}},
    {0x2C14, 1, {0x2C44, 0x0, 0x0}},
    {0x2C15, 1, {0x2C45, 0x0, 0x0}},
    {0x2C16, 1, {0x2C46, 0x0, 0x0}},
    {0x2C17, 1, {0x2C47, 0x0, 0x0}},
    {0x2C18, 1, {0x2C48, 0x0, 0x0}},
    {0x2C19, 1, {0x2C49, 0x0, 0x0}},
    {0x2C1A, 1, {0x2C4A, 0x0, 0x0}},
    {0x2C1B, 1, {0x2C4B, 0x0, 0x0}},
    {0x2C1C, 1, {0x2C4C, 0x0, 0x0}},
    {0x2C1D, 1, {0x2C4D, 0x0, 0x0}},
    {0x2C1E, 1, {0x2C4E, 0x0, 0x0}},
    {0x2C1F, 1, {0x2C4F, 0x0, 0x0}},
    {0x2C20, 1, {0x2C50, 0x0, 0x0}},
    {0x2C21, 1, {0x2C51, 0x0, 0x0}},
    {0x2C22, 1, {0x2C52, 0x0, 0x0}},
    {0x2C23, 1, {0x2C53, 0x0, 0x0}},
    {0x2C24, 1, {0x2C54, 0x0, 0x0}},
    {0x2C25, 1, {0x2C55, 0x0, 0x0}},
    {0x2C26, 1, {0x2C56, 0x0, 0x0}},
    {0x2C27, 1, {0x2C57, 0x0, 0x0}},
    {0x2C28, 1, {0x2C58, 0x0, 0x0}},
    {0x2C29, 1, {0x2C59, 0x0, 0x0}},
    {0x2C2A, 1, {0x2C5A, 0x0, 0x0}},
    {0x2C2B, 1, {0x2C5B, 0x0, 0x0}},
    {0x2C2C, 1, {0x2C5C, 0x0, 0x0}},
    {0x2C2D, 1, {0x2C5D, 0x0, 0x0}},
    {0x2C2E, 1, {0x2C5E, 0x0, 0x0}},
    {0x2C60, 1, {0x2C61, 0x0, 0x0}},
    {0x2C62, 1, {0x26B, 0x0, 0x0}},
    {0x2C63, 1, {0x1D7D, 0x0, 0x0}},
    {0x2C64, 1, {0x27D, 0x0, 0x0}},
    {0x2C67, 1, {0x2C68, 0x0, 0x0}},
    {0x2C69, 1, {0x2C6A, 0x0, 0x0}},
    {0x2C6B, 1, {0x2C6C, 0x0, 0x0}},
    {0x2C6D, 1, {0x251, 0x0, 0x0}},
    {0x2C6E, 1, {0x271, 0x0, 0x0}},
    {0x2C6F, 1, {0x250, 0x0, 0x0}},
    {0x2C70, 1, {0x252, 0x0, 0x0}},
    {0x2C72, 1, {0x2C73, 0x0, 0x0}},
    {0x2C75, 1, {0x2C76, 0x0, 0x0}},
    {0x2C7E, 1, {0x23F, 0x0, 0x0}},
    {0x2C7F, 1, {0x240, 0x0, 0x0}},
    {0x2C80, 1, {0x2C81, 0x0, 0x0}},
    {0x2C82, 1, {0x2C83, 0x0, 0x0}},
    {0x2C84, 1, {0x2C85, 0x0, 0x0}},
    {0x2C86, 1, {0x2C87, 0x0, 0x0}},
    {0x2C88, 1, {0x2C89, 0x0, 0x0}},
    {0x2C8A, 1, {0x2C8B, 0x0, 0x0}},
    {0x2C8C, 1, {0x2C8D, 0x0, 0x0}},
    {0x2C8E, 1, {0x2C8F, 0x0, 0x0}},
    {0x2C90, 1, {0x2C91, 0x0, 0x0}},
    {0x2C92, 1, {0x2C93, 0x0, 0x0}},
    {0x2C94, 1, {0x2C95, 0x0, 0x0}},
    {0x2C96, 1, {0x2C97, 0x0, 0x0}},
    {0x2C98, 1, {0x2C99, 0x0, 0x0}},
    {0x2C9A, 1, {0x2C9B, 0x0, 0x0}},
    {0x2C9C, 1, {0x2C9D, 0x0, 0x0}},
    {0x2C9E, 1, {0x2C9F, 0x0, 0x0}},
    {0x2CA0, 1, {0x2CA1, 0x0, 0x0}},
    {0x2CA2, 1, {0x2CA3, 0x0, 0x0}},
    {0x2CA4, 1, {0x2CA5, 0x0, 0x0}},
    {0x2CA6, 1, {0x2CA7, 0x0, 0x0}},
    {0x2CA8, 1, {0x2CA9, 0x0, 0x0}},
    {0x2CAA, 1, {0x2CAB, 0x0, 0x0}},
    {0x2CAC, 1, {0x2CAD, 0x0, 0x0}},
    {0x2CAE, 1, {0x2CAF, 0x0, 0x0}},
    {0x2CB0, 1, {0x2CB1, 0x0, 0x0}},
    {0x2CB2, 1, {0x2CB3, 0x0, 0x0}},
    {0x2CB4, 1, {0x2CB5, 0x0, 0x0}},
    {0x2CB6, 1, {0x2CB7, 0x0, 0x0}},
    {0x2CB8, 1, {0x2CB9, 0x0, 0x0}},
    {0x2CBA, 1, {0x2CBB, 0x0, 0x0}},
    {0x2CBC, 1, {0x2CBD, 0x0, 0x0}},
    {0x2CBE, 1, {0x2CBF, 0x0, 0x0}},
    {0x2CC0, 1, {0x2CC1, 0x0, 0x0}},
    {0x2CC2, 1, {0x2CC3, 0x0, 0x0}},
    {0x2CC4, 1, {0x2CC5, 0x0, 0x0}},
    {0x2CC6, 1, {0x2CC7, 0x0, 0x0}},
    {0x2CC8, 1, {0x2CC9, 0x0, 0x0}},
    {0x2CCA, 1, {0x2CCB, 0x0, 0x0}},
    {0x2CCC, 1, {0x2CCD, 0x0, 0x0}},
    {0x2CCE, 1, {0x2CCF, 0x0, 0x0}},
    {0x2CD0, 1, {0x2CD1, 0x0, 0x0}},
    {0x2CD2, 1, {0x2CD3, 0x0, 0x0}},
    {0x2CD4, 1, {0x2CD5, 0x0, 0x0}},
    {0x2CD6, 1, {0x2CD7, 0x0, 0x0}},
    {0x2CD8, 1, {0x2CD9, 0x0, 0x0}},
    {0x2CDA, 1, {0x2CDB, 0x0, 0x0}},
    {0x2CDC, 1, {0x2CDD, 0x0, 0x0}},
    {0x2CDE, 1, {0x2CDF, 0x0, 0x0}},
    {0x2CE0, 1, {0x2CE1, 0x0, 0x0}},
    {0x2CE2, 1, {0x2CE3, 0x0, 0x0}},
    {0x2CEB, 1, {0x2CEC, 0x0, 0x0}},
    {0x2CED, 1, {0x2CEE, 0x0, 0x0}},
    {0x2CF2, 1, {0x2CF3, 0x0, 0x0}},
    {0x304C, 1, {0x304B, 0x0, 0x0}},
    {0x304E, 1, {0x304D, 0x0, 0x0}},
    {0x3050, 1, {0x304F, 0x0, 0x0}},
    {0x3052, 1, {0x3051, 0x0, 0x0}},
    {0x3054, 1, {0x3053, 0x0, 0x0}},
    {0x3056, 1, {0x3055, 0x0, 0x0}},
    {0x3058, 1, {0x3057, 0x0, 0x0}},
    {0x305A, 1, {0x3059, 0x0, 0x0}},
    {0x305C, 1, {0x305B, 0x0, 0x0}},
    {0x305E, 1, {0x305D, 0x0, 0x0}},
    {0x3060, 1, {0x305F, 0x0, 0x0}},
    {0x3062, 1, {0x3061, 0x0, 0x0}},
    {0x3065, 1, {0x3064, 0x0, 0x0}},
    {0x3067, 1, {0x3066, 0x0, 0x0}},
    {0x3069, 1, {0x3068, 0x0, 0x0}},
    {0x3070, 1, {0x306F, 0x0, 0x0}},
    {0x3071, 1, {0x306F, 0x0, 0x0}},
    {0x3073, 1, {0x3072, 0x0, 0x0}},
    {0x3074, 1, {0x3072, 0x0, 0x0}},
    {0x3076, 1, {0x3075, 0x0, 0x0}},
    {0x3077, 1, {0x3075, 0x0, 0x0}},
    {0x3079, 1, {0x3078, 0x0, 0x0}},
    {0x307A, 1, {0x3078, 0x0, 0x0}},
    {0x307C, 1, {0x307B, 0x0, 0x0}},
    {0x307D, 1, {0x307B, 0x0, 0x0}},
    {0x3094, 1, {0x3046, 0x0, 0x0}},
    {0x309E, 1, {0x309D, 0x0, 0x0}},
    {0x30AC, 1, {0x30AB, 0x0, 0x0}},
    {0x30AE, 1, {0x30AD, 0x0, 0x0}},
    {0x30B0, 1, {0x30AF, 0x0, 0x0}},
    {0x30B2, 1, {0x30B1, 0x0, 0x0}},
    {0x30B4, 1, {0x30B3, 0x0, 0x0}},
    {0x30B6, 1, {0x30B5, 0x0, 0x0}},
    {0x30B8, 1, {0x30B7, 0x0, 0x0}},
    {0x30BA, 1, {0x30B9, 0x0, 0x0}},
    {0x30BC, 1, {0x30BB, 0x0, 0x0}},
    {0x30BE, 1, {0x30BD, 0x0, 0x0}},
    {0x30C0, 1, {0x30BF, 0x0, 0x0}},
    {0x30C2, 1, {0x30C1, 0x0, 0x0}},
    {0x30C5, 1, {0x30C4, 0x0, 0x0}},
    {0x30C7, 1, {0x30C6, 0x0, 0x0}},
    {0x30C9, 1, {0x30C8, 0x0, 0x0}},
    {0x30D0, 1, {0x30CF, 0x0, 0x0}},
    {0x30D1, 1, {0x30CF, 0x0, 0x0}},
    {0x30D3, 1, {0x30D2, 0x0, 0x0}},
    {0x30D4, 1, {0x30D2, 0x0, 0x0}},
    {0x30D6, 1, {0x30D5, 0x0, 0x0}},
    {0x30D7, 1, {0x30D5, 0x0, 0x0}},
    {0x30D9, 1, {0x30D8, 0x0, 0x0}},
    {0x30DA, 1, {0x30D8, 0x0, 0x0}},
    {0x30DC, 1, {0x30DB, 0x0, 0x0}},
    {0x30DD, 1, {0x30DB, 0x0, 0x0}},
    {0x30F4, 1, {0x30A6, 0x0, 0x0}},
    {0x30F7, 1, {0x30EF, 0x0, 0x0}},
    {0x30F8, 1, {0x30F0, 0x0, 0x0}},
    {0x30F9, 1, {0x30F1, 0x0, 0x0}},
    {0x30FA, 1, {0x30F2, 0x0, 0x0}},
    {0x30FE, 1, {0x30FD, 0x0, 0x0}},
    {0xA640, 1, {0xA641, 0x0, 0x0}},
    {0xA642, 1, {0xA643, 0x0, 0x0}},
    {0xA644, 1, {0xA645, 0x0, 0x0}},
    {0xA646, 1, {0xA647, 0x0, 0x0}},
    {0xA648, 1, {0xA649, 0x0, 0x0}},
    {0xA64A, 1, {0xA64B, 0x0, 0x0}},
    {0xA64C, 1, {0xA64D, 0x0, 0x0}},
    {0xA64E, 1, {0xA64F, 0x0, 0x0}},
    {0xA650, 1, {0xA651, 0x0, 0x0}},
    {0xA652, 1, {0xA653, 0x0, 0x0}},
    {0xA654, 1, {0xA655, 0x0, 0x0}},
    {0xA656, 1, {0xA657, 0x0, 0x0}},
    {0xA658, 1, {0xA659, 0x0, 0x0}},
    {0xA65A, 1, {0xA65B, 0x0, 0x0}},
    {0xA65C, 1, {0xA65D, 0x0, 0x0}},
    {0xA65E, 1, {0xA65F, 0x0, 0x0}},
    {0xA660, 1, {0xA661, 0x0, 0x0}},
    {0xA662, 1, {0xA663, 0x0, 0x0}},
    {0xA664, 1, {0xA665, 0x0, 0x0}},
    {0xA666, 1, {0xA667, 0x0, 0x0}},
    {0xA668, 1, {0xA669, 0x0, 0x0}},
    {0xA66A, 1, {0xA66B, 0x0, 0x0}},
    {0xA66C, 1, {0xA66D, 0x0, 0x0}},
    {0xA680, 1, {0xA681, 0x0, 0x0}},
    {0xA682, 1, {0xA683, 0x0, 0x0}},
    {0xA684, 1, {0xA685, 0x0, 0x0}},
    {0xA686, 1, {0xA687, 0x0, 0x0}},
    {0xA688, 1, {0xA689, 0x0, 0x0}},
    {0xA68A, 1, {0xA68B, 0x0, 0x0}},
    {0xA68C, 1, {0xA68D, 0x0, 0x0}},
    {0xA68E, 1, {0xA68F, 0x0, 0x0}},
    {0xA690, 1, {0xA691, 0x0, 0x0}},
    {0xA692, 1, {0xA693, 0x0, 0x0}},
    {0xA694, 1, {0xA695, 0x0, 0x0}},
    {0xA696, 1, {0xA697, 0x0, 0x0}},
    {0xA698, 1, {0xA699, 0x0, 0x0}},
    {0xA69A, 1, {0xA69B, 0x0, 0x0}},
    {0xA722, 1, {0xA723, 0x0, 0x0}},
    {0xA724, 1, {0xA725, 0x0, 0x0}},
    {0xA726, 1, {0xA727, 0x0, 0x0}},
    {0xA728, 1, {0xA729, 0x0, 0x0}},
    {0xA72A, 1, {0xA72B, 0x0, 0x0}},
    {0xA72C, 1, {0xA72D, 0x0, 0x0}},
    {0xA72E, 1, {0xA72F, 0x0, 0x0}},
    {0xA732, 1, {0xA733, 0x0, 0x0}},
    {0xA734, 1, {0xA735, 0x0, 0x0}},
    {0xA736, 1, {0xA737, 0x0, 0x0}},
    {0xA738, 1, {0xA739, 0x0, 0x0}},
    {0xA73A, 1, {0xA73B, 0x0, 0x0}},
    {0xA73C, 1, {0xA73D, 0x0, 0x0}},
    {0xA73E, 1, {0xA73F, 0x0, 0x0}},
    {0xA740, 1, {0xA741, 0x0, 0x0}},
    {0xA742, 1, {0xA743, 0x0, 0x0}},
    {0xA744, 1, {0xA745, 0x0, 0x0}},
    {0xA746, 1, {0xA747, 0x0, 0x0}},
    {0xA748, 1, {0xA749, 0x0, 0x0}},
    {0xA74A, 1, {0xA74B, 0x0, 0x0}},
    {0xA74C, 1, {0xA74D, 0x0, 0x0}},
    {0xA74E, 1, {0xA74F, 0x0, 0x0}},
    {0xA750, 1, {0xA751, 0x0, 0x0}},
    {0xA752, 1, {0xA753, 0x0, 0x0}},
    {0xA754, 1, {0xA755, 0x0, 0x0}},
    {0xA756, 1, {0xA757, 0x0, 0x0}},
    {0xA758, 1, {0xA759, 0x0, 0x0}},
    {0xA75A, 1, {0xA75B, 0x0, 0x0}},
    {0xA75C, 1, {0xA75D, 0x0, 0x0}},
    {0xA75E, 1, {0xA75F, 0x0, 0x0}},
    {0xA760, 1, {0xA761, 0x0, 0x0}},
    {0xA762, 1, {0xA763, 0x0, 0x0}},
    {0xA764, 1, {0xA765, 0x0, 0x0}},
    {0xA766, 1, {0xA767, 0x0, 0x0}},
    {0xA768, 1, {0xA769, 0x0, 0x0}},
    {0xA76A, 1, {0xA76B, 0x0, 0x0}},
    {0xA76C, 1, {0xA76D, 0x0, 0x0}},
    {0xA76E, 1, {0xA76F, 0x0, 0x0}},
    {0xA779, 1, {0xA77A, 0x0, 0x0}},
    {0xA77B, 1, {0xA77C, 0x0, 0x0}},
    {0xA77D, 1, {0x1D79, 0x0, 0x0}},
    {0xA77E, 1, {0xA77F, 0x0, 0x0}},
    {0xA780, 1, {0xA781, 0x0, 0x0}},
    {0xA782, 1, {0xA783, 0x0, 0x0}},
    {0xA784, 1, {0xA785, 0x0, 0x0}},
    {0xA786, 1, {0xA787, 0x0, 0x0}},
    {0xA78B, 1, {0xA78C, 0x0, 0x0}},
    {0xA78D, 1, {0x265, 0x0, 0x0}},
    {0xA790, 1, {0xA791, 0x0, 0x0}},
    {0xA792, 1, {0xA793, 0x0, 0x0}},
    {0xA796, 1, {0xA797, 0x0, 0x0}},
    {0xA798, 1, {0xA799, 0x0, 0x0}},
    {0xA79A, 1, {0xA79B, 0x0, 0x0}},
    {0xA79C, 1, {0xA79D, 0x0, 0x0}},
    {0xA79E, 1, {0xA79F, 0x0, 0x0}},
    {0xA7A0, 1, {0xA7A1, 0x0, 0x0}},
    {0xA7A2, 1, {0xA7A3, 0x0, 0x0}},
    {0xA7A4, 1, {0xA7A5, 0x0, 0x0}},
    {0xA7A6, 1, {0xA7A7, 0x0, 0x0}},
    {0xA7A8, 1, {0xA7A9, 0x0, 0x0}},
    {0xA7AA, 1, {0x266, 0x0, 0x0}},
    {0xA7AB, 1, {0x25C, 0x0, 0x0}},
    {0xA7AC, 1, {0x261, 0x0, 0x0}},
    {0xA7AD, 1, {0x26C, 0x0, 0x0}},
    {0xA7AE, 1, {0x26A, 0x0, 0x0}},
    {0xA7B0, 1, {0x29E, 0x0, 0x0}},
    {0xA7B1, 1, {0x287, 0x0, 0x0}},
    {0xA7B2, 1, {0x29D, 0x0, 0x0}},
    {0xA7B3, 1, {0xAB53, 0x0, 0x0}},
    {0xA7B4, 1, {0xA7B5, 0x0, 0x0}},
    {0xA7B6, 1, {0xA7B7, 0x0, 0x0}},
    {0xA7B8, 1, {0xA7B9, 0x0, 0x0}},
    {0xA7BA, 1, {0xA7BB, 0x0, 0x0}},
    {0xA7BC, 1, {0xA7BD, 0x0, 0x0}},
    {0xA7BE, 1, {0xA7BF, 0x0, 0x0}},
    {0xA7C2, 1, {0xA7C3, 0x0, 0x0}},
    {0xA7C4, 1, {0xA794, 0x0, 0x0}},
    {0xA7C5, 1, {0x282, 0x0, 0x0}},
    {0xA7C6, 1, {0x1D8E, 0x0, 0x0}},
    {0xA7C7, 1, {0xA7C8, 0x0, 0x0}},
    {0xA7C9, 1, {0xA7CA, 0x0, 0x0}},
    {0xA7F5, 1, {0xA7F6, 0x0, 0x0}},
    {0xF900, 1, {0x8C48, 0x0, 0x0}},
    {0xF901, 1, {0x66F4, 0x0, 0x0}},
    {0xF902, 1, {0x8ECA, 0x0, 0x0}},
    {0xF903, 1, {0x8CC8, 0x0, 0x0}},
    {0xF904, 1, {0x6ED1, 0x0, 0x0}},
    {0xF905, 1, {0x4E32, 0x0, 0x0}},
    {0xF906, 1, {0x53E5, 0x0, 0x0}},
    {0xF907, 1, {0x9F9C, 0x0, 0x0}},
    {0xF908, 1, {0x9F9C, 0x0, 0x0}},
    {0xF909, 1, {0x5951, 0x0, 0x0}},
    {0xF90A, 1, {0x91D1, 0x0, 0x0}},
    {0xF90B, 1, {0x5587, 0x0, 0x0}},
    {0xF90C, 1, {0x5948, 0x0, 0x0}},
    {0xF90D, 1, {0x61F6, 0x0, 0x0}},
    {0xF90E, 1, {0x7669, 0x0, 0x0}},
    {0xF90F, 1, {0x7F85, 0x0, 0x0}},
    {0xF910, 1, {0x863F, 0x0, 0x0}},
    {0xF911, 1, {0x87BA, 0x0, 0x0}},
    {0xF912, 1, {0x88F8, 0x0, 0x0}},
    {0xF913, 1, {0x908F, 0x0, 0x0}},
    {0xF914, 1, {0x6A02, 0x0, 0x0}},
    {0xF915, 1, {0x6D1B, 0x0, 0x0}},
    {0xF916, 1, {0x70D9, 0x0, 0x0}},
    {0xF917, 1, {0x73DE, 0x0, 0x0}},
    {0xF918, 1, {0x843D, 0x0, 0x0}},
    {0xF919, 1, {0x916A, 0x0, 0x0}},
    {0xF91A, 1, {0x99F1, 0x0, 0x0}},
    {0xF91B, 1, {0x4E82, 0x0, 0x0}},
    {0xF91C, 1, {0x5375, 0x0, 0x0}},
    {0xF91D, 1, {0x6B04, 0x0, 0x0}},
    {0xF91E, 1, {0x721B, 0x0, 0x0}},
    {0xF91F, 1, {0x862D, 0x0, 0x0}},
    {0xF920, 1, {0x9E1E, 0x0, 0x0}},
    {0xF921, 1, {0x5D50, 0x0, 0x0}},
    {0xF922, 1, {0x6FEB, 0x0, 0x0}},
    {0xF923, 1, {0x85CD, 0x0, 0x0}},
    {0xF924, 1, {0x8964, 0x0, 0x0}},
    {0xF925, 1, {0x62C9, 0x0, 0x0}},
    {0xF926, 1, {0x81D8, 0x0, 0x0}},
    {0xF927, 1, {0x881F, 0x0, 0x0}},
    {0xF928, 1, {0x5ECA, 0x0, 0x0}},
    {0xF929, 1, {0x6717, 0x0, 0x0}},
    {0xF92A, 1, {0x6D6A, 0x0, 0x0}},
    {0xF92B, 1, {0x72FC, 0x0, 0x0}},
    {0xF92C, 1, {0x90CE, 0x0, 0x0}},
    {0xF92D, 1, {0x4F86, 0x0, 0x0}},
    {0xF92E, 1, {0x51B7, 0x0, 0x0}},
    {0xF92F, 1, {0x52DE, 0x0, 0x0}},
    {0xF930, 1, {0x64C4, 0x0, 0x0}},
    {0xF931, 1, {0x6AD3, 0x0, 0x0}},
    {0xF932, 1, {0x7210, 0x0, 0x0}},
    {0xF933, 1, {0x76E7, 0x0, 0x0}},
    {0xF934, 1, {0x8001, 0x0, 0x0}},
    {0xF935, 1, {0x8606, 0x0, 0x0}},
    {0xF936, 1, {0x865C, 0x0, 0x0}},
    {0xF937, 1, {0x8DEF, 0x0, 0x0}},
    {0xF938, 1, {0x9732, 0x0, 0x0}},
    {0xF939, 1, {0x9B6F, 0x0, 0x0}},
    {0xF93A, 1, {0x9DFA, 0x0, 0x0}},
    {0xF93B, 1, {0x788C, 0x0, 0x0}},
    {0xF93C, 1, {0x797F, 0x0, 0x0}},
    {0xF93D, 1, {0x7DA0, 0x0, 0x0}},
    {0xF93E, 1, {0x83C9, 0x0, 0x0}},
    {0xF93F, 1, {0x9304, 0x0, 0x0}},
    {0xF940, 1, {0x9E7F, 0x0, 0x0}},
    {0xF941, 1, {0x8AD6, 0x0, 0x0}},
    {0xF942, 1, {0x58DF, 0x0, 0x0}},
    {0xF943, 1, {0x5F04, 0x0, 0x0}},
    {0xF944, 1, {0x7C60, 0x0, 0x0}},
    {0xF945, 1, {0x807E, 0x0, 0x0}},
    {0xF946, 1, {0x7262, 0x0, 0x0}},
    {0xF947, 1, {0x78CA, 0x0, 0x0}},
    {0xF948, 1, {0x8CC2, 0x0, 0x0}},
    {0xF949, 1, {0x96F7, 0x0, 0x0}},
    {0xF94A, 1, {0x58D8, 0x0, 0x0}},
    {0xF94B, 1, {0x5C62, 0x0, 0x0}},
    {0xF94C, 1, {0x6A13, 0x0, 0x0}},
    {0xF94D, 1, {0x6DDA, 0x0, 0x0}},
    {0xF94E, 1, {0x6F0F, 0x0, 0x0}},
    {0xF94F, 1, {0x7D2F, 0x0, 0x0}},
    {0xF950, 1, {0x7E37, 0x0, 0x0}},
    {0xF951, 1, {0x964B, 0x0, 0x0}},
    {0xF952, 1, {0x52D2, 0x0, 0x0}},
    {0xF953, 1, {0x808B, 0x0, 0x0}},
    {0xF954, 1, {0x51DC, 0x0, 0x0}},
    {0xF955, 1, {0x51CC, 0x0, 0x0}},
    {0xF956, 1, {0x7A1C, 0x0, 0x0}},
    {0xF957, 1, {0x7DBE, 0x0, 0x0}},
    {0xF958, 1, {0x83F1, 0x0, 0x0}},
    {0xF959, 1, {0x9675, 0x0, 0x0}},
    {0xF95A, 1, {0x8B80, 0x0, 0x0}},
    {0xF95B, 1, {0x62CF, 0x0, 0x0}},
    {0xF95C, 1, {0x6A02, 0x0, 0x0}},
    {0xF95D, 1, {0x8AFE, 0x0, 0x0}},
    {0xF95E, 1, {0x4E39, 0x0, 0x0}},
    {0xF95F, 1, {0x5BE7, 0x0, 0x0}},
    {0xF960, 1, {0x6012, 0x0, 0x0}},
    {0xF961, 1, {0x7387, 0x0, 0x0}},
    {0xF962, 1, {0x7570, 0x0, 0x0}},
    {0xF963, 1, {0x5317, 0x0, 0x0}},
    {0xF964, 1, {0x78FB, 0x0, 0x0}},
    {0xF965, 1, {0x4FBF, 0x0, 0x0}},
    {0xF966, 1, {0x5FA9, 0x0, 0x0}},
    {0xF967, 1, {0x4E0D, 0x0, 0x0}},
    {0xF968, 1, {0x6CCC, 0x0, 0x0}},
    {0xF969, 1, {0x6578, 0x0, 0x0}},
    {0xF96A, 1, {0x7D22, 0x0, 0x0}},
    {0xF96B, 1, {0x53C3, 0x0, 0x0}},
    {0xF96C, 1, {0x585E, 0x0, 0x0}},
    {0xF96D, 1, {0x7701, 0x0, 0x0}},
    {0xF96E, 1, {0x8449, 0x0, 0x0}},
    {0xF96F, 1, {0x8AAA, 0x0, 0x0}},
    {0xF970, 1, {0x6BBA, 0x0, 0x0}},
    {0xF971, 1, {0x8FB0, 0x0, 0x0}},
    {0xF972, 1, {0x6C88, 0x0, 0x0}},
    {0xF973, 1, {0x62FE, 0x0, 0x0}},
    {0xF974, 1, {0x82E5, 0x0, 0x0}},
    {0xF975, 1, {0x63A0, 0x0, 0x0}},
    {0xF976, 1, {0x7565, 0x0, 0x0}},
    {0xF977, 1, {0x4EAE, 0x0, 0x0}},
    {0xF978, 1, {0x5169, 0x0, 0x0}},
    {0xF979, 1, {0x51C9, 0x0, 0x0}},
    {0xF97A, 1, {0x6881, 0x0, 0x0}},
    {0xF97B, 1, {0x7CE7, 0x0, 0x0}},
    {0xF97C, 1, {0x826F, 0x0, 0x0}},
    {0xF97D, 1, {0x8AD2, 0x0, 0x0}},
    {0xF97E, 1, {0x91CF, 0x0, 0x0}},
    {0xF97F, 1, {0x52F5, 0x0, 0x0}},
    {0xF980, 1, {0x5442, 0x0, 0x0}},
    {0xF981, 1, {0x5973, 0x0, 0x0}},
    {0xF982, 1, {0x5EEC, 0x0, 0x0}},
    {0xF983, 1, {0x65C5, 0x0, 0x0}},
    {0xF984, 1, {0x6FFE, 0x0, 0x0}},
    {0xF985, 1, {0x792A, 0x0, 0x0}},
    {0xF986, 1, {0x95AD, 0x0, 0x0}},
    {0xF987, 1, {0x9A6A, 0x0, 0x0}},
    {0xF988, 1, {0x9E97, 0x0, 0x0}},
    {0xF989, 1, {0x9ECE, 0x0, 0x0}},
    {0xF98A, 1, {0x529B, 0x0, 0x0}},
    {0xF98B, 1, {0x66C6, 0x0, 0x0}},
    {0xF98C, 1, {0x6B77, 0x0, 0x0}},
    {0xF98D, 1, {0x8F62, 0x0, 0x0}},
    {0xF98E, 1, {0x5E74, 0x0, 0x0}},
    {0xF98F, 1, {0x6190, 0x0, 0x0}},
    {0xF990, 1, {0x6200, 0x0, 0x0}},
    {0xF991, 1, {0x649A, 0x0, 0x0}},
    {0xF992, 1, {0x6F23, 0x0, 0x0}},
    {0xF993, 1, {0x7149, 0x0, 0x0}},
    {0xF994, 1, {0x7489, 0x0, 0x0}},
    {0xF995, 1, {0x79CA, 0x0, 0x0}},
    {0xF996, 1, {0x7DF4, 0x0, 0x0}},
    {0xF997, 1, {0x806F, 0x0, 0x0}},
    {0xF998, 1, {0x8F26, 0x0, 0x0}},
    {0xF999, 1, {0x84EE, 0x0, 0x0}},
    {0xF99A, 1, {0x9023, 0x0, 0x0}},
    {0xF99B, 1, {0x934A, 0x0, 0x0}},
    {0xF99C, 1, {0x5217, 0x0, 0x0}},
    {0xF99D, 1, {0x52A3, 0x0, 0x0}},
    {0xF99E, 1, {0x54BD, 0x0, 0x0}},
    {0xF99F, 1, {0x70C8, 0x0, 0x0}},
    {0xF9A0, 1, {0x88C2, 0x0, 0x0}},
    {0xF9A1, 1, {0x8AAA, 0x0, 0x0}},
    {0xF9A2, 1, {0x5EC9, 0x0, 0x0}},
    {0xF9A3, 1, {0x5FF5, 0x0, 0x0}},
    {0xF9A4, 1, {0x637B, 0x0, 0x0}},
    {0xF9A5, 1, {0x6BAE, 0x0, 0x0}},
    {0xF9A6, 1, {0x7C3E, 0x0, 0x0}},
    {0xF9A7, 1, {0x7375, 0x0, 0x0}},
    {0xF9A8, 1, {0x4EE4, 0x0, 0x0}},
    {0xF9A9, 1, {0x56F9, 0x0, 0x0}},
    {0xF9AA, 1, {0x5BE7, 0x0, 0x0}},
    {0xF9AB, 1, {0x5DBA, 0x0, 0x0}},
    {0xF9AC, 1, {0x601C, 0x0, 0x0}},
    {0xF9AD, 1, {0x73B2, 0x0, 0x0}},
    {0xF9AE, 1, {0x7469, 0x0, 0x0}},
    {0xF9AF, 1, {0x7F9A, 0x0, 0x0}},
    {0xF9B0, 1, {0x8046, 0x0, 0x0}},
    {0xF9B1, 1, {0x9234, 0x0, 0x0}},
    {0xF9B2, 1, {0x96F6, 0x0, 0x0}},
    {0xF9B3, 1, {0x9748, 0x0, 0x0}},
    {0xF9B4, 1, {0x9818, 0x0, 0x0}},
    {0xF9B5, 1, {0x4F8B, 0x0, 0x0}},
    {0xF9B6, 1, {0x79AE, 0x0, 0x0}},
    {0xF9B7, 1, {0x91B4, 0x0, 0x0}},
    {0xF9B8, 1, {0x96B8, 0x0, 0x0}},
    {0xF9B9, 1, {0x60E1, 0x0, 0x0}},
    {0xF9BA, 1, {0x4E86, 0x0, 0x0}},
    {0xF9BB, 1, {0x50DA, 0x0, 0x0}},
    {0xF9BC, 1, {0x5BEE, 0x0, 0x0}},
    {0xF9BD, 1, {0x5C3F, 0x0, 0x0}},
    {0xF9BE, 1, {0x6599, 0x0, 0x0}},
    {0xF9BF, 1, {0x6A02, 0x0, 0x0}},
    {0xF9C0, 1, {0x71CE, 0x0, 0x0}},
    {0xF9C1, 1, {0x7642, 0x0, 0x0}},
    {0xF9C2, 1, {0x84FC, 0x0, 0x0}},
    {0xF9C3, 1, {0x907C, 0x0, 0x0}},
    {0xF9C4, 1, {0x9F8D, 0x0, 0x0}},
    {0xF9C5, 1, {0x6688, 0x0, 0x0}},
    {0xF9C6, 1, {0x962E, 0x0, 0x0}},
    {0xF9C7, 1, {0x5289, 0x0, 0x0}},
    {0xF9C8, 1, {0x677B, 0x0, 0x0}},
    {0xF9C9, 1, {0x67F3, 0x0, 0x0}},
    {0xF9CA, 1, {0x6D41, 0x0, 0x0}},
    {0xF9CB, 1, {0x6E9C, 0x0, 0x0}},
    {0xF9CC, 1, {0x7409, 0x0, 0x0}},
    {0xF9CD, 1, {0x7559, 0x0, 0x0}},
    {0xF9CE, 1, {0x786B, 0x0, 0x0}},
    {0xF9CF, 1, {0x7D10, 0x0, 0x0}},
    {0xF9D0, 1, {0x985E, 0x0, 0x0}},
    {0xF9D1, 1, {0x516D, 0x0, 0x0}},
    {0xF9D2, 1, {0x622E, 0x0, 0x0}},
    {0xF9D3, 1, {0x9678, 0x0, 0x0}},
    {0xF9D4, 1, {0x502B, 0x0, 0x0}},
    {0xF9D5, 1, {0x5D19, 0x0, 0x0}},
    {0xF9D6, 1, {0x6DEA, 0x0, 0x0}},
    {0xF9D7, 1, {0x8F2A, 0x0, 0x0}},
    {0xF9D8, 1, {0x5F8B, 0x0, 0x0}},
    {0xF9D9, 1, {0x6144, 0x0, 0x0}},
    {0xF9DA, 1, {0x6817, 0x0, 0x0}},
    {0xF9DB, 1, {0x7387, 0x0, 0x0}},
    {0xF9DC, 1, {0x9686, 0x0, 0x0}},
    {0xF9DD, 1, {0x5229, 0x0, 0x0}},
    {0xF9DE, 1, {0x540F, 0x0, 0x0}},
    {0xF9DF, 1, {0x5C65, 0x0, 0x0}},
    {0xF9E0, 1, {0x6613, 0x0, 0x0}},
    {0xF9E1, 1, {0x674E, 0x0, 0x0}},
    {0xF9E2, 1, {0x68A8, 0x0, 0x0}},
    {0xF9E3, 1, {0x6CE5, 0x0, 0x0}},
    {0xF9E4, 1, {0x7406, 0x0, 0x0}},
    {0xF9E5, 1, {0x75E2, 0x0, 0x0}},
    {0xF9E6, 1, {0x7F79, 0x0, 0x0}},
    {0xF9E7, 1, {0x88CF, 0x0, 0x0}},
    {0xF9E8, 1, {0x88E1, 0x0, 0x0}},
    {0xF9E9, 1, {0x91CC, 0x0, 0x0}},
    {0xF9EA, 1, {0x96E2, 0x0, 0x0}},
    {0xF9EB, 1, {0x533F, 0x0, 0x0}},
    {0xF9EC, 1, {0x6EBA, 0x0, 0x0}},
    {0xF9ED, 1, {0x541D, 0x0, 0x0}},
    {0xF9EE, 1, {0x71D0, 0x0, 0x0}},
    {0xF9EF, 1, {0x7498, 0x0, 0x0}},
    {0xF9F0, 1, {0x85FA, 0x0, 0x0}},
    {0xF9F1, 1, {0x96A3, 0x0, 0x0}},
    {0xF9F2, 1, {0x9C57, 0x0, 0x0}},
    {0xF9F3, 1, {0x9E9F, 0x0, 0x0}},
    {0xF9F4, 1, {0x6797, 0x0, 0x0}},
    {0xF9F5, 1, {0x6DCB, 0x0, 0x0}},
    {0xF9F6, 1, {0x81E8, 0x0, 0x0}},
    {0xF9F7, 1, {0x7ACB, 0x0, 0x0}},
    {0xF9F8, 1, {0x7B20, 0x0, 0x0}},
    {0xF9F9, 1, {0x7C92, 0x0, 0x0}},
    {0xF9FA, 1, {0x72C0, 0x0, 0x0}},
    {0xF9FB, 1, {0x7099, 0x0, 0x0}},
    {0xF9FC, 1, {0x8B58, 0x0, 0x0}},
    {0xF9FD, 1, {0x4EC0, 0x0, 0x0}},
    {0xF9FE, 1, {0x8336, 0x0, 0x0}},
    {0xF9FF, 1, {0x523A, 0x0, 0x0}},
    {0xFA00, 1, {0x5207, 0x0, 0x0}},
    {0xFA01, 1, {0x5EA6, 0x0, 0x0}},
    {0xFA02, 1, {0x62D3, 0x0, 0x0}},
    {0xFA03, 1, {0x7CD6, 0x0, 0x0}},
    {0xFA04, 1, {0x5B85, 0x0, 0x0}},
    {0xFA05, 1, {0x6D1E, 0x0, 0x0}},
    {0xFA06, 1, {0x66B4, 0x0, 0x0}},
    {0xFA07, 1, {0x8F3B, 0x0, 0x0}},
    {0xFA08, 1, {0x884C, 0x0, 0x0}},
    {0xFA09, 1, {0x964D, 0x0, 0x0}},
    {0xFA0A, 1, {0x898B, 0x0, 0x0}},
    {0xFA0B, 1, {0x5ED3, 0x0, 0x0}},
    {0xFA0C, 1, {0x5140, 0x0, 0x0}},
    {0xFA0D, 1, {0x55C0, 0x0, 0x0}},
    {0xFA10, 1, {0x585A, 0x0, 0x0}},
    {0xFA12, 1, {0x6674, 0x0, 0x0}},
    {0xFA15, 1, {0x51DE, 0x0, 0x0}},
    {0xFA16, 1, {0x732A, 0x0, 0x0}},
    {0xFA17, 1, {0x76CA, 0x0, 0x0}},
    {0xFA18, 1, {0x793C, 0x0, 0x0}},
    {0xFA19, 1, {0x795E, 0x0, 0x0}},
    {0xFA1A, 1, {0x7965, 0x0, 0x0}},
    {0xFA1B, 1, {0x798F, 0x0, 0x0}},
    {0xFA1C, 1, {0x9756, 0x0, 0x0}},
    {0xFA1D, 1, {0x7CBE, 0x0, 0x0}},
    {0xFA1E, 1, {0x7FBD, 0x0, 0x0}},
    {0xFA20, 1, {0x8612, 0x0, 0x0}},
    {0xFA22, 1, {0x8AF8, 0x0, 0x0}},
    {0xFA25, 1, {0x9038, 0x0, 0x0}},
    {0xFA26, 1, {0x90FD, 0x0, 0x0}},
    {0xFA2A, 1, {0x98EF, 0x0, 0x0}},
    {0xFA2B, 1, {0x98FC, 0x0, 0x0}},
    {0xFA2C, 1, {0x9928, 0x0, 0x0}},
    {0xFA2D, 1, {0x9DB4, 0x0, 0x0}},
    {0xFA2E, 1, {0x90DE, 0x0, 0x0}},
    {0xFA2F, 1, {0x96B7, 0x0, 0x0}},
    {0xFA30, 1, {0x4FAE, 0x0, 0x0}},
    {0xFA31, 1, {0x50E7, 0x0, 0x0}},
    {0xFA32, 1, {0x514D, 0x0, 0x0}},
    {0xFA33, 1, {0x52C9, 0x0, 0x0}},
    {0xFA34, 1, {0x52E4, 0x0, 0x0}},
    {0xFA35, 1, {0x5351, 0x0, 0x0}},
    {0xFA36, 1, {0x559D, 0x0, 0x0}},
    {0xFA37, 1, {0x5606, 0x0, 0x0}},
    {0xFA38, 1, {0x5668, 0x0, 0x0}},
    {0xFA39, 1, {0x5840, 0x0, 0x0}},
    {0xFA3A, 1, {0x58A8, 0x0, 0x0}},
    {0xFA3B, 1, {0x5C64, 0x0, 0x0}},
    {0xFA3C, 1, {0x5C6E, 0x0, 0x0}},
    {0xFA3D, 1, {0x6094, 0x0, 0x0}},
    {0xFA3E, 1, {0x6168, 0x0, 0x0}},
    {0xFA3F, 1, {0x618E, 0x0, 0x0}},
    {0xFA40, 1, {0x61F2, 0x0, 0x0}},
    {0xFA41, 1, {0x654F, 0x0, 0x0}},
    {0xFA42, 1, {0x65E2, 0x0, 0x0}},
    {0xFA43, 1, {0x6691, 0x0, 0x0}},
    {0xFA44, 1, {0x6885, 0x0, 0x0}},
    {0xFA45, 1, {0x6D77, 0x0, 0x0}},
    {0xFA46, 1, {0x6E1A, 0x0, 0x0}},
    {0xFA47, 1, {0x6F22, 0x0, 0x0}},
    {0xFA48, 1, {0x716E, 0x0, 0x0}},
    {0xFA49, 1, {0x722B, 0x0, 0x0}},
    {0xFA4A, 1, {0x7422, 0x0, 0x0}},
    {0xFA4B, 1, {0x7891, 0x0, 0x0}},
    {0xFA4C, 1, {0x793E, 0x0, 0x0}},
    {0xFA4D, 1, {0x7949, 0x0, 0x0}},
    {0xFA4E, 1, {0x7948, 0x0, 0x0}},
    {0xFA4F, 1, {0x7950, 0x0, 0x0}},
    {0xFA50, 1, {0x7956, 0x0, 0x0}},
    {0xFA51, 1, {0x795D, 0x0, 0x0}},
    {0xFA52, 1, {0x798D, 0x0, 0x0}},
    {0xFA53, 1, {0x798E, 0x0, 0x0}},
    {0xFA54, 1, {0x7A40, 0x0, 0x0}},
    {0xFA55, 1, {0x7A81, 0x0, 0x0}},
    {0xFA56, 1, {0x7BC0, 0x0, 0x0}},
    {0xFA57, 1, {0x7DF4, 0x0, 0x0}},
    {0xFA58, 1, {0x7E09, 0x0, 0x0}},
    {0xFA59, 1, {0x7E41, 0x0, 0x0}},
    {0xFA5A, 1, {0x7F72, 0x0, 0x0}},
    {0xFA5B, 1, {0x8005, 0x0, 0x0}},
    {0xFA5C, 1, {0x81ED, 0x0, 0x0}},
    {0xFA5D, 1, {0x8279, 0x0, 0x0}},
    {0xFA5E, 1, {0x8279, 0x0, 0x0}},
    {0xFA5F, 1, {0x8457, 0x0, 0x0}},
    {0xFA60, 1, {0x8910, 0x0, 0x0}},
    {0xFA61, 1, {0x8996, 0x0, 0x0}},
    {0xFA62, 1, {0x8B01, 0x0, 0x0}},
    {0xFA63, 1, {0x8B39, 0x0, 0x0}},
    {0xFA64, 1, {0x8CD3, 0x0, 0x0}},
    {0xFA65, 1, {0x8D08, 0x0, 0x0}},
    {0xFA66, 1, {0x8FB6, 0x0, 0x0}},
    {0xFA67, 1, {0x9038, 0x0, 0x0}},
    {0xFA68, 1, {0x96E3, 0x0, 0x0}},
    {0xFA69, 1, {0x97FF, 0x0, 0x0}},
    {0xFA6A, 1, {0x983B, 0x0, 0x0}},
    {0xFA6B, 1, {0x6075, 0x0, 0x0}},
    {0xFA6C, 1, {0x242EE, 0x0, 0x0}},
    {0xFA6D, 1, {0x8218, 0x0, 0x0}},
    {0xFA70, 1, {0x4E26, 0x0, 0x0}},
    {0xFA71, 1, {0x51B5, 0x0, 0x0}},
    {0xFA72, 1, {0x5168, 0x0, 0x0}},
    {0xFA73, 1, {0x4F80, 0x0, 0x0}},
    {0xFA74, 1, {0x5145, 0x0, 0x0}},
    {0xFA75, 1, {0x5180, 0x0, 0x0}},
    {0xFA76, 1, {0x52C7, 0x0, 0x0}},
    {0xFA77, 1, {0x52FA, 0x0, 0x0}},
    {0xFA78, 1, {0x559D, 0x0, 0x0}},
    {0xFA79, 1, {0x5555, 0x0, 0x0}},
    {0xFA7A, 1, {0x5599, 0x0, 0x0}},
    {0xFA7B, 1, {0x55E2, 0x0, 0x0}},
    {0xFA7C, 1, {0x585A, 0x0, 0x0}},
    {0xFA7D, 1, {0x58B3, 0x0, 0x0}},
    {0xFA7E, 1, {0x5944, 0x0, 0x0}},
    {0xFA7F, 1, {0x5954, 0x0, 0x0}},
    {0xFA80, 1, {0x5A62, 0x0, 0x0}},
    {0xFA81, 1, {0x5B28, 0x0, 0x0}},
    {0xFA82, 1, {0x5ED2, 0x0, 0x0}},
    {0xFA83, 1, {0x5ED9, 0x0, 0x0}},
    {0xFA84, 1, {0x5F69, 0x0, 0x0}},
    {0xFA85, 1, {0x5FAD, 0x0, 0x0}},
    {0xFA86, 1, {0x60D8, 0x0, 0x0}},
    {0xFA87, 1, {0x614E, 0x0, 0x0}},
    {0xFA88, 1, {0x6108, 0x0, 0x0}},
    {0xFA89, 1, {0x618E, 0x0, 0x0}},
    {0xFA8A, 1, {0x6160, 0x0, 0x0}},
    {0xFA8B, 1, {0x61F2, 0x0, 0x0}},
    {0xFA8C, 1, {0x6234, 0x0, 0x0}},
    {0xFA8D, 1, {0x63C4, 0x0, 0x0}},
    {0xFA8E, 1, {0x641C, 0x0, 0x0}},
    {0xFA8F, 1, {0x6452, 0x0, 0x0}},
    {0xFA90, 1, {0x6556, 0x0, 0x0}},
    {0xFA91, 1, {0x6674, 0x0, 0x0}},
    {0xFA92, 1, {0x6717, 0x0, 0x0}},
    {0xFA93, 1, {0x671B, 0x0, 0x0}},
    {0xFA94, 1, {0x6756, 0x0, 0x0}},
    {0xFA95, 1, {0x6B79, 0x0, 0x0}},
    {0xFA96, 1, {0x6BBA, 0x0, 0x0}},
    {0xFA97, 1, {0x6D41, 0x0, 0x0}},
    {0xFA98, 1, {0x6EDB, 0x0, 0x0}},
    {0xFA99, 1, {0x6ECB, 0x0, 0x0}},
    {0xFA9A, 1, {0x6F22, 0x0, 0x0}},
    {0xFA9B, 1, {0x701E, 0x0, 0x0}},
    {0xFA9C, 1, {0x716E, 0x0, 0x0}},
    {0xFA9D, 1, {0x77A7, 0x0, 0x0}},
    {0xFA9E, 1, {0x7235, 0x0, 0x0}},
    {0xFA9F, 1, {0x72AF, 0x0, 0x0}},
    {0xFAA0, 1, {0x732A, 0x0, 0x0}},
    {0xFAA1, 1, {0x7471, 0x0, 0x0}},
    {0xFAA2, 1, {0x7506, 0x0, 0x0}},
    {0xFAA3, 1, {0x753B, 0x0, 0x0}},
    {0xFAA4, 1, {0x761D, 0x0, 0x0}},
    {0xFAA5, 1, {0x761F, 0x0, 0x0}},
    {0xFAA6, 1, {0x76CA, 0x0, 0x0}},
    {0xFAA7, 1, {0x76DB, 0x0, 0x0}},
    {0xFAA8, 1, {0x76F4, 0x0, 0x0}},
    {0xFAA9, 1, {0x774A, 0x0, 0x0}},
    {0xFAAA, 1, {0x7740, 0x0, 0x0}},
    {0xFAAB, 1, {0x78CC, 0x0, 0x0}},
    {0xFAAC, 1, {0x7AB1, 0x0, 0x0}},
    {0xFAAD, 1, {0x7BC0, 0x0, 0x0}},
    {0xFAAE, 1, {0x7C7B, 0x0, 0x0}},
    {0xFAAF, 1, {0x7D5B, 0x0, 0x0}},
    {0xFAB0, 1, {0x7DF4, 0x0, 0x0}},
    {0xFAB1, 1, {0x7F3E, 0x0, 0x0}},
    {0xFAB2, 1, {0x8005, 0x0, 0x0}},
    {0xFAB3, 1, {0x8352, 0x0, 0x0}},
    {0xFAB4, 1, {0x83EF, 0x0, 0x0}},
    {0xFAB5, 1, {0x8779, 0x0, 0x0}},
    {0xFAB6, 1, {0x8941, 0x0, 0x0}},
    {0xFAB7, 1, {0x8986, 0x0, 0x0}},
    {0xFAB8, 1, {0x8996, 0x0, 0x0}},
    {0xFAB9, 1, {0x8ABF, 0x0, 0x0}},
    {0xFABA, 1, {0x8AF8, 0x0, 0x0}},
    {0xFABB, 1, {0x8ACB, 0x0, 0x0}},
    {0xFABC, 1, {0x8B01, 0x0, 0x0}},
    {0xFABD, 1, {0x8AFE, 0x0, 0x0}},
    {0xFABE, 1, {0x8AED, 0x0, 0x0}},
    {0xFABF, 1, {0x8B39, 0x0, 0x0}},
    {0xFAC0, 1, {0x8B8A, 0x0, 0x0}},
    {0xFAC1, 1, {0x8D08, 0x0, 0x0}},
    {0xFAC2, 1, {0x8F38, 0x0, 0x0}},
    {0xFAC3, 1, {0x9072, 0x0, 0x0}},
    {0xFAC4, 1, {0x9199, 0x0, 0x0}},
    {0xFAC5, 1, {0x9276, 0x0, 0x0}},
    {0xFAC6, 1, {0x967C, 0x0, 0x0}},
    {0xFAC7, 1, {0x96E3, 0x0, 0x0}},
    {0xFAC8, 1, {0x9756, 0x0, 0x0}},
    {0xFAC9, 1, {0x97DB, 0x0, 0x0}},
    {0xFACA, 1, {0x97FF, 0x0, 0x0}},
    {0xFACB, 1, {0x980B, 0x0, 0x0}},
    {0xFACC, 1, {0x983B, 0x0, 0x0}},
    {0xFACD, 1, {0x9B12, 0x0, 0x0}},
    {0xFACE, 1, {0x9F9C, 0x0, 0x0}},
    {0xFACF, 1, {0x2284A, 0x0, 0x0}},
    {0xFAD0, 1, {0x22844, 0x0, 0x0}},
    {0xFAD1, 1, {0x233D5, 0x0, 0x0}},
    {0xFAD2, 1, {0x3B9D, 0x0, 0x0}},
    {0xFAD3, 1, {0x4018, 0x0, 0x0}},
    {0xFAD4, 1, {0x4039, 0x0, 0x0}},
    {0xFAD5, 1, {0x25249, 0x0, 0x0}},
    {0xFAD6, 1, {0x25CD0, 0x0, 0x0}},
    {0xFAD7, 1, {0x27ED3, 0x0, 0x0}},
    {0xFAD8, 1, {0x9F43, 0x0, 0x0}},
    {0xFAD9, 1, {0x9F8E, 0x0, 0x0}},
    {0xFB1D, 1, {0x5D9, 0x0, 0x0}},
    {0xFB1F, 1, {0x5F2, 0x0, 0x0}},
    {0xFB2A, 1, {0x5E9, 0x0, 0x0}},
    {0xFB2B, 1, {0x5E9, 0x0, 0x0}},
    {0xFB2C, 1, {0x5E9, 0x0, 0x0}},
    {0xFB2D, 1, {0x5E9, 0x0, 0x0}},
    {0xFB2E, 1, {0x5D0, 0x0, 0x0}},
    {0xFB2F, 1, {0x5D0, 0x0, 0x0}},
    {0xFB30, 1, {0x5D0, 0x0, 0x0}},
    {0xFB31, 1, {0x5D1, 0x0, 0x0}},
    {0xFB32, 1, {0x5D2, 0x0, 0x0}},
    {0xFB33, 1, {0x5D3, 0x0, 0x0}},
    {0xFB34, 1, {0x5D4, 0x0, 0x0}},
    {0xFB35, 1, {0x5D5, 0x0, 0x0}},
    {0xFB36, 1, {0x5D6, 0x0, 0x0}},
    {0xFB38, 1, {0x5D8, 0x0, 0x0}},
    {0xFB39, 1, {0x5D9, 0x0, 0x0}},
    {0xFB3A, 1, {0x5DA, 0x0, 0x0}},
    {0xFB3B, 1, {0x5DB, 0x0, 0x0}},
    {0xFB3C, 1, {0x5DC, 0x0, 0x0}},
    {0xFB3E, 1, {0x5DE, 0x0, 0x0}},
    {0xFB40, 1, {0x5E0, 0x0, 0x0}},
    {0xFB41, 1, {0x5E1, 0x0, 0x0}},
    {0xFB43, 1, {0x5E3, 0x0, 0x0}},
    {0xFB44, 1, {0x5E4, 0x0, 0x0}},
    {0xFB46, 1, {0x5E6, 0x0, 0x0}},
    {0xFB47, 1, {0x5E7, 0x0, 0x0}},
    {0xFB48, 1, {0x5E8, 0x0, 0x0}},
    {0xFB49, 1, {0x5E9, 0x0, 0x0}},
    {0xFB4A, 1, {0x5EA, 0x0, 0x0}},
    {0xFB4B, 1, {0x5D5, 0x0, 0x0}},
    {0xFB4C, 1, {0x5D1, 0x0, 0x0}},
    {0xFB4D, 1, {0x5DB, 0x0, 0x0}},
    {0xFB4E, 1, {0x5E4, 0x0, 0x0}},
    {0xFF21, 1, {0xFF41, 0x0, 0x0}},
    {0xFF22, 1, {0xFF42, 0x0, 0x0}},
    {0xFF23, 1, {0xFF43, 0x0, 0x0}},
    {0xFF24, 1, {0xFF44, 0x0, 0x0}},
    {0xFF25, 1, {0xFF45, 0x0, 0x0}},
    {0xFF26, 1, {0xFF46, 0x0, 0x0}},
    {0xFF27, 1, {0xFF47, 0x0, 0x0}},
    {0xFF28, 1, {0xFF48, 0x0, 0x0}},
    {0xFF29, 1, {0xFF49, 0x0, 0x0}},
    {0xFF2A, 1, {0xFF4A, 0x0, 0x0}},
    {0xFF2B, 1, {0xFF4B, 0x0, 0x0}},
    {0xFF2C, 1, {0xFF4C, 0x0, 0x0}},
    {0xFF2D, 1, {0xFF4D, 0x0, 0x0}},
    {0xFF2E, 1, {0xFF4E, 0x0, 0x0}},
    {0xFF2F, 1, {0xFF4F, 0x0, 0x0}},
    {0xFF30, 1, {0xFF50, 0x0, 0x0}},
    {0xFF31, 1, {0xFF51, 0x0, 0x0}},
    {0xFF32, 1, {0xFF52, 0x0, 0x0}},
    {0xFF33, 1, {0xFF53, 0x0, 0x0}},
    {0xFF34, 1, {0xFF54, 0x0, 0x0}},
    {0xFF35, 1, {0xFF55, 0x0, 0x0}},
    {0xFF36, 1, {0xFF56, 0x0, 0x0}},
    {0xFF37, 1, {0xFF57, 0x0, 0x0}},
    {0xFF38, 1, {0xFF58, 0x0, 0x0}},
    {0xFF39, 1, {0xFF59, 0x0, 0x0}},
    {0xFF3A, 1, {0xFF5A, 0x0, 0x0}},
    {0x10400, 1, {0x10428, 0x0, 0x0}},
    {0x10401, 1, {0x10429, 0x0, 0x0}},
    {0x10402, 1, {0x1042A, 0x0, 0x0}},
    {0x10403, 1, {0x1042B, 0x0, 0x0}},
    {0x10404, 1, {0x1042C, 0x0, 0x0}},
    {0x10405, 1, {0x1042D, 0x0, 0x0}},
    {0x10406, 1, {0x1042E, 0x0, 0x0}},
    {0x10407, 1, {0x1042F, 0x0, 0x0}},
    {0x10408, 1, {0x10430, 0x0, 0x0}},
    {0x10409, 1, {0x10431, 0x0, 0x0}},
    {0x1040A, 1, {0x10432, 0x0, 0x0}},
    {0x1040B, 1, {0x10433, 0x0, 0x0}},
    {0x1040C, 1, {0x10434, 0x0, 0x0}},
    {0x1040D, 1, {0x10435, 0x0, 0x0}},
    {0x1040E, 1, {0x10436, 0x0, 0x0}},
    {0x1040F, 1, {0x10437, 0x0, 0x0}},
    {0x10410, 1, {0x10438, 0x0, 0x0}},
    {0x10411, 1, {0x10439, 0x0, 0x0}},
    {0x10412, 1, {0x1043A, 0x0, 0x0}},
    {0x10413, 1, {0x1043B, 0x0, 0x0}},
    {0x10414, 1, {0x1043C, 0x0, 0x0}},
    {0x10415, 1, {0x1043D, 0x0, 0x0}},
    {0x10416, 1, {0x1043E, 0x0, 0x0}},
    {0x10417, 1, {0x1043F, 0x0, 0x0}},
    {0x10418, 1, {0x10440, 0x0, 0x0}},
    {0x10419, 1, {0x10441, 0x0, 0x0}},
    {0x1041A, 1, {0x10442, 0x0, 0x0}},
    {0x1041B, 1, {0x10443, 0x0, 0x0}},
    {0x1041C, 1, {0x10444, 0x0, 0x0}},
    {0x1041D, 1, {0x10445, 0x0, 0x0}},
    {0x1041E, 1, {0x10446, 0x0, 0x0}},
    {0x1041F, 1, {0x10447, 0x0, 0x0}},
    {0x10420, 1, {0x10448, 0x0, 0x0}},
    {0x10421, 1, {0x10449, 0x0, 0x0}},
    {0x10422, 1, {0x1044A, 0x0, 0x0}},
    {0x10423, 1, {0x1044B, 0x0, 0x0}},
    {0x10424, 1, {0x1044C, 0x0, 0x0}},
    {0x10425, 1, {0x1044D, 0x0, 0x0}},
    {0x10426, 1, {0x1044E, 0x0, 0x0}},
    {0x10427, 1, {0x1044F, 0x0, 0x0}},
    {0x104B0, 1, {0x104D8, 0x0, 0x0}},
    {0x104B1, 1, {0x104D9, 0x0, 0x0}},
    {0x104B2, 1, {0x104DA, 0x0, 0x0}},
    {0x104B3, 1, {0x104DB, 0x0, 0x0}},
    {0x104B4, 1, {0x104DC, 0x0, 0x0}},
    {0x104B5, 1, {0x104DD, 0x0, 0x0}},
    {0x104B6, 1, {0x104DE, 0x0, 0x0}},
    {0x104B7, 1, {0x104DF, 0x0, 0x0}},
    {0x104B8, 1, {0x104E0, 0x0, 0x0}},
    {0x104B9, 1, {0x104E1, 0x0, 0x0}},
    {0x104BA, 1, {0x104E2, 0x0, 0x0}},
    {0x104BB, 1, {0x104E3, 0x0, 0x0}},
    {0x104BC, 1, {0x104E4, 0x0, 0x0}},
    {0x104BD, 1, {0x104E5, 0x0, 0x0}},
    {0x104BE, 1, {0x104E6, 0x0, 0x0}},
    {0x104BF, 1, {0x104E7, 0x0, 0x0}},
    {0x104C0, 1, {0x104E8, 0x0, 0x0}},
    {0x104C1, 1, {0x104E9, 0x0, 0x0}},
    {0x104C2, 1, {0x104EA, 0x0, 0x0}},
    {0x104C3, 1, {0x104EB, 0x0, 0x0}},
    {0x104C4, 1, {0x104EC, 0x0, 0x0}},
    {0x104C5, 1, {0x104ED, 0x0, 0x0}},
    {0x104C6, 1, {0x104EE, 0x0, 0x0}},
    {0x104C7, 1, {0x104EF, 0x0, 0x0}},
    {0x104C8, 1, {0x104F0, 0x0, 0x0}},
    {0x104C9, 1, {0x104F1, 0x0, 0x0}},
    {0x104CA, 1, {0x104F2, 0x0, 0x0}},
    {0x104CB, 1, {0x104F3, 0x0, 0x0}},
    {0x104CC, 1, {0x104F4, 0x0, 0x0}},
    {0x104CD, 1, {0x104F5, 0x0, 0x0}},
    {0x104CE, 1, {0x104F6, 0x0, 0x0}},
    {0x104CF, 1, {0x104F7, 0x0, 0x0}},
    {0x104D0, 1, {0x104F8, 0x0, 0x0}},
    {0x104D1, 1, {0x104F9, 0x0, 0x0}},
    {0x104D2, 1, {0x104FA, 0x0, 0x0}},
    {0x104D3, 1, {0x104FB, 0x0, 0x0}},
    {0x10C80, 1, {0x10CC0, 0x0, 0x0}},
    {0x10C81, 1, {0x10CC1, 0x0, 0x0}},
    {0x10C82, 1, {0x10CC2, 0x0, 0x0}},
    {0x10C83, 1, {0x10CC3, 0x0, 0x0}},
    {0x10C84, 1, {0x10CC4, 0x0, 0x0}},
    {0x10C85, 1, {0x10CC5, 0x0, 0x0}},
    {0x10C86, 1, {0x10CC6, 0x0, 0x0}},
    {0x10C87, 1, {0x10CC7, 0x0, 0x0}},
    {0x10C88, 1, {0x10CC8, 0x0, 0x0}},
    {0x10C89, 1, {0x10CC9, 0x0, 0x0}},
    {0x10C8A, 1, {0x10CCA, 0x0, 0x0}},
    {0x10C8B, 1, {0x10CCB, 0x0, 0x0}},
    {0x10C8C, 1, {0x10CCC, 0x0, 0x0}},
    {0x10C8D, 1, {0x10CCD, 0x0, 0x0}},
    {0x10C8E, 1, {0x10CCE, 0x0, 0x0}},
    {0x10C8F, 1, {0x10CCF, 0x0, 0x0}},
    {0x10C90, 1, {0x10CD0, 0x0, 0x0}},
    {0x10C91, 1, {0x10CD1, 0x0, 0x0}},
    {0x10C92, 1, {0x10CD2, 0x0, 0x0}},
    {0x10C93, 1, {0x10CD3, 0x0, 0x0}},
    {0x10C94, 1, {0x10CD4, 0x0, 0x0}},
    {0x10C95, 1, {0x10CD5, 0x0, 0x0}},
    {0x10C96, 1, {0x10CD6, 0x0, 0x0}},
    {0x10C97, 1, {0x10CD7, 0x0, 0x0}},
    {0x10C98, 1, {0x10CD8, 0x0, 0x0}},
    {0x10C99, 1, {0x10CD9, 0x0, 0x0}},
    {0x10C9A, 1, {0x10CDA, 0x0, 0x0}},
    {0x10C9B, 1, {0x10CDB, 0x0, 0x0}},
    {0x10C9C, 1, {0x10CDC, 0x0, 0x0}},
    {0x10C9D, 1, {0x10CDD, 0x0, 0x0}},
    {0x10C9E, 1, {0x10CDE, 0x0, 0x0}},
    {0x10C9F, 1, {0x10CDF, 0x0, 0x0}},
    {0x10CA0, 1, {0x10CE0, 0x0, 0x0}},
    {0x10CA1, 1, {0x10CE1, 0x0, 0x0}},
    {0x10CA2, 1, {0x10CE2, 0x0, 0x0}},
    {0x10CA3, 1, {0x10CE3, 0x0, 0x0}},
    {0x10CA4, 1, {0x10CE4, 0x0, 0x0}},
    {0x10CA5, 1, {0x10CE5, 0x0, 0x0}},
    {0x10CA6, 1, {0x10CE6, 0x0, 0x0}},
    {0x10CA7, 1, {0x10CE7, 0x0, 0x0}},
    {0x10CA8, 1, {0x10CE8, 0x0, 0x0}},
    {0x10CA9, 1, {0x10CE9, 0x0, 0x0}},
    {0x10CAA, 1, {0x10CEA, 0x0, 0x0}},
    {0x10CAB, 1, {0x10CEB, 0x0, 0x0}},
    {0x10CAC, 1, {0x10CEC, 0x0, 0x0}},
    {0x10CAD, 1, {0x10CED, 0x0, 0x0}},
    {0x10CAE, 1, {0x10CEE, 0x0, 0x0}},
    {0x10CAF, 1, {0x10CEF, 0x0, 0x0}},
    {0x10CB0, 1, {0x10CF0, 0x0, 0x0}},
    {0x10CB1, 1, {0x10CF1, 0x0, 0x0}},
    {0x10CB2, 1, {0x10CF2, 0x0, 0x0}},
    {0x1109A, 1, {0x11099, 0x0, 0x0}},
    {0x1109C, 1, {0x1109B, 0x0, 0x0}},
    {0x110AB, 1, {0x110A5, 0x0, 0x0}},
    {0x1134B, 2, {0x11347, 0x1133E, 0x0}},
    {0x1134C, 2, {0x11347, 0x11357, 0x0}},
    {0x114BB, 1, {0x114B9, 0x0, 0x0}},
    {0x114BC, 2, {0x114B9, 0x114B0, 0x0}},
    {0x114BE, 2, {0x114B9, 0x114BD, 0x0}},
    {0x115BA, 2, {0x115B8, 0x115AF, 0x0}},
    {0x115BB, 2, {0x115B9, 0x115AF, 0x0}},
    {0x118A0, 1, {0x118C0, 0x0, 0x0}},
    {0x118A1, 1, {0x118C1, 0x0, 0x0}},
    {0x118A2, 1, {0x118C2, 0x0, 0x0}},
    {0x118A3, 1, {0x118C3, 0x0, 0x0}},
    {0x118A4, 1, {0x118C4, 0x0, 0x0}},
    {0x118A5, 1, {0x118C5, 0x0, 0x0}},
    {0x118A6, 1, {0x118C6, 0x0, 0x0}},
    {0x118A7, 1, {0x118C7, 0x0, 0x0}},
    {0x118A8, 1, {0x118C8, 0x0, 0x0}},
    {0x118A9, 1, {0x118C9, 0x0, 0x0}},
    {0x118AA, 1, {0x118CA, 0x0, 0x0}},
    {0x118AB, 1, {0x118CB, 0x0, 0x0}},
    {0x118AC, 1, {0x118CC, 0x0, 0x0}},
    {0x118AD, 1, {0x118CD, 0x0, 0x0}},
    {0x118AE, 1, {0x118CE, 0x0, 0x0}},
    {0x118AF, 1, {0x118CF, 0x0, 0x0}},
    {0x118B0, 1, {0x118D0, 0x0, 0x0}},
    {0x118B1, 1, {0x118D1, 0x0, 0x0}},
    {0x118B2, 1, {0x118D2, 0x0, 0x0}},
    {0x118B3, 1, {0x118D3, 0x0, 0x0}},
    {0x118B4, 1, {0x118D4, 0x0, 0x0}},
    {0x118B5, 1, {0x118D5, 0x0, 0x0}},
    {0x118B6, 1, {0x118D6, 0x0, 0x0}},
    {0x118B7, 1, {0x118D7, 0x0, 0x0}},
    {0x118B8, 1, {0x118D8, 0x0, 0x0}},
    {0x118B9, 1, {0x118D9, 0x0, 0x0}},
    {0x118BA, 1, {0x118DA, 0x0, 0x0}},
    {0x118BB, 1, {0x118DB, 0x0, 0x0}},
    {0x118BC, 1, {0x118DC, 0x0, 0x0}},
    {0x118BD, 1, {0x118DD, 0x0, 0x0}},
    {0x118BE, 1, {0x118DE, 0x0, 0x0}},
    {0x118BF, 1, {0x118DF, 0x0, 0x0}},
    {0x11938, 2, {0x11935, 0x11930, 0x0}},
    {0x16E40, 1, {0x16E60, 0x0, 0x0}},
    {0x16E41, 1, {0x16E61, 0x0, 0x0}},
    {0x16E42, 1, {0x16E62, 0x0, 0x0}},
    {0x16E43, 1, {0x16E63, 0x0, 0x0}},
    {0x16E44, 1, {0x16E64, 0x0, 0x0}},
    {0x16E45, 1, {0x16E65, 0x0, 0x0}},
    {0x16E46, 1, {0x16E66, 0x0, 0x0}},
    {0x16E47, 1, {0x16E67, 0x0, 0x0}},
    {0x16E48, 1, {0x16E68, 0x0, 0x0}},
    {0x16E49, 1, {0x16E69, 0x0, 0x0}},
    {0x16E4A, 1, {0x16E6A, 0x0, 0x0}},
    {0x16E4B, 1, {0x16E6B, 0x0, 0x0}},
    {0x16E4C, 1, {0x16E6C, 0x0, 0x0}},
    {0x16E4D, 1, {0x16E6D, 0x0, 0x0}},
    {0x16E4E, 1, {0x16E6E, 0x0, 0x0}},
    {0x16E4F, 1, {0x16E6F, 0x0, 0x0}},
    {0x16E50, 1, {0x16E70, 0x0, 0x0}},
    {0x16E51, 1, {0x16E71, 0x0, 0x0}},
    {0x16E52, 1, {0x16E72, 0x0, 0x0}},
    {0x16E53, 1, {0x16E73, 0x0, 0x0}},
    {0x16E54, 1, {0x16E74, 0x0, 0x0}},
    {0x16E55, 1, {0x16E75, 0x0, 0x0}},
    {0x16E56, 1, {0x16E76, 0x0, 0x0}},
    {0x16E57, 1, {0x16E77, 0x0, 0x0}},
    {0x16E58, 1, {0x16E78, 0x0, 0x0}},
    {0x16E59, 1, {0x16E79, 0x0, 0x0}},
    {0x16E5A, 1, {0x16E7A, 0x0, 0x0}},
    {0x16E5B, 1, {0x16E7B, 0x0, 0x0}},
    {0x16E5C, 1, {0x16E7C, 0x0, 0x0}},
    {0x16E5D, 1, {0x16E7D, 0x0, 0x0}},
    {0x16E5E, 1, {0x16E7E, 0x0, 0x0}},
    {0x16E5F, 1, {0x16E7F, 0x0, 0x0}},
    {0x1D15E, 2, {0x1D157, 0x1D165, 0x0}},
    {0x1D15F, 2, {0x1D158, 0x1D165, 0x0}},
    {0x1D160, 3, {0x1D158, 0x1D165, 0x1D16E}},
    {0x1D161, 3, {0x1D158, 0x1D165, 0x1D16F}},
    {0x1D162, 3, {0x1D158, 0x1D165, 0x1D170}},
    {0x1D163, 3, {0x1D158, 0x1D165, 0x1D171}},
    {0x1D164, 3, {0x1D158, 0x1D165, 0x1D172}},
    {0x1D1BB, 2, {0x1D1B9, 0x1D165, 0x0}},
    {0x1D1BC, 2, {0x1D1BA, 0x1D165, 0x0}},
    {0x1D1BD, 3, {0x1D1B9, 0x1D165, 0x1D16E}},
    {0x1D1BE, 3, {0x1D1BA, 0x1D165, 0x1D16E}},
    {0x1D1BF, 3, {0x1D1B9, 0x1D165, 0x1D16F}},
    {0x1D1C0, 3, {0x1D1BA, 0x1D165, 0x1D16F}},
    {0x1E900, 1, {0x1E922, 0x0, 0x0}},
    {0x1E901, 1, {0x1E923, 0x0, 0x0}},
    {0x1E902, 1, {0x1E924, 0x0, 0x0}},
    {0x1E903, 1, {0x1E925, 0x0, 0x0}},
    {0x1E904, 1, {0x1E926, 0x0, 0x0}},
    {0x1E905, 1, {0x1E927, 0x0, 0x0}},
    {0x1E906, 1, {0x1E928, 0x0, 0x0}},
    {0x1E907, 1, {0x1E929, 0x0, 0x0}},
    {0x1E908, 1, {0x1E92A, 0x0, 0x0}},
    {0x1E909, 1, {0x1E92B, 0x0, 0x0}},
    {0x1E90A, 1, {0x1E92C, 0x0, 0x0}},
    {0x1E90B, 1, {0x1E92D, 0x0, 0x0}},
    {0x1E90C, 1, {0x1E92E, 0x0, 0x0}},
    {0x1E90D, 1, {0x1E92F, 0x0, 0x0}},
    {0x1E90E, 1, {0x1E930, 0x0, 0x0}},
    {0x1E90F, 1, {0x1E931, 0x0, 0x0}},
    {0x1E910, 1, {0x1E932, 0x0, 0x0}},
    {0x1E911, 1, {0x1E933, 0x0, 0x0}},
    {0x1E912, 1, {0x1E934, 0x0, 0x0}},
    {0x1E913, 1, {0x1E935, 0x0, 0x0}},
    {0x1E914, 1, {0x1E936, 0x0, 0x0}},
    {0x1E915, 1, {0x1E937, 0x0, 0x0}},
    {0x1E916, 1, {0x1E938, 0x0, 0x0}},
    {0x1E917, 1, {0x1E939, 0x0, 0x0}},
    {0x1E918, 1, {0x1E93A, 0x0, 0x0}},
    {0x1E919, 1, {0x1E93B, 0x0, 0x0}},
    {0x1E91A, 1, {0x1E93C, 0x0, 0x0}},
    {0x1E91B, 1, {0x1E93D, 0x0, 0x0}},
    {0x1E91C, 1, {0x1E93E, 0x0, 0x0}},
    {0x1E91D, 1, {0x1E93F, 0x0, 0x0}},
    {0x1E91E, 1, {0x1E940, 0x0, 0x0}},
    {0x1E91F, 1, {0x1E941, 0x0, 0x0}},
    {0x1E920, 1, {0x1E942, 0x0, 0x0}},
    {0x1E921, 1, {0x1E943, 0x0, 0x0}},
    {0x2F800, 1, {0x4E3D, 0x0, 0x0}},
    {0x2F801, 1, {0x4E38, 0x0, 0x0}},
    {0x2F802, 1, {0x4E41, 0x0, 0x0}},
    {0x2F803, 1, {0x20122, 0x0, 0x0}},
    {0x2F804, 1, {0x4F60, 0x0, 0x0}},
    {0x2F805, 1, {0x4FAE, 0x0, 0x0}},
    {0x2F806, 1, {0x4FBB, 0x0, 0x0}},
    {0x2F807, 1, {0x5002, 0x0, 0x0}},
    {0x2F808, 1, {0x507A, 0x0, 0x0}},
    {0x2F809, 1, {0x5099, 0x0, 0x0}},
    {0x2F80A, 1, {0x50E7, 0x0, 0x0}},
    {0x2F80B, 1, {0x50CF, 0x0, 0x0}},
    {0x2F80C, 1, {0x349E, 0x0, 0x0}},
    {0x2F80D, 1, {0x2063A, 0x0, 0x0}},
    {0x2F80E, 1, {0x514D, 0x0, 0x0}},
    {0x2F80F, 1, {0x5154, 0x0, 0x0}},
    {0x2F810, 1, {0x5164, 0x0, 0x0}},
    {0x2F811, 1, {0x5177, 0x0, 0x0}},
    {0x2F812, 1, {0x2051C, 0x0, 0x0}},
    {0x2F813, 1, {0x34B9, 0x0, 0x0}},
    {0x2F814, 1, {0x5167, 0x0, 0x0}},
    {0x2F815, 1, {0x518D, 0x0, 0x0}},
    {0x2F816, 1, {0x2054B, 0x0, 0x0}},
    {0x2F817, 1, {0x5197, 0x0, 0x0}},
    {0x2F818, 1, {0x51A4, 0x0, 0x0}},
    {0x2F819, 1, {0x4ECC, 0x0, 0x0}},
    {0x2F81A, 1, {0x51AC, 0x0, 0x0}},
    {0x2F81B, 1, {0x51B5, 0x0, 0x0}},
    {0x2F81C, 1, {0x291DF, 0x0, 0x0}},
    {0x2F81D, 1, {0x51F5, 0x0, 0x0}},
    {0x2F81E, 1, {0x5203, 0x0, 0x0}},
    {0x2F81F, 1, {0x34DF, 0x0, 0x0}},
    {0x2F820, 1, {0x523B, 0x0, 0x0}},
    {0x2F821, 1, {0x5246, 0x0, 0x0}},
    {0x2F822, 1, {0x5272, 0x0, 0x0}},
    {0x2F823, 1, {0x5277, 0x0, 0x0}},
    {0x2F824, 1, {0x3515, 0x0, 0x0}},
    {0x2F825, 1, {0x52C7, 0x0, 0x0}},
    {0x2F826, 1, {0x52C9, 0x0, 0x0}},
    {0x2F827, 1, {0x52E4, 0x0, 0x0}},
    {0x2F828, 1, {0x52FA, 0x0, 0x0}},
    {0x2F829, 1, {0x5305, 0x0, 0x0}},
    {0x2F82A, 1, {0x5306, 0x0, 0x0}},
    {0x2F82B, 1, {0x5317, 0x0, 0x0}},
    {0x2F82C, 1, {0x5349, 0x0, 0x0}},
    {0x2F82D, 1, {0x5351, 0x0, 0x0}},
    {0x2F82E, 1, {0x535A, 0x0, 0x0}},
    {0x2F82F, 1, {0x5373, 0x0, 0x0}},
    {0x2F830, 1, {0x537D, 0x0, 0x0}},
    {0x2F831, 1, {0x537F, 0x0, 0x0}},
    {0x2F832, 1, {0x537F, 0x0, 0x0}},
    {0x2F833, 1, {0x537F, 0x0, 0x0}},
    {0x2F834, 1, {0x20A2C, 0x0, 0x0}},
    {0x2F835, 1, {0x7070, 0x0, 0x0}},
    {0x2F836, 1, {0x53CA, 0x0, 0x0}},
    {0x2F837, 1, {0x53DF, 0x0, 0x0}},
    {0x2F838, 1, {0x20B63, 0x0, 0x0}},
    {0x2F839, 1, {0x53EB, 0x0, 0x0}},
    {0x2F83A, 1, {0x53F1, 0x0, 0x0}},
    {0x2F83B, 1, {0x5406, 0x0, 0x0}},
    {0x2F83C, 1, {0x549E, 0x0, 0x0}},
    {0x2F83D, 1, {0x5438, 0x0, 0x0}},
    {0x2F83E, 1, {0x5448, 0x0, 0x0}},
    {0x2F83F, 1, {0x5468, 0x0, 0x0}},
    {0x2F840, 1, {0x54A2, 0x0, 0x0}},
    {0x2F841, 1, {0x54F6, 0x0, 0x0}},
    {0x2F842, 1, {0x5510, 0x0, 0x0}},
    {0x2F843, 1, {0x5553, 0x0, 0x0}},
    {0x2F844, 1, {0x5563, 0x0, 0x0}},
    {0x2F845, 1, {0x5584, 0x0, 0x0}},
    {0x2F846, 1, {0x5584, 0x0, 0x0}},
    {0x2F847, 1, {0x5599, 0x0, 0x0}},
    {0x2F848, 1, {0x55AB, 0x0, 0x0}},
    {0x2F849, 1, {0x55B3, 0x0, 0x0}},
    {0x2F84A, 1, {0x55C2, 0x0, 0x0}},
    {0x2F84B, 1, {0x5716, 0x0, 0x0}},
    {0x2F84C, 1, {0x5606, 0x0, 0x0}},
    {0x2F84D, 1, {0x5717, 0x0, 0x0}},
    {0x2F84E, 1, {0x5651, 0x0, 0x0}},
    {0x2F84F, 1, {0x5674, 0x0, 0x0}},
    {0x2F850, 1, {0x5207, 0x0, 0x0}},
    {0x2F851, 1, {0x58EE, 0x0, 0x0}},
    {0x2F852, 1, {0x57CE, 0x0, 0x0}},
    {0x2F853, 1, {0x57F4, 0x0, 0x0}},
    {0x2F854, 1, {0x580D, 0x0, 0x0}},
    {0x2F855, 1, {0x578B, 0x0, 0x0}},
    {0x2F856, 1, {0x5832, 0x0, 0x0}},
    {0x2F857, 1, {0x5831, 0x0, 0x0}},
    {0x2F858, 1, {0x58AC, 0x0, 0x0}},
    {0x2F859, 1, {0x214E4, 0x0, 0x0}},
    {0x2F85A, 1, {0x58F2, 0x0, 0x0}},
    {0x2F85B, 1, {0x58F7, 0x0, 0x0}},
    {0x2F85C, 1, {0x5906, 0x0, 0x0}},
    {0x2F85D, 1, {0x591A, 0x0, 0x0}},
    {0x2F85E, 1, {0x5922, 0x0, 0x0}},
    {0x2F85F, 1, {0x5962, 0x0, 0x0}},
    {0x2F860, 1, {0x216A8, 0x0, 0x0}},
    {0x2F861, 1, {0x216EA, 0x0, 0x0}},
    {0x2F862, 1, {0x59EC, 0x0, 0x0}},
    {0x2F863, 1, {0x5A1B, 0x0, 0x0}},
    {0x2F864, 1, {0x5A27, 0x0, 0x0}},
    {0x2F865, 1, {0x59D8, 0x0, 0x0}},
    {0x2F866, 1, {0x5A66, 0x0, 0x0}},
    {0x2F867, 1, {0x36EE, 0x0, 0x0}},
    {0x2F868, 1, {0x36FC, 0x0, 0x0}},
    {0x2F869, 1, {0x5B08, 0x0, 0x0}},
    {0x2F86A, 1, {0x5B3E, 0x0, 0x0}},
    {0x2F86B, 1, {0x5B3E, 0x0, 0x0}},
    {0x2F86C, 1, {0x219C8, 0x0, 0x0}},
    {0x2F86D, 1, {0x5BC3, 0x0, 0x0}},
    {0x2F86E, 1, {0x5BD8, 0x0, 0x0}},
    {0x2F86F, 1, {0x5BE7, 0x0, 0x0}},
    {0x2F870, 1, {0x5BF3, 0x0, 0x0}},
    {0x2F871, 1, {0x21B18, 0x0, 0x0}},
    {0x2F872, 1, {0x5BFF, 0x0, 0x0}},
    {0x2F873, 1, {0x5C06, 0x0, 0x0}},
    {0x2F874, 1, {0x5F53, 0x0, 0x0}},
    {0x2F875, 1, {0x5C22, 0x0, 0x0}},
    {0x2F876, 1, {0x3781, 0x0, 0x0}},
    {0x2F877, 1, {0x5C60, 0x0, 0x0}},
    {0x2F878, 1, {0x5C6E, 0x0, 0x0}},
    {0x2F879, 1, {0x5CC0, 0x0, 0x0}},
    {0x2F87A, 1, {0x5C8D, 0x0, 0x0}},
    {0x2F87B, 1, {0x21DE4, 0x0, 0x0}},
    {0x2F87C, 1, {0x5D43, 0x0, 0x0}},
    {0x2F87D, 1, {0x21DE6, 0x0, 0x0}},
    {0x2F87E, 1, {0x5D6E, 0x0, 0x0}},
    {0x2F87F, 1, {0x5D6B, 0x0, 0x0}},
    {0x2F880, 1, {0x5D7C, 0x0, 0x0}},
    {0x2F881, 1, {0x5DE1, 0x0, 0x0}},
    {0x2F882, 1, {0x5DE2, 0x0, 0x0}},
    {0x2F883, 1, {0x382F, 0x0, 0x0}},
    {0x2F884, 1, {0x5DFD, 0x0, 0x0}},
    {0x2F885, 1, {0x5E28, 0x0, 0x0}},
    {0x2F886, 1, {0x5E3D, 0x0, 0x0}},
    {0x2F887, 1, {0x5E69, 0x0, 0x0}},
    {0x2F888, 1, {0x3862, 0x0, 0x0}},
    {0x2F889, 1, {0x22183, 0x0, 0x0}},
    {0x2F88A, 1, {0x387C, 0x0, 0x0}},
    {0x2F88B, 1, {0x5EB0, 0x0, 0x0}},
    {0x2F88C, 1, {0x5EB3, 0x0, 0x0}},
    {0x2F88D, 1, {0x5EB6, 0x0, 0x0}},
    {0x2F88E, 1, {0x5ECA, 0x0, 0x0}},
    {0x2F88F, 1, {0x2A392, 0x0, 0x0}},
    {0x2F890, 1, {0x5EFE, 0x0, 0x0}},
    {0x2F891, 1, {0x22331, 0x0, 0x0}},
    {0x2F892, 1, {0x22331, 0x0, 0x0}},
    {0x2F893, 1, {0x8201, 0x0, 0x0}},
    {0x2F894, 1, {0x5F22, 0x0, 0x0}},
    {0x2F895, 1, {0x5F22, 0x0, 0x0}},
    {0x2F896, 1, {0x38C7, 0x0, 0x0}},
    {0x2F897, 1, {0x232B8, 0x0, 0x0}},
    {0x2F898, 1, {0x261DA, 0x0, 0x0}},
    {0x2F899, 1, {0x5F62, 0x0, 0x0}},
    {0x2F89A, 1, {0x5F6B, 0x0, 0x0}},
    {0x2F89B, 1, {0x38E3, 0x0, 0x0}},
    {0x2F89C, 1, {0x5F9A, 0x0, 0x0}},
    {0x2F89D, 1, {0x5FCD, 0x0, 0x0}},
    {0x2F89E, 1, {0x5FD7, 0x0, 0x0}},
    {0x2F89F, 1, {0x5FF9, 0x0, 0x0}},
    {0x2F8A0, 1, {0x6081, 0x0, 0x0}},
    {0x2F8A1, 1, {0x393A, 0x0, 0x0}},
    {0x2F8A2, 1, {0x391C, 0x0, 0x0}},
    {0x2F8A3, 1, {0x6094, 0x0, 0x0}},
    {0x2F8A4, 1, {0x226D4, 0x0, 0x0}},
    {0x2F8A5, 1, {0x60C7, 0x0, 0x0}},
    {0x2F8A6, 1, {0x6148, 0x0, 0x0}},
    {0x2F8A7, 1, {0x614C, 0x0, 0x0}},
    {0x2F8A8, 1, {0x614E, 0x0, 0x0}},
    {0x2F8A9, 1, {0x614C, 0x0, 0x0}},
    {0x2F8AA, 1, {0x617A, 0x0, 0x0}},
    {0x2F8AB, 1, {0x618E, 0x0, 0x0}},
    {0x2F8AC, 1, {0x61B2, 0x0, 0x0}},
    {0x2F8AD, 1, {0x61A4, 0x0, 0x0}},
    {0x2F8AE, 1, {0x61AF, 0x0, 0x0}},
    {0x2F8AF, 1, {0x61DE, 0x0, 0x0}},
    {0x2F8B0, 1, {0x61F2, 0x0, 0x0}},
    {0x2F8B1, 1, {0x61F6, 0x0, 0x0}},
    {0x2F8B2, 1, {0x6210, 0x0, 0x0}},
    {0x2F8B3, 1, {0x621B, 0x0, 0x0}},
    {0x2F8B4, 1, {0x625D, 0x0, 0x0}},
    {0x2F8B5, 1, {0x62B1, 0x0, 0x0}},
    {0x2F8B6, 1, {0x62D4, 0x0, 0x0}},
    {0x2F8B7, 1, {0x6350, 0x0, 0x0}},
    {0x2F8B8, 1, {0x22B0C, 0x0, 0x0}},
    {0x2F8B9, 1, {0x633D, 0x0, 0x0}},
    {0x2F8BA, 1, {0x62FC, 0x0, 0x0}},
    {0x2F8BB, 1, {0x6368, 0x0, 0x0}},
    {0x2F8BC, 1, {0x6383, 0x0, 0x0}},
    {0x2F8BD, 1, {0x63E4, 0x0, 0x0}},
    {0x2F8BE, 1, {0x22BF1, 0x0, 0x0}},
    {0x2F8BF, 1, {0x6422, 0x0, 0x0}},
    {0x2F8C0, 1, {0x63C5, 0x0, 0x0}},
    {0x2F8C1, 1, {0x63A9, 0x0, 0x0}},
    {0x2F8C2, 1, {0x3A2E, 0x0, 0x0}},
    {0x2F8C3, 1, {0x6469, 0x0, 0x0}},
    {0x2F8C4, 1, {0x647E, 0x0, 0x0}},
    {0x2F8C5, 1, {0x649D, 0x0, 0x0}},
    {0x2F8C6, 1, {0x6477, 0x0, 0x0}},
    {0x2F8C7, 1, {0x3A6C, 0x0, 0x0}},
    {0x2F8C8, 1, {0x654F, 0x0, 0x0}},
    {0x2F8C9, 1, {0x656C, 0x0, 0x0}},
    {0x2F8CA, 1, {0x2300A, 0x0, 0x0}},
    {0x2F8CB, 1, {0x65E3, 0x0, 0x0}},
    {0x2F8CC, 1, {0x66F8, 0x0, 0x0}},
    {0x2F8CD, 1, {0x6649, 0x0, 0x0}},
    {0x2F8CE, 1, {0x3B19, 0x0, 0x0}},
    {0x2F8CF, 1, {0x6691, 0x0, 0x0}},
    {0x2F8D0, 1, {0x3B08, 0x0, 0x0}},
    {0x2F8D1, 1, {0x3AE4, 0x0, 0x0}},
    {0x2F8D2, 1, {0x5192, 0x0, 0x0}},
    {0x2F8D3, 1, {0x5195, 0x0, 0x0}},
    {0x2F8D4, 1, {0x6700, 0x0, 0x0}},
    {0x2F8D5, 1, {0x669C, 0x0, 0x0}},
    {0x2F8D6, 1, {0x80AD, 0x0, 0x0}},
    {0x2F8D7, 1, {0x43D9, 0x0, 0x0}},
    {0x2F8D8, 1, {0x6717, 0x0, 0x0}},
    {0x2F8D9, 1, {0x671B, 0x0, 0x0}},
    {0x2F8DA, 1, {0x6721, 0x0, 0x0}},
    {0x2F8DB, 1, {0x675E, 0x0, 0x0}},
    {0x2F8DC, 1, {0x6753, 0x0, 0x0}},
    {0x2F8DD, 1, {0x233C3, 0x0, 0x0}},
    {0x2F8DE, 1, {0x3B49, 0x0, 0x0}},
    {0x2F8DF, 1, {0x67FA, 0x0, 0x0}},
    {0x2F8E0, 1, {0x6785, 0x0, 0x0}},
    {0x2F8E1, 1, {0x6852, 0x0, 0x0}},
    {0x2F8E2, 1, {0x6885, 0x0, 0x0}},
    {0x2F8E3, 1, {0x2346D, 0x0, 0x0}},
    {0x2F8E4, 1, {0x688E, 0x0, 0x0}},
    {0x2F8E5, 1, {0x681F, 0x0, 0x0}},
    {0x2F8E6, 1, {0x6914, 0x0, 0x0}},
    {0x2F8E7, 1, {0x3B9D, 0x0, 0x0}},
    {0x2F8E8, 1, {0x6942, 0x0, 0x0}},
    {0x2F8E9, 1, {0x69A3, 0x0, 0x0}},
    {0x2F8EA, 1, {0x69EA, 0x0, 0x0}},
    {0x2F8EB, 1, {0x6AA8, 0x0, 0x0}},
    {0x2F8EC, 1, {0x236A3, 0x0, 0x0}},
    {0x2F8ED, 1, {0x6ADB, 0x0, 0x0}},
    {0x2F8EE, 1, {0x3C18, 0x0, 0x0}},
    {0x2F8EF, 1, {0x6B21, 0x0, 0x0}},
    {0x2F8F0, 1, {0x238A7, 0x0, 0x0}},
    {0x2F8F1, 1, {0x6B54, 0x0, 0x0}},
    {0x2F8F2, 1, {0x3C4E, 0x0, 0x0}},
    {0x2F8F3, 1, {0x6B72, 0x0, 0x0}},
    {0x2F8F4, 1, {0x6B9F, 0x0, 0x0}},
    {0x2F8F5, 1, {0x6BBA, 0x0, 0x0}},
    {0x2F8F6, 1, {0x6BBB, 0x0, 0x0}},
    {0x2F8F7, 1, {0x23A8D, 0x0, 0x0}},
    {0x2F8F8, 1, {0x21D0B, 0x0, 0x0}},
    {0x2F8F9, 1, {0x23AFA, 0x0, 0x0}},
    {0x2F8FA, 1, {0x6C4E, 0x0, 0x0}},
    {0x2F8FB, 1, {0x23CBC, 0x0, 0x0}},
    {0x2F8FC, 1, {0x6CBF, 0x0, 0x0}},
    {0x2F8FD, 1, {0x6CCD, 0x0, 0x0}},
    {0x2F8FE, 1, {0x6C67, 0x0, 0x0}},
    {0x2F8FF, 1, {0x6D16, 0x0, 0x0}},
    {0x2F900, 1, {0x6D3E, 0x0, 0x0}},
    {0x2F901, 1, {0x6D77, 0x0, 0x0}},
    {0x2F902, 1, {0x6D41, 0x0, 0x0}},
    {0x2F903, 1, {0x6D69, 0x0, 0x0}},
    {0x2F904, 1, {0x6D78, 0x0, 0x0}},
    {0x2F905, 1, {0x6D85, 0x0, 0x0}},
    {0x2F906, 1, {0x23D1E, 0x0, 0x0}},
    {0x2F907, 1, {0x6D34, 0x0, 0x0}},
    {0x2F908, 1, {0x6E2F, 0x0, 0x0}},
    {0x2F909, 1, {0x6E6E, 0x0, 0x0}},
    {0x2F90A, 1, {0x3D33, 0x0, 0x0}},
    {0x2F90B, 1, {0x6ECB, 0x0, 0x0}},
    {0x2F90C, 1, {0x6EC7, 0x0, 0x0}},
    {0x2F90D, 1, {0x23ED1, 0x0, 0x0}},
    {0x2F90E, 1, {0x6DF9, 0x0, 0x0}},
    {0x2F90F, 1, {0x6F6E, 0x0, 0x0}},
    {0x2F910, 1, {0x23F5E, 0x0, 0x0}},
    {0x2F911, 1, {0x23F8E, 0x0, 0x0}},
    {0x2F912, 1, {0x6FC6, 0x0, 0x0}},
    {0x2F913, 1, {0x7039, 0x0, 0x0}},
    {0x2F914, 1, {0x701E, 0x0, 0x0}},
    {0x2F915, 1, {0x701B, 0x0, 0x0}},
    {0x2F916, 1, {0x3D96, 0x0, 0x0}},
    {0x2F917, 1, {0x704A, 0x0, 0x0}},
    {0x2F918, 1, {0x707D, 0x0, 0x0}},
    {0x2F919, 1, {0x7077, 0x0, 0x0}},
    {0x2F91A, 1, {0x70AD, 0x0, 0x0}},
    {0x2F91B, 1, {0x20525, 0x0, 0x0}},
    {0x2F91C, 1, {0x7145, 0x0, 0x0}},
    {0x2F91D, 1, {0x24263, 0x0, 0x0}},
    {0x2F91E, 1, {0x719C, 0x0, 0x0}},
    {0x2F91F, 1, {0x243AB, 0x0, 0x0}},
    {0x2F920, 1, {0x7228, 0x0, 0x0}},
    {0x2F921, 1, {0x7235, 0x0, 0x0}},
    {0x2F922, 1, {0x7250, 0x0, 0x0}},
    {0x2F923, 1, {0x24608, 0x0, 0x0}},
    {0x2F924, 1, {0x7280, 0x0, 0x0}},
    {0x2F925, 1, {0x7295, 0x0, 0x0}},
    {0x2F926, 1, {0x24735, 0x0, 0x0}},
    {0x2F927, 1, {0x24814, 0x0, 0x0}},
    {0x2F928, 1, {0x737A, 0x0, 0x0}},
    {0x2F929, 1, {0x738B, 0x0, 0x0}},
    {0x2F92A, 1, {0x3EAC, 0x0, 0x0}},
    {0x2F92B, 1, {0x73A5, 0x0, 0x0}},
    {0x2F92C, 1, {0x3EB8, 0x0, 0x0}},
    {0x2F92D, 1, {0x3EB8, 0x0, 0x0}},
    {0x2F92E, 1, {0x7447, 0x0, 0x0}},
    {0x2F92F, 1, {0x745C, 0x0, 0x0}},
    {0x2F930, 1, {0x7471, 0x0, 0x0}},
    {0x2F931, 1, {0x7485, 0x0, 0x0}},
    {0x2F932, 1, {0x74CA, 0x0, 0x0}},
    {0x2F933, 1, {0x3F1B, 0x0, 0x0}},
    {0x2F934, 1, {0x7524, 0x0, 0x0}},
    {0x2F935, 1, {0x24C36, 0x0, 0x0}},
    {0x2F936, 1, {0x753E, 0x0, 0x0}},
    {0x2F937, 1, {0x24C92, 0x0, 0x0}},
    {0x2F938, 1, {0x7570, 0x0, 0x0}},
    {0x2F939, 1, {0x2219F, 0x0, 0x0}},
    {0x2F93A, 1, {0x7610, 0x0, 0x0}},
    {0x2F93B, 1, {0x24FA1, 0x0, 0x0}},
    {0x2F93C, 1, {0x24FB8, 0x0, 0x0}},
    {0x2F93D, 1, {0x25044, 0x0, 0x0}},
    {0x2F93E, 1, {0x3FFC, 0x0, 0x0}},
    {0x2F93F, 1, {0x4008, 0x0, 0x0}},
    {0x2F940, 1, {0x76F4, 0x0, 0x0}},
    {0x2F941, 1, {0x250F3, 0x0, 0x0}},
    {0x2F942, 1, {0x250F2, 0x0, 0x0}},
    {0x2F943, 1, {0x25119, 0x0, 0x0}},
    {0x2F944, 1, {0x25133, 0x0, 0x0}},
    {0x2F945, 1, {0x771E, 0x0, 0x0}},
    {0x2F946, 1, {0x771F, 0x0, 0x0}},
    {0x2F947, 1, {0x771F, 0x0, 0x0}},
    {0x2F948, 1, {0x774A, 0x0, 0x0}},
    {0x2F949, 1, {0x4039, 0x0, 0x0}},
    {0x2F94A, 1, {0x778B, 0x0, 0x0}},
    {0x2F94B, 1, {0x4046, 0x0, 0x0}},
    {0x2F94C, 1, {0x4096, 0x0, 0x0}},
    {0x2F94D, 1, {0x2541D, 0x0, 0x0}},
    {0x2F94E, 1, {0x784E, 0x0, 0x0}},
    {0x2F94F, 1, {0x788C, 0x0, 0x0}},
    {0x2F950, 1, {0x78CC, 0x0, 0x0}},
    {0x2F951, 1, {0x40E3, 0x0, 0x0}},
    {0x2F952, 1, {0x25626, 0x0, 0x0}},
    {0x2F953, 1, {0x7956, 0x0, 0x0}},
    {0x2F954, 1, {0x2569A, 0x0, 0x0}},
    {0x2F955, 1, {0x256C5, 0x0, 0x0}},
    {0x2F956, 1, {0x798F, 0x0, 0x0}},
    {0x2F957, 1, {0x79EB, 0x0, 0x0}},
    {0x2F958, 1, {0x412F, 0x0, 0x0}},
    {0x2F959, 1, {0x7A40, 0x0, 0x0}},
    {0x2F95A, 1, {0x7A4A, 0x0, 0x0}},
    {0x2F95B, 1, {0x7A4F, 0x0, 0x0}},
    {0x2F95C, 1, {0x2597C, 0x0, 0x0}},
    {0x2F95D, 1, {0x25AA7, 0x0, 0x0}},
    {0x2F95E, 1, {0x25AA7, 0x0, 0x0}},
    {0x2F95F, 1, {0x7AEE, 0x0, 0x0}},
    {0x2F960, 1, {0x4202, 0x0, 0x0}},
    {0x2F961, 1, {0x25BAB, 0x0, 0x0}},
    {0x2F962, 1, {0x7BC6, 0x0, 0x0}},
    {0x2F963, 1, {0x7BC9, 0x0, 0x0}},
    {0x2F964, 1, {0x4227, 0x0, 0x0}},
    {0x2F965, 1, {0x25C80, 0x0, 0x0}},
    {0x2F966, 1, {0x7CD2, 0x0, 0x0}},
    {0x2F967, 1, {0x42A0, 0x0, 0x0}},
    {0x2F968, 1, {0x7CE8, 0x0, 0x0}},
    {0x2F969, 1, {0x7CE3, 0x0, 0x0}},
    {0x2F96A, 1, {0x7D00, 0x0, 0x0}},
    {0x2F96B, 1, {0x25F86, 0x0, 0x0}},
    {0x2F96C, 1, {0x7D63, 0x0, 0x0}},
    {0x2F96D, 1, {0x4301, 0x0, 0x0}},
    {0x2F96E, 1, {0x7DC7, 0x0, 0x0}},
    {0x2F96F, 1, {0x7E02, 0x0, 0x0}},
    {0x2F970, 1, {0x7E45, 0x0, 0x0}},
    {0x2F971, 1, {0x4334, 0x0, 0x0}},
    {0x2F972, 1, {0x26228, 0x0, 0x0}},
    {0x2F973, 1, {0x26247, 0x0, 0x0}},
    {0x2F974, 1, {0x4359, 0x0, 0x0}},
    {0x2F975, 1, {0x262D9, 0x0, 0x0}},
    {0x2F976, 1, {0x7F7A, 0x0, 0x0}},
    {0x2F977, 1, {0x2633E, 0x0, 0x0}},
    {0x2F978, 1, {0x7F95, 0x0, 0x0}},
    {0x2F979, 1, {0x7FFA, 0x0, 0x0}},
    {0x2F97A, 1, {0x8005, 0x0, 0x0}},
    {0x2F97B, 1, {0x264DA, 0x0, 0x0}},
    {0x2F97C, 1, {0x26523, 0x0, 0x0}},
    {0x2F97D, 1, {0x8060, 0x0, 0x0}},
    {0x2F97E, 1, {0x265A8, 0x0, 0x0}},
    {0x2F97F, 1, {0x8070, 0x0, 0x0}},
    {0x2F980, 1, {0x2335F, 0x0, 0x0}},
    {0x2F981, 1, {0x43D5, 0x0, 0x0}},
    {0x2F982, 1, {0x80B2, 0x0, 0x0}},
    {0x2F983, 1, {0x8103, 0x0, 0x0}},
    {0x2F984, 1, {0x440B, 0x0, 0x0}},
    {0x2F985, 1, {0x813E, 0x0, 0x0}},
    {0x2F986, 1, {0x5AB5, 0x0, 0x0}},
    {0x2F987, 1, {0x267A7, 0x0, 0x0}},
    {0x2F988, 1, {0x267B5, 0x0, 0x0}},
    {0x2F989, 1, {0x23393, 0x0, 0x0}},
    {0x2F98A, 1, {0x2339C, 0x0, 0x0}},
    {0x2F98B, 1, {0x8201, 0x0, 0x0}},
    {0x2F98C, 1, {0x8204, 0x0, 0x0}},
    {0x2F98D, 1, {0x8F9E, 0x0, 0x0}},
    {0x2F98E, 1, {0x446B, 0x0, 0x0}},
    {0x2F98F, 1, {0x8291, 0x0, 0x0}},
    {0x2F990, 1, {0x828B, 0x0, 0x0}},
    {0x2F991, 1, {0x829D, 0x0, 0x0}},
    {0x2F992, 1, {0x52B3, 0x0, 0x0}},
    {0x2F993, 1, {0x82B1, 0x0, 0x0}},
    {0x2F994, 1, {0x82B3, 0x0, 0x0}},
    {0x2F995, 1, {0x82BD, 0x0, 0x0}},
    {0x2F996, 1, {0x82E6, 0x0, 0x0}},
    {0x2F997, 1, {0x26B3C, 0x0, 0x0}},
    {0x2F998, 1, {0x82E5, 0x0, 0x0}},
    {0x2F999, 1, {0x831D, 0x0, 0x0}},
    {0x2F99A, 1, {0x8363, 0x0, 0x0}},
    {0x2F99B, 1, {0x83AD, 0x0, 0x0}},
    {0x2F99C, 1, {0x8323, 0x0, 0x0}},
    {0x2F99D, 1, {0x83BD, 0x0, 0x0}},
    {0x2F99E, 1, {0x83E7, 0x0, 0x0}},
    {0x2F99F, 1, {0x8457, 0x0, 0x0}},
    {0x2F9A0, 1, {0x8353, 0x0, 0x0}},
    {0x2F9A1, 1, {0x83CA, 0x0, 0x0}},
    {0x2F9A2, 1, {0x83CC, 0x0, 0x0}},
    {0x2F9A3, 1, {0x83DC, 0x0, 0x0}},
    {0x2F9A4, 1, {0x26C36, 0x0, 0x0}},
    {0x2F9A5, 1, {0x26D6B, 0x0, 0x0}},
    {0x2F9A6, 1, {0x26CD5, 0x0, 0x0}},
    {0x2F9A7, 1, {0x452B, 0x0, 0x0}},
    {0x2F9A8, 1, {0x84F1, 0x0, 0x0}},
    {0x2F9A9, 1, {0x84F3, 0x0, 0x0}},
    {0x2F9AA, 1, {0x8516, 0x0, 0x0}},
    {0x2F9AB, 1, {0x273CA, 0x0, 0x0}},
    {0x2F9AC, 1, {0x8564, 0x0, 0x0}},
    {0x2F9AD, 1, {0x26F2C, 0x0, 0x0}},
    {0x2F9AE, 1, {0x455D, 0x0, 0x0}},
    {0x2F9AF, 1, {0x4561, 0x0, 0x0}},
    {0x2F9B0, 1, {0x26FB1, 0x0, 0x0}},
    {0x2F9B1, 1, {0x270D2, 0x0, 0x0}},
    {0x2F9B2, 1, {0x456B, 0x0, 0x0}},
    {0x2F9B3, 1, {0x8650, 0x0, 0x0}},
    {0x2F9B4, 1, {0x865C, 0x0, 0x0}},
    {0x2F9B5, 1, {0x8667, 0x0, 0x0}},
    {0x2F9B6, 1, {0x8669, 0x0, 0x0}},
    {0x2F9B7, 1, {0x86A9, 0x0, 0x0}},
    {0x2F9B8, 1, {0x8688, 0x0, 0x0}},
    {0x2F9B9, 1, {0x870E, 0x0, 0x0}},
    {0x2F9BA, 1, {0x86E2, 0x0, 0x0}},
    {0x2F9BB, 1, {0x8779, 0x0, 0x0}},
    {0x2F9BC, 1, {0x8728, 0x0, 0x0}},
    {0x2F9BD, 1, {0x876B, 0x0, 0x0}},
    {0x2F9BE, 1, {0x8786, 0x0, 0x0}},
    {0x2F9BF, 1, {0x45D7, 0x0, 0x0}},
    {0x2F9C0, 1, {0x87E1, 0x0, 0x0}},
    {0x2F9C1, 1, {0x8801, 0x0, 0x0}},
    {0x2F9C2, 1, {0x45F9, 0x0, 0x0}},
    {0x2F9C3, 1, {0x8860, 0x0, 0x0}},
    {0x2F9C4, 1, {0x8863, 0x0, 0x0}},
    {0x2F9C5, 1, {0x27667, 0x0, 0x0}},
    {0x2F9C6, 1, {0x88D7, 0x0, 0x0}},
    {0x2F9C7, 1, {0x88DE, 0x0, 0x0}},
    {0x2F9C8, 1, {0x4635, 0x0, 0x0}},
    {0x2F9C9, 1, {0x88FA, 0x0, 0x0}},
    {0x2F9CA, 1, {0x34BB, 0x0, 0x0}},
    {0x2F9CB, 1, {0x278AE, 0x0, 0x0}},
    {0x2F9CC, 1, {0x27966, 0x0, 0x0}},
    {0x2F9CD, 1, {0x46BE, 0x0, 0x0}},
    {0x2F9CE, 1, {0x46C7, 0x0, 0x0}},
    {0x2F9CF, 1, {0x8AA0, 0x0, 0x0}},
    {0x2F9D0, 1, {0x8AED, 0x0, 0x0}},
    {0x2F9D1, 1, {0x8B8A, 0x0, 0x0}},
    {0x2F9D2, 1, {0x8C55, 0x0, 0x0}},
    {0x2F9D3, 1, {0x27CA8, 0x0, 0x0}},
    {0x2F9D4, 1, {0x8CAB, 0x0, 0x0}},
    {0x2F9D5, 1, {0x8CC1, 0x0, 0x0}},
    {0x2F9D6, 1, {0x8D1B, 0x0, 0x0}},
    {0x2F9D7, 1, {0x8D77, 0x0, 0x0}},
    {0x2F9D8, 1, {0x27F2F, 0x0, 0x0}},
    {0x2F9D9, 1, {0x20804, 0x0, 0x0}},
    {0x2F9DA, 1, {0x8DCB, 0x0, 0x0}},
    {0x2F9DB, 1, {0x8DBC, 0x0, 0x0}},
    {0x2F9DC, 1, {0x8DF0, 0x0, 0x0}},
    {0x2F9DD, 1, {0x208DE, 0x0, 0x0}},
    {0x2F9DE, 1, {0x8ED4, 0x0, 0x0}},
    {0x2F9DF, 1, {0x8F38, 0x0, 0x0}},
    {0x2F9E0, 1, {0x285D2, 0x0, 0x0}},
    {0x2F9E1, 1, {0x285ED, 0x0, 0x0}},
    {0x2F9E2, 1, {0x9094, 0x0, 0x0}},
    {0x2F9E3, 1, {0x90F1, 0x0, 0x0}},
    {0x2F9E4, 1, {0x9111, 0x0, 0x0}},
    {0x2F9E5, 1, {0x2872E, 0x0, 0x0}},
    {0x2F9E6, 1, {0x911B, 0x0, 0x0}},
    {0x2F9E7, 1, {0x9238, 0x0, 0x0}},
    {0x2F9E8, 1, {0x92D7, 0x0, 0x0}},
    {0x2F9E9, 1, {0x92D8, 0x0, 0x0}},
    {0x2F9EA, 1, {0x927C, 0x0, 0x0}},
    {0x2F9EB, 1, {0x93F9, 0x0, 0x0}},
    {0x2F9EC, 1, {0x9415, 0x0, 0x0}},
    {0x2F9ED, 1, {0x28BFA, 0x0, 0x0}},
    {0x2F9EE, 1, {0x958B, 0x0, 0x0}},
    {0x2F9EF, 1, {0x4995, 0x0, 0x0}},
    {0x2F9F0, 1, {0x95B7, 0x0, 0x0}},
    {0x2F9F1, 1, {0x28D77, 0x0, 0x0}},
    {0x2F9F2, 1, {0x49E6, 0x0, 0x0}},
    {0x2F9F3, 1, {0x96C3, 0x0, 0x0}},
    {0x2F9F4, 1, {0x5DB2, 0x0, 0x0}},
    {0x2F9F5, 1, {0x9723, 0x0, 0x0}},
    {0x2F9F6, 1, {0x29145, 0x0, 0x0}},
    {0x2F9F7, 1, {0x2921A, 0x0, 0x0}},
    {0x2F9F8, 1, {0x4A6E, 0x0, 0x0}},
    {0x2F9F9, 1, {0x4A76, 0x0, 0x0}},
    {0x2F9FA, 1, {0x97E0, 0x0, 0x0}},
    {0x2F9FB, 1, {0x2940A, 0x0, 0x0}},
    {0x2F9FC, 1, {0x4AB2, 0x0, 0x0}},
    {0x2F9FD, 1, {0x29496, 0x0, 0x0}},
    {0x2F9FE, 1, {0x980B, 0x0, 0x0}},
    {0x2F9FF, 1, {0x980B, 0x0, 0x0}},
    {0x2FA00, 1, {0x9829, 0x0, 0x0}},
    {0x2FA01, 1, {0x295B6, 0x0, 0x0}},
    {0x2FA02, 1, {0x98E2, 0x0, 0x0}},
    {0x2FA03, 1, {0x4B33, 0x0, 0x0}},
    {0x2FA04, 1, {0x9929, 0x0, 0x0}},
    {0x2FA05, 1, {0x99A7, 0x0, 0x0}},
    {0x2FA06, 1, {0x99C2, 0x0, 0x0}},
    {0x2FA07, 1, {0x99FE, 0x0, 0x0}},
    {0x2FA08, 1, {0x4BCE, 0x0, 0x0}},
    {0x2FA09, 1, {0x29B30, 0x0, 0x0}},
    {0x2FA0A, 1, {0x9B12, 0x0, 0x0}},
    {0x2FA0B, 1, {0x9C40, 0x0, 0x0}},
    {0x2FA0C, 1, {0x9CFD, 0x0, 0x0}},
    {0x2FA0D, 1, {0x4CCE, 0x0, 0x0}},
    {0x2FA0E, 1, {0x4CED, 0x0, 0x0}},
    {0x2FA0F, 1, {0x9D67, 0x0, 0x0}},
    {0x2FA10, 1, {0x2A0CE, 0x0, 0x0}},
    {0x2FA11, 1, {0x4CF8, 0x0, 0x0}},
    {0x2FA12, 1, {0x2A105, 0x0, 0x0}},
    {0x2FA13, 1, {0x2A20E, 0x0, 0x0}},
    {0x2FA14, 1, {0x2A291, 0x0, 0x0}},
    {0x2FA15, 1, {0x9EBB, 0x0, 0x0}},
    {0x2FA16, 1, {0x4D56, 0x0, 0x0}},
    {0x2FA17, 1, {0x9EF9, 0x0, 0x0}},
    {0x2FA18, 1, {0x9EFE, 0x0, 0x0}},
    {0x2FA19, 1, {0x9F05, 0x0, 0x0}},
    {0x2FA1A, 1, {0x9F0F, 0x0, 0x0}},
    {0x2FA1B, 1, {0x9F16, 0x0, 0x0}},
    {0x2FA1C, 1, {0x9F3B, 0x0, 0x0}},
    {0x2FA1D, 1, {0x2A600, 0x0, 0x0}},
}};

}  // namespace bertsa::unicode
