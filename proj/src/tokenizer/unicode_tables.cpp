// Generated by scripts/gen_unicode_tables.py. Do not edit.
// regex 2026.7.10, ftfy 6.3.1, Python 3.10.12

#include "unicode_tables.hpp"

namespace texttiger::tokenizer::tables {

const std::array<CodepointRange, 684> kLetters = {{
    {0x41, 0x5A},
    {0x61, 0x7A},
    {0xAA, 0xAA},
    {0xB5, 0xB5},
    {0xBA, 0xBA},
    {0xC0, 0xD6},
    {0xD8, 0xF6},
    {0xF8, 0x2C1},
    {0x2C6, 0x2D1},
    {0x2E0, 0x2E4},
    {0x2EC, 0x2EC},
    {0x2EE, 0x2EE},
    {0x370, 0x374},
    {0x376, 0x377},
    {0x37A, 0x37D},
    {0x37F, 0x37F},
    {0x386, 0x386},
    {0x388, 0x38A},
    {0x38C, 0x38C},
    {0x38E, 0x3A1},
    {0x3A3, 0x3F5},
    {0x3F7, 0x481},
    {0x48A, 0x52F},
    {0x531, 0x556},
    {0x559, 0x559},
    {0x560, 0x588},
    {0x5D0, 0x5EA},
    {0x5EF, 0x5F2},
    {0x620, 0x64A},
    {0x66E, 0x66F},
    {0x671, 0x6D3},
    {0x6D5, 0x6D5},
    {0x6E5, 0x6E6},
    {0x6EE, 0x6EF},
    {0x6FA, 0x6FC},
    {0x6FF, 0x6FF},
    {0x710, 0x710},
    {0x712, 0x72F},
    {0x74D, 0x7A5},
    {0x7B1, 0x7B1},
    {0x7CA, 0x7EA},
    {0x7F4, 0x7F5},
    {0x7FA, 0x7FA},
    {0x800, 0x815},
    {0x81A, 0x81A},
    {0x824, 0x824},
    {0x828, 0x828},
    {0x840, 0x858},
    {0x860, 0x86A},
    {0x870, 0x887},
    {0x889, 0x88F},
    {0x8A0, 0x8C9},
    {0x904, 0x939},
    {0x93D, 0x93D},
    {0x950, 0x950},
    {0x958, 0x961},
    {0x971, 0x980},
    {0x985, 0x98C},
    {0x98F, 0x990},
    {0x993, 0x9A8},
    {0x9AA, 0x9B0},
    {0x9B2, 0x9B2},
    {0x9B6, 0x9B9},
    {0x9BD, 0x9BD},
    {0x9CE, 0x9CE},
    {0x9DC, 0x9DD},
    {0x9DF, 0x9E1},
    {0x9F0, 0x9F1},
    {0x9FC, 0x9FC},
    {0xA05, 0xA0A},
    {0xA0F, 0xA10},
    {0xA13, 0xA28},
    {0xA2A, 0xA30},
    {0xA32, 0xA33},
    {0xA35, 0xA36},
    {0xA38, 0xA39},
    {0xA59, 0xA5C},
    {0xA5E, 0xA5E},
    {0xA72, 0xA74},
    {0xA85, 0xA8D},
    {0xA8F, 0xA91},
    {0xA93, 0xAA8},
    {0xAAA, 0xAB0},
    {0xAB2, 0xAB3},
    {0xAB5, 0xAB9},
    {0xABD, 0xABD},
    {0xAD0, 0xAD0},
    {0xAE0, 0xAE1},
    {0xAF9, 0xAF9},
    {0xB05, 0xB0C},
    {0xB0F, 0xB10},
    {0xB13, 0xB28},
    {0xB2A, 0xB30},
    {0xB32, 0xB33},
    {0xB35, 0xB39},
    {0xB3D, 0xB3D},
    {0xB5C, 0xB5D},
    {0xB5F, 0xB61},
    {0xB71, 0xB71},
    {0xB83, 0xB83},
    {0xB85, 0xB8A},
    {0xB8E, 0xB90},
    {0xB92, 0xB95},
    {0xB99, 0xB9A},
    {0xB9C, 0xB9C},
    {0xB9E, 0xB9F},
    {0xBA3, 0xBA4},
    {0xBA8, 0xBAA},
    {0xBAE, 0xBB9},
    {0xBD0, 0xBD0},
    {0xC05, 0xC0C},
    {0xC0E, 0xC10},
    {0xC12, 0xC28},
    {0xC2A, 0xC39},
    {0xC3D, 0xC3D},
    {0xC58, 0xC5A},
    {0xC5C, 0xC5D},
    {0xC60, 0xC61},
    {0xC80, 0xC80},
    {0xC85, 0xC8C},
    {0xC8E, 0xC90},
    {0xC92, 0xCA8},
    {0xCAA, 0xCB3},
    {0xCB5, 0xCB9},
    {0xCBD, 0xCBD},
    {0xCDC, 0xCDE},
    {0xCE0, 0xCE1},
    {0xCF1, 0xCF2},
    {0xD04, 0xD0C},
    {0xD0E, 0xD10},
    {0xD12, 0xD3A},
    {0xD3D, 0xD3D},
    {0xD4E, 0xD4E},
    {0xD54, 0xD56},
    {0xD5F, 0xD61},
    {0xD7A, 0xD7F},
    {0xD85, 0xD96},
    {0xD9A, 0xDB1},
    {0xDB3, 0xDBB},
    {0xDBD, 0xDBD},
    {0xDC0, 0xDC6},
    {0xE01, 0xE30},
    {0xE32, 0xE33},
    {0xE40, 0xE46},
    {0xE81, 0xE82},
    {0xE84, 0xE84},
    {0xE86, 0xE8A},
    {0xE8C, 0xEA3},
    {0xEA5, 0xEA5},
    {0xEA7, 0xEB0},
    {0xEB2, 0xEB3},
    {0xEBD, 0xEBD},
    {0xEC0, 0xEC4},
    {0xEC6, 0xEC6},
    {0xEDC, 0xEDF},
    {0xF00, 0xF00},
    {0xF40, 0xF47},
    {0xF49, 0xF6C},
    {0xF88, 0xF8C},
    {0x1000, 0x102A},
    {0x103F, 0x103F},
    {0x1050, 0x1055},
    {0x105A, 0x105D},
    {0x1061, 0x1061},
    {0x1065, 0x1066},
    {0x106E, 0x1070},
    {0x1075, 0x1081},
    {0x108E, 0x108E},
    {0x10A0, 0x10C5},
    {0x10C7, 0x10C7},
    {0x10CD, 0x10CD},
    {0x10D0, 0x10FA},
    {0x10FC, 0x1248},
    {0x124A, 0x124D},
    {0x1250, 0x1256},
    {0x1258, 0x1258},
    {0x125A, 0x125D},
    {0x1260, 0x1288},
    {0x128A, 0x128D},
    {0x1290, 0x12B0},
    {0x12B2, 0x12B5},
    {0x12B8, 0x12BE},
    {0x12C0, 0x12C0},
    {0x12C2, 0x12C5},
    {0x12C8, 0x12D6},
    {0x12D8, 0x1310},
    {0x1312, 0x1315},
    {0x1318, 0x135A},
    {0x1380, 0x138F},
    {0x13A0, 0x13F5},
    {0x13F8, 0x13FD},
    {0x1401, 0x166C},
    {0x166F, 0x167F},
    {0x1681, 0x169A},
    {0x16A0, 0x16EA},
    {0x16F1, 0x16F8},
    {0x1700, 0x1711},
    {0x171F, 0x1731},
    {0x1740, 0x1751},
    {0x1760, 0x176C},
    {0x176E, 0x1770},
    {0x1780, 0x17B3},
    {0x17D7, 0x17D7},
    {0x17DC, 0x17DC},
    {0x1820, 0x1878},
    {0x1880, 0x1884},
    {0x1887, 0x18A8},
    {0x18AA, 0x18AA},
    {0x18B0, 0x18F5},
    {0x1900, 0x191E},
    {0x1950, 0x196D},
    {0x1970, 0x1974},
    {0x1980, 0x19AB},
    {0x19B0, 0x19C9},
    {0x1A00, 0x1A16},
    {0x1A20, 0x1A54},
    {0x1AA7, 0x1AA7},
    {0x1B05, 0x1B33},
    {0x1B45, 0x1B4C},
    {0x1B83, 0x1BA0},
    {0x1BAE, 0x1BAF},
    {0x1BBA, 0x1BE5},
    {0x1C00, 0x1C23},
    {0x1C4D, 0x1C4F},
    {0x1C5A, 0x1C7D},
    {0x1C80, 0x1C8A},
    {0x1C90, 0x1CBA},
    {0x1CBD, 0x1CBF},
    {0x1CE9, 0x1CEC},
    {0x1CEE, 0x1CF3},
    {0x1CF5, 0x1CF6},
    {0x1CFA, 0x1CFA},
    {0x1D00, 0x1DBF},
    {0x1E00, 0x1F15},
    {0x1F18, 0x1F1D},
    {0x1F20, 0x1F45},
    {0x1F48, 0x1F4D},
    {0x1F50, 0x1F57},
    {0x1F59, 0x1F59},
    {0x1F5B, 0x1F5B},
    {0x1F5D, 0x1F5D},
    {0x1F5F, 0x1F7D},
    {0x1F80, 0x1FB4},
    {0x1FB6, 0x1FBC},
    {0x1FBE, 0x1FBE},
    {0x1FC2, 0x1FC4},
    {0x1FC6, 0x1FCC},
    {0x1FD0, 0x1FD3},
    {0x1FD6, 0x1FDB},
    {0x1FE0, 0x1FEC},
    {0x1FF2, 0x1FF4},
    {0x1FF6, 0x1FFC},
    {0x2071, 0x2071},
    {0x207F, 0x207F},
    {0x2090, 0x209C},
    {0x2102, 0x2102},
    {0x2107, 0x2107},
    {0x210A, 0x2113},
    {0x2115, 0x2115},
    {0x2119, 0x211D},
    {0x2124, 0x2124},
    {0x2126, 0x2126},
    {0x2128, 0x2128},
    {0x212A, 0x212D},
    {0x212F, 0x2139},
    {0x213C, 0x213F},
    {0x2145, 0x2149},
    {0x214E, 0x214E},
    {0x2183, 0x2184},
    {0x2C00, 0x2CE4},
    {0x2CEB, 0x2CEE},
    {0x2CF2, 0x2CF3},
    {0x2D00, 0x2D25},
    {0x2D27, 0x2D27},
    {0x2D2D, 0x2D2D},
    {0x2D30, 0x2D67},
    {0x2D6F, 0x2D6F},
    {0x2D80, 0x2D96},
    {0x2DA0, 0x2DA6},
    {0x2DA8, 0x2DAE},
    {0x2DB0, 0x2DB6},
    {0x2DB8, 0x2DBE},
    {0x2DC0, 0x2DC6},
    {0x2DC8, 0x2DCE},
    {0x2DD0, 0x2DD6},
    {0x2DD8, 0x2DDE},
    {0x2E2F, 0x2E2F},
    {0x3005, 0x3006},
    {0x3031, 0x3035},
    {0x303B, 0x303C},
    {0x3041, 0x3096},
    {0x309D, 0x309F},
    {0x30A1, 0x30FA},
    {0x30FC, 0x30FF},
    {0x3105, 0x312F},
    {0x3131, 0x318E},
    {0x31A0, 0x31BF},
    {0x31F0, 0x31FF},
    {0x3400, 0x4DBF},
    {0x4E00, 0xA48C},
    {0xA4D0, 0xA4FD},
    {0xA500, 0xA60C},
    {0xA610, 0xA61F},
    {0xA62A, 0xA62B},
    {0xA640, 0xA66E},
    {0xA67F, 0xA69D},
    {0xA6A0, 0xA6E5},
    {0xA717, 0xA71F},
    {0xA722, 0xA788},
    {0xA78B, 0xA7DC},
    {0xA7F1, 0xA801},
    {0xA803, 0xA805},
    {0xA807, 0xA80A},
    {0xA80C, 0xA822},
    {0xA840, 0xA873},
    {0xA882, 0xA8B3},
    {0xA8F2, 0xA8F7},
    {0xA8FB, 0xA8FB},
    {0xA8FD, 0xA8FE},
    {0xA90A, 0xA925},
    {0xA930, 0xA946},
    {0xA960, 0xA97C},
    {0xA984, 0xA9B2},
    {0xA9CF, 0xA9CF},
    {0xA9E0, 0xA9E4},
    {0xA9E6, 0xA9EF},
    {0xA9FA, 0xA9FE},
    {0xAA00, 0xAA28},
    {0xAA40, 0xAA42},
    {0xAA44, 0xAA4B},
    {0xAA60, 0xAA76},
    {0xAA7A, 0xAA7A},
    {0xAA7E, 0xAAAF},
    {0xAAB1, 0xAAB1},
    {0xAAB5, 0xAAB6},
    {0xAAB9, 0xAABD},
    {0xAAC0, 0xAAC0},
    {0xAAC2, 0xAAC2},
    {0xAADB, 0xAADD},
    {0xAAE0, 0xAAEA},
    {0xAAF2, 0xAAF4},
    {0xAB01, 0xAB06},
    {0xAB09, 0xAB0E},
    {0xAB11, 0xAB16},
    {0xAB20, 0xAB26},
    {0xAB28, 0xAB2E},
    {0xAB30, 0xAB5A},
    {0xAB5C, 0xAB69},
    {0xAB70, 0xABE2},
    {0xAC00, 0xD7A3},
    {0xD7B0, 0xD7C6},
    {0xD7CB, 0xD7FB},
    {0xF900, 0xFA6D},
    {0xFA70, 0xFAD9},
    {0xFB00, 0xFB06},
    {0xFB13, 0xFB17},
    {0xFB1D, 0xFB1D},
    {0xFB1F, 0xFB28},
    {0xFB2A, 0xFB36},
    {0xFB38, 0xFB3C},
    {0xFB3E, 0xFB3E},
    {0xFB40, 0xFB41},
    {0xFB43, 0xFB44},
    {0xFB46, 0xFBB1},
    {0xFBD3, 0xFD3D},
    {0xFD50, 0xFD8F},
    {0xFD92, 0xFDC7},
    {0xFDF0, 0xFDFB},
    {0xFE70, 0xFE74},
    {0xFE76, 0xFEFC},
    {0xFF21, 0xFF3A},
    {0xFF41, 0xFF5A},
    {0xFF66, 0xFFBE},
    {0xFFC2, 0xFFC7},
    {0xFFCA, 0xFFCF},
    {0xFFD2, 0xFFD7},
    {0xFFDA, 0xFFDC},
    {0x10000, 0x1000B},
    {0x1000D, 0x10026},
    {0x10028, 0x1003A},
    {0x1003C, 0x1003D},
    {0x1003F, 0x1004D},
    {0x10050, 0x1005D},
    {0x10080, 0x100FA},
    {0x10280, 0x1029C},
    {0x102A0, 0x102D0},
    {0x10300, 0x1031F},
    {0x1032D, 0x10340},
    {0x10342, 0x10349},
    {0x10350, 0x10375},
    {0x10380, 0x1039D},
    {0x103A0, 0x103C3},
    {0x103C8, 0x103CF},
    {0x10400, 0x1049D},
    {0x104B0, 0x104D3},
    {0x104D8, 0x104FB},
    {0x10500, 0x10527},
    {0x10530, 0x10563},
    {0x10570, 0x1057A},
    {0x1057C, 0x1058A},
    {0x1058C, 0x10592},
    {0x10594, 0x10595},
    {0x10597, 0x105A1},
    {0x105A3, 0x105B1},
    {0x105B3, 0x105B9},
    {0x105BB, 0x105BC},
    {0x105C0, 0x105F3},
    {0x10600, 0x10736},
    {0x10740, 0x10755},
    {0x10760, 0x10767},
    {0x10780, 0x10785},
    {0x10787, 0x107B0},
    {0x107B2, 0x107BA},
    {0x10800, 0x10805},
    {0x10808, 0x10808},
    {0x1080A, 0x10835},
    {0x10837, 0x10838},
    {0x1083C, 0x1083C},
    {0x1083F, 0x10855},
    {0x10860, 0x10876},
    {0x10880, 0x1089E},
    {0x108E0, 0x108F2},
    {0x108F4, 0x108F5},
    {0x10900, 0x10915},
    {0x10920, 0x10939},
    {0x10940, 0x10959},
    {0x10980, 0x109B7},
    {0x109BE, 0x109BF},
    {0x10A00, 0x10A00},
    {0x10A10, 0x10A13},
    {0x10A15, 0x10A17},
    {0x10A19, 0x10A35},
    {0x10A60, 0x10A7C},
    {0x10A80, 0x10A9C},
    {0x10AC0, 0x10AC7},
    {0x10AC9, 0x10AE4},
    {0x10B00, 0x10B35},
    {0x10B40, 0x10B55},
    {0x10B60, 0x10B72},
    {0x10B80, 0x10B91},
    {0x10C00, 0x10C48},
    {0x10C80, 0x10CB2},
    {0x10CC0, 0x10CF2},
    {0x10D00, 0x10D23},
    {0x10D4A, 0x10D65},
    {0x10D6F, 0x10D85},
    {0x10E80, 0x10EA9},
    {0x10EB0, 0x10EB1},
    {0x10EC2, 0x10EC7},
    {0x10F00, 0x10F1C},
    {0x10F27, 0x10F27},
    {0x10F30, 0x10F45},
    {0x10F70, 0x10F81},
    {0x10FB0, 0x10FC4},
    {0x10FE0, 0x10FF6},
    {0x11003, 0x11037},
    {0x11071, 0x11072},
    {0x11075, 0x11075},
    {0x11083, 0x110AF},
    {0x110D0, 0x110E8},
    {0x11103, 0x11126},
    {0x11144, 0x11144},
    {0x11147, 0x11147},
    {0x11150, 0x11172},
    {0x11176, 0x11176},
    {0x11183, 0x111B2},
    {0x111C1, 0x111C4},
    {0x111DA, 0x111DA},
    {0x111DC, 0x111DC},
    {0x11200, 0x11211},
    {0x11213, 0x1122B},
    {0x1123F, 0x11240},
    {0x11280, 0x11286},
    {0x11288, 0x11288},
    {0x1128A, 0x1128D},
    {0x1128F, 0x1129D},
    {0x1129F, 0x112A8},
    {0x112B0, 0x112DE},
    {0x11305, 0x1130C},
    {0x1130F, 0x11310},
    {0x11313, 0x11328},
    {0x1132A, 0x11330},
    {0x11332, 0x11333},
    {0x11335, 0x11339},
    {0x1133D, 0x1133D},
    {0x11350, 0x11350},
    {0x1135D, 0x11361},
    {0x11380, 0x11389},
    {0x1138B, 0x1138B},
    {0x1138E, 0x1138E},
    {0x11390, 0x113B5},
    {0x113B7, 0x113B7},
    {0x113D1, 0x113D1},
    {0x113D3, 0x113D3},
    {0x11400, 0x11434},
    {0x11447, 0x1144A},
    {0x1145F, 0x11461},
    {0x11480, 0x114AF},
    {0x114C4, 0x114C5},
    {0x114C7, 0x114C7},
    {0x11580, 0x115AE},
    {0x115D8, 0x115DB},
    {0x11600, 0x1162F},
    {0x11644, 0x11644},
    {0x11680, 0x116AA},
    {0x116B8, 0x116B8},
    {0x11700, 0x1171A},
    {0x11740, 0x11746},
    {0x11800, 0x1182B},
    {0x118A0, 0x118DF},
    {0x118FF, 0x11906},
    {0x11909, 0x11909},
    {0x1190C, 0x11913},
    {0x11915, 0x11916},
    {0x11918, 0x1192F},
    {0x1193F, 0x1193F},
    {0x11941, 0x11941},
    {0x119A0, 0x119A7},
    {0x119AA, 0x119D0},
    {0x119E1, 0x119E1},
    {0x119E3, 0x119E3},
    {0x11A00, 0x11A00},
    {0x11A0B, 0x11A32},
    {0x11A3A, 0x11A3A},
    {0x11A50, 0x11A50},
    {0x11A5C, 0x11A89},
    {0x11A9D, 0x11A9D},
    {0x11AB0, 0x11AF8},
    {0x11BC0, 0x11BE0},
    {0x11C00, 0x11C08},
    {0x11C0A, 0x11C2E},
    {0x11C40, 0x11C40},
    {0x11C72, 0x11C8F},
    {0x11D00, 0x11D06},
    {0x11D08, 0x11D09},
    {0x11D0B, 0x11D30},
    {0x11D46, 0x11D46},
    {0x11D60, 0x11D65},
    {0x11D67, 0x11D68},
    {0x11D6A, 0x11D89},
    {0x11D98, 0x11D98},
    {0x11DB0, 0x11DDB},
    {0x11EE0, 0x11EF2},
    {0x11F02, 0x11F02},
    {0x11F04, 0x11F10},
    {0x11F12, 0x11F33},
    {0x11FB0, 0x11FB0},
    {0x12000, 0x12399},
    {0x12480, 0x12543},
    {0x12F90, 0x12FF0},
    {0x13000, 0x1342F},
    {0x13441, 0x13446},
    {0x13460, 0x143FA},
    {0x14400, 0x14646},
    {0x16100, 0x1611D},
    {0x16800, 0x16A38},
    {0x16A40, 0x16A5E},
    {0x16A70, 0x16ABE},
    {0x16AD0, 0x16AED},
    {0x16B00, 0x16B2F},
    {0x16B40, 0x16B43},
    {0x16B63, 0x16B77},
    {0x16B7D, 0x16B8F},
    {0x16D40, 0x16D6C},
    {0x16E40, 0x16E7F},
    {0x16EA0, 0x16EB8},
    {0x16EBB, 0x16ED3},
    {0x16F00, 0x16F4A},
    {0x16F50, 0x16F50},
    {0x16F93, 0x16F9F},
    {0x16FE0, 0x16FE1},
    {0x16FE3, 0x16FE3},
    {0x16FF2, 0x16FF3},
    {0x17000, 0x18CD5},
    {0x18CFF, 0x18D1E},
    {0x18D80, 0x18DF2},
    {0x1AFF0, 0x1AFF3},
    {0x1AFF5, 0x1AFFB},
    {0x1AFFD, 0x1AFFE},
    {0x1B000, 0x1B122},
    {0x1B132, 0x1B132},
    {0x1B150, 0x1B152},
    {0x1B155, 0x1B155},
    {0x1B164, 0x1B167},
    {0x1B170, 0x1B2FB},
    {0x1BC00, 0x1BC6A},
    {0x1BC70, 0x1BC7C},
    {0x1BC80, 0x1BC88},
    {0x1BC90, 0x1BC99},
    {0x1D400, 0x1D454},
    {0x1D456, 0x1D49C},
    {0x1D49E, 0x1D49F},
    {0x1D4A2, 0x1D4A2},
    {0x1D4A5, 0x1D4A6},
    {0x1D4A9, 0x1D4AC},
    {0x1D4AE, 0x1D4B9},
    {0x1D4BB, 0x1D4BB},
    {0x1D4BD, 0x1D4C3},
    {0x1D4C5, 0x1D505},
    {0x1D507, 0x1D50A},
    {0x1D50D, 0x1D514},
    {0x1D516, 0x1D51C},
    {0x1D51E, 0x1D539},
    {0x1D53B, 0x1D53E},
    {0x1D540, 0x1D544},
    {0x1D546, 0x1D546},
    {0x1D54A, 0x1D550},
    {0x1D552, 0x1D6A5},
    {0x1D6A8, 0x1D6C0},
    {0x1D6C2, 0x1D6DA},
    {0x1D6DC, 0x1D6FA},
    {0x1D6FC, 0x1D714},
    {0x1D716, 0x1D734},
    {0x1D736, 0x1D74E},
    {0x1D750, 0x1D76E},
    {0x1D770, 0x1D788},
    {0x1D78A, 0x1D7A8},
    {0x1D7AA, 0x1D7C2},
    {0x1D7C4, 0x1D7CB},
    {0x1DF00, 0x1DF1E},
    {0x1DF25, 0x1DF2A},
    {0x1E030, 0x1E06D},
    {0x1E100, 0x1E12C},
    {0x1E137, 0x1E13D},
    {0x1E14E, 0x1E14E},
    {0x1E290, 0x1E2AD},
    {0x1E2C0, 0x1E2EB},
    {0x1E4D0, 0x1E4EB},
    {0x1E5D0, 0x1E5ED},
    {0x1E5F0, 0x1E5F0},
    {0x1E6C0, 0x1E6DE},
    {0x1E6E0, 0x1E6E2},
    {0x1E6E4, 0x1E6E5},
    {0x1E6E7, 0x1E6ED},
    {0x1E6F0, 0x1E6F4},
    {0x1E6FE, 0x1E6FF},
    {0x1E7E0, 0x1E7E6},
    {0x1E7E8, 0x1E7EB},
    {0x1E7ED, 0x1E7EE},
    {0x1E7F0, 0x1E7FE},
    {0x1E800, 0x1E8C4},
    {0x1E900, 0x1E943},
    {0x1E94B, 0x1E94B},
    {0x1EE00, 0x1EE03},
    {0x1EE05, 0x1EE1F},
    {0x1EE21, 0x1EE22},
    {0x1EE24, 0x1EE24},
    {0x1EE27, 0x1EE27},
    {0x1EE29, 0x1EE32},
    {0x1EE34, 0x1EE37},
    {0x1EE39, 0x1EE39},
    {0x1EE3B, 0x1EE3B},
    {0x1EE42, 0x1EE42},
    {0x1EE47, 0x1EE47},
    {0x1EE49, 0x1EE49},
    {0x1EE4B, 0x1EE4B},
    {0x1EE4D, 0x1EE4F},
    {0x1EE51, 0x1EE52},
    {0x1EE54, 0x1EE54},
    {0x1EE57, 0x1EE57},
    {0x1EE59, 0x1EE59},
    {0x1EE5B, 0x1EE5B},
    {0x1EE5D, 0x1EE5D},
    {0x1EE5F, 0x1EE5F},
    {0x1EE61, 0x1EE62},
    {0x1EE64, 0x1EE64},
    {0x1EE67, 0x1EE6A},
    {0x1EE6C, 0x1EE72},
    {0x1EE74, 0x1EE77},
    {0x1EE79, 0x1EE7C},
    {0x1EE7E, 0x1EE7E},
    {0x1EE80, 0x1EE89},
    {0x1EE8B, 0x1EE9B},
    {0x1EEA1, 0x1EEA3},
    {0x1EEA5, 0x1EEA9},
    {0x1EEAB, 0x1EEBB},
    {0x20000, 0x2A6DF},
    {0x2A700, 0x2B81D},
    {0x2B820, 0x2CEAD},
    {0x2CEB0, 0x2EBE0},
    {0x2EBF0, 0x2EE5D},
    {0x2F800, 0x2FA1D},
    {0x30000, 0x3134A},
    {0x31350, 0x33479},
}};

const std::array<CodepointRange, 146> kNumbers = {{
    {0x30, 0x39},
    {0xB2, 0xB3},
    {0xB9, 0xB9},
    {0xBC, 0xBE},
    {0x660, 0x669},
    {0x6F0, 0x6F9},
    {0x7C0, 0x7C9},
    {0x966, 0x96F},
    {0x9E6, 0x9EF},
    {0x9F4, 0x9F9},
    {0xA66, 0xA6F},
    {0xAE6, 0xAEF},
    {0xB66, 0xB6F},
    {0xB72, 0xB77},
    {0xBE6, 0xBF2},
    {0xC66, 0xC6F},
    {0xC78, 0xC7E},
    {0xCE6, 0xCEF},
    {0xD58, 0xD5E},
    {0xD66, 0xD78},
    {0xDE6, 0xDEF},
    {0xE50, 0xE59},
    {0xED0, 0xED9},
    {0xF20, 0xF33},
    {0x1040, 0x1049},
    {0x1090, 0x1099},
    {0x1369, 0x137C},
    {0x16EE, 0x16F0},
    {0x17E0, 0x17E9},
    {0x17F0, 0x17F9},
    {0x1810, 0x1819},
    {0x1946, 0x194F},
    {0x19D0, 0x19DA},
    {0x1A80, 0x1A89},
    {0x1A90, 0x1A99},
    {0x1B50, 0x1B59},
    {0x1BB0, 0x1BB9},
    {0x1C40, 0x1C49},
    {0x1C50, 0x1C59},
    {0x2070, 0x2070},
    {0x2074, 0x2079},
    {0x2080, 0x2089},
    {0x2150, 0x2182},
    {0x2185, 0x2189},
    {0x2460, 0x249B},
    {0x24EA, 0x24FF},
    {0x2776, 0x2793},
    {0x2CFD, 0x2CFD},
    {0x3007, 0x3007},
    {0x3021, 0x3029},
    {0x3038, 0x303A},
    {0x3192, 0x3195},
    {0x3220, 0x3229},
    {0x3248, 0x324F},
    {0x3251, 0x325F},
    {0x3280, 0x3289},
    {0x32B1, 0x32BF},
    {0xA620, 0xA629},
    {0xA6E6, 0xA6EF},
    {0xA830, 0xA835},
    {0xA8D0, 0xA8D9},
    {0xA900, 0xA909},
    {0xA9D0, 0xA9D9},
    {0xA9F0, 0xA9F9},
    {0xAA50, 0xAA59},
    {0xABF0, 0xABF9},
    {0xFF10, 0xFF19},
    {0x10107, 0x10133},
    {0x10140, 0x10178},
    {0x1018A, 0x1018B},
    {0x102E1, 0x102FB},
    {0x10320, 0x10323},
    {0x10341, 0x10341},
    {0x1034A, 0x1034A},
    {0x103D1, 0x103D5},
    {0x104A0, 0x104A9},
    {0x10858, 0x1085F},
    {0x10879, 0x1087F},
    {0x108A7, 0x108AF},
    {0x108FB, 0x108FF},
    {0x10916, 0x1091B},
    {0x109BC, 0x109BD},
    {0x109C0, 0x109CF},
    {0x109D2, 0x109FF},
    {0x10A40, 0x10A48},
    {0x10A7D, 0x10A7E},
    {0x10A9D, 0x10A9F},
    {0x10AEB, 0x10AEF},
    {0x10B58, 0x10B5F},
    {0x10B78, 0x10B7F},
    {0x10BA9, 0x10BAF},
    {0x10CFA, 0x10CFF},
    {0x10D30, 0x10D39},
    {0x10D40, 0x10D49},
    {0x10E60, 0x10E7E},
    {0x10F1D, 0x10F26},
    {0x10F51, 0x10F54},
    {0x10FC5, 0x10FCB},
    {0x11052, 0x1106F},
    {0x110F0, 0x110F9},
    {0x11136, 0x1113F},
    {0x111D0, 0x111D9},
    {0x111E1, 0x111F4},
    {0x112F0, 0x112F9},
    {0x11450, 0x11459},
    {0x114D0, 0x114D9},
    {0x11650, 0x11659},
    {0x116C0, 0x116C9},
    {0x116D0, 0x116E3},
    {0x11730, 0x1173B},
    {0x118E0, 0x118F2},
    {0x11950, 0x11959},
    {0x11BF0, 0x11BF9},
    {0x11C50, 0x11C6C},
    {0x11D50, 0x11D59},
    {0x11DA0, 0x11DA9},
    {0x11DE0, 0x11DE9},
    {0x11F50, 0x11F59},
    {0x11FC0, 0x11FD4},
    {0x12400, 0x1246E},
    {0x16130, 0x16139},
    {0x16A60, 0x16A69},
    {0x16AC0, 0x16AC9},
    {0x16B50, 0x16B59},
    {0x16B5B, 0x16B61},
    {0x16D70, 0x16D79},
    {0x16E80, 0x16E96},
    {0x16FF4, 0x16FF6},
    {0x1CCF0, 0x1CCF9},
    {0x1D2C0, 0x1D2D3},
    {0x1D2E0, 0x1D2F3},
    {0x1D360, 0x1D378},
    {0x1D7CE, 0x1D7FF},
    {0x1E140, 0x1E149},
    {0x1E2F0, 0x1E2F9},
    {0x1E4F0, 0x1E4F9},
    {0x1E5F1, 0x1E5FA},
    {0x1E8C7, 0x1E8CF},
    {0x1E950, 0x1E959},
    {0x1EC71, 0x1ECAB},
    {0x1ECAD, 0x1ECAF},
    {0x1ECB1, 0x1ECB4},
    {0x1ED01, 0x1ED2D},
    {0x1ED2F, 0x1ED3D},
    {0x1F100, 0x1F10C},
    {0x1FBF0, 0x1FBF9},
}};

const std::array<CodepointRange, 10> kRegexWhitespace = {{
    {0x9, 0xD},
    {0x20, 0x20},
    {0x85, 0x85},
    {0xA0, 0xA0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x2028, 0x2029},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
}};

const std::array<CodepointRange, 10> kSplitWhitespace = {{
    {0x9, 0xD},
    {0x1C, 0x20},
    {0x85, 0x85},
    {0xA0, 0xA0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x2028, 0x2029},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
}};

const std::array<CodepointMapping, 1393> kLowercase = {{
    {0x41, "a"},
    {0x42, "b"},
    {0x43, "c"},
    {0x44, "d"},
    {0x45, "e"},
    {0x46, "f"},
    {0x47, "g"},
    {0x48, "h"},
    {0x49, "i"},
    {0x4A, "j"},
    {0x4B, "k"},
    {0x4C, "l"},
    {0x4D, "m"},
    {0x4E, "n"},
    {0x4F, "o"},
    {0x50, "p"},
    {0x51, "q"},
    {0x52, "r"},
    {0x53, "s"},
    {0x54, "t"},
    {0x55, "u"},
    {0x56, "v"},
    {0x57, "w"},
    {0x58, "x"},
    {0x59, "y"},
    {0x5A, "z"},
    {0xC0, "\xc3\xa0"},
    {0xC1, "\xc3\xa1"},
    {0xC2, "\xc3\xa2"},
    {0xC3, "\xc3\xa3"},
    {0xC4, "\xc3\xa4"},
    {0xC5, "\xc3\xa5"},
    {0xC6, "\xc3\xa6"},
    {0xC7, "\xc3\xa7"},
    {0xC8, "\xc3\xa8"},
    {0xC9, "\xc3\xa9"},
    {0xCA, "\xc3\xaa"},
    {0xCB, "\xc3\xab"},
    {0xCC, "\xc3\xac"},
    {0xCD, "\xc3\xad"},
    {0xCE, "\xc3\xae"},
    {0xCF, "\xc3\xaf"},
    {0xD0, "\xc3\xb0"},
    {0xD1, "\xc3\xb1"},
    {0xD2, "\xc3\xb2"},
    {0xD3, "\xc3\xb3"},
    {0xD4, "\xc3\xb4"},
    {0xD5, "\xc3\xb5"},
    {0xD6, "\xc3\xb6"},
    {0xD8, "\xc3\xb8"},
    {0xD9, "\xc3\xb9"},
    {0xDA, "\xc3\xba"},
    {0xDB, "\xc3\xbb"},
    {0xDC, "\xc3\xbc"},
    {0xDD, "\xc3\xbd"},
    {0xDE, "\xc3\xbe"},
    {0x100, "\xc4\x81"},
    {0x102, "\xc4\x83"},
    {0x104, "\xc4\x85"},
    {0x106, "\xc4\x87"},
    {0x108, "\xc4\x89"},
    {0x10A, "\xc4\x8b"},
    {0x10C, "\xc4\x8d"},
    {0x10E, "\xc4\x8f"},
    {0x110, "\xc4\x91"},
    {0x112, "\xc4\x93"},
    {0x114, "\xc4\x95"},
    {0x116, "\xc4\x97"},
    {0x118, "\xc4\x99"},
    {0x11A, "\xc4\x9b"},
    {0x11C, "\xc4\x9d"},
    {0x11E, "\xc4\x9f"},
    {0x120, "\xc4\xa1"},
    {0x122, "\xc4\xa3"},
    {0x124, "\xc4\xa5"},
    {0x126, "\xc4\xa7"},
    {0x128, "\xc4\xa9"},
    {0x12A, "\xc4\xab"},
    {0x12C, "\xc4\xad"},
    {0x12E, "\xc4\xaf"},
    {0x130, "i\xcc\x87"},
    {0x132, "\xc4\xb3"},
    {0x134, "\xc4\xb5"},
    {0x136, "\xc4\xb7"},
    {0x139, "\xc4\xba"},
    {0x13B, "\xc4\xbc"},
    {0x13D, "\xc4\xbe"},
    {0x13F, "\xc5\x80"},
    {0x141, "\xc5\x82"},
    {0x143, "\xc5\x84"},
    {0x145, "\xc5\x86"},
    {0x147, "\xc5\x88"},
    {0x14A, "\xc5\x8b"},
    {0x14C, "\xc5\x8d"},
    {0x14E, "\xc5\x8f"},
    {0x150, "\xc5\x91"},
    {0x152, "\xc5\x93"},
    {0x154, "\xc5\x95"},
    {0x156, "\xc5\x97"},
    {0x158, "\xc5\x99"},
    {0x15A, "\xc5\x9b"},
    {0x15C, "\xc5\x9d"},
    {0x15E, "\xc5\x9f"},
    {0x160, "\xc5\xa1"},
    {0x162, "\xc5\xa3"},
    {0x164, "\xc5\xa5"},
    {0x166, "\xc5\xa7"},
    {0x168, "\xc5\xa9"},
    {0x16A, "\xc5\xab"},
    {0x16C, "\xc5\xad"},
    {0x16E, "\xc5\xaf"},
    {0x170, "\xc5\xb1"},
    {0x172, "\xc5\xb3"},
    {0x174, "\xc5\xb5"},
    {0x176, "\xc5\xb7"},
    {0x178, "\xc3\xbf"},
    {0x179, "\xc5\xba"},
    {0x17B, "\xc5\xbc"},
    {0x17D, "\xc5\xbe"},
    {0x181, "\xc9\x93"},
    {0x182, "\xc6\x83"},
    {0x184, "\xc6\x85"},
    {0x186, "\xc9\x94"},
    {0x187, "\xc6\x88"},
    {0x189, "\xc9\x96"},
    {0x18A, "\xc9\x97"},
    {0x18B, "\xc6\x8c"},
    {0x18E, "\xc7\x9d"},
    {0x18F, "\xc9\x99"},
    {0x190, "\xc9\x9b"},
    {0x191, "\xc6\x92"},
    {0x193, "\xc9\xa0"},
    {0x194, "\xc9\xa3"},
    {0x196, "\xc9\xa9"},
    {0x197, "\xc9\xa8"},
    {0x198, "\xc6\x99"},
    {0x19C, "\xc9\xaf"},
    {0x19D, "\xc9\xb2"},
    {0x19F, "\xc9\xb5"},
    {0x1A0, "\xc6\xa1"},
    {0x1A2, "\xc6\xa3"},
    {0x1A4, "\xc6\xa5"},
    {0x1A6, "\xca\x80"},
    {0x1A7, "\xc6\xa8"},
    {0x1A9, "\xca\x83"},
    {0x1AC, "\xc6\xad"},
    {0x1AE, "\xca\x88"},
    {0x1AF, "\xc6\xb0"},
    {0x1B1, "\xca\x8a"},
    {0x1B2, "\xca\x8b"},
    {0x1B3, "\xc6\xb4"},
    {0x1B5, "\xc6\xb6"},
    {0x1B7, "\xca\x92"},
    {0x1B8, "\xc6\xb9"},
    {0x1BC, "\xc6\xbd"},
    {0x1C4, "\xc7\x86"},
    {0x1C5, "\xc7\x86"},
    {0x1C7, "\xc7\x89"},
    {0x1C8, "\xc7\x89"},
    {0x1CA, "\xc7\x8c"},
    {0x1CB, "\xc7\x8c"},
    {0x1CD, "\xc7\x8e"},
    {0x1CF, "\xc7\x90"},
    {0x1D1, "\xc7\x92"},
    {0x1D3, "\xc7\x94"},
    {0x1D5, "\xc7\x96"},
    {0x1D7, "\xc7\x98"},
    {0x1D9, "\xc7\x9a"},
    {0x1DB, "\xc7\x9c"},
    {0x1DE, "\xc7\x9f"},
    {0x1E0, "\xc7\xa1"},
    {0x1E2, "\xc7\xa3"},
    {0x1E4, "\xc7\xa5"},
    {0x1E6, "\xc7\xa7"},
    {0x1E8, "\xc7\xa9"},
    {0x1EA, "\xc7\xab"},
    {0x1EC, "\xc7\xad"},
    {0x1EE, "\xc7\xaf"},
    {0x1F1, "\xc7\xb3"},
    {0x1F2, "\xc7\xb3"},
    {0x1F4, "\xc7\xb5"},
    {0x1F6, "\xc6\x95"},
    {0x1F7, "\xc6\xbf"},
    {0x1F8, "\xc7\xb9"},
    {0x1FA, "\xc7\xbb"},
    {0x1FC, "\xc7\xbd"},
    {0x1FE, "\xc7\xbf"},
    {0x200, "\xc8\x81"},
    {0x202, "\xc8\x83"},
    {0x204, "\xc8\x85"},
    {0x206, "\xc8\x87"},
    {0x208, "\xc8\x89"},
    {0x20A, "\xc8\x8b"},
    {0x20C, "\xc8\x8d"},
    {0x20E, "\xc8\x8f"},
    {0x210, "\xc8\x91"},
    {0x212, "\xc8\x93"},
    {0x214, "\xc8\x95"},
    {0x216, "\xc8\x97"},
    {0x218, "\xc8\x99"},
    {0x21A, "\xc8\x9b"},
    {0x21C, "\xc8\x9d"},
    {0x21E, "\xc8\x9f"},
    {0x220, "\xc6\x9e"},
    {0x222, "\xc8\xa3"},
    {0x224, "\xc8\xa5"},
    {0x226, "\xc8\xa7"},
    {0x228, "\xc8\xa9"},
    {0x22A, "\xc8\xab"},
    {0x22C, "\xc8\xad"},
    {0x22E, "\xc8\xaf"},
    {0x230, "\xc8\xb1"},
    {0x232, "\xc8\xb3"},
    {0x23A, "\xe2\xb1\xa5"},
    {0x23B, "\xc8\xbc"},
    {0x23D, "\xc6\x9a"},
    {0x23E, "\xe2\xb1\xa6"},
    {0x241, "\xc9\x82"},
    {0x243, "\xc6\x80"},
    {0x244, "\xca\x89"},
    {0x245, "\xca\x8c"},
    {0x246, "\xc9\x87"},
    {0x248, "\xc9\x89"},
    {0x24A, "\xc9\x8b"},
    {0x24C, "\xc9\x8d"},
    {0x24E, "\xc9\x8f"},
    {0x370, "\xcd\xb1"},
    {0x372, "\xcd\xb3"},
    {0x376, "\xcd\xb7"},
    {0x37F, "\xcf\xb3"},
    {0x386, "\xce\xac"},
    {0x388, "\xce\xad"},
    {0x389, "\xce\xae"},
    {0x38A, "\xce\xaf"},
    {0x38C, "\xcf\x8c"},
    {0x38E, "\xcf\x8d"},
    {0x38F, "\xcf\x8e"},
    {0x391, "\xce\xb1"},
    {0x392, "\xce\xb2"},
    {0x393, "\xce\xb3"},
    {0x394, "\xce\xb4"},
    {0x395, "\xce\xb5"},
    {0x396, "\xce\xb6"},
    {0x397, "\xce\xb7"},
    {0x398, "\xce\xb8"},
    {0x399, "\xce\xb9"},
    {0x39A, "\xce\xba"},
    {0x39B, "\xce\xbb"},
    {0x39C, "\xce\xbc"},
    {0x39D, "\xce\xbd"},
    {0x39E, "\xce\xbe"},
    {0x39F, "\xce\xbf"},
    {0x3A0, "\xcf\x80"},
    {0x3A1, "\xcf\x81"},
    {0x3A3, "\xcf\x83"},
    {0x3A4, "\xcf\x84"},
    {0x3A5, "\xcf\x85"},
    {0x3A6, "\xcf\x86"},
    {0x3A7, "\xcf\x87"},
    {0x3A8, "\xcf\x88"},
    {0x3A9, "\xcf\x89"},
    {0x3AA, "\xcf\x8a"},
    {0x3AB, "\xcf\x8b"},
    {0x3CF, "\xcf\x97"},
    {0x3D8, "\xcf\x99"},
    {0x3DA, "\xcf\x9b"},
    {0x3DC, "\xcf\x9d"},
    {0x3DE, "\xcf\x9f"},
    {0x3E0, "\xcf\xa1"},
    {0x3E2, "\xcf\xa3"},
    {0x3E4, "\xcf\xa5"},
    {0x3E6, "\xcf\xa7"},
    {0x3E8, "\xcf\xa9"},
    {0x3EA, "\xcf\xab"},
    {0x3EC, "\xcf\xad"},
    {0x3EE, "\xcf\xaf"},
    {0x3F4, "\xce\xb8"},
    {0x3F7, "\xcf\xb8"},
    {0x3F9, "\xcf\xb2"},
    {0x3FA, "\xcf\xbb"},
    {0x3FD, "\xcd\xbb"},
    {0x3FE, "\xcd\xbc"},
    {0x3FF, "\xcd\xbd"},
    {0x400, "\xd1\x90"},
    {0x401, "\xd1\x91"},
    {0x402, "\xd1\x92"},
    {0x403, "\xd1\x93"},
    {0x404, "\xd1\x94"},
    {0x405, "\xd1\x95"},
    {0x406, "\xd1\x96"},
    {0x407, "\xd1\x97"},
    {0x408, "\xd1\x98"},
    {0x409, "\xd1\x99"},
    {0x40A, "\xd1\x9a"},
    {0x40B, "\xd1\x9b"},
    {0x40C, "\xd1\x9c"},
    {0x40D, "\xd1\x9d"},
    {0x40E, "\xd1\x9e"},
    {0x40F, "\xd1\x9f"},
    {0x410, "\xd0\xb0"},
    {0x411, "\xd0\xb1"},
    {0x412, "\xd0\xb2"},
    {0x413, "\xd0\xb3"},
    {0x414, "\xd0\xb4"},
    {0x415, "\xd0\xb5"},
    {0x416, "\xd0\xb6"},
    {0x417, "\xd0\xb7"},
    {0x418, "\xd0\xb8"},
    {0x419, "\xd0\xb9"},
    {0x41A, "\xd0\xba"},
    {0x41B, "\xd0\xbb"},
    {0x41C, "\xd0\xbc"},
    {0x41D, "\xd0\xbd"},
    {0x41E, "\xd0\xbe"},
    {0x41F, "\xd0\xbf"},
    {0x420, "\xd1\x80"},
    {0x421, "\xd1\x81"},
    {0x422, "\xd1\x82"},
    {0x423, "\xd1\x83"},
    {0x424, "\xd1\x84"},
    {0x425, "\xd1\x85"},
    {0x426, "\xd1\x86"},
    {0x427, "\xd1\x87"},
    {0x428, "\xd1\x88"},
    {0x429, "\xd1\x89"},
    {0x42A, "\xd1\x8a"},
    {0x42B, "\xd1\x8b"},
    {0x42C, "\xd1\x8c"},
    {0x42D, "\xd1\x8d"},
    {0x42E, "\xd1\x8e"},
    {0x42F, "\xd1\x8f"},
    {0x460, "\xd1\xa1"},
    {0x462, "\xd1\xa3"},
    {0x464, "\xd1\xa5"},
    {0x466, "\xd1\xa7"},
    {0x468, "\xd1\xa9"},
    {0x46A, "\xd1\xab"},
    {0x46C, "\xd1\xad"},
    {0x46E, "\xd1\xaf"},
    {0x470, "\xd1\xb1"},
    {0x472, "\xd1\xb3"},
    {0x474, "\xd1\xb5"},
    {0x476, "\xd1\xb7"},
    {0x478, "\xd1\xb9"},
    {0x47A, "\xd1\xbb"},
    {0x47C, "\xd1\xbd"},
    {0x47E, "\xd1\xbf"},
    {0x480, "\xd2\x81"},
    {0x48A, "\xd2\x8b"},
    {0x48C, "\xd2\x8d"},
    {0x48E, "\xd2\x8f"},
    {0x490, "\xd2\x91"},
    {0x492, "\xd2\x93"},
    {0x494, "\xd2\x95"},
    {0x496, "\xd2\x97"},
    {0x498, "\xd2\x99"},
    {0x49A, "\xd2\x9b"},
    {0x49C, "\xd2\x9d"},
    {0x49E, "\xd2\x9f"},
    {0x4A0, "\xd2\xa1"},
    {0x4A2, "\xd2\xa3"},
    {0x4A4, "\xd2\xa5"},
    {0x4A6, "\xd2\xa7"},
    {0x4A8, "\xd2\xa9"},
    {0x4AA, "\xd2\xab"},
    {0x4AC, "\xd2\xad"},
    {0x4AE, "\xd2\xaf"},
    {0x4B0, "\xd2\xb1"},
    {0x4B2, "\xd2\xb3"},
    {0x4B4, "\xd2\xb5"},
    {0x4B6, "\xd2\xb7"},
    {0x4B8, "\xd2\xb9"},
    {0x4BA, "\xd2\xbb"},
    {0x4BC, "\xd2\xbd"},
    {0x4BE, "\xd2\xbf"},
    {0x4C0, "\xd3\x8f"},
    {0x4C1, "\xd3\x82"},
    {0x4C3, "\xd3\x84"},
    {0x4C5, "\xd3\x86"},
    {0x4C7, "\xd3\x88"},
    {0x4C9, "\xd3\x8a"},
    {0x4CB, "\xd3\x8c"},
    {0x4CD, "\xd3\x8e"},
    {0x4D0, "\xd3\x91"},
    {0x4D2, "\xd3\x93"},
    {0x4D4, "\xd3\x95"},
    {0x4D6, "\xd3\x97"},
    {0x4D8, "\xd3\x99"},
    {0x4DA, "\xd3\x9b"},
    {0x4DC, "\xd3\x9d"},
    {0x4DE, "\xd3\x9f"},
    {0x4E0, "\xd3\xa1"},
    {0x4E2, "\xd3\xa3"},
    {0x4E4, "\xd3\xa5"},
    {0x4E6, "\xd3\xa7"},
    {0x4E8, "\xd3\xa9"},
    {0x4EA, "\xd3\xab"},
    {0x4EC, "\xd3\xad"},
    {0x4EE, "\xd3\xaf"},
    {0x4F0, "\xd3\xb1"},
    {0x4F2, "\xd3\xb3"},
    {0x4F4, "\xd3\xb5"},
    {0x4F6, "\xd3\xb7"},
    {0x4F8, "\xd3\xb9"},
    {0x4FA, "\xd3\xbb"},
    {0x4FC, "\xd3\xbd"},
    {0x4FE, "\xd3\xbf"},
    {0x500, "\xd4\x81"},
    {0x502, "\xd4\x83"},
    {0x504, "\xd4\x85"},
    {0x506, "\xd4\x87"},
    {0x508, "\xd4\x89"},
    {0x50A, "\xd4\x8b"},
    {0x50C, "\xd4\x8d"},
    {0x50E, "\xd4\x8f"},
    {0x510, "\xd4\x91"},
    {0x512, "\xd4\x93"},
    {0x514, "\xd4\x95"},
    {0x516, "\xd4\x97"},
    {0x518, "\xd4\x99"},
    {0x51A, "\xd4\x9b"},
    {0x51C, "\xd4\x9d"},
    {0x51E, "\xd4\x9f"},
    {0x520, "\xd4\xa1"},
    {0x522, "\xd4\xa3"},
    {0x524, "\xd4\xa5"},
    {0x526, "\xd4\xa7"},
    {0x528, "\xd4\xa9"},
    {0x52A, "\xd4\xab"},
    {0x52C, "\xd4\xad"},
    {0x52E, "\xd4\xaf"},
    {0x531, "\xd5\xa1"},
    {0x532, "\xd5\xa2"},
    {0x533, "\xd5\xa3"},
    {0x534, "\xd5\xa4"},
    {0x535, "\xd5\xa5"},
    {0x536, "\xd5\xa6"},
    {0x537, "\xd5\xa7"},
    {0x538, "\xd5\xa8"},
    {0x539, "\xd5\xa9"},
    {0x53A, "\xd5\xaa"},
    {0x53B, "\xd5\xab"},
    {0x53C, "\xd5\xac"},
    {0x53D, "\xd5\xad"},
    {0x53E, "\xd5\xae"},
    {0x53F, "\xd5\xaf"},
    {0x540, "\xd5\xb0"},
    {0x541, "\xd5\xb1"},
    {0x542, "\xd5\xb2"},
    {0x543, "\xd5\xb3"},
    {0x544, "\xd5\xb4"},
    {0x545, "\xd5\xb5"},
    {0x546, "\xd5\xb6"},
    {0x547, "\xd5\xb7"},
    {0x548, "\xd5\xb8"},
    {0x549, "\xd5\xb9"},
    {0x54A, "\xd5\xba"},
    {0x54B, "\xd5\xbb"},
    {0x54C, "\xd5\xbc"},
    {0x54D, "\xd5\xbd"},
    {0x54E, "\xd5\xbe"},
    {0x54F, "\xd5\xbf"},
    {0x550, "\xd6\x80"},
    {0x551, "\xd6\x81"},
    {0x552, "\xd6\x82"},
    {0x553, "\xd6\x83"},
    {0x554, "\xd6\x84"},
    {0x555, "\xd6\x85"},
    {0x556, "\xd6\x86"},
    {0x10A0, "\xe2\xb4\x80"},
    {0x10A1, "\xe2\xb4\x81"},
    {0x10A2, "\xe2\xb4\x82"},
    {0x10A3, "\xe2\xb4\x83"},
    {0x10A4, "\xe2\xb4\x84"},
    {0x10A5, "\xe2\xb4\x85"},
    {0x10A6, "\xe2\xb4\x86"},
    {0x10A7, "\xe2\xb4\x87"},
    {0x10A8, "\xe2\xb4\x88"},
    {0x10A9, "\xe2\xb4\x89"},
    {0x10AA, "\xe2\xb4\x8a"},
    {0x10AB, "\xe2\xb4\x8b"},
    {0x10AC, "\xe2\xb4\x8c"},
    {0x10AD, "\xe2\xb4\x8d"},
    {0x10AE, "\xe2\xb4\x8e"},
    {0x10AF, "\xe2\xb4\x8f"},
    {0x10B0, "\xe2\xb4\x90"},
    {0x10B1, "\xe2\xb4\x91"},
    {0x10B2, "\xe2\xb4\x92"},
    {0x10B3, "\xe2\xb4\x93"},
    {0x10B4, "\xe2\xb4\x94"},
    {0x10B5, "\xe2\xb4\x95"},
    {0x10B6, "\xe2\xb4\x96"},
    {0x10B7, "\xe2\xb4\x97"},
    {0x10B8, "\xe2\xb4\x98"},
    {0x10B9, "\xe2\xb4\x99"},
    {0x10BA, "\xe2\xb4\x9a"},
    {0x10BB, "\xe2\xb4\x9b"},
    {0x10BC, "\xe2\xb4\x9c"},
    {0x10BD, "\xe2\xb4\x9d"},
    {0x10BE, "\xe2\xb4\x9e"},
    {0x10BF, "\xe2\xb4\x9f"},
    {0x10C0, "\xe2\xb4\xa0"},
    {0x10C1, "\xe2\xb4\xa1"},
    {0x10C2, "\xe2\xb4\xa2"},
    {0x10C3, "\xe2\xb4\xa3"},
    {0x10C4, "\xe2\xb4\xa4"},
    {0x10C5, "\xe2\xb4\xa5"},
    {0x10C7, "\xe2\xb4\xa7"},
    {0x10CD, "\xe2\xb4\xad"},
    {0x13A0, "\xea\xad\xb0"},
    {0x13A1, "\xea\xad\xb1"},
    {0x13A2, "\xea\xad\xb2"},
    {0x13A3, "\xea\xad\xb3"},
    {0x13A4, "\xea\xad\xb4"},
    {0x13A5, "\xea\xad\xb5"},
    {0x13A6, "\xea\xad\xb6"},
    {0x13A7, "\xea\xad\xb7"},
    {0x13A8, "\xea\xad\xb8"},
    {0x13A9, "\xea\xad\xb9"},
    {0x13AA, "\xea\xad\xba"},
    {0x13AB, "\xea\xad\xbb"},
    {0x13AC, "\xea\xad\xbc"},
    {0x13AD, "\xea\xad\xbd"},
    {0x13AE, "\xea\xad\xbe"},
    {0x13AF, "\xea\xad\xbf"},
    {0x13B0, "\xea\xae\x80"},
    {0x13B1, "\xea\xae\x81"},
    {0x13B2, "\xea\xae\x82"},
    {0x13B3, "\xea\xae\x83"},
    {0x13B4, "\xea\xae\x84"},
    {0x13B5, "\xea\xae\x85"},
    {0x13B6, "\xea\xae\x86"},
    {0x13B7, "\xea\xae\x87"},
    {0x13B8, "\xea\xae\x88"},
    {0x13B9, "\xea\xae\x89"},
    {0x13BA, "\xea\xae\x8a"},
    {0x13BB, "\xea\xae\x8b"},
    {0x13BC, "\xea\xae\x8c"},
    {0x13BD, "\xea\xae\x8d"},
    {0x13BE, "\xea\xae\x8e"},
    {0x13BF, "\xea\xae\x8f"},
    {0x13C0, "\xea\xae\x90"},
    {0x13C1, "\xea\xae\x91"},
    {0x13C2, "\xea\xae\x92"},
    {0x13C3, "\xea\xae\x93"},
    {0x13C4, "\xea\xae\x94"},
    {0x13C5, "\xea\xae\x95"},
    {0x13C6, "\xea\xae\x96"},
    {0x13C7, "\xea\xae\x97"},
    {0x13C8, "\xea\xae\x98"},
    {0x13C9, "\xea\xae\x99"},
    {0x13CA, "\xea\xae\x9a"},
    {0x13CB, "\xea\xae\x9b"},
    {0x13CC, "\xea\xae\x9c"},
    {0x13CD, "\xea\xae\x9d"},
    {0x13CE, "\xea\xae\x9e"},
    {0x13CF, "\xea\xae\x9f"},
    {0x13D0, "\xea\xae\xa0"},
    {0x13D1, "\xea\xae\xa1"},
    {0x13D2, "\xea\xae\xa2"},
    {0x13D3, "\xea\xae\xa3"},
    {0x13D4, "\xea\xae\xa4"},
    {0x13D5, "\xea\xae\xa5"},
    {0x13D6, "\xea\xae\xa6"},
    {0x13D7, "\xea\xae\xa7"},
    {0x13D8, "\xea\xae\xa8"},
    {0x13D9, "\xea\xae\xa9"},
    {0x13DA, "\xea\xae\xaa"},
    {0x13DB, "\xea\xae\xab"},
    {0x13DC, "\xea\xae\xac"},
    {0x13DD, "\xea\xae\xad"},
    {0x13DE, "\xea\xae\xae"},
    {0x13DF, "\xea\xae\xaf"},
    {0x13E0, "\xea\xae\xb0"},
    {0x13E1, "\xea\xae\xb1"},
    {0x13E2, "\xea\xae\xb2"},
    {0x13E3, "\xea\xae\xb3"},
    {0x13E4, "\xea\xae\xb4"},
    {0x13E5, "\xea\xae\xb5"},
    {0x13E6, "\xea\xae\xb6"},
    {0x13E7, "\xea\xae\xb7"},
    {0x13E8, "\xea\xae\xb8"},
    {0x13E9, "\xea\xae\xb9"},
    {0x13EA, "\xea\xae\xba"},
    {0x13EB, "\xea\xae\xbb"},
    {0x13EC, "\xea\xae\xbc"},
    {0x13ED, "\xea\xae\xbd"},
    {0x13EE, "\xea\xae\xbe"},
    {0x13EF, "\xea\xae\xbf"},
    {0x13F0, "\xe1\x8f\xb8"},
    {0x13F1, "\xe1\x8f\xb9"},
    {0x13F2, "\xe1\x8f\xba"},
    {0x13F3, "\xe1\x8f\xbb"},
    {0x13F4, "\xe1\x8f\xbc"},
    {0x13F5, "\xe1\x8f\xbd"},
    {0x1C90, "\xe1\x83\x90"},
    {0x1C91, "\xe1\x83\x91"},
    {0x1C92, "\xe1\x83\x92"},
    {0x1C93, "\xe1\x83\x93"},
    {0x1C94, "\xe1\x83\x94"},
    {0x1C95, "\xe1\x83\x95"},
    {0x1C96, "\xe1\x83\x96"},
    {0x1C97, "\xe1\x83\x97"},
    {0x1C98, "\xe1\x83\x98"},
    {0x1C99, "\xe1\x83\x99"},
    {0x1C9A, "\xe1\x83\x9a"},
    {0x1C9B, "\xe1\x83\x9b"},
    {0x1C9C, "\xe1\x83\x9c"},
    {0x1C9D, "\xe1\x83\x9d"},
    {0x1C9E, "\xe1\x83\x9e"},
    {0x1C9F, "\xe1\x83\x9f"},
    {0x1CA0, "\xe1\x83\xa0"},
    {0x1CA1, "\xe1\x83\xa1"},
    {0x1CA2, "\xe1\x83\xa2"},
    {0x1CA3, "\xe1\x83\xa3"},
    {0x1CA4, "\xe1\x83\xa4"},
    {0x1CA5, "\xe1\x83\xa5"},
    {0x1CA6, "\xe1\x83\xa6"},
    {0x1CA7, "\xe1\x83\xa7"},
    {0x1CA8, "\xe1\x83\xa8"},
    {0x1CA9, "\xe1\x83\xa9"},
    {0x1CAA, "\xe1\x83\xaa"},
    {0x1CAB, "\xe1\x83\xab"},
    {0x1CAC, "\xe1\x83\xac"},
    {0x1CAD, "\xe1\x83\xad"},
    {0x1CAE, "\xe1\x83\xae"},
    {0x1CAF, "\xe1\x83\xaf"},
    {0x1CB0, "\xe1\x83\xb0"},
    {0x1CB1, "\xe1\x83\xb1"},
    {0x1CB2, "\xe1\x83\xb2"},
    {0x1CB3, "\xe1\x83\xb3"},
    {0x1CB4, "\xe1\x83\xb4"},
    {0x1CB5, "\xe1\x83\xb5"},
    {0x1CB6, "\xe1\x83\xb6"},
    {0x1CB7, "\xe1\x83\xb7"},
    {0x1CB8, "\xe1\x83\xb8"},
    {0x1CB9, "\xe1\x83\xb9"},
    {0x1CBA, "\xe1\x83\xba"},
    {0x1CBD, "\xe1\x83\xbd"},
    {0x1CBE, "\xe1\x83\xbe"},
    {0x1CBF, "\xe1\x83\xbf"},
    {0x1E00, "\xe1\xb8\x81"},
    {0x1E02, "\xe1\xb8\x83"},
    {0x1E04, "\xe1\xb8\x85"},
    {0x1E06, "\xe1\xb8\x87"},
    {0x1E08, "\xe1\xb8\x89"},
    {0x1E0A, "\xe1\xb8\x8b"},
    {0x1E0C, "\xe1\xb8\x8d"},
    {0x1E0E, "\xe1\xb8\x8f"},
    {0x1E10, "\xe1\xb8\x91"},
    {0x1E12, "\xe1\xb8\x93"},
    {0x1E14, "\xe1\xb8\x95"},
    {0x1E16, "\xe1\xb8\x97"},
    {0x1E18, "\xe1\xb8\x99"},
    {0x1E1A, "\xe1\xb8\x9b"},
    {0x1E1C, "\xe1\xb8\x9d"},
    {0x1E1E, "\xe1\xb8\x9f"},
    {0x1E20, "\xe1\xb8\xa1"},
    {0x1E22, "\xe1\xb8\xa3"},
    {0x1E24, "\xe1\xb8\xa5"},
    {0x1E26, "\xe1\xb8\xa7"},
    {0x1E28, "\xe1\xb8\xa9"},
    {0x1E2A, "\xe1\xb8\xab"},
    {0x1E2C, "\xe1\xb8\xad"},
    {0x1E2E, "\xe1\xb8\xaf"},
    {0x1E30, "\xe1\xb8\xb1"},
    {0x1E32, "\xe1\xb8\xb3"},
    {0x1E34, "\xe1\xb8\xb5"},
    {0x1E36, "\xe1\xb8\xb7"},
    {0x1E38, "\xe1\xb8\xb9"},
    {0x1E3A, "\xe1\xb8\xbb"},
    {0x1E3C, "\xe1\xb8\xbd"},
    {0x1E3E, "\xe1\xb8\xbf"},
    {0x1E40, "\xe1\xb9\x81"},
    {0x1E42, "\xe1\xb9\x83"},
    {0x1E44, "\xe1\xb9\x85"},
    {0x1E46, "\xe1\xb9\x87"},
    {0x1E48, "\xe1\xb9\x89"},
    {0x1E4A, "\xe1\xb9\x8b"},
    {0x1E4C, "\xe1\xb9\x8d"},
    {0x1E4E, "\xe1\xb9\x8f"},
    {0x1E50, "\xe1\xb9\x91"},
    {0x1E52, "\xe1\xb9\x93"},
    {0x1E54, "\xe1\xb9\x95"},
    {0x1E56, "\xe1\xb9\x97"},
    {0x1E58, "\xe1\xb9\x99"},
    {0x1E5A, "\xe1\xb9\x9b"},
    {0x1E5C, "\xe1\xb9\x9d"},
    {0x1E5E, "\xe1\xb9\x9f"},
    {0x1E60, "\xe1\xb9\xa1"},
    {0x1E62, "\xe1\xb9\xa3"},
    {0x1E64, "\xe1\xb9\xa5"},
    {0x1E66, "\xe1\xb9\xa7"},
    {0x1E68, "\xe1\xb9\xa9"},
    {0x1E6A, "\xe1\xb9\xab"},
    {0x1E6C, "\xe1\xb9\xad"},
    {0x1E6E, "\xe1\xb9\xaf"},
    {0x1E70, "\xe1\xb9\xb1"},
    {0x1E72, "\xe1\xb9\xb3"},
    {0x1E74, "\xe1\xb9\xb5"},
    {0x1E76, "\xe1\xb9\xb7"},
    {0x1E78, "\xe1\xb9\xb9"},
    {0x1E7A, "\xe1\xb9\xbb"},
    {0x1E7C, "\xe1\xb9\xbd"},
    {0x1E7E, "\xe1\xb9\xbf"},
    {0x1E80, "\xe1\xba\x81"},
    {0x1E82, "\xe1\xba\x83"},
    {0x1E84, "\xe1\xba\x85"},
    {0x1E86, "\xe1\xba\x87"},
    {0x1E88, "\xe1\xba\x89"},
    {0x1E8A, "\xe1\xba\x8b"},
    {0x1E8C, "\xe1\xba\x8d"},
    {0x1E8E, "\xe1\xba\x8f"},
    {0x1E90, "\xe1\xba\x91"},
    {0x1E92, "\xe1\xba\x93"},
    {0x1E94, "\xe1\xba\x95"},
    {0x1E9E, "\xc3\x9f"},
    {0x1EA0, "\xe1\xba\xa1"},
    {0x1EA2, "\xe1\xba\xa3"},
    {0x1EA4, "\xe1\xba\xa5"},
    {0x1EA6, "\xe1\xba\xa7"},
    {0x1EA8, "\xe1\xba\xa9"},
    {0x1EAA, "\xe1\xba\xab"},
    {0x1EAC, "\xe1\xba\xad"},
    {0x1EAE, "\xe1\xba\xaf"},
    {0x1EB0, "\xe1\xba\xb1"},
    {0x1EB2, "\xe1\xba\xb3"},
    {0x1EB4, "\xe1\xba\xb5"},
    {0x1EB6, "\xe1\xba\xb7"},
    {0x1EB8, "\xe1\xba\xb9"},
    {0x1EBA, "\xe1\xba\xbb"},
    {0x1EBC, "\xe1\xba\xbd"},
    {0x1EBE, "\xe1\xba\xbf"},
    {0x1EC0, "\xe1\xbb\x81"},
    {0x1EC2, "\xe1\xbb\x83"},
    {0x1EC4, "\xe1\xbb\x85"},
    {0x1EC6, "\xe1\xbb\x87"},
    {0x1EC8, "\xe1\xbb\x89"},
    {0x1ECA, "\xe1\xbb\x8b"},
    {0x1ECC, "\xe1\xbb\x8d"},
    {0x1ECE, "\xe1\xbb\x8f"},
    {0x1ED0, "\xe1\xbb\x91"},
    {0x1ED2, "\xe1\xbb\x93"},
    {0x1ED4, "\xe1\xbb\x95"},
    {0x1ED6, "\xe1\xbb\x97"},
    {0x1ED8, "\xe1\xbb\x99"},
    {0x1EDA, "\xe1\xbb\x9b"},
    {0x1EDC, "\xe1\xbb\x9d"},
    {0x1EDE, "\xe1\xbb\x9f"},
    {0x1EE0, "\xe1\xbb\xa1"},
    {0x1EE2, "\xe1\xbb\xa3"},
    {0x1EE4, "\xe1\xbb\xa5"},
    {0x1EE6, "\xe1\xbb\xa7"},
    {0x1EE8, "\xe1\xbb\xa9"},
    {0x1EEA, "\xe1\xbb\xab"},
    {0x1EEC, "\xe1\xbb\xad"},
    {0x1EEE, "\xe1\xbb\xaf"},
    {0x1EF0, "\xe1\xbb\xb1"},
    {0x1EF2, "\xe1\xbb\xb3"},
    {0x1EF4, "\xe1\xbb\xb5"},
    {0x1EF6, "\xe1\xbb\xb7"},
    {0x1EF8, "\xe1\xbb\xb9"},
    {0x1EFA, "\xe1\xbb\xbb"},
    {0x1EFC, "\xe1\xbb\xbd"},
    {0x1EFE, "\xe1\xbb\xbf"},
    {0x1F08, "\xe1\xbc\x80"},
    {0x1F09, "\xe1\xbc\x81"},
    {0x1F0A, "\xe1\xbc\x82"},
    {0x1F0B, "\xe1\xbc\x83"},
    {0x1F0C, "\xe1\xbc\x84"},
    {0x1F0D, "\xe1\xbc\x85"},
    {0x1F0E, "\xe1\xbc\x86"},
    {0x1F0F, "\xe1\xbc\x87"},
    {0x1F18, "\xe1\xbc\x90"},
    {0x1F19, "\xe1\xbc\x91"},
    {0x1F1A, "\xe1\xbc\x92"},
    {0x1F1B, "\xe1\xbc\x93"},
    {0x1F1C, "\xe1\xbc\x94"},
    {0x1F1D, "\xe1\xbc\x95"},
    {0x1F28, "\xe1\xbc\xa0"},
    {0x1F29, "\xe1\xbc\xa1"},
    {0x1F2A, "\xe1\xbc\xa2"},
    {0x1F2B, "\xe1\xbc\xa3"},
    {0x1F2C, "\xe1\xbc\xa4"},
    {0x1F2D, "\xe1\xbc\xa5"},
    {0x1F2E, "\xe1\xbc\xa6"},
    {0x1F2F, "\xe1\xbc\xa7"},
    {0x1F38, "\xe1\xbc\xb0"},
    {0x1F39, "\xe1\xbc\xb1"},
    {0x1F3A, "\xe1\xbc\xb2"},
    {0x1F3B, "\xe1\xbc\xb3"},
    {0x1F3C, "\xe1\xbc\xb4"},
    {0x1F3D, "\xe1\xbc\xb5"},
    {0x1F3E, "\xe1\xbc\xb6"},
    {0x1F3F, "\xe1\xbc\xb7"},
    {0x1F48, "\xe1\xbd\x80"},
    {0x1F49, "\xe1\xbd\x81"},
    {0x1F4A, "\xe1\xbd\x82"},
    {0x1F4B, "\xe1\xbd\x83"},
    {0x1F4C, "\xe1\xbd\x84"},
    {0x1F4D, "\xe1\xbd\x85"},
    {0x1F59, "\xe1\xbd\x91"},
    {0x1F5B, "\xe1\xbd\x93"},
    {0x1F5D, "\xe1\xbd\x95"},
    {0x1F5F, "\xe1\xbd\x97"},
    {0x1F68, "\xe1\xbd\xa0"},
    {0x1F69, "\xe1\xbd\xa1"},
    {0x1F6A, "\xe1\xbd\xa2"},
    {0x1F6B, "\xe1\xbd\xa3"},
    {0x1F6C, "\xe1\xbd\xa4"},
    {0x1F6D, "\xe1\xbd\xa5"},
    {0x1F6E, "\xe1\xbd\xa6"},
    {0x1F6F, "\xe1\xbd\xa7"},
    {0x1F88, "\xe1\xbe\x80"},
    {0x1F89, "\xe1\xbe\x81"},
    {0x1F8A, "\xe1\xbe\x82"},
    {0x1F8B, "\xe1\xbe\x83"},
    {0x1F8C, "\xe1\xbe\x84"},
    {0x1F8D, "\xe1\xbe\x85"},
    {0x1F8E, "\xe1\xbe\x86"},
    {0x1F8F, "\xe1\xbe\x87"},
    {0x1F98, "\xe1\xbe\x90"},
    {0x1F99, "\xe1\xbe\x91"},
    {0x1F9A, "\xe1\xbe\x92"},
    {0x1F9B, "\xe1\xbe\x93"},
    {0x1F9C, "\xe1\xbe\x94"},
    {0x1F9D, "\xe1\xbe\x95"},
    {0x1F9E, "\xe1\xbe\x96"},
    {0x1F9F, "\xe1\xbe\x97"},
    {0x1FA8, "\xe1\xbe\xa0"},
    {0x1FA9, "\xe1\xbe\xa1"},
    {0x1FAA, "\xe1\xbe\xa2"},
    {0x1FAB, "\xe1\xbe\xa3"},
    {0x1FAC, "\xe1\xbe\xa4"},
    {0x1FAD, "\xe1\xbe\xa5"},
    {0x1FAE, "\xe1\xbe\xa6"},
    {0x1FAF, "\xe1\xbe\xa7"},
    {0x1FB8, "\xe1\xbe\xb0"},
    {0x1FB9, "\xe1\xbe\xb1"},
    {0x1FBA, "\xe1\xbd\xb0"},
    {0x1FBB, "\xe1\xbd\xb1"},
    {0x1FBC, "\xe1\xbe\xb3"},
    {0x1FC8, "\xe1\xbd\xb2"},
    {0x1FC9, "\xe1\xbd\xb3"},
    {0x1FCA, "\xe1\xbd\xb4"},
    {0x1FCB, "\xe1\xbd\xb5"},
    {0x1FCC, "\xe1\xbf\x83"},
    {0x1FD8, "\xe1\xbf\x90"},
    {0x1FD9, "\xe1\xbf\x91"},
    {0x1FDA, "\xe1\xbd\xb6"},
    {0x1FDB, "\xe1\xbd\xb7"},
    {0x1FE8, "\xe1\xbf\xa0"},
    {0x1FE9, "\xe1\xbf\xa1"},
    {0x1FEA, "\xe1\xbd\xba"},
    {0x1FEB, "\xe1\xbd\xbb"},
    {0x1FEC, "\xe1\xbf\xa5"},
    {0x1FF8, "\xe1\xbd\xb8"},
    {0x1FF9, "\xe1\xbd\xb9"},
    {0x1FFA, "\xe1\xbd\xbc"},
    {0x1FFB, "\xe1\xbd\xbd"},
    {0x1FFC, "\xe1\xbf\xb3"},
    {0x2126, "\xcf\x89"},
    {0x212A, "k"},
    {0x212B, "\xc3\xa5"},
    {0x2132, "\xe2\x85\x8e"},
    {0x2160, "\xe2\x85\xb0"},
    {0x2161, "\xe2\x85\xb1"},
    {0x2162, "\xe2\x85\xb2"},
    {0x2163, "\xe2\x85\xb3"},
    {0x2164, "\xe2\x85\xb4"},
    {0x2165, "\xe2\x85\xb5"},
    {0x2166, "\xe2\x85\xb6"},
    {0x2167, "\xe2\x85\xb7"},
    {0x2168, "\xe2\x85\xb8"},
    {0x2169, "\xe2\x85\xb9"},
    {0x216A, "\xe2\x85\xba"},
    {0x216B, "\xe2\x85\xbb"},
    {0x216C, "\xe2\x85\xbc"},
    {0x216D, "\xe2\x85\xbd"},
    {0x216E, "\xe2\x85\xbe"},
    {0x216F, "\xe2\x85\xbf"},
    {0x2183, "\xe2\x86\x84"},
    {0x24B6, "\xe2\x93\x90"},
    {0x24B7, "\xe2\x93\x91"},
    {0x24B8, "\xe2\x93\x92"},
    {0x24B9, "\xe2\x93\x93"},
    {0x24BA, "\xe2\x93\x94"},
    {0x24BB, "\xe2\x93\x95"},
    {0x24BC, "\xe2\x93\x96"},
    {0x24BD, "\xe2\x93\x97"},
    {0x24BE, "\xe2\x93\x98"},
    {0x24BF, "\xe2\x93\x99"},
    {0x24C0, "\xe2\x93\x9a"},
    {0x24C1, "\xe2\x93\x9b"},
    {0x24C2, "\xe2\x93\x9c"},
    {0x24C3, "\xe2\x93\x9d"},
    {0x24C4, "\xe2\x93\x9e"},
    {0x24C5, "\xe2\x93\x9f"},
    {0x24C6, "\xe2\x93\xa0"},
    {0x24C7, "\xe2\x93\xa1"},
    {0x24C8, "\xe2\x93\xa2"},
    {0x24C9, "\xe2\x93\xa3"},
    {0x24CA, "\xe2\x93\xa4"},
    {0x24CB, "\xe2\x93\xa5"},
    {0x24CC, "\xe2\x93\xa6"},
    {0x24CD, "\xe2\x93\xa7"},
    {0x24CE, "\xe2\x93\xa8"},
    {0x24CF, "\xe2\x93\xa9"},
    {0x2C00, "\xe2\xb0\xb0"},
    {0x2C01, "\xe2\xb0\xb1"},
    {0x2C02, "\xe2\xb0\xb2"},
    {0x2C03, "\xe2\xb0\xb3"},
    {0x2C04, "\xe2\xb0\xb4"},
    {0x2C05, "\xe2\xb0\xb5"},
    {0x2C06, "\xe2\xb0\xb6"},
    {0x2C07, "\xe2\xb0\xb7"},
    {0x2C08, "\xe2\xb0\xb8"},
    {0x2C09, "\xe2\xb0\xb9"},
    {0x2C0A, "\xe2\xb0\xba"},
    {0x2C0B, "\xe2\xb0\xbb"},
    {0x2C0C, "\xe2\xb0\xbc"},
    {0x2C0D, "\xe2\xb0\xbd"},
    {0x2C0E, "\xe2\xb0\xbe"},
    {0x2C0F, "\xe2\xb0\xbf"},
    {0x2C10, "\xe2\xb1\x80"},
    {0x2C11, "\xe2\xb1\x81"},
    {0x2C12, "\xe2\xb1\x82"},
    {0x2C13, "\xe2\xb1\x83"},
    {0x2C14, "\xe2\xb1\x84"},
    {0x2C15, "\xe2\xb1\x85"},
    {0x2C16, "\xe2\xb1\x86"},
    {0x2C17, "\xe2\xb1\x87"},
    {0x2C18, "\xe2\xb1\x88"},
    {0x2C19, "\xe2\xb1\x89"},
    {0x2C1A, "\xe2\xb1\x8a"},
    {0x2C1B, "\xe2\xb1\x8b"},
    {0x2C1C, "\xe2\xb1\x8c"},
    {0x2C1D, "\xe2\xb1\x8d"},
    {0x2C1E, "\xe2\xb1\x8e"},
    {0x2C1F, "\xe2\xb1\x8f"},
    {0x2C20, "\xe2\xb1\x90"},
    {0x2C21, "\xe2\xb1\x91"},
    {0x2C22, "\xe2\xb1\x92"},
    {0x2C23, "\xe2\xb1\x93"},
    {0x2C24, "\xe2\xb1\x94"},
    {0x2C25, "\xe2\xb1\x95"},
    {0x2C26, "\xe2\xb1\x96"},
    {0x2C27, "\xe2\xb1\x97"},
    {0x2C28, "\xe2\xb1\x98"},
    {0x2C29, "\xe2\xb1\x99"},
    {0x2C2A, "\xe2\xb1\x9a"},
    {0x2C2B, "\xe2\xb1\x9b"},
    {0x2C2C, "\xe2\xb1\x9c"},
    {0x2C2D, "\xe2\xb1\x9d"},
    {0x2C2E, "\xe2\xb1\x9e"},
    {0x2C60, "\xe2\xb1\xa1"},
    {0x2C62, "\xc9\xab"},
    {0x2C63, "\xe1\xb5\xbd"},
    {0x2C64, "\xc9\xbd"},
    {0x2C67, "\xe2\xb1\xa8"},
    {0x2C69, "\xe2\xb1\xaa"},
    {0x2C6B, "\xe2\xb1\xac"},
    {0x2C6D, "\xc9\x91"},
    {0x2C6E, "\xc9\xb1"},
    {0x2C6F, "\xc9\x90"},
    {0x2C70, "\xc9\x92"},
    {0x2C72, "\xe2\xb1\xb3"},
    {0x2C75, "\xe2\xb1\xb6"},
    {0x2C7E, "\xc8\xbf"},
    {0x2C7F, "\xc9\x80"},
    {0x2C80, "\xe2\xb2\x81"},
    {0x2C82, "\xe2\xb2\x83"},
    {0x2C84, "\xe2\xb2\x85"},
    {0x2C86, "\xe2\xb2\x87"},
    {0x2C88, "\xe2\xb2\x89"},
    {0x2C8A, "\xe2\xb2\x8b"},
    {0x2C8C, "\xe2\xb2\x8d"},
    {0x2C8E, "\xe2\xb2\x8f"},
    {0x2C90, "\xe2\xb2\x91"},
    {0x2C92, "\xe2\xb2\x93"},
    {0x2C94, "\xe2\xb2\x95"},
    {0x2C96, "\xe2\xb2\x97"},
    {0x2C98, "\xe2\xb2\x99"},
    {0x2C9A, "\xe2\xb2\x9b"},
    {0x2C9C, "\xe2\xb2\x9d"},
    {0x2C9E, "\xe2\xb2\x9f"},
    {0x2CA0, "\xe2\xb2\xa1"},
    {0x2CA2, "\xe2\xb2\xa3"},
    {0x2CA4, "\xe2\xb2\xa5"},
    {0x2CA6, "\xe2\xb2\xa7"},
    {0x2CA8, "\xe2\xb2\xa9"},
    {0x2CAA, "\xe2\xb2\xab"},
    {0x2CAC, "\xe2\xb2\xad"},
    {0x2CAE, "\xe2\xb2\xaf"},
    {0x2CB0, "\xe2\xb2\xb1"},
    {0x2CB2, "\xe2\xb2\xb3"},
    {0x2CB4, "\xe2\xb2\xb5"},
    {0x2CB6, "\xe2\xb2\xb7"},
    {0x2CB8, "\xe2\xb2\xb9"},
    {0x2CBA, "\xe2\xb2\xbb"},
    {0x2CBC, "\xe2\xb2\xbd"},
    {0x2CBE, "\xe2\xb2\xbf"},
    {0x2CC0, "\xe2\xb3\x81"},
    {0x2CC2, "\xe2\xb3\x83"},
    {0x2CC4, "\xe2\xb3\x85"},
    {0x2CC6, "\xe2\xb3\x87"},
    {0x2CC8, "\xe2\xb3\x89"},
    {0x2CCA, "\xe2\xb3\x8b"},
    {0x2CCC, "\xe2\xb3\x8d"},
    {0x2CCE, "\xe2\xb3\x8f"},
    {0x2CD0, "\xe2\xb3\x91"},
    {0x2CD2, "\xe2\xb3\x93"},
    {0x2CD4, "\xe2\xb3\x95"},
    {0x2CD6, "\xe2\xb3\x97"},
    {0x2CD8, "\xe2\xb3\x99"},
    {0x2CDA, "\xe2\xb3\x9b"},
    {0x2CDC, "\xe2\xb3\x9d"},
    {0x2CDE, "\xe2\xb3\x9f"},
    {0x2CE0, "\xe2\xb3\xa1"},
    {0x2CE2, "\xe2\xb3\xa3"},
    {0x2CEB, "\xe2\xb3\xac"},
    {0x2CED, "\xe2\xb3\xae"},
    {0x2CF2, "\xe2\xb3\xb3"},
    {0xA640, "\xea\x99\x81"},
    {0xA642, "\xea\x99\x83"},
    {0xA644, "\xea\x99\x85"},
    {0xA646, "\xea\x99\x87"},
    {0xA648, "\xea\x99\x89"},
    {0xA64A, "\xea\x99\x8b"},
    {0xA64C, "\xea\x99\x8d"},
    {0xA64E, "\xea\x99\x8f"},
    {0xA650, "\xea\x99\x91"},
    {0xA652, "\xea\x99\x93"},
    {0xA654, "\xea\x99\x95"},
    {0xA656, "\xea\x99\x97"},
    {0xA658, "\xea\x99\x99"},
    {0xA65A, "\xea\x99\x9b"},
    {0xA65C, "\xea\x99\x9d"},
    {0xA65E, "\xea\x99\x9f"},
    {0xA660, "\xea\x99\xa1"},
    {0xA662, "\xea\x99\xa3"},
    {0xA664, "\xea\x99\xa5"},
    {0xA666, "\xea\x99\xa7"},
    {0xA668, "\xea\x99\xa9"},
    {0xA66A, "\xea\x99\xab"},
    {0xA66C, "\xea\x99\xad"},
    {0xA680, "\xea\x9a\x81"},
    {0xA682, "\xea\x9a\x83"},
    {0xA684, "\xea\x9a\x85"},
    {0xA686, "\xea\x9a\x87"},
    {0xA688, "\xea\x9a\x89"},
    {0xA68A, "\xea\x9a\x8b"},
    {0xA68C, "\xea\x9a\x8d"},
    {0xA68E, "\xea\x9a\x8f"},
    {0xA690, "\xea\x9a\x91"},
    {0xA692, "\xea\x9a\x93"},
    {0xA694, "\xea\x9a\x95"},
    {0xA696, "\xea\x9a\x97"},
    {0xA698, "\xea\x9a\x99"},
    {0xA69A, "\xea\x9a\x9b"},
    {0xA722, "\xea\x9c\xa3"},
    {0xA724, "\xea\x9c\xa5"},
    {0xA726, "\xea\x9c\xa7"},
    {0xA728, "\xea\x9c\xa9"},
    {0xA72A, "\xea\x9c\xab"},
    {0xA72C, "\xea\x9c\xad"},
    {0xA72E, "\xea\x9c\xaf"},
    {0xA732, "\xea\x9c\xb3"},
    {0xA734, "\xea\x9c\xb5"},
    {0xA736, "\xea\x9c\xb7"},
    {0xA738, "\xea\x9c\xb9"},
    {0xA73A, "\xea\x9c\xbb"},
    {0xA73C, "\xea\x9c\xbd"},
    {0xA73E, "\xea\x9c\xbf"},
    {0xA740, "\xea\x9d\x81"},
    {0xA742, "\xea\x9d\x83"},
    {0xA744, "\xea\x9d\x85"},
    {0xA746, "\xea\x9d\x87"},
    {0xA748, "\xea\x9d\x89"},
    {0xA74A, "\xea\x9d\x8b"},
    {0xA74C, "\xea\x9d\x8d"},
    {0xA74E, "\xea\x9d\x8f"},
    {0xA750, "\xea\x9d\x91"},
    {0xA752, "\xea\x9d\x93"},
    {0xA754, "\xea\x9d\x95"},
    {0xA756, "\xea\x9d\x97"},
    {0xA758, "\xea\x9d\x99"},
    {0xA75A, "\xea\x9d\x9b"},
    {0xA75C, "\xea\x9d\x9d"},
    {0xA75E, "\xea\x9d\x9f"},
    {0xA760, "\xea\x9d\xa1"},
    {0xA762, "\xea\x9d\xa3"},
    {0xA764, "\xea\x9d\xa5"},
    {0xA766, "\xea\x9d\xa7"},
    {0xA768, "\xea\x9d\xa9"},
    {0xA76A, "\xea\x9d\xab"},
    {0xA76C, "\xea\x9d\xad"},
    {0xA76E, "\xea\x9d\xaf"},
    {0xA779, "\xea\x9d\xba"},
    {0xA77B, "\xea\x9d\xbc"},
    {0xA77D, "\xe1\xb5\xb9"},
    {0xA77E, "\xea\x9d\xbf"},
    {0xA780, "\xea\x9e\x81"},
    {0xA782, "\xea\x9e\x83"},
    {0xA784, "\xea\x9e\x85"},
    {0xA786, "\xea\x9e\x87"},
    {0xA78B, "\xea\x9e\x8c"},
    {0xA78D, "\xc9\xa5"},
    {0xA790, "\xea\x9e\x91"},
    {0xA792, "\xea\x9e\x93"},
    {0xA796, "\xea\x9e\x97"},
    {0xA798, "\xea\x9e\x99"},
    {0xA79A, "\xea\x9e\x9b"},
    {0xA79C, "\xea\x9e\x9d"},
    {0xA79E, "\xea\x9e\x9f"},
    {0xA7A0, "\xea\x9e\xa1"},
    {0xA7A2, "\xea\x9e\xa3"},
    {0xA7A4, "\xea\x9e\xa5"},
    {0xA7A6, "\xea\x9e\xa7"},
    {0xA7A8, "\xea\x9e\xa9"},
    {0xA7AA, "\xc9\xa6"},
    {0xA7AB, "\xc9\x9c"},
    {0xA7AC, "\xc9\xa1"},
    {0xA7AD, "\xc9\xac"},
    {0xA7AE, "\xc9\xaa"},
    {0xA7B0, "\xca\x9e"},
    {0xA7B1, "\xca\x87"},
    {0xA7B2, "\xca\x9d"},
    {0xA7B3, "\xea\xad\x93"},
    {0xA7B4, "\xea\x9e\xb5"},
    {0xA7B6, "\xea\x9e\xb7"},
    {0xA7B8, "\xea\x9e\xb9"},
    {0xA7BA, "\xea\x9e\xbb"},
    {0xA7BC, "\xea\x9e\xbd"},
    {0xA7BE, "\xea\x9e\xbf"},
    {0xA7C2, "\xea\x9f\x83"},
    {0xA7C4, "\xea\x9e\x94"},
    {0xA7C5, "\xca\x82"},
    {0xA7C6, "\xe1\xb6\x8e"},
    {0xA7C7, "\xea\x9f\x88"},
    {0xA7C9, "\xea\x9f\x8a"},
    {0xA7F5, "\xea\x9f\xb6"},
    {0xFF21, "\xef\xbd\x81"},
    {0xFF22, "\xef\xbd\x82"},
    {0xFF23, "\xef\xbd\x83"},
    {0xFF24, "\xef\xbd\x84"},
    {0xFF25, "\xef\xbd\x85"},
    {0xFF26, "\xef\xbd\x86"},
    {0xFF27, "\xef\xbd\x87"},
    {0xFF28, "\xef\xbd\x88"},
    {0xFF29, "\xef\xbd\x89"},
    {0xFF2A, "\xef\xbd\x8a"},
    {0xFF2B, "\xef\xbd\x8b"},
    {0xFF2C, "\xef\xbd\x8c"},
    {0xFF2D, "\xef\xbd\x8d"},
    {0xFF2E, "\xef\xbd\x8e"},
    {0xFF2F, "\xef\xbd\x8f"},
    {0xFF30, "\xef\xbd\x90"},
    {0xFF31, "\xef\xbd\x91"},
    {0xFF32, "\xef\xbd\x92"},
    {0xFF33, "\xef\xbd\x93"},
    {0xFF34, "\xef\xbd\x94"},
    {0xFF35, "\xef\xbd\x95"},
    {0xFF36, "\xef\xbd\x96"},
    {0xFF37, "\xef\xbd\x97"},
    {0xFF38, "\xef\xbd\x98"},
    {0xFF39, "\xef\xbd\x99"},
    {0xFF3A, "\xef\xbd\x9a"},
    {0x10400, "\xf0\x90\x90\xa8"},
    {0x10401, "\xf0\x90\x90\xa9"},
    {0x10402, "\xf0\x90\x90\xaa"},
    {0x10403, "\xf0\x90\x90\xab"},
    {0x10404, "\xf0\x90\x90\xac"},
    {0x10405, "\xf0\x90\x90\xad"},
    {0x10406, "\xf0\x90\x90\xae"},
    {0x10407, "\xf0\x90\x90\xaf"},
    {0x10408, "\xf0\x90\x90\xb0"},
    {0x10409, "\xf0\x90\x90\xb1"},
    {0x1040A, "\xf0\x90\x90\xb2"},
    {0x1040B, "\xf0\x90\x90\xb3"},
    {0x1040C, "\xf0\x90\x90\xb4"},
    {0x1040D, "\xf0\x90\x90\xb5"},
    {0x1040E, "\xf0\x90\x90\xb6"},
    {0x1040F, "\xf0\x90\x90\xb7"},
    {0x10410, "\xf0\x90\x90\xb8"},
    {0x10411, "\xf0\x90\x90\xb9"},
    {0x10412, "\xf0\x90\x90\xba"},
    {0x10413, "\xf0\x90\x90\xbb"},
    {0x10414, "\xf0\x90\x90\xbc"},
    {0x10415, "\xf0\x90\x90\xbd"},
    {0x10416, "\xf0\x90\x90\xbe"},
    {0x10417, "\xf0\x90\x90\xbf"},
    {0x10418, "\xf0\x90\x91\x80"},
    {0x10419, "\xf0\x90\x91\x81"},
    {0x1041A, "\xf0\x90\x91\x82"},
    {0x1041B, "\xf0\x90\x91\x83"},
    {0x1041C, "\xf0\x90\x91\x84"},
    {0x1041D, "\xf0\x90\x91\x85"},
    {0x1041E, "\xf0\x90\x91\x86"},
    {0x1041F, "\xf0\x90\x91\x87"},
    {0x10420, "\xf0\x90\x91\x88"},
    {0x10421, "\xf0\x90\x91\x89"},
    {0x10422, "\xf0\x90\x91\x8a"},
    {0x10423, "\xf0\x90\x91\x8b"},
    {0x10424, "\xf0\x90\x91\x8c"},
    {0x10425, "\xf0\x90\x91\x8d"},
    {0x10426, "\xf0\x90\x91\x8e"},
    {0x10427, "\xf0\x90\x91\x8f"},
    {0x104B0, "\xf0\x90\x93\x98"},
    {0x104B1, "\xf0\x90\x93\x99"},
    {0x104B2, "\xf0\x90\x93\x9a"},
    {0x104B3, "\xf0\x90\x93\x9b"},
    {0x104B4, "\xf0\x90\x93\x9c"},
    {0x104B5, "\xf0\x90\x93\x9d"},
    {0x104B6, "\xf0\x90\x93\x9e"},
    {0x104B7, "\xf0\x90\x93\x9f"},
    {0x104B8, "\xf0\x90\x93\xa0"},
    {0x104B9, "\xf0\x90\x93\xa1"},
    {0x104BA, "\xf0\x90\x93\xa2"},
    {0x104BB, "\xf0\x90\x93\xa3"},
    {0x104BC, "\xf0\x90\x93\xa4"},
    {0x104BD, "\xf0\x90\x93\xa5"},
    {0x104BE, "\xf0\x90\x93\xa6"},
    {0x104BF, "\xf0\x90\x93\xa7"},
    {0x104C0, "\xf0\x90\x93\xa8"},
    {0x104C1, "\xf0\x90\x93\xa9"},
    {0x104C2, "\xf0\x90\x93\xaa"},
    {0x104C3, "\xf0\x90\x93\xab"},
    {0x104C4, "\xf0\x90\x93\xac"},
    {0x104C5, "\xf0\x90\x93\xad"},
    {0x104C6, "\xf0\x90\x93\xae"},
    {0x104C7, "\xf0\x90\x93\xaf"},
    {0x104C8, "\xf0\x90\x93\xb0"},
    {0x104C9, "\xf0\x90\x93\xb1"},
    {0x104CA, "\xf0\x90\x93\xb2"},
    {0x104CB, "\xf0\x90\x93\xb3"},
    {0x104CC, "\xf0\x90\x93\xb4"},
    {0x104CD, "\xf0\x90\x93\xb5"},
    {0x104CE, "\xf0\x90\x93\xb6"},
    {0x104CF, "\xf0\x90\x93\xb7"},
    {0x104D0, "\xf0\x90\x93\xb8"},
    {0x104D1, "\xf0\x90\x93\xb9"},
    {0x104D2, "\xf0\x90\x93\xba"},
    {0x104D3, "\xf0\x90\x93\xbb"},
    {0x10C80, "\xf0\x90\xb3\x80"},
    {0x10C81, "\xf0\x90\xb3\x81"},
    {0x10C82, "\xf0\x90\xb3\x82"},
    {0x10C83, "\xf0\x90\xb3\x83"},
    {0x10C84, "\xf0\x90\xb3\x84"},
    {0x10C85, "\xf0\x90\xb3\x85"},
    {0x10C86, "\xf0\x90\xb3\x86"},
    {0x10C87, "\xf0\x90\xb3\x87"},
    {0x10C88, "\xf0\x90\xb3\x88"},
    {0x10C89, "\xf0\x90\xb3\x89"},
    {0x10C8A, "\xf0\x90\xb3\x8a"},
    {0x10C8B, "\xf0\x90\xb3\x8b"},
    {0x10C8C, "\xf0\x90\xb3\x8c"},
    {0x10C8D, "\xf0\x90\xb3\x8d"},
    {0x10C8E, "\xf0\x90\xb3\x8e"},
    {0x10C8F, "\xf0\x90\xb3\x8f"},
    {0x10C90, "\xf0\x90\xb3\x90"},
    {0x10C91, "\xf0\x90\xb3\x91"},
    {0x10C92, "\xf0\x90\xb3\x92"},
    {0x10C93, "\xf0\x90\xb3\x93"},
    {0x10C94, "\xf0\x90\xb3\x94"},
    {0x10C95, "\xf0\x90\xb3\x95"},
    {0x10C96, "\xf0\x90\xb3\x96"},
    {0x10C97, "\xf0\x90\xb3\x97"},
    {0x10C98, "\xf0\x90\xb3\x98"},
    {0x10C99, "\xf0\x90\xb3\x99"},
    {0x10C9A, "\xf0\x90\xb3\x9a"},
    {0x10C9B, "\xf0\x90\xb3\x9b"},
    {0x10C9C, "\xf0\x90\xb3\x9c"},
    {0x10C9D, "\xf0\x90\xb3\x9d"},
    {0x10C9E, "\xf0\x90\xb3\x9e"},
    {0x10C9F, "\xf0\x90\xb3\x9f"},
    {0x10CA0, "\xf0\x90\xb3\xa0"},
    {0x10CA1, "\xf0\x90\xb3\xa1"},
    {0x10CA2, "\xf0\x90\xb3\xa2"},
    {0x10CA3, "\xf0\x90\xb3\xa3"},
    {0x10CA4, "\xf0\x90\xb3\xa4"},
    {0x10CA5, "\xf0\x90\xb3\xa5"},
    {0x10CA6, "\xf0\x90\xb3\xa6"},
    {0x10CA7, "\xf0\x90\xb3\xa7"},
    {0x10CA8, "\xf0\x90\xb3\xa8"},
    {0x10CA9, "\xf0\x90\xb3\xa9"},
    {0x10CAA, "\xf0\x90\xb3\xaa"},
    {0x10CAB, "\xf0\x90\xb3\xab"},
    {0x10CAC, "\xf0\x90\xb3\xac"},
    {0x10CAD, "\xf0\x90\xb3\xad"},
    {0x10CAE, "\xf0\x90\xb3\xae"},
    {0x10CAF, "\xf0\x90\xb3\xaf"},
    {0x10CB0, "\xf0\x90\xb3\xb0"},
    {0x10CB1, "\xf0\x90\xb3\xb1"},
    {0x10CB2, "\xf0\x90\xb3\xb2"},
    {0x118A0, "\xf0\x91\xa3\x80"},
    {0x118A1, "\xf0\x91\xa3\x81"},
    {0x118A2, "\xf0\x91\xa3\x82"},
    {0x118A3, "\xf0\x91\xa3\x83"},
    {0x118A4, "\xf0\x91\xa3\x84"},
    {0x118A5, "\xf0\x91\xa3\x85"},
    {0x118A6, "\xf0\x91\xa3\x86"},
    {0x118A7, "\xf0\x91\xa3\x87"},
    {0x118A8, "\xf0\x91\xa3\x88"},
    {0x118A9, "\xf0\x91\xa3\x89"},
    {0x118AA, "\xf0\x91\xa3\x8a"},
    {0x118AB, "\xf0\x91\xa3\x8b"},
    {0x118AC, "\xf0\x91\xa3\x8c"},
    {0x118AD, "\xf0\x91\xa3\x8d"},
    {0x118AE, "\xf0\x91\xa3\x8e"},
    {0x118AF, "\xf0\x91\xa3\x8f"},
    {0x118B0, "\xf0\x91\xa3\x90"},
    {0x118B1, "\xf0\x91\xa3\x91"},
    {0x118B2, "\xf0\x91\xa3\x92"},
    {0x118B3, "\xf0\x91\xa3\x93"},
    {0x118B4, "\xf0\x91\xa3\x94"},
    {0x118B5, "\xf0\x91\xa3\x95"},
    {0x118B6, "\xf0\x91\xa3\x96"},
    {0x118B7, "\xf0\x91\xa3\x97"},
    {0x118B8, "\xf0\x91\xa3\x98"},
    {0x118B9, "\xf0\x91\xa3\x99"},
    {0x118BA, "\xf0\x91\xa3\x9a"},
    {0x118BB, "\xf0\x91\xa3\x9b"},
    {0x118BC, "\xf0\x91\xa3\x9c"},
    {0x118BD, "\xf0\x91\xa3\x9d"},
    {0x118BE, "\xf0\x91\xa3\x9e"},
    {0x118BF, "\xf0\x91\xa3\x9f"},
    {0x16E40, "\xf0\x96\xb9\xa0"},
    {0x16E41, "\xf0\x96\xb9\xa1"},
    {0x16E42, "\xf0\x96\xb9\xa2"},
    {0x16E43, "\xf0\x96\xb9\xa3"},
    {0x16E44, "\xf0\x96\xb9\xa4"},
    {0x16E45, "\xf0\x96\xb9\xa5"},
    {0x16E46, "\xf0\x96\xb9\xa6"},
    {0x16E47, "\xf0\x96\xb9\xa7"},
    {0x16E48, "\xf0\x96\xb9\xa8"},
    {0x16E49, "\xf0\x96\xb9\xa9"},
    {0x16E4A, "\xf0\x96\xb9\xaa"},
    {0x16E4B, "\xf0\x96\xb9\xab"},
    {0x16E4C, "\xf0\x96\xb9\xac"},
    {0x16E4D, "\xf0\x96\xb9\xad"},
    {0x16E4E, "\xf0\x96\xb9\xae"},
    {0x16E4F, "\xf0\x96\xb9\xaf"},
    {0x16E50, "\xf0\x96\xb9\xb0"},
    {0x16E51, "\xf0\x96\xb9\xb1"},
    {0x16E52, "\xf0\x96\xb9\xb2"},
    {0x16E53, "\xf0\x96\xb9\xb3"},
    {0x16E54, "\xf0\x96\xb9\xb4"},
    {0x16E55, "\xf0\x96\xb9\xb5"},
    {0x16E56, "\xf0\x96\xb9\xb6"},
    {0x16E57, "\xf0\x96\xb9\xb7"},
    {0x16E58, "\xf0\x96\xb9\xb8"},
    {0x16E59, "\xf0\x96\xb9\xb9"},
    {0x16E5A, "\xf0\x96\xb9\xba"},
    {0x16E5B, "\xf0\x96\xb9\xbb"},
    {0x16E5C, "\xf0\x96\xb9\xbc"},
    {0x16E5D, "\xf0\x96\xb9\xbd"},
    {0x16E5E, "\xf0\x96\xb9\xbe"},
    {0x16E5F, "\xf0\x96\xb9\xbf"},
    {0x1E900, "\xf0\x9e\xa4\xa2"},
    {0x1E901, "\xf0\x9e\xa4\xa3"},
    {0x1E902, "\xf0\x9e\xa4\xa4"},
    {0x1E903, "\xf0\x9e\xa4\xa5"},
    {0x1E904, "\xf0\x9e\xa4\xa6"},
    {0x1E905, "\xf0\x9e\xa4\xa7"},
    {0x1E906, "\xf0\x9e\xa4\xa8"},
    {0x1E907, "\xf0\x9e\xa4\xa9"},
    {0x1E908, "\xf0\x9e\xa4\xaa"},
    {0x1E909, "\xf0\x9e\xa4\xab"},
    {0x1E90A, "\xf0\x9e\xa4\xac"},
    {0x1E90B, "\xf0\x9e\xa4\xad"},
    {0x1E90C, "\xf0\x9e\xa4\xae"},
    {0x1E90D, "\xf0\x9e\xa4\xaf"},
    {0x1E90E, "\xf0\x9e\xa4\xb0"},
    {0x1E90F, "\xf0\x9e\xa4\xb1"},
    {0x1E910, "\xf0\x9e\xa4\xb2"},
    {0x1E911, "\xf0\x9e\xa4\xb3"},
    {0x1E912, "\xf0\x9e\xa4\xb4"},
    {0x1E913, "\xf0\x9e\xa4\xb5"},
    {0x1E914, "\xf0\x9e\xa4\xb6"},
    {0x1E915, "\xf0\x9e\xa4\xb7"},
    {0x1E916, "\xf0\x9e\xa4\xb8"},
    {0x1E917, "\xf0\x9e\xa4\xb9"},
    {0x1E918, "\xf0\x9e\xa4\xba"},
    {0x1E919, "\xf0\x9e\xa4\xbb"},
    {0x1E91A, "\xf0\x9e\xa4\xbc"},
    {0x1E91B, "\xf0\x9e\xa4\xbd"},
    {0x1E91C, "\xf0\x9e\xa4\xbe"},
    {0x1E91D, "\xf0\x9e\xa4\xbf"},
    {0x1E91E, "\xf0\x9e\xa5\x80"},
    {0x1E91F, "\xf0\x9e\xa5\x81"},
    {0x1E920, "\xf0\x9e\xa5\x82"},
    {0x1E921, "\xf0\x9e\xa5\x83"},
}};

const std::array<CodepointMapping, 1447> kTextFixes = {{
    {0x0, ""},
    {0x1, ""},
    {0x2, ""},
    {0x3, ""},
    {0x4, ""},
    {0x5, ""},
    {0x6, ""},
    {0x7, ""},
    {0x8, ""},
    {0xB, ""},
    {0xD, "\x0a"},
    {0xE, ""},
    {0xF, ""},
    {0x10, ""},
    {0x11, ""},
    {0x12, ""},
    {0x13, ""},
    {0x14, ""},
    {0x15, ""},
    {0x16, ""},
    {0x17, ""},
    {0x18, ""},
    {0x19, ""},
    {0x1A, ""},
    {0x1B, ""},
    {0x1C, ""},
    {0x1D, ""},
    {0x1E, ""},
    {0x1F, ""},
    {0x7F, ""},
    {0x80, "\xe2\x82\xac"},
    {0x82, "'"},
    {0x83, "\xc6\x92"},
    {0x84, "\x22"},
    {0x85, "\xe2\x80\xa6"},
    {0x86, "\xe2\x80\xa0"},
    {0x87, "\xe2\x80\xa1"},
    {0x88, "\xcb\x86"},
    {0x89, "\xe2\x80\xb0"},
    {0x8A, "\xc5\xa0"},
    {0x8B, "\xe2\x80\xb9"},
    {0x8C, "\xc5\x92"},
    {0x8E, "\xc5\xbd"},
    {0x91, "'"},
    {0x92, "'"},
    {0x93, "\x22"},
    {0x94, "\x22"},
    {0x95, "\xe2\x80\xa2"},
    {0x96, "\xe2\x80\x93"},
    {0x97, "\xe2\x80\x94"},
    {0x98, "\xcb\x9c"},
    {0x99, "\xe2\x84\xa2"},
    {0x9A, "\xc5\xa1"},
    {0x9B, "\xe2\x80\xba"},
    {0x9C, "\xc5\x93"},
    {0x9E, "\xc5\xbe"},
    {0x9F, "\xc5\xb8"},
    {0x132, "IJ"},
    {0x133, "ij"},
    {0x149, "'n"},
    {0x1C4, "D\xc5\xbd"},
    {0x1C5, "D\xc5\xbe"},
    {0x1C6, "d\xc5\xbe"},
    {0x1C7, "LJ"},
    {0x1C8, "Lj"},
    {0x1C9, "lj"},
    {0x1CA, "NJ"},
    {0x1CB, "Nj"},
    {0x1CC, "nj"},
    {0x1F1, "DZ"},
    {0x1F2, "Dz"},
    {0x1F3, "dz"},
    {0x2BC, "'"},
    {0x340, "\xcc\x80"},
    {0x341, "\xcc\x81"},
    {0x343, "\xcc\x93"},
    {0x344, "\xcc\x88\xcc\x81"},
    {0x374, "\xca\xb9"},
    {0x37E, ";"},
    {0x387, "\xc2\xb7"},
    {0x958, "\xe0\xa4\x95\xe0\xa4\xbc"},
    {0x959, "\xe0\xa4\x96\xe0\xa4\xbc"},
    {0x95A, "\xe0\xa4\x97\xe0\xa4\xbc"},
    {0x95B, "\xe0\xa4\x9c\xe0\xa4\xbc"},
    {0x95C, "\xe0\xa4\xa1\xe0\xa4\xbc"},
    {0x95D, "\xe0\xa4\xa2\xe0\xa4\xbc"},
    {0x95E, "\xe0\xa4\xab\xe0\xa4\xbc"},
    {0x95F, "\xe0\xa4\xaf\xe0\xa4\xbc"},
    {0x9DC, "\xe0\xa6\xa1\xe0\xa6\xbc"},
    {0x9DD, "\xe0\xa6\xa2\xe0\xa6\xbc"},
    {0x9DF, "\xe0\xa6\xaf\xe0\xa6\xbc"},
    {0xA33, "\xe0\xa8\xb2\xe0\xa8\xbc"},
    {0xA36, "\xe0\xa8\xb8\xe0\xa8\xbc"},
    {0xA59, "\xe0\xa8\x96\xe0\xa8\xbc"},
    {0xA5A, "\xe0\xa8\x97\xe0\xa8\xbc"},
    {0xA5B, "\xe0\xa8\x9c\xe0\xa8\xbc"},
    {0xA5E, "\xe0\xa8\xab\xe0\xa8\xbc"},
    {0xB5C, "\xe0\xac\xa1\xe0\xac\xbc"},
    {0xB5D, "\xe0\xac\xa2\xe0\xac\xbc"},
    {0xF43, "\xe0\xbd\x82\xe0\xbe\xb7"},
    {0xF4D, "\xe0\xbd\x8c\xe0\xbe\xb7"},
    {0xF52, "\xe0\xbd\x91\xe0\xbe\xb7"},
    {0xF57, "\xe0\xbd\x96\xe0\xbe\xb7"},
    {0xF5C, "\xe0\xbd\x9b\xe0\xbe\xb7"},
    {0xF69, "\xe0\xbd\x80\xe0\xbe\xb5"},
    {0xF73, "\xe0\xbd\xb1\xe0\xbd\xb2"},
    {0xF75, "\xe0\xbd\xb1\xe0\xbd\xb4"},
    {0xF76, "\xe0\xbe\xb2\xe0\xbe\x80"},
    {0xF78, "\xe0\xbe\xb3\xe0\xbe\x80"},
    {0xF81, "\xe0\xbd\xb1\xe0\xbe\x80"},
    {0xF93, "\xe0\xbe\x92\xe0\xbe\xb7"},
    {0xF9D, "\xe0\xbe\x9c\xe0\xbe\xb7"},
    {0xFA2, "\xe0\xbe\xa1\xe0\xbe\xb7"},
    {0xFA7, "\xe0\xbe\xa6\xe0\xbe\xb7"},
    {0xFAC, "\xe0\xbe\xab\xe0\xbe\xb7"},
    {0xFB9, "\xe0\xbe\x90\xe0\xbe\xb5"},
    {0x1F71, "\xce\xac"},
    {0x1F73, "\xce\xad"},
    {0x1F75, "\xce\xae"},
    {0x1F77, "\xce\xaf"},
    {0x1F79, "\xcf\x8c"},
    {0x1F7B, "\xcf\x8d"},
    {0x1F7D, "\xcf\x8e"},
    {0x1FBB, "\xce\x86"},
    {0x1FBE, "\xce\xb9"},
    {0x1FC9, "\xce\x88"},
    {0x1FCB, "\xce\x89"},
    {0x1FD3, "\xce\x90"},
    {0x1FDB, "\xce\x8a"},
    {0x1FE3, "\xce\xb0"},
    {0x1FEB, "\xce\x8e"},
    {0x1FEE, "\xce\x85"},
    {0x1FEF, "`"},
    {0x1FF9, "\xce\x8c"},
    {0x1FFB, "\xce\x8f"},
    {0x1FFD, "\xc2\xb4"},
    {0x2000, "\xe2\x80\x82"},
    {0x2001, "\xe2\x80\x83"},
    {0x2018, "'"},
    {0x2019, "'"},
    {0x201A, "'"},
    {0x201B, "'"},
    {0x201C, "\x22"},
    {0x201D, "\x22"},
    {0x201E, "\x22"},
    {0x201F, "\x22"},
    {0x2028, "\x0a"},
    {0x2029, "\x0a"},
    {0x206A, ""},
    {0x206B, ""},
    {0x206C, ""},
    {0x206D, ""},
    {0x206E, ""},
    {0x206F, ""},
    {0x2126, "\xce\xa9"},
    {0x212A, "K"},
    {0x212B, "\xc3\x85"},
    {0x2329, "\xe3\x80\x88"},
    {0x232A, "\xe3\x80\x89"},
    {0x2ADC, "\xe2\xab\x9d\xcc\xb8"},
    {0x3000, " "},
    {0xF900, "\xe8\xb1\x88"},
    {0xF901, "\xe6\x9b\xb4"},
    {0xF902, "\xe8\xbb\x8a"},
    {0xF903, "\xe8\xb3\x88"},
    {0xF904, "\xe6\xbb\x91"},
    {0xF905, "\xe4\xb8\xb2"},
    {0xF906, "\xe5\x8f\xa5"},
    {0xF907, "\xe9\xbe\x9c"},
    {0xF908, "\xe9\xbe\x9c"},
    {0xF909, "\xe5\xa5\x91"},
    {0xF90A, "\xe9\x87\x91"},
    {0xF90B, "\xe5\x96\x87"},
    {0xF90C, "\xe5\xa5\x88"},
    {0xF90D, "\xe6\x87\xb6"},
    {0xF90E, "\xe7\x99\xa9"},
    {0xF90F, "\xe7\xbe\x85"},
    {0xF910, "\xe8\x98\xbf"},
    {0xF911, "\xe8\x9e\xba"},
    {0xF912, "\xe8\xa3\xb8"},
    {0xF913, "\xe9\x82\x8f"},
    {0xF914, "\xe6\xa8\x82"},
    {0xF915, "\xe6\xb4\x9b"},
    {0xF916, "\xe7\x83\x99"},
    {0xF917, "\xe7\x8f\x9e"},
    {0xF918, "\xe8\x90\xbd"},
    {0xF919, "\xe9\x85\xaa"},
    {0xF91A, "\xe9\xa7\xb1"},
    {0xF91B, "\xe4\xba\x82"},
    {0xF91C, "\xe5\x8d\xb5"},
    {0xF91D, "\xe6\xac\x84"},
    {0xF91E, "\xe7\x88\x9b"},
    {0xF91F, "\xe8\x98\xad"},
    {0xF920, "\xe9\xb8\x9e"},
    {0xF921, "\xe5\xb5\x90"},
    {0xF922, "\xe6\xbf\xab"},
    {0xF923, "\xe8\x97\x8d"},
    {0xF924, "\xe8\xa5\xa4"},
    {0xF925, "\xe6\x8b\x89"},
    {0xF926, "\xe8\x87\x98"},
    {0xF927, "\xe8\xa0\x9f"},
    {0xF928, "\xe5\xbb\x8a"},
    {0xF929, "\xe6\x9c\x97"},
    {0xF92A, "\xe6\xb5\xaa"},
    {0xF92B, "\xe7\x8b\xbc"},
    {0xF92C, "\xe9\x83\x8e"},
    {0xF92D, "\xe4\xbe\x86"},
    {0xF92E, "\xe5\x86\xb7"},
    {0xF92F, "\xe5\x8b\x9e"},
    {0xF930, "\xe6\x93\x84"},
    {0xF931, "\xe6\xab\x93"},
    {0xF932, "\xe7\x88\x90"},
    {0xF933, "\xe7\x9b\xa7"},
    {0xF934, "\xe8\x80\x81"},
    {0xF935, "\xe8\x98\x86"},
    {0xF936, "\xe8\x99\x9c"},
    {0xF937, "\xe8\xb7\xaf"},
    {0xF938, "\xe9\x9c\xb2"},
    {0xF939, "\xe9\xad\xaf"},
    {0xF93A, "\xe9\xb7\xba"},
    {0xF93B, "\xe7\xa2\x8c"},
    {0xF93C, "\xe7\xa5\xbf"},
    {0xF93D, "\xe7\xb6\xa0"},
    {0xF93E, "\xe8\x8f\x89"},
    {0xF93F, "\xe9\x8c\x84"},
    {0xF940, "\xe9\xb9\xbf"},
    {0xF941, "\xe8\xab\x96"},
    {0xF942, "\xe5\xa3\x9f"},
    {0xF943, "\xe5\xbc\x84"},
    {0xF944, "\xe7\xb1\xa0"},
    {0xF945, "\xe8\x81\xbe"},
    {0xF946, "\xe7\x89\xa2"},
    {0xF947, "\xe7\xa3\x8a"},
    {0xF948, "\xe8\xb3\x82"},
    {0xF949, "\xe9\x9b\xb7"},
    {0xF94A, "\xe5\xa3\x98"},
    {0xF94B, "\xe5\xb1\xa2"},
    {0xF94C, "\xe6\xa8\x93"},
    {0xF94D, "\xe6\xb7\x9a"},
    {0xF94E, "\xe6\xbc\x8f"},
    {0xF94F, "\xe7\xb4\xaf"},
    {0xF950, "\xe7\xb8\xb7"},
    {0xF951, "\xe9\x99\x8b"},
    {0xF952, "\xe5\x8b\x92"},
    {0xF953, "\xe8\x82\x8b"},
    {0xF954, "\xe5\x87\x9c"},
    {0xF955, "\xe5\x87\x8c"},
    {0xF956, "\xe7\xa8\x9c"},
    {0xF957, "\xe7\xb6\xbe"},
    {0xF958, "\xe8\x8f\xb1"},
    {0xF959, "\xe9\x99\xb5"},
    {0xF95A, "\xe8\xae\x80"},
    {0xF95B, "\xe6\x8b\x8f"},
    {0xF95C, "\xe6\xa8\x82"},
    {0xF95D, "\xe8\xab\xbe"},
    {0xF95E, "\xe4\xb8\xb9"},
    {0xF95F, "\xe5\xaf\xa7"},
    {0xF960, "\xe6\x80\x92"},
    {0xF961, "\xe7\x8e\x87"},
    {0xF962, "\xe7\x95\xb0"},
    {0xF963, "\xe5\x8c\x97"},
    {0xF964, "\xe7\xa3\xbb"},
    {0xF965, "\xe4\xbe\xbf"},
    {0xF966, "\xe5\xbe\xa9"},
    {0xF967, "\xe4\xb8\x8d"},
    {0xF968, "\xe6\xb3\x8c"},
    {0xF969, "\xe6\x95\xb8"},
    {0xF96A, "\xe7\xb4\xa2"},
    {0xF96B, "\xe5\x8f\x83"},
    {0xF96C, "\xe5\xa1\x9e"},
    {0xF96D, "\xe7\x9c\x81"},
    {0xF96E, "\xe8\x91\x89"},
    {0xF96F, "\xe8\xaa\xaa"},
    {0xF970, "\xe6\xae\xba"},
    {0xF971, "\xe8\xbe\xb0"},
    {0xF972, "\xe6\xb2\x88"},
    {0xF973, "\xe6\x8b\xbe"},
    {0xF974, "\xe8\x8b\xa5"},
    {0xF975, "\xe6\x8e\xa0"},
    {0xF976, "\xe7\x95\xa5"},
    {0xF977, "\xe4\xba\xae"},
    {0xF978, "\xe5\x85\xa9"},
    {0xF979, "\xe5\x87\x89"},
    {0xF97A, "\xe6\xa2\x81"},
    {0xF97B, "\xe7\xb3\xa7"},
    {0xF97C, "\xe8\x89\xaf"},
    {0xF97D, "\xe8\xab\x92"},
    {0xF97E, "\xe9\x87\x8f"},
    {0xF97F, "\xe5\x8b\xb5"},
    {0xF980, "\xe5\x91\x82"},
    {0xF981, "\xe5\xa5\xb3"},
    {0xF982, "\xe5\xbb\xac"},
    {0xF983, "\xe6\x97\x85"},
    {0xF984, "\xe6\xbf\xbe"},
    {0xF985, "\xe7\xa4\xaa"},
    {0xF986, "\xe9\x96\xad"},
    {0xF987, "\xe9\xa9\xaa"},
    {0xF988, "\xe9\xba\x97"},
    {0xF989, "\xe9\xbb\x8e"},
    {0xF98A, "\xe5\x8a\x9b"},
    {0xF98B, "\xe6\x9b\x86"},
    {0xF98C, "\xe6\xad\xb7"},
    {0xF98D, "\xe8\xbd\xa2"},
    {0xF98E, "\xe5\xb9\xb4"},
    {0xF98F, "\xe6\x86\x90"},
    {0xF990, "\xe6\x88\x80"},
    {0xF991, "\xe6\x92\x9a"},
    {0xF992, "\xe6\xbc\xa3"},
    {0xF993, "\xe7\x85\x89"},
    {0xF994, "\xe7\x92\x89"},
    {0xF995, "\xe7\xa7\x8a"},
    {0xF996, "\xe7\xb7\xb4"},
    {0xF997, "\xe8\x81\xaf"},
    {0xF998, "\xe8\xbc\xa6"},
    {0xF999, "\xe8\x93\xae"},
    {0xF99A, "\xe9\x80\xa3"},
    {0xF99B, "\xe9\x8d\x8a"},
    {0xF99C, "\xe5\x88\x97"},
    {0xF99D, "\xe5\x8a\xa3"},
    {0xF99E, "\xe5\x92\xbd"},
    {0xF99F, "\xe7\x83\x88"},
    {0xF9A0, "\xe8\xa3\x82"},
    {0xF9A1, "\xe8\xaa\xaa"},
    {0xF9A2, "\xe5\xbb\x89"},
    {0xF9A3, "\xe5\xbf\xb5"},
    {0xF9A4, "\xe6\x8d\xbb"},
    {0xF9A5, "\xe6\xae\xae"},
    {0xF9A6, "\xe7\xb0\xbe"},
    {0xF9A7, "\xe7\x8d\xb5"},
    {0xF9A8, "\xe4\xbb\xa4"},
    {0xF9A9, "\xe5\x9b\xb9"},
    {0xF9AA, "\xe5\xaf\xa7"},
    {0xF9AB, "\xe5\xb6\xba"},
    {0xF9AC, "\xe6\x80\x9c"},
    {0xF9AD, "\xe7\x8e\xb2"},
    {0xF9AE, "\xe7\x91\xa9"},
    {0xF9AF, "\xe7\xbe\x9a"},
    {0xF9B0, "\xe8\x81\x86"},
    {0xF9B1, "\xe9\x88\xb4"},
    {0xF9B2, "\xe9\x9b\xb6"},
    {0xF9B3, "\xe9\x9d\x88"},
    {0xF9B4, "\xe9\xa0\x98"},
    {0xF9B5, "\xe4\xbe\x8b"},
    {0xF9B6, "\xe7\xa6\xae"},
    {0xF9B7, "\xe9\x86\xb4"},
    {0xF9B8, "\xe9\x9a\xb8"},
    {0xF9B9, "\xe6\x83\xa1"},
    {0xF9BA, "\xe4\xba\x86"},
    {0xF9BB, "\xe5\x83\x9a"},
    {0xF9BC, "\xe5\xaf\xae"},
    {0xF9BD, "\xe5\xb0\xbf"},
    {0xF9BE, "\xe6\x96\x99"},
    {0xF9BF, "\xe6\xa8\x82"},
    {0xF9C0, "\xe7\x87\x8e"},
    {0xF9C1, "\xe7\x99\x82"},
    {0xF9C2, "\xe8\x93\xbc"},
    {0xF9C3, "\xe9\x81\xbc"},
    {0xF9C4, "\xe9\xbe\x8d"},
    {0xF9C5, "\xe6\x9a\x88"},
    {0xF9C6, "\xe9\x98\xae"},
    {0xF9C7, "\xe5\x8a\x89"},
    {0xF9C8, "\xe6\x9d\xbb"},
    {0xF9C9, "\xe6\x9f\xb3"},
    {0xF9CA, "\xe6\xb5\x81"},
    {0xF9CB, "\xe6\xba\x9c"},
    {0xF9CC, "\xe7\x90\x89"},
    {0xF9CD, "\xe7\x95\x99"},
    {0xF9CE, "\xe7\xa1\xab"},
    {0xF9CF, "\xe7\xb4\x90"},
    {0xF9D0, "\xe9\xa1\x9e"},
    {0xF9D1, "\xe5\x85\xad"},
    {0xF9D2, "\xe6\x88\xae"},
    {0xF9D3, "\xe9\x99\xb8"},
    {0xF9D4, "\xe5\x80\xab"},
    {0xF9D5, "\xe5\xb4\x99"},
    {0xF9D6, "\xe6\xb7\xaa"},
    {0xF9D7, "\xe8\xbc\xaa"},
    {0xF9D8, "\xe5\xbe\x8b"},
    {0xF9D9, "\xe6\x85\x84"},
    {0xF9DA, "\xe6\xa0\x97"},
    {0xF9DB, "\xe7\x8e\x87"},
    {0xF9DC, "\xe9\x9a\x86"},
    {0xF9DD, "\xe5\x88\xa9"},
    {0xF9DE, "\xe5\x90\x8f"},
    {0xF9DF, "\xe5\xb1\xa5"},
    {0xF9E0, "\xe6\x98\x93"},
    {0xF9E1, "\xe6\x9d\x8e"},
    {0xF9E2, "\xe6\xa2\xa8"},
    {0xF9E3, "\xe6\xb3\xa5"},
    {0xF9E4, "\xe7\x90\x86"},
    {0xF9E5, "\xe7\x97\xa2"},
    {0xF9E6, "\xe7\xbd\xb9"},
    {0xF9E7, "\xe8\xa3\x8f"},
    {0xF9E8, "\xe8\xa3\xa1"},
    {0xF9E9, "\xe9\x87\x8c"},
    {0xF9EA, "\xe9\x9b\xa2"},
    {0xF9EB, "\xe5\x8c\xbf"},
    {0xF9EC, "\xe6\xba\xba"},
    {0xF9ED, "\xe5\x90\x9d"},
    {0xF9EE, "\xe7\x87\x90"},
    {0xF9EF, "\xe7\x92\x98"},
    {0xF9F0, "\xe8\x97\xba"},
    {0xF9F1, "\xe9\x9a\xa3"},
    {0xF9F2, "\xe9\xb1\x97"},
    {0xF9F3, "\xe9\xba\x9f"},
    {0xF9F4, "\xe6\x9e\x97"},
    {0xF9F5, "\xe6\xb7\x8b"},
    {0xF9F6, "\xe8\x87\xa8"},
    {0xF9F7, "\xe7\xab\x8b"},
    {0xF9F8, "\xe7\xac\xa0"},
    {0xF9F9, "\xe7\xb2\x92"},
    {0xF9FA, "\xe7\x8b\x80"},
    {0xF9FB, "\xe7\x82\x99"},
    {0xF9FC, "\xe8\xad\x98"},
    {0xF9FD, "\xe4\xbb\x80"},
    {0xF9FE, "\xe8\x8c\xb6"},
    {0xF9FF, "\xe5\x88\xba"},
    {0xFA00, "\xe5\x88\x87"},
    {0xFA01, "\xe5\xba\xa6"},
    {0xFA02, "\xe6\x8b\x93"},
    {0xFA03, "\xe7\xb3\x96"},
    {0xFA04, "\xe5\xae\x85"},
    {0xFA05, "\xe6\xb4\x9e"},
    {0xFA06, "\xe6\x9a\xb4"},
    {0xFA07, "\xe8\xbc\xbb"},
    {0xFA08, "\xe8\xa1\x8c"},
    {0xFA09, "\xe9\x99\x8d"},
    {0xFA0A, "\xe8\xa6\x8b"},
    {0xFA0B, "\xe5\xbb\x93"},
    {0xFA0C, "\xe5\x85\x80"},
    {0xFA0D, "\xe5\x97\x80"},
    {0xFA10, "\xe5\xa1\x9a"},
    {0xFA12, "\xe6\x99\xb4"},
    {0xFA15, "\xe5\x87\x9e"},
    {0xFA16, "\xe7\x8c\xaa"},
    {0xFA17, "\xe7\x9b\x8a"},
    {0xFA18, "\xe7\xa4\xbc"},
    {0xFA19, "\xe7\xa5\x9e"},
    {0xFA1A, "\xe7\xa5\xa5"},
    {0xFA1B, "\xe7\xa6\x8f"},
    {0xFA1C, "\xe9\x9d\x96"},
    {0xFA1D, "\xe7\xb2\xbe"},
    {0xFA1E, "\xe7\xbe\xbd"},
    {0xFA20, "\xe8\x98\x92"},
    {0xFA22, "\xe8\xab\xb8"},
    {0xFA25, "\xe9\x80\xb8"},
    {0xFA26, "\xe9\x83\xbd"},
    {0xFA2A, "\xe9\xa3\xaf"},
    {0xFA2B, "\xe9\xa3\xbc"},
    {0xFA2C, "\xe9\xa4\xa8"},
    {0xFA2D, "\xe9\xb6\xb4"},
    {0xFA2E, "\xe9\x83\x9e"},
    {0xFA2F, "\xe9\x9a\xb7"},
    {0xFA30, "\xe4\xbe\xae"},
    {0xFA31, "\xe5\x83\xa7"},
    {0xFA32, "\xe5\x85\x8d"},
    {0xFA33, "\xe5\x8b\x89"},
    {0xFA34, "\xe5\x8b\xa4"},
    {0xFA35, "\xe5\x8d\x91"},
    {0xFA36, "\xe5\x96\x9d"},
    {0xFA37, "\xe5\x98\x86"},
    {0xFA38, "\xe5\x99\xa8"},
    {0xFA39, "\xe5\xa1\x80"},
    {0xFA3A, "\xe5\xa2\xa8"},
    {0xFA3B, "\xe5\xb1\xa4"},
    {0xFA3C, "\xe5\xb1\xae"},
    {0xFA3D, "\xe6\x82\x94"},
    {0xFA3E, "\xe6\x85\xa8"},
    {0xFA3F, "\xe6\x86\x8e"},
    {0xFA40, "\xe6\x87\xb2"},
    {0xFA41, "\xe6\x95\x8f"},
    {0xFA42, "\xe6\x97\xa2"},
    {0xFA43, "\xe6\x9a\x91"},
    {0xFA44, "\xe6\xa2\x85"},
    {0xFA45, "\xe6\xb5\xb7"},
    {0xFA46, "\xe6\xb8\x9a"},
    {0xFA47, "\xe6\xbc\xa2"},
    {0xFA48, "\xe7\x85\xae"},
    {0xFA49, "\xe7\x88\xab"},
    {0xFA4A, "\xe7\x90\xa2"},
    {0xFA4B, "\xe7\xa2\x91"},
    {0xFA4C, "\xe7\xa4\xbe"},
    {0xFA4D, "\xe7\xa5\x89"},
    {0xFA4E, "\xe7\xa5\x88"},
    {0xFA4F, "\xe7\xa5\x90"},
    {0xFA50, "\xe7\xa5\x96"},
    {0xFA51, "\xe7\xa5\x9d"},
    {0xFA52, "\xe7\xa6\x8d"},
    {0xFA53, "\xe7\xa6\x8e"},
    {0xFA54, "\xe7\xa9\x80"},
    {0xFA55, "\xe7\xaa\x81"},
    {0xFA56, "\xe7\xaf\x80"},
    {0xFA57, "\xe7\xb7\xb4"},
    {0xFA58, "\xe7\xb8\x89"},
    {0xFA59, "\xe7\xb9\x81"},
    {0xFA5A, "\xe7\xbd\xb2"},
    {0xFA5B, "\xe8\x80\x85"},
    {0xFA5C, "\xe8\x87\xad"},
    {0xFA5D, "\xe8\x89\xb9"},
    {0xFA5E, "\xe8\x89\xb9"},
    {0xFA5F, "\xe8\x91\x97"},
    {0xFA60, "\xe8\xa4\x90"},
    {0xFA61, "\xe8\xa6\x96"},
    {0xFA62, "\xe8\xac\x81"},
    {0xFA63, "\xe8\xac\xb9"},
    {0xFA64, "\xe8\xb3\x93"},
    {0xFA65, "\xe8\xb4\x88"},
    {0xFA66, "\xe8\xbe\xb6"},
    {0xFA67, "\xe9\x80\xb8"},
    {0xFA68, "\xe9\x9b\xa3"},
    {0xFA69, "\xe9\x9f\xbf"},
    {0xFA6A, "\xe9\xa0\xbb"},
    {0xFA6B, "\xe6\x81\xb5"},
    {0xFA6C, "\xf0\xa4\x8b\xae"},
    {0xFA6D, "\xe8\x88\x98"},
    {0xFA70, "\xe4\xb8\xa6"},
    {0xFA71, "\xe5\x86\xb5"},
    {0xFA72, "\xe5\x85\xa8"},
    {0xFA73, "\xe4\xbe\x80"},
    {0xFA74, "\xe5\x85\x85"},
    {0xFA75, "\xe5\x86\x80"},
    {0xFA76, "\xe5\x8b\x87"},
    {0xFA77, "\xe5\x8b\xba"},
    {0xFA78, "\xe5\x96\x9d"},
    {0xFA79, "\xe5\x95\x95"},
    {0xFA7A, "\xe5\x96\x99"},
    {0xFA7B, "\xe5\x97\xa2"},
    {0xFA7C, "\xe5\xa1\x9a"},
    {0xFA7D, "\xe5\xa2\xb3"},
    {0xFA7E, "\xe5\xa5\x84"},
    {0xFA7F, "\xe5\xa5\x94"},
    {0xFA80, "\xe5\xa9\xa2"},
    {0xFA81, "\xe5\xac\xa8"},
    {0xFA82, "\xe5\xbb\x92"},
    {0xFA83, "\xe5\xbb\x99"},
    {0xFA84, "\xe5\xbd\xa9"},
    {0xFA85, "\xe5\xbe\xad"},
    {0xFA86, "\xe6\x83\x98"},
    {0xFA87, "\xe6\x85\x8e"},
    {0xFA88, "\xe6\x84\x88"},
    {0xFA89, "\xe6\x86\x8e"},
    {0xFA8A, "\xe6\x85\xa0"},
    {0xFA8B, "\xe6\x87\xb2"},
    {0xFA8C, "\xe6\x88\xb4"},
    {0xFA8D, "\xe6\x8f\x84"},
    {0xFA8E, "\xe6\x90\x9c"},
    {0xFA8F, "\xe6\x91\x92"},
    {0xFA90, "\xe6\x95\x96"},
    {0xFA91, "\xe6\x99\xb4"},
    {0xFA92, "\xe6\x9c\x97"},
    {0xFA93, "\xe6\x9c\x9b"},
    {0xFA94, "\xe6\x9d\x96"},
    {0xFA95, "\xe6\xad\xb9"},
    {0xFA96, "\xe6\xae\xba"},
    {0xFA97, "\xe6\xb5\x81"},
    {0xFA98, "\xe6\xbb\x9b"},
    {0xFA99, "\xe6\xbb\x8b"},
    {0xFA9A, "\xe6\xbc\xa2"},
    {0xFA9B, "\xe7\x80\x9e"},
    {0xFA9C, "\xe7\x85\xae"},
    {0xFA9D, "\xe7\x9e\xa7"},
    {0xFA9E, "\xe7\x88\xb5"},
    {0xFA9F, "\xe7\x8a\xaf"},
    {0xFAA0, "\xe7\x8c\xaa"},
    {0xFAA1, "\xe7\x91\xb1"},
    {0xFAA2, "\xe7\x94\x86"},
    {0xFAA3, "\xe7\x94\xbb"},
    {0xFAA4, "\xe7\x98\x9d"},
    {0xFAA5, "\xe7\x98\x9f"},
    {0xFAA6, "\xe7\x9b\x8a"},
    {0xFAA7, "\xe7\x9b\x9b"},
    {0xFAA8, "\xe7\x9b\xb4"},
    {0xFAA9, "\xe7\x9d\x8a"},
    {0xFAAA, "\xe7\x9d\x80"},
    {0xFAAB, "\xe7\xa3\x8c"},
    {0xFAAC, "\xe7\xaa\xb1"},
    {0xFAAD, "\xe7\xaf\x80"},
    {0xFAAE, "\xe7\xb1\xbb"},
    {0xFAAF, "\xe7\xb5\x9b"},
    {0xFAB0, "\xe7\xb7\xb4"},
    {0xFAB1, "\xe7\xbc\xbe"},
    {0xFAB2, "\xe8\x80\x85"},
    {0xFAB3, "\xe8\x8d\x92"},
    {0xFAB4, "\xe8\x8f\xaf"},
    {0xFAB5, "\xe8\x9d\xb9"},
    {0xFAB6, "\xe8\xa5\x81"},
    {0xFAB7, "\xe8\xa6\x86"},
    {0xFAB8, "\xe8\xa6\x96"},
    {0xFAB9, "\xe8\xaa\xbf"},
    {0xFABA, "\xe8\xab\xb8"},
    {0xFABB, "\xe8\xab\x8b"},
    {0xFABC, "\xe8\xac\x81"},
    {0xFABD, "\xe8\xab\xbe"},
    {0xFABE, "\xe8\xab\xad"},
    {0xFABF, "\xe8\xac\xb9"},
    {0xFAC0, "\xe8\xae\x8a"},
    {0xFAC1, "\xe8\xb4\x88"},
    {0xFAC2, "\xe8\xbc\xb8"},
    {0xFAC3, "\xe9\x81\xb2"},
    {0xFAC4, "\xe9\x86\x99"},
    {0xFAC5, "\xe9\x89\xb6"},
    {0xFAC6, "\xe9\x99\xbc"},
    {0xFAC7, "\xe9\x9b\xa3"},
    {0xFAC8, "\xe9\x9d\x96"},
    {0xFAC9, "\xe9\x9f\x9b"},
    {0xFACA, "\xe9\x9f\xbf"},
    {0xFACB, "\xe9\xa0\x8b"},
    {0xFACC, "\xe9\xa0\xbb"},
    {0xFACD, "\xe9\xac\x92"},
    {0xFACE, "\xe9\xbe\x9c"},
    {0xFACF, "\xf0\xa2\xa1\x8a"},
    {0xFAD0, "\xf0\xa2\xa1\x84"},
    {0xFAD1, "\xf0\xa3\x8f\x95"},
    {0xFAD2, "\xe3\xae\x9d"},
    {0xFAD3, "\xe4\x80\x98"},
    {0xFAD4, "\xe4\x80\xb9"},
    {0xFAD5, "\xf0\xa5\x89\x89"},
    {0xFAD6, "\xf0\xa5\xb3\x90"},
    {0xFAD7, "\xf0\xa7\xbb\x93"},
    {0xFAD8, "\xe9\xbd\x83"},
    {0xFAD9, "\xe9\xbe\x8e"},
    {0xFB00, "ff"},
    {0xFB01, "fi"},
    {0xFB02, "fl"},
    {0xFB03, "ffi"},
    {0xFB04, "ffl"},
    {0xFB05, "\xc5\xbft"},
    {0xFB06, "st"},
    {0xFB1D, "\xd7\x99\xd6\xb4"},
    {0xFB1F, "\xd7\xb2\xd6\xb7"},
    {0xFB2A, "\xd7\xa9\xd7\x81"},
    {0xFB2B, "\xd7\xa9\xd7\x82"},
    {0xFB2C, "\xd7\xa9\xd6\xbc\xd7\x81"},
    {0xFB2D, "\xd7\xa9\xd6\xbc\xd7\x82"},
    {0xFB2E, "\xd7\x90\xd6\xb7"},
    {0xFB2F, "\xd7\x90\xd6\xb8"},
    {0xFB30, "\xd7\x90\xd6\xbc"},
    {0xFB31, "\xd7\x91\xd6\xbc"},
    {0xFB32, "\xd7\x92\xd6\xbc"},
    {0xFB33, "\xd7\x93\xd6\xbc"},
    {0xFB34, "\xd7\x94\xd6\xbc"},
    {0xFB35, "\xd7\x95\xd6\xbc"},
    {0xFB36, "\xd7\x96\xd6\xbc"},
    {0xFB38, "\xd7\x98\xd6\xbc"},
    {0xFB39, "\xd7\x99\xd6\xbc"},
    {0xFB3A, "\xd7\x9a\xd6\xbc"},
    {0xFB3B, "\xd7\x9b\xd6\xbc"},
    {0xFB3C, "\xd7\x9c\xd6\xbc"},
    {0xFB3E, "\xd7\x9e\xd6\xbc"},
    {0xFB40, "\xd7\xa0\xd6\xbc"},
    {0xFB41, "\xd7\xa1\xd6\xbc"},
    {0xFB43, "\xd7\xa3\xd6\xbc"},
    {0xFB44, "\xd7\xa4\xd6\xbc"},
    {0xFB46, "\xd7\xa6\xd6\xbc"},
    {0xFB47, "\xd7\xa7\xd6\xbc"},
    {0xFB48, "\xd7\xa8\xd6\xbc"},
    {0xFB49, "\xd7\xa9\xd6\xbc"},
    {0xFB4A, "\xd7\xaa\xd6\xbc"},
    {0xFB4B, "\xd7\x95\xd6\xb9"},
    {0xFB4C, "\xd7\x91\xd6\xbf"},
    {0xFB4D, "\xd7\x9b\xd6\xbf"},
    {0xFB4E, "\xd7\xa4\xd6\xbf"},
    {0xFEFF, ""},
    {0xFF01, "!"},
    {0xFF02, "\x22"},
    {0xFF03, "#"},
    {0xFF04, "$"},
    {0xFF05, "%"},
    {0xFF06, "&"},
    {0xFF07, "'"},
    {0xFF08, "("},
    {0xFF09, ")"},
    {0xFF0A, "*"},
    {0xFF0B, "+"},
    {0xFF0C, ","},
    {0xFF0D, "-"},
    {0xFF0E, "."},
    {0xFF0F, "/"},
    {0xFF10, "0"},
    {0xFF11, "1"},
    {0xFF12, "2"},
    {0xFF13, "3"},
    {0xFF14, "4"},
    {0xFF15, "5"},
    {0xFF16, "6"},
    {0xFF17, "7"},
    {0xFF18, "8"},
    {0xFF19, "9"},
    {0xFF1A, ":"},
    {0xFF1B, ";"},
    {0xFF1C, "<"},
    {0xFF1D, "="},
    {0xFF1E, ">"},
    {0xFF1F, "\x3f"},
    {0xFF20, "@"},
    {0xFF21, "A"},
    {0xFF22, "B"},
    {0xFF23, "C"},
    {0xFF24, "D"},
    {0xFF25, "E"},
    {0xFF26, "F"},
    {0xFF27, "G"},
    {0xFF28, "H"},
    {0xFF29, "I"},
    {0xFF2A, "J"},
    {0xFF2B, "K"},
    {0xFF2C, "L"},
    {0xFF2D, "M"},
    {0xFF2E, "N"},
    {0xFF2F, "O"},
    {0xFF30, "P"},
    {0xFF31, "Q"},
    {0xFF32, "R"},
    {0xFF33, "S"},
    {0xFF34, "T"},
    {0xFF35, "U"},
    {0xFF36, "V"},
    {0xFF37, "W"},
    {0xFF38, "X"},
    {0xFF39, "Y"},
    {0xFF3A, "Z"},
    {0xFF3B, "["},
    {0xFF3C, "\x5c"},
    {0xFF3D, "]"},
    {0xFF3E, "^"},
    {0xFF3F, "_"},
    {0xFF40, "`"},
    {0xFF41, "a"},
    {0xFF42, "b"},
    {0xFF43, "c"},
    {0xFF44, "d"},
    {0xFF45, "e"},
    {0xFF46, "f"},
    {0xFF47, "g"},
    {0xFF48, "h"},
    {0xFF49, "i"},
    {0xFF4A, "j"},
    {0xFF4B, "k"},
    {0xFF4C, "l"},
    {0xFF4D, "m"},
    {0xFF4E, "n"},
    {0xFF4F, "o"},
    {0xFF50, "p"},
    {0xFF51, "q"},
    {0xFF52, "r"},
    {0xFF53, "s"},
    {0xFF54, "t"},
    {0xFF55, "u"},
    {0xFF56, "v"},
    {0xFF57, "w"},
    {0xFF58, "x"},
    {0xFF59, "y"},
    {0xFF5A, "z"},
    {0xFF5B, "{"},
    {0xFF5C, "|"},
    {0xFF5D, "}"},
    {0xFF5E, "~"},
    {0xFF5F, "\xe2\xa6\x85"},
    {0xFF60, "\xe2\xa6\x86"},
    {0xFF61, "\xe3\x80\x82"},
    {0xFF62, "\xe3\x80\x8c"},
    {0xFF63, "\xe3\x80\x8d"},
    {0xFF64, "\xe3\x80\x81"},
    {0xFF65, "\xe3\x83\xbb"},
    {0xFF66, "\xe3\x83\xb2"},
    {0xFF67, "\xe3\x82\xa1"},
    {0xFF68, "\xe3\x82\xa3"},
    {0xFF69, "\xe3\x82\xa5"},
    {0xFF6A, "\xe3\x82\xa7"},
    {0xFF6B, "\xe3\x82\xa9"},
    {0xFF6C, "\xe3\x83\xa3"},
    {0xFF6D, "\xe3\x83\xa5"},
    {0xFF6E, "\xe3\x83\xa7"},
    {0xFF6F, "\xe3\x83\x83"},
    {0xFF70, "\xe3\x83\xbc"},
    {0xFF71, "\xe3\x82\xa2"},
    {0xFF72, "\xe3\x82\xa4"},
    {0xFF73, "\xe3\x82\xa6"},
    {0xFF74, "\xe3\x82\xa8"},
    {0xFF75, "\xe3\x82\xaa"},
    {0xFF76, "\xe3\x82\xab"},
    {0xFF77, "\xe3\x82\xad"},
    {0xFF78, "\xe3\x82\xaf"},
    {0xFF79, "\xe3\x82\xb1"},
    {0xFF7A, "\xe3\x82\xb3"},
    {0xFF7B, "\xe3\x82\xb5"},
    {0xFF7C, "\xe3\x82\xb7"},
    {0xFF7D, "\xe3\x82\xb9"},
    {0xFF7E, "\xe3\x82\xbb"},
    {0xFF7F, "\xe3\x82\xbd"},
    {0xFF80, "\xe3\x82\xbf"},
    {0xFF81, "\xe3\x83\x81"},
    {0xFF82, "\xe3\x83\x84"},
    {0xFF83, "\xe3\x83\x86"},
    {0xFF84, "\xe3\x83\x88"},
    {0xFF85, "\xe3\x83\x8a"},
    {0xFF86, "\xe3\x83\x8b"},
    {0xFF87, "\xe3\x83\x8c"},
    {0xFF88, "\xe3\x83\x8d"},
    {0xFF89, "\xe3\x83\x8e"},
    {0xFF8A, "\xe3\x83\x8f"},
    {0xFF8B, "\xe3\x83\x92"},
    {0xFF8C, "\xe3\x83\x95"},
    {0xFF8D, "\xe3\x83\x98"},
    {0xFF8E, "\xe3\x83\x9b"},
    {0xFF8F, "\xe3\x83\x9e"},
    {0xFF90, "\xe3\x83\x9f"},
    {0xFF91, "\xe3\x83\xa0"},
    {0xFF92, "\xe3\x83\xa1"},
    {0xFF93, "\xe3\x83\xa2"},
    {0xFF94, "\xe3\x83\xa4"},
    {0xFF95, "\xe3\x83\xa6"},
    {0xFF96, "\xe3\x83\xa8"},
    {0xFF97, "\xe3\x83\xa9"},
    {0xFF98, "\xe3\x83\xaa"},
    {0xFF99, "\xe3\x83\xab"},
    {0xFF9A, "\xe3\x83\xac"},
    {0xFF9B, "\xe3\x83\xad"},
    {0xFF9C, "\xe3\x83\xaf"},
    {0xFF9D, "\xe3\x83\xb3"},
    {0xFF9E, "\xe3\x82\x99"},
    {0xFF9F, "\xe3\x82\x9a"},
    {0xFFA0, "\xe1\x85\xa0"},
    {0xFFA1, "\xe1\x84\x80"},
    {0xFFA2, "\xe1\x84\x81"},
    {0xFFA3, "\xe1\x86\xaa"},
    {0xFFA4, "\xe1\x84\x82"},
    {0xFFA5, "\xe1\x86\xac"},
    {0xFFA6, "\xe1\x86\xad"},
    {0xFFA7, "\xe1\x84\x83"},
    {0xFFA8, "\xe1\x84\x84"},
    {0xFFA9, "\xe1\x84\x85"},
    {0xFFAA, "\xe1\x86\xb0"},
    {0xFFAB, "\xe1\x86\xb1"},
    {0xFFAC, "\xe1\x86\xb2"},
    {0xFFAD, "\xe1\x86\xb3"},
    {0xFFAE, "\xe1\x86\xb4"},
    {0xFFAF, "\xe1\x86\xb5"},
    {0xFFB0, "\xe1\x84\x9a"},
    {0xFFB1, "\xe1\x84\x86"},
    {0xFFB2, "\xe1\x84\x87"},
    {0xFFB3, "\xe1\x84\x88"},
    {0xFFB4, "\xe1\x84\xa1"},
    {0xFFB5, "\xe1\x84\x89"},
    {0xFFB6, "\xe1\x84\x8a"},
    {0xFFB7, "\xe1\x84\x8b"},
    {0xFFB8, "\xe1\x84\x8c"},
    {0xFFB9, "\xe1\x84\x8d"},
    {0xFFBA, "\xe1\x84\x8e"},
    {0xFFBB, "\xe1\x84\x8f"},
    {0xFFBC, "\xe1\x84\x90"},
    {0xFFBD, "\xe1\x84\x91"},
    {0xFFBE, "\xe1\x84\x92"},
    {0xFFC2, "\xe1\x85\xa1"},
    {0xFFC3, "\xe1\x85\xa2"},
    {0xFFC4, "\xe1\x85\xa3"},
    {0xFFC5, "\xe1\x85\xa4"},
    {0xFFC6, "\xe1\x85\xa5"},
    {0xFFC7, "\xe1\x85\xa6"},
    {0xFFCA, "\xe1\x85\xa7"},
    {0xFFCB, "\xe1\x85\xa8"},
    {0xFFCC, "\xe1\x85\xa9"},
    {0xFFCD, "\xe1\x85\xaa"},
    {0xFFCE, "\xe1\x85\xab"},
    {0xFFCF, "\xe1\x85\xac"},
    {0xFFD2, "\xe1\x85\xad"},
    {0xFFD3, "\xe1\x85\xae"},
    {0xFFD4, "\xe1\x85\xaf"},
    {0xFFD5, "\xe1\x85\xb0"},
    {0xFFD6, "\xe1\x85\xb1"},
    {0xFFD7, "\xe1\x85\xb2"},
    {0xFFDA, "\xe1\x85\xb3"},
    {0xFFDB, "\xe1\x85\xb4"},
    {0xFFDC, "\xe1\x85\xb5"},
    {0xFFE0, "\xc2\xa2"},
    {0xFFE1, "\xc2\xa3"},
    {0xFFE2, "\xc2\xac"},
    {0xFFE3, " \xcc\x84"},
    {0xFFE4, "\xc2\xa6"},
    {0xFFE5, "\xc2\xa5"},
    {0xFFE6, "\xe2\x82\xa9"},
    {0xFFE8, "\xe2\x94\x82"},
    {0xFFE9, "\xe2\x86\x90"},
    {0xFFEA, "\xe2\x86\x91"},
    {0xFFEB, "\xe2\x86\x92"},
    {0xFFEC, "\xe2\x86\x93"},
    {0xFFED, "\xe2\x96\xa0"},
    {0xFFEE, "\xe2\x97\x8b"},
    {0xFFF9, ""},
    {0xFFFA, ""},
    {0xFFFB, ""},
    {0xFFFC, ""},
    {0x1D15E, "\xf0\x9d\x85\x97\xf0\x9d\x85\xa5"},
    {0x1D15F, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5"},
    {0x1D160, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xae"},
    {0x1D161, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf"},
    {0x1D162, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb0"},
    {0x1D163, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb1"},
    {0x1D164, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb2"},
    {0x1D1BB, "\xf0\x9d\x86\xb9\xf0\x9d\x85\xa5"},
    {0x1D1BC, "\xf0\x9d\x86\xba\xf0\x9d\x85\xa5"},
    {0x1D1BD, "\xf0\x9d\x86\xb9\xf0\x9d\x85\xa5\xf0\x9d\x85\xae"},
    {0x1D1BE, "\xf0\x9d\x86\xba\xf0\x9d\x85\xa5\xf0\x9d\x85\xae"},
    {0x1D1BF, "\xf0\x9d\x86\xb9\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf"},
    {0x1D1C0, "\xf0\x9d\x86\xba\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf"},
    {0x2F800, "\xe4\xb8\xbd"},
    {0x2F801, "\xe4\xb8\xb8"},
    {0x2F802, "\xe4\xb9\x81"},
    {0x2F803, "\xf0\xa0\x84\xa2"},
    {0x2F804, "\xe4\xbd\xa0"},
    {0x2F805, "\xe4\xbe\xae"},
    {0x2F806, "\xe4\xbe\xbb"},
    {0x2F807, "\xe5\x80\x82"},
    {0x2F808, "\xe5\x81\xba"},
    {0x2F809, "\xe5\x82\x99"},
    {0x2F80A, "\xe5\x83\xa7"},
    {0x2F80B, "\xe5\x83\x8f"},
    {0x2F80C, "\xe3\x92\x9e"},
    {0x2F80D, "\xf0\xa0\x98\xba"},
    {0x2F80E, "\xe5\x85\x8d"},
    {0x2F80F, "\xe5\x85\x94"},
    {0x2F810, "\xe5\x85\xa4"},
    {0x2F811, "\xe5\x85\xb7"},
    {0x2F812, "\xf0\xa0\x94\x9c"},
    {0x2F813, "\xe3\x92\xb9"},
    {0x2F814, "\xe5\x85\xa7"},
    {0x2F815, "\xe5\x86\x8d"},
    {0x2F816, "\xf0\xa0\x95\x8b"},
    {0x2F817, "\xe5\x86\x97"},
    {0x2F818, "\xe5\x86\xa4"},
    {0x2F819, "\xe4\xbb\x8c"},
    {0x2F81A, "\xe5\x86\xac"},
    {0x2F81B, "\xe5\x86\xb5"},
    {0x2F81C, "\xf0\xa9\x87\x9f"},
    {0x2F81D, "\xe5\x87\xb5"},
    {0x2F81E, "\xe5\x88\x83"},
    {0x2F81F, "\xe3\x93\x9f"},
    {0x2F820, "\xe5\x88\xbb"},
    {0x2F821, "\xe5\x89\x86"},
    {0x2F822, "\xe5\x89\xb2"},
    {0x2F823, "\xe5\x89\xb7"},
    {0x2F824, "\xe3\x94\x95"},
    {0x2F825, "\xe5\x8b\x87"},
    {0x2F826, "\xe5\x8b\x89"},
    {0x2F827, "\xe5\x8b\xa4"},
    {0x2F828, "\xe5\x8b\xba"},
    {0x2F829, "\xe5\x8c\x85"},
    {0x2F82A, "\xe5\x8c\x86"},
    {0x2F82B, "\xe5\x8c\x97"},
    {0x2F82C, "\xe5\x8d\x89"},
    {0x2F82D, "\xe5\x8d\x91"},
    {0x2F82E, "\xe5\x8d\x9a"},
    {0x2F82F, "\xe5\x8d\xb3"},
    {0x2F830, "\xe5\x8d\xbd"},
    {0x2F831, "\xe5\x8d\xbf"},
    {0x2F832, "\xe5\x8d\xbf"},
    {0x2F833, "\xe5\x8d\xbf"},
    {0x2F834, "\xf0\xa0\xa8\xac"},
    {0x2F835, "\xe7\x81\xb0"},
    {0x2F836, "\xe5\x8f\x8a"},
    {0x2F837, "\xe5\x8f\x9f"},
    {0x2F838, "\xf0\xa0\xad\xa3"},
    {0x2F839, "\xe5\x8f\xab"},
    {0x2F83A, "\xe5\x8f\xb1"},
    {0x2F83B, "\xe5\x90\x86"},
    {0x2F83C, "\xe5\x92\x9e"},
    {0x2F83D, "\xe5\x90\xb8"},
    {0x2F83E, "\xe5\x91\x88"},
    {0x2F83F, "\xe5\x91\xa8"},
    {0x2F840, "\xe5\x92\xa2"},
    {0x2F841, "\xe5\x93\xb6"},
    {0x2F842, "\xe5\x94\x90"},
    {0x2F843, "\xe5\x95\x93"},
    {0x2F844, "\xe5\x95\xa3"},
    {0x2F845, "\xe5\x96\x84"},
    {0x2F846, "\xe5\x96\x84"},
    {0x2F847, "\xe5\x96\x99"},
    {0x2F848, "\xe5\x96\xab"},
    {0x2F849, "\xe5\x96\xb3"},
    {0x2F84A, "\xe5\x97\x82"},
    {0x2F84B, "\xe5\x9c\x96"},
    {0x2F84C, "\xe5\x98\x86"},
    {0x2F84D, "\xe5\x9c\x97"},
    {0x2F84E, "\xe5\x99\x91"},
    {0x2F84F, "\xe5\x99\xb4"},
    {0x2F850, "\xe5\x88\x87"},
    {0x2F851, "\xe5\xa3\xae"},
    {0x2F852, "\xe5\x9f\x8e"},
    {0x2F853, "\xe5\x9f\xb4"},
    {0x2F854, "\xe5\xa0\x8d"},
    {0x2F855, "\xe5\x9e\x8b"},
    {0x2F856, "\xe5\xa0\xb2"},
    {0x2F857, "\xe5\xa0\xb1"},
    {0x2F858, "\xe5\xa2\xac"},
    {0x2F859, "\xf0\xa1\x93\xa4"},
    {0x2F85A, "\xe5\xa3\xb2"},
    {0x2F85B, "\xe5\xa3\xb7"},
    {0x2F85C, "\xe5\xa4\x86"},
    {0x2F85D, "\xe5\xa4\x9a"},
    {0x2F85E, "\xe5\xa4\xa2"},
    {0x2F85F, "\xe5\xa5\xa2"},
    {0x2F860, "\xf0\xa1\x9a\xa8"},
    {0x2F861, "\xf0\xa1\x9b\xaa"},
    {0x2F862, "\xe5\xa7\xac"},
    {0x2F863, "\xe5\xa8\x9b"},
    {0x2F864, "\xe5\xa8\xa7"},
    {0x2F865, "\xe5\xa7\x98"},
    {0x2F866, "\xe5\xa9\xa6"},
    {0x2F867, "\xe3\x9b\xae"},
    {0x2F868, "\xe3\x9b\xbc"},
    {0x2F869, "\xe5\xac\x88"},
    {0x2F86A, "\xe5\xac\xbe"},
    {0x2F86B, "\xe5\xac\xbe"},
    {0x2F86C, "\xf0\xa1\xa7\x88"},
    {0x2F86D, "\xe5\xaf\x83"},
    {0x2F86E, "\xe5\xaf\x98"},
    {0x2F86F, "\xe5\xaf\xa7"},
    {0x2F870, "\xe5\xaf\xb3"},
    {0x2F871, "\xf0\xa1\xac\x98"},
    {0x2F872, "\xe5\xaf\xbf"},
    {0x2F873, "\xe5\xb0\x86"},
    {0x2F874, "\xe5\xbd\x93"},
    {0x2F875, "\xe5\xb0\xa2"},
    {0x2F876, "\xe3\x9e\x81"},
    {0x2F877, "\xe5\xb1\xa0"},
    {0x2F878, "\xe5\xb1\xae"},
    {0x2F879, "\xe5\xb3\x80"},
    {0x2F87A, "\xe5\xb2\x8d"},
    {0x2F87B, "\xf0\xa1\xb7\xa4"},
    {0x2F87C, "\xe5\xb5\x83"},
    {0x2F87D, "\xf0\xa1\xb7\xa6"},
    {0x2F87E, "\xe5\xb5\xae"},
    {0x2F87F, "\xe5\xb5\xab"},
    {0x2F880, "\xe5\xb5\xbc"},
    {0x2F881, "\xe5\xb7\xa1"},
    {0x2F882, "\xe5\xb7\xa2"},
    {0x2F883, "\xe3\xa0\xaf"},
    {0x2F884, "\xe5\xb7\xbd"},
    {0x2F885, "\xe5\xb8\xa8"},
    {0x2F886, "\xe5\xb8\xbd"},
    {0x2F887, "\xe5\xb9\xa9"},
    {0x2F888, "\xe3\xa1\xa2"},
    {0x2F889, "\xf0\xa2\x86\x83"},
    {0x2F88A, "\xe3\xa1\xbc"},
    {0x2F88B, "\xe5\xba\xb0"},
    {0x2F88C, "\xe5\xba\xb3"},
    {0x2F88D, "\xe5\xba\xb6"},
    {0x2F88E, "\xe5\xbb\x8a"},
    {0x2F88F, "\xf0\xaa\x8e\x92"},
    {0x2F890, "\xe5\xbb\xbe"},
    {0x2F891, "\xf0\xa2\x8c\xb1"},
    {0x2F892, "\xf0\xa2\x8c\xb1"},
    {0x2F893, "\xe8\x88\x81"},
    {0x2F894, "\xe5\xbc\xa2"},
    {0x2F895, "\xe5\xbc\xa2"},
    {0x2F896, "\xe3\xa3\x87"},
    {0x2F897, "\xf0\xa3\x8a\xb8"},
    {0x2F898, "\xf0\xa6\x87\x9a"},
    {0x2F899, "\xe5\xbd\xa2"},
    {0x2F89A, "\xe5\xbd\xab"},
    {0x2F89B, "\xe3\xa3\xa3"},
    {0x2F89C, "\xe5\xbe\x9a"},
    {0x2F89D, "\xe5\xbf\x8d"},
    {0x2F89E, "\xe5\xbf\x97"},
    {0x2F89F, "\xe5\xbf\xb9"},
    {0x2F8A0, "\xe6\x82\x81"},
    {0x2F8A1, "\xe3\xa4\xba"},
    {0x2F8A2, "\xe3\xa4\x9c"},
    {0x2F8A3, "\xe6\x82\x94"},
    {0x2F8A4, "\xf0\xa2\x9b\x94"},
    {0x2F8A5, "\xe6\x83\x87"},
    {0x2F8A6, "\xe6\x85\x88"},
    {0x2F8A7, "\xe6\x85\x8c"},
    {0x2F8A8, "\xe6\x85\x8e"},
    {0x2F8A9, "\xe6\x85\x8c"},
    {0x2F8AA, "\xe6\x85\xba"},
    {0x2F8AB, "\xe6\x86\x8e"},
    {0x2F8AC, "\xe6\x86\xb2"},
    {0x2F8AD, "\xe6\x86\xa4"},
    {0x2F8AE, "\xe6\x86\xaf"},
    {0x2F8AF, "\xe6\x87\x9e"},
    {0x2F8B0, "\xe6\x87\xb2"},
    {0x2F8B1, "\xe6\x87\xb6"},
    {0x2F8B2, "\xe6\x88\x90"},
    {0x2F8B3, "\xe6\x88\x9b"},
    {0x2F8B4, "\xe6\x89\x9d"},
    {0x2F8B5, "\xe6\x8a\xb1"},
    {0x2F8B6, "\xe6\x8b\x94"},
    {0x2F8B7, "\xe6\x8d\x90"},
    {0x2F8B8, "\xf0\xa2\xac\x8c"},
    {0x2F8B9, "\xe6\x8c\xbd"},
    {0x2F8BA, "\xe6\x8b\xbc"},
    {0x2F8BB, "\xe6\x8d\xa8"},
    {0x2F8BC, "\xe6\x8e\x83"},
    {0x2F8BD, "\xe6\x8f\xa4"},
    {0x2F8BE, "\xf0\xa2\xaf\xb1"},
    {0x2F8BF, "\xe6\x90\xa2"},
    {0x2F8C0, "\xe6\x8f\x85"},
    {0x2F8C1, "\xe6\x8e\xa9"},
    {0x2F8C2, "\xe3\xa8\xae"},
    {0x2F8C3, "\xe6\x91\xa9"},
    {0x2F8C4, "\xe6\x91\xbe"},
    {0x2F8C5, "\xe6\x92\x9d"},
    {0x2F8C6, "\xe6\x91\xb7"},
    {0x2F8C7, "\xe3\xa9\xac"},
    {0x2F8C8, "\xe6\x95\x8f"},
    {0x2F8C9, "\xe6\x95\xac"},
    {0x2F8CA, "\xf0\xa3\x80\x8a"},
    {0x2F8CB, "\xe6\x97\xa3"},
    {0x2F8CC, "\xe6\x9b\xb8"},
    {0x2F8CD, "\xe6\x99\x89"},
    {0x2F8CE, "\xe3\xac\x99"},
    {0x2F8CF, "\xe6\x9a\x91"},
    {0x2F8D0, "\xe3\xac\x88"},
    {0x2F8D1, "\xe3\xab\xa4"},
    {0x2F8D2, "\xe5\x86\x92"},
    {0x2F8D3, "\xe5\x86\x95"},
    {0x2F8D4, "\xe6\x9c\x80"},
    {0x2F8D5, "\xe6\x9a\x9c"},
    {0x2F8D6, "\xe8\x82\xad"},
    {0x2F8D7, "\xe4\x8f\x99"},
    {0x2F8D8, "\xe6\x9c\x97"},
    {0x2F8D9, "\xe6\x9c\x9b"},
    {0x2F8DA, "\xe6\x9c\xa1"},
    {0x2F8DB, "\xe6\x9d\x9e"},
    {0x2F8DC, "\xe6\x9d\x93"},
    {0x2F8DD, "\xf0\xa3\x8f\x83"},
    {0x2F8DE, "\xe3\xad\x89"},
    {0x2F8DF, "\xe6\x9f\xba"},
    {0x2F8E0, "\xe6\x9e\x85"},
    {0x2F8E1, "\xe6\xa1\x92"},
    {0x2F8E2, "\xe6\xa2\x85"},
    {0x2F8E3, "\xf0\xa3\x91\xad"},
    {0x2F8E4, "\xe6\xa2\x8e"},
    {0x2F8E5, "\xe6\xa0\x9f"},
    {0x2F8E6, "\xe6\xa4\x94"},
    {0x2F8E7, "\xe3\xae\x9d"},
    {0x2F8E8, "\xe6\xa5\x82"},
    {0x2F8E9, "\xe6\xa6\xa3"},
    {0x2F8EA, "\xe6\xa7\xaa"},
    {0x2F8EB, "\xe6\xaa\xa8"},
    {0x2F8EC, "\xf0\xa3\x9a\xa3"},
    {0x2F8ED, "\xe6\xab\x9b"},
    {0x2F8EE, "\xe3\xb0\x98"},
    {0x2F8EF, "\xe6\xac\xa1"},
    {0x2F8F0, "\xf0\xa3\xa2\xa7"},
    {0x2F8F1, "\xe6\xad\x94"},
    {0x2F8F2, "\xe3\xb1\x8e"},
    {0x2F8F3, "\xe6\xad\xb2"},
    {0x2F8F4, "\xe6\xae\x9f"},
    {0x2F8F5, "\xe6\xae\xba"},
    {0x2F8F6, "\xe6\xae\xbb"},
    {0x2F8F7, "\xf0\xa3\xaa\x8d"},
    {0x2F8F8, "\xf0\xa1\xb4\x8b"},
    {0x2F8F9, "\xf0\xa3\xab\xba"},
    {0x2F8FA, "\xe6\xb1\x8e"},
    {0x2F8FB, "\xf0\xa3\xb2\xbc"},
    {0x2F8FC, "\xe6\xb2\xbf"},
    {0x2F8FD, "\xe6\xb3\x8d"},
    {0x2F8FE, "\xe6\xb1\xa7"},
    {0x2F8FF, "\xe6\xb4\x96"},
    {0x2F900, "\xe6\xb4\xbe"},
    {0x2F901, "\xe6\xb5\xb7"},
    {0x2F902, "\xe6\xb5\x81"},
    {0x2F903, "\xe6\xb5\xa9"},
    {0x2F904, "\xe6\xb5\xb8"},
    {0x2F905, "\xe6\xb6\x85"},
    {0x2F906, "\xf0\xa3\xb4\x9e"},
    {0x2F907, "\xe6\xb4\xb4"},
    {0x2F908, "\xe6\xb8\xaf"},
    {0x2F909, "\xe6\xb9\xae"},
    {0x2F90A, "\xe3\xb4\xb3"},
    {0x2F90B, "\xe6\xbb\x8b"},
    {0x2F90C, "\xe6\xbb\x87"},
    {0x2F90D, "\xf0\xa3\xbb\x91"},
    {0x2F90E, "\xe6\xb7\xb9"},
    {0x2F90F, "\xe6\xbd\xae"},
    {0x2F910, "\xf0\xa3\xbd\x9e"},
    {0x2F911, "\xf0\xa3\xbe\x8e"},
    {0x2F912, "\xe6\xbf\x86"},
    {0x2F913, "\xe7\x80\xb9"},
    {0x2F914, "\xe7\x80\x9e"},
    {0x2F915, "\xe7\x80\x9b"},
    {0x2F916, "\xe3\xb6\x96"},
    {0x2F917, "\xe7\x81\x8a"},
    {0x2F918, "\xe7\x81\xbd"},
    {0x2F919, "\xe7\x81\xb7"},
    {0x2F91A, "\xe7\x82\xad"},
    {0x2F91B, "\xf0\xa0\x94\xa5"},
    {0x2F91C, "\xe7\x85\x85"},
    {0x2F91D, "\xf0\xa4\x89\xa3"},
    {0x2F91E, "\xe7\x86\x9c"},
    {0x2F91F, "\xf0\xa4\x8e\xab"},
    {0x2F920, "\xe7\x88\xa8"},
    {0x2F921, "\xe7\x88\xb5"},
    {0x2F922, "\xe7\x89\x90"},
    {0x2F923, "\xf0\xa4\x98\x88"},
    {0x2F924, "\xe7\x8a\x80"},
    {0x2F925, "\xe7\x8a\x95"},
    {0x2F926, "\xf0\xa4\x9c\xb5"},
    {0x2F927, "\xf0\xa4\xa0\x94"},
    {0x2F928, "\xe7\x8d\xba"},
    {0x2F929, "\xe7\x8e\x8b"},
    {0x2F92A, "\xe3\xba\xac"},
    {0x2F92B, "\xe7\x8e\xa5"},
    {0x2F92C, "\xe3\xba\xb8"},
    {0x2F92D, "\xe3\xba\xb8"},
    {0x2F92E, "\xe7\x91\x87"},
    {0x2F92F, "\xe7\x91\x9c"},
    {0x2F930, "\xe7\x91\xb1"},
    {0x2F931, "\xe7\x92\x85"},
    {0x2F932, "\xe7\x93\x8a"},
    {0x2F933, "\xe3\xbc\x9b"},
    {0x2F934, "\xe7\x94\xa4"},
    {0x2F935, "\xf0\xa4\xb0\xb6"},
    {0x2F936, "\xe7\x94\xbe"},
    {0x2F937, "\xf0\xa4\xb2\x92"},
    {0x2F938, "\xe7\x95\xb0"},
    {0x2F939, "\xf0\xa2\x86\x9f"},
    {0x2F93A, "\xe7\x98\x90"},
    {0x2F93B, "\xf0\xa4\xbe\xa1"},
    {0x2F93C, "\xf0\xa4\xbe\xb8"},
    {0x2F93D, "\xf0\xa5\x81\x84"},
    {0x2F93E, "\xe3\xbf\xbc"},
    {0x2F93F, "\xe4\x80\x88"},
    {0x2F940, "\xe7\x9b\xb4"},
    {0x2F941, "\xf0\xa5\x83\xb3"},
    {0x2F942, "\xf0\xa5\x83\xb2"},
    {0x2F943, "\xf0\xa5\x84\x99"},
    {0x2F944, "\xf0\xa5\x84\xb3"},
    {0x2F945, "\xe7\x9c\x9e"},
    {0x2F946, "\xe7\x9c\x9f"},
    {0x2F947, "\xe7\x9c\x9f"},
    {0x2F948, "\xe7\x9d\x8a"},
    {0x2F949, "\xe4\x80\xb9"},
    {0x2F94A, "\xe7\x9e\x8b"},
    {0x2F94B, "\xe4\x81\x86"},
    {0x2F94C, "\xe4\x82\x96"},
    {0x2F94D, "\xf0\xa5\x90\x9d"},
    {0x2F94E, "\xe7\xa1\x8e"},
    {0x2F94F, "\xe7\xa2\x8c"},
    {0x2F950, "\xe7\xa3\x8c"},
    {0x2F951, "\xe4\x83\xa3"},
    {0x2F952, "\xf0\xa5\x98\xa6"},
    {0x2F953, "\xe7\xa5\x96"},
    {0x2F954, "\xf0\xa5\x9a\x9a"},
    {0x2F955, "\xf0\xa5\x9b\x85"},
    {0x2F956, "\xe7\xa6\x8f"},
    {0x2F957, "\xe7\xa7\xab"},
    {0x2F958, "\xe4\x84\xaf"},
    {0x2F959, "\xe7\xa9\x80"},
    {0x2F95A, "\xe7\xa9\x8a"},
    {0x2F95B, "\xe7\xa9\x8f"},
    {0x2F95C, "\xf0\xa5\xa5\xbc"},
    {0x2F95D, "\xf0\xa5\xaa\xa7"},
    {0x2F95E, "\xf0\xa5\xaa\xa7"},
    {0x2F95F, "\xe7\xab\xae"},
    {0x2F960, "\xe4\x88\x82"},
    {0x2F961, "\xf0\xa5\xae\xab"},
    {0x2F962, "\xe7\xaf\x86"},
    {0x2F963, "\xe7\xaf\x89"},
    {0x2F964, "\xe4\x88\xa7"},
    {0x2F965, "\xf0\xa5\xb2\x80"},
    {0x2F966, "\xe7\xb3\x92"},
    {0x2F967, "\xe4\x8a\xa0"},
    {0x2F968, "\xe7\xb3\xa8"},
    {0x2F969, "\xe7\xb3\xa3"},
    {0x2F96A, "\xe7\xb4\x80"},
    {0x2F96B, "\xf0\xa5\xbe\x86"},
    {0x2F96C, "\xe7\xb5\xa3"},
    {0x2F96D, "\xe4\x8c\x81"},
    {0x2F96E, "\xe7\xb7\x87"},
    {0x2F96F, "\xe7\xb8\x82"},
    {0x2F970, "\xe7\xb9\x85"},
    {0x2F971, "\xe4\x8c\xb4"},
    {0x2F972, "\xf0\xa6\x88\xa8"},
    {0x2F973, "\xf0\xa6\x89\x87"},
    {0x2F974, "\xe4\x8d\x99"},
    {0x2F975, "\xf0\xa6\x8b\x99"},
    {0x2F976, "\xe7\xbd\xba"},
    {0x2F977, "\xf0\xa6\x8c\xbe"},
    {0x2F978, "\xe7\xbe\x95"},
    {0x2F979, "\xe7\xbf\xba"},
    {0x2F97A, "\xe8\x80\x85"},
    {0x2F97B, "\xf0\xa6\x93\x9a"},
    {0x2F97C, "\xf0\xa6\x94\xa3"},
    {0x2F97D, "\xe8\x81\xa0"},
    {0x2F97E, "\xf0\xa6\x96\xa8"},
    {0x2F97F, "\xe8\x81\xb0"},
    {0x2F980, "\xf0\xa3\x8d\x9f"},
    {0x2F981, "\xe4\x8f\x95"},
    {0x2F982, "\xe8\x82\xb2"},
    {0x2F983, "\xe8\x84\x83"},
    {0x2F984, "\xe4\x90\x8b"},
    {0x2F985, "\xe8\x84\xbe"},
    {0x2F986, "\xe5\xaa\xb5"},
    {0x2F987, "\xf0\xa6\x9e\xa7"},
    {0x2F988, "\xf0\xa6\x9e\xb5"},
    {0x2F989, "\xf0\xa3\x8e\x93"},
    {0x2F98A, "\xf0\xa3\x8e\x9c"},
    {0x2F98B, "\xe8\x88\x81"},
    {0x2F98C, "\xe8\x88\x84"},
    {0x2F98D, "\xe8\xbe\x9e"},
    {0x2F98E, "\xe4\x91\xab"},
    {0x2F98F, "\xe8\x8a\x91"},
    {0x2F990, "\xe8\x8a\x8b"},
    {0x2F991, "\xe8\x8a\x9d"},
    {0x2F992, "\xe5\x8a\xb3"},
    {0x2F993, "\xe8\x8a\xb1"},
    {0x2F994, "\xe8\x8a\xb3"},
    {0x2F995, "\xe8\x8a\xbd"},
    {0x2F996, "\xe8\x8b\xa6"},
    {0x2F997, "\xf0\xa6\xac\xbc"},
    {0x2F998, "\xe8\x8b\xa5"},
    {0x2F999, "\xe8\x8c\x9d"},
    {0x2F99A, "\xe8\x8d\xa3"},
    {0x2F99B, "\xe8\x8e\xad"},
    {0x2F99C, "\xe8\x8c\xa3"},
    {0x2F99D, "\xe8\x8e\xbd"},
    {0x2F99E, "\xe8\x8f\xa7"},
    {0x2F99F, "\xe8\x91\x97"},
    {0x2F9A0, "\xe8\x8d\x93"},
    {0x2F9A1, "\xe8\x8f\x8a"},
    {0x2F9A2, "\xe8\x8f\x8c"},
    {0x2F9A3, "\xe8\x8f\x9c"},
    {0x2F9A4, "\xf0\xa6\xb0\xb6"},
    {0x2F9A5, "\xf0\xa6\xb5\xab"},
    {0x2F9A6, "\xf0\xa6\xb3\x95"},
    {0x2F9A7, "\xe4\x94\xab"},
    {0x2F9A8, "\xe8\x93\xb1"},
    {0x2F9A9, "\xe8\x93\xb3"},
    {0x2F9AA, "\xe8\x94\x96"},
    {0x2F9AB, "\xf0\xa7\x8f\x8a"},
    {0x2F9AC, "\xe8\x95\xa4"},
    {0x2F9AD, "\xf0\xa6\xbc\xac"},
    {0x2F9AE, "\xe4\x95\x9d"},
    {0x2F9AF, "\xe4\x95\xa1"},
    {0x2F9B0, "\xf0\xa6\xbe\xb1"},
    {0x2F9B1, "\xf0\xa7\x83\x92"},
    {0x2F9B2, "\xe4\x95\xab"},
    {0x2F9B3, "\xe8\x99\x90"},
    {0x2F9B4, "\xe8\x99\x9c"},
    {0x2F9B5, "\xe8\x99\xa7"},
    {0x2F9B6, "\xe8\x99\xa9"},
    {0x2F9B7, "\xe8\x9a\xa9"},
    {0x2F9B8, "\xe8\x9a\x88"},
    {0x2F9B9, "\xe8\x9c\x8e"},
    {0x2F9BA, "\xe8\x9b\xa2"},
    {0x2F9BB, "\xe8\x9d\xb9"},
    {0x2F9BC, "\xe8\x9c\xa8"},
    {0x2F9BD, "\xe8\x9d\xab"},
    {0x2F9BE, "\xe8\x9e\x86"},
    {0x2F9BF, "\xe4\x97\x97"},
    {0x2F9C0, "\xe8\x9f\xa1"},
    {0x2F9C1, "\xe8\xa0\x81"},
    {0x2F9C2, "\xe4\x97\xb9"},
    {0x2F9C3, "\xe8\xa1\xa0"},
    {0x2F9C4, "\xe8\xa1\xa3"},
    {0x2F9C5, "\xf0\xa7\x99\xa7"},
    {0x2F9C6, "\xe8\xa3\x97"},
    {0x2F9C7, "\xe8\xa3\x9e"},
    {0x2F9C8, "\xe4\x98\xb5"},
    {0x2F9C9, "\xe8\xa3\xba"},
    {0x2F9CA, "\xe3\x92\xbb"},
    {0x2F9CB, "\xf0\xa7\xa2\xae"},
    {0x2F9CC, "\xf0\xa7\xa5\xa6"},
    {0x2F9CD, "\xe4\x9a\xbe"},
    {0x2F9CE, "\xe4\x9b\x87"},
    {0x2F9CF, "\xe8\xaa\xa0"},
    {0x2F9D0, "\xe8\xab\xad"},
    {0x2F9D1, "\xe8\xae\x8a"},
    {0x2F9D2, "\xe8\xb1\x95"},
    {0x2F9D3, "\xf0\xa7\xb2\xa8"},
    {0x2F9D4, "\xe8\xb2\xab"},
    {0x2F9D5, "\xe8\xb3\x81"},
    {0x2F9D6, "\xe8\xb4\x9b"},
    {0x2F9D7, "\xe8\xb5\xb7"},
    {0x2F9D8, "\xf0\xa7\xbc\xaf"},
    {0x2F9D9, "\xf0\xa0\xa0\x84"},
    {0x2F9DA, "\xe8\xb7\x8b"},
    {0x2F9DB, "\xe8\xb6\xbc"},
    {0x2F9DC, "\xe8\xb7\xb0"},
    {0x2F9DD, "\xf0\xa0\xa3\x9e"},
    {0x2F9DE, "\xe8\xbb\x94"},
    {0x2F9DF, "\xe8\xbc\xb8"},
    {0x2F9E0, "\xf0\xa8\x97\x92"},
    {0x2F9E1, "\xf0\xa8\x97\xad"},
    {0x2F9E2, "\xe9\x82\x94"},
    {0x2F9E3, "\xe9\x83\xb1"},
    {0x2F9E4, "\xe9\x84\x91"},
    {0x2F9E5, "\xf0\xa8\x9c\xae"},
    {0x2F9E6, "\xe9\x84\x9b"},
    {0x2F9E7, "\xe9\x88\xb8"},
    {0x2F9E8, "\xe9\x8b\x97"},
    {0x2F9E9, "\xe9\x8b\x98"},
    {0x2F9EA, "\xe9\x89\xbc"},
    {0x2F9EB, "\xe9\x8f\xb9"},
    {0x2F9EC, "\xe9\x90\x95"},
    {0x2F9ED, "\xf0\xa8\xaf\xba"},
    {0x2F9EE, "\xe9\x96\x8b"},
    {0x2F9EF, "\xe4\xa6\x95"},
    {0x2F9F0, "\xe9\x96\xb7"},
    {0x2F9F1, "\xf0\xa8\xb5\xb7"},
    {0x2F9F2, "\xe4\xa7\xa6"},
    {0x2F9F3, "\xe9\x9b\x83"},
    {0x2F9F4, "\xe5\xb6\xb2"},
    {0x2F9F5, "\xe9\x9c\xa3"},
    {0x2F9F6, "\xf0\xa9\x85\x85"},
    {0x2F9F7, "\xf0\xa9\x88\x9a"},
    {0x2F9F8, "\xe4\xa9\xae"},
    {0x2F9F9, "\xe4\xa9\xb6"},
    {0x2F9FA, "\xe9\x9f\xa0"},
    {0x2F9FB, "\xf0\xa9\x90\x8a"},
    {0x2F9FC, "\xe4\xaa\xb2"},
    {0x2F9FD, "\xf0\xa9\x92\x96"},
    {0x2F9FE, "\xe9\xa0\x8b"},
    {0x2F9FF, "\xe9\xa0\x8b"},
    {0x2FA00, "\xe9\xa0\xa9"},
    {0x2FA01, "\xf0\xa9\x96\xb6"},
    {0x2FA02, "\xe9\xa3\xa2"},
    {0x2FA03, "\xe4\xac\xb3"},
    {0x2FA04, "\xe9\xa4\xa9"},
    {0x2FA05, "\xe9\xa6\xa7"},
    {0x2FA06, "\xe9\xa7\x82"},
    {0x2FA07, "\xe9\xa7\xbe"},
    {0x2FA08, "\xe4\xaf\x8e"},
    {0x2FA09, "\xf0\xa9\xac\xb0"},
    {0x2FA0A, "\xe9\xac\x92"},
    {0x2FA0B, "\xe9\xb1\x80"},
    {0x2FA0C, "\xe9\xb3\xbd"},
    {0x2FA0D, "\xe4\xb3\x8e"},
    {0x2FA0E, "\xe4\xb3\xad"},
    {0x2FA0F, "\xe9\xb5\xa7"},
    {0x2FA10, "\xf0\xaa\x83\x8e"},
    {0x2FA11, "\xe4\xb3\xb8"},
    {0x2FA12, "\xf0\xaa\x84\x85"},
    {0x2FA13, "\xf0\xaa\x88\x8e"},
    {0x2FA14, "\xf0\xaa\x8a\x91"},
    {0x2FA15, "\xe9\xba\xbb"},
    {0x2FA16, "\xe4\xb5\x96"},
    {0x2FA17, "\xe9\xbb\xb9"},
    {0x2FA18, "\xe9\xbb\xbe"},
    {0x2FA19, "\xe9\xbc\x85"},
    {0x2FA1A, "\xe9\xbc\x8f"},
    {0x2FA1B, "\xe9\xbc\x96"},
    {0x2FA1C, "\xe9\xbc\xbb"},
    {0x2FA1D, "\xf0\xaa\x98\x80"},
}};

const std::array<NamedEntity, 2231> kHtmlEntities = {{
    {"AElig", "\xc3\x86"},
    {"AElig;", "\xc3\x86"},
    {"AMP", "&"},
    {"AMP;", "&"},
    {"Aacute", "\xc3\x81"},
    {"Aacute;", "\xc3\x81"},
    {"Abreve;", "\xc4\x82"},
    {"Acirc", "\xc3\x82"},
    {"Acirc;", "\xc3\x82"},
    {"Acy;", "\xd0\x90"},
    {"Afr;", "\xf0\x9d\x94\x84"},
    {"Agrave", "\xc3\x80"},
    {"Agrave;", "\xc3\x80"},
    {"Alpha;", "\xce\x91"},
    {"Amacr;", "\xc4\x80"},
    {"And;", "\xe2\xa9\x93"},
    {"Aogon;", "\xc4\x84"},
    {"Aopf;", "\xf0\x9d\x94\xb8"},
    {"ApplyFunction;", "\xe2\x81\xa1"},
    {"Aring", "\xc3\x85"},
    {"Aring;", "\xc3\x85"},
    {"Ascr;", "\xf0\x9d\x92\x9c"},
    {"Assign;", "\xe2\x89\x94"},
    {"Atilde", "\xc3\x83"},
    {"Atilde;", "\xc3\x83"},
    {"Auml", "\xc3\x84"},
    {"Auml;", "\xc3\x84"},
    {"Backslash;", "\xe2\x88\x96"},
    {"Barv;", "\xe2\xab\xa7"},
    {"Barwed;", "\xe2\x8c\x86"},
    {"Bcy;", "\xd0\x91"},
    {"Because;", "\xe2\x88\xb5"},
    {"Bernoullis;", "\xe2\x84\xac"},
    {"Beta;", "\xce\x92"},
    {"Bfr;", "\xf0\x9d\x94\x85"},
    {"Bopf;", "\xf0\x9d\x94\xb9"},
    {"Breve;", "\xcb\x98"},
    {"Bscr;", "\xe2\x84\xac"},
    {"Bumpeq;", "\xe2\x89\x8e"},
    {"CHcy;", "\xd0\xa7"},
    {"COPY", "\xc2\xa9"},
    {"COPY;", "\xc2\xa9"},
    {"Cacute;", "\xc4\x86"},
    {"Cap;", "\xe2\x8b\x92"},
    {"CapitalDifferentialD;", "\xe2\x85\x85"},
    {"Cayleys;", "\xe2\x84\xad"},
    {"Ccaron;", "\xc4\x8c"},
    {"Ccedil", "\xc3\x87"},
    {"Ccedil;", "\xc3\x87"},
    {"Ccirc;", "\xc4\x88"},
    {"Cconint;", "\xe2\x88\xb0"},
    {"Cdot;", "\xc4\x8a"},
    {"Cedilla;", "\xc2\xb8"},
    {"CenterDot;", "\xc2\xb7"},
    {"Cfr;", "\xe2\x84\xad"},
    {"Chi;", "\xce\xa7"},
    {"CircleDot;", "\xe2\x8a\x99"},
    {"CircleMinus;", "\xe2\x8a\x96"},
    {"CirclePlus;", "\xe2\x8a\x95"},
    {"CircleTimes;", "\xe2\x8a\x97"},
    {"ClockwiseContourIntegral;", "\xe2\x88\xb2"},
    {"CloseCurlyDoubleQuote;", "\xe2\x80\x9d"},
    {"CloseCurlyQuote;", "\xe2\x80\x99"},
    {"Colon;", "\xe2\x88\xb7"},
    {"Colone;", "\xe2\xa9\xb4"},
    {"Congruent;", "\xe2\x89\xa1"},
    {"Conint;", "\xe2\x88\xaf"},
    {"ContourIntegral;", "\xe2\x88\xae"},
    {"Copf;", "\xe2\x84\x82"},
    {"Coproduct;", "\xe2\x88\x90"},
    {"CounterClockwiseContourIntegral;", "\xe2\x88\xb3"},
    {"Cross;", "\xe2\xa8\xaf"},
    {"Cscr;", "\xf0\x9d\x92\x9e"},
    {"Cup;", "\xe2\x8b\x93"},
    {"CupCap;", "\xe2\x89\x8d"},
    {"DD;", "\xe2\x85\x85"},
    {"DDotrahd;", "\xe2\xa4\x91"},
    {"DJcy;", "\xd0\x82"},
    {"DScy;", "\xd0\x85"},
    {"DZcy;", "\xd0\x8f"},
    {"Dagger;", "\xe2\x80\xa1"},
    {"Darr;", "\xe2\x86\xa1"},
    {"Dashv;", "\xe2\xab\xa4"},
    {"Dcaron;", "\xc4\x8e"},
    {"Dcy;", "\xd0\x94"},
    {"Del;", "\xe2\x88\x87"},
    {"Delta;", "\xce\x94"},
    {"Dfr;", "\xf0\x9d\x94\x87"},
    {"DiacriticalAcute;", "\xc2\xb4"},
    {"DiacriticalDot;", "\xcb\x99"},
    {"DiacriticalDoubleAcute;", "\xcb\x9d"},
    {"DiacriticalGrave;", "`"},
    {"DiacriticalTilde;", "\xcb\x9c"},
    {"Diamond;", "\xe2\x8b\x84"},
    {"DifferentialD;", "\xe2\x85\x86"},
    {"Dopf;", "\xf0\x9d\x94\xbb"},
    {"Dot;", "\xc2\xa8"},
    {"DotDot;", "\xe2\x83\x9c"},
    {"DotEqual;", "\xe2\x89\x90"},
    {"DoubleContourIntegral;", "\xe2\x88\xaf"},
    {"DoubleDot;", "\xc2\xa8"},
    {"DoubleDownArrow;", "\xe2\x87\x93"},
    {"DoubleLeftArrow;", "\xe2\x87\x90"},
    {"DoubleLeftRightArrow;", "\xe2\x87\x94"},
    {"DoubleLeftTee;", "\xe2\xab\xa4"},
    {"DoubleLongLeftArrow;", "\xe2\x9f\xb8"},
    {"DoubleLongLeftRightArrow;", "\xe2\x9f\xba"},
    {"DoubleLongRightArrow;", "\xe2\x9f\xb9"},
    {"DoubleRightArrow;", "\xe2\x87\x92"},
    {"DoubleRightTee;", "\xe2\x8a\xa8"},
    {"DoubleUpArrow;", "\xe2\x87\x91"},
    {"DoubleUpDownArrow;", "\xe2\x87\x95"},
    {"DoubleVerticalBar;", "\xe2\x88\xa5"},
    {"DownArrow;", "\xe2\x86\x93"},
    {"DownArrowBar;", "\xe2\xa4\x93"},
    {"DownArrowUpArrow;", "\xe2\x87\xb5"},
    {"DownBreve;", "\xcc\x91"},
    {"DownLeftRightVector;", "\xe2\xa5\x90"},
    {"DownLeftTeeVector;", "\xe2\xa5\x9e"},
    {"DownLeftVector;", "\xe2\x86\xbd"},
    {"DownLeftVectorBar;", "\xe2\xa5\x96"},
    {"DownRightTeeVector;", "\xe2\xa5\x9f"},
    {"DownRightVector;", "\xe2\x87\x81"},
    {"DownRightVectorBar;", "\xe2\xa5\x97"},
    {"DownTee;", "\xe2\x8a\xa4"},
    {"DownTeeArrow;", "\xe2\x86\xa7"},
    {"Downarrow;", "\xe2\x87\x93"},
    {"Dscr;", "\xf0\x9d\x92\x9f"},
    {"Dstrok;", "\xc4\x90"},
    {"ENG;", "\xc5\x8a"},
    {"ETH", "\xc3\x90"},
    {"ETH;", "\xc3\x90"},
    {"Eacute", "\xc3\x89"},
    {"Eacute;", "\xc3\x89"},
    {"Ecaron;", "\xc4\x9a"},
    {"Ecirc", "\xc3\x8a"},
    {"Ecirc;", "\xc3\x8a"},
    {"Ecy;", "\xd0\xad"},
    {"Edot;", "\xc4\x96"},
    {"Efr;", "\xf0\x9d\x94\x88"},
    {"Egrave", "\xc3\x88"},
    {"Egrave;", "\xc3\x88"},
    {"Element;", "\xe2\x88\x88"},
    {"Emacr;", "\xc4\x92"},
    {"EmptySmallSquare;", "\xe2\x97\xbb"},
    {"EmptyVerySmallSquare;", "\xe2\x96\xab"},
    {"Eogon;", "\xc4\x98"},
    {"Eopf;", "\xf0\x9d\x94\xbc"},
    {"Epsilon;", "\xce\x95"},
    {"Equal;", "\xe2\xa9\xb5"},
    {"EqualTilde;", "\xe2\x89\x82"},
    {"Equilibrium;", "\xe2\x87\x8c"},
    {"Escr;", "\xe2\x84\xb0"},
    {"Esim;", "\xe2\xa9\xb3"},
    {"Eta;", "\xce\x97"},
    {"Euml", "\xc3\x8b"},
    {"Euml;", "\xc3\x8b"},
    {"Exists;", "\xe2\x88\x83"},
    {"ExponentialE;", "\xe2\x85\x87"},
    {"Fcy;", "\xd0\xa4"},
    {"Ffr;", "\xf0\x9d\x94\x89"},
    {"FilledSmallSquare;", "\xe2\x97\xbc"},
    {"FilledVerySmallSquare;", "\xe2\x96\xaa"},
    {"Fopf;", "\xf0\x9d\x94\xbd"},
    {"ForAll;", "\xe2\x88\x80"},
    {"Fouriertrf;", "\xe2\x84\xb1"},
    {"Fscr;", "\xe2\x84\xb1"},
    {"GJcy;", "\xd0\x83"},
    {"GT", ">"},
    {"GT;", ">"},
    {"Gamma;", "\xce\x93"},
    {"Gammad;", "\xcf\x9c"},
    {"Gbreve;", "\xc4\x9e"},
    {"Gcedil;", "\xc4\xa2"},
    {"Gcirc;", "\xc4\x9c"},
    {"Gcy;", "\xd0\x93"},
    {"Gdot;", "\xc4\xa0"},
    {"Gfr;", "\xf0\x9d\x94\x8a"},
    {"Gg;", "\xe2\x8b\x99"},
    {"Gopf;", "\xf0\x9d\x94\xbe"},
    {"GreaterEqual;", "\xe2\x89\xa5"},
    {"GreaterEqualLess;", "\xe2\x8b\x9b"},
    {"GreaterFullEqual;", "\xe2\x89\xa7"},
    {"GreaterGreater;", "\xe2\xaa\xa2"},
    {"GreaterLess;", "\xe2\x89\xb7"},
    {"GreaterSlantEqual;", "\xe2\xa9\xbe"},
    {"GreaterTilde;", "\xe2\x89\xb3"},
    {"Gscr;", "\xf0\x9d\x92\xa2"},
    {"Gt;", "\xe2\x89\xab"},
    {"HARDcy;", "\xd0\xaa"},
    {"Hacek;", "\xcb\x87"},
    {"Hat;", "^"},
    {"Hcirc;", "\xc4\xa4"},
    {"Hfr;", "\xe2\x84\x8c"},
    {"HilbertSpace;", "\xe2\x84\x8b"},
    {"Hopf;", "\xe2\x84\x8d"},
    {"HorizontalLine;", "\xe2\x94\x80"},
    {"Hscr;", "\xe2\x84\x8b"},
    {"Hstrok;", "\xc4\xa6"},
    {"HumpDownHump;", "\xe2\x89\x8e"},
    {"HumpEqual;", "\xe2\x89\x8f"},
    {"IEcy;", "\xd0\x95"},
    {"IJlig;", "\xc4\xb2"},
    {"IOcy;", "\xd0\x81"},
    {"Iacute", "\xc3\x8d"},
    {"Iacute;", "\xc3\x8d"},
    {"Icirc", "\xc3\x8e"},
    {"Icirc;", "\xc3\x8e"},
    {"Icy;", "\xd0\x98"},
    {"Idot;", "\xc4\xb0"},
    {"Ifr;", "\xe2\x84\x91"},
    {"Igrave", "\xc3\x8c"},
    {"Igrave;", "\xc3\x8c"},
    {"Im;", "\xe2\x84\x91"},
    {"Imacr;", "\xc4\xaa"},
    {"ImaginaryI;", "\xe2\x85\x88"},
    {"Implies;", "\xe2\x87\x92"},
    {"Int;", "\xe2\x88\xac"},
    {"Integral;", "\xe2\x88\xab"},
    {"Intersection;", "\xe2\x8b\x82"},
    {"InvisibleComma;", "\xe2\x81\xa3"},
    {"InvisibleTimes;", "\xe2\x81\xa2"},
    {"Iogon;", "\xc4\xae"},
    {"Iopf;", "\xf0\x9d\x95\x80"},
    {"Iota;", "\xce\x99"},
    {"Iscr;", "\xe2\x84\x90"},
    {"Itilde;", "\xc4\xa8"},
    {"Iukcy;", "\xd0\x86"},
    {"Iuml", "\xc3\x8f"},
    {"Iuml;", "\xc3\x8f"},
    {"Jcirc;", "\xc4\xb4"},
    {"Jcy;", "\xd0\x99"},
    {"Jfr;", "\xf0\x9d\x94\x8d"},
    {"Jopf;", "\xf0\x9d\x95\x81"},
    {"Jscr;", "\xf0\x9d\x92\xa5"},
    {"Jsercy;", "\xd0\x88"},
    {"Jukcy;", "\xd0\x84"},
    {"KHcy;", "\xd0\xa5"},
    {"KJcy;", "\xd0\x8c"},
    {"Kappa;", "\xce\x9a"},
    {"Kcedil;", "\xc4\xb6"},
    {"Kcy;", "\xd0\x9a"},
    {"Kfr;", "\xf0\x9d\x94\x8e"},
    {"Kopf;", "\xf0\x9d\x95\x82"},
    {"Kscr;", "\xf0\x9d\x92\xa6"},
    {"LJcy;", "\xd0\x89"},
    {"LT", "<"},
    {"LT;", "<"},
    {"Lacute;", "\xc4\xb9"},
    {"Lambda;", "\xce\x9b"},
    {"Lang;", "\xe2\x9f\xaa"},
    {"Laplacetrf;", "\xe2\x84\x92"},
    {"Larr;", "\xe2\x86\x9e"},
    {"Lcaron;", "\xc4\xbd"},
    {"Lcedil;", "\xc4\xbb"},
    {"Lcy;", "\xd0\x9b"},
    {"LeftAngleBracket;", "\xe2\x9f\xa8"},
    {"LeftArrow;", "\xe2\x86\x90"},
    {"LeftArrowBar;", "\xe2\x87\xa4"},
    {"LeftArrowRightArrow;", "\xe2\x87\x86"},
    {"LeftCeiling;", "\xe2\x8c\x88"},
    {"LeftDoubleBracket;", "\xe2\x9f\xa6"},
    {"LeftDownTeeVector;", "\xe2\xa5\xa1"},
    {"LeftDownVector;", "\xe2\x87\x83"},
    {"LeftDownVectorBar;", "\xe2\xa5\x99"},
    {"LeftFloor;", "\xe2\x8c\x8a"},
    {"LeftRightArrow;", "\xe2\x86\x94"},
    {"LeftRightVector;", "\xe2\xa5\x8e"},
    {"LeftTee;", "\xe2\x8a\xa3"},
    {"LeftTeeArrow;", "\xe2\x86\xa4"},
    {"LeftTeeVector;", "\xe2\xa5\x9a"},
    {"LeftTriangle;", "\xe2\x8a\xb2"},
    {"LeftTriangleBar;", "\xe2\xa7\x8f"},
    {"LeftTriangleEqual;", "\xe2\x8a\xb4"},
    {"LeftUpDownVector;", "\xe2\xa5\x91"},
    {"LeftUpTeeVector;", "\xe2\xa5\xa0"},
    {"LeftUpVector;", "\xe2\x86\xbf"},
    {"LeftUpVectorBar;", "\xe2\xa5\x98"},
    {"LeftVector;", "\xe2\x86\xbc"},
    {"LeftVectorBar;", "\xe2\xa5\x92"},
    {"Leftarrow;", "\xe2\x87\x90"},
    {"Leftrightarrow;", "\xe2\x87\x94"},
    {"LessEqualGreater;", "\xe2\x8b\x9a"},
    {"LessFullEqual;", "\xe2\x89\xa6"},
    {"LessGreater;", "\xe2\x89\xb6"},
    {"LessLess;", "\xe2\xaa\xa1"},
    {"LessSlantEqual;", "\xe2\xa9\xbd"},
    {"LessTilde;", "\xe2\x89\xb2"},
    {"Lfr;", "\xf0\x9d\x94\x8f"},
    {"Ll;", "\xe2\x8b\x98"},
    {"Lleftarrow;", "\xe2\x87\x9a"},
    {"Lmidot;", "\xc4\xbf"},
    {"LongLeftArrow;", "\xe2\x9f\xb5"},
    {"LongLeftRightArrow;", "\xe2\x9f\xb7"},
    {"LongRightArrow;", "\xe2\x9f\xb6"},
    {"Longleftarrow;", "\xe2\x9f\xb8"},
    {"Longleftrightarrow;", "\xe2\x9f\xba"},
    {"Longrightarrow;", "\xe2\x9f\xb9"},
    {"Lopf;", "\xf0\x9d\x95\x83"},
    {"LowerLeftArrow;", "\xe2\x86\x99"},
    {"LowerRightArrow;", "\xe2\x86\x98"},
    {"Lscr;", "\xe2\x84\x92"},
    {"Lsh;", "\xe2\x86\xb0"},
    {"Lstrok;", "\xc5\x81"},
    {"Lt;", "\xe2\x89\xaa"},
    {"Map;", "\xe2\xa4\x85"},
    {"Mcy;", "\xd0\x9c"},
    {"MediumSpace;", "\xe2\x81\x9f"},
    {"Mellintrf;", "\xe2\x84\xb3"},
    {"Mfr;", "\xf0\x9d\x94\x90"},
    {"MinusPlus;", "\xe2\x88\x93"},
    {"Mopf;", "\xf0\x9d\x95\x84"},
    {"Mscr;", "\xe2\x84\xb3"},
    {"Mu;", "\xce\x9c"},
    {"NJcy;", "\xd0\x8a"},
    {"Nacute;", "\xc5\x83"},
    {"Ncaron;", "\xc5\x87"},
    {"Ncedil;", "\xc5\x85"},
    {"Ncy;", "\xd0\x9d"},
    {"NegativeMediumSpace;", "\xe2\x80\x8b"},
    {"NegativeThickSpace;", "\xe2\x80\x8b"},
    {"NegativeThinSpace;", "\xe2\x80\x8b"},
    {"NegativeVeryThinSpace;", "\xe2\x80\x8b"},
    {"NestedGreaterGreater;", "\xe2\x89\xab"},
    {"NestedLessLess;", "\xe2\x89\xaa"},
    {"NewLine;", "\x0a"},
    {"Nfr;", "\xf0\x9d\x94\x91"},
    {"NoBreak;", "\xe2\x81\xa0"},
    {"NonBreakingSpace;", "\xc2\xa0"},
    {"Nopf;", "\xe2\x84\x95"},
    {"Not;", "\xe2\xab\xac"},
    {"NotCongruent;", "\xe2\x89\xa2"},
    {"NotCupCap;", "\xe2\x89\xad"},
    {"NotDoubleVerticalBar;", "\xe2\x88\xa6"},
    {"NotElement;", "\xe2\x88\x89"},
    {"NotEqual;", "\xe2\x89\xa0"},
    {"NotEqualTilde;", "\xe2\x89\x82\xcc\xb8"},
    {"NotExists;", "\xe2\x88\x84"},
    {"NotGreater;", "\xe2\x89\xaf"},
    {"NotGreaterEqual;", "\xe2\x89\xb1"},
    {"NotGreaterFullEqual;", "\xe2\x89\xa7\xcc\xb8"},
    {"NotGreaterGreater;", "\xe2\x89\xab\xcc\xb8"},
    {"NotGreaterLess;", "\xe2\x89\xb9"},
    {"NotGreaterSlantEqual;", "\xe2\xa9\xbe\xcc\xb8"},
    {"NotGreaterTilde;", "\xe2\x89\xb5"},
    {"NotHumpDownHump;", "\xe2\x89\x8e\xcc\xb8"},
    {"NotHumpEqual;", "\xe2\x89\x8f\xcc\xb8"},
    {"NotLeftTriangle;", "\xe2\x8b\xaa"},
    {"NotLeftTriangleBar;", "\xe2\xa7\x8f\xcc\xb8"},
    {"NotLeftTriangleEqual;", "\xe2\x8b\xac"},
    {"NotLess;", "\xe2\x89\xae"},
    {"NotLessEqual;", "\xe2\x89\xb0"},
    {"NotLessGreater;", "\xe2\x89\xb8"},
    {"NotLessLess;", "\xe2\x89\xaa\xcc\xb8"},
    {"NotLessSlantEqual;", "\xe2\xa9\xbd\xcc\xb8"},
    {"NotLessTilde;", "\xe2\x89\xb4"},
    {"NotNestedGreaterGreater;", "\xe2\xaa\xa2\xcc\xb8"},
    {"NotNestedLessLess;", "\xe2\xaa\xa1\xcc\xb8"},
    {"NotPrecedes;", "\xe2\x8a\x80"},
    {"NotPrecedesEqual;", "\xe2\xaa\xaf\xcc\xb8"},
    {"NotPrecedesSlantEqual;", "\xe2\x8b\xa0"},
    {"NotReverseElement;", "\xe2\x88\x8c"},
    {"NotRightTriangle;", "\xe2\x8b\xab"},
    {"NotRightTriangleBar;", "\xe2\xa7\x90\xcc\xb8"},
    {"NotRightTriangleEqual;", "\xe2\x8b\xad"},
    {"NotSquareSubset;", "\xe2\x8a\x8f\xcc\xb8"},
    {"NotSquareSubsetEqual;", "\xe2\x8b\xa2"},
    {"NotSquareSuperset;", "\xe2\x8a\x90\xcc\xb8"},
    {"NotSquareSupersetEqual;", "\xe2\x8b\xa3"},
    {"NotSubset;", "\xe2\x8a\x82\xe2\x83\x92"},
    {"NotSubsetEqual;", "\xe2\x8a\x88"},
    {"NotSucceeds;", "\xe2\x8a\x81"},
    {"NotSucceedsEqual;", "\xe2\xaa\xb0\xcc\xb8"},
    {"NotSucceedsSlantEqual;", "\xe2\x8b\xa1"},
    {"NotSucceedsTilde;", "\xe2\x89\xbf\xcc\xb8"},
    {"NotSuperset;", "\xe2\x8a\x83\xe2\x83\x92"},
    {"NotSupersetEqual;", "\xe2\x8a\x89"},
    {"NotTilde;", "\xe2\x89\x81"},
    {"NotTildeEqual;", "\xe2\x89\x84"},
    {"NotTildeFullEqual;", "\xe2\x89\x87"},
    {"NotTildeTilde;", "\xe2\x89\x89"},
    {"NotVerticalBar;", "\xe2\x88\xa4"},
    {"Nscr;", "\xf0\x9d\x92\xa9"},
    {"Ntilde", "\xc3\x91"},
    {"Ntilde;", "\xc3\x91"},
    {"Nu;", "\xce\x9d"},
    {"OElig;", "\xc5\x92"},
    {"Oacute", "\xc3\x93"},
    {"Oacute;", "\xc3\x93"},
    {"Ocirc", "\xc3\x94"},
    {"Ocirc;", "\xc3\x94"},
    {"Ocy;", "\xd0\x9e"},
    {"Odblac;", "\xc5\x90"},
    {"Ofr;", "\xf0\x9d\x94\x92"},
    {"Ograve", "\xc3\x92"},
    {"Ograve;", "\xc3\x92"},
    {"Omacr;", "\xc5\x8c"},
    {"Omega;", "\xce\xa9"},
    {"Omicron;", "\xce\x9f"},
    {"Oopf;", "\xf0\x9d\x95\x86"},
    {"OpenCurlyDoubleQuote;", "\xe2\x80\x9c"},
    {"OpenCurlyQuote;", "\xe2\x80\x98"},
    {"Or;", "\xe2\xa9\x94"},
    {"Oscr;", "\xf0\x9d\x92\xaa"},
    {"Oslash", "\xc3\x98"},
    {"Oslash;", "\xc3\x98"},
    {"Otilde", "\xc3\x95"},
    {"Otilde;", "\xc3\x95"},
    {"Otimes;", "\xe2\xa8\xb7"},
    {"Ouml", "\xc3\x96"},
    {"Ouml;", "\xc3\x96"},
    {"OverBar;", "\xe2\x80\xbe"},
    {"OverBrace;", "\xe2\x8f\x9e"},
    {"OverBracket;", "\xe2\x8e\xb4"},
    {"OverParenthesis;", "\xe2\x8f\x9c"},
    {"PartialD;", "\xe2\x88\x82"},
    {"Pcy;", "\xd0\x9f"},
    {"Pfr;", "\xf0\x9d\x94\x93"},
    {"Phi;", "\xce\xa6"},
    {"Pi;", "\xce\xa0"},
    {"PlusMinus;", "\xc2\xb1"},
    {"Poincareplane;", "\xe2\x84\x8c"},
    {"Popf;", "\xe2\x84\x99"},
    {"Pr;", "\xe2\xaa\xbb"},
    {"Precedes;", "\xe2\x89\xba"},
    {"PrecedesEqual;", "\xe2\xaa\xaf"},
    {"PrecedesSlantEqual;", "\xe2\x89\xbc"},
    {"PrecedesTilde;", "\xe2\x89\xbe"},
    {"Prime;", "\xe2\x80\xb3"},
    {"Product;", "\xe2\x88\x8f"},
    {"Proportion;", "\xe2\x88\xb7"},
    {"Proportional;", "\xe2\x88\x9d"},
    {"Pscr;", "\xf0\x9d\x92\xab"},
    {"Psi;", "\xce\xa8"},
    {"QUOT", "\x22"},
    {"QUOT;", "\x22"},
    {"Qfr;", "\xf0\x9d\x94\x94"},
    {"Qopf;", "\xe2\x84\x9a"},
    {"Qscr;", "\xf0\x9d\x92\xac"},
    {"RBarr;", "\xe2\xa4\x90"},
    {"REG", "\xc2\xae"},
    {"REG;", "\xc2\xae"},
    {"Racute;", "\xc5\x94"},
    {"Rang;", "\xe2\x9f\xab"},
    {"Rarr;", "\xe2\x86\xa0"},
    {"Rarrtl;", "\xe2\xa4\x96"},
    {"Rcaron;", "\xc5\x98"},
    {"Rcedil;", "\xc5\x96"},
    {"Rcy;", "\xd0\xa0"},
    {"Re;", "\xe2\x84\x9c"},
    {"ReverseElement;", "\xe2\x88\x8b"},
    {"ReverseEquilibrium;", "\xe2\x87\x8b"},
    {"ReverseUpEquilibrium;", "\xe2\xa5\xaf"},
    {"Rfr;", "\xe2\x84\x9c"},
    {"Rho;", "\xce\xa1"},
    {"RightAngleBracket;", "\xe2\x9f\xa9"},
    {"RightArrow;", "\xe2\x86\x92"},
    {"RightArrowBar;", "\xe2\x87\xa5"},
    {"RightArrowLeftArrow;", "\xe2\x87\x84"},
    {"RightCeiling;", "\xe2\x8c\x89"},
    {"RightDoubleBracket;", "\xe2\x9f\xa7"},
    {"RightDownTeeVector;", "\xe2\xa5\x9d"},
    {"RightDownVector;", "\xe2\x87\x82"},
    {"RightDownVectorBar;", "\xe2\xa5\x95"},
    {"RightFloor;", "\xe2\x8c\x8b"},
    {"RightTee;", "\xe2\x8a\xa2"},
    {"RightTeeArrow;", "\xe2\x86\xa6"},
    {"RightTeeVector;", "\xe2\xa5\x9b"},
    {"RightTriangle;", "\xe2\x8a\xb3"},
    {"RightTriangleBar;", "\xe2\xa7\x90"},
    {"RightTriangleEqual;", "\xe2\x8a\xb5"},
    {"RightUpDownVector;", "\xe2\xa5\x8f"},
    {"RightUpTeeVector;", "\xe2\xa5\x9c"},
    {"RightUpVector;", "\xe2\x86\xbe"},
    {"RightUpVectorBar;", "\xe2\xa5\x94"},
    {"RightVector;", "\xe2\x87\x80"},
    {"RightVectorBar;", "\xe2\xa5\x93"},
    {"Rightarrow;", "\xe2\x87\x92"},
    {"Ropf;", "\xe2\x84\x9d"},
    {"RoundImplies;", "\xe2\xa5\xb0"},
    {"Rrightarrow;", "\xe2\x87\x9b"},
    {"Rscr;", "\xe2\x84\x9b"},
    {"Rsh;", "\xe2\x86\xb1"},
    {"RuleDelayed;", "\xe2\xa7\xb4"},
    {"SHCHcy;", "\xd0\xa9"},
    {"SHcy;", "\xd0\xa8"},
    {"SOFTcy;", "\xd0\xac"},
    {"Sacute;", "\xc5\x9a"},
    {"Sc;", "\xe2\xaa\xbc"},
    {"Scaron;", "\xc5\xa0"},
    {"Scedil;", "\xc5\x9e"},
    {"Scirc;", "\xc5\x9c"},
    {"Scy;", "\xd0\xa1"},
    {"Sfr;", "\xf0\x9d\x94\x96"},
    {"ShortDownArrow;", "\xe2\x86\x93"},
    {"ShortLeftArrow;", "\xe2\x86\x90"},
    {"ShortRightArrow;", "\xe2\x86\x92"},
    {"ShortUpArrow;", "\xe2\x86\x91"},
    {"Sigma;", "\xce\xa3"},
    {"SmallCircle;", "\xe2\x88\x98"},
    {"Sopf;", "\xf0\x9d\x95\x8a"},
    {"Sqrt;", "\xe2\x88\x9a"},
    {"Square;", "\xe2\x96\xa1"},
    {"SquareIntersection;", "\xe2\x8a\x93"},
    {"SquareSubset;", "\xe2\x8a\x8f"},
    {"SquareSubsetEqual;", "\xe2\x8a\x91"},
    {"SquareSuperset;", "\xe2\x8a\x90"},
    {"SquareSupersetEqual;", "\xe2\x8a\x92"},
    {"SquareUnion;", "\xe2\x8a\x94"},
    {"Sscr;", "\xf0\x9d\x92\xae"},
    {"Star;", "\xe2\x8b\x86"},
    {"Sub;", "\xe2\x8b\x90"},
    {"Subset;", "\xe2\x8b\x90"},
    {"SubsetEqual;", "\xe2\x8a\x86"},
    {"Succeeds;", "\xe2\x89\xbb"},
    {"SucceedsEqual;", "\xe2\xaa\xb0"},
    {"SucceedsSlantEqual;", "\xe2\x89\xbd"},
    {"SucceedsTilde;", "\xe2\x89\xbf"},
    {"SuchThat;", "\xe2\x88\x8b"},
    {"Sum;", "\xe2\x88\x91"},
    {"Sup;", "\xe2\x8b\x91"},
    {"Superset;", "\xe2\x8a\x83"},
    {"SupersetEqual;", "\xe2\x8a\x87"},
    {"Supset;", "\xe2\x8b\x91"},
    {"THORN", "\xc3\x9e"},
    {"THORN;", "\xc3\x9e"},
    {"TRADE;", "\xe2\x84\xa2"},
    {"TSHcy;", "\xd0\x8b"},
    {"TScy;", "\xd0\xa6"},
    {"Tab;", "\x09"},
    {"Tau;", "\xce\xa4"},
    {"Tcaron;", "\xc5\xa4"},
    {"Tcedil;", "\xc5\xa2"},
    {"Tcy;", "\xd0\xa2"},
    {"Tfr;", "\xf0\x9d\x94\x97"},
    {"Therefore;", "\xe2\x88\xb4"},
    {"Theta;", "\xce\x98"},
    {"ThickSpace;", "\xe2\x81\x9f\xe2\x80\x8a"},
    {"ThinSpace;", "\xe2\x80\x89"},
    {"Tilde;", "\xe2\x88\xbc"},
    {"TildeEqual;", "\xe2\x89\x83"},
    {"TildeFullEqual;", "\xe2\x89\x85"},
    {"TildeTilde;", "\xe2\x89\x88"},
    {"Topf;", "\xf0\x9d\x95\x8b"},
    {"TripleDot;", "\xe2\x83\x9b"},
    {"Tscr;", "\xf0\x9d\x92\xaf"},
    {"Tstrok;", "\xc5\xa6"},
    {"Uacute", "\xc3\x9a"},
    {"Uacute;", "\xc3\x9a"},
    {"Uarr;", "\xe2\x86\x9f"},
    {"Uarrocir;", "\xe2\xa5\x89"},
    {"Ubrcy;", "\xd0\x8e"},
    {"Ubreve;", "\xc5\xac"},
    {"Ucirc", "\xc3\x9b"},
    {"Ucirc;", "\xc3\x9b"},
    {"Ucy;", "\xd0\xa3"},
    {"Udblac;", "\xc5\xb0"},
    {"Ufr;", "\xf0\x9d\x94\x98"},
    {"Ugrave", "\xc3\x99"},
    {"Ugrave;", "\xc3\x99"},
    {"Umacr;", "\xc5\xaa"},
    {"UnderBar;", "_"},
    {"UnderBrace;", "\xe2\x8f\x9f"},
    {"UnderBracket;", "\xe2\x8e\xb5"},
    {"UnderParenthesis;", "\xe2\x8f\x9d"},
    {"Union;", "\xe2\x8b\x83"},
    {"UnionPlus;", "\xe2\x8a\x8e"},
    {"Uogon;", "\xc5\xb2"},
    {"Uopf;", "\xf0\x9d\x95\x8c"},
    {"UpArrow;", "\xe2\x86\x91"},
    {"UpArrowBar;", "\xe2\xa4\x92"},
    {"UpArrowDownArrow;", "\xe2\x87\x85"},
    {"UpDownArrow;", "\xe2\x86\x95"},
    {"UpEquilibrium;", "\xe2\xa5\xae"},
    {"UpTee;", "\xe2\x8a\xa5"},
    {"UpTeeArrow;", "\xe2\x86\xa5"},
    {"Uparrow;", "\xe2\x87\x91"},
    {"Updownarrow;", "\xe2\x87\x95"},
    {"UpperLeftArrow;", "\xe2\x86\x96"},
    {"UpperRightArrow;", "\xe2\x86\x97"},
    {"Upsi;", "\xcf\x92"},
    {"Upsilon;", "\xce\xa5"},
    {"Uring;", "\xc5\xae"},
    {"Uscr;", "\xf0\x9d\x92\xb0"},
    {"Utilde;", "\xc5\xa8"},
    {"Uuml", "\xc3\x9c"},
    {"Uuml;", "\xc3\x9c"},
    {"VDash;", "\xe2\x8a\xab"},
    {"Vbar;", "\xe2\xab\xab"},
    {"Vcy;", "\xd0\x92"},
    {"Vdash;", "\xe2\x8a\xa9"},
    {"Vdashl;", "\xe2\xab\xa6"},
    {"Vee;", "\xe2\x8b\x81"},
    {"Verbar;", "\xe2\x80\x96"},
    {"Vert;", "\xe2\x80\x96"},
    {"VerticalBar;", "\xe2\x88\xa3"},
    {"VerticalLine;", "|"},
    {"VerticalSeparator;", "\xe2\x9d\x98"},
    {"VerticalTilde;", "\xe2\x89\x80"},
    {"VeryThinSpace;", "\xe2\x80\x8a"},
    {"Vfr;", "\xf0\x9d\x94\x99"},
    {"Vopf;", "\xf0\x9d\x95\x8d"},
    {"Vscr;", "\xf0\x9d\x92\xb1"},
    {"Vvdash;", "\xe2\x8a\xaa"},
    {"Wcirc;", "\xc5\xb4"},
    {"Wedge;", "\xe2\x8b\x80"},
    {"Wfr;", "\xf0\x9d\x94\x9a"},
    {"Wopf;", "\xf0\x9d\x95\x8e"},
    {"Wscr;", "\xf0\x9d\x92\xb2"},
    {"Xfr;", "\xf0\x9d\x94\x9b"},
    {"Xi;", "\xce\x9e"},
    {"Xopf;", "\xf0\x9d\x95\x8f"},
    {"Xscr;", "\xf0\x9d\x92\xb3"},
    {"YAcy;", "\xd0\xaf"},
    {"YIcy;", "\xd0\x87"},
    {"YUcy;", "\xd0\xae"},
    {"Yacute", "\xc3\x9d"},
    {"Yacute;", "\xc3\x9d"},
    {"Ycirc;", "\xc5\xb6"},
    {"Ycy;", "\xd0\xab"},
    {"Yfr;", "\xf0\x9d\x94\x9c"},
    {"Yopf;", "\xf0\x9d\x95\x90"},
    {"Yscr;", "\xf0\x9d\x92\xb4"},
    {"Yuml;", "\xc5\xb8"},
    {"ZHcy;", "\xd0\x96"},
    {"Zacute;", "\xc5\xb9"},
    {"Zcaron;", "\xc5\xbd"},
    {"Zcy;", "\xd0\x97"},
    {"Zdot;", "\xc5\xbb"},
    {"ZeroWidthSpace;", "\xe2\x80\x8b"},
    {"Zeta;", "\xce\x96"},
    {"Zfr;", "\xe2\x84\xa8"},
    {"Zopf;", "\xe2\x84\xa4"},
    {"Zscr;", "\xf0\x9d\x92\xb5"},
    {"aacute", "\xc3\xa1"},
    {"aacute;", "\xc3\xa1"},
    {"abreve;", "\xc4\x83"},
    {"ac;", "\xe2\x88\xbe"},
    {"acE;", "\xe2\x88\xbe\xcc\xb3"},
    {"acd;", "\xe2\x88\xbf"},
    {"acirc", "\xc3\xa2"},
    {"acirc;", "\xc3\xa2"},
    {"acute", "\xc2\xb4"},
    {"acute;", "\xc2\xb4"},
    {"acy;", "\xd0\xb0"},
    {"aelig", "\xc3\xa6"},
    {"aelig;", "\xc3\xa6"},
    {"af;", "\xe2\x81\xa1"},
    {"afr;", "\xf0\x9d\x94\x9e"},
    {"agrave", "\xc3\xa0"},
    {"agrave;", "\xc3\xa0"},
    {"alefsym;", "\xe2\x84\xb5"},
    {"aleph;", "\xe2\x84\xb5"},
    {"alpha;", "\xce\xb1"},
    {"amacr;", "\xc4\x81"},
    {"amalg;", "\xe2\xa8\xbf"},
    {"amp", "&"},
    {"amp;", "&"},
    {"and;", "\xe2\x88\xa7"},
    {"andand;", "\xe2\xa9\x95"},
    {"andd;", "\xe2\xa9\x9c"},
    {"andslope;", "\xe2\xa9\x98"},
    {"andv;", "\xe2\xa9\x9a"},
    {"ang;", "\xe2\x88\xa0"},
    {"ange;", "\xe2\xa6\xa4"},
    {"angle;", "\xe2\x88\xa0"},
    {"angmsd;", "\xe2\x88\xa1"},
    {"angmsdaa;", "\xe2\xa6\xa8"},
    {"angmsdab;", "\xe2\xa6\xa9"},
    {"angmsdac;", "\xe2\xa6\xaa"},
    {"angmsdad;", "\xe2\xa6\xab"},
    {"angmsdae;", "\xe2\xa6\xac"},
    {"angmsdaf;", "\xe2\xa6\xad"},
    {"angmsdag;", "\xe2\xa6\xae"},
    {"angmsdah;", "\xe2\xa6\xaf"},
    {"angrt;", "\xe2\x88\x9f"},
    {"angrtvb;", "\xe2\x8a\xbe"},
    {"angrtvbd;", "\xe2\xa6\x9d"},
    {"angsph;", "\xe2\x88\xa2"},
    {"angst;", "\xc3\x85"},
    {"angzarr;", "\xe2\x8d\xbc"},
    {"aogon;", "\xc4\x85"},
    {"aopf;", "\xf0\x9d\x95\x92"},
    {"ap;", "\xe2\x89\x88"},
    {"apE;", "\xe2\xa9\xb0"},
    {"apacir;", "\xe2\xa9\xaf"},
    {"ape;", "\xe2\x89\x8a"},
    {"apid;", "\xe2\x89\x8b"},
    {"apos;", "'"},
    {"approx;", "\xe2\x89\x88"},
    {"approxeq;", "\xe2\x89\x8a"},
    {"aring", "\xc3\xa5"},
    {"aring;", "\xc3\xa5"},
    {"ascr;", "\xf0\x9d\x92\xb6"},
    {"ast;", "*"},
    {"asymp;", "\xe2\x89\x88"},
    {"asympeq;", "\xe2\x89\x8d"},
    {"atilde", "\xc3\xa3"},
    {"atilde;", "\xc3\xa3"},
    {"auml", "\xc3\xa4"},
    {"auml;", "\xc3\xa4"},
    {"awconint;", "\xe2\x88\xb3"},
    {"awint;", "\xe2\xa8\x91"},
    {"bNot;", "\xe2\xab\xad"},
    {"backcong;", "\xe2\x89\x8c"},
    {"backepsilon;", "\xcf\xb6"},
    {"backprime;", "\xe2\x80\xb5"},
    {"backsim;", "\xe2\x88\xbd"},
    {"backsimeq;", "\xe2\x8b\x8d"},
    {"barvee;", "\xe2\x8a\xbd"},
    {"barwed;", "\xe2\x8c\x85"},
    {"barwedge;", "\xe2\x8c\x85"},
    {"bbrk;", "\xe2\x8e\xb5"},
    {"bbrktbrk;", "\xe2\x8e\xb6"},
    {"bcong;", "\xe2\x89\x8c"},
    {"bcy;", "\xd0\xb1"},
    {"bdquo;", "\xe2\x80\x9e"},
    {"becaus;", "\xe2\x88\xb5"},
    {"because;", "\xe2\x88\xb5"},
    {"bemptyv;", "\xe2\xa6\xb0"},
    {"bepsi;", "\xcf\xb6"},
    {"bernou;", "\xe2\x84\xac"},
    {"beta;", "\xce\xb2"},
    {"beth;", "\xe2\x84\xb6"},
    {"between;", "\xe2\x89\xac"},
    {"bfr;", "\xf0\x9d\x94\x9f"},
    {"bigcap;", "\xe2\x8b\x82"},
    {"bigcirc;", "\xe2\x97\xaf"},
    {"bigcup;", "\xe2\x8b\x83"},
    {"bigodot;", "\xe2\xa8\x80"},
    {"bigoplus;", "\xe2\xa8\x81"},
    {"bigotimes;", "\xe2\xa8\x82"},
    {"bigsqcup;", "\xe2\xa8\x86"},
    {"bigstar;", "\xe2\x98\x85"},
    {"bigtriangledown;", "\xe2\x96\xbd"},
    {"bigtriangleup;", "\xe2\x96\xb3"},
    {"biguplus;", "\xe2\xa8\x84"},
    {"bigvee;", "\xe2\x8b\x81"},
    {"bigwedge;", "\xe2\x8b\x80"},
    {"bkarow;", "\xe2\xa4\x8d"},
    {"blacklozenge;", "\xe2\xa7\xab"},
    {"blacksquare;", "\xe2\x96\xaa"},
    {"blacktriangle;", "\xe2\x96\xb4"},
    {"blacktriangledown;", "\xe2\x96\xbe"},
    {"blacktriangleleft;", "\xe2\x97\x82"},
    {"blacktriangleright;", "\xe2\x96\xb8"},
    {"blank;", "\xe2\x90\xa3"},
    {"blk12;", "\xe2\x96\x92"},
    {"blk14;", "\xe2\x96\x91"},
    {"blk34;", "\xe2\x96\x93"},
    {"block;", "\xe2\x96\x88"},
    {"bne;", "=\xe2\x83\xa5"},
    {"bnequiv;", "\xe2\x89\xa1\xe2\x83\xa5"},
    {"bnot;", "\xe2\x8c\x90"},
    {"bopf;", "\xf0\x9d\x95\x93"},
    {"bot;", "\xe2\x8a\xa5"},
    {"bottom;", "\xe2\x8a\xa5"},
    {"bowtie;", "\xe2\x8b\x88"},
    {"boxDL;", "\xe2\x95\x97"},
    {"boxDR;", "\xe2\x95\x94"},
    {"boxDl;", "\xe2\x95\x96"},
    {"boxDr;", "\xe2\x95\x93"},
    {"boxH;", "\xe2\x95\x90"},
    {"boxHD;", "\xe2\x95\xa6"},
    {"boxHU;", "\xe2\x95\xa9"},
    {"boxHd;", "\xe2\x95\xa4"},
    {"boxHu;", "\xe2\x95\xa7"},
    {"boxUL;", "\xe2\x95\x9d"},
    {"boxUR;", "\xe2\x95\x9a"},
    {"boxUl;", "\xe2\x95\x9c"},
    {"boxUr;", "\xe2\x95\x99"},
    {"boxV;", "\xe2\x95\x91"},
    {"boxVH;", "\xe2\x95\xac"},
    {"boxVL;", "\xe2\x95\xa3"},
    {"boxVR;", "\xe2\x95\xa0"},
    {"boxVh;", "\xe2\x95\xab"},
    {"boxVl;", "\xe2\x95\xa2"},
    {"boxVr;", "\xe2\x95\x9f"},
    {"boxbox;", "\xe2\xa7\x89"},
    {"boxdL;", "\xe2\x95\x95"},
    {"boxdR;", "\xe2\x95\x92"},
    {"boxdl;", "\xe2\x94\x90"},
    {"boxdr;", "\xe2\x94\x8c"},
    {"boxh;", "\xe2\x94\x80"},
    {"boxhD;", "\xe2\x95\xa5"},
    {"boxhU;", "\xe2\x95\xa8"},
    {"boxhd;", "\xe2\x94\xac"},
    {"boxhu;", "\xe2\x94\xb4"},
    {"boxminus;", "\xe2\x8a\x9f"},
    {"boxplus;", "\xe2\x8a\x9e"},
    {"boxtimes;", "\xe2\x8a\xa0"},
    {"boxuL;", "\xe2\x95\x9b"},
    {"boxuR;", "\xe2\x95\x98"},
    {"boxul;", "\xe2\x94\x98"},
    {"boxur;", "\xe2\x94\x94"},
    {"boxv;", "\xe2\x94\x82"},
    {"boxvH;", "\xe2\x95\xaa"},
    {"boxvL;", "\xe2\x95\xa1"},
    {"boxvR;", "\xe2\x95\x9e"},
    {"boxvh;", "\xe2\x94\xbc"},
    {"boxvl;", "\xe2\x94\xa4"},
    {"boxvr;", "\xe2\x94\x9c"},
    {"bprime;", "\xe2\x80\xb5"},
    {"breve;", "\xcb\x98"},
    {"brvbar", "\xc2\xa6"},
    {"brvbar;", "\xc2\xa6"},
    {"bscr;", "\xf0\x9d\x92\xb7"},
    {"bsemi;", "\xe2\x81\x8f"},
    {"bsim;", "\xe2\x88\xbd"},
    {"bsime;", "\xe2\x8b\x8d"},
    {"bsol;", "\x5c"},
    {"bsolb;", "\xe2\xa7\x85"},
    {"bsolhsub;", "\xe2\x9f\x88"},
    {"bull;", "\xe2\x80\xa2"},
    {"bullet;", "\xe2\x80\xa2"},
    {"bump;", "\xe2\x89\x8e"},
    {"bumpE;", "\xe2\xaa\xae"},
    {"bumpe;", "\xe2\x89\x8f"},
    {"bumpeq;", "\xe2\x89\x8f"},
    {"cacute;", "\xc4\x87"},
    {"cap;", "\xe2\x88\xa9"},
    {"capand;", "\xe2\xa9\x84"},
    {"capbrcup;", "\xe2\xa9\x89"},
    {"capcap;", "\xe2\xa9\x8b"},
    {"capcup;", "\xe2\xa9\x87"},
    {"capdot;", "\xe2\xa9\x80"},
    {"caps;", "\xe2\x88\xa9\xef\xb8\x80"},
    {"caret;", "\xe2\x81\x81"},
    {"caron;", "\xcb\x87"},
    {"ccaps;", "\xe2\xa9\x8d"},
    {"ccaron;", "\xc4\x8d"},
    {"ccedil", "\xc3\xa7"},
    {"ccedil;", "\xc3\xa7"},
    {"ccirc;", "\xc4\x89"},
    {"ccups;", "\xe2\xa9\x8c"},
    {"ccupssm;", "\xe2\xa9\x90"},
    {"cdot;", "\xc4\x8b"},
    {"cedil", "\xc2\xb8"},
    {"cedil;", "\xc2\xb8"},
    {"cemptyv;", "\xe2\xa6\xb2"},
    {"cent", "\xc2\xa2"},
    {"cent;", "\xc2\xa2"},
    {"centerdot;", "\xc2\xb7"},
    {"cfr;", "\xf0\x9d\x94\xa0"},
    {"chcy;", "\xd1\x87"},
    {"check;", "\xe2\x9c\x93"},
    {"checkmark;", "\xe2\x9c\x93"},
    {"chi;", "\xcf\x87"},
    {"cir;", "\xe2\x97\x8b"},
    {"cirE;", "\xe2\xa7\x83"},
    {"circ;", "\xcb\x86"},
    {"circeq;", "\xe2\x89\x97"},
    {"circlearrowleft;", "\xe2\x86\xba"},
    {"circlearrowright;", "\xe2\x86\xbb"},
    {"circledR;", "\xc2\xae"},
    {"circledS;", "\xe2\x93\x88"},
    {"circledast;", "\xe2\x8a\x9b"},
    {"circledcirc;", "\xe2\x8a\x9a"},
    {"circleddash;", "\xe2\x8a\x9d"},
    {"cire;", "\xe2\x89\x97"},
    {"cirfnint;", "\xe2\xa8\x90"},
    {"cirmid;", "\xe2\xab\xaf"},
    {"cirscir;", "\xe2\xa7\x82"},
    {"clubs;", "\xe2\x99\xa3"},
    {"clubsuit;", "\xe2\x99\xa3"},
    {"colon;", ":"},
    {"colone;", "\xe2\x89\x94"},
    {"coloneq;", "\xe2\x89\x94"},
    {"comma;", ","},
    {"commat;", "@"},
    {"comp;", "\xe2\x88\x81"},
    {"compfn;", "\xe2\x88\x98"},
    {"complement;", "\xe2\x88\x81"},
    {"complexes;", "\xe2\x84\x82"},
    {"cong;", "\xe2\x89\x85"},
    {"congdot;", "\xe2\xa9\xad"},
    {"conint;", "\xe2\x88\xae"},
    {"copf;", "\xf0\x9d\x95\x94"},
    {"coprod;", "\xe2\x88\x90"},
    {"copy", "\xc2\xa9"},
    {"copy;", "\xc2\xa9"},
    {"copysr;", "\xe2\x84\x97"},
    {"crarr;", "\xe2\x86\xb5"},
    {"cross;", "\xe2\x9c\x97"},
    {"cscr;", "\xf0\x9d\x92\xb8"},
    {"csub;", "\xe2\xab\x8f"},
    {"csube;", "\xe2\xab\x91"},
    {"csup;", "\xe2\xab\x90"},
    {"csupe;", "\xe2\xab\x92"},
    {"ctdot;", "\xe2\x8b\xaf"},
    {"cudarrl;", "\xe2\xa4\xb8"},
    {"cudarrr;", "\xe2\xa4\xb5"},
    {"cuepr;", "\xe2\x8b\x9e"},
    {"cuesc;", "\xe2\x8b\x9f"},
    {"cularr;", "\xe2\x86\xb6"},
    {"cularrp;", "\xe2\xa4\xbd"},
    {"cup;", "\xe2\x88\xaa"},
    {"cupbrcap;", "\xe2\xa9\x88"},
    {"cupcap;", "\xe2\xa9\x86"},
    {"cupcup;", "\xe2\xa9\x8a"},
    {"cupdot;", "\xe2\x8a\x8d"},
    {"cupor;", "\xe2\xa9\x85"},
    {"cups;", "\xe2\x88\xaa\xef\xb8\x80"},
    {"curarr;", "\xe2\x86\xb7"},
    {"curarrm;", "\xe2\xa4\xbc"},
    {"curlyeqprec;", "\xe2\x8b\x9e"},
    {"curlyeqsucc;", "\xe2\x8b\x9f"},
    {"curlyvee;", "\xe2\x8b\x8e"},
    {"curlywedge;", "\xe2\x8b\x8f"},
    {"curren", "\xc2\xa4"},
    {"curren;", "\xc2\xa4"},
    {"curvearrowleft;", "\xe2\x86\xb6"},
    {"curvearrowright;", "\xe2\x86\xb7"},
    {"cuvee;", "\xe2\x8b\x8e"},
    {"cuwed;", "\xe2\x8b\x8f"},
    {"cwconint;", "\xe2\x88\xb2"},
    {"cwint;", "\xe2\x88\xb1"},
    {"cylcty;", "\xe2\x8c\xad"},
    {"dArr;", "\xe2\x87\x93"},
    {"dHar;", "\xe2\xa5\xa5"},
    {"dagger;", "\xe2\x80\xa0"},
    {"daleth;", "\xe2\x84\xb8"},
    {"darr;", "\xe2\x86\x93"},
    {"dash;", "\xe2\x80\x90"},
    {"dashv;", "\xe2\x8a\xa3"},
    {"dbkarow;", "\xe2\xa4\x8f"},
    {"dblac;", "\xcb\x9d"},
    {"dcaron;", "\xc4\x8f"},
    {"dcy;", "\xd0\xb4"},
    {"dd;", "\xe2\x85\x86"},
    {"ddagger;", "\xe2\x80\xa1"},
    {"ddarr;", "\xe2\x87\x8a"},
    {"ddotseq;", "\xe2\xa9\xb7"},
    {"deg", "\xc2\xb0"},
    {"deg;", "\xc2\xb0"},
    {"delta;", "\xce\xb4"},
    {"demptyv;", "\xe2\xa6\xb1"},
    {"dfisht;", "\xe2\xa5\xbf"},
    {"dfr;", "\xf0\x9d\x94\xa1"},
    {"dharl;", "\xe2\x87\x83"},
    {"dharr;", "\xe2\x87\x82"},
    {"diam;", "\xe2\x8b\x84"},
    {"diamond;", "\xe2\x8b\x84"},
    {"diamondsuit;", "\xe2\x99\xa6"},
    {"diams;", "\xe2\x99\xa6"},
    {"die;", "\xc2\xa8"},
    {"digamma;", "\xcf\x9d"},
    {"disin;", "\xe2\x8b\xb2"},
    {"div;", "\xc3\xb7"},
    {"divide", "\xc3\xb7"},
    {"divide;", "\xc3\xb7"},
    {"divideontimes;", "\xe2\x8b\x87"},
    {"divonx;", "\xe2\x8b\x87"},
    {"djcy;", "\xd1\x92"},
    {"dlcorn;", "\xe2\x8c\x9e"},
    {"dlcrop;", "\xe2\x8c\x8d"},
    {"dollar;", "$"},
    {"dopf;", "\xf0\x9d\x95\x95"},
    {"dot;", "\xcb\x99"},
    {"doteq;", "\xe2\x89\x90"},
    {"doteqdot;", "\xe2\x89\x91"},
    {"dotminus;", "\xe2\x88\xb8"},
    {"dotplus;", "\xe2\x88\x94"},
    {"dotsquare;", "\xe2\x8a\xa1"},
    {"doublebarwedge;", "\xe2\x8c\x86"},
    {"downarrow;", "\xe2\x86\x93"},
    {"downdownarrows;", "\xe2\x87\x8a"},
    {"downharpoonleft;", "\xe2\x87\x83"},
    {"downharpoonright;", "\xe2\x87\x82"},
    {"drbkarow;", "\xe2\xa4\x90"},
    {"drcorn;", "\xe2\x8c\x9f"},
    {"drcrop;", "\xe2\x8c\x8c"},
    {"dscr;", "\xf0\x9d\x92\xb9"},
    {"dscy;", "\xd1\x95"},
    {"dsol;", "\xe2\xa7\xb6"},
    {"dstrok;", "\xc4\x91"},
    {"dtdot;", "\xe2\x8b\xb1"},
    {"dtri;", "\xe2\x96\xbf"},
    {"dtrif;", "\xe2\x96\xbe"},
    {"duarr;", "\xe2\x87\xb5"},
    {"duhar;", "\xe2\xa5\xaf"},
    {"dwangle;", "\xe2\xa6\xa6"},
    {"dzcy;", "\xd1\x9f"},
    {"dzigrarr;", "\xe2\x9f\xbf"},
    {"eDDot;", "\xe2\xa9\xb7"},
    {"eDot;", "\xe2\x89\x91"},
    {"eacute", "\xc3\xa9"},
    {"eacute;", "\xc3\xa9"},
    {"easter;", "\xe2\xa9\xae"},
    {"ecaron;", "\xc4\x9b"},
    {"ecir;", "\xe2\x89\x96"},
    {"ecirc", "\xc3\xaa"},
    {"ecirc;", "\xc3\xaa"},
    {"ecolon;", "\xe2\x89\x95"},
    {"ecy;", "\xd1\x8d"},
    {"edot;", "\xc4\x97"},
    {"ee;", "\xe2\x85\x87"},
    {"efDot;", "\xe2\x89\x92"},
    {"efr;", "\xf0\x9d\x94\xa2"},
    {"eg;", "\xe2\xaa\x9a"},
    {"egrave", "\xc3\xa8"},
    {"egrave;", "\xc3\xa8"},
    {"egs;", "\xe2\xaa\x96"},
    {"egsdot;", "\xe2\xaa\x98"},
    {"el;", "\xe2\xaa\x99"},
    {"elinters;", "\xe2\x8f\xa7"},
    {"ell;", "\xe2\x84\x93"},
    {"els;", "\xe2\xaa\x95"},
    {"elsdot;", "\xe2\xaa\x97"},
    {"emacr;", "\xc4\x93"},
    {"empty;", "\xe2\x88\x85"},
    {"emptyset;", "\xe2\x88\x85"},
    {"emptyv;", "\xe2\x88\x85"},
    {"emsp13;", "\xe2\x80\x84"},
    {"emsp14;", "\xe2\x80\x85"},
    {"emsp;", "\xe2\x80\x83"},
    {"eng;", "\xc5\x8b"},
    {"ensp;", "\xe2\x80\x82"},
    {"eogon;", "\xc4\x99"},
    {"eopf;", "\xf0\x9d\x95\x96"},
    {"epar;", "\xe2\x8b\x95"},
    {"eparsl;", "\xe2\xa7\xa3"},
    {"eplus;", "\xe2\xa9\xb1"},
    {"epsi;", "\xce\xb5"},
    {"epsilon;", "\xce\xb5"},
    {"epsiv;", "\xcf\xb5"},
    {"eqcirc;", "\xe2\x89\x96"},
    {"eqcolon;", "\xe2\x89\x95"},
    {"eqsim;", "\xe2\x89\x82"},
    {"eqslantgtr;", "\xe2\xaa\x96"},
    {"eqslantless;", "\xe2\xaa\x95"},
    {"equals;", "="},
    {"equest;", "\xe2\x89\x9f"},
    {"equiv;", "\xe2\x89\xa1"},
    {"equivDD;", "\xe2\xa9\xb8"},
    {"eqvparsl;", "\xe2\xa7\xa5"},
    {"erDot;", "\xe2\x89\x93"},
    {"erarr;", "\xe2\xa5\xb1"},
    {"escr;", "\xe2\x84\xaf"},
    {"esdot;", "\xe2\x89\x90"},
    {"esim;", "\xe2\x89\x82"},
    {"eta;", "\xce\xb7"},
    {"eth", "\xc3\xb0"},
    {"eth;", "\xc3\xb0"},
    {"euml", "\xc3\xab"},
    {"euml;", "\xc3\xab"},
    {"euro;", "\xe2\x82\xac"},
    {"excl;", "!"},
    {"exist;", "\xe2\x88\x83"},
    {"expectation;", "\xe2\x84\xb0"},
    {"exponentiale;", "\xe2\x85\x87"},
    {"fallingdotseq;", "\xe2\x89\x92"},
    {"fcy;", "\xd1\x84"},
    {"female;", "\xe2\x99\x80"},
    {"ffilig;", "\xef\xac\x83"},
    {"fflig;", "\xef\xac\x80"},
    {"ffllig;", "\xef\xac\x84"},
    {"ffr;", "\xf0\x9d\x94\xa3"},
    {"filig;", "\xef\xac\x81"},
    {"fjlig;", "fj"},
    {"flat;", "\xe2\x99\xad"},
    {"fllig;", "\xef\xac\x82"},
    {"fltns;", "\xe2\x96\xb1"},
    {"fnof;", "\xc6\x92"},
    {"fopf;", "\xf0\x9d\x95\x97"},
    {"forall;", "\xe2\x88\x80"},
    {"fork;", "\xe2\x8b\x94"},
    {"forkv;", "\xe2\xab\x99"},
    {"fpartint;", "\xe2\xa8\x8d"},
    {"frac12", "\xc2\xbd"},
    {"frac12;", "\xc2\xbd"},
    {"frac13;", "\xe2\x85\x93"},
    {"frac14", "\xc2\xbc"},
    {"frac14;", "\xc2\xbc"},
    {"frac15;", "\xe2\x85\x95"},
    {"frac16;", "\xe2\x85\x99"},
    {"frac18;", "\xe2\x85\x9b"},
    {"frac23;", "\xe2\x85\x94"},
    {"frac25;", "\xe2\x85\x96"},
    {"frac34", "\xc2\xbe"},
    {"frac34;", "\xc2\xbe"},
    {"frac35;", "\xe2\x85\x97"},
    {"frac38;", "\xe2\x85\x9c"},
    {"frac45;", "\xe2\x85\x98"},
    {"frac56;", "\xe2\x85\x9a"},
    {"frac58;", "\xe2\x85\x9d"},
    {"frac78;", "\xe2\x85\x9e"},
    {"frasl;", "\xe2\x81\x84"},
    {"frown;", "\xe2\x8c\xa2"},
    {"fscr;", "\xf0\x9d\x92\xbb"},
    {"gE;", "\xe2\x89\xa7"},
    {"gEl;", "\xe2\xaa\x8c"},
    {"gacute;", "\xc7\xb5"},
    {"gamma;", "\xce\xb3"},
    {"gammad;", "\xcf\x9d"},
    {"gap;", "\xe2\xaa\x86"},
    {"gbreve;", "\xc4\x9f"},
    {"gcirc;", "\xc4\x9d"},
    {"gcy;", "\xd0\xb3"},
    {"gdot;", "\xc4\xa1"},
    {"ge;", "\xe2\x89\xa5"},
    {"gel;", "\xe2\x8b\x9b"},
    {"geq;", "\xe2\x89\xa5"},
    {"geqq;", "\xe2\x89\xa7"},
    {"geqslant;", "\xe2\xa9\xbe"},
    {"ges;", "\xe2\xa9\xbe"},
    {"gescc;", "\xe2\xaa\xa9"},
    {"gesdot;", "\xe2\xaa\x80"},
    {"gesdoto;", "\xe2\xaa\x82"},
    {"gesdotol;", "\xe2\xaa\x84"},
    {"gesl;", "\xe2\x8b\x9b\xef\xb8\x80"},
    {"gesles;", "\xe2\xaa\x94"},
    {"gfr;", "\xf0\x9d\x94\xa4"},
    {"gg;", "\xe2\x89\xab"},
    {"ggg;", "\xe2\x8b\x99"},
    {"gimel;", "\xe2\x84\xb7"},
    {"gjcy;", "\xd1\x93"},
    {"gl;", "\xe2\x89\xb7"},
    {"glE;", "\xe2\xaa\x92"},
    {"gla;", "\xe2\xaa\xa5"},
    {"glj;", "\xe2\xaa\xa4"},
    {"gnE;", "\xe2\x89\xa9"},
    {"gnap;", "\xe2\xaa\x8a"},
    {"gnapprox;", "\xe2\xaa\x8a"},
    {"gne;", "\xe2\xaa\x88"},
    {"gneq;", "\xe2\xaa\x88"},
    {"gneqq;", "\xe2\x89\xa9"},
    {"gnsim;", "\xe2\x8b\xa7"},
    {"gopf;", "\xf0\x9d\x95\x98"},
    {"grave;", "`"},
    {"gscr;", "\xe2\x84\x8a"},
    {"gsim;", "\xe2\x89\xb3"},
    {"gsime;", "\xe2\xaa\x8e"},
    {"gsiml;", "\xe2\xaa\x90"},
    {"gt", ">"},
    {"gt;", ">"},
    {"gtcc;", "\xe2\xaa\xa7"},
    {"gtcir;", "\xe2\xa9\xba"},
    {"gtdot;", "\xe2\x8b\x97"},
    {"gtlPar;", "\xe2\xa6\x95"},
    {"gtquest;", "\xe2\xa9\xbc"},
    {"gtrapprox;", "\xe2\xaa\x86"},
    {"gtrarr;", "\xe2\xa5\xb8"},
    {"gtrdot;", "\xe2\x8b\x97"},
    {"gtreqless;", "\xe2\x8b\x9b"},
    {"gtreqqless;", "\xe2\xaa\x8c"},
    {"gtrless;", "\xe2\x89\xb7"},
    {"gtrsim;", "\xe2\x89\xb3"},
    {"gvertneqq;", "\xe2\x89\xa9\xef\xb8\x80"},
    {"gvnE;", "\xe2\x89\xa9\xef\xb8\x80"},
    {"hArr;", "\xe2\x87\x94"},
    {"hairsp;", "\xe2\x80\x8a"},
    {"half;", "\xc2\xbd"},
    {"hamilt;", "\xe2\x84\x8b"},
    {"hardcy;", "\xd1\x8a"},
    {"harr;", "\xe2\x86\x94"},
    {"harrcir;", "\xe2\xa5\x88"},
    {"harrw;", "\xe2\x86\xad"},
    {"hbar;", "\xe2\x84\x8f"},
    {"hcirc;", "\xc4\xa5"},
    {"hearts;", "\xe2\x99\xa5"},
    {"heartsuit;", "\xe2\x99\xa5"},
    {"hellip;", "\xe2\x80\xa6"},
    {"hercon;", "\xe2\x8a\xb9"},
    {"hfr;", "\xf0\x9d\x94\xa5"},
    {"hksearow;", "\xe2\xa4\xa5"},
    {"hkswarow;", "\xe2\xa4\xa6"},
    {"hoarr;", "\xe2\x87\xbf"},
    {"homtht;", "\xe2\x88\xbb"},
    {"hookleftarrow;", "\xe2\x86\xa9"},
    {"hookrightarrow;", "\xe2\x86\xaa"},
    {"hopf;", "\xf0\x9d\x95\x99"},
    {"horbar;", "\xe2\x80\x95"},
    {"hscr;", "\xf0\x9d\x92\xbd"},
    {"hslash;", "\xe2\x84\x8f"},
    {"hstrok;", "\xc4\xa7"},
    {"hybull;", "\xe2\x81\x83"},
    {"hyphen;", "\xe2\x80\x90"},
    {"iacute", "\xc3\xad"},
    {"iacute;", "\xc3\xad"},
    {"ic;", "\xe2\x81\xa3"},
    {"icirc", "\xc3\xae"},
    {"icirc;", "\xc3\xae"},
    {"icy;", "\xd0\xb8"},
    {"iecy;", "\xd0\xb5"},
    {"iexcl", "\xc2\xa1"},
    {"iexcl;", "\xc2\xa1"},
    {"iff;", "\xe2\x87\x94"},
    {"ifr;", "\xf0\x9d\x94\xa6"},
    {"igrave", "\xc3\xac"},
    {"igrave;", "\xc3\xac"},
    {"ii;", "\xe2\x85\x88"},
    {"iiiint;", "\xe2\xa8\x8c"},
    {"iiint;", "\xe2\x88\xad"},
    {"iinfin;", "\xe2\xa7\x9c"},
    {"iiota;", "\xe2\x84\xa9"},
    {"ijlig;", "\xc4\xb3"},
    {"imacr;", "\xc4\xab"},
    {"image;", "\xe2\x84\x91"},
    {"imagline;", "\xe2\x84\x90"},
    {"imagpart;", "\xe2\x84\x91"},
    {"imath;", "\xc4\xb1"},
    {"imof;", "\xe2\x8a\xb7"},
    {"imped;", "\xc6\xb5"},
    {"in;", "\xe2\x88\x88"},
    {"incare;", "\xe2\x84\x85"},
    {"infin;", "\xe2\x88\x9e"},
    {"infintie;", "\xe2\xa7\x9d"},
    {"inodot;", "\xc4\xb1"},
    {"int;", "\xe2\x88\xab"},
    {"intcal;", "\xe2\x8a\xba"},
    {"integers;", "\xe2\x84\xa4"},
    {"intercal;", "\xe2\x8a\xba"},
    {"intlarhk;", "\xe2\xa8\x97"},
    {"intprod;", "\xe2\xa8\xbc"},
    {"iocy;", "\xd1\x91"},
    {"iogon;", "\xc4\xaf"},
    {"iopf;", "\xf0\x9d\x95\x9a"},
    {"iota;", "\xce\xb9"},
    {"iprod;", "\xe2\xa8\xbc"},
    {"iquest", "\xc2\xbf"},
    {"iquest;", "\xc2\xbf"},
    {"iscr;", "\xf0\x9d\x92\xbe"},
    {"isin;", "\xe2\x88\x88"},
    {"isinE;", "\xe2\x8b\xb9"},
    {"isindot;", "\xe2\x8b\xb5"},
    {"isins;", "\xe2\x8b\xb4"},
    {"isinsv;", "\xe2\x8b\xb3"},
    {"isinv;", "\xe2\x88\x88"},
    {"it;", "\xe2\x81\xa2"},
    {"itilde;", "\xc4\xa9"},
    {"iukcy;", "\xd1\x96"},
    {"iuml", "\xc3\xaf"},
    {"iuml;", "\xc3\xaf"},
    {"jcirc;", "\xc4\xb5"},
    {"jcy;", "\xd0\xb9"},
    {"jfr;", "\xf0\x9d\x94\xa7"},
    {"jmath;", "\xc8\xb7"},
    {"jopf;", "\xf0\x9d\x95\x9b"},
    {"jscr;", "\xf0\x9d\x92\xbf"},
    {"jsercy;", "\xd1\x98"},
    {"jukcy;", "\xd1\x94"},
    {"kappa;", "\xce\xba"},
    {"kappav;", "\xcf\xb0"},
    {"kcedil;", "\xc4\xb7"},
    {"kcy;", "\xd0\xba"},
    {"kfr;", "\xf0\x9d\x94\xa8"},
    {"kgreen;", "\xc4\xb8"},
    {"khcy;", "\xd1\x85"},
    {"kjcy;", "\xd1\x9c"},
    {"kopf;", "\xf0\x9d\x95\x9c"},
    {"kscr;", "\xf0\x9d\x93\x80"},
    {"lAarr;", "\xe2\x87\x9a"},
    {"lArr;", "\xe2\x87\x90"},
    {"lAtail;", "\xe2\xa4\x9b"},
    {"lBarr;", "\xe2\xa4\x8e"},
    {"lE;", "\xe2\x89\xa6"},
    {"lEg;", "\xe2\xaa\x8b"},
    {"lHar;", "\xe2\xa5\xa2"},
    {"lacute;", "\xc4\xba"},
    {"laemptyv;", "\xe2\xa6\xb4"},
    {"lagran;", "\xe2\x84\x92"},
    {"lambda;", "\xce\xbb"},
    {"lang;", "\xe2\x9f\xa8"},
    {"langd;", "\xe2\xa6\x91"},
    {"langle;", "\xe2\x9f\xa8"},
    {"lap;", "\xe2\xaa\x85"},
    {"laquo", "\xc2\xab"},
    {"laquo;", "\xc2\xab"},
    {"larr;", "\xe2\x86\x90"},
    {"larrb;", "\xe2\x87\xa4"},
    {"larrbfs;", "\xe2\xa4\x9f"},
    {"larrfs;", "\xe2\xa4\x9d"},
    {"larrhk;", "\xe2\x86\xa9"},
    {"larrlp;", "\xe2\x86\xab"},
    {"larrpl;", "\xe2\xa4\xb9"},
    {"larrsim;", "\xe2\xa5\xb3"},
    {"larrtl;", "\xe2\x86\xa2"},
    {"lat;", "\xe2\xaa\xab"},
    {"latail;", "\xe2\xa4\x99"},
    {"late;", "\xe2\xaa\xad"},
    {"lates;", "\xe2\xaa\xad\xef\xb8\x80"},
    {"lbarr;", "\xe2\xa4\x8c"},
    {"lbbrk;", "\xe2\x9d\xb2"},
    {"lbrace;", "{"},
    {"lbrack;", "["},
    {"lbrke;", "\xe2\xa6\x8b"},
    {"lbrksld;", "\xe2\xa6\x8f"},
    {"lbrkslu;", "\xe2\xa6\x8d"},
    {"lcaron;", "\xc4\xbe"},
    {"lcedil;", "\xc4\xbc"},
    {"lceil;", "\xe2\x8c\x88"},
    {"lcub;", "{"},
    {"lcy;", "\xd0\xbb"},
    {"ldca;", "\xe2\xa4\xb6"},
    {"ldquo;", "\xe2\x80\x9c"},
    {"ldquor;", "\xe2\x80\x9e"},
    {"ldrdhar;", "\xe2\xa5\xa7"},
    {"ldrushar;", "\xe2\xa5\x8b"},
    {"ldsh;", "\xe2\x86\xb2"},
    {"le;", "\xe2\x89\xa4"},
    {"leftarrow;", "\xe2\x86\x90"},
    {"leftarrowtail;", "\xe2\x86\xa2"},
    {"leftharpoondown;", "\xe2\x86\xbd"},
    {"leftharpoonup;", "\xe2\x86\xbc"},
    {"leftleftarrows;", "\xe2\x87\x87"},
    {"leftrightarrow;", "\xe2\x86\x94"},
    {"leftrightarrows;", "\xe2\x87\x86"},
    {"leftrightharpoons;", "\xe2\x87\x8b"},
    {"leftrightsquigarrow;", "\xe2\x86\xad"},
    {"leftthreetimes;", "\xe2\x8b\x8b"},
    {"leg;", "\xe2\x8b\x9a"},
    {"leq;", "\xe2\x89\xa4"},
    {"leqq;", "\xe2\x89\xa6"},
    {"leqslant;", "\xe2\xa9\xbd"},
    {"les;", "\xe2\xa9\xbd"},
    {"lescc;", "\xe2\xaa\xa8"},
    {"lesdot;", "\xe2\xa9\xbf"},
    {"lesdoto;", "\xe2\xaa\x81"},
    {"lesdotor;", "\xe2\xaa\x83"},
    {"lesg;", "\xe2\x8b\x9a\xef\xb8\x80"},
    {"lesges;", "\xe2\xaa\x93"},
    {"lessapprox;", "\xe2\xaa\x85"},
    {"lessdot;", "\xe2\x8b\x96"},
    {"lesseqgtr;", "\xe2\x8b\x9a"},
    {"lesseqqgtr;", "\xe2\xaa\x8b"},
    {"lessgtr;", "\xe2\x89\xb6"},
    {"lesssim;", "\xe2\x89\xb2"},
    {"lfisht;", "\xe2\xa5\xbc"},
    {"lfloor;", "\xe2\x8c\x8a"},
    {"lfr;", "\xf0\x9d\x94\xa9"},
    {"lg;", "\xe2\x89\xb6"},
    {"lgE;", "\xe2\xaa\x91"},
    {"lhard;", "\xe2\x86\xbd"},
    {"lharu;", "\xe2\x86\xbc"},
    {"lharul;", "\xe2\xa5\xaa"},
    {"lhblk;", "\xe2\x96\x84"},
    {"ljcy;", "\xd1\x99"},
    {"ll;", "\xe2\x89\xaa"},
    {"llarr;", "\xe2\x87\x87"},
    {"llcorner;", "\xe2\x8c\x9e"},
    {"llhard;", "\xe2\xa5\xab"},
    {"lltri;", "\xe2\x97\xba"},
    {"lmidot;", "\xc5\x80"},
    {"lmoust;", "\xe2\x8e\xb0"},
    {"lmoustache;", "\xe2\x8e\xb0"},
    {"lnE;", "\xe2\x89\xa8"},
    {"lnap;", "\xe2\xaa\x89"},
    {"lnapprox;", "\xe2\xaa\x89"},
    {"lne;", "\xe2\xaa\x87"},
    {"lneq;", "\xe2\xaa\x87"},
    {"lneqq;", "\xe2\x89\xa8"},
    {"lnsim;", "\xe2\x8b\xa6"},
    {"loang;", "\xe2\x9f\xac"},
    {"loarr;", "\xe2\x87\xbd"},
    {"lobrk;", "\xe2\x9f\xa6"},
    {"longleftarrow;", "\xe2\x9f\xb5"},
    {"longleftrightarrow;", "\xe2\x9f\xb7"},
    {"longmapsto;", "\xe2\x9f\xbc"},
    {"longrightarrow;", "\xe2\x9f\xb6"},
    {"looparrowleft;", "\xe2\x86\xab"},
    {"looparrowright;", "\xe2\x86\xac"},
    {"lopar;", "\xe2\xa6\x85"},
    {"lopf;", "\xf0\x9d\x95\x9d"},
    {"loplus;", "\xe2\xa8\xad"},
    {"lotimes;", "\xe2\xa8\xb4"},
    {"lowast;", "\xe2\x88\x97"},
    {"lowbar;", "_"},
    {"loz;", "\xe2\x97\x8a"},
    {"lozenge;", "\xe2\x97\x8a"},
    {"lozf;", "\xe2\xa7\xab"},
    {"lpar;", "("},
    {"lparlt;", "\xe2\xa6\x93"},
    {"lrarr;", "\xe2\x87\x86"},
    {"lrcorner;", "\xe2\x8c\x9f"},
    {"lrhar;", "\xe2\x87\x8b"},
    {"lrhard;", "\xe2\xa5\xad"},
    {"lrm;", "\xe2\x80\x8e"},
    {"lrtri;", "\xe2\x8a\xbf"},
    {"lsaquo;", "\xe2\x80\xb9"},
    {"lscr;", "\xf0\x9d\x93\x81"},
    {"lsh;", "\xe2\x86\xb0"},
    {"lsim;", "\xe2\x89\xb2"},
    {"lsime;", "\xe2\xaa\x8d"},
    {"lsimg;", "\xe2\xaa\x8f"},
    {"lsqb;", "["},
    {"lsquo;", "\xe2\x80\x98"},
    {"lsquor;", "\xe2\x80\x9a"},
    {"lstrok;", "\xc5\x82"},
    {"lt", "<"},
    {"lt;", "<"},
    {"ltcc;", "\xe2\xaa\xa6"},
    {"ltcir;", "\xe2\xa9\xb9"},
    {"ltdot;", "\xe2\x8b\x96"},
    {"lthree;", "\xe2\x8b\x8b"},
    {"ltimes;", "\xe2\x8b\x89"},
    {"ltlarr;", "\xe2\xa5\xb6"},
    {"ltquest;", "\xe2\xa9\xbb"},
    {"ltrPar;", "\xe2\xa6\x96"},
    {"ltri;", "\xe2\x97\x83"},
    {"ltrie;", "\xe2\x8a\xb4"},
    {"ltrif;", "\xe2\x97\x82"},
    {"lurdshar;", "\xe2\xa5\x8a"},
    {"luruhar;", "\xe2\xa5\xa6"},
    {"lvertneqq;", "\xe2\x89\xa8\xef\xb8\x80"},
    {"lvnE;", "\xe2\x89\xa8\xef\xb8\x80"},
    {"mDDot;", "\xe2\x88\xba"},
    {"macr", "\xc2\xaf"},
    {"macr;", "\xc2\xaf"},
    {"male;", "\xe2\x99\x82"},
    {"malt;", "\xe2\x9c\xa0"},
    {"maltese;", "\xe2\x9c\xa0"},
    {"map;", "\xe2\x86\xa6"},
    {"mapsto;", "\xe2\x86\xa6"},
    {"mapstodown;", "\xe2\x86\xa7"},
    {"mapstoleft;", "\xe2\x86\xa4"},
    {"mapstoup;", "\xe2\x86\xa5"},
    {"marker;", "\xe2\x96\xae"},
    {"mcomma;", "\xe2\xa8\xa9"},
    {"mcy;", "\xd0\xbc"},
    {"mdash;", "\xe2\x80\x94"},
    {"measuredangle;", "\xe2\x88\xa1"},
    {"mfr;", "\xf0\x9d\x94\xaa"},
    {"mho;", "\xe2\x84\xa7"},
    {"micro", "\xc2\xb5"},
    {"micro;", "\xc2\xb5"},
    {"mid;", "\xe2\x88\xa3"},
    {"midast;", "*"},
    {"midcir;", "\xe2\xab\xb0"},
    {"middot", "\xc2\xb7"},
    {"middot;", "\xc2\xb7"},
    {"minus;", "\xe2\x88\x92"},
    {"minusb;", "\xe2\x8a\x9f"},
    {"minusd;", "\xe2\x88\xb8"},
    {"minusdu;", "\xe2\xa8\xaa"},
    {"mlcp;", "\xe2\xab\x9b"},
    {"mldr;", "\xe2\x80\xa6"},
    {"mnplus;", "\xe2\x88\x93"},
    {"models;", "\xe2\x8a\xa7"},
    {"mopf;", "\xf0\x9d\x95\x9e"},
    {"mp;", "\xe2\x88\x93"},
    {"mscr;", "\xf0\x9d\x93\x82"},
    {"mstpos;", "\xe2\x88\xbe"},
    {"mu;", "\xce\xbc"},
    {"multimap;", "\xe2\x8a\xb8"},
    {"mumap;", "\xe2\x8a\xb8"},
    {"nGg;", "\xe2\x8b\x99\xcc\xb8"},
    {"nGt;", "\xe2\x89\xab\xe2\x83\x92"},
    {"nGtv;", "\xe2\x89\xab\xcc\xb8"},
    {"nLeftarrow;", "\xe2\x87\x8d"},
    {"nLeftrightarrow;", "\xe2\x87\x8e"},
    {"nLl;", "\xe2\x8b\x98\xcc\xb8"},
    {"nLt;", "\xe2\x89\xaa\xe2\x83\x92"},
    {"nLtv;", "\xe2\x89\xaa\xcc\xb8"},
    {"nRightarrow;", "\xe2\x87\x8f"},
    {"nVDash;", "\xe2\x8a\xaf"},
    {"nVdash;", "\xe2\x8a\xae"},
    {"nabla;", "\xe2\x88\x87"},
    {"nacute;", "\xc5\x84"},
    {"nang;", "\xe2\x88\xa0\xe2\x83\x92"},
    {"nap;", "\xe2\x89\x89"},
    {"napE;", "\xe2\xa9\xb0\xcc\xb8"},
    {"napid;", "\xe2\x89\x8b\xcc\xb8"},
    {"napos;", "\xc5\x89"},
    {"napprox;", "\xe2\x89\x89"},
    {"natur;", "\xe2\x99\xae"},
    {"natural;", "\xe2\x99\xae"},
    {"naturals;", "\xe2\x84\x95"},
    {"nbsp", "\xc2\xa0"},
    {"nbsp;", "\xc2\xa0"},
    {"nbump;", "\xe2\x89\x8e\xcc\xb8"},
    {"nbumpe;", "\xe2\x89\x8f\xcc\xb8"},
    {"ncap;", "\xe2\xa9\x83"},
    {"ncaron;", "\xc5\x88"},
    {"ncedil;", "\xc5\x86"},
    {"ncong;", "\xe2\x89\x87"},
    {"ncongdot;", "\xe2\xa9\xad\xcc\xb8"},
    {"ncup;", "\xe2\xa9\x82"},
    {"ncy;", "\xd0\xbd"},
    {"ndash;", "\xe2\x80\x93"},
    {"ne;", "\xe2\x89\xa0"},
    {"neArr;", "\xe2\x87\x97"},
    {"nearhk;", "\xe2\xa4\xa4"},
    {"nearr;", "\xe2\x86\x97"},
    {"nearrow;", "\xe2\x86\x97"},
    {"nedot;", "\xe2\x89\x90\xcc\xb8"},
    {"nequiv;", "\xe2\x89\xa2"},
    {"nesear;", "\xe2\xa4\xa8"},
    {"nesim;", "\xe2\x89\x82\xcc\xb8"},
    {"nexist;", "\xe2\x88\x84"},
    {"nexists;", "\xe2\x88\x84"},
    {"nfr;", "\xf0\x9d\x94\xab"},
    {"ngE;", "\xe2\x89\xa7\xcc\xb8"},
    {"nge;", "\xe2\x89\xb1"},
    {"ngeq;", "\xe2\x89\xb1"},
    {"ngeqq;", "\xe2\x89\xa7\xcc\xb8"},
    {"ngeqslant;", "\xe2\xa9\xbe\xcc\xb8"},
    {"nges;", "\xe2\xa9\xbe\xcc\xb8"},
    {"ngsim;", "\xe2\x89\xb5"},
    {"ngt;", "\xe2\x89\xaf"},
    {"ngtr;", "\xe2\x89\xaf"},
    {"nhArr;", "\xe2\x87\x8e"},
    {"nharr;", "\xe2\x86\xae"},
    {"nhpar;", "\xe2\xab\xb2"},
    {"ni;", "\xe2\x88\x8b"},
    {"nis;", "\xe2\x8b\xbc"},
    {"nisd;", "\xe2\x8b\xba"},
    {"niv;", "\xe2\x88\x8b"},
    {"njcy;", "\xd1\x9a"},
    {"nlArr;", "\xe2\x87\x8d"},
    {"nlE;", "\xe2\x89\xa6\xcc\xb8"},
    {"nlarr;", "\xe2\x86\x9a"},
    {"nldr;", "\xe2\x80\xa5"},
    {"nle;", "\xe2\x89\xb0"},
    {"nleftarrow;", "\xe2\x86\x9a"},
    {"nleftrightarrow;", "\xe2\x86\xae"},
    {"nleq;", "\xe2\x89\xb0"},
    {"nleqq;", "\xe2\x89\xa6\xcc\xb8"},
    {"nleqslant;", "\xe2\xa9\xbd\xcc\xb8"},
    {"nles;", "\xe2\xa9\xbd\xcc\xb8"},
    {"nless;", "\xe2\x89\xae"},
    {"nlsim;", "\xe2\x89\xb4"},
    {"nlt;", "\xe2\x89\xae"},
    {"nltri;", "\xe2\x8b\xaa"},
    {"nltrie;", "\xe2\x8b\xac"},
    {"nmid;", "\xe2\x88\xa4"},
    {"nopf;", "\xf0\x9d\x95\x9f"},
    {"not", "\xc2\xac"},
    {"not;", "\xc2\xac"},
    {"notin;", "\xe2\x88\x89"},
    {"notinE;", "\xe2\x8b\xb9\xcc\xb8"},
    {"notindot;", "\xe2\x8b\xb5\xcc\xb8"},
    {"notinva;", "\xe2\x88\x89"},
    {"notinvb;", "\xe2\x8b\xb7"},
    {"notinvc;", "\xe2\x8b\xb6"},
    {"notni;", "\xe2\x88\x8c"},
    {"notniva;", "\xe2\x88\x8c"},
    {"notnivb;", "\xe2\x8b\xbe"},
    {"notnivc;", "\xe2\x8b\xbd"},
    {"npar;", "\xe2\x88\xa6"},
    {"nparallel;", "\xe2\x88\xa6"},
    {"nparsl;", "\xe2\xab\xbd\xe2\x83\xa5"},
    {"npart;", "\xe2\x88\x82\xcc\xb8"},
    {"npolint;", "\xe2\xa8\x94"},
    {"npr;", "\xe2\x8a\x80"},
    {"nprcue;", "\xe2\x8b\xa0"},
    {"npre;", "\xe2\xaa\xaf\xcc\xb8"},
    {"nprec;", "\xe2\x8a\x80"},
    {"npreceq;", "\xe2\xaa\xaf\xcc\xb8"},
    {"nrArr;", "\xe2\x87\x8f"},
    {"nrarr;", "\xe2\x86\x9b"},
    {"nrarrc;", "\xe2\xa4\xb3\xcc\xb8"},
    {"nrarrw;", "\xe2\x86\x9d\xcc\xb8"},
    {"nrightarrow;", "\xe2\x86\x9b"},
    {"nrtri;", "\xe2\x8b\xab"},
    {"nrtrie;", "\xe2\x8b\xad"},
    {"nsc;", "\xe2\x8a\x81"},
    {"nsccue;", "\xe2\x8b\xa1"},
    {"nsce;", "\xe2\xaa\xb0\xcc\xb8"},
    {"nscr;", "\xf0\x9d\x93\x83"},
    {"nshortmid;", "\xe2\x88\xa4"},
    {"nshortparallel;", "\xe2\x88\xa6"},
    {"nsim;", "\xe2\x89\x81"},
    {"nsime;", "\xe2\x89\x84"},
    {"nsimeq;", "\xe2\x89\x84"},
    {"nsmid;", "\xe2\x88\xa4"},
    {"nspar;", "\xe2\x88\xa6"},
    {"nsqsube;", "\xe2\x8b\xa2"},
    {"nsqsupe;", "\xe2\x8b\xa3"},
    {"nsub;", "\xe2\x8a\x84"},
    {"nsubE;", "\xe2\xab\x85\xcc\xb8"},
    {"nsube;", "\xe2\x8a\x88"},
    {"nsubset;", "\xe2\x8a\x82\xe2\x83\x92"},
    {"nsubseteq;", "\xe2\x8a\x88"},
    {"nsubseteqq;", "\xe2\xab\x85\xcc\xb8"},
    {"nsucc;", "\xe2\x8a\x81"},
    {"nsucceq;", "\xe2\xaa\xb0\xcc\xb8"},
    {"nsup;", "\xe2\x8a\x85"},
    {"nsupE;", "\xe2\xab\x86\xcc\xb8"},
    {"nsupe;", "\xe2\x8a\x89"},
    {"nsupset;", "\xe2\x8a\x83\xe2\x83\x92"},
    {"nsupseteq;", "\xe2\x8a\x89"},
    {"nsupseteqq;", "\xe2\xab\x86\xcc\xb8"},
    {"ntgl;", "\xe2\x89\xb9"},
    {"ntilde", "\xc3\xb1"},
    {"ntilde;", "\xc3\xb1"},
    {"ntlg;", "\xe2\x89\xb8"},
    {"ntriangleleft;", "\xe2\x8b\xaa"},
    {"ntrianglelefteq;", "\xe2\x8b\xac"},
    {"ntriangleright;", "\xe2\x8b\xab"},
    {"ntrianglerighteq;", "\xe2\x8b\xad"},
    {"nu;", "\xce\xbd"},
    {"num;", "#"},
    {"numero;", "\xe2\x84\x96"},
    {"numsp;", "\xe2\x80\x87"},
    {"nvDash;", "\xe2\x8a\xad"},
    {"nvHarr;", "\xe2\xa4\x84"},
    {"nvap;", "\xe2\x89\x8d\xe2\x83\x92"},
    {"nvdash;", "\xe2\x8a\xac"},
    {"nvge;", "\xe2\x89\xa5\xe2\x83\x92"},
    {"nvgt;", ">\xe2\x83\x92"},
    {"nvinfin;", "\xe2\xa7\x9e"},
    {"nvlArr;", "\xe2\xa4\x82"},
    {"nvle;", "\xe2\x89\xa4\xe2\x83\x92"},
    {"nvlt;", "<\xe2\x83\x92"},
    {"nvltrie;", "\xe2\x8a\xb4\xe2\x83\x92"},
    {"nvrArr;", "\xe2\xa4\x83"},
    {"nvrtrie;", "\xe2\x8a\xb5\xe2\x83\x92"},
    {"nvsim;", "\xe2\x88\xbc\xe2\x83\x92"},
    {"nwArr;", "\xe2\x87\x96"},
    {"nwarhk;", "\xe2\xa4\xa3"},
    {"nwarr;", "\xe2\x86\x96"},
    {"nwarrow;", "\xe2\x86\x96"},
    {"nwnear;", "\xe2\xa4\xa7"},
    {"oS;", "\xe2\x93\x88"},
    {"oacute", "\xc3\xb3"},
    {"oacute;", "\xc3\xb3"},
    {"oast;", "\xe2\x8a\x9b"},
    {"ocir;", "\xe2\x8a\x9a"},
    {"ocirc", "\xc3\xb4"},
    {"ocirc;", "\xc3\xb4"},
    {"ocy;", "\xd0\xbe"},
    {"odash;", "\xe2\x8a\x9d"},
    {"odblac;", "\xc5\x91"},
    {"odiv;", "\xe2\xa8\xb8"},
    {"odot;", "\xe2\x8a\x99"},
    {"odsold;", "\xe2\xa6\xbc"},
    {"oelig;", "\xc5\x93"},
    {"ofcir;", "\xe2\xa6\xbf"},
    {"ofr;", "\xf0\x9d\x94\xac"},
    {"ogon;", "\xcb\x9b"},
    {"ograve", "\xc3\xb2"},
    {"ograve;", "\xc3\xb2"},
    {"ogt;", "\xe2\xa7\x81"},
    {"ohbar;", "\xe2\xa6\xb5"},
    {"ohm;", "\xce\xa9"},
    {"oint;", "\xe2\x88\xae"},
    {"olarr;", "\xe2\x86\xba"},
    {"olcir;", "\xe2\xa6\xbe"},
    {"olcross;", "\xe2\xa6\xbb"},
    {"oline;", "\xe2\x80\xbe"},
    {"olt;", "\xe2\xa7\x80"},
    {"omacr;", "\xc5\x8d"},
    {"omega;", "\xcf\x89"},
    {"omicron;", "\xce\xbf"},
    {"omid;", "\xe2\xa6\xb6"},
    {"ominus;", "\xe2\x8a\x96"},
    {"oopf;", "\xf0\x9d\x95\xa0"},
    {"opar;", "\xe2\xa6\xb7"},
    {"operp;", "\xe2\xa6\xb9"},
    {"oplus;", "\xe2\x8a\x95"},
    {"or;", "\xe2\x88\xa8"},
    {"orarr;", "\xe2\x86\xbb"},
    {"ord;", "\xe2\xa9\x9d"},
    {"order;", "\xe2\x84\xb4"},
    {"orderof;", "\xe2\x84\xb4"},
    {"ordf", "\xc2\xaa"},
    {"ordf;", "\xc2\xaa"},
    {"ordm", "\xc2\xba"},
    {"ordm;", "\xc2\xba"},
    {"origof;", "\xe2\x8a\xb6"},
    {"oror;", "\xe2\xa9\x96"},
    {"orslope;", "\xe2\xa9\x97"},
    {"orv;", "\xe2\xa9\x9b"},
    {"oscr;", "\xe2\x84\xb4"},
    {"oslash", "\xc3\xb8"},
    {"oslash;", "\xc3\xb8"},
    {"osol;", "\xe2\x8a\x98"},
    {"otilde", "\xc3\xb5"},
    {"otilde;", "\xc3\xb5"},
    {"otimes;", "\xe2\x8a\x97"},
    {"otimesas;", "\xe2\xa8\xb6"},
    {"ouml", "\xc3\xb6"},
    {"ouml;", "\xc3\xb6"},
    {"ovbar;", "\xe2\x8c\xbd"},
    {"par;", "\xe2\x88\xa5"},
    {"para", "\xc2\xb6"},
    {"para;", "\xc2\xb6"},
    {"parallel;", "\xe2\x88\xa5"},
    {"parsim;", "\xe2\xab\xb3"},
    {"parsl;", "\xe2\xab\xbd"},
    {"part;", "\xe2\x88\x82"},
    {"pcy;", "\xd0\xbf"},
    {"percnt;", "%"},
    {"period;", "."},
    {"permil;", "\xe2\x80\xb0"},
    {"perp;", "\xe2\x8a\xa5"},
    {"pertenk;", "\xe2\x80\xb1"},
    {"pfr;", "\xf0\x9d\x94\xad"},
    {"phi;", "\xcf\x86"},
    {"phiv;", "\xcf\x95"},
    {"phmmat;", "\xe2\x84\xb3"},
    {"phone;", "\xe2\x98\x8e"},
    {"pi;", "\xcf\x80"},
    {"pitchfork;", "\xe2\x8b\x94"},
    {"piv;", "\xcf\x96"},
    {"planck;", "\xe2\x84\x8f"},
    {"planckh;", "\xe2\x84\x8e"},
    {"plankv;", "\xe2\x84\x8f"},
    {"plus;", "+"},
    {"plusacir;", "\xe2\xa8\xa3"},
    {"plusb;", "\xe2\x8a\x9e"},
    {"pluscir;", "\xe2\xa8\xa2"},
    {"plusdo;", "\xe2\x88\x94"},
    {"plusdu;", "\xe2\xa8\xa5"},
    {"pluse;", "\xe2\xa9\xb2"},
    {"plusmn", "\xc2\xb1"},
    {"plusmn;", "\xc2\xb1"},
    {"plussim;", "\xe2\xa8\xa6"},
    {"plustwo;", "\xe2\xa8\xa7"},
    {"pm;", "\xc2\xb1"},
    {"pointint;", "\xe2\xa8\x95"},
    {"popf;", "\xf0\x9d\x95\xa1"},
    {"pound", "\xc2\xa3"},
    {"pound;", "\xc2\xa3"},
    {"pr;", "\xe2\x89\xba"},
    {"prE;", "\xe2\xaa\xb3"},
    {"prap;", "\xe2\xaa\xb7"},
    {"prcue;", "\xe2\x89\xbc"},
    {"pre;", "\xe2\xaa\xaf"},
    {"prec;", "\xe2\x89\xba"},
    {"precapprox;", "\xe2\xaa\xb7"},
    {"preccurlyeq;", "\xe2\x89\xbc"},
    {"preceq;", "\xe2\xaa\xaf"},
    {"precnapprox;", "\xe2\xaa\xb9"},
    {"precneqq;", "\xe2\xaa\xb5"},
    {"precnsim;", "\xe2\x8b\xa8"},
    {"precsim;", "\xe2\x89\xbe"},
    {"prime;", "\xe2\x80\xb2"},
    {"primes;", "\xe2\x84\x99"},
    {"prnE;", "\xe2\xaa\xb5"},
    {"prnap;", "\xe2\xaa\xb9"},
    {"prnsim;", "\xe2\x8b\xa8"},
    {"prod;", "\xe2\x88\x8f"},
    {"profalar;", "\xe2\x8c\xae"},
    {"profline;", "\xe2\x8c\x92"},
    {"profsurf;", "\xe2\x8c\x93"},
    {"prop;", "\xe2\x88\x9d"},
    {"propto;", "\xe2\x88\x9d"},
    {"prsim;", "\xe2\x89\xbe"},
    {"prurel;", "\xe2\x8a\xb0"},
    {"pscr;", "\xf0\x9d\x93\x85"},
    {"psi;", "\xcf\x88"},
    {"puncsp;", "\xe2\x80\x88"},
    {"qfr;", "\xf0\x9d\x94\xae"},
    {"qint;", "\xe2\xa8\x8c"},
    {"qopf;", "\xf0\x9d\x95\xa2"},
    {"qprime;", "\xe2\x81\x97"},
    {"qscr;", "\xf0\x9d\x93\x86"},
    {"quaternions;", "\xe2\x84\x8d"},
    {"quatint;", "\xe2\xa8\x96"},
    {"quest;", "\x3f"},
    {"questeq;", "\xe2\x89\x9f"},
    {"quot", "\x22"},
    {"quot;", "\x22"},
    {"rAarr;", "\xe2\x87\x9b"},
    {"rArr;", "\xe2\x87\x92"},
    {"rAtail;", "\xe2\xa4\x9c"},
    {"rBarr;", "\xe2\xa4\x8f"},
    {"rHar;", "\xe2\xa5\xa4"},
    {"race;", "\xe2\x88\xbd\xcc\xb1"},
    {"racute;", "\xc5\x95"},
    {"radic;", "\xe2\x88\x9a"},
    {"raemptyv;", "\xe2\xa6\xb3"},
    {"rang;", "\xe2\x9f\xa9"},
    {"rangd;", "\xe2\xa6\x92"},
    {"range;", "\xe2\xa6\xa5"},
    {"rangle;", "\xe2\x9f\xa9"},
    {"raquo", "\xc2\xbb"},
    {"raquo;", "\xc2\xbb"},
    {"rarr;", "\xe2\x86\x92"},
    {"rarrap;", "\xe2\xa5\xb5"},
    {"rarrb;", "\xe2\x87\xa5"},
    {"rarrbfs;", "\xe2\xa4\xa0"},
    {"rarrc;", "\xe2\xa4\xb3"},
    {"rarrfs;", "\xe2\xa4\x9e"},
    {"rarrhk;", "\xe2\x86\xaa"},
    {"rarrlp;", "\xe2\x86\xac"},
    {"rarrpl;", "\xe2\xa5\x85"},
    {"rarrsim;", "\xe2\xa5\xb4"},
    {"rarrtl;", "\xe2\x86\xa3"},
    {"rarrw;", "\xe2\x86\x9d"},
    {"ratail;", "\xe2\xa4\x9a"},
    {"ratio;", "\xe2\x88\xb6"},
    {"rationals;", "\xe2\x84\x9a"},
    {"rbarr;", "\xe2\xa4\x8d"},
    {"rbbrk;", "\xe2\x9d\xb3"},
    {"rbrace;", "}"},
    {"rbrack;", "]"},
    {"rbrke;", "\xe2\xa6\x8c"},
    {"rbrksld;", "\xe2\xa6\x8e"},
    {"rbrkslu;", "\xe2\xa6\x90"},
    {"rcaron;", "\xc5\x99"},
    {"rcedil;", "\xc5\x97"},
    {"rceil;", "\xe2\x8c\x89"},
    {"rcub;", "}"},
    {"rcy;", "\xd1\x80"},
    {"rdca;", "\xe2\xa4\xb7"},
    {"rdldhar;", "\xe2\xa5\xa9"},
    {"rdquo;", "\xe2\x80\x9d"},
    {"rdquor;", "\xe2\x80\x9d"},
    {"rdsh;", "\xe2\x86\xb3"},
    {"real;", "\xe2\x84\x9c"},
    {"realine;", "\xe2\x84\x9b"},
    {"realpart;", "\xe2\x84\x9c"},
    {"reals;", "\xe2\x84\x9d"},
    {"rect;", "\xe2\x96\xad"},
    {"reg", "\xc2\xae"},
    {"reg;", "\xc2\xae"},
    {"rfisht;", "\xe2\xa5\xbd"},
    {"rfloor;", "\xe2\x8c\x8b"},
    {"rfr;", "\xf0\x9d\x94\xaf"},
    {"rhard;", "\xe2\x87\x81"},
    {"rharu;", "\xe2\x87\x80"},
    {"rharul;", "\xe2\xa5\xac"},
    {"rho;", "\xcf\x81"},
    {"rhov;", "\xcf\xb1"},
    {"rightarrow;", "\xe2\x86\x92"},
    {"rightarrowtail;", "\xe2\x86\xa3"},
    {"rightharpoondown;", "\xe2\x87\x81"},
    {"rightharpoonup;", "\xe2\x87\x80"},
    {"rightleftarrows;", "\xe2\x87\x84"},
    {"rightleftharpoons;", "\xe2\x87\x8c"},
    {"rightrightarrows;", "\xe2\x87\x89"},
    {"rightsquigarrow;", "\xe2\x86\x9d"},
    {"rightthreetimes;", "\xe2\x8b\x8c"},
    {"ring;", "\xcb\x9a"},
    {"risingdotseq;", "\xe2\x89\x93"},
    {"rlarr;", "\xe2\x87\x84"},
    {"rlhar;", "\xe2\x87\x8c"},
    {"rlm;", "\xe2\x80\x8f"},
    {"rmoust;", "\xe2\x8e\xb1"},
    {"rmoustache;", "\xe2\x8e\xb1"},
    {"rnmid;", "\xe2\xab\xae"},
    {"roang;", "\xe2\x9f\xad"},
    {"roarr;", "\xe2\x87\xbe"},
    {"robrk;", "\xe2\x9f\xa7"},
    {"ropar;", "\xe2\xa6\x86"},
    {"ropf;", "\xf0\x9d\x95\xa3"},
    {"roplus;", "\xe2\xa8\xae"},
    {"rotimes;", "\xe2\xa8\xb5"},
    {"rpar;", ")"},
    {"rpargt;", "\xe2\xa6\x94"},
    {"rppolint;", "\xe2\xa8\x92"},
    {"rrarr;", "\xe2\x87\x89"},
    {"rsaquo;", "\xe2\x80\xba"},
    {"rscr;", "\xf0\x9d\x93\x87"},
    {"rsh;", "\xe2\x86\xb1"},
    {"rsqb;", "]"},
    {"rsquo;", "\xe2\x80\x99"},
    {"rsquor;", "\xe2\x80\x99"},
    {"rthree;", "\xe2\x8b\x8c"},
    {"rtimes;", "\xe2\x8b\x8a"},
    {"rtri;", "\xe2\x96\xb9"},
    {"rtrie;", "\xe2\x8a\xb5"},
    {"rtrif;", "\xe2\x96\xb8"},
    {"rtriltri;", "\xe2\xa7\x8e"},
    {"ruluhar;", "\xe2\xa5\xa8"},
    {"rx;", "\xe2\x84\x9e"},
    {"sacute;", "\xc5\x9b"},
    {"sbquo;", "\xe2\x80\x9a"},
    {"sc;", "\xe2\x89\xbb"},
    {"scE;", "\xe2\xaa\xb4"},
    {"scap;", "\xe2\xaa\xb8"},
    {"scaron;", "\xc5\xa1"},
    {"sccue;", "\xe2\x89\xbd"},
    {"sce;", "\xe2\xaa\xb0"},
    {"scedil;", "\xc5\x9f"},
    {"scirc;", "\xc5\x9d"},
    {"scnE;", "\xe2\xaa\xb6"},
    {"scnap;", "\xe2\xaa\xba"},
    {"scnsim;", "\xe2\x8b\xa9"},
    {"scpolint;", "\xe2\xa8\x93"},
    {"scsim;", "\xe2\x89\xbf"},
    {"scy;", "\xd1\x81"},
    {"sdot;", "\xe2\x8b\x85"},
    {"sdotb;", "\xe2\x8a\xa1"},
    {"sdote;", "\xe2\xa9\xa6"},
    {"seArr;", "\xe2\x87\x98"},
    {"searhk;", "\xe2\xa4\xa5"},
    {"searr;", "\xe2\x86\x98"},
    {"searrow;", "\xe2\x86\x98"},
    {"sect", "\xc2\xa7"},
    {"sect;", "\xc2\xa7"},
    {"semi;", ";"},
    {"seswar;", "\xe2\xa4\xa9"},
    {"setminus;", "\xe2\x88\x96"},
    {"setmn;", "\xe2\x88\x96"},
    {"sext;", "\xe2\x9c\xb6"},
    {"sfr;", "\xf0\x9d\x94\xb0"},
    {"sfrown;", "\xe2\x8c\xa2"},
    {"sharp;", "\xe2\x99\xaf"},
    {"shchcy;", "\xd1\x89"},
    {"shcy;", "\xd1\x88"},
    {"shortmid;", "\xe2\x88\xa3"},
    {"shortparallel;", "\xe2\x88\xa5"},
    {"shy", "\xc2\xad"},
    {"shy;", "\xc2\xad"},
    {"sigma;", "\xcf\x83"},
    {"sigmaf;", "\xcf\x82"},
    {"sigmav;", "\xcf\x82"},
    {"sim;", "\xe2\x88\xbc"},
    {"simdot;", "\xe2\xa9\xaa"},
    {"sime;", "\xe2\x89\x83"},
    {"simeq;", "\xe2\x89\x83"},
    {"simg;", "\xe2\xaa\x9e"},
    {"simgE;", "\xe2\xaa\xa0"},
    {"siml;", "\xe2\xaa\x9d"},
    {"simlE;", "\xe2\xaa\x9f"},
    {"simne;", "\xe2\x89\x86"},
    {"simplus;", "\xe2\xa8\xa4"},
    {"simrarr;", "\xe2\xa5\xb2"},
    {"slarr;", "\xe2\x86\x90"},
    {"smallsetminus;", "\xe2\x88\x96"},
    {"smashp;", "\xe2\xa8\xb3"},
    {"smeparsl;", "\xe2\xa7\xa4"},
    {"smid;", "\xe2\x88\xa3"},
    {"smile;", "\xe2\x8c\xa3"},
    {"smt;", "\xe2\xaa\xaa"},
    {"smte;", "\xe2\xaa\xac"},
    {"smtes;", "\xe2\xaa\xac\xef\xb8\x80"},
    {"softcy;", "\xd1\x8c"},
    {"sol;", "/"},
    {"solb;", "\xe2\xa7\x84"},
    {"solbar;", "\xe2\x8c\xbf"},
    {"sopf;", "\xf0\x9d\x95\xa4"},
    {"spades;", "\xe2\x99\xa0"},
    {"spadesuit;", "\xe2\x99\xa0"},
    {"spar;", "\xe2\x88\xa5"},
    {"sqcap;", "\xe2\x8a\x93"},
    {"sqcaps;", "\xe2\x8a\x93\xef\xb8\x80"},
    {"sqcup;", "\xe2\x8a\x94"},
    {"sqcups;", "\xe2\x8a\x94\xef\xb8\x80"},
    {"sqsub;", "\xe2\x8a\x8f"},
    {"sqsube;", "\xe2\x8a\x91"},
    {"sqsubset;", "\xe2\x8a\x8f"},
    {"sqsubseteq;", "\xe2\x8a\x91"},
    {"sqsup;", "\xe2\x8a\x90"},
    {"sqsupe;", "\xe2\x8a\x92"},
    {"sqsupset;", "\xe2\x8a\x90"},
    {"sqsupseteq;", "\xe2\x8a\x92"},
    {"squ;", "\xe2\x96\xa1"},
    {"square;", "\xe2\x96\xa1"},
    {"squarf;", "\xe2\x96\xaa"},
    {"squf;", "\xe2\x96\xaa"},
    {"srarr;", "\xe2\x86\x92"},
    {"sscr;", "\xf0\x9d\x93\x88"},
    {"ssetmn;", "\xe2\x88\x96"},
    {"ssmile;", "\xe2\x8c\xa3"},
    {"sstarf;", "\xe2\x8b\x86"},
    {"star;", "\xe2\x98\x86"},
    {"starf;", "\xe2\x98\x85"},
    {"straightepsilon;", "\xcf\xb5"},
    {"straightphi;", "\xcf\x95"},
    {"strns;", "\xc2\xaf"},
    {"sub;", "\xe2\x8a\x82"},
    {"subE;", "\xe2\xab\x85"},
    {"subdot;", "\xe2\xaa\xbd"},
    {"sube;", "\xe2\x8a\x86"},
    {"subedot;", "\xe2\xab\x83"},
    {"submult;", "\xe2\xab\x81"},
    {"subnE;", "\xe2\xab\x8b"},
    {"subne;", "\xe2\x8a\x8a"},
    {"subplus;", "\xe2\xaa\xbf"},
    {"subrarr;", "\xe2\xa5\xb9"},
    {"subset;", "\xe2\x8a\x82"},
    {"subseteq;", "\xe2\x8a\x86"},
    {"subseteqq;", "\xe2\xab\x85"},
    {"subsetneq;", "\xe2\x8a\x8a"},
    {"subsetneqq;", "\xe2\xab\x8b"},
    {"subsim;", "\xe2\xab\x87"},
    {"subsub;", "\xe2\xab\x95"},
    {"subsup;", "\xe2\xab\x93"},
    {"succ;", "\xe2\x89\xbb"},
    {"succapprox;", "\xe2\xaa\xb8"},
    {"succcurlyeq;", "\xe2\x89\xbd"},
    {"succeq;", "\xe2\xaa\xb0"},
    {"succnapprox;", "\xe2\xaa\xba"},
    {"succneqq;", "\xe2\xaa\xb6"},
    {"succnsim;", "\xe2\x8b\xa9"},
    {"succsim;", "\xe2\x89\xbf"},
    {"sum;", "\xe2\x88\x91"},
    {"sung;", "\xe2\x99\xaa"},
    {"sup1", "\xc2\xb9"},
    {"sup1;", "\xc2\xb9"},
    {"sup2", "\xc2\xb2"},
    {"sup2;", "\xc2\xb2"},
    {"sup3", "\xc2\xb3"},
    {"sup3;", "\xc2\xb3"},
    {"sup;", "\xe2\x8a\x83"},
    {"supE;", "\xe2\xab\x86"},
    {"supdot;", "\xe2\xaa\xbe"},
    {"supdsub;", "\xe2\xab\x98"},
    {"supe;", "\xe2\x8a\x87"},
    {"supedot;", "\xe2\xab\x84"},
    {"suphsol;", "\xe2\x9f\x89"},
    {"suphsub;", "\xe2\xab\x97"},
    {"suplarr;", "\xe2\xa5\xbb"},
    {"supmult;", "\xe2\xab\x82"},
    {"supnE;", "\xe2\xab\x8c"},
    {"supne;", "\xe2\x8a\x8b"},
    {"supplus;", "\xe2\xab\x80"},
    {"supset;", "\xe2\x8a\x83"},
    {"supseteq;", "\xe2\x8a\x87"},
    {"supseteqq;", "\xe2\xab\x86"},
    {"supsetneq;", "\xe2\x8a\x8b"},
    {"supsetneqq;", "\xe2\xab\x8c"},
    {"supsim;", "\xe2\xab\x88"},
    {"supsub;", "\xe2\xab\x94"},
    {"supsup;", "\xe2\xab\x96"},
    {"swArr;", "\xe2\x87\x99"},
    {"swarhk;", "\xe2\xa4\xa6"},
    {"swarr;", "\xe2\x86\x99"},
    {"swarrow;", "\xe2\x86\x99"},
    {"swnwar;", "\xe2\xa4\xaa"},
    {"szlig", "\xc3\x9f"},
    {"szlig;", "\xc3\x9f"},
    {"target;", "\xe2\x8c\x96"},
    {"tau;", "\xcf\x84"},
    {"tbrk;", "\xe2\x8e\xb4"},
    {"tcaron;", "\xc5\xa5"},
    {"tcedil;", "\xc5\xa3"},
    {"tcy;", "\xd1\x82"},
    {"tdot;", "\xe2\x83\x9b"},
    {"telrec;", "\xe2\x8c\x95"},
    {"tfr;", "\xf0\x9d\x94\xb1"},
    {"there4;", "\xe2\x88\xb4"},
    {"therefore;", "\xe2\x88\xb4"},
    {"theta;", "\xce\xb8"},
    {"thetasym;", "\xcf\x91"},
    {"thetav;", "\xcf\x91"},
    {"thickapprox;", "\xe2\x89\x88"},
    {"thicksim;", "\xe2\x88\xbc"},
    {"thinsp;", "\xe2\x80\x89"},
    {"thkap;", "\xe2\x89\x88"},
    {"thksim;", "\xe2\x88\xbc"},
    {"thorn", "\xc3\xbe"},
    {"thorn;", "\xc3\xbe"},
    {"tilde;", "\xcb\x9c"},
    {"times", "\xc3\x97"},
    {"times;", "\xc3\x97"},
    {"timesb;", "\xe2\x8a\xa0"},
    {"timesbar;", "\xe2\xa8\xb1"},
    {"timesd;", "\xe2\xa8\xb0"},
    {"tint;", "\xe2\x88\xad"},
    {"toea;", "\xe2\xa4\xa8"},
    {"top;", "\xe2\x8a\xa4"},
    {"topbot;", "\xe2\x8c\xb6"},
    {"topcir;", "\xe2\xab\xb1"},
    {"topf;", "\xf0\x9d\x95\xa5"},
    {"topfork;", "\xe2\xab\x9a"},
    {"tosa;", "\xe2\xa4\xa9"},
    {"tprime;", "\xe2\x80\xb4"},
    {"trade;", "\xe2\x84\xa2"},
    {"triangle;", "\xe2\x96\xb5"},
    {"triangledown;", "\xe2\x96\xbf"},
    {"triangleleft;", "\xe2\x97\x83"},
    {"trianglelefteq;", "\xe2\x8a\xb4"},
    {"triangleq;", "\xe2\x89\x9c"},
    {"triangleright;", "\xe2\x96\xb9"},
    {"trianglerighteq;", "\xe2\x8a\xb5"},
    {"tridot;", "\xe2\x97\xac"},
    {"trie;", "\xe2\x89\x9c"},
    {"triminus;", "\xe2\xa8\xba"},
    {"triplus;", "\xe2\xa8\xb9"},
    {"trisb;", "\xe2\xa7\x8d"},
    {"tritime;", "\xe2\xa8\xbb"},
    {"trpezium;", "\xe2\x8f\xa2"},
    {"tscr;", "\xf0\x9d\x93\x89"},
    {"tscy;", "\xd1\x86"},
    {"tshcy;", "\xd1\x9b"},
    {"tstrok;", "\xc5\xa7"},
    {"twixt;", "\xe2\x89\xac"},
    {"twoheadleftarrow;", "\xe2\x86\x9e"},
    {"twoheadrightarrow;", "\xe2\x86\xa0"},
    {"uArr;", "\xe2\x87\x91"},
    {"uHar;", "\xe2\xa5\xa3"},
    {"uacute", "\xc3\xba"},
    {"uacute;", "\xc3\xba"},
    {"uarr;", "\xe2\x86\x91"},
    {"ubrcy;", "\xd1\x9e"},
    {"ubreve;", "\xc5\xad"},
    {"ucirc", "\xc3\xbb"},
    {"ucirc;", "\xc3\xbb"},
    {"ucy;", "\xd1\x83"},
    {"udarr;", "\xe2\x87\x85"},
    {"udblac;", "\xc5\xb1"},
    {"udhar;", "\xe2\xa5\xae"},
    {"ufisht;", "\xe2\xa5\xbe"},
    {"ufr;", "\xf0\x9d\x94\xb2"},
    {"ugrave", "\xc3\xb9"},
    {"ugrave;", "\xc3\xb9"},
    {"uharl;", "\xe2\x86\xbf"},
    {"uharr;", "\xe2\x86\xbe"},
    {"uhblk;", "\xe2\x96\x80"},
    {"ulcorn;", "\xe2\x8c\x9c"},
    {"ulcorner;", "\xe2\x8c\x9c"},
    {"ulcrop;", "\xe2\x8c\x8f"},
    {"ultri;", "\xe2\x97\xb8"},
    {"umacr;", "\xc5\xab"},
    {"uml", "\xc2\xa8"},
    {"uml;", "\xc2\xa8"},
    {"uogon;", "\xc5\xb3"},
    {"uopf;", "\xf0\x9d\x95\xa6"},
    {"uparrow;", "\xe2\x86\x91"},
    {"updownarrow;", "\xe2\x86\x95"},
    {"upharpoonleft;", "\xe2\x86\xbf"},
    {"upharpoonright;", "\xe2\x86\xbe"},
    {"uplus;", "\xe2\x8a\x8e"},
    {"upsi;", "\xcf\x85"},
    {"upsih;", "\xcf\x92"},
    {"upsilon;", "\xcf\x85"},
    {"upuparrows;", "\xe2\x87\x88"},
    {"urcorn;", "\xe2\x8c\x9d"},
    {"urcorner;", "\xe2\x8c\x9d"},
    {"urcrop;", "\xe2\x8c\x8e"},
    {"uring;", "\xc5\xaf"},
    {"urtri;", "\xe2\x97\xb9"},
    {"uscr;", "\xf0\x9d\x93\x8a"},
    {"utdot;", "\xe2\x8b\xb0"},
    {"utilde;", "\xc5\xa9"},
    {"utri;", "\xe2\x96\xb5"},
    {"utrif;", "\xe2\x96\xb4"},
    {"uuarr;", "\xe2\x87\x88"},
    {"uuml", "\xc3\xbc"},
    {"uuml;", "\xc3\xbc"},
    {"uwangle;", "\xe2\xa6\xa7"},
    {"vArr;", "\xe2\x87\x95"},
    {"vBar;", "\xe2\xab\xa8"},
    {"vBarv;", "\xe2\xab\xa9"},
    {"vDash;", "\xe2\x8a\xa8"},
    {"vangrt;", "\xe2\xa6\x9c"},
    {"varepsilon;", "\xcf\xb5"},
    {"varkappa;", "\xcf\xb0"},
    {"varnothing;", "\xe2\x88\x85"},
    {"varphi;", "\xcf\x95"},
    {"varpi;", "\xcf\x96"},
    {"varpropto;", "\xe2\x88\x9d"},
    {"varr;", "\xe2\x86\x95"},
    {"varrho;", "\xcf\xb1"},
    {"varsigma;", "\xcf\x82"},
    {"varsubsetneq;", "\xe2\x8a\x8a\xef\xb8\x80"},
    {"varsubsetneqq;", "\xe2\xab\x8b\xef\xb8\x80"},
    {"varsupsetneq;", "\xe2\x8a\x8b\xef\xb8\x80"},
    {"varsupsetneqq;", "\xe2\xab\x8c\xef\xb8\x80"},
    {"vartheta;", "\xcf\x91"},
    {"vartriangleleft;", "\xe2\x8a\xb2"},
    {"vartriangleright;", "\xe2\x8a\xb3"},
    {"vcy;", "\xd0\xb2"},
    {"vdash;", "\xe2\x8a\xa2"},
    {"vee;", "\xe2\x88\xa8"},
    {"veebar;", "\xe2\x8a\xbb"},
    {"veeeq;", "\xe2\x89\x9a"},
    {"vellip;", "\xe2\x8b\xae"},
    {"verbar;", "|"},
    {"vert;", "|"},
    {"vfr;", "\xf0\x9d\x94\xb3"},
    {"vltri;", "\xe2\x8a\xb2"},
    {"vnsub;", "\xe2\x8a\x82\xe2\x83\x92"},
    {"vnsup;", "\xe2\x8a\x83\xe2\x83\x92"},
    {"vopf;", "\xf0\x9d\x95\xa7"},
    {"vprop;", "\xe2\x88\x9d"},
    {"vrtri;", "\xe2\x8a\xb3"},
    {"vscr;", "\xf0\x9d\x93\x8b"},
    {"vsubnE;", "\xe2\xab\x8b\xef\xb8\x80"},
    {"vsubne;", "\xe2\x8a\x8a\xef\xb8\x80"},
    {"vsupnE;", "\xe2\xab\x8c\xef\xb8\x80"},
    {"vsupne;", "\xe2\x8a\x8b\xef\xb8\x80"},
    {"vzigzag;", "\xe2\xa6\x9a"},
    {"wcirc;", "\xc5\xb5"},
    {"wedbar;", "\xe2\xa9\x9f"},
    {"wedge;", "\xe2\x88\xa7"},
    {"wedgeq;", "\xe2\x89\x99"},
    {"weierp;", "\xe2\x84\x98"},
    {"wfr;", "\xf0\x9d\x94\xb4"},
    {"wopf;", "\xf0\x9d\x95\xa8"},
    {"wp;", "\xe2\x84\x98"},
    {"wr;", "\xe2\x89\x80"},
    {"wreath;", "\xe2\x89\x80"},
    {"wscr;", "\xf0\x9d\x93\x8c"},
    {"xcap;", "\xe2\x8b\x82"},
    {"xcirc;", "\xe2\x97\xaf"},
    {"xcup;", "\xe2\x8b\x83"},
    {"xdtri;", "\xe2\x96\xbd"},
    {"xfr;", "\xf0\x9d\x94\xb5"},
    {"xhArr;", "\xe2\x9f\xba"},
    {"xharr;", "\xe2\x9f\xb7"},
    {"xi;", "\xce\xbe"},
    {"xlArr;", "\xe2\x9f\xb8"},
    {"xlarr;", "\xe2\x9f\xb5"},
    {"xmap;", "\xe2\x9f\xbc"},
    {"xnis;", "\xe2\x8b\xbb"},
    {"xodot;", "\xe2\xa8\x80"},
    {"xopf;", "\xf0\x9d\x95\xa9"},
    {"xoplus;", "\xe2\xa8\x81"},
    {"xotime;", "\xe2\xa8\x82"},
    {"xrArr;", "\xe2\x9f\xb9"},
    {"xrarr;", "\xe2\x9f\xb6"},
    {"xscr;", "\xf0\x9d\x93\x8d"},
    {"xsqcup;", "\xe2\xa8\x86"},
    {"xuplus;", "\xe2\xa8\x84"},
    {"xutri;", "\xe2\x96\xb3"},
    {"xvee;", "\xe2\x8b\x81"},
    {"xwedge;", "\xe2\x8b\x80"},
    {"yacute", "\xc3\xbd"},
    {"yacute;", "\xc3\xbd"},
    {"yacy;", "\xd1\x8f"},
    {"ycirc;", "\xc5\xb7"},
    {"ycy;", "\xd1\x8b"},
    {"yen", "\xc2\xa5"},
    {"yen;", "\xc2\xa5"},
    {"yfr;", "\xf0\x9d\x94\xb6"},
    {"yicy;", "\xd1\x97"},
    {"yopf;", "\xf0\x9d\x95\xaa"},
    {"yscr;", "\xf0\x9d\x93\x8e"},
    {"yucy;", "\xd1\x8e"},
    {"yuml", "\xc3\xbf"},
    {"yuml;", "\xc3\xbf"},
    {"zacute;", "\xc5\xba"},
    {"zcaron;", "\xc5\xbe"},
    {"zcy;", "\xd0\xb7"},
    {"zdot;", "\xc5\xbc"},
    {"zeetrf;", "\xe2\x84\xa8"},
    {"zeta;", "\xce\xb6"},
    {"zfr;", "\xf0\x9d\x94\xb7"},
    {"zhcy;", "\xd0\xb6"},
    {"zigrarr;", "\xe2\x87\x9d"},
    {"zopf;", "\xf0\x9d\x95\xab"},
    {"zscr;", "\xf0\x9d\x93\x8f"},
    {"zwj;", "\xe2\x80\x8d"},
    {"zwnj;", "\xe2\x80\x8c"},
}};

}  // namespace texttiger::tokenizer::tables
