"""Frozen Unicode property tables.

Generated from the Unicode 16.0.0 Character Database
(Scripts.txt and emoji-data.txt) by tools/gen_unicode_data.py.
Do not edit by hand.
"""

UNICODE_VERSION = "16.0.0"

# Emoji_Presentation=Yes code point ranges, inclusive.
EMOJI_PRESENTATION = (
    (0x0231A, 0x0231B),
    (0x023E9, 0x023EC),
    (0x023F0, 0x023F0),
    (0x023F3, 0x023F3),
    (0x025FD, 0x025FE),
    (0x02614, 0x02615),
    (0x02648, 0x02653),
    (0x0267F, 0x0267F),
    (0x02693, 0x02693),
    (0x026A1, 0x026A1),
    (0x026AA, 0x026AB),
    (0x026BD, 0x026BE),
    (0x026C4, 0x026C5),
    (0x026CE, 0x026CE),
    (0x026D4, 0x026D4),
    (0x026EA, 0x026EA),
    (0x026F2, 0x026F3),
    (0x026F5, 0x026F5),
    (0x026FA, 0x026FA),
    (0x026FD, 0x026FD),
    (0x02705, 0x02705),
    (0x0270A, 0x0270B),
    (0x02728, 0x02728),
    (0x0274C, 0x0274C),
    (0x0274E, 0x0274E),
    (0x02753, 0x02755),
    (0x02757, 0x02757),
    (0x02795, 0x02797),
    (0x027B0, 0x027B0),
    (0x027BF, 0x027BF),
    (0x02B1B, 0x02B1C),
    (0x02B50, 0x02B50),
    (0x02B55, 0x02B55),
    (0x1F004, 0x1F004),
    (0x1F0CF, 0x1F0CF),
    (0x1F18E, 0x1F18E),
    (0x1F191, 0x1F19A),
    (0x1F1E6, 0x1F1FF),
    (0x1F201, 0x1F201),
    (0x1F21A, 0x1F21A),
    (0x1F22F, 0x1F22F),
    (0x1F232, 0x1F236),
    (0x1F238, 0x1F23A),
    (0x1F250, 0x1F251),
    (0x1F300, 0x1F320),
    (0x1F32D, 0x1F335),
    (0x1F337, 0x1F37C),
    (0x1F37E, 0x1F393),
    (0x1F3A0, 0x1F3CA),
    (0x1F3CF, 0x1F3D3),
    (0x1F3E0, 0x1F3F0),
    (0x1F3F4, 0x1F3F4),
    (0x1F3F8, 0x1F43E),
    (0x1F440, 0x1F440),
    (0x1F442, 0x1F4FC),
    (0x1F4FF, 0x1F53D),
    (0x1F54B, 0x1F54E),
    (0x1F550, 0x1F567),
    (0x1F57A, 0x1F57A),
    (0x1F595, 0x1F596),
    (0x1F5A4, 0x1F5A4),
    (0x1F5FB, 0x1F64F),
    (0x1F680, 0x1F6C5),
    (0x1F6CC, 0x1F6CC),
    (0x1F6D0, 0x1F6D2),
    (0x1F6D5, 0x1F6D7),
    (0x1F6DC, 0x1F6DF),
    (0x1F6EB, 0x1F6EC),
    (0x1F6F4, 0x1F6FC),
    (0x1F7E0, 0x1F7EB),
    (0x1F7F0, 0x1F7F0),
    (0x1F90C, 0x1F93A),
    (0x1F93C, 0x1F945),
    (0x1F947, 0x1F9FF),
    (0x1FA70, 0x1FA7C),
    (0x1FA80, 0x1FA89),
    (0x1FA8F, 0x1FAC6),
    (0x1FACE, 0x1FADC),
    (0x1FADF, 0x1FAE9),
    (0x1FAF0, 0x1FAF8),
)

# Script property ranges keyed by ISO 15924 code, inclusive.
# Common, Inherited, and unassigned code points are absent.
SCRIPT_RANGES = {
    "Adlm": (
        (0x1E900, 0x1E94B),
        (0x1E950, 0x1E959),
        (0x1E95E, 0x1E95F),
    ),
    "Aghb": (
        (0x10530, 0x10563),
        (0x1056F, 0x1056F),
    ),
    "Ahom": (
        (0x11700, 0x1171A),
        (0x1171D, 0x1172B),
        (0x11730, 0x11746),
    ),
    "Arab": (
        (0x00600, 0x00604),
        (0x00606, 0x0060B),
        (0x0060D, 0x0061A),
        (0x0061C, 0x0061E),
        (0x00620, 0x0063F),
        (0x00641, 0x0064A),
        (0x00656, 0x0066F),
        (0x00671, 0x006DC),
        (0x006DE, 0x006FF),
        (0x00750, 0x0077F),
        (0x00870, 0x0088E),
        (0x00890, 0x00891),
        (0x00897, 0x008E1),
        (0x008E3, 0x008FF),
        (0x0FB50, 0x0FBC2),
        (0x0FBD3, 0x0FD3D),
        (0x0FD40, 0x0FD8F),
        (0x0FD92, 0x0FDC7),
        (0x0FDCF, 0x0FDCF),
        (0x0FDF0, 0x0FDFF),
        (0x0FE70, 0x0FE74),
        (0x0FE76, 0x0FEFC),
        (0x10E60, 0x10E7E),
        (0x10EC2, 0x10EC4),
        (0x10EFC, 0x10EFF),
        (0x1EE00, 0x1EE03),
        (0x1EE05, 0x1EE1F),
        (0x1EE21, 0x1EE22),
        (0x1EE24, 0x1EE24),
        (0x1EE27, 0x1EE27),
        (0x1EE29, 0x1EE32),
        (0x1EE34, 0x1EE37),
        (0x1EE39, 0x1EE39),
        (0x1EE3B, 0x1EE3B),
        (0x1EE42, 0x1EE42),
        (0x1EE47, 0x1EE47),
        (0x1EE49, 0x1EE49),
        (0x1EE4B, 0x1EE4B),
        (0x1EE4D, 0x1EE4F),
        (0x1EE51, 0x1EE52),
        (0x1EE54, 0x1EE54),
        (0x1EE57, 0x1EE57),
        (0x1EE59, 0x1EE59),
        (0x1EE5B, 0x1EE5B),
        (0x1EE5D, 0x1EE5D),
        (0x1EE5F, 0x1EE5F),
        (0x1EE61, 0x1EE62),
        (0x1EE64, 0x1EE64),
        (0x1EE67, 0x1EE6A),
        (0x1EE6C, 0x1EE72),
        (0x1EE74, 0x1EE77),
        (0x1EE79, 0x1EE7C),
        (0x1EE7E, 0x1EE7E),
        (0x1EE80, 0x1EE89),
        (0x1EE8B, 0x1EE9B),
        (0x1EEA1, 0x1EEA3),
        (0x1EEA5, 0x1EEA9),
        (0x1EEAB, 0x1EEBB),
        (0x1EEF0, 0x1EEF1),
    ),
    "Armi": (
        (0x10840, 0x10855),
        (0x10857, 0x1085F),
    ),
    "Armn": (
        (0x00531, 0x00556),
        (0x00559, 0x0058A),
        (0x0058D, 0x0058F),
        (0x0FB13, 0x0FB17),
    ),
    "Avst": (
        (0x10B00, 0x10B35),
        (0x10B39, 0x10B3F),
    ),
    "Bali": (
        (0x01B00, 0x01B4C),
        (0x01B4E, 0x01B7F),
    ),
    "Bamu": (
        (0x0A6A0, 0x0A6F7),
        (0x16800, 0x16A38),
    ),
    "Bass": (
        (0x16AD0, 0x16AED),
        (0x16AF0, 0x16AF5),
    ),
    "Batk": (
        (0x01BC0, 0x01BF3),
        (0x01BFC, 0x01BFF),
    ),
    "Beng": (
        (0x00980, 0x00983),
        (0x00985, 0x0098C),
        (0x0098F, 0x00990),
        (0x00993, 0x009A8),
        (0x009AA, 0x009B0),
        (0x009B2, 0x009B2),
        (0x009B6, 0x009B9),
        (0x009BC, 0x009C4),
        (0x009C7, 0x009C8),
        (0x009CB, 0x009CE),
        (0x009D7, 0x009D7),
        (0x009DC, 0x009DD),
        (0x009DF, 0x009E3),
        (0x009E6, 0x009FE),
    ),
    "Bhks": (
        (0x11C00, 0x11C08),
        (0x11C0A, 0x11C36),
        (0x11C38, 0x11C45),
        (0x11C50, 0x11C6C),
    ),
    "Bopo": (
        (0x002EA, 0x002EB),
        (0x03105, 0x0312F),
        (0x031A0, 0x031BF),
    ),
    "Brah": (
        (0x11000, 0x1104D),
        (0x11052, 0x11075),
        (0x1107F, 0x1107F),
    ),
    "Brai": (
        (0x02800, 0x028FF),
    ),
    "Bugi": (
        (0x01A00, 0x01A1B),
        (0x01A1E, 0x01A1F),
    ),
    "Buhd": (
        (0x01740, 0x01753),
    ),
    "Cakm": (
        (0x11100, 0x11134),
        (0x11136, 0x11147),
    ),
    "Cans": (
        (0x01400, 0x0167F),
        (0x018B0, 0x018F5),
        (0x11AB0, 0x11ABF),
    ),
    "Cari": (
        (0x102A0, 0x102D0),
    ),
    "Cham": (
        (0x0AA00, 0x0AA36),
        (0x0AA40, 0x0AA4D),
        (0x0AA50, 0x0AA59),
        (0x0AA5C, 0x0AA5F),
    ),
    "Cher": (
        (0x013A0, 0x013F5),
        (0x013F8, 0x013FD),
        (0x0AB70, 0x0ABBF),
    ),
    "Chrs": (
        (0x10FB0, 0x10FCB),
    ),
    "Copt": (
        (0x003E2, 0x003EF),
        (0x02C80, 0x02CF3),
        (0x02CF9, 0x02CFF),
    ),
    "Cpmn": (
        (0x12F90, 0x12FF2),
    ),
    "Cprt": (
        (0x10800, 0x10805),
        (0x10808, 0x10808),
        (0x1080A, 0x10835),
        (0x10837, 0x10838),
        (0x1083C, 0x1083C),
        (0x1083F, 0x1083F),
    ),
    "Cyrl": (
        (0x00400, 0x00484),
        (0x00487, 0x0052F),
        (0x01C80, 0x01C8A),
        (0x01D2B, 0x01D2B),
        (0x01D78, 0x01D78),
        (0x02DE0, 0x02DFF),
        (0x0A640, 0x0A69F),
        (0x0FE2E, 0x0FE2F),
        (0x1E030, 0x1E06D),
        (0x1E08F, 0x1E08F),
    ),
    "Deva": (
        (0x00900, 0x00950),
        (0x00955, 0x00963),
        (0x00966, 0x0097F),
        (0x0A8E0, 0x0A8FF),
        (0x11B00, 0x11B09),
    ),
    "Diak": (
        (0x11900, 0x11906),
        (0x11909, 0x11909),
        (0x1190C, 0x11913),
        (0x11915, 0x11916),
        (0x11918, 0x11935),
        (0x11937, 0x11938),
        (0x1193B, 0x11946),
        (0x11950, 0x11959),
    ),
    "Dogr": (
        (0x11800, 0x1183B),
    ),
    "Dsrt": (
        (0x10400, 0x1044F),
    ),
    "Dupl": (
        (0x1BC00, 0x1BC6A),
        (0x1BC70, 0x1BC7C),
        (0x1BC80, 0x1BC88),
        (0x1BC90, 0x1BC99),
        (0x1BC9C, 0x1BC9F),
    ),
    "Egyp": (
        (0x13000, 0x13455),
        (0x13460, 0x143FA),
    ),
    "Elba": (
        (0x10500, 0x10527),
    ),
    "Elym": (
        (0x10FE0, 0x10FF6),
    ),
    "Ethi": (
        (0x01200, 0x01248),
        (0x0124A, 0x0124D),
        (0x01250, 0x01256),
        (0x01258, 0x01258),
        (0x0125A, 0x0125D),
        (0x01260, 0x01288),
        (0x0128A, 0x0128D),
        (0x01290, 0x012B0),
        (0x012B2, 0x012B5),
        (0x012B8, 0x012BE),
        (0x012C0, 0x012C0),
        (0x012C2, 0x012C5),
        (0x012C8, 0x012D6),
        (0x012D8, 0x01310),
        (0x01312, 0x01315),
        (0x01318, 0x0135A),
        (0x0135D, 0x0137C),
        (0x01380, 0x01399),
        (0x02D80, 0x02D96),
        (0x02DA0, 0x02DA6),
        (0x02DA8, 0x02DAE),
        (0x02DB0, 0x02DB6),
        (0x02DB8, 0x02DBE),
        (0x02DC0, 0x02DC6),
        (0x02DC8, 0x02DCE),
        (0x02DD0, 0x02DD6),
        (0x02DD8, 0x02DDE),
        (0x0AB01, 0x0AB06),
        (0x0AB09, 0x0AB0E),
        (0x0AB11, 0x0AB16),
        (0x0AB20, 0x0AB26),
        (0x0AB28, 0x0AB2E),
        (0x1E7E0, 0x1E7E6),
        (0x1E7E8, 0x1E7EB),
        (0x1E7ED, 0x1E7EE),
        (0x1E7F0, 0x1E7FE),
    ),
    "Gara": (
        (0x10D40, 0x10D65),
        (0x10D69, 0x10D85),
        (0x10D8E, 0x10D8F),
    ),
    "Geor": (
        (0x010A0, 0x010C5),
        (0x010C7, 0x010C7),
        (0x010CD, 0x010CD),
        (0x010D0, 0x010FA),
        (0x010FC, 0x010FF),
        (0x01C90, 0x01CBA),
        (0x01CBD, 0x01CBF),
        (0x02D00, 0x02D25),
        (0x02D27, 0x02D27),
        (0x02D2D, 0x02D2D),
    ),
    "Glag": (
        (0x02C00, 0x02C5F),
        (0x1E000, 0x1E006),
        (0x1E008, 0x1E018),
        (0x1E01B, 0x1E021),
        (0x1E023, 0x1E024),
        (0x1E026, 0x1E02A),
    ),
    "Gong": (
        (0x11D60, 0x11D65),
        (0x11D67, 0x11D68),
        (0x11D6A, 0x11D8E),
        (0x11D90, 0x11D91),
        (0x11D93, 0x11D98),
        (0x11DA0, 0x11DA9),
    ),
    "Gonm": (
        (0x11D00, 0x11D06),
        (0x11D08, 0x11D09),
        (0x11D0B, 0x11D36),
        (0x11D3A, 0x11D3A),
        (0x11D3C, 0x11D3D),
        (0x11D3F, 0x11D47),
        (0x11D50, 0x11D59),
    ),
    "Goth": (
        (0x10330, 0x1034A),
    ),
    "Gran": (
        (0x11300, 0x11303),
        (0x11305, 0x1130C),
        (0x1130F, 0x11310),
        (0x11313, 0x11328),
        (0x1132A, 0x11330),
        (0x11332, 0x11333),
        (0x11335, 0x11339),
        (0x1133C, 0x11344),
        (0x11347, 0x11348),
        (0x1134B, 0x1134D),
        (0x11350, 0x11350),
        (0x11357, 0x11357),
        (0x1135D, 0x11363),
        (0x11366, 0x1136C),
        (0x11370, 0x11374),
    ),
    "Grek": (
        (0x00370, 0x00373),
        (0x00375, 0x00377),
        (0x0037A, 0x0037D),
        (0x0037F, 0x0037F),
        (0x00384, 0x00384),
        (0x00386, 0x00386),
        (0x00388, 0x0038A),
        (0x0038C, 0x0038C),
        (0x0038E, 0x003A1),
        (0x003A3, 0x003E1),
        (0x003F0, 0x003FF),
        (0x01D26, 0x01D2A),
        (0x01D5D, 0x01D61),
        (0x01D66, 0x01D6A),
        (0x01DBF, 0x01DBF),
        (0x01F00, 0x01F15),
        (0x01F18, 0x01F1D),
        (0x01F20, 0x01F45),
        (0x01F48, 0x01F4D),
        (0x01F50, 0x01F57),
        (0x01F59, 0x01F59),
        (0x01F5B, 0x01F5B),
        (0x01F5D, 0x01F5D),
        (0x01F5F, 0x01F7D),
        (0x01F80, 0x01FB4),
        (0x01FB6, 0x01FC4),
        (0x01FC6, 0x01FD3),
        (0x01FD6, 0x01FDB),
        (0x01FDD, 0x01FEF),
        (0x01FF2, 0x01FF4),
        (0x01FF6, 0x01FFE),
        (0x02126, 0x02126),
        (0x0AB65, 0x0AB65),
        (0x10140, 0x1018E),
        (0x101A0, 0x101A0),
        (0x1D200, 0x1D245),
    ),
    "Gujr": (
        (0x00A81, 0x00A83),
        (0x00A85, 0x00A8D),
        (0x00A8F, 0x00A91),
        (0x00A93, 0x00AA8),
        (0x00AAA, 0x00AB0),
        (0x00AB2, 0x00AB3),
        (0x00AB5, 0x00AB9),
        (0x00ABC, 0x00AC5),
        (0x00AC7, 0x00AC9),
        (0x00ACB, 0x00ACD),
        (0x00AD0, 0x00AD0),
        (0x00AE0, 0x00AE3),
        (0x00AE6, 0x00AF1),
        (0x00AF9, 0x00AFF),
    ),
    "Gukh": (
        (0x16100, 0x16139),
    ),
    "Guru": (
        (0x00A01, 0x00A03),
        (0x00A05, 0x00A0A),
        (0x00A0F, 0x00A10),
        (0x00A13, 0x00A28),
        (0x00A2A, 0x00A30),
        (0x00A32, 0x00A33),
        (0x00A35, 0x00A36),
        (0x00A38, 0x00A39),
        (0x00A3C, 0x00A3C),
        (0x00A3E, 0x00A42),
        (0x00A47, 0x00A48),
        (0x00A4B, 0x00A4D),
        (0x00A51, 0x00A51),
        (0x00A59, 0x00A5C),
        (0x00A5E, 0x00A5E),
        (0x00A66, 0x00A76),
    ),
    "Hang": (
        (0x01100, 0x011FF),
        (0x0302E, 0x0302F),
        (0x03131, 0x0318E),
        (0x03200, 0x0321E),
        (0x03260, 0x0327E),
        (0x0A960, 0x0A97C),
        (0x0AC00, 0x0D7A3),
        (0x0D7B0, 0x0D7C6),
        (0x0D7CB, 0x0D7FB),
        (0x0FFA0, 0x0FFBE),
        (0x0FFC2, 0x0FFC7),
        (0x0FFCA, 0x0FFCF),
        (0x0FFD2, 0x0FFD7),
        (0x0FFDA, 0x0FFDC),
    ),
    "Hani": (
        (0x02E80, 0x02E99),
        (0x02E9B, 0x02EF3),
        (0x02F00, 0x02FD5),
        (0x03005, 0x03005),
        (0x03007, 0x03007),
        (0x03021, 0x03029),
        (0x03038, 0x0303B),
        (0x03400, 0x04DBF),
        (0x04E00, 0x09FFF),
        (0x0F900, 0x0FA6D),
        (0x0FA70, 0x0FAD9),
        (0x16FE2, 0x16FE3),
        (0x16FF0, 0x16FF1),
        (0x20000, 0x2A6DF),
        (0x2A700, 0x2B739),
        (0x2B740, 0x2B81D),
        (0x2B820, 0x2CEA1),
        (0x2CEB0, 0x2EBE0),
        (0x2EBF0, 0x2EE5D),
        (0x2F800, 0x2FA1D),
        (0x30000, 0x3134A),
        (0x31350, 0x323AF),
    ),
    "Hano": (
        (0x01720, 0x01734),
    ),
    "Hatr": (
        (0x108E0, 0x108F2),
        (0x108F4, 0x108F5),
        (0x108FB, 0x108FF),
    ),
    "Hebr": (
        (0x00591, 0x005C7),
        (0x005D0, 0x005EA),
        (0x005EF, 0x005F4),
        (0x0FB1D, 0x0FB36),
        (0x0FB38, 0x0FB3C),
        (0x0FB3E, 0x0FB3E),
        (0x0FB40, 0x0FB41),
        (0x0FB43, 0x0FB44),
        (0x0FB46, 0x0FB4F),
    ),
    "Hira": (
        (0x03041, 0x03096),
        (0x0309D, 0x0309F),
        (0x1B001, 0x1B11F),
        (0x1B132, 0x1B132),
        (0x1B150, 0x1B152),
        (0x1F200, 0x1F200),
    ),
    "Hluw": (
        (0x14400, 0x14646),
    ),
    "Hmng": (
        (0x16B00, 0x16B45),
        (0x16B50, 0x16B59),
        (0x16B5B, 0x16B61),
        (0x16B63, 0x16B77),
        (0x16B7D, 0x16B8F),
    ),
    "Hmnp": (
        (0x1E100, 0x1E12C),
        (0x1E130, 0x1E13D),
        (0x1E140, 0x1E149),
        (0x1E14E, 0x1E14F),
    ),
    "Hung": (
        (0x10C80, 0x10CB2),
        (0x10CC0, 0x10CF2),
        (0x10CFA, 0x10CFF),
    ),
    "Ital": (
        (0x10300, 0x10323),
        (0x1032D, 0x1032F),
    ),
    "Java": (
        (0x0A980, 0x0A9CD),
        (0x0A9D0, 0x0A9D9),
        (0x0A9DE, 0x0A9DF),
    ),
    "Kali": (
        (0x0A900, 0x0A92D),
        (0x0A92F, 0x0A92F),
    ),
    "Kana": (
        (0x030A1, 0x030FA),
        (0x030FD, 0x030FF),
        (0x031F0, 0x031FF),
        (0x032D0, 0x032FE),
        (0x03300, 0x03357),
        (0x0FF66, 0x0FF6F),
        (0x0FF71, 0x0FF9D),
        (0x1AFF0, 0x1AFF3),
        (0x1AFF5, 0x1AFFB),
        (0x1AFFD, 0x1AFFE),
        (0x1B000, 0x1B000),
        (0x1B120, 0x1B122),
        (0x1B155, 0x1B155),
        (0x1B164, 0x1B167),
    ),
    "Kawi": (
        (0x11F00, 0x11F10),
        (0x11F12, 0x11F3A),
        (0x11F3E, 0x11F5A),
    ),
    "Khar": (
        (0x10A00, 0x10A03),
        (0x10A05, 0x10A06),
        (0x10A0C, 0x10A13),
        (0x10A15, 0x10A17),
        (0x10A19, 0x10A35),
        (0x10A38, 0x10A3A),
        (0x10A3F, 0x10A48),
        (0x10A50, 0x10A58),
    ),
    "Khmr": (
        (0x01780, 0x017DD),
        (0x017E0, 0x017E9),
        (0x017F0, 0x017F9),
        (0x019E0, 0x019FF),
    ),
    "Khoj": (
        (0x11200, 0x11211),
        (0x11213, 0x11241),
    ),
    "Kits": (
        (0x16FE4, 0x16FE4),
        (0x18B00, 0x18CD5),
        (0x18CFF, 0x18CFF),
    ),
    "Knda": (
        (0x00C80, 0x00C8C),
        (0x00C8E, 0x00C90),
        (0x00C92, 0x00CA8),
        (0x00CAA, 0x00CB3),
        (0x00CB5, 0x00CB9),
        (0x00CBC, 0x00CC4),
        (0x00CC6, 0x00CC8),
        (0x00CCA, 0x00CCD),
        (0x00CD5, 0x00CD6),
        (0x00CDD, 0x00CDE),
        (0x00CE0, 0x00CE3),
        (0x00CE6, 0x00CEF),
        (0x00CF1, 0x00CF3),
    ),
    "Krai": (
        (0x16D40, 0x16D79),
    ),
    "Kthi": (
        (0x11080, 0x110C2),
        (0x110CD, 0x110CD),
    ),
    "Lana": (
        (0x01A20, 0x01A5E),
        (0x01A60, 0x01A7C),
        (0x01A7F, 0x01A89),
        (0x01A90, 0x01A99),
        (0x01AA0, 0x01AAD),
    ),
    "Laoo": (
        (0x00E81, 0x00E82),
        (0x00E84, 0x00E84),
        (0x00E86, 0x00E8A),
        (0x00E8C, 0x00EA3),
        (0x00EA5, 0x00EA5),
        (0x00EA7, 0x00EBD),
        (0x00EC0, 0x00EC4),
        (0x00EC6, 0x00EC6),
        (0x00EC8, 0x00ECE),
        (0x00ED0, 0x00ED9),
        (0x00EDC, 0x00EDF),
    ),
    "Latn": (
        (0x00041, 0x0005A),
        (0x00061, 0x0007A),
        (0x000AA, 0x000AA),
        (0x000BA, 0x000BA),
        (0x000C0, 0x000D6),
        (0x000D8, 0x000F6),
        (0x000F8, 0x002B8),
        (0x002E0, 0x002E4),
        (0x01D00, 0x01D25),
        (0x01D2C, 0x01D5C),
        (0x01D62, 0x01D65),
        (0x01D6B, 0x01D77),
        (0x01D79, 0x01DBE),
        (0x01E00, 0x01EFF),
        (0x02071, 0x02071),
        (0x0207F, 0x0207F),
        (0x02090, 0x0209C),
        (0x0212A, 0x0212B),
        (0x02132, 0x02132),
        (0x0214E, 0x0214E),
        (0x02160, 0x02188),
        (0x02C60, 0x02C7F),
        (0x0A722, 0x0A787),
        (0x0A78B, 0x0A7CD),
        (0x0A7D0, 0x0A7D1),
        (0x0A7D3, 0x0A7D3),
        (0x0A7D5, 0x0A7DC),
        (0x0A7F2, 0x0A7FF),
        (0x0AB30, 0x0AB5A),
        (0x0AB5C, 0x0AB64),
        (0x0AB66, 0x0AB69),
        (0x0FB00, 0x0FB06),
        (0x0FF21, 0x0FF3A),
        (0x0FF41, 0x0FF5A),
        (0x10780, 0x10785),
        (0x10787, 0x107B0),
        (0x107B2, 0x107BA),
        (0x1DF00, 0x1DF1E),
        (0x1DF25, 0x1DF2A),
    ),
    "Lepc": (
        (0x01C00, 0x01C37),
        (0x01C3B, 0x01C49),
        (0x01C4D, 0x01C4F),
    ),
    "Limb": (
        (0x01900, 0x0191E),
        (0x01920, 0x0192B),
        (0x01930, 0x0193B),
        (0x01940, 0x01940),
        (0x01944, 0x0194F),
    ),
    "Lina": (
        (0x10600, 0x10736),
        (0x10740, 0x10755),
        (0x10760, 0x10767),
    ),
    "Linb": (
        (0x10000, 0x1000B),
        (0x1000D, 0x10026),
        (0x10028, 0x1003A),
        (0x1003C, 0x1003D),
        (0x1003F, 0x1004D),
        (0x10050, 0x1005D),
        (0x10080, 0x100FA),
    ),
    "Lisu": (
        (0x0A4D0, 0x0A4FF),
        (0x11FB0, 0x11FB0),
    ),
    "Lyci": (
        (0x10280, 0x1029C),
    ),
    "Lydi": (
        (0x10920, 0x10939),
        (0x1093F, 0x1093F),
    ),
    "Mahj": (
        (0x11150, 0x11176),
    ),
    "Maka": (
        (0x11EE0, 0x11EF8),
    ),
    "Mand": (
        (0x00840, 0x0085B),
        (0x0085E, 0x0085E),
    ),
    "Mani": (
        (0x10AC0, 0x10AE6),
        (0x10AEB, 0x10AF6),
    ),
    "Marc": (
        (0x11C70, 0x11C8F),
        (0x11C92, 0x11CA7),
        (0x11CA9, 0x11CB6),
    ),
    "Medf": (
        (0x16E40, 0x16E9A),
    ),
    "Mend": (
        (0x1E800, 0x1E8C4),
        (0x1E8C7, 0x1E8D6),
    ),
    "Merc": (
        (0x109A0, 0x109B7),
        (0x109BC, 0x109CF),
        (0x109D2, 0x109FF),
    ),
    "Mero": (
        (0x10980, 0x1099F),
    ),
    "Mlym": (
        (0x00D00, 0x00D0C),
        (0x00D0E, 0x00D10),
        (0x00D12, 0x00D44),
        (0x00D46, 0x00D48),
        (0x00D4A, 0x00D4F),
        (0x00D54, 0x00D63),
        (0x00D66, 0x00D7F),
    ),
    "Modi": (
        (0x11600, 0x11644),
        (0x11650, 0x11659),
    ),
    "Mong": (
        (0x01800, 0x01801),
        (0x01804, 0x01804),
        (0x01806, 0x01819),
        (0x01820, 0x01878),
        (0x01880, 0x018AA),
        (0x11660, 0x1166C),
    ),
    "Mroo": (
        (0x16A40, 0x16A5E),
        (0x16A60, 0x16A69),
        (0x16A6E, 0x16A6F),
    ),
    "Mtei": (
        (0x0AAE0, 0x0AAF6),
        (0x0ABC0, 0x0ABED),
        (0x0ABF0, 0x0ABF9),
    ),
    "Mult": (
        (0x11280, 0x11286),
        (0x11288, 0x11288),
        (0x1128A, 0x1128D),
        (0x1128F, 0x1129D),
        (0x1129F, 0x112A9),
    ),
    "Mymr": (
        (0x01000, 0x0109F),
        (0x0A9E0, 0x0A9FE),
        (0x0AA60, 0x0AA7F),
        (0x116D0, 0x116E3),
    ),
    "Nagm": (
        (0x1E4D0, 0x1E4F9),
    ),
    "Nand": (
        (0x119A0, 0x119A7),
        (0x119AA, 0x119D7),
        (0x119DA, 0x119E4),
    ),
    "Narb": (
        (0x10A80, 0x10A9F),
    ),
    "Nbat": (
        (0x10880, 0x1089E),
        (0x108A7, 0x108AF),
    ),
    "Newa": (
        (0x11400, 0x1145B),
        (0x1145D, 0x11461),
    ),
    "Nkoo": (
        (0x007C0, 0x007FA),
        (0x007FD, 0x007FF),
    ),
    "Nshu": (
        (0x16FE1, 0x16FE1),
        (0x1B170, 0x1B2FB),
    ),
    "Ogam": (
        (0x01680, 0x0169C),
    ),
    "Olck": (
        (0x01C50, 0x01C7F),
    ),
    "Onao": (
        (0x1E5D0, 0x1E5FA),
        (0x1E5FF, 0x1E5FF),
    ),
    "Orkh": (
        (0x10C00, 0x10C48),
    ),
    "Orya": (
        (0x00B01, 0x00B03),
        (0x00B05, 0x00B0C),
        (0x00B0F, 0x00B10),
        (0x00B13, 0x00B28),
        (0x00B2A, 0x00B30),
        (0x00B32, 0x00B33),
        (0x00B35, 0x00B39),
        (0x00B3C, 0x00B44),
        (0x00B47, 0x00B48),
        (0x00B4B, 0x00B4D),
        (0x00B55, 0x00B57),
        (0x00B5C, 0x00B5D),
        (0x00B5F, 0x00B63),
        (0x00B66, 0x00B77),
    ),
    "Osge": (
        (0x104B0, 0x104D3),
        (0x104D8, 0x104FB),
    ),
    "Osma": (
        (0x10480, 0x1049D),
        (0x104A0, 0x104A9),
    ),
    "Ougr": (
        (0x10F70, 0x10F89),
    ),
    "Palm": (
        (0x10860, 0x1087F),
    ),
    "Pauc": (
        (0x11AC0, 0x11AF8),
    ),
    "Perm": (
        (0x10350, 0x1037A),
    ),
    "Phag": (
        (0x0A840, 0x0A877),
    ),
    "Phli": (
        (0x10B60, 0x10B72),
        (0x10B78, 0x10B7F),
    ),
    "Phlp": (
        (0x10B80, 0x10B91),
        (0x10B99, 0x10B9C),
        (0x10BA9, 0x10BAF),
    ),
    "Phnx": (
        (0x10900, 0x1091B),
        (0x1091F, 0x1091F),
    ),
    "Plrd": (
        (0x16F00, 0x16F4A),
        (0x16F4F, 0x16F87),
        (0x16F8F, 0x16F9F),
    ),
    "Prti": (
        (0x10B40, 0x10B55),
        (0x10B58, 0x10B5F),
    ),
    "Rjng": (
        (0x0A930, 0x0A953),
        (0x0A95F, 0x0A95F),
    ),
    "Rohg": (
        (0x10D00, 0x10D27),
        (0x10D30, 0x10D39),
    ),
    "Runr": (
        (0x016A0, 0x016EA),
        (0x016EE, 0x016F8),
    ),
    "Samr": (
        (0x00800, 0x0082D),
        (0x00830, 0x0083E),
    ),
    "Sarb": (
        (0x10A60, 0x10A7F),
    ),
    "Saur": (
        (0x0A880, 0x0A8C5),
        (0x0A8CE, 0x0A8D9),
    ),
    "Sgnw": (
        (0x1D800, 0x1DA8B),
        (0x1DA9B, 0x1DA9F),
        (0x1DAA1, 0x1DAAF),
    ),
    "Shaw": (
        (0x10450, 0x1047F),
    ),
    "Shrd": (
        (0x11180, 0x111DF),
    ),
    "Sidd": (
        (0x11580, 0x115B5),
        (0x115B8, 0x115DD),
    ),
    "Sind": (
        (0x112B0, 0x112EA),
        (0x112F0, 0x112F9),
    ),
    "Sinh": (
        (0x00D81, 0x00D83),
        (0x00D85, 0x00D96),
        (0x00D9A, 0x00DB1),
        (0x00DB3, 0x00DBB),
        (0x00DBD, 0x00DBD),
        (0x00DC0, 0x00DC6),
        (0x00DCA, 0x00DCA),
        (0x00DCF, 0x00DD4),
        (0x00DD6, 0x00DD6),
        (0x00DD8, 0x00DDF),
        (0x00DE6, 0x00DEF),
        (0x00DF2, 0x00DF4),
        (0x111E1, 0x111F4),
    ),
    "Sogd": (
        (0x10F30, 0x10F59),
    ),
    "Sogo": (
        (0x10F00, 0x10F27),
    ),
    "Sora": (
        (0x110D0, 0x110E8),
        (0x110F0, 0x110F9),
    ),
    "Soyo": (
        (0x11A50, 0x11AA2),
    ),
    "Sund": (
        (0x01B80, 0x01BBF),
        (0x01CC0, 0x01CC7),
    ),
    "Sunu": (
        (0x11BC0, 0x11BE1),
        (0x11BF0, 0x11BF9),
    ),
    "Sylo": (
        (0x0A800, 0x0A82C),
    ),
    "Syrc": (
        (0x00700, 0x0070D),
        (0x0070F, 0x0074A),
        (0x0074D, 0x0074F),
        (0x00860, 0x0086A),
    ),
    "Tagb": (
        (0x01760, 0x0176C),
        (0x0176E, 0x01770),
        (0x01772, 0x01773),
    ),
    "Takr": (
        (0x11680, 0x116B9),
        (0x116C0, 0x116C9),
    ),
    "Tale": (
        (0x01950, 0x0196D),
        (0x01970, 0x01974),
    ),
    "Talu": (
        (0x01980, 0x019AB),
        (0x019B0, 0x019C9),
        (0x019D0, 0x019DA),
        (0x019DE, 0x019DF),
    ),
    "Taml": (
        (0x00B82, 0x00B83),
        (0x00B85, 0x00B8A),
        (0x00B8E, 0x00B90),
        (0x00B92, 0x00B95),
        (0x00B99, 0x00B9A),
        (0x00B9C, 0x00B9C),
        (0x00B9E, 0x00B9F),
        (0x00BA3, 0x00BA4),
        (0x00BA8, 0x00BAA),
        (0x00BAE, 0x00BB9),
        (0x00BBE, 0x00BC2),
        (0x00BC6, 0x00BC8),
        (0x00BCA, 0x00BCD),
        (0x00BD0, 0x00BD0),
        (0x00BD7, 0x00BD7),
        (0x00BE6, 0x00BFA),
        (0x11FC0, 0x11FF1),
        (0x11FFF, 0x11FFF),
    ),
    "Tang": (
        (0x16FE0, 0x16FE0),
        (0x17000, 0x187F7),
        (0x18800, 0x18AFF),
        (0x18D00, 0x18D08),
    ),
    "Tavt": (
        (0x0AA80, 0x0AAC2),
        (0x0AADB, 0x0AADF),
    ),
    "Telu": (
        (0x00C00, 0x00C0C),
        (0x00C0E, 0x00C10),
        (0x00C12, 0x00C28),
        (0x00C2A, 0x00C39),
        (0x00C3C, 0x00C44),
        (0x00C46, 0x00C48),
        (0x00C4A, 0x00C4D),
        (0x00C55, 0x00C56),
        (0x00C58, 0x00C5A),
        (0x00C5D, 0x00C5D),
        (0x00C60, 0x00C63),
        (0x00C66, 0x00C6F),
        (0x00C77, 0x00C7F),
    ),
    "Tfng": (
        (0x02D30, 0x02D67),
        (0x02D6F, 0x02D70),
        (0x02D7F, 0x02D7F),
    ),
    "Tglg": (
        (0x01700, 0x01715),
        (0x0171F, 0x0171F),
    ),
    "Thaa": (
        (0x00780, 0x007B1),
    ),
    "Thai": (
        (0x00E01, 0x00E3A),
        (0x00E40, 0x00E5B),
    ),
    "Tibt": (
        (0x00F00, 0x00F47),
        (0x00F49, 0x00F6C),
        (0x00F71, 0x00F97),
        (0x00F99, 0x00FBC),
        (0x00FBE, 0x00FCC),
        (0x00FCE, 0x00FD4),
        (0x00FD9, 0x00FDA),
    ),
    "Tirh": (
        (0x11480, 0x114C7),
        (0x114D0, 0x114D9),
    ),
    "Tnsa": (
        (0x16A70, 0x16ABE),
        (0x16AC0, 0x16AC9),
    ),
    "Todr": (
        (0x105C0, 0x105F3),
    ),
    "Toto": (
        (0x1E290, 0x1E2AE),
    ),
    "Tutg": (
        (0x11380, 0x11389),
        (0x1138B, 0x1138B),
        (0x1138E, 0x1138E),
        (0x11390, 0x113B5),
        (0x113B7, 0x113C0),
        (0x113C2, 0x113C2),
        (0x113C5, 0x113C5),
        (0x113C7, 0x113CA),
        (0x113CC, 0x113D5),
        (0x113D7, 0x113D8),
        (0x113E1, 0x113E2),
    ),
    "Ugar": (
        (0x10380, 0x1039D),
        (0x1039F, 0x1039F),
    ),
    "Vaii": (
        (0x0A500, 0x0A62B),
    ),
    "Vith": (
        (0x10570, 0x1057A),
        (0x1057C, 0x1058A),
        (0x1058C, 0x10592),
        (0x10594, 0x10595),
        (0x10597, 0x105A1),
        (0x105A3, 0x105B1),
        (0x105B3, 0x105B9),
        (0x105BB, 0x105BC),
    ),
    "Wara": (
        (0x118A0, 0x118F2),
        (0x118FF, 0x118FF),
    ),
    "Wcho": (
        (0x1E2C0, 0x1E2F9),
        (0x1E2FF, 0x1E2FF),
    ),
    "Xpeo": (
        (0x103A0, 0x103C3),
        (0x103C8, 0x103D5),
    ),
    "Xsux": (
        (0x12000, 0x12399),
        (0x12400, 0x1246E),
        (0x12470, 0x12474),
        (0x12480, 0x12543),
    ),
    "Yezi": (
        (0x10E80, 0x10EA9),
        (0x10EAB, 0x10EAD),
        (0x10EB0, 0x10EB1),
    ),
    "Yiii": (
        (0x0A000, 0x0A48C),
        (0x0A490, 0x0A4C6),
    ),
    "Zanb": (
        (0x11A00, 0x11A47),
    ),
}
