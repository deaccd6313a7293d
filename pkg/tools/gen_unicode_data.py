#!/usr/bin/env python3
"""Regenerate src/cslid/_unicode_data.py from Unicode Character Database files.

Usage:
    python tools/gen_unicode_data.py --scripts Scripts.txt \
        --emoji emoji-data.txt --out src/cslid/_unicode_data.py

Scripts.txt and emoji-data.txt are the official UCD files, e.g. from
https://www.unicode.org/Public/16.0.0/ucd/Scripts.txt and
https://www.unicode.org/Public/16.0.0/ucd/emoji/emoji-data.txt.
Only the Script property and the Emoji_Presentation property are extracted.
"""

import argparse
import re
from collections import defaultdict

# Unicode long script names -> ISO 15924 four-letter codes
# (from PropertyValueAliases.txt, field sc).
SCRIPT_CODES = {
    "Adlam": "Adlm", "Ahom": "Ahom", "Anatolian_Hieroglyphs": "Hluw",
    "Arabic": "Arab", "Armenian": "Armn", "Avestan": "Avst",
    "Balinese": "Bali", "Bamum": "Bamu", "Bassa_Vah": "Bass",
    "Batak": "Batk", "Bengali": "Beng", "Bhaiksuki": "Bhks",
    "Bopomofo": "Bopo", "Brahmi": "Brah", "Braille": "Brai",
    "Buginese": "Bugi", "Buhid": "Buhd", "Canadian_Aboriginal": "Cans",
    "Carian": "Cari", "Caucasian_Albanian": "Aghb", "Chakma": "Cakm",
    "Cham": "Cham", "Cherokee": "Cher", "Chorasmian": "Chrs",
    "Coptic": "Copt", "Cuneiform": "Xsux", "Cypriot": "Cprt",
    "Cypro_Minoan": "Cpmn", "Cyrillic": "Cyrl", "Deseret": "Dsrt",
    "Devanagari": "Deva", "Dives_Akuru": "Diak", "Dogra": "Dogr",
    "Duployan": "Dupl", "Egyptian_Hieroglyphs": "Egyp", "Elbasan": "Elba",
    "Elymaic": "Elym", "Ethiopic": "Ethi", "Garay": "Gara",
    "Georgian": "Geor", "Glagolitic": "Glag", "Gothic": "Goth",
    "Grantha": "Gran", "Greek": "Grek", "Gujarati": "Gujr",
    "Gunjala_Gondi": "Gong", "Gurmukhi": "Guru", "Gurung_Khema": "Gukh",
    "Han": "Hani", "Hangul": "Hang", "Hanifi_Rohingya": "Rohg",
    "Hanunoo": "Hano", "Hatran": "Hatr", "Hebrew": "Hebr",
    "Hiragana": "Hira", "Imperial_Aramaic": "Armi",
    "Inscriptional_Pahlavi": "Phli", "Inscriptional_Parthian": "Prti",
    "Javanese": "Java", "Kaithi": "Kthi", "Kannada": "Knda",
    "Katakana": "Kana", "Kawi": "Kawi", "Kayah_Li": "Kali",
    "Kharoshthi": "Khar", "Khitan_Small_Script": "Kits", "Khmer": "Khmr",
    "Khojki": "Khoj", "Khudawadi": "Sind", "Kirat_Rai": "Krai",
    "Lao": "Laoo", "Latin": "Latn", "Lepcha": "Lepc", "Limbu": "Limb",
    "Linear_A": "Lina", "Linear_B": "Linb", "Lisu": "Lisu",
    "Lycian": "Lyci", "Lydian": "Lydi", "Mahajani": "Mahj",
    "Makasar": "Maka", "Malayalam": "Mlym", "Mandaic": "Mand",
    "Manichaean": "Mani", "Marchen": "Marc", "Masaram_Gondi": "Gonm",
    "Medefaidrin": "Medf", "Meetei_Mayek": "Mtei", "Mende_Kikakui": "Mend",
    "Meroitic_Cursive": "Merc", "Meroitic_Hieroglyphs": "Mero",
    "Miao": "Plrd", "Modi": "Modi", "Mongolian": "Mong", "Mro": "Mroo",
    "Multani": "Mult", "Myanmar": "Mymr", "Nabataean": "Nbat",
    "Nag_Mundari": "Nagm", "Nandinagari": "Nand", "New_Tai_Lue": "Talu",
    "Newa": "Newa", "Nko": "Nkoo", "Nushu": "Nshu",
    "Nyiakeng_Puachue_Hmong": "Hmnp", "Ogham": "Ogam", "Ol_Chiki": "Olck",
    "Ol_Onal": "Onao", "Old_Hungarian": "Hung", "Old_Italic": "Ital",
    "Old_North_Arabian": "Narb", "Old_Permic": "Perm",
    "Old_Persian": "Xpeo", "Old_Sogdian": "Sogo",
    "Old_South_Arabian": "Sarb", "Old_Turkic": "Orkh",
    "Old_Uyghur": "Ougr", "Oriya": "Orya", "Osage": "Osge",
    "Osmanya": "Osma", "Pahawh_Hmong": "Hmng", "Palmyrene": "Palm",
    "Pau_Cin_Hau": "Pauc", "Phags_Pa": "Phag", "Phoenician": "Phnx",
    "Psalter_Pahlavi": "Phlp", "Rejang": "Rjng", "Runic": "Runr",
    "Samaritan": "Samr", "Saurashtra": "Saur", "Sharada": "Shrd",
    "Shavian": "Shaw", "Siddham": "Sidd", "SignWriting": "Sgnw",
    "Sinhala": "Sinh", "Sogdian": "Sogd", "Sora_Sompeng": "Sora",
    "Soyombo": "Soyo", "Sundanese": "Sund", "Sunuwar": "Sunu",
    "Syloti_Nagri": "Sylo", "Syriac": "Syrc", "Tagalog": "Tglg",
    "Tagbanwa": "Tagb", "Tai_Le": "Tale", "Tai_Tham": "Lana",
    "Tai_Viet": "Tavt", "Takri": "Takr", "Tamil": "Taml",
    "Tangsa": "Tnsa", "Tangut": "Tang", "Telugu": "Telu",
    "Thaana": "Thaa", "Thai": "Thai", "Tibetan": "Tibt",
    "Tifinagh": "Tfng", "Tirhuta": "Tirh", "Todhri": "Todr",
    "Toto": "Toto", "Tulu_Tigalari": "Tutg", "Ugaritic": "Ugar",
    "Vai": "Vaii", "Vithkuqi": "Vith", "Wancho": "Wcho",
    "Warang_Citi": "Wara", "Yezidi": "Yezi", "Yi": "Yiii",
    "Zanabazar_Square": "Zanb",
    # Common/Inherited are deliberately absent: code points carrying them
    # are ignored by script detection.
}

UCD_LINE = re.compile(
    r"^([0-9A-F]{4,6})(?:\.\.([0-9A-F]{4,6}))?\s*;\s*([A-Za-z_]+)")


def parse_ucd(path, wanted=None):
    """Parse a UCD property file into {value: [(lo, hi), ...]}."""
    ranges = defaultdict(list)
    with open(path, encoding="utf-8") as f:
        for line in f:
            m = UCD_LINE.match(line)
            if not m:
                continue
            lo = int(m.group(1), 16)
            hi = int(m.group(2), 16) if m.group(2) else lo
            value = m.group(3)
            if wanted is not None and value not in wanted:
                continue
            ranges[value].append((lo, hi))
    return ranges


def merge(ranges):
    """Sort and coalesce adjacent/overlapping (lo, hi) ranges."""
    out = []
    for lo, hi in sorted(ranges):
        if out and lo <= out[-1][1] + 1:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def parse_unicode_version(path):
    with open(path, encoding="utf-8") as f:
        for line in f:
            m = re.search(r"Version:?\s*([0-9.]+)", line)
            if m:
                return m.group(1)
            if not line.startswith("#"):
                break
    return "unknown"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scripts", required=True, help="UCD Scripts.txt")
    ap.add_argument("--emoji", required=True, help="UCD emoji-data.txt")
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    version = parse_unicode_version(args.scripts)
    script_ranges = parse_ucd(args.scripts, wanted=set(SCRIPT_CODES))
    emoji_ranges = parse_ucd(args.emoji, wanted={"Emoji_Presentation"})

    missing = sorted(set(SCRIPT_CODES) - set(script_ranges))
    if missing:
        print(f"note: scripts absent from {args.scripts}: {missing}")

    with open(args.out, "w", encoding="utf-8") as f:
        f.write(
            '"""Frozen Unicode property tables.\n'
            "\n"
            f"Generated from the Unicode {version} Character Database\n"
            "(Scripts.txt and emoji-data.txt) by tools/gen_unicode_data.py.\n"
            "Do not edit by hand.\n"
            '"""\n\n'
            f'UNICODE_VERSION = "{version}"\n\n'
        )
        f.write("# Emoji_Presentation=Yes code point ranges, inclusive.\n")
        f.write("EMOJI_PRESENTATION = (\n")
        for lo, hi in merge(emoji_ranges["Emoji_Presentation"]):
            f.write(f"    (0x{lo:05X}, 0x{hi:05X}),\n")
        f.write(")\n\n")
        f.write(
            "# Script property ranges keyed by ISO 15924 code, inclusive.\n"
            "# Common, Inherited, and unassigned code points are absent.\n")
        f.write("SCRIPT_RANGES = {\n")
        for name in sorted(script_ranges, key=lambda n: SCRIPT_CODES[n]):
            code = SCRIPT_CODES[name]
            f.write(f'    "{code}": (\n')
            for lo, hi in merge(script_ranges[name]):
                f.write(f"        (0x{lo:05X}, 0x{hi:05X}),\n")
            f.write("    ),\n")
        f.write("}\n")
    print(f"wrote {args.out} (Unicode {version}, "
          f"{len(script_ranges)} scripts, "
          f"{len(emoji_ranges['Emoji_Presentation'])} emoji ranges)")


if __name__ == "__main__":
    main()
