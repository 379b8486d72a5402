"""Closed affix inventory, morphophonemic prefix rules, and combination constraints.

Prefix separation works on the surface form and may propose several
remainders (the dictionary picks the real one); prefix generation is the
deterministic inverse that re-attaches a prefix to a stem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import NoGenerationRule

VOWELS = frozenset("aiueo")
CONSONANTS = frozenset("bcdfghjklmnpqrstvwxyz")
LETTERS = VOWELS | CONSONANTS

PREFIXES = ("me", "ber", "ter", "di", "ke", "se", "pe", "per")
SUFFIXES_DS = ("kan", "i", "an")
SUFFIXES_PP = ("ku", "mu", "nya")
PARTICLES = ("lah", "kah", "tah")

# Enforced prefix/suffix pairs that never co-occur.
DISALLOWED_PAIRS = frozenset(
    [
        ("ber", "i"),
        ("di", "an"),
        ("ke", "i"),
        ("ke", "kan"),
        ("me", "an"),
        ("ter", "an"),
    ]
)

# per-/-an is sometimes listed as disallowed, but attested forms (perairan,
# perbuatannya, perjalanan) use exactly that pair, so the entry is kept for
# documentation and not enforced.
DOCUMENTED_ONLY_PAIRS = frozenset([("per", "an")])

# Common (informative, non-restrictive) prefix/suffix combinations.
COMMON_COMBINATIONS = (
    (("me", "per", "ber", "ter", "di"), "kan"),
    (("me", "per", "ter", "di"), "i"),
    (("ber", "ke"), "an"),
)

# k-initial loanword roots that keep their k under meng- instead of eliding it
# (mengkalkulasi, not *mengalkulasi).
NONELIDED_K_ROOTS = frozenset(["kalkulasi"])


def _v(ch: str) -> bool:
    return ch in VOWELS


def _c(ch: str) -> bool:
    return ch in CONSONANTS


@dataclass(frozen=True)
class PrefixRule:
    """One surface-pattern row: matches a surface and proposes root remainders."""

    id: str
    prefix: str
    pattern: str
    matcher: Callable[[str], list]
    example: str = ""

    def remainders(self, surface: str) -> list:
        return self.matcher(surface)


def _ber1(s):
    # ber~ V... | be~ rV...
    if s.startswith("ber") and len(s) > 3 and _v(s[3]):
        return [s[3:], s[2:]]
    return []


def _ber2(s):
    # ber~ CAP... where C != 'r' and P != 'er'
    if s.startswith("ber") and len(s) >= 5 and _c(s[3]) and s[3] != "r":
        rem = s[3:]
        if rem[2:4] != "er":
            return [rem]
    return []


def _ber3(s):
    # ber~ CAerV... where C != 'r'  (surface "be" + C..erV root)
    if s.startswith("be") and len(s) >= 6 and _c(s[2]) and s[2] != "r":
        if s[3:5] == "er" and _v(s[5]):
            return [s[2:]]
    return []


def _ber4(s):
    # bel~ ajar...
    if s.startswith("belajar"):
        return ["ajar" + s[7:]]
    return []


def _ber5(s):
    # be~ C1erC2... where C1 not in {'r', 'l'}
    if s.startswith("be") and len(s) >= 6 and _c(s[2]) and s[2] not in "rl":
        if s[3:5] == "er" and _c(s[5]):
            return [s[2:]]
    return []


def _ter6(s):
    # te~ rV... (plus the plain ter~ V... reading for vowel-initial roots)
    if s.startswith("ter") and len(s) > 3 and _v(s[3]):
        return [s[2:], s[3:]]
    return []


def _ter7(s):
    # ter~ CerV... where C != 'r'
    if s.startswith("ter") and len(s) >= 7 and _c(s[3]) and s[3] != "r":
        if s[4:6] == "er" and _v(s[6]):
            return [s[3:]]
    return []


def _ter8(s):
    # ter~ CP...
    if s.startswith("ter") and len(s) >= 5 and _c(s[3]) and s[3] != "r":
        return [s[3:]]
    return []


def _me1(s):
    # me~ {l|r|w|y}V...
    if s.startswith("me") and len(s) >= 4 and s[2] in "lrwy" and _v(s[3]):
        return [s[2:]]
    return []


def _me2(s):
    # mem~ {b|f|v}...
    if s.startswith("mem") and len(s) >= 5 and s[3] in "bfv":
        return [s[3:]]
    return []


def _me3(s):
    # mem~ pe...  (stem itself carries a pe-/per- prefix)
    if s.startswith("mempe"):
        return [s[3:]]
    return []


def _me4(s):
    # me~ m{rV|V}... | me~ p{rV|V}...
    out = []
    if s.startswith("mem") and len(s) >= 4:
        if _v(s[3]) or (s[3] == "r" and len(s) >= 5 and _v(s[4])):
            out.append(s[2:])          # root keeps its m
            out.append("p" + s[3:])    # elided p restored
        if s[3] == "p" and len(s) >= 6 and s[4] == "r" and _v(s[5]):
            out.append(s[3:])          # pr- cluster keeps its p
    return out


def _me5(s):
    # men~ {c|d|j|z}...
    if s.startswith("men") and len(s) >= 5 and s[3] in "cdjz":
        return [s[3:]]
    return []


def _me6(s):
    # me~ nV... | me~ tV...
    if s.startswith("men") and len(s) >= 4 and _v(s[3]):
        return [s[2:], "t" + s[3:]]
    return []


def _me7(s):
    # meng~ {g|h|q|k}...
    if s.startswith("meng") and len(s) >= 6 and s[4] in "ghqk":
        return [s[4:]]
    return []


def _me8(s):
    # meng~ V... | meng~ kV...
    if s.startswith("meng") and len(s) >= 5 and _v(s[4]):
        return [s[4:], "k" + s[4:]]
    return []


def _me9(s):
    # meny~ sV...
    if s.startswith("meny") and len(s) >= 5 and _v(s[4]):
        return ["s" + s[4:]]
    return []


def _me10(s):
    # mem~ pV... where V != 'e' (same remainder as the p-elision in me.4)
    if s.startswith("mem") and len(s) >= 4 and _v(s[3]) and s[3] != "e":
        return ["p" + s[3:]]
    return []


def _pe1(s):
    # pe~ wV...
    if s.startswith("pew") and len(s) >= 4 and _v(s[3]):
        return [s[2:]]
    return []


def _per2(s):
    # per~ V...
    if s.startswith("per") and len(s) > 3 and _v(s[3]):
        return [s[3:]]
    return []


def _pe2(s):
    # pe~ rV...
    if s.startswith("per") and len(s) > 3 and _v(s[3]):
        return [s[2:]]
    return []


def _per3(s):
    # per~ CAP... where C != 'r' and P != 'er'
    if s.startswith("per") and len(s) >= 5 and _c(s[3]) and s[3] != "r":
        rem = s[3:]
        if rem[2:4] != "er":
            return [rem]
    return []


def _pe4(s):
    # pem~ {b|f}...
    if s.startswith("pem") and len(s) >= 5 and s[3] in "bf":
        return [s[3:]]
    return []


def _pe4m(s):
    # pe~ m{rV|V}... | pe~ p{rV|V}...  (analog of me.4, needed for pe~ makan)
    out = []
    if s.startswith("pem") and len(s) >= 4:
        if _v(s[3]) or (s[3] == "r" and len(s) >= 5 and _v(s[4])):
            out.append(s[2:])
            out.append("p" + s[3:])
    return out


def _pe5(s):
    # pen~ {c|d}...
    if s.startswith("pen") and len(s) >= 5 and s[3] in "cd":
        return [s[3:]]
    return []


def _pe6(s):
    # pe~ nV... | pe~ tV...
    if s.startswith("pen") and len(s) >= 4 and _v(s[3]):
        return [s[2:], "t" + s[3:]]
    return []


def _pe7(s):
    # peng~ {g|h|k}...
    if s.startswith("peng") and len(s) >= 6 and s[4] in "ghk":
        return [s[4:]]
    return []


def _pe8(s):
    # peng~ V...
    if s.startswith("peng") and len(s) >= 5 and _v(s[4]):
        return [s[4:]]
    return []


def _pe9(s):
    # penye~ sV... (generalized to peny~ V)
    if s.startswith("peny") and len(s) >= 5 and _v(s[4]):
        return ["s" + s[4:]]
    return []


def _pe10(s):
    # pe~ lV... except: pelajar -> pe~ ajar
    if s.startswith("pelajar"):
        return ["ajar" + s[7:]]
    if s.startswith("pel") and len(s) >= 4 and _v(s[3]):
        return [s[2:]]
    return []


def _pe11(s):
    # pe~ C... for rows the source tables leave implicit (pejalan -> pe~ jalan)
    if s.startswith("pe") and len(s) >= 4 and s[2] in "jqvxyz":
        return [s[2:]]
    return []


def _literal(prefix: str):
    def matcher(s, prefix=prefix):
        if s.startswith(prefix) and len(s) > len(prefix):
            return [s[len(prefix):]]
        return []

    return matcher


PREFIX_RULES = (
    PrefixRule("ber.1", "ber", "ber~ V... | be~ rV...", _ber1, "berencana -> ber~ rencana"),
    PrefixRule("ber.2", "ber", "ber~ CAP... (C != r, P != er)", _ber2, "berhasil -> ber~ hasil"),
    PrefixRule("ber.3", "ber", "ber~ CAerV... (C != r)", _ber3, "beserakan -> ber~ serak ~an"),
    PrefixRule("ber.4", "ber", "bel~ ajar...", _ber4, "belajar -> ber~ ajar"),
    PrefixRule("ber.5", "ber", "be~ C1erC2... (C1 not in {r, l})", _ber5, "beterbangan -> ber~ terbang ~an"),
    PrefixRule("ter.6", "ter", "te~ rV... | ter~ V...", _ter6, "terendah -> ter~ rendah"),
    PrefixRule("ter.7", "ter", "ter~ CerV... (C != r)", _ter7, "terjerumus -> ter~ jerumus"),
    PrefixRule("ter.8", "ter", "ter~ CP...", _ter8, "tersisa -> ter~ sisa"),
    PrefixRule("me.1", "me", "me~ {l|r|w|y}V...", _me1, "meraih -> me~ raih"),
    PrefixRule("me.2", "me", "mem~ {b|f|v}...", _me2, "membedakan -> me~ beda ~kan"),
    PrefixRule("me.3", "me", "mem~ pe...", _me3, "mempertahankan -> me~ per~ tahan ~kan"),
    PrefixRule("me.4", "me", "me~ m{rV|V}... | me~ p{rV|V}...", _me4, "memukul -> me~ pukul"),
    PrefixRule("me.5", "me", "men~ {c|d|j|z}...", _me5, "mencoba -> me~ coba"),
    PrefixRule("me.6", "me", "me~ nV... | me~ tV...", _me6, "menulis -> me~ tulis"),
    PrefixRule("me.7", "me", "meng~ {g|h|q|k}...", _me7, "menggunakan -> me~ guna ~kan"),
    PrefixRule("me.8", "me", "meng~ V... | meng~ kV...", _me8, "mengasihi -> me~ kasih ~i"),
    PrefixRule("me.9", "me", "meny~ sV...", _me9, "menyelamatkan -> me~ selamat ~kan"),
    PrefixRule("me.10", "me", "mem~ pV... (V != e)", _me10, "memikirkan -> me~ pikir ~kan"),
    PrefixRule("pe.1", "pe", "pe~ wV...", _pe1, "pewakaf -> pe~ wakaf"),
    PrefixRule("pe.2a", "per", "per~ V...", _per2, "perairan -> per~ air ~an"),
    PrefixRule("pe.2b", "pe", "pe~ rV...", _pe2, "peraih -> pe~ raih"),
    PrefixRule("pe.3", "per", "per~ CAP... (C != r, P != er)", _per3, "perbuatannya -> per~ buat ~an ~nya"),
    PrefixRule("pe.4", "pe", "pem~ {b|f}...", _pe4, "pembunuhan -> pe~ bunuh ~an"),
    PrefixRule("pe.4m", "pe", "pe~ m{rV|V}... | pe~ p{rV|V}...", _pe4m, "pemakan -> pe~ makan"),
    PrefixRule("pe.5", "pe", "pen~ {c|d}...", _pe5, "pendidik -> pe~ didik"),
    PrefixRule("pe.6", "pe", "pe~ nV... | pe~ tV...", _pe6, "penabur -> pe~ tabur"),
    PrefixRule("pe.7", "pe", "peng~ {g|h|k}...", _pe7, "pengkultusan -> pe~ kultus ~an"),
    PrefixRule("pe.8", "pe", "peng~ V...", _pe8, "pengakuan -> pe~ aku ~an"),
    PrefixRule("pe.9", "pe", "penye~ sV...", _pe9, "penyesalan -> pe~ sesal ~an"),
    PrefixRule("pe.10", "pe", "pe~ lV... (except pelajar -> pe~ ajar)", _pe10, "pelumas -> pe~ lumas"),
    PrefixRule("pe.11", "pe", "pe~ C... (implicit plain rows)", _pe11, "pejalan -> pe~ jalan"),
    PrefixRule("di.1", "di", "di~ A...", _literal("di"), "dimakan -> di~ makan"),
    PrefixRule("ke.1", "ke", "ke~ A...", _literal("ke"), "kebutuhan -> ke~ butuh ~an"),
    PrefixRule("se.1", "se", "se~ A...", _literal("se"), "sejalan -> se~ jalan"),
)


# Every rule requires a fixed two-letter surface head; bucketing by it skips
# the rules that cannot match.
_RULES_BY_HEAD = {}
for _rule in PREFIX_RULES:
    _head = {"ber": "be", "ter": "te", "me": "me", "pe": "pe", "per": "pe"}.get(
        _rule.prefix, _rule.prefix
    )
    _RULES_BY_HEAD.setdefault(_head, []).append(_rule)
_RULES_BY_HEAD = {head: tuple(rs) for head, rs in _RULES_BY_HEAD.items()}


@lru_cache(maxsize=1 << 17)
def strip_prefix_candidates(surface: str) -> tuple:
    """All (prefix, remainder, rule_id) readings of a lowercase surface form."""
    out = []
    seen = set()
    for rule in _RULES_BY_HEAD.get(surface[:2], ()):
        for rem in rule.remainders(surface):
            if rem and rem != surface and (rule.prefix, rem) not in seen:
                seen.add((rule.prefix, rem))
                out.append((rule.prefix, rem, rule.id))
    return tuple(out)


def strip_suffix_chain(surface: str) -> list:
    """All consistent (core, ds, pp, p) strippings, including the empty one.

    Slots strip in reverse surface order: particle, then possessive pronoun,
    then derivational suffix; each slot appears at most once.
    """
    results = []
    for p in _slot_options(surface, PARTICLES):
        rest1 = surface[: len(surface) - len(p)] if p else surface
        for pp in _slot_options(rest1, SUFFIXES_PP):
            rest2 = rest1[: len(rest1) - len(pp)] if pp else rest1
            for ds in _slot_options(rest2, SUFFIXES_DS):
                core = rest2[: len(rest2) - len(ds)] if ds else rest2
                if core:
                    results.append((core, ds or None, pp or None, p or None))
    return results


def _slot_options(surface: str, names: tuple) -> list:
    opts = [""]
    for name in names:
        if surface.endswith(name) and len(surface) > len(name):
            opts.append(name)
    return opts


def is_allowed(prefixes, ds: Optional[str]) -> bool:
    """True unless some (prefix, ds) pair is in the disallowed table."""
    if ds is None:
        return True
    return all((p, ds) not in DISALLOWED_PAIRS for p in prefixes)


def generate_prefix(prefix: str, stem: str, derived: bool = False) -> str:
    """Attach a prefix to a stem, selecting the allomorph from the stem's shape.

    ``derived`` marks stems that already carry an inner prefix; sound changes
    that elide the stem's first letter only apply to bare roots.
    """
    if not stem:
        raise NoGenerationRule(prefix, stem)
    if prefix in ("di", "ke", "se", "per"):
        return prefix + stem
    if prefix == "ter":
        return ("te" if stem[0] == "r" else "ter") + stem
    if prefix == "ber":
        return _generate_ber(stem)
    if prefix == "me":
        return _generate_me(stem, elide=not derived)
    if prefix == "pe":
        return _generate_pe(stem, elide=not derived)
    raise NoGenerationRule(prefix, stem)


def _generate_ber(stem: str) -> str:
    if stem.startswith("ajar"):
        return "bel" + stem
    if stem[0] == "r":
        return "be" + stem
    if len(stem) >= 4 and _c(stem[0]) and stem[0] not in "rl" and stem[1:3] == "er":
        return "be" + stem
    return "ber" + stem


def _generate_me(stem: str, elide: bool) -> str:
    c0 = stem[0]
    nxt = stem[1] if len(stem) > 1 else ""
    if c0 in "lrwy" and _v(nxt):
        return "me" + stem
    if c0 in "bfv":
        return "mem" + stem
    if stem.startswith("pe") and not elide:
        return "mem" + stem
    if c0 == "m" and (_v(nxt) or (nxt == "r" and len(stem) > 2 and _v(stem[2]))):
        return "me" + stem
    if c0 == "p":
        if nxt == "r" and len(stem) > 2 and _v(stem[2]):
            return "mem" + stem
        if _v(nxt) and elide:
            return "mem" + stem[1:]
    if c0 in "cdjz":
        return "men" + stem
    if c0 == "n" and _v(nxt):
        return "me" + stem
    if c0 == "t" and _v(nxt) and elide:
        return "men" + stem[1:]
    if c0 in "ghq":
        return "meng" + stem
    if c0 == "k":
        if _v(nxt) and elide and stem not in NONELIDED_K_ROOTS:
            return "meng" + stem[1:]
        return "meng" + stem
    if _v(c0):
        return "meng" + stem
    if c0 == "s" and _v(nxt) and elide:
        return "meny" + stem[1:]
    raise NoGenerationRule("me", stem)


def _generate_pe(stem: str, elide: bool) -> str:
    c0 = stem[0]
    nxt = stem[1] if len(stem) > 1 else ""
    if stem.startswith("ajar"):
        return "pel" + stem
    if stem.startswith("pe") and not elide:
        return "pem" + stem
    if c0 in "bf":
        return "pem" + stem
    if c0 in "cd":
        return "pen" + stem
    if c0 in "ghk":
        return "peng" + stem
    if _v(c0):
        return "peng" + stem
    if c0 == "m" and (_v(nxt) or (nxt == "r" and len(stem) > 2 and _v(stem[2]))):
        return "pe" + stem
    if c0 == "n" and _v(nxt):
        return "pe" + stem
    if c0 == "p" and _v(nxt) and elide:
        return "pem" + stem[1:]
    if c0 == "s" and _v(nxt) and elide:
        return "peny" + stem[1:]
    if c0 == "t" and _v(nxt) and elide:
        return "pen" + stem[1:]
    if c0 in "wlr" and _v(nxt):
        return "pe" + stem
    if c0 in "jqvxyz":
        return "pe" + stem
    raise NoGenerationRule("pe", stem)


def dump_rules() -> str:
    """Machine-readable report of every rule table (for documentation tests)."""
    lines = ["# prefix separation rules"]
    for r in PREFIX_RULES:
        lines.append(f"rule\t{r.id}\t{r.prefix}\t{r.pattern}\t{r.example}")
    lines.append("# suffix inventory")
    lines.append("ds\t" + " ".join(SUFFIXES_DS))
    lines.append("pp\t" + " ".join(SUFFIXES_PP))
    lines.append("p\t" + " ".join(PARTICLES))
    lines.append("# disallowed prefix/suffix pairs (enforced)")
    for pfx, ds in sorted(DISALLOWED_PAIRS):
        lines.append(f"disallowed\t{pfx}\t{ds}")
    lines.append("# listed as disallowed but contradicted by attested forms (not enforced)")
    for pfx, ds in sorted(DOCUMENTED_ONLY_PAIRS):
        lines.append(f"documented-only\t{pfx}\t{ds}")
    lines.append("# common prefix/suffix combinations (informative)")
    for pfxs, ds in COMMON_COMBINATIONS:
        lines.append("common\t" + ",".join(pfxs) + "\t" + ds)
    return "\n".join(lines)
