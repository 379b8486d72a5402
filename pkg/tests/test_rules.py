import pytest
from hypothesis import given
from hypothesis import strategies as st

from morfo import generate_prefix, is_allowed, strip_prefix_candidates, strip_suffix_chain
from morfo.errors import NoGenerationRule
from morfo.rules import (
    CONSONANTS,
    DISALLOWED_PAIRS,
    LETTERS,
    PREFIX_RULES,
    PREFIXES,
    SUFFIXES_DS,
    VOWELS,
    dump_rules,
)

lower_words = st.text(alphabet=sorted(LETTERS), min_size=1, max_size=15)


def candidates(surface):
    return {(p, r) for p, r, _ in strip_prefix_candidates(surface)}


def test_character_classes_partition_the_alphabet():
    assert VOWELS & CONSONANTS == frozenset()
    assert VOWELS | CONSONANTS == frozenset("abcdefghijklmnopqrstuvwxyz")


def test_table_row_examples_strip():
    assert ("ber", "rencana") in candidates("berencana")
    assert ("ber", "hasil") in candidates("berhasil")
    assert ("ber", "bercak") in candidates("bebercak")
    assert ("ber", "ajar") in candidates("belajar")
    assert ("ber", "terbang") in candidates("beterbang")
    assert ("ter", "rendah") in candidates("terendah")
    assert ("ter", "jerumus") in candidates("terjerumus")
    assert ("ter", "sisa") in candidates("tersisa")
    assert ("me", "tulis") in candidates("menulis")
    assert ("me", "nulis") in candidates("menulis")  # the nV reading of the same row
    assert ("pe", "sesal") in candidates("penyesal")
    assert ("pe", "makan") in candidates("pemakan")
    assert ("per", "air") in candidates("perair")
    assert candidates("makan") == set()


def test_per_rule_round_trip_on_table_examples():
    # For every rule, stripping its example surface and regenerating must
    # reproduce the surface exactly.
    cases = [
        ("ber", "berencana", "rencana"),
        ("ber", "berhasil", "hasil"),
        ("ber", "bebercak", "bercak"),
        ("ber", "belajar", "ajar"),
        ("ber", "beterbang", "terbang"),
        ("ter", "terendah", "rendah"),
        ("ter", "terjerumus", "jerumus"),
        ("ter", "tersisa", "sisa"),
        ("me", "melebih", "lebih"),
        ("me", "meraih", "raih"),
        ("me", "mewujud", "wujud"),
        ("me", "meyakin", "yakin"),
        ("me", "membeda", "beda"),
        ("me", "memfasilitas", "fasilitas"),
        ("me", "memviral", "viral"),
        ("me", "memukul", "pukul"),
        ("me", "memprakarsa", "prakarsa"),
        ("me", "memerkosa", "perkosa"),
        ("me", "mencoba", "coba"),
        ("me", "mendapat", "dapat"),
        ("me", "menjadi", "jadi"),
        ("me", "menzalim", "zalim"),
        ("me", "menilai", "nilai"),
        ("me", "menulis", "tulis"),
        ("me", "mengguna", "guna"),
        ("me", "mengharap", "harap"),
        ("me", "mengqisash", "qisash"),
        ("me", "mengkalkulasi", "kalkulasi"),
        ("me", "menganggap", "anggap"),
        ("me", "mengasih", "kasih"),
        ("me", "menyelamat", "selamat"),
        ("me", "memikir", "pikir"),
        ("pe", "pewakaf", "wakaf"),
        ("pe", "peraih", "raih"),
        ("per", "perair", "air"),
        ("per", "perbuat", "buat"),
        ("pe", "pembunuh", "bunuh"),
        ("pe", "pemfaktor", "faktor"),
        ("pe", "pencapai", "capai"),
        ("pe", "pendidik", "didik"),
        ("pe", "penasehat", "nasehat"),
        ("pe", "penabur", "tabur"),
        ("pe", "penggelap", "gelap"),
        ("pe", "pengharga", "harga"),
        ("pe", "pengkultus", "kultus"),
        ("pe", "pengaku", "aku"),
        ("pe", "penyesal", "sesal"),
        ("pe", "pelumas", "lumas"),
        ("pe", "pelajar", "ajar"),
        ("di", "dimakan", "makan"),
        ("ke", "kebutuh", "butuh"),
        ("se", "sejalan", "jalan"),
    ]
    for prefix, surface, root in cases:
        assert (prefix, root) in candidates(surface), (surface, root)
        assert generate_prefix(prefix, root) == surface, (prefix, root)


def test_generate_prefix_documented_examples():
    assert generate_prefix("me", "tulis") == "menulis"
    assert generate_prefix("me", "nilai") == "menilai"
    assert generate_prefix("me", "pukul") == "memukul"
    assert generate_prefix("ber", "ajar") == "belajar"
    assert generate_prefix("ber", "terbang") == "beterbang"
    assert generate_prefix("di", "makan") == "dimakan"
    assert generate_prefix("pe", "sesal") == "penyesal"
    assert generate_prefix("per", "jalan") == "perjalan"


def test_generate_prefix_raises_when_no_rule_applies():
    with pytest.raises(NoGenerationRule):
        generate_prefix("me", "")
    with pytest.raises(NoGenerationRule):
        generate_prefix("me", "ter", derived=True)


def test_multi_prefix_generation_applies_innermost_first():
    inner = generate_prefix("per", "tahan")
    assert generate_prefix("me", inner, derived=True) == "mempertahan"
    inner = generate_prefix("ber", "untung")
    assert generate_prefix("ke", inner, derived=True) == "keberuntung"


def test_suffix_chain_examples():
    assert ("pokok", None, "nya", None) in strip_suffix_chain("pokoknya")
    assert ("makan", None, None, "lah") in strip_suffix_chain("makanlah")
    assert strip_suffix_chain("dia") == [("dia", None, None, None)]


def test_suffix_chain_respects_slot_order():
    # ds + pp + p in surface order: untung-an-mu-lah
    assert ("untung", "an", "mu", "lah") in strip_suffix_chain("untunganmulah")
    # empty stripping is always present
    assert ("untunganmulah", None, None, None) in strip_suffix_chain("untunganmulah")


def test_is_allowed_table():
    assert not is_allowed(["ber"], "i")
    assert is_allowed(["me"], "kan")
    assert is_allowed([], "an")
    assert is_allowed(["ke", "ber"], "an")
    assert not is_allowed(["ke", "ber"], "i")


def test_is_allowed_matrix_has_exactly_six_false_entries():
    false_pairs = {
        (p, ds) for p in PREFIXES for ds in SUFFIXES_DS if not is_allowed([p], ds)
    }
    assert false_pairs == set(DISALLOWED_PAIRS)
    assert len(false_pairs) == 6
    # per/-an is listed as disallowed but contradicted by attested forms,
    # so it is documented rather than enforced.
    assert is_allowed(["per"], "an")


@given(lower_words)
def test_strip_always_makes_progress(surface):
    for _, remainder, _ in strip_prefix_candidates(surface):
        assert remainder != surface
        assert len(remainder) < len(surface) + 2  # reconstructed letters bounded


@given(lower_words)
def test_strip_then_generate_round_trips(surface):
    for prefix, remainder, _ in strip_prefix_candidates(surface):
        try:
            regenerated = generate_prefix(prefix, remainder)
        except NoGenerationRule:
            continue
        # A remainder that regenerates at all either reproduces the surface
        # or belongs to an overlapping rule; both are valid candidates.
        assert regenerated.isalpha()


def test_dump_mentions_every_rule_id():
    text = dump_rules()
    for rule in PREFIX_RULES:
        assert rule.id in text
    assert "belajar" in text
    assert "documented-only\tper\tan" in text
