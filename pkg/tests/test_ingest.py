import pytest
from hypothesis import given

from seqbench import (
    EmptyAfterFilter,
    EmptyInput,
    MalformedLine,
    Rating,
    RatingLog,
    apply_support_filters,
    parse_ratings,
    serialize_ratings,
)

from .strategies import rating_logs


def test_parse_two_lines_in_order():
    log = parse_ratings("u1\ti1\t5\t100\nu1\ti2\t4\t200")
    assert len(log) == 2
    assert log.ratings[0] == Rating("u1", "i1", 5.0, 100)
    assert log.ratings[1] == Rating("u1", "i2", 4.0, 200)


def test_parse_arity_violation():
    with pytest.raises(MalformedLine) as excinfo:
        parse_ratings("u1\ti1\t5")
    assert excinfo.value.line_no == 1


def test_parse_empty_stream():
    with pytest.raises(EmptyInput):
        parse_ratings("")


def test_parse_skips_comments_and_blanks():
    log = parse_ratings("# header\n\nu1\ti1\t5\t100\n\n# trailing\n")
    assert len(log) == 1


def test_parse_comma_and_space_delimiters():
    assert parse_ratings("u1,i1,5,100", delimiter="comma").ratings[0].item == "i1"
    assert parse_ratings("u1  i1   5 100", delimiter="space").ratings[0].value == 5.0


def test_parse_reports_line_numbers():
    with pytest.raises(MalformedLine) as excinfo:
        parse_ratings("# comment\nu1\ti1\t5\t100\nu2\ti2\tfive\t100")
    assert excinfo.value.line_no == 3


@pytest.mark.parametrize(
    "line",
    [
        "u1\ti1\tfive\t100",  # non-numeric value
        "u1\ti1\t5\t1.5",  # non-integer timestamp
        "u1\ti1\t5\t-3",  # negative timestamp
        "u1\t\t5\t100",  # empty item id
        "u1\ti1\tnan\t100",  # non-finite value
        "u1\ti1\t5\t100\textra",  # five fields
    ],
)
def test_parse_malformed_lines(line):
    with pytest.raises(MalformedLine):
        parse_ratings(line)


def test_parse_unknown_delimiter():
    with pytest.raises(ValueError):
        parse_ratings("u1;i1;5;100", delimiter="semicolon")


@given(log=rating_logs)
def test_serialize_parse_round_trip(log):
    for delimiter in ("tab", "comma", "space"):
        text = serialize_ratings(log, delimiter)
        assert parse_ratings(text, delimiter) == log


def _log(*triples):
    return RatingLog(tuple(Rating(u, i, 1.0, t) for u, i, t in triples))


def test_filter_drops_light_users():
    log = _log(("u1", "a", 1), ("u1", "b", 2), ("u1", "c", 3), ("u2", "a", 4))
    filtered = apply_support_filters(log, min_user_ratings=2, min_item_ratings=0)
    assert [r.user for r in filtered] == ["u1", "u1", "u1"]


def test_filter_zero_thresholds_are_identity():
    log = _log(("u1", "a", 1), ("u2", "b", 2))
    assert apply_support_filters(log, 0, 0) == log
    assert apply_support_filters(log, 1, 1) == log


def test_filter_two_pass_removes_items_orphaned_by_user_pass():
    # Hand-enumerated: u2 and u3 fall to the user pass (one rating each).
    # That leaves item j with a single rating via u1, under min_item_ratings=2,
    # so the second pass removes j's remaining rating while keeping i1 (count 2).
    log = _log(
        ("u1", "i1", 100),
        ("u1", "j", 200),
        ("u1", "i1", 300),
        ("u2", "j", 400),
        ("u3", "i1", 500),
    )
    filtered = apply_support_filters(log, min_user_ratings=2, min_item_ratings=2)
    assert [(r.user, r.item) for r in filtered] == [("u1", "i1"), ("u1", "i1")]


def test_filter_everything_gone():
    log = _log(("u1", "a", 1), ("u2", "b", 2))
    with pytest.raises(EmptyAfterFilter):
        apply_support_filters(log, min_user_ratings=5, min_item_ratings=0)


def test_filter_rejects_negative_thresholds():
    log = _log(("u1", "a", 1))
    with pytest.raises(ValueError):
        apply_support_filters(log, -1, 0)


@given(log=rating_logs)
def test_filter_output_is_subsequence(log):
    try:
        filtered = apply_support_filters(log, 2, 2)
    except EmptyAfterFilter:
        return
    iterator = iter(log.ratings)
    assert all(any(r is candidate for candidate in iterator) for r in filtered.ratings)


@given(log=rating_logs)
def test_filter_idempotent_when_item_threshold_zero(log):
    try:
        once = apply_support_filters(log, 3, 0)
    except EmptyAfterFilter:
        return
    assert apply_support_filters(once, 3, 0) == once
