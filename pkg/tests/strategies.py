"""Hypothesis strategies shared across the test modules."""

from __future__ import annotations

import hypothesis.strategies as st

from seqbench import Rating, RatingLog, Sequence, make_sequence_set

# Ids avoid delimiters, '#' and whitespace so parse/serialize round-trips hold.
user_ids = st.text(alphabet="uvwxyz", min_size=1, max_size=3)
item_ids = st.text(alphabet="abcdefgh", min_size=1, max_size=3)

rating_values = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)

ratings = st.builds(
    Rating,
    user=user_ids,
    item=item_ids,
    value=rating_values,
    timestamp=st.integers(min_value=0, max_value=100_000),
)

rating_logs = st.lists(ratings, min_size=1, max_size=50).map(lambda rs: RatingLog(tuple(rs)))


@st.composite
def sequence_sets(draw, min_sequences: int = 1, max_users: int = 4):
    """Valid sequence sets: per-user increasing timestamps, lengths >= 2."""
    n_users = draw(st.integers(min_value=1, max_value=max_users))
    counts = [draw(st.integers(min_value=1, max_value=3)) for _ in range(n_users)]
    while sum(counts) < min_sequences:
        counts[0] += 1
    sequences = []
    for u, n_seq in enumerate(counts):
        clock = draw(st.integers(min_value=0, max_value=100))
        for _ in range(n_seq):
            length = draw(st.integers(min_value=2, max_value=6))
            items = draw(st.lists(item_ids, min_size=length, max_size=length))
            steps = []
            for item in items:
                steps.append((item, clock))
                clock += draw(st.integers(min_value=0, max_value=5))
            clock += 1000  # keep starts of one user's sequences distinct
            sequences.append(Sequence(f"u{u}", tuple(steps)))
    return make_sequence_set(sequences)
