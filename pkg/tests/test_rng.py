from collections import Counter

from hypothesis import given, settings, strategies as st

from mdmlink.rng import SplitMix64


class TestDeterminism:
    def test_same_seed_same_stream(self):
        a = SplitMix64(5)
        b = SplitMix64(5)
        assert [a.next_u64() for _ in range(100)] == [
            b.next_u64() for _ in range(100)]

    def test_fork_independent_of_draw_order(self):
        a = SplitMix64(5)
        a.random()
        a.random()
        forked_late = [a.fork("x").next_u64() for _ in range(3)]
        b = SplitMix64(5)
        forked_early = [b.fork("x").next_u64() for _ in range(3)]
        # forks derive from the construction seed, not from stream position
        assert SplitMix64(5).fork("x").next_u64() == SplitMix64(5).fork("x").next_u64()
        assert forked_late[0] == forked_early[0]

    def test_distinct_labels_distinct_streams(self):
        base = SplitMix64(5)
        assert base.fork("a").next_u64() != base.fork("b").next_u64()


class TestRanges:
    @given(st.integers(0, 2**32), st.integers(0, 50), st.integers(0, 50))
    @settings(max_examples=100, deadline=None)
    def test_randint_inclusive_bounds(self, seed, lo, span):
        rng = SplitMix64(seed)
        hi = lo + span
        for _ in range(20):
            v = rng.randint(lo, hi)
            assert lo <= v <= hi

    def test_random_unit_interval(self):
        rng = SplitMix64(9)
        for _ in range(1000):
            v = rng.random()
            assert 0.0 <= v < 1.0

    def test_randint_covers_range(self):
        rng = SplitMix64(3)
        seen = {rng.randint(0, 3) for _ in range(200)}
        assert seen == {0, 1, 2, 3}


class TestCollections:
    def test_shuffle_is_permutation(self):
        rng = SplitMix64(1)
        items = list(range(30))
        shuffled = list(items)
        rng.shuffle(shuffled)
        assert sorted(shuffled) == items

    def test_sample_distinct(self):
        rng = SplitMix64(2)
        got = rng.sample(list(range(50)), 10)
        assert len(set(got)) == 10

    def test_weighted_choice_respects_weights(self):
        rng = SplitMix64(4)
        counts = Counter(rng.weighted_choice(["a", "b"], [9.0, 1.0])
                         for _ in range(5000))
        assert counts[0] > counts[1] * 4
