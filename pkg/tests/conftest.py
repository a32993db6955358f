from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def fractions(lo=-6, hi=6, max_den=8):
    return st.builds(Fraction, st.integers(lo * max_den, hi * max_den),
                     st.integers(1, max_den))


def int_polys(min_deg=1, max_deg=6, bound=20):
    return st.lists(st.integers(-bound, bound), min_size=min_deg + 1,
                    max_size=max_deg + 1).filter(lambda cs: cs[-1] != 0)
