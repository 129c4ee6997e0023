import itertools

from hypothesis import strategies as st

from qcrystals import core
from qcrystals import tableaux

@st.composite
def word_strategy(draw, n = 3, max_len = 6):
    return(tuple(draw(st.lists(st.integers(min_value = 1, max_value = n), min_size = 1, max_size = max_len))))

@st.composite
def strict_partition_strategy(draw, max_size = 7, max_len = None):
    size = draw(st.integers(min_value = 1, max_value = max_size))
    return(draw(st.sampled_from(core.strict_partitions(size, max_len))))

@st.composite
def ssdt_strategy(draw, n = 3, max_size = 5):
    shape = draw(strict_partition_strategy(max_size = max_size, max_len = n))
    return(draw(st.sampled_from(tableaux.enumerate_ssdt(shape, n))))

def all_words(n, N):
    return([w for k in range(1, N + 1) for w in itertools.product(range(1, n + 1), repeat = k)])
