import pytest

from core.exceptions import ConfigError
from core.Execution import PoolExecutor, PoolType


@pytest.mark.parametrize("pool", list(PoolType))
def test_map_preserves_input_order(pool):
    with PoolExecutor(pool, max_workers=3) as executor:
        assert executor.map(abs, range(-10, 10), chunksize=4) == [abs(v) for v in range(-10, 10)]


def test_single_worker_is_serial():
    executor = PoolExecutor(PoolType.PROCESS, max_workers=1)
    assert executor.is_serial
    assert executor.map(abs, [-3]) == [3]
    executor.shutdown()


def test_parse_pool_names():
    assert PoolType.parse("thread") is PoolType.THREAD
    assert PoolType.parse(PoolType.SERIAL) is PoolType.SERIAL
    with pytest.raises(ConfigError) as excinfo:
        PoolType.parse("gpu")
    assert excinfo.value.extra_data["available"] == ["SERIAL", "THREAD", "PROCESS"]


def test_worker_count_must_be_positive():
    with pytest.raises(ConfigError):
        PoolExecutor(PoolType.THREAD, max_workers=0)
