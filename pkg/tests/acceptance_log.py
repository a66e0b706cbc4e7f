"""Per-criterion outcomes collected by the acceptance tests and printed at session end."""

from contextlib import contextmanager

RESULTS: dict[int, tuple[str, bool]] = {}


@contextmanager
def criterion(n: int, name: str):
    RESULTS[n] = (name, False)
    try:
        yield
    except BaseException:
        print(f"criterion {n} FAIL: {name}")
        raise
    RESULTS[n] = (name, True)
    print(f"criterion {n} PASS: {name}")
