import json
from contextlib import contextmanager
from typing import List

from progress.bar import ChargingBar

from classes.errors import CapacityError


def check_capacity(estimate, capacity, force=False, what="computation"):
    """
    Refuses a computation whose column estimate exceeds the capacity threshold, unless forced

    :param estimate: the estimated number of columns
    :param capacity: the threshold
    :param force: bool, run anyway
    :param what: a label for the error message
    """
    if estimate > capacity and not force:
        raise CapacityError(estimate, capacity, what)


class _SilentBar:
    def next(self, n=1):
        pass


@contextmanager
def progress_bar(label, maximum, enabled=False):
    """
    A ChargingBar when enabled, otherwise a bar that ignores its updates

    :param label: string shown before the bar
    :param maximum: number of steps
    :param enabled: bool
    """
    if not enabled or maximum <= 0:
        yield _SilentBar()
        return
    with ChargingBar(label, max=maximum, suffix='%(percent)d%%') as bar:
        yield bar


def parse_range(text) -> List[int]:
    """
    Parses "1-13", "5,7,9" or "1-4,8" into a sorted list of integers

    :param text: string
    :return: list of ints
    """
    values = set()
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            start, end = part.split("-", 1)
            values.update(range(int(start), int(end) + 1))
        else:
            values.add(int(part))
    return sorted(values)


def dumps(payload) -> str:
    """
    Serializes a payload as stable, indented JSON (sorted keys) so repeated runs are byte-identical
    """
    return json.dumps(payload, indent=2, sort_keys=True)
