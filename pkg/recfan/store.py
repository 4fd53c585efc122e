import json
import sys
from enum import Enum
from abc import ABC, abstractmethod
from pathlib import Path


class STORE(Enum):
    LOCAL = 1
    STDOUT = 2


class ReportStore(ABC):

    def __init__(self, *args, **kwargs):
        pass

    @abstractmethod
    def write_file(self, path, data, is_json=False):
        pass


def store_factory(label) -> ReportStore:
    if label == STORE.STDOUT:
        return StdoutStore
    else:
        return LocalStore


def _render(data, is_json):
    # no timestamps: identical inputs give byte-identical reports
    if is_json:
        return json.dumps(data, indent=2) + "\n"
    return data


class LocalStore(ReportStore):

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        return

    def write_file(self, path, data, is_json=False):
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            f.write(_render(data, is_json))

        return


class StdoutStore(ReportStore):
    """Ignores ``path`` and writes the report to standard output."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        return

    def write_file(self, path, data, is_json=False):
        sys.stdout.write(_render(data, is_json))
        sys.stdout.flush()

        return
