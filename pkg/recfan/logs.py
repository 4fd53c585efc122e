from enum import Enum
from abc import ABC, abstractmethod


class LOGGER(Enum):
    LOCAL = 1
    SILENT = 2


class RecfanLogger(ABC):

    def __init__(self, *args, **kwargs):
        pass

    @abstractmethod
    def write(self, label, value):
        pass


class LocalLogger(RecfanLogger):

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        from rich.console import Console
        # stdout carries the JSON reports
        self.console = Console(stderr=True)
        return

    def write(self, label, value):
        self.console.print(f"[italic red]{label}[/italic red]:{value}")

        return


class SilentLogger(RecfanLogger):

    def write(self, label, value):
        pass


def logger_factory(label) -> RecfanLogger:
    if label == LOGGER.LOCAL:
        return LocalLogger
    else:
        return SilentLogger
