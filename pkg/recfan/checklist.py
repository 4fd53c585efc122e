import json
from abc import ABC
from functools import wraps

from recfan.logs import LOGGER, logger_factory


def complex_check(check_type: str, order: int = 0):
    """
    Complex check decorator
    """

    def decorator(f):
        @wraps(f)
        def w(*args, **kwargs):
            return f(*args, **kwargs)

        # add attributes to f
        w.is_check = True
        w.check_type = check_type
        w.order = order
        try:
            w.check_desc = f.__doc__.lstrip().rstrip()
        except AttributeError:
            w.check_desc = ""
        w.name = w.__name__
        return w

    return decorator


class CheckList(ABC):
    """
    A named sequence of checks over one input. Subclasses mark methods with
    ``complex_check``; calling the instance runs them in ``order`` and logs
    every result.
    """

    def __init__(self, logger: LOGGER = LOGGER.SILENT, **kwargs):
        self.name = self.__class__.__name__
        self._checks = self.get_checks()
        self.check_results = []
        self.logger = logger
        self.logger_service = logger_factory(logger)(**kwargs)

        return

    def get_checks(self):
        """
        Helper to extract methods decorated with complex_check
        """

        nodes = []
        for _ in self.__dir__():
            if _.startswith("__") or not hasattr(self, _):
                continue
            func = getattr(self, _)
            if hasattr(func, "is_check"):
                nodes.append(func)

        return sorted(nodes, key=lambda _: (_.order, _.name))

    def display(self, console=None):
        from rich.console import Console
        from rich.table import Table
        # build the rich table
        table = Table(title=self.name)
        table.add_column("Type", justify="right", style="cyan", no_wrap=True)
        table.add_column("Description ", style="magenta", no_wrap=False)
        table.add_column("Result", justify="right", style="green")
        for result in self.check_results:
            # rich needs strings to display
            if isinstance(result['result'], (dict, list)):
                printable_result = json.dumps(result['result'], indent=4)
            else:
                printable_result = str(result['result'])
            table.add_row(
                result['name'],
                result['description'],
                printable_result
                )
        console = console or Console(stderr=True)
        console.print(table)

        return

    def __call__(self, *args, **kwargs):
        self.check_results = []
        for check in self._checks:
            check_result = check(*args, **kwargs)
            self.check_results.append(
                {
                    "name": check.check_type,
                    "description": check.check_desc,
                    "result": check_result,
                }
            )
            self.logger_service.write(check.check_type, check_result)

        return self.check_results
