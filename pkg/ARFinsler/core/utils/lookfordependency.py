"""
Optional packages. Reports and logs work without them, only plainer.
"""
import importlib
import importlib.util
import typing as t
from types import ModuleType


class FakePandas:
    "Tabular output requires pandas, but it is not available"

    class DataFrame:
        id = "fake"

    class Series:
        id = "fake"


class FakeRich:
    "Pretty printing requires rich, but it is not available"


def check_dependencies(module_names: t.Iterable[str]) -> bool:
    return all(importlib.util.find_spec(name) is not None for name in module_names)


def _optional(name: str, submodules: t.Sequence[str], fallback) -> t.Tuple[bool, t.Any]:
    if not check_dependencies([name]):
        return False, fallback
    try:
        module = importlib.import_module(name)
        for sub in submodules:
            importlib.import_module(f"{name}.{sub}")
    except ImportError:
        return False, fallback
    return True, module


def rich_if_available() -> t.Tuple[bool, t.Union[ModuleType, t.Type[FakeRich]]]:
    "rich colors the console log and pretty prints reports"
    return _optional("rich", ("console", "table", "logging"), FakeRich)


def pandas_if_available() -> t.Tuple[bool, t.Union[ModuleType, t.Type[FakePandas]]]:
    "pandas turns notes and claim tables into Series/DataFrame"
    return _optional("pandas", (), FakePandas)
