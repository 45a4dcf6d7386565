# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Shared helpers: logging and dotted-path resolution
"""

import importlib
import logging
from typing import Any, Optional

ROOT_LOGGER = "ia_nilpotent"


def logger(module: Optional[str] = None) -> logging.Logger:
    """
    Get the library logger, optionally for a sub-module

    Args:
        module: Short module name (e.g. "pcgroup")

    Returns:
        logging.Logger under the ia_nilpotent namespace
    """
    return logging.getLogger(f"{ROOT_LOGGER}.{module}" if module else ROOT_LOGGER)


def log_error(message: str, title: str) -> None:
    """Log an error message under a short title"""
    logger().error(f"{title}: {message}")


def get_attr(method_string: str) -> Any:
    """
    Resolve a dotted path such as "ia_nilpotent.groups.corpus.default_corpus"

    Args:
        method_string: Module path plus attribute name

    Returns:
        The attribute object
    """
    module_name, _, attr = method_string.rpartition(".")
    if not module_name:
        raise ValueError(f"Not a dotted path: {method_string!r}")
    return getattr(importlib.import_module(module_name), attr)


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Attach a stderr handler to the library logger (CLI only)"""
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    root = logging.getLogger(ROOT_LOGGER)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
    root.setLevel(level)
