"""Searches over sequential update modes: universality, coverings, isolation, classification"""
from automata.configuration import InputError


class SearchBoundsError(InputError):
    """Exception raised when a search is asked for a ring larger than it can enumerate"""


def check_search_bound(n: int, limit: int, search: str) -> None:
    """Raise SearchBoundsError naming the parameter when n exceeds limit"""
    if n > limit:
        raise SearchBoundsError(f"n = {n} exceeds the {search} limit n <= {limit}")
